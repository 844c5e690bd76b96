#include "hstarcat/hstar.hpp"

#include <algorithm>

namespace hstarcat {

DaggerAlgebra::DaggerAlgebra(SemiringPtr s, Obj obj, Mor m)
    : sr(std::move(s)), x(obj), mu(std::move(m)) {
  if (!mu.sr()->same(*sr)) throw input_error("algebra: mixed semirings");
  if (mu.cod() != x || mu.dom().dim != x.dim * x.dim)
    throw input_error("algebra: mu must have shape X(x)X -> X");
}

Mor right_mult(const DaggerAlgebra& alg, const Mor& point) {
  if (!point.is_point() || point.cod() != alg.x)
    throw input_error("right_mult: expected a point I -> X");
  return compose(alg.mu, tensor(point, Mor::identity(alg.sr, alg.x)));
}

std::vector<Mor> basis_right_mults(const DaggerAlgebra& alg) {
  std::vector<Mor> out;
  for (std::size_t i = 0; i < alg.x.dim; ++i) {
    std::vector<Scalar> e(alg.x.dim, alg.sr->zero());
    e[i] = alg.sr->one();
    out.push_back(right_mult(alg, Mor(alg.sr, alg.x, Obj{1}, std::move(e))));
  }
  return out;
}

namespace {

std::vector<Mor> candidate_points(const DaggerAlgebra& alg, std::size_t cap,
                                  const std::vector<Mor>* candidates) {
  if (candidates) return *candidates;
  if (!alg.sr->enumerable())
    throw input_error(
        "point search over a non-enumerable semiring needs explicit "
        "candidate witnesses");
  return all_points(alg.sr, alg.x, cap);
}

}  // namespace

AxiomReport check_axioms(const DaggerAlgebra& alg, std::size_t cap,
                         const std::vector<Mor>* candidates) {
  AxiomReport report;
  const SemiringPtr& sr = alg.sr;
  const Mor id = Mor::identity(sr, alg.x);

  {  // (A) mu . (mu (x) id) = mu . (id (x) mu)
    const Mor left = compose(alg.mu, tensor(alg.mu, id));
    const Mor right = compose(alg.mu, tensor(id, alg.mu));
    report.associative.pass = left == right;
    if (!report.associative.pass)
      report.associative.witness =
          "mu.(mu(x)id) = " + left.str() + " vs mu.(id(x)mu) = " + right.str();
  }
  {  // (C) mu . swap = mu
    const Mor swapped = compose(alg.mu, swap_mor(sr, alg.x, alg.x));
    report.commutative.pass = swapped == alg.mu;
    if (!report.commutative.pass)
      report.commutative.witness = "mu.swap = " + swapped.str();
  }
  {  // (S) mu . dagger(mu) = id
    const Mor comp = compose(alg.mu, dagger(alg.mu));
    report.special.pass = comp == id;
    if (!report.special.pass)
      report.special.witness = "mu.dagger(mu) = " + comp.str();
  }

  const std::vector<Mor> points = candidate_points(alg, cap, candidates);

  {  // (U) search for a unit point
    report.unital.pass = false;
    for (const Mor& u : points) {
      if (compose(alg.mu, tensor(u, id)) == id &&
          compose(alg.mu, tensor(id, u)) == id) {
        report.unital.pass = true;
        report.unit = u;
        break;
      }
    }
    if (!report.unital.pass) report.unital.witness = "no unit point found";
  }

  {  // (H) every basis right multiplication has an adjoint of the same form
    report.h.pass = true;
    report.h_partners.assign(alg.x.dim, std::nullopt);
    for (std::size_t i = 0; i < alg.x.dim; ++i) {
      std::vector<Scalar> e(alg.x.dim, sr->zero());
      e[i] = sr->one();
      const Mor target =
          dagger(right_mult(alg, Mor(sr, alg.x, Obj{1}, std::move(e))));
      for (const Mor& y : points)
        if (right_mult(alg, y) == target) {
          report.h_partners[i] = y;
          break;
        }
      if (!report.h_partners[i]) {
        report.h.pass = false;
        report.h.witness = "basis point " + std::to_string(i) +
                           " has no partner with R_y = dagger(R_e" +
                           std::to_string(i) + ")";
      }
    }
  }
  return report;
}

SetLikeFamily set_like_elements(const DaggerAlgebra& alg,
                                bool require_orthonormal, std::size_t cap) {
  if (!alg.sr->enumerable())
    throw unsupported_error("set-like search needs an enumerable semiring");
  const Mor delta = dagger(alg.mu);
  SetLikeFamily family;
  const std::vector<Mor> points = all_points(alg.sr, alg.x, cap);
  for (const Mor& a : points) {
    if (a.is_zero()) continue;  // the zero point is excluded
    if (compose(delta, a) == tensor(a, a)) family.elements.push_back(a);
  }
  std::sort(family.elements.begin(), family.elements.end(), MorLess{});

  // partner y with R_y = dagger(R_alpha); compare against entrywise star
  family.partners_match_star = true;
  for (const Mor& a : family.elements) {
    const Mor target = dagger(right_mult(alg, a));
    std::optional<Mor> partner;
    for (const Mor& y : points)
      if (right_mult(alg, y) == target) {
        partner = y;
        break;
      }
    if (!partner) {
      family.partners_match_star = false;
      family.partners.push_back(Mor::zero(alg.sr, alg.x, Obj{1}));
      continue;
    }
    std::vector<Scalar> starred(alg.x.dim);
    for (std::size_t i = 0; i < alg.x.dim; ++i)
      starred[i] = alg.sr->star(a.at(i, 0));
    if (*partner != Mor(alg.sr, alg.x, Obj{1}, std::move(starred)))
      family.partners_match_star = false;
    family.partners.push_back(std::move(*partner));
  }

  // orthonormality: dagger(b) . a = 0 for a != b, = 1 for a = b
  family.orthonormal = true;
  const Mor one = Mor::scalar(alg.sr, alg.sr->one());
  const Mor zero_scalar = Mor::scalar(alg.sr, alg.sr->zero());
  for (std::size_t i = 0; i < family.elements.size(); ++i)
    for (std::size_t j = 0; j < family.elements.size(); ++j) {
      const Mor s = compose(dagger(family.elements[j]), family.elements[i]);
      if (s != (i == j ? one : zero_scalar)) {
        family.orthonormal = false;
      }
    }
  if (require_orthonormal && !family.orthonormal)
    throw check_failure("set-like family is not orthonormal");
  return family;
}

bool is_covering(const std::vector<Mor>& points, Obj x, std::size_t cap) {
  if (points.empty()) return x.dim == 0;
  const SemiringPtr& sr = points.front().sr();
  for (const Mor& p : points)
    if (!p.is_point() || p.cod() != x)
      throw input_error("is_covering: expected points I -> X");
  if (sr->is_positive()) {
    // jointly zero-epi iff the supports cover every coordinate
    std::vector<bool> hit(x.dim, false);
    for (const Mor& p : points)
      for (std::size_t i = 0; i < x.dim; ++i)
        if (p.at(i, 0) != sr->zero()) hit[i] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }
  if (!sr->enumerable())
    throw unsupported_error("is_covering needs positivity or enumerability");
  // definitional: no nonzero copoint annihilates every point
  for (const Mor& row : all_homs(sr, Obj{1}, x, cap)) {
    if (row.is_zero()) continue;
    bool kills_all = true;
    for (const Mor& p : points)
      if (!compose(row, p).is_zero()) {
        kills_all = false;
        break;
      }
    if (kills_all) return false;
  }
  return true;
}

Subsemialgebra generated_vn(const DaggerAlgebra& alg, std::size_t budget) {
  return commutant(basis_right_mults(alg), alg.x, alg.sr, budget);
}

DaggerAlgebra make_rel_group_algebra(const std::vector<GroupTable>& groups) {
  for (const GroupTable& g : groups)
    if (auto w = group_axiom_failure(g))
      throw input_error("group table rejected: " + *w);
  std::size_t dim = 0;
  for (const GroupTable& g : groups) dim += g.order();
  SemiringPtr sr = SemiringDef::boolean();
  std::vector<Scalar> mu(dim * dim * dim, sr->zero());
  std::size_t offset = 0;
  for (const GroupTable& g : groups) {
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t k = offset + g.table[a][b];
        const std::size_t col = (offset + a) * dim + (offset + b);
        mu[k * dim * dim + col] = sr->one();
      }
    offset += n;
  }
  return DaggerAlgebra(sr, Obj{dim}, Mor(sr, Obj{dim}, Obj{dim * dim}, mu));
}

}  // namespace hstarcat
