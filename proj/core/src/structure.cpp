#include "hstarcat/structure.hpp"

#include <algorithm>
#include <set>

namespace hstarcat {

std::vector<IdempotentTriple> primitive_idempotents(const DaggerAlgebra& alg,
                                                    std::size_t cap,
                                                    std::size_t vn_budget) {
  if (!alg.sr->is_positive())
    throw precondition_error("primitive idempotents need a positive semiring");
  const AxiomReport axioms = check_axioms(alg, cap);
  if (!axioms.hstar())
    throw precondition_error("not an H*-algebra",
                             !axioms.associative.pass   ? "axiom A"
                             : !axioms.commutative.pass ? "axiom C"
                             : !axioms.special.pass     ? "axiom S"
                                                        : "axiom H");
  const SetLikeFamily family = set_like_elements(alg, /*require=*/false, cap);
  if (!family.orthonormal)
    throw precondition_error("set-like family is not orthonormal");
  std::vector<Mor> setlikes = family.elements;
  if (!is_covering(setlikes, alg.x, cap))
    throw precondition_error("set-like family does not cover the carrier");

  const std::vector<Mor> gens = basis_right_mults(alg);
  std::vector<IdempotentTriple> out;
  for (const Mor& alpha : setlikes) {
    const NormalForm nf = normal_decompose(right_mult(alg, alpha));
    Mor e = compose(nf.k, dagger(nf.k));
    // membership in the generated vN semialgebra: commutes with every
    // basis right multiplication
    for (const Mor& g : gens)
      if (compose(e, g) != compose(g, e))
        throw check_failure("idempotent escapes the generated semialgebra",
                            e.str());
    out.push_back({alpha, std::move(e), nf.k});
  }

  // pairwise orthogonality matches set-like orthogonality (here the family
  // is orthonormal, so all pairs must be orthogonal)
  const Mor zero = Mor::zero(alg.sr, alg.x, alg.x);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (compose(out[i].e, out[j].e) != zero ||
          compose(out[j].e, out[i].e) != zero)
        throw check_failure("idempotents of distinct set-likes not orthogonal",
                            out[i].e.str() + " vs " + out[j].e.str());

  // explicit primitivity search inside the generated algebra, when it is
  // small enough to materialize
  bool can_enumerate = true;
  try {
    const std::size_t cells = alg.x.dim * alg.x.dim;
    std::size_t total = 1;
    const std::size_t k = alg.sr->size();
    for (std::size_t i = 0; i < cells && can_enumerate; ++i) {
      if (total > vn_budget / k) can_enumerate = false;
      total *= k;
    }
  } catch (const unsupported_error&) {
    can_enumerate = false;
  }
  if (can_enumerate) {
    const Subsemialgebra vn = generated_vn(alg, vn_budget);
    for (const IdempotentTriple& t : out) {
      if (!vn.contains(t.e))
        throw check_failure("idempotent missing from materialized commutant",
                            t.e.str());
      if (!is_primitive(t.e, vn))
        throw check_failure("idempotent is not primitive", t.e.str());
    }
  }
  return out;
}

Mor distribute_iso(const SemiringPtr& sr, Obj left,
                   const std::vector<std::size_t>& parts) {
  std::size_t total = 0;
  for (std::size_t d : parts) total += d;
  const std::size_t n = left.dim * total;
  std::vector<Scalar> e(n * n, sr->zero());
  std::size_t in_offset = 0;   // start of part i inside the biproduct
  std::size_t out_offset = 0;  // start of block X (x) Y_i in the target
  for (std::size_t part : parts) {
    for (std::size_t a = 0; a < left.dim; ++a)
      for (std::size_t b = 0; b < part; ++b) {
        const std::size_t src = a * total + in_offset + b;
        const std::size_t dst = out_offset + a * part + b;
        e[dst * n + src] = sr->one();
      }
    in_offset += part;
    out_offset += left.dim * part;
  }
  return Mor(sr, Obj{n}, Obj{n}, std::move(e));
}

Decomposition decompose(const DaggerAlgebra& alg, std::size_t cap,
                        std::size_t vn_budget) {
  std::vector<IdempotentTriple> triples =
      primitive_idempotents(alg, cap, vn_budget);

  // covering family must sum to the identity
  Mor sum = Mor::zero(alg.sr, alg.x, alg.x);
  for (const IdempotentTriple& t : triples) sum = add(sum, t.e);
  if (sum != Mor::identity(alg.sr, alg.x))
    throw precondition_error("idempotents do not sum to the identity",
                             sum.str());

  Decomposition dec{alg, {}};
  for (IdempotentTriple& t : triples) {
    const Obj xi = t.k.dom();
    Mor mu_i = compose(dagger(t.k), compose(alg.mu, tensor(t.k, t.k)));
    dec.components.push_back(
        {std::move(t.alpha), std::move(t.e), std::move(t.k), xi,
         std::move(mu_i)});
  }

  // cross terms vanish
  for (std::size_t i = 0; i < dec.components.size(); ++i)
    for (std::size_t j = 0; j < dec.components.size(); ++j) {
      if (i == j) continue;
      const Mor cross = compose(
          alg.mu, tensor(dec.components[i].k, dec.components[j].k));
      if (!cross.is_zero())
        throw check_failure("cross term does not vanish",
                            "components " + std::to_string(i) + "," +
                                std::to_string(j) + ": " + cross.str());
    }

  // reconstruction: mu = sum_i k_i . mu_i . dagger(k_i (x) k_i)
  Mor rebuilt = Mor::zero(alg.sr, alg.x, Obj{alg.x.dim * alg.x.dim});
  for (const Component& c : dec.components)
    rebuilt = add(rebuilt,
                  compose(c.k, compose(c.mu_i, dagger(tensor(c.k, c.k)))));
  if (rebuilt != alg.mu)
    throw check_failure("reconstruction does not recover mu", rebuilt.str());

  // each component is an H*-algebra with exactly one set-like element
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const Component& c = dec.components[i];
    DaggerAlgebra sub(alg.sr, c.x_i, c.mu_i);
    const AxiomReport rep = check_axioms(sub, cap);
    if (!rep.hstar())
      throw check_failure("component is not an H*-algebra",
                          "component " + std::to_string(i));
    const SetLikeFamily fam = set_like_elements(sub, false, cap);
    if (fam.dimension() != 1)
      throw check_failure("component is not indecomposable",
                          "component " + std::to_string(i) + " has " +
                              std::to_string(fam.dimension()) +
                              " set-like elements");
  }
  return dec;
}

std::vector<GroupTable> rel_extract_groups(const Decomposition& dec) {
  if (dec.algebra.sr->kind() != SemiringKind::boolean)
    throw unsupported_error("group extraction is defined over Rel (boolean)");
  std::vector<GroupTable> out;
  for (std::size_t ci = 0; ci < dec.components.size(); ++ci) {
    const Component& c = dec.components[ci];
    const std::size_t n = c.x_i.dim;
    GroupTable g;
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t hits = 0, value = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (c.mu_i.at(k, a * n + b) != 0) {
            ++hits;
            value = k;
          }
        if (hits != 1)
          throw check_failure(
              "component multiplication is not single-valued and total",
              "component " + std::to_string(ci) + " at (" +
                  std::to_string(a) + "," + std::to_string(b) + ")");
        g.table[a][b] = value;
      }
    if (auto w = group_axiom_failure(g))
      throw check_failure("component is not an abelian group",
                          "component " + std::to_string(ci) + ": " + *w);
    out.push_back(std::move(g));
  }
  return out;
}

SubdirectReport subdirect_report(const DaggerAlgebra& alg,
                                 std::size_t budget) {
  const Subsemialgebra vn = generated_vn(alg, budget);
  const std::vector<IdempotentTriple> triples =
      primitive_idempotents(alg, budget, budget);

  SubdirectReport report;
  std::vector<std::vector<Mor>> corners(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    std::set<Mor, MorLess> corner;
    for (const Mor& x : vn.elements)
      corner.insert(compose(triples[i].e, compose(x, triples[i].e)));
    corners[i].assign(corner.begin(), corner.end());
    report.block_sizes.push_back(corners[i].size());
  }

  // injectivity of x -> (e_i x e_i)_i
  report.injective = true;
  for (std::size_t a = 0; a < vn.elements.size() && report.injective; ++a)
    for (std::size_t b = a + 1; b < vn.elements.size(); ++b) {
      bool same = true;
      for (const IdempotentTriple& t : triples)
        if (compose(t.e, compose(vn.elements[a], t.e)) !=
            compose(t.e, compose(vn.elements[b], t.e))) {
          same = false;
          break;
        }
      if (same) {
        report.injective = false;
        break;
      }
    }

  // each coordinate map is surjective onto its corner by construction
  report.surjective = true;
  return report;
}

}  // namespace hstarcat
