#include "hstarcat/endo_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "hstarcat/boolmat.hpp"

namespace hstarcat {

bool Subsemialgebra::contains(const Mor& f) const {
  return std::binary_search(elements.begin(), elements.end(), f, MorLess{});
}

bool Subsemialgebra::subset_of(const Subsemialgebra& other) const {
  return std::includes(other.elements.begin(), other.elements.end(),
                       elements.begin(), elements.end(), MorLess{});
}

bool Subsemialgebra::same_elements(const Subsemialgebra& other) const {
  return elements == other.elements;
}

bool all_commute(const std::vector<Mor>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (compose(elements[i], elements[j]) != compose(elements[j], elements[i]))
        return false;
  return true;
}

bool LemmaReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.pass; });
}

namespace {

void require_endos_on(const std::vector<Mor>& fs, Obj x,
                      const SemiringPtr& sr) {
  for (const Mor& f : fs) {
    if (f.dom() != x || f.cod() != x)
      throw input_error("expected endomorphisms on a common object");
    if (!f.sr()->same(*sr)) throw input_error("mixed semirings");
  }
}

std::vector<Mor> scalar_units(const SemiringPtr& sr) {
  std::vector<Mor> out;
  for (std::size_t i = 0; i < sr->size(); ++i)
    out.push_back(Mor::scalar(sr, sr->element(i)));
  return out;
}

}  // namespace

Subsemialgebra closure(const std::vector<Mor>& gens, bool unital,
                       std::size_t cap) {
  if (gens.empty() && !unital)
    throw input_error("closure of an empty non-unital generating set needs "
                      "an explicit carrier; pass the zero morphism");
  const SemiringPtr sr = gens.front().sr();
  const Obj x = gens.front().dom();
  require_endos_on(gens, x, sr);
  if (!sr->enumerable())
    throw unsupported_error("closure needs an enumerable scalar semiring");

  std::set<Mor, MorLess> seen;
  std::vector<Mor> work;
  auto push = [&](Mor m) {
    if (seen.insert(m).second) {
      if (seen.size() > cap)
        throw budget_error("closure exceeded cap", seen.size());
      work.push_back(std::move(m));
    }
  };
  push(Mor::zero(sr, x, x));
  if (unital) push(Mor::identity(sr, x));
  for (const Mor& g : gens) push(g);

  const std::vector<Mor> scalars = scalar_units(sr);
  std::size_t done = 0;
  while (done < work.size()) {
    const Mor f = work[done++];
    push(dagger(f));
    for (const Mor& s : scalars) push(scalar_mul(s, f));
    // pair ops against everything found so far, including f itself
    for (std::size_t i = 0; i < work.size(); ++i) {
      const Mor g = work[i];  // copy: push below may reallocate work
      push(add(f, g));
      push(compose(f, g));
      push(compose(g, f));
    }
  }

  Subsemialgebra out;
  out.sr = sr;
  out.carrier = x;
  out.elements.assign(seen.begin(), seen.end());
  out.unital = unital;
  out.generators = gens;
  if (out.elements.size() <= 512) out.commutative = all_commute(out.elements);
  return out;
}

TracedClosure closure_traced(const SemiringPtr& sr, Obj carrier,
                             const std::vector<Mor>& gens, bool unital,
                             std::size_t cap) {
  require_endos_on(gens, carrier, sr);
  if (!sr->enumerable())
    throw unsupported_error("closure needs an enumerable scalar semiring");

  TracedClosure out;
  std::map<Mor, std::size_t, MorLess> index;
  auto push = [&](Mor m, Derivation d) {
    if (index.emplace(m, out.elements.size()).second) {
      if (out.elements.size() + 1 > cap)
        throw budget_error("closure exceeded cap", out.elements.size());
      out.elements.push_back(std::move(m));
      out.how.push_back(std::move(d));
    }
  };
  push(Mor::zero(sr, carrier, carrier), {Derivation::Op::zero});
  if (unital) push(Mor::identity(sr, carrier), {Derivation::Op::ident});
  for (const Mor& g : gens) push(g, {Derivation::Op::gen});

  const std::vector<Mor> scalars = scalar_units(sr);
  std::size_t done = 0;
  while (done < out.elements.size()) {
    const std::size_t fi = done++;
    const Mor f = out.elements[fi];
    push(dagger(f), {Derivation::Op::dag, fi});
    for (std::size_t si = 0; si < scalars.size(); ++si) {
      Derivation d{Derivation::Op::smul, fi};
      d.s = sr->element(si);
      push(scalar_mul(scalars[si], f), std::move(d));
    }
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      const Mor g = out.elements[i];
      push(add(f, g), {Derivation::Op::add, fi, i});
      push(compose(f, g), {Derivation::Op::comp, fi, i});
      push(compose(g, f), {Derivation::Op::comp, i, fi});
    }
  }
  return out;
}

Subsemialgebra commutant(const std::vector<Mor>& b, Obj x,
                         const SemiringPtr& sr, std::size_t budget) {
  require_endos_on(b, x, sr);
  if (!sr->enumerable())
    throw unsupported_error("commutant needs an enumerable semiring");

  const std::size_t cells = x.dim * x.dim;
  const std::size_t k = sr->size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    if (total > budget / std::max<std::size_t>(k, 1))
      throw budget_error("commutant candidate count exceeds budget");
    total *= k;
  }
  if (total > budget)
    throw budget_error("commutant candidate count exceeds budget");

  std::vector<Mor> found;

  if (sr->kind() == SemiringKind::boolean && x.dim <= 8 && cells < 64) {
    const unsigned n = static_cast<unsigned>(x.dim);
    std::vector<BoolMat> gens;
    gens.reserve(b.size());
    for (const Mor& g : b) gens.push_back(boolmat_from_mor(g));
    const std::uint64_t end = std::uint64_t{1} << cells;
    const unsigned nthreads =
        end > (1u << 16) ? std::max(1u, std::thread::hardware_concurrency())
                         : 1u;
    std::vector<std::vector<std::uint64_t>> hits(nthreads);
    auto scan = [&](unsigned t) {
      const std::uint64_t lo = end / nthreads * t;
      const std::uint64_t hi =
          t + 1 == nthreads ? end : end / nthreads * (t + 1);
      for (std::uint64_t c = lo; c < hi; ++c) {
        const BoolMat m = boolmat_from_bits(n, c);
        bool ok = true;
        for (const BoolMat& g : gens)
          if (!bool_commutes(m, g)) {
            ok = false;
            break;
          }
        if (ok) hits[t].push_back(c);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(scan, t);
    scan(0);
    for (auto& th : pool) th.join();
    for (const auto& chunk : hits)
      for (std::uint64_t c : chunk)
        found.push_back(mor_from_boolmat(sr, boolmat_from_bits(n, c)));
  } else {
    for (Mor& f : all_homs(sr, x, x, budget)) {
      bool ok = true;
      for (const Mor& g : b)
        if (compose(f, g) != compose(g, f)) {
          ok = false;
          break;
        }
      if (ok) found.push_back(std::move(f));
    }
  }

  std::sort(found.begin(), found.end(), MorLess{});
  Subsemialgebra out;
  out.sr = sr;
  out.carrier = x;
  out.elements = std::move(found);
  out.unital = true;
  out.generators = b;
  if (out.elements.size() <= 512) out.commutative = all_commute(out.elements);
  return out;
}

bool is_von_neumann(const Subsemialgebra& a, std::size_t budget) {
  Subsemialgebra first = commutant(a.elements, a.carrier, a.sr, budget);
  Subsemialgebra second = commutant(first.elements, a.carrier, a.sr, budget);
  return a.same_elements(second);
}

bool is_maximal(const Subsemialgebra& a, std::size_t budget) {
  return a.same_elements(commutant(a.elements, a.carrier, a.sr, budget));
}

LemmaReport check_commutant_lemma(const std::vector<Mor>& a,
                                  const std::vector<Mor>& b, Obj x,
                                  const SemiringPtr& sr, std::size_t budget) {
  LemmaReport report;
  Subsemialgebra bprime = commutant(b, x, sr, budget);
  Subsemialgebra aprime = commutant(a, x, sr, budget);
  auto record = [&](const std::string& name, bool pass, std::string w = {}) {
    report.checks.push_back({name, pass, std::move(w)});
  };

  // 1. B' is a unital subsemialgebra.
  {
    if (bprime.elements.size() * bprime.elements.size() > budget)
      throw budget_error("commutant too large for closure verification");
    std::string w;
    const Mor zero = Mor::zero(sr, x, x);
    const Mor id = Mor::identity(sr, x);
    if (!bprime.contains(zero)) w = "missing zero";
    if (w.empty() && !bprime.contains(id)) w = "missing identity";
    for (std::size_t s = 0; w.empty() && s < sr->size(); ++s)
      for (const Mor& f : bprime.elements) {
        if (!bprime.contains(scalar_mul(Mor::scalar(sr, sr->element(s)), f))) {
          w = "not closed under scalar action";
          break;
        }
      }
    for (std::size_t i = 0; w.empty() && i < bprime.elements.size(); ++i)
      for (std::size_t j = 0; j < bprime.elements.size(); ++j) {
        if (!bprime.contains(add(bprime.elements[i], bprime.elements[j])) ||
            !bprime.contains(
                compose(bprime.elements[i], bprime.elements[j]))) {
          w = "not closed under add/compose at (" + std::to_string(i) + "," +
              std::to_string(j) + ")";
          break;
        }
      }
    record("commutant-unital-subsemialgebra", w.empty(), w);
  }

  // 2. B closed under dagger implies B' closed under dagger.
  {
    std::set<Mor, MorLess> bset(b.begin(), b.end());
    bool b_dag_closed = true;
    for (const Mor& g : b)
      if (!bset.count(dagger(g))) {
        b_dag_closed = false;
        break;
      }
    std::string w;
    if (b_dag_closed)
      for (const Mor& f : bprime.elements)
        if (!bprime.contains(dagger(f))) {
          w = "dagger of commutant element escapes: " + f.str();
          break;
        }
    record("dagger-closure-transfer", w.empty(), w);
  }

  // 3. A subset of B implies B' subset of A'.
  {
    std::set<Mor, MorLess> bset(b.begin(), b.end());
    bool a_in_b = std::all_of(a.begin(), a.end(),
                              [&](const Mor& f) { return bset.count(f) > 0; });
    std::string w;
    if (a_in_b && !bprime.subset_of(aprime)) w = "antitonicity violated";
    record("commutant-antitone", w.empty(), w);
  }

  // 4. All of B commutes iff B is contained in B'.
  {
    const bool commute = all_commute(b);
    bool contained = std::all_of(b.begin(), b.end(), [&](const Mor& g) {
      return bprime.contains(g);
    });
    record("commuting-iff-self-contained", commute == contained,
           commute == contained ? "" : "equivalence violated");
  }
  return report;
}

std::optional<SubunitalIdempotent> is_subunital_idempotent(
    const Mor& p, const Subsemialgebra& a) {
  if (!a.contains(p)) throw input_error("p is not an element of the algebra");
  if (compose(p, p) != p) return std::nullopt;
  const Mor zero = Mor::zero(a.sr, a.carrier, a.carrier);
  const Mor id = Mor::identity(a.sr, a.carrier);
  for (const Mor& q : a.elements) {
    if (compose(q, q) != q) continue;
    if (compose(p, q) != zero || compose(q, p) != zero) continue;
    if (add(p, q) == id) return SubunitalIdempotent{p, q};
  }
  return std::nullopt;
}

bool is_primitive(const Mor& p, const Subsemialgebra& a) {
  if (!is_subunital_idempotent(p, a))
    throw precondition_error("p is not a subunital idempotent of A");
  const Mor zero = Mor::zero(a.sr, a.carrier, a.carrier);
  for (const Mor& s : a.elements) {
    if (s.is_zero() || compose(s, s) != s) continue;
    if (!is_subunital_idempotent(s, a)) continue;
    for (const Mor& t : a.elements) {
      if (t.is_zero() || compose(t, t) != t) continue;
      if (compose(s, t) != zero || compose(t, s) != zero) continue;
      if (add(s, t) != p) continue;
      if (is_subunital_idempotent(t, a)) return false;
    }
  }
  return true;
}

}  // namespace hstarcat
