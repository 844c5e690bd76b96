#include "hstarcat/spectrum.hpp"

#include <algorithm>
#include <map>

namespace hstarcat {

Scalar Character::at(const Mor& f) const {
  const auto& elems = algebra->elements;
  auto it = std::lower_bound(elems.begin(), elems.end(), f, MorLess{});
  if (it == elems.end() || *it != f)
    throw input_error("character evaluated outside its algebra");
  return values[it - elems.begin()];
}

std::string character_violation(const Character& rho) {
  const Subsemialgebra& a = *rho.algebra;
  const SemiringPtr& sr = a.sr;
  if (rho.values.size() != a.elements.size()) return "wrong value count";
  if (rho.at(Mor::zero(sr, a.carrier, a.carrier)) != sr->zero())
    return "zero not preserved";
  if (a.unital &&
      rho.at(Mor::identity(sr, a.carrier)) != sr->one())
    return "unit not preserved";
  for (const Mor& f : a.elements) {
    if (rho.at(dagger(f)) != sr->star(rho.at(f)))
      return "dagger not preserved";
    for (std::size_t s = 0; s < sr->size(); ++s) {
      const Scalar sv = sr->element(s);
      if (rho.at(scalar_mul(Mor::scalar(sr, sv), f)) !=
          sr->mul(sv, rho.at(f)))
        return "scalar action not preserved";
    }
    for (const Mor& g : a.elements) {
      if (rho.at(add(f, g)) != sr->add(rho.at(f), rho.at(g)))
        return "addition not preserved";
      if (rho.at(compose(g, f)) != sr->mul(rho.at(g), rho.at(f)))
        return "multiplication not preserved";
    }
  }
  return "";
}

namespace {

/// Greedy minimal generating subset of A (iteratively extend until the
/// closure reaches A).
std::vector<Mor> greedy_generators(const Subsemialgebra& a, std::size_t cap) {
  std::vector<Mor> gens;
  auto closed_elements = [&]() {
    if (gens.empty() && !a.unital)
      return std::vector<Mor>{Mor::zero(a.sr, a.carrier, a.carrier)};
    if (gens.empty())
      return closure({Mor::identity(a.sr, a.carrier)}, true, cap).elements;
    return closure(gens, a.unital, cap).elements;
  };
  std::vector<Mor> closed = closed_elements();
  while (closed != a.elements) {
    const Mor* missing = nullptr;
    for (const Mor& f : a.elements)
      if (!std::binary_search(closed.begin(), closed.end(), f, MorLess{})) {
        missing = &f;
        break;
      }
    if (!missing)
      throw input_error("algebra is not closed under its own operations");
    gens.push_back(*missing);
    closed = closed_elements();
  }
  return gens;
}

}  // namespace

std::vector<Character> characters(const Subsemialgebra& a, std::size_t cap) {
  if (!a.sr->enumerable())
    throw unsupported_error("character search needs an enumerable semiring");
  const std::vector<Mor> gens = greedy_generators(a, cap);
  const TracedClosure traced =
      closure_traced(a.sr, a.carrier, gens, a.unital, cap);

  const std::size_t k = a.sr->size();
  std::size_t assignments = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (assignments > cap / std::max<std::size_t>(k, 1))
      throw budget_error("character assignment space exceeds cap");
    assignments *= k;
  }

  // positions of generators in discovery order
  std::vector<std::size_t> gen_pos;
  for (std::size_t i = 0; i < traced.elements.size(); ++i)
    if (traced.how[i].op == Derivation::Op::gen) gen_pos.push_back(i);

  std::vector<Character> out;
  std::vector<std::size_t> odo(gens.size(), 0);
  for (std::size_t count = 0; count < assignments; ++count) {
    // propagate through the derivation DAG
    std::vector<Scalar> v(traced.elements.size());
    std::size_t next_gen = 0;
    bool ok = true;
    for (std::size_t i = 0; i < traced.elements.size(); ++i) {
      const Derivation& d = traced.how[i];
      switch (d.op) {
        case Derivation::Op::gen:
          v[i] = a.sr->element(odo[next_gen++]);
          break;
        case Derivation::Op::zero:
          v[i] = a.sr->zero();
          break;
        case Derivation::Op::ident:
          v[i] = a.sr->one();
          break;
        case Derivation::Op::add:
          v[i] = a.sr->add(v[d.a], v[d.b]);
          break;
        case Derivation::Op::comp:
          v[i] = a.sr->mul(v[d.a], v[d.b]);
          break;
        case Derivation::Op::dag:
          v[i] = a.sr->star(v[d.a]);
          break;
        case Derivation::Op::smul:
          v[i] = a.sr->mul(d.s, v[d.a]);
          break;
      }
    }
    (void)ok;
    // reindex into canonical element order
    std::map<Mor, Scalar, MorLess> lookup;
    for (std::size_t i = 0; i < traced.elements.size(); ++i)
      lookup.emplace(traced.elements[i], v[i]);
    Character rho;
    rho.algebra = &a;
    rho.values.reserve(a.elements.size());
    bool covered = true;
    for (const Mor& f : a.elements) {
      auto it = lookup.find(f);
      if (it == lookup.end()) {
        covered = false;
        break;
      }
      rho.values.push_back(it->second);
    }
    if (covered && character_violation(rho).empty()) out.push_back(rho);

    std::size_t pos = 0;
    for (; pos < odo.size(); ++pos) {
      if (++odo[pos] < k) break;
      odo[pos] = 0;
    }
  }
  std::sort(out.begin(), out.end(), [](const Character& x, const Character& y) {
    return x.values < y.values;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Character& x, const Character& y) {
                          return x.values == y.values;
                        }),
            out.end());
  return out;
}

Character restrict_character(const Character& rho, const Subsemialgebra& b) {
  if (!b.subset_of(*rho.algebra))
    throw input_error("restriction target is not a subalgebra");
  Character out;
  out.algebra = &b;
  out.values.reserve(b.elements.size());
  for (const Mor& f : b.elements) out.values.push_back(rho.at(f));
  return out;
}

Character rho_from_setlike(const DaggerAlgebra& alg, const Mor& alpha,
                           const Subsemialgebra& a) {
  if (!alpha.is_point() || alpha.cod() != alg.x)
    throw input_error("rho_from_setlike: alpha must be a point I -> X");
  Character rho;
  rho.algebra = &a;
  rho.values.reserve(a.elements.size());
  const Mor co = dagger(alpha);
  for (const Mor& f : a.elements)
    rho.values.push_back(compose(co, compose(f, alpha)).at(0, 0));
  const std::string violation = character_violation(rho);
  if (!violation.empty())
    throw check_failure("set-like evaluation is not a character: " +
                        violation);
  return rho;
}

std::vector<std::vector<Character>> global_sections(
    const std::vector<Subsemialgebra>& contexts, std::size_t cap) {
  std::vector<std::vector<Character>> per_context;
  per_context.reserve(contexts.size());
  for (const Subsemialgebra& a : contexts)
    per_context.push_back(characters(a, cap));

  // inclusion pairs (i, j): context i inside context j
  std::vector<std::pair<std::size_t, std::size_t>> inclusions;
  for (std::size_t i = 0; i < contexts.size(); ++i)
    for (std::size_t j = 0; j < contexts.size(); ++j)
      if (i != j && contexts[i].subset_of(contexts[j]))
        inclusions.emplace_back(i, j);

  std::vector<std::vector<Character>> sections;
  std::vector<std::size_t> pick(contexts.size(), 0);
  std::size_t explored = 0;
  auto consistent_prefix = [&](std::size_t upto) {
    for (const auto& [i, j] : inclusions) {
      if (i > upto || j > upto) continue;
      const Character restricted =
          restrict_character(per_context[j][pick[j]], contexts[i]);
      if (restricted.values != per_context[i][pick[i]].values) return false;
    }
    return true;
  };
  // depth-first over the product of character sets
  std::size_t depth = 0;
  if (contexts.empty()) return {std::vector<Character>{}};
  for (;;) {
    if (++explored > cap)
      throw budget_error("global section search exceeds cap");
    if (pick[depth] >= per_context[depth].size()) {
      if (depth == 0) break;
      pick[depth] = 0;
      --depth;
      ++pick[depth];
      continue;
    }
    if (!consistent_prefix(depth)) {
      ++pick[depth];
      continue;
    }
    if (depth + 1 == contexts.size()) {
      std::vector<Character> section;
      for (std::size_t i = 0; i < contexts.size(); ++i)
        section.push_back(per_context[i][pick[i]]);
      sections.push_back(std::move(section));
      ++pick[depth];
    } else {
      ++depth;
    }
  }
  return sections;
}

}  // namespace hstarcat
