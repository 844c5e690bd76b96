#ifndef HSTARCAT_ENDO_ALGEBRA_HPP
#define HSTARCAT_ENDO_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "hstarcat/matcat.hpp"

namespace hstarcat {

/// Default enumeration budget: Boolean dim 4 commutants fit; anything
/// larger must be requested explicitly.
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 20;

/// An explicit finite set of endomorphisms on one object, closed under the
/// semialgebra operations. Elements are kept in canonical order (MorLess)
/// so set comparisons and reports are deterministic.
struct Subsemialgebra {
  SemiringPtr sr;
  Obj carrier;
  std::vector<Mor> elements;
  bool unital = false;
  std::optional<bool> commutative;  // unset when too large to check cheaply
  std::vector<Mor> generators;

  bool contains(const Mor& f) const;
  bool subset_of(const Subsemialgebra& other) const;
  bool same_elements(const Subsemialgebra& other) const;
};

bool all_commute(const std::vector<Mor>& elements);

/// Least subsemialgebra containing gens (and the identity when unital),
/// by fixed-point iteration over add/compose/dagger/scalar_mul. Throws
/// budget_error with the partial size when the closure exceeds cap.
Subsemialgebra closure(const std::vector<Mor>& gens, bool unital,
                       std::size_t cap = kDefaultBudget);

/// How an element of a traced closure arises from earlier ones; used to
/// propagate character assignments from generators.
struct Derivation {
  enum class Op { gen, zero, ident, add, comp, dag, smul };
  Op op = Op::gen;
  std::size_t a = 0;
  std::size_t b = 0;
  Scalar s;
};

struct TracedClosure {
  std::vector<Mor> elements;  // discovery order
  std::vector<Derivation> how;
};

TracedClosure closure_traced(const SemiringPtr& sr, Obj carrier,
                             const std::vector<Mor>& gens, bool unital,
                             std::size_t cap = kDefaultBudget);

/// All endomorphisms of X commuting with every element of B, by exhaustive
/// enumeration of Hom(X,X). Returned unital; generators set to B.
Subsemialgebra commutant(const std::vector<Mor>& B, Obj x,
                         const SemiringPtr& sr,
                         std::size_t budget = kDefaultBudget);

bool is_von_neumann(const Subsemialgebra& a,
                    std::size_t budget = kDefaultBudget);
bool is_maximal(const Subsemialgebra& a, std::size_t budget = kDefaultBudget);

struct LemmaReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
};

/// Verifies the four standard commutant properties for the given sets:
/// B' unital subsemialgebra; dagger-closure transfer; antitonicity when
/// A is a subset of B; B commutes iff B is contained in B'.
LemmaReport check_commutant_lemma(const std::vector<Mor>& a,
                                  const std::vector<Mor>& b, Obj x,
                                  const SemiringPtr& sr,
                                  std::size_t budget = kDefaultBudget);

struct SubunitalIdempotent {
  Mor p;
  Mor complement_q;
};

/// If p is idempotent and A contains an orthogonal idempotent complement q
/// with p+q = id, returns the pair. Orthogonality is checked in both
/// orders.
std::optional<SubunitalIdempotent> is_subunital_idempotent(
    const Mor& p, const Subsemialgebra& a);

/// True when no pair of nonzero orthogonal subunital idempotents of A sums
/// to p. Exhaustive over A x A.
bool is_primitive(const Mor& p, const Subsemialgebra& a);

}  // namespace hstarcat

#endif
