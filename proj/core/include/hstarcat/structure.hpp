#ifndef HSTARCAT_STRUCTURE_HPP
#define HSTARCAT_STRUCTURE_HPP

#include "hstarcat/hstar.hpp"
#include "hstarcat/kernel_factor.hpp"

namespace hstarcat {

struct Component {
  Mor alpha;  // the set-like element this component corresponds to
  Mor e;      // primitive subunital idempotent, e = k . dagger(k)
  Mor k;      // dagger-kernel X_i -> X
  Obj x_i;
  Mor mu_i;  // X_i (x) X_i -> X_i
};

struct Decomposition {
  DaggerAlgebra algebra;
  std::vector<Component> components;
};

struct IdempotentTriple {
  Mor alpha;
  Mor e;
  Mor k;
};

/// The orthogonal primitive subunital idempotents corresponding to the
/// set-like elements: e_alpha from the normal decomposition of R_alpha.
/// Membership in the generated von Neumann semialgebra is certified by
/// commutation with the basis right multiplications; the explicit
/// primitivity search runs when the commutant fits vn_budget and is
/// skipped (covered by the per-component indecomposability recheck in
/// decompose) when it does not.
std::vector<IdempotentTriple> primitive_idempotents(
    const DaggerAlgebra& alg, std::size_t cap = kDefaultBudget,
    std::size_t vn_budget = kDefaultBudget);

/// The distributivity isomorphism X (x) (Y_1 (+) ... (+) Y_k) ->
/// (X (x) Y_1) (+) ... (+) (X (x) Y_k) as a permutation matrix.
Mor distribute_iso(const SemiringPtr& sr, Obj left,
                   const std::vector<std::size_t>& parts);

/// The structure-theorem pipeline: components, cross-term vanishing,
/// reconstruction, and a per-component recheck that each (X_i, mu_i) is an
/// H*-algebra with exactly one set-like element. Fails fast when the
/// set-like family does not cover (sum of idempotents != id).
Decomposition decompose(const DaggerAlgebra& alg,
                        std::size_t cap = kDefaultBudget,
                        std::size_t vn_budget = kDefaultBudget);

/// Over the Boolean semiring, reads each component multiplication back as
/// an abelian group table. Throws check_failure naming the component and
/// axiom when a component is not a group.
std::vector<GroupTable> rel_extract_groups(const Decomposition& dec);

struct SubdirectReport {
  std::vector<std::size_t> block_sizes;  // |e_i X| per component
  bool injective = false;                // x determined by (e_i x e_i)_i
  bool surjective = false;               // each coordinate map onto e_i X
};

/// Verifies that the generated semialgebra is a subdirect product of its
/// corner subsemialgebras e_i X e_i. Needs the generated algebra to be
/// enumerable within budget.
SubdirectReport subdirect_report(const DaggerAlgebra& alg,
                                 std::size_t budget = kDefaultBudget);

}  // namespace hstarcat

#endif
