#ifndef HSTARCAT_KERNEL_FACTOR_HPP
#define HSTARCAT_KERNEL_FACTOR_HPP

#include "hstarcat/matcat.hpp"

namespace hstarcat {

/// f = m . e with m a dagger-kernel (coordinate inclusion) and e zero-epi.
struct KernelFactorization {
  Mor f;
  Mor e;  // zero-epi part, X -> Z
  Mor m;  // dagger-kernel part, Z -> Y
};

/// Normal endomorphism in block form f = k . f1 . dagger(k).
struct NormalForm {
  Mor f;
  Mor k;   // coordinate inclusion of the image block
  Mor f1;  // zero-epi block
};

/// All operations here require a positive scalar semiring (zero-sum-free,
/// no zero divisors); kernels are then coordinate inclusions. Over other
/// semirings they throw unsupported_error rather than guess.

/// The dagger-kernel of f: inclusion of the zero columns of f.
Mor kernel(const Mor& f);
Mor cokernel(const Mor& f);

bool is_zero_epi(const Mor& f);
bool is_zero_mono(const Mor& f);

KernelFactorization factorize(const Mor& f);

/// Inclusion of the complementary coordinates of a coordinate-inclusion
/// dagger-kernel; [k | complement(k)] is a permutation.
Mor complement(const Mor& k);

/// True when k is a canonical coordinate inclusion: columns are distinct
/// basis vectors at strictly increasing coordinates.
bool is_coordinate_inclusion(const Mor& k);

/// Block decomposition of a normal morphism; throws precondition_error
/// with the commutator witness when f is not normal.
NormalForm normal_decompose(const Mor& f);

/// Coordinate-inclusion kernels make every object of dim >= 2 decomposable;
/// the zero kernel 0 -> X is exempt from the isomorphism requirement.
bool is_ksub_simple(Obj x, const SemiringPtr& sr);

/// Given pairwise-orthogonal coordinate-inclusion kernels into a common
/// object, true when they are jointly epimorphic, i.e. their coordinates
/// jointly cover the object.
bool check_sharpness(const std::vector<Mor>& kernels);

/// The implication dagger(f).f = 0 => f = 0; always true over a positive
/// semiring, returned per-instance as a test-harness entry.
bool lemma_little(const Mor& f);

}  // namespace hstarcat

#endif
