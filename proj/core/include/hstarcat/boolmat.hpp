#ifndef HSTARCAT_BOOLMAT_HPP
#define HSTARCAT_BOOLMAT_HPP

#include <bit>
#include <cstdint>
#include <cstddef>

#include "hstarcat/matcat.hpp"

namespace hstarcat {

/// Square Boolean matrix of dimension n <= 8, rows packed one byte each.
/// Used for the hot enumeration loops (commutants, census); semantics match
/// the generic morphism operations over the Boolean semiring exactly.
struct BoolMat {
  unsigned n = 0;
  std::uint64_t rows = 0;  // row i occupies bits [8i, 8i+8)

  std::uint64_t row(unsigned i) const { return (rows >> (8 * i)) & 0xffu; }
  bool get(unsigned i, unsigned j) const { return (row(i) >> j) & 1u; }

  friend bool operator==(const BoolMat&, const BoolMat&) = default;
};

inline BoolMat bool_mul(const BoolMat& a, const BoolMat& b) {
  BoolMat c{a.n, 0};
  for (unsigned i = 0; i < a.n; ++i) {
    std::uint64_t m = a.row(i), acc = 0;
    while (m) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(m));
      acc |= b.row(j);
      m &= m - 1;
    }
    c.rows |= acc << (8 * i);
  }
  return c;
}

inline bool bool_commutes(const BoolMat& a, const BoolMat& b) {
  return bool_mul(a, b) == bool_mul(b, a);
}

/// Decode candidate index bits: bit i*n+j is entry (i, j).
inline BoolMat boolmat_from_bits(unsigned n, std::uint64_t bits) {
  BoolMat m{n, 0};
  for (unsigned i = 0; i < n; ++i)
    m.rows |= ((bits >> (i * n)) & ((1u << n) - 1)) << (8 * i);
  return m;
}

BoolMat boolmat_from_mor(const Mor& f);
Mor mor_from_boolmat(const SemiringPtr& sr, const BoolMat& m);

}  // namespace hstarcat

#endif
