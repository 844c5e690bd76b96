#ifndef HSTARCAT_MATCAT_HPP
#define HSTARCAT_MATCAT_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "hstarcat/semiring.hpp"

namespace hstarcat {

/// Objects of the matrix category are natural-number dimensions; dim 0 is
/// the zero object, dim 1 the monoidal unit I.
struct Obj {
  std::size_t dim = 0;
  auto operator<=>(const Obj&) const = default;
};

/// A morphism dom -> cod: a cod.dim x dom.dim matrix of scalars over a
/// fixed semiring. Row-major, rows indexed by the codomain. Immutable in
/// spirit: every operation returns a fresh morphism.
class Mor {
 public:
  Mor(SemiringPtr sr, Obj cod, Obj dom, std::vector<Scalar> entries);

  static Mor identity(const SemiringPtr& sr, Obj x);
  static Mor zero(const SemiringPtr& sr, Obj cod, Obj dom);
  /// Scalar as a 1x1 morphism I -> I.
  static Mor scalar(const SemiringPtr& sr, Scalar s);

  Obj dom() const { return dom_; }
  Obj cod() const { return cod_; }
  const SemiringPtr& sr() const { return sr_; }

  const Scalar& at(std::size_t row, std::size_t col) const;
  const std::vector<Scalar>& entries() const { return entries_; }

  bool is_point() const { return dom_.dim == 1; }
  bool is_scalar() const { return dom_.dim == 1 && cod_.dim == 1; }
  bool is_zero() const;
  bool is_endo() const { return dom_ == cod_; }

  bool operator==(const Mor& other) const;
  bool operator!=(const Mor& other) const { return !(*this == other); }

  std::string str() const;

 private:
  SemiringPtr sr_;
  Obj dom_;
  Obj cod_;
  std::vector<Scalar> entries_;
};

/// Canonical ordering: by (cod, dom), then row-major lexicographic on
/// carrier indices. Gives deterministic set representations and reports.
struct MorLess {
  bool operator()(const Mor& a, const Mor& b) const;
};

Mor compose(const Mor& g, const Mor& f);  // g after f
Mor dagger(const Mor& f);                 // star-transpose
Mor tensor(const Mor& f, const Mor& g);   // Kronecker product
Mor oplus(const Mor& f, const Mor& g);    // block diagonal

/// Coordinate inclusion X_i -> X_1 (+) ... (+) X_k; projection is its dagger.
Mor coprojection(const SemiringPtr& sr, std::size_t i,
                 const std::vector<std::size_t>& dims);
Mor projection(const SemiringPtr& sr, std::size_t i,
               const std::vector<std::size_t>& dims);

/// Biproduct convolution; entrywise semiring sum.
Mor add(const Mor& f, const Mor& g);

/// Entrywise multiplication by a 1x1 scalar morphism.
Mor scalar_mul(const Mor& s, const Mor& f);

/// Diagonal X -> X (+) X (stacked identities) and its dagger, the
/// codiagonal; used to cross-check add against the convolution composite.
Mor diagonal(const SemiringPtr& sr, Obj x);
Mor codiagonal(const SemiringPtr& sr, Obj x);

/// The symmetry X (x) Y -> Y (x) X as an explicit permutation matrix.
Mor swap_mor(const SemiringPtr& sr, Obj x, Obj y);

/// Enumerates the points I -> X of an enumerable semiring, basis vectors
/// first, then the remaining |carrier|^dim vectors in odometer order
/// (coordinate 0 fastest). Independently restartable.
class PointEnumerator {
 public:
  PointEnumerator(SemiringPtr sr, Obj x);
  std::optional<Mor> next();
  void reset();
  /// Total number of points; throws budget_error if it exceeds cap.
  std::size_t count(std::size_t cap) const;

 private:
  SemiringPtr sr_;
  Obj x_;
  std::size_t basis_pos_ = 0;
  std::vector<std::size_t> odo_;
  bool odo_done_ = false;
  bool is_basis_vector(const std::vector<std::size_t>& v) const;
};

/// Materializes all points; throws budget_error when there are more than
/// cap of them.
std::vector<Mor> all_points(const SemiringPtr& sr, Obj x, std::size_t cap);

/// All morphisms cod x dom over an enumerable semiring, odometer order.
/// Throws budget_error when the count exceeds cap.
std::vector<Mor> all_homs(const SemiringPtr& sr, Obj cod, Obj dom,
                          std::size_t cap);

}  // namespace hstarcat

#endif
