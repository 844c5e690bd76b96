#ifndef HSTARCAT_SEMIRING_HPP
#define HSTARCAT_SEMIRING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <string>
#include <vector>

#include "hstarcat/errors.hpp"

namespace hstarcat {

/// A scalar is an element of some semiring carrier. For the built-in
/// naturals it is the number itself; for boolean it is 0 or 1; for finite
/// table semirings it is the index into the carrier list. Which semiring a
/// scalar belongs to is tracked by the morphisms and operations that hold it.
using Scalar = boost::multiprecision::cpp_int;

enum class SemiringKind { boolean, nat, table };

struct SemiringFlags {
  bool commutative = false;
  bool zero_sum_free = false;
  bool no_zero_divisors = false;
  bool trivial_involution = false;
};

struct AxiomCheck {
  std::string axiom;
  bool pass;
  std::string witness;  // counterexample tuple when pass is false
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  SemiringFlags flags;
  bool all_pass() const;
};

class SemiringDef;
using SemiringPtr = std::shared_ptr<const SemiringDef>;

/// A commutative *-semiring: carrier, +, ., 0, 1 and an involution.
/// Immutable after construction; all member functions are const and safe to
/// call concurrently.
class SemiringDef : public std::enable_shared_from_this<SemiringDef> {
 public:
  static SemiringPtr boolean();
  static SemiringPtr nat();

  /// Build a finite table semiring. Tables are indexed by carrier position.
  /// Throws input_error for malformed tables (non-carrier entries, wrong
  /// shape) and for non-commutative multiplication. Other axiom failures are
  /// allowed at construction and surface through validate().
  static SemiringPtr table(std::vector<std::string> carrier,
                           std::vector<std::vector<std::size_t>> add_table,
                           std::vector<std::vector<std::size_t>> mul_table,
                           std::size_t zero_index, std::size_t one_index,
                           std::vector<std::size_t> star_table);

  SemiringKind kind() const { return kind_; }

  /// Carrier size; throws unsupported_error for nat.
  std::size_t size() const;
  bool enumerable() const { return kind_ != SemiringKind::nat; }

  Scalar zero() const;
  Scalar one() const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar star(const Scalar& a) const;

  /// i-th carrier element, 0 <= i < size().
  Scalar element(std::size_t i) const;

  std::string name(const Scalar& a) const;
  Scalar parse(const std::string& name) const;

  const SemiringFlags& flags() const { return flags_; }

  /// zero-sum-free and no zero divisors; gates the kernel machinery.
  bool is_positive() const;

  /// Structural identity; used to reject mixed-semiring operands.
  bool same(const SemiringDef& other) const;

  /// Check every semiring and *-semiring axiom, exhaustively for table
  /// kind, analytically for the built-ins. Recomputes the flags.
  ValidationReport validate() const;

 private:
  SemiringDef() = default;

  SemiringKind kind_ = SemiringKind::boolean;
  SemiringFlags flags_;
  // table kind only
  std::vector<std::string> carrier_;
  std::vector<std::vector<std::size_t>> add_;
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> star_;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;

  void check_index(const Scalar& a) const;
  SemiringFlags compute_flags() const;
};

}  // namespace hstarcat

#endif
