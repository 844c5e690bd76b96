#include "hstarcat/semiring.hpp"

#include <algorithm>
#include <sstream>

namespace hstarcat {

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.pass; });
}

SemiringPtr SemiringDef::boolean() {
  auto def = std::shared_ptr<SemiringDef>(new SemiringDef());
  def->kind_ = SemiringKind::boolean;
  def->flags_ = {true, true, true, true};
  return def;
}

SemiringPtr SemiringDef::nat() {
  auto def = std::shared_ptr<SemiringDef>(new SemiringDef());
  def->kind_ = SemiringKind::nat;
  def->flags_ = {true, true, true, true};
  return def;
}

SemiringPtr SemiringDef::table(std::vector<std::string> carrier,
                               std::vector<std::vector<std::size_t>> add_table,
                               std::vector<std::vector<std::size_t>> mul_table,
                               std::size_t zero_index, std::size_t one_index,
                               std::vector<std::size_t> star_table) {
  const std::size_t n = carrier.size();
  if (n == 0) throw input_error("semiring carrier is empty");
  auto check_table = [n](const std::vector<std::vector<std::size_t>>& t,
                         const char* which) {
    if (t.size() != n) throw input_error(std::string(which) + ": wrong shape");
    for (const auto& row : t) {
      if (row.size() != n)
        throw input_error(std::string(which) + ": wrong shape");
      for (std::size_t v : row)
        if (v >= n)
          throw input_error(std::string(which) + ": non-carrier entry");
    }
  };
  check_table(add_table, "add table");
  check_table(mul_table, "mul table");
  if (star_table.size() != n) throw input_error("star table: wrong shape");
  for (std::size_t v : star_table)
    if (v >= n) throw input_error("star table: non-carrier entry");
  if (zero_index >= n || one_index >= n)
    throw input_error("zero/one outside carrier");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul_table[a][b] != mul_table[b][a])
        throw input_error("non-commutative multiplication rejected at (" +
                          carrier[a] + "," + carrier[b] + ")");

  auto def = std::shared_ptr<SemiringDef>(new SemiringDef());
  def->kind_ = SemiringKind::table;
  def->carrier_ = std::move(carrier);
  def->add_ = std::move(add_table);
  def->mul_ = std::move(mul_table);
  def->star_ = std::move(star_table);
  def->zero_ = zero_index;
  def->one_ = one_index;
  def->flags_ = def->compute_flags();
  return def;
}

std::size_t SemiringDef::size() const {
  switch (kind_) {
    case SemiringKind::boolean:
      return 2;
    case SemiringKind::table:
      return carrier_.size();
    case SemiringKind::nat:
      throw unsupported_error("nat carrier is not enumerable");
  }
  return 0;
}

void SemiringDef::check_index(const Scalar& a) const {
  if (kind_ == SemiringKind::nat) return;
  if (a < 0 || a >= size())
    throw input_error("scalar " + a.str() + " outside carrier");
}

Scalar SemiringDef::zero() const {
  return kind_ == SemiringKind::table ? Scalar(zero_) : Scalar(0);
}

Scalar SemiringDef::one() const {
  return kind_ == SemiringKind::table ? Scalar(one_) : Scalar(1);
}

Scalar SemiringDef::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case SemiringKind::boolean:
      check_index(a);
      check_index(b);
      return Scalar((a != 0 || b != 0) ? 1 : 0);
    case SemiringKind::nat:
      return a + b;
    case SemiringKind::table:
      check_index(a);
      check_index(b);
      return Scalar(
          add_[a.convert_to<std::size_t>()][b.convert_to<std::size_t>()]);
  }
  return Scalar(0);
}

Scalar SemiringDef::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case SemiringKind::boolean:
      check_index(a);
      check_index(b);
      return Scalar((a != 0 && b != 0) ? 1 : 0);
    case SemiringKind::nat:
      return a * b;
    case SemiringKind::table:
      check_index(a);
      check_index(b);
      return Scalar(
          mul_[a.convert_to<std::size_t>()][b.convert_to<std::size_t>()]);
  }
  return Scalar(0);
}

Scalar SemiringDef::star(const Scalar& a) const {
  if (kind_ == SemiringKind::table) {
    check_index(a);
    return Scalar(star_[a.convert_to<std::size_t>()]);
  }
  return a;  // identity involution on boolean and nat
}

Scalar SemiringDef::element(std::size_t i) const {
  if (i >= size()) throw input_error("carrier index out of range");
  return Scalar(i);
}

std::string SemiringDef::name(const Scalar& a) const {
  if (kind_ == SemiringKind::table) {
    check_index(a);
    return carrier_[a.convert_to<std::size_t>()];
  }
  return a.str();
}

Scalar SemiringDef::parse(const std::string& s) const {
  if (kind_ == SemiringKind::table) {
    auto it = std::find(carrier_.begin(), carrier_.end(), s);
    if (it == carrier_.end())
      throw input_error("'" + s + "' is not a carrier element");
    return Scalar(it - carrier_.begin());
  }
  Scalar v;
  try {
    v = Scalar(s);
  } catch (const std::exception&) {
    throw input_error("'" + s + "' is not a number");
  }
  if (v < 0) throw input_error("negative scalar '" + s + "'");
  if (kind_ == SemiringKind::boolean && v > 1)
    throw input_error("'" + s + "' is not a boolean scalar");
  return v;
}

bool SemiringDef::is_positive() const {
  return flags_.zero_sum_free && flags_.no_zero_divisors;
}

bool SemiringDef::same(const SemiringDef& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_) return false;
  if (kind_ != SemiringKind::table) return true;
  return carrier_ == other.carrier_ && add_ == other.add_ &&
         mul_ == other.mul_ && star_ == other.star_ && zero_ == other.zero_ &&
         one_ == other.one_;
}

SemiringFlags SemiringDef::compute_flags() const {
  if (kind_ != SemiringKind::table) return {true, true, true, true};
  const std::size_t n = carrier_.size();
  SemiringFlags f;
  f.commutative = true;  // enforced at construction
  f.zero_sum_free = true;
  f.no_zero_divisors = true;
  f.trivial_involution = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (star_[a] != a) f.trivial_involution = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (add_[a][b] == zero_ && (a != zero_ || b != zero_))
        f.zero_sum_free = false;
      if (mul_[a][b] == zero_ && a != zero_ && b != zero_)
        f.no_zero_divisors = false;
    }
  }
  return f;
}

ValidationReport SemiringDef::validate() const {
  ValidationReport report;
  report.flags = compute_flags();
  auto pass = [&](const std::string& axiom) {
    report.checks.push_back({axiom, true, ""});
  };
  if (kind_ != SemiringKind::table) {
    // Built-in semirings are known analytically.
    for (const char* axiom :
         {"add-associative", "add-commutative", "add-unit", "mul-associative",
          "mul-commutative", "mul-unit", "distributive", "zero-annihilates",
          "star-involution", "star-additive", "star-multiplicative",
          "star-unit"})
      pass(axiom);
    return report;
  }

  const std::size_t n = carrier_.size();
  auto witness2 = [&](std::size_t a, std::size_t b) {
    return "(" + carrier_[a] + "," + carrier_[b] + ")";
  };
  auto witness3 = [&](std::size_t a, std::size_t b, std::size_t c) {
    return "(" + carrier_[a] + "," + carrier_[b] + "," + carrier_[c] + ")";
  };
  auto check = [&](const std::string& axiom, auto&& fail_witness) {
    std::string w = fail_witness();
    report.checks.push_back({axiom, w.empty(), w});
  };

  check("add-associative", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (add_[add_[a][b]][c] != add_[a][add_[b][c]])
            return witness3(a, b, c);
    return "";
  });
  check("add-commutative", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (add_[a][b] != add_[b][a]) return witness2(a, b);
    return "";
  });
  check("add-unit", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      if (add_[zero_][a] != a || add_[a][zero_] != a)
        return "(" + carrier_[a] + ")";
    return "";
  });
  check("mul-associative", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
            return witness3(a, b, c);
    return "";
  });
  check("mul-commutative", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (mul_[a][b] != mul_[b][a]) return witness2(a, b);
    return "";
  });
  check("mul-unit", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      if (mul_[one_][a] != a || mul_[a][one_] != a)
        return "(" + carrier_[a] + ")";
    return "";
  });
  check("distributive", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]] ||
              mul_[add_[b][c]][a] != add_[mul_[b][a]][mul_[c][a]])
            return witness3(a, b, c);
    return "";
  });
  check("zero-annihilates", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      if (mul_[zero_][a] != zero_ || mul_[a][zero_] != zero_)
        return "(" + carrier_[a] + ")";
    return "";
  });
  check("star-involution", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      if (star_[star_[a]] != a) return "(" + carrier_[a] + ")";
    return "";
  });
  check("star-additive", [&]() -> std::string {
    if (star_[zero_] != zero_) return "(" + carrier_[zero_] + ")";
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (star_[add_[a][b]] != add_[star_[a]][star_[b]])
          return witness2(a, b);
    return "";
  });
  check("star-multiplicative", [&]() -> std::string {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (star_[mul_[a][b]] != mul_[star_[b]][star_[a]])
          return witness2(a, b);
    return "";
  });
  check("star-unit", [&]() -> std::string {
    if (star_[one_] != one_) return "(" + carrier_[one_] + ")";
    return "";
  });
  return report;
}

}  // namespace hstarcat
