#include "hstarcat/matcat.hpp"

#include <sstream>

namespace hstarcat {

namespace {

void require_same_semiring(const Mor& f, const Mor& g) {
  if (!f.sr()->same(*g.sr()))
    throw input_error("operands belong to different semirings");
}

}  // namespace

Mor::Mor(SemiringPtr sr, Obj cod, Obj dom, std::vector<Scalar> entries)
    : sr_(std::move(sr)), dom_(dom), cod_(cod), entries_(std::move(entries)) {
  if (!sr_) throw input_error("morphism without a semiring");
  if (entries_.size() != cod_.dim * dom_.dim)
    throw input_error("entry count does not match shape");
}

Mor Mor::identity(const SemiringPtr& sr, Obj x) {
  std::vector<Scalar> e(x.dim * x.dim, sr->zero());
  for (std::size_t i = 0; i < x.dim; ++i) e[i * x.dim + i] = sr->one();
  return Mor(sr, x, x, std::move(e));
}

Mor Mor::zero(const SemiringPtr& sr, Obj cod, Obj dom) {
  return Mor(sr, cod, dom, std::vector<Scalar>(cod.dim * dom.dim, sr->zero()));
}

Mor Mor::scalar(const SemiringPtr& sr, Scalar s) {
  return Mor(sr, Obj{1}, Obj{1}, {std::move(s)});
}

const Scalar& Mor::at(std::size_t row, std::size_t col) const {
  return entries_[row * dom_.dim + col];
}

bool Mor::is_zero() const {
  const Scalar z = sr_->zero();
  for (const Scalar& e : entries_)
    if (e != z) return false;
  return true;
}

bool Mor::operator==(const Mor& other) const {
  if (dom_ != other.dom_ || cod_ != other.cod_) return false;
  require_same_semiring(*this, other);
  return entries_ == other.entries_;
}

std::string Mor::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < cod_.dim; ++i) {
    out << (i ? ";" : "") << "[";
    for (std::size_t j = 0; j < dom_.dim; ++j)
      out << (j ? "," : "") << sr_->name(at(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

bool MorLess::operator()(const Mor& a, const Mor& b) const {
  if (a.cod() != b.cod()) return a.cod() < b.cod();
  if (a.dom() != b.dom()) return a.dom() < b.dom();
  return a.entries() < b.entries();
}

Mor compose(const Mor& g, const Mor& f) {
  require_same_semiring(g, f);
  if (f.cod() != g.dom())
    throw input_error("compose: codomain/domain mismatch");
  const SemiringPtr& sr = f.sr();
  const std::size_t m = g.cod().dim, k = g.dom().dim, n = f.dom().dim;
  std::vector<Scalar> e(m * n, sr->zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc = sr->zero();
      for (std::size_t t = 0; t < k; ++t)
        acc = sr->add(acc, sr->mul(g.at(i, t), f.at(t, j)));
      e[i * n + j] = std::move(acc);
    }
  return Mor(sr, g.cod(), f.dom(), std::move(e));
}

Mor dagger(const Mor& f) {
  const SemiringPtr& sr = f.sr();
  const std::size_t m = f.cod().dim, n = f.dom().dim;
  std::vector<Scalar> e(n * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) e[j * m + i] = sr->star(f.at(i, j));
  return Mor(sr, f.dom(), f.cod(), std::move(e));
}

Mor tensor(const Mor& f, const Mor& g) {
  require_same_semiring(f, g);
  const SemiringPtr& sr = f.sr();
  const std::size_t fm = f.cod().dim, fn = f.dom().dim;
  const std::size_t gm = g.cod().dim, gn = g.dom().dim;
  std::vector<Scalar> e(fm * gm * fn * gn);
  for (std::size_t i = 0; i < fm; ++i)
    for (std::size_t k = 0; k < gm; ++k)
      for (std::size_t j = 0; j < fn; ++j)
        for (std::size_t l = 0; l < gn; ++l)
          e[(i * gm + k) * (fn * gn) + (j * gn + l)] =
              sr->mul(f.at(i, j), g.at(k, l));
  return Mor(sr, Obj{fm * gm}, Obj{fn * gn}, std::move(e));
}

Mor oplus(const Mor& f, const Mor& g) {
  require_same_semiring(f, g);
  const SemiringPtr& sr = f.sr();
  const std::size_t m = f.cod().dim + g.cod().dim;
  const std::size_t n = f.dom().dim + g.dom().dim;
  std::vector<Scalar> e(m * n, sr->zero());
  for (std::size_t i = 0; i < f.cod().dim; ++i)
    for (std::size_t j = 0; j < f.dom().dim; ++j) e[i * n + j] = f.at(i, j);
  for (std::size_t i = 0; i < g.cod().dim; ++i)
    for (std::size_t j = 0; j < g.dom().dim; ++j)
      e[(f.cod().dim + i) * n + (f.dom().dim + j)] = g.at(i, j);
  return Mor(sr, Obj{m}, Obj{n}, std::move(e));
}

Mor coprojection(const SemiringPtr& sr, std::size_t i,
                 const std::vector<std::size_t>& dims) {
  if (i >= dims.size()) throw input_error("coprojection index out of range");
  std::size_t total = 0, offset = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k < i) offset += dims[k];
    total += dims[k];
  }
  std::vector<Scalar> e(total * dims[i], sr->zero());
  for (std::size_t j = 0; j < dims[i]; ++j)
    e[(offset + j) * dims[i] + j] = sr->one();
  return Mor(sr, Obj{total}, Obj{dims[i]}, std::move(e));
}

Mor projection(const SemiringPtr& sr, std::size_t i,
               const std::vector<std::size_t>& dims) {
  return dagger(coprojection(sr, i, dims));
}

Mor add(const Mor& f, const Mor& g) {
  require_same_semiring(f, g);
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw input_error("add: shape mismatch");
  const SemiringPtr& sr = f.sr();
  std::vector<Scalar> e(f.entries().size());
  for (std::size_t k = 0; k < e.size(); ++k)
    e[k] = sr->add(f.entries()[k], g.entries()[k]);
  return Mor(sr, f.cod(), f.dom(), std::move(e));
}

Mor scalar_mul(const Mor& s, const Mor& f) {
  require_same_semiring(s, f);
  if (!s.is_scalar()) throw input_error("scalar_mul: left operand not 1x1");
  const SemiringPtr& sr = f.sr();
  const Scalar& v = s.at(0, 0);
  std::vector<Scalar> e(f.entries().size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = sr->mul(v, f.entries()[k]);
  return Mor(sr, f.cod(), f.dom(), std::move(e));
}

Mor diagonal(const SemiringPtr& sr, Obj x) {
  Mor id = Mor::identity(sr, x);
  const std::size_t n = x.dim;
  std::vector<Scalar> e(2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e[i * n + j] = id.at(i, j);
      e[(n + i) * n + j] = id.at(i, j);
    }
  return Mor(sr, Obj{2 * n}, x, std::move(e));
}

Mor codiagonal(const SemiringPtr& sr, Obj x) {
  return dagger(diagonal(sr, x));
}

Mor swap_mor(const SemiringPtr& sr, Obj x, Obj y) {
  const std::size_t m = x.dim, n = y.dim;
  std::vector<Scalar> e(m * n * m * n, sr->zero());
  // basis e_i (x) e_j at column i*n+j maps to e_j (x) e_i at row j*m+i
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e[(j * m + i) * (m * n) + (i * n + j)] = sr->one();
  return Mor(sr, Obj{m * n}, Obj{m * n}, std::move(e));
}

PointEnumerator::PointEnumerator(SemiringPtr sr, Obj x)
    : sr_(std::move(sr)), x_(x) {
  if (!sr_->enumerable())
    throw unsupported_error("point enumeration needs an enumerable semiring");
  reset();
}

void PointEnumerator::reset() {
  basis_pos_ = 0;
  odo_.assign(x_.dim, 0);
  odo_done_ = false;
}

bool PointEnumerator::is_basis_vector(
    const std::vector<std::size_t>& v) const {
  std::size_t ones = 0;
  const std::size_t one = sr_->one().convert_to<std::size_t>();
  const std::size_t zero = sr_->zero().convert_to<std::size_t>();
  for (std::size_t c : v) {
    if (c == one)
      ++ones;
    else if (c != zero)
      return false;
  }
  return ones == 1;
}

std::optional<Mor> PointEnumerator::next() {
  const std::size_t n = x_.dim;
  if (basis_pos_ < n) {
    std::vector<Scalar> e(n, sr_->zero());
    e[basis_pos_] = sr_->one();
    ++basis_pos_;
    return Mor(sr_, x_, Obj{1}, std::move(e));
  }
  const std::size_t k = sr_->size();
  while (!odo_done_) {
    std::vector<std::size_t> current = odo_;
    // advance odometer, coordinate 0 fastest
    std::size_t pos = 0;
    for (; pos < n; ++pos) {
      if (++odo_[pos] < k) break;
      odo_[pos] = 0;
    }
    if (pos == n) odo_done_ = true;
    if (n > 0 && is_basis_vector(current)) continue;  // already yielded
    std::vector<Scalar> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = sr_->element(current[i]);
    if (n == 0 && basis_pos_ == 0) {
      // dim 0: exactly one empty point
      ++basis_pos_;
      return Mor(sr_, x_, Obj{1}, {});
    }
    if (n == 0) return std::nullopt;
    return Mor(sr_, x_, Obj{1}, std::move(e));
  }
  return std::nullopt;
}

std::size_t PointEnumerator::count(std::size_t cap) const {
  std::size_t total = 1;
  const std::size_t k = sr_->size();
  for (std::size_t i = 0; i < x_.dim; ++i) {
    if (total > cap / std::max<std::size_t>(k, 1))
      throw budget_error("point count exceeds cap");
    total *= k;
  }
  if (total > cap) throw budget_error("point count exceeds cap");
  return total;
}

std::vector<Mor> all_points(const SemiringPtr& sr, Obj x, std::size_t cap) {
  PointEnumerator en(sr, x);
  en.count(cap);
  std::vector<Mor> out;
  while (auto p = en.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Mor> all_homs(const SemiringPtr& sr, Obj cod, Obj dom,
                          std::size_t cap) {
  if (!sr->enumerable())
    throw unsupported_error("hom enumeration needs an enumerable semiring");
  const std::size_t cells = cod.dim * dom.dim;
  const std::size_t k = sr->size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    if (total > cap / std::max<std::size_t>(k, 1))
      throw budget_error("hom count exceeds cap");
    total *= k;
  }
  if (total > cap) throw budget_error("hom count exceeds cap");
  std::vector<Mor> out;
  out.reserve(total);
  std::vector<std::size_t> odo(cells, 0);
  for (;;) {
    std::vector<Scalar> e(cells);
    for (std::size_t i = 0; i < cells; ++i) e[i] = sr->element(odo[i]);
    out.emplace_back(sr, cod, dom, std::move(e));
    std::size_t pos = 0;
    for (; pos < cells; ++pos) {
      if (++odo[pos] < k) break;
      odo[pos] = 0;
    }
    if (pos == cells) break;
  }
  return out;
}

}  // namespace hstarcat
