#include "hstarcat/kernel_factor.hpp"

#include <algorithm>

#include "hstarcat/endo_algebra.hpp"

namespace hstarcat {

namespace {

void require_positive(const Mor& f, const char* op) {
  if (!f.sr()->is_positive())
    throw unsupported_error(std::string(op) +
                            " needs a positive scalar semiring");
}

std::vector<std::size_t> zero_columns(const Mor& f) {
  std::vector<std::size_t> cols;
  const Scalar z = f.sr()->zero();
  for (std::size_t j = 0; j < f.dom().dim; ++j) {
    bool all_zero = true;
    for (std::size_t i = 0; i < f.cod().dim; ++i)
      if (f.at(i, j) != z) {
        all_zero = false;
        break;
      }
    if (all_zero) cols.push_back(j);
  }
  return cols;
}

std::vector<std::size_t> nonzero_rows(const Mor& f) {
  std::vector<std::size_t> rows;
  const Scalar z = f.sr()->zero();
  for (std::size_t i = 0; i < f.cod().dim; ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j < f.dom().dim; ++j)
      if (f.at(i, j) != z) {
        all_zero = false;
        break;
      }
    if (!all_zero) rows.push_back(i);
  }
  return rows;
}

Mor inclusion_of(const SemiringPtr& sr, Obj target,
                 const std::vector<std::size_t>& coords) {
  std::vector<Scalar> e(target.dim * coords.size(), sr->zero());
  for (std::size_t j = 0; j < coords.size(); ++j)
    e[coords[j] * coords.size() + j] = sr->one();
  return Mor(sr, target, Obj{coords.size()}, std::move(e));
}

}  // namespace

Mor kernel(const Mor& f) {
  require_positive(f, "kernel");
  return inclusion_of(f.sr(), f.dom(), zero_columns(f));
}

Mor cokernel(const Mor& f) { return dagger(kernel(dagger(f))); }

bool is_zero_epi(const Mor& f) {
  if (f.sr()->is_positive()) {
    // every row nonzero
    return nonzero_rows(f).size() == f.cod().dim;
  }
  if (!f.sr()->enumerable())
    throw unsupported_error("is_zero_epi needs positivity or enumerability");
  // definitional over copoints: g.f = 0 forces each row of g to vanish
  for (const Mor& row : all_homs(f.sr(), Obj{1}, f.cod(), kDefaultBudget))
    if (!row.is_zero() && compose(row, f).is_zero()) return false;
  return true;
}

bool is_zero_mono(const Mor& f) { return is_zero_epi(dagger(f)); }

KernelFactorization factorize(const Mor& f) {
  require_positive(f, "factorize");
  const std::vector<std::size_t> rows = nonzero_rows(f);
  const Mor m = inclusion_of(f.sr(), f.cod(), rows);
  std::vector<Scalar> e(rows.size() * f.dom().dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < f.dom().dim; ++j)
      e[i * f.dom().dim + j] = f.at(rows[i], j);
  Mor epi(f.sr(), Obj{rows.size()}, f.dom(), std::move(e));
  return {f, std::move(epi), m};
}

bool is_coordinate_inclusion(const Mor& k) {
  const Scalar z = k.sr()->zero();
  const Scalar one = k.sr()->one();
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t j = 0; j < k.dom().dim; ++j) {
    std::size_t hit = k.cod().dim;
    for (std::size_t i = 0; i < k.cod().dim; ++i) {
      const Scalar& v = k.at(i, j);
      if (v == z) continue;
      if (v != one || hit != k.cod().dim) return false;
      hit = i;
    }
    if (hit == k.cod().dim) return false;
    if (!first && hit <= prev) return false;
    prev = hit;
    first = false;
  }
  return true;
}

Mor complement(const Mor& k) {
  if (!is_coordinate_inclusion(k))
    throw input_error("complement: not a coordinate inclusion");
  std::vector<bool> used(k.cod().dim, false);
  const Scalar z = k.sr()->zero();
  for (std::size_t j = 0; j < k.dom().dim; ++j)
    for (std::size_t i = 0; i < k.cod().dim; ++i)
      if (k.at(i, j) != z) used[i] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < k.cod().dim; ++i)
    if (!used[i]) rest.push_back(i);
  return inclusion_of(k.sr(), k.cod(), rest);
}

NormalForm normal_decompose(const Mor& f) {
  require_positive(f, "normal_decompose");
  if (!f.is_endo()) throw input_error("normal_decompose: not an endo");
  const Mor left = compose(f, dagger(f));
  const Mor right = compose(dagger(f), f);
  if (left != right)
    throw precondition_error("morphism is not normal",
                             "f.dagger(f) = " + left.str() +
                                 " vs dagger(f).f = " + right.str());
  const std::vector<std::size_t> zcols = zero_columns(f);
  const std::vector<std::size_t> nzrows = nonzero_rows(f);
  // for normal f over a positive semiring the zero columns are exactly the
  // complement of the nonzero rows
  std::vector<std::size_t> nzcols;
  for (std::size_t j = 0, zi = 0; j < f.dom().dim; ++j) {
    if (zi < zcols.size() && zcols[zi] == j)
      ++zi;
    else
      nzcols.push_back(j);
  }
  if (nzcols != nzrows)
    throw check_failure("normal morphism with differing zero row/column sets",
                        f.str());
  const Mor k = inclusion_of(f.sr(), f.dom(), nzcols);
  const Mor f1 = compose(dagger(k), compose(f, k));
  NormalForm out{f, k, f1};
  if (compose(k, compose(f1, dagger(k))) != f)
    throw check_failure("normal form does not reconstruct f", f.str());
  return out;
}

bool is_ksub_simple(Obj x, const SemiringPtr& sr) {
  if (!sr->is_positive())
    throw unsupported_error("is_ksub_simple needs a positive semiring");
  return x.dim <= 1;
}

bool check_sharpness(const std::vector<Mor>& kernels) {
  if (kernels.empty()) return false;
  const Obj target = kernels.front().cod();
  const SemiringPtr& sr = kernels.front().sr();
  require_positive(kernels.front(), "check_sharpness");
  std::vector<bool> hit(target.dim, false);
  const Scalar z = sr->zero();
  for (const Mor& k : kernels) {
    if (!is_coordinate_inclusion(k) || k.cod() != target)
      throw input_error("check_sharpness: expected coordinate inclusions "
                        "into one object");
    for (std::size_t j = 0; j < k.dom().dim; ++j)
      for (std::size_t i = 0; i < target.dim; ++i)
        if (k.at(i, j) != z) {
          if (hit[i])
            throw input_error("check_sharpness: kernels not orthogonal");
          hit[i] = true;
        }
  }
  // jointly epi iff every coordinate is reached: f.k_i = g.k_i pins down
  // the columns of f and g coordinate by coordinate
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool lemma_little(const Mor& f) {
  require_positive(f, "lemma_little");
  const Mor sq = compose(dagger(f), f);
  if (!sq.is_zero()) return true;  // implication vacuous
  return f.is_zero();
}

}  // namespace hstarcat
