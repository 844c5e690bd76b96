#include "hstarcat/boolmat.hpp"

namespace hstarcat {

BoolMat boolmat_from_mor(const Mor& f) {
  if (f.sr()->kind() != SemiringKind::boolean)
    throw input_error("boolmat: semiring is not boolean");
  if (!f.is_endo() || f.dom().dim > 8)
    throw input_error("boolmat: needs a square matrix of dim <= 8");
  const unsigned n = static_cast<unsigned>(f.dom().dim);
  BoolMat m{n, 0};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (f.at(i, j) != 0) m.rows |= std::uint64_t{1} << (8 * i + j);
  return m;
}

Mor mor_from_boolmat(const SemiringPtr& sr, const BoolMat& m) {
  std::vector<Scalar> e(static_cast<std::size_t>(m.n) * m.n);
  for (unsigned i = 0; i < m.n; ++i)
    for (unsigned j = 0; j < m.n; ++j)
      e[static_cast<std::size_t>(i) * m.n + j] = Scalar(m.get(i, j) ? 1 : 0);
  return Mor(sr, Obj{m.n}, Obj{m.n}, std::move(e));
}

}  // namespace hstarcat
