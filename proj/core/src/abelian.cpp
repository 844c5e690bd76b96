#include "hstarcat/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hstarcat/errors.hpp"

namespace hstarcat {

std::optional<std::string> group_axiom_failure(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 0) return "empty carrier";
  for (const auto& row : g.table) {
    if (row.size() != n) return "table not square";
    for (std::size_t v : row)
      if (v >= n) return "entry outside carrier";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (g.table[a][b] != g.table[b][a])
        return "not commutative at (" + std::to_string(a) + "," +
               std::to_string(b) + ")";
      for (std::size_t c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          return "not associative at (" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + ")";
    }
  std::size_t identity = n;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a)
      if (g.table[e][a] != a || g.table[a][e] != a) {
        ok = false;
        break;
      }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity == n) return "no identity element";
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b)
      if (g.table[a][b] == identity) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return "no inverse for " + std::to_string(a);
  }
  return std::nullopt;
}

namespace {

std::size_t group_identity(const GroupTable& g) {
  for (std::size_t e = 0; e < g.order(); ++e)
    if (g.table[e][0] == 0) {
      bool ok = true;
      for (std::size_t a = 0; a < g.order(); ++a)
        if (g.table[e][a] != a) {
          ok = false;
          break;
        }
      if (ok) return e;
    }
  throw input_error("group table has no identity");
}

std::size_t group_pow(const GroupTable& g, std::size_t x, std::size_t k,
                      std::size_t identity) {
  std::size_t acc = identity;
  for (std::size_t i = 0; i < k; ++i) acc = g.table[acc][x];
  return acc;
}

}  // namespace

std::vector<std::pair<std::size_t, unsigned>> abelian_canonical_form(
    const GroupTable& g) {
  if (auto w = group_axiom_failure(g))
    throw input_error("not an abelian group: " + *w);
  const std::size_t n = g.order();
  const std::size_t e = group_identity(g);

  std::vector<std::pair<std::size_t, unsigned>> factors;
  std::size_t rest = n;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    // c_k = #solutions of x^(p^k) = e; log_p(c_k/c_{k-1}) counts the
    // cyclic p-factors of exponent >= k (conjugate partition).
    std::vector<std::size_t> counts{1};  // c_0
    std::size_t pk = 1;
    for (;;) {
      pk *= p;
      std::size_t c = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (group_pow(g, x, pk, e) == e) ++c;
      counts.push_back(c);
      if (c == counts[counts.size() - 2]) break;  // stabilized
    }
    std::vector<unsigned> conj;  // conj[k-1] = #factors with exponent >= k
    for (std::size_t k = 1; k < counts.size(); ++k) {
      std::size_t ratio = counts[k] / counts[k - 1];
      unsigned log = 0;
      while (ratio > 1) {
        ratio /= p;
        ++log;
      }
      if (log == 0) break;
      conj.push_back(log);
    }
    // transpose the conjugate partition into exponents
    for (unsigned k = 0; k < conj.size(); ++k) {
      const unsigned here = conj[k];
      const unsigned next = k + 1 < conj.size() ? conj[k + 1] : 0;
      for (unsigned c = next; c < here; ++c)
        factors.emplace_back(p, k + 1);
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

bool groups_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  return abelian_canonical_form(a) == abelian_canonical_form(b);
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw input_error("cyclic group of order 0");
  GroupTable g;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

GroupTable product_group(const GroupTable& a, const GroupTable& b) {
  const std::size_t m = a.order(), n = b.order();
  GroupTable g;
  g.table.assign(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l)
          g.table[i * n + j][k * n + l] =
              a.table[i][k] * n + b.table[j][l];
  return g;
}

GroupTable parse_group_spec(const std::string& spec) {
  std::string s;
  for (char c : spec) s.push_back(static_cast<char>(std::tolower(c)));
  std::optional<GroupTable> acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'z')
      throw input_error("bad group spec '" + spec + "' (expected zN[xzM...])");
    ++pos;
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
      ++end;
    if (end == pos) throw input_error("bad group spec '" + spec + "'");
    const std::size_t n = std::stoul(s.substr(pos, end - pos));
    GroupTable factor = cyclic_group(n);
    acc = acc ? product_group(*acc, factor) : factor;
    pos = end;
    if (pos < s.size()) {
      if (s[pos] != 'x') throw input_error("bad group spec '" + spec + "'");
      ++pos;
    }
  }
  if (!acc) throw input_error("empty group spec");
  return *acc;
}

std::string canonical_form_str(
    const std::vector<std::pair<std::size_t, unsigned>>& cf) {
  if (cf.empty()) return "Z1";
  std::ostringstream out;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    std::size_t pk = 1;
    for (unsigned j = 0; j < cf[i].second; ++j) pk *= cf[i].first;
    out << (i ? "x" : "") << "Z" << pk;
  }
  return out.str();
}

}  // namespace hstarcat
