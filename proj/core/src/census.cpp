#include "hstarcat/census.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "hstarcat/structure.hpp"

namespace hstarcat {

std::string classify_rel_algebra(const DaggerAlgebra& alg, std::size_t cap) {
  const Decomposition dec = decompose(alg, cap, cap);
  std::vector<std::string> names;
  for (const GroupTable& g : rel_extract_groups(dec))
    names.push_back(canonical_form_str(abelian_canonical_form(g)));
  std::sort(names.begin(), names.end());
  std::string out;
  for (const std::string& s : names) {
    if (!out.empty()) out += '+';
    out += s;
  }
  return out;
}

namespace {

struct LocalTally {
  CensusStageCounts stages;
  std::map<std::string, std::size_t> classes;
  bool all_group_unions = true;
};

// unordered pairs (i,j) with i <= j, lexicographic
std::vector<std::pair<std::size_t, std::size_t>> sym_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.emplace_back(i, j);
  return out;
}

void census_worker(std::size_t n, std::size_t lo, std::size_t hi,
                   std::size_t cap, LocalTally& tally) {
  const SemiringPtr sr = SemiringDef::boolean();
  const std::size_t cells = n * n;
  const auto pairs = sym_pairs(n);
  const bool symmetric = n == 3;

  for (std::size_t cand = lo; cand < hi; ++cand) {
    ++tally.stages.enumerated;
    // rows of mu as bitmasks over the n^2 columns
    std::vector<std::uint32_t> rows(n, 0);
    if (symmetric) {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t p = 0; p < pairs.size(); ++p)
          if ((cand >> (k * pairs.size() + p)) & 1) {
            rows[k] |= std::uint32_t{1} << (pairs[p].first * n + pairs[p].second);
            rows[k] |= std::uint32_t{1} << (pairs[p].second * n + pairs[p].first);
          }
    } else {
      bool sym_ok = true;
      for (std::size_t k = 0; k < n && sym_ok; ++k) {
        for (std::size_t c = 0; c < cells; ++c)
          if ((cand >> (k * cells + c)) & 1)
            rows[k] |= std::uint32_t{1} << c;
        for (std::size_t i = 0; i < n && sym_ok; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (((rows[k] >> (i * n + j)) & 1) != ((rows[k] >> (j * n + i)) & 1)) {
              sym_ok = false;
              break;
            }
      }
      if (!sym_ok) continue;
    }
    ++tally.stages.pass_c;

    // (S): mu . dagger(mu) = id means rows pairwise disjoint and nonzero
    bool s_ok = true;
    for (std::size_t k = 0; k < n && s_ok; ++k) {
      if (rows[k] == 0) s_ok = false;
      for (std::size_t l = k + 1; l < n && s_ok; ++l)
        if (rows[k] & rows[l]) s_ok = false;
    }
    if (!s_ok) continue;
    ++tally.stages.pass_s;

    std::vector<Scalar> entries(n * cells);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < cells; ++c)
        entries[k * cells + c] = Scalar((rows[k] >> c) & 1);
    const DaggerAlgebra alg(sr, Obj{n},
                            Mor(sr, Obj{n}, Obj{cells}, std::move(entries)));

    const Mor id = Mor::identity(sr, alg.x);
    if (compose(alg.mu, tensor(alg.mu, id)) !=
        compose(alg.mu, tensor(id, alg.mu)))
      continue;
    ++tally.stages.pass_a;

    const SetLikeFamily family = set_like_elements(alg, false, cap);
    if (family.dimension() == 0 || !family.orthonormal ||
        !is_covering(family.elements, alg.x, cap))
      continue;
    ++tally.stages.pass_setlike;

    if (!check_axioms(alg, cap).h.pass) continue;
    ++tally.stages.pass_h;

    try {
      ++tally.classes[classify_rel_algebra(alg, cap)];
    } catch (const check_failure&) {
      ++tally.classes["unclassified"];
      tally.all_group_unions = false;
    } catch (const precondition_error&) {
      ++tally.classes["unclassified"];
      tally.all_group_unions = false;
    }
  }
}

}  // namespace

CensusResult census(std::size_t n, std::size_t cap, unsigned threads) {
  if (n < 1 || n > 3)
    throw input_error("census supports dimensions 1 through 3");
  const bool symmetric = n == 3;
  const std::size_t bits =
      symmetric ? n * sym_pairs(n).size() : n * n * n;
  const std::size_t total = std::size_t{1} << bits;
  if (total > cap)
    throw budget_error("census space of " + std::to_string(total) +
                           " candidates exceeds cap",
                       0);

  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(total / 1024, 1)));

  std::vector<LocalTally> tallies(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = std::min<std::size_t>(t * chunk, total);
    const std::size_t hi = std::min<std::size_t>(lo + chunk, total);
    pool.emplace_back(census_worker, n, lo, hi, cap, std::ref(tallies[t]));
  }
  for (std::thread& th : pool) th.join();

  CensusResult result;
  result.dim = n;
  result.symmetric_enumeration = symmetric;
  std::map<std::string, std::size_t> classes;
  for (const LocalTally& t : tallies) {
    result.stages.enumerated += t.stages.enumerated;
    result.stages.pass_c += t.stages.pass_c;
    result.stages.pass_s += t.stages.pass_s;
    result.stages.pass_a += t.stages.pass_a;
    result.stages.pass_setlike += t.stages.pass_setlike;
    result.stages.pass_h += t.stages.pass_h;
    for (const auto& [name, count] : t.classes) classes[name] += count;
    result.all_group_unions = result.all_group_unions && t.all_group_unions;
  }
  for (const auto& [name, count] : classes)
    result.classes.push_back({name, count});
  return result;
}

}  // namespace hstarcat
