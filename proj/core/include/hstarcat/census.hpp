#ifndef HSTARCAT_CENSUS_HPP
#define HSTARCAT_CENSUS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hstarcat/hstar.hpp"

namespace hstarcat {

/// Survivor counts after each pruning stage, in the fixed order C, S, A,
/// set-like/covering, H. Cheapest filters run first.
struct CensusStageCounts {
  std::size_t enumerated = 0;  // candidates actually visited
  std::size_t pass_c = 0;
  std::size_t pass_s = 0;
  std::size_t pass_a = 0;
  std::size_t pass_setlike = 0;  // covering orthonormal set-like family
  std::size_t pass_h = 0;
};

struct CensusClass {
  std::string name;  // e.g. "Z1+Z2"
  std::size_t count = 0;
};

struct CensusResult {
  std::size_t dim = 0;
  /// Dim 3 enumerates only the (C)-symmetric multiplications; the stage-C
  /// count is then the full symmetric space.
  bool symmetric_enumeration = false;
  CensusStageCounts stages;
  std::vector<CensusClass> classes;  // sorted by name
  /// Every full survivor decomposed into a disjoint union of abelian groups.
  bool all_group_unions = true;
};

/// Exhaustive census of Boolean multiplications on dim n, 1 <= n <= 3.
/// Survivors of all five stages are decomposed and classified by the
/// canonical forms of their component groups. The candidate space is
/// partitioned across threads (hardware default when threads is 0); merged
/// counts and classes are deterministic. Throws budget_error when the
/// enumerated space exceeds cap.
CensusResult census(std::size_t n, std::size_t cap = kDefaultBudget,
                    unsigned threads = 0);

/// Class name of one Boolean algebra under the census classification: the
/// sorted canonical forms of its component groups joined with '+'.
std::string classify_rel_algebra(const DaggerAlgebra& alg,
                                 std::size_t cap = kDefaultBudget);

}  // namespace hstarcat

#endif
