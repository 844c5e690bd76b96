#ifndef HSTARCAT_ABELIAN_HPP
#define HSTARCAT_ABELIAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hstarcat {

/// Multiplication table of a finite group on {0, ..., n-1}.
struct GroupTable {
  std::vector<std::vector<std::size_t>> table;
  std::size_t order() const { return table.size(); }
};

/// Checks totality, associativity, commutativity, identity and inverses.
/// Returns a witness string naming the failed axiom, or nullopt on success.
std::optional<std::string> group_axiom_failure(const GroupTable& g);

/// Canonical form of a finite abelian group: the multiset of prime-power
/// cyclic factors (p, e) meaning a Z_{p^e} summand, sorted. Derived from
/// the counts of solutions of x^{p^k} = identity, which determine the
/// partition at each prime.
std::vector<std::pair<std::size_t, unsigned>> abelian_canonical_form(
    const GroupTable& g);

bool groups_isomorphic(const GroupTable& a, const GroupTable& b);

GroupTable cyclic_group(std::size_t n);
GroupTable product_group(const GroupTable& a, const GroupTable& b);

/// Parses specs like "z4" or "z2xz2" (case-insensitive).
GroupTable parse_group_spec(const std::string& spec);

std::string canonical_form_str(
    const std::vector<std::pair<std::size_t, unsigned>>& cf);

}  // namespace hstarcat

#endif
