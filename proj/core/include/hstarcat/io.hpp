#ifndef HSTARCAT_IO_HPP
#define HSTARCAT_IO_HPP

#include <json.hpp>
#include <string>

#include "hstarcat/hstar.hpp"
#include "hstarcat/spectrum.hpp"
#include "hstarcat/structure.hpp"

namespace hstarcat {

using json = nlohmann::json;

// Semiring file: {"kind":"boolean"} | {"kind":"nat"} |
// {"kind":"table","carrier":[...],"add":[[...]],"mul":[[...]],
//  "zero":"0","one":"1","star":[...]} with entries as element names.
SemiringPtr semiring_from_json(const json& j);
json semiring_to_json(const SemiringPtr& sr);

// Morphism file: {"dom":2,"cod":2,"entries":[["1","0"],["0","1"]]},
// row-major with rows indexed by the codomain.
Mor mor_from_json(const SemiringPtr& sr, const json& j);
json mor_to_json(const Mor& f);

// Algebra file: {"semiring":{...},"dim":n,"mu":[[...]]} where mu is an
// n x n^2 matrix and basis pair (e_i,e_j) sits at column i*n+j.
DaggerAlgebra algebra_from_json(const json& j);
json algebra_to_json(const DaggerAlgebra& alg);

// Group-list file: {"groups":[{"order":2,"table":[[0,1],[1,0]]}]}.
std::vector<GroupTable> groups_from_json(const json& j);
json groups_to_json(const std::vector<GroupTable>& groups);

json validation_report_to_json(const ValidationReport& report);
json axiom_report_to_json(const AxiomReport& report);
json subsemialgebra_to_json(const Subsemialgebra& a,
                            std::optional<bool> von_neumann = std::nullopt,
                            std::optional<bool> maximal = std::nullopt);
json decomposition_to_json(const Decomposition& dec);
json characters_to_json(const std::vector<Character>& chars);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace hstarcat

#endif
