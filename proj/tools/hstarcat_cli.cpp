// Command-line driver: every subcommand loads its inputs, runs the library
// checks, and emits a run report (human-readable or --json) whose check
// tags are documented in the README table.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hstarcat/census.hpp"
#include "hstarcat/io.hpp"
#include "hstarcat/spectrum.hpp"
#include "hstarcat/structure.hpp"

using namespace hstarcat;

namespace {

struct CheckLine {
  std::string tag;
  bool pass = false;
  std::string witness;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::vector<CheckLine> checks;
  json result = json::object();
  long long timing_ms = 0;

  void check(const std::string& tag, bool pass, std::string witness = {}) {
    checks.push_back({tag, pass, std::move(witness)});
  }
  bool all_pass() const {
    for (const CheckLine& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::string fnv1a_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::uint64_t h = 14695981039346656037ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json report_to_json(const RunReport& r) {
  json checks = json::array();
  for (const CheckLine& c : r.checks)
    checks.push_back({{"tag", c.tag}, {"pass", c.pass}, {"witness", c.witness}});
  json inputs = json::object();
  for (const auto& [path, digest] : r.inputs) inputs[path] = digest;
  return {{"command", r.command}, {"inputs", inputs},    {"checks", checks},
          {"result", r.result},   {"timing_ms", r.timing_ms},
          {"pass", r.all_pass()}};
}

void emit(const RunReport& r, bool as_json, const std::string& out_path) {
  std::ostringstream os;
  if (as_json) {
    os << report_to_json(r).dump(2) << "\n";
  } else {
    os << r.command << "\n";
    for (const CheckLine& c : r.checks) {
      os << (c.pass ? "PASS" : "FAIL") << " " << c.tag;
      if (!c.pass && !c.witness.empty()) os << "  [" << c.witness << "]";
      os << "\n";
    }
    if (!r.result.empty()) os << r.result.dump(2) << "\n";
    os << (r.all_pass() ? "ok" : "failed") << " (" << r.timing_ms << " ms)\n";
  }
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw input_error("cannot write '" + out_path + "'");
    f << os.str();
  }
}

json load_input(RunReport& r, const std::string& path) {
  r.inputs.emplace_back(path, fnv1a_digest(path));
  return load_json_file(path);
}

Subsemialgebra context_from_json(const SemiringPtr& sr, Obj x, const json& j,
                                 std::size_t budget) {
  std::vector<Mor> gens;
  for (const json& g : j.at("generators")) gens.push_back(mor_from_json(sr, g));
  for (const Mor& g : gens)
    if (g.dom() != x || g.cod() != x)
      throw input_error("context generator is not an endomorphism of the carrier");
  const bool unital = j.value("unital", true);
  return closure(gens, unital, budget);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"H*-algebra toolkit over matrix categories"};
  app.require_subcommand(1);

  std::size_t budget = kDefaultBudget;
  bool as_json = false;
  std::string out_path;
  app.add_option("--budget", budget, "enumeration cap");
  app.add_flag("--json", as_json, "machine-readable report");
  app.add_option("--out", out_path, "write the report to a file");

  std::string semiring_path, algebra_path, context_path, groups_spec;
  std::size_t census_size = 2;

  auto* sc_validate = app.add_subcommand("validate-semiring",
                                         "check every *-semiring axiom");
  sc_validate->add_option("--semiring", semiring_path)->required();

  auto* sc_check = app.add_subcommand("check", "check the H*-algebra axioms");
  sc_check->add_option("--algebra", algebra_path)->required();

  auto* sc_setlike = app.add_subcommand("setlike",
                                        "set-like elements and partners");
  sc_setlike->add_option("--algebra", algebra_path)->required();

  auto* sc_commutant = app.add_subcommand(
      "commutant", "commutant of the basis right multiplications");
  sc_commutant->add_option("--algebra", algebra_path)->required();

  auto* sc_vn = app.add_subcommand(
      "vn", "generated semialgebra with the double-commutant checks");
  sc_vn->add_option("--algebra", algebra_path)->required();

  auto* sc_decompose = app.add_subcommand("decompose",
                                          "structure decomposition");
  sc_decompose->add_option("--algebra", algebra_path)->required();

  auto* sc_extract = app.add_subcommand(
      "extract-groups", "read component multiplications back as groups");
  sc_extract->add_option("--algebra", algebra_path)->required();

  auto* sc_spectrum = app.add_subcommand("spectrum",
                                         "characters and global sections");
  sc_spectrum->add_option("--algebra", algebra_path)->required();
  sc_spectrum->add_option("--context", context_path,
                          "contexts file for the global-section search");

  auto* sc_census = app.add_subcommand("census",
                                       "classify all multiplications");
  sc_census->add_option("--size", census_size)->required();

  auto* sc_demo = app.add_subcommand(
      "demo", "build a group-union algebra and run the full pipeline");
  sc_demo->add_option("--groups", groups_spec, "e.g. z2,z3")->required();

  // let --budget/--json/--out appear after the subcommand name as well
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  RunReport r;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (sc_validate->parsed()) {
      r.command = "validate-semiring";
      const SemiringPtr sr = semiring_from_json(load_input(r, semiring_path));
      const ValidationReport rep = sr->validate();
      for (const AxiomCheck& c : rep.checks)
        r.check("semiring." + c.axiom, c.pass, c.witness);
      r.result = validation_report_to_json(rep);
    } else if (sc_check->parsed()) {
      r.command = "check";
      const DaggerAlgebra alg = algebra_from_json(load_input(r, algebra_path));
      const AxiomReport rep = check_axioms(alg, budget);
      r.check("algebra.associative", rep.associative.pass, rep.associative.witness);
      r.check("algebra.commutative", rep.commutative.pass, rep.commutative.witness);
      r.check("algebra.special", rep.special.pass, rep.special.witness);
      r.check("algebra.h_adjoints", rep.h.pass, rep.h.witness);
      r.result = axiom_report_to_json(rep);
    } else if (sc_setlike->parsed()) {
      r.command = "setlike";
      const DaggerAlgebra alg = algebra_from_json(load_input(r, algebra_path));
      const SetLikeFamily fam = set_like_elements(alg, false, budget);
      r.check("setlike.orthonormal", fam.orthonormal);
      r.check("setlike.partner_is_star", fam.partners_match_star);
      r.check("setlike.covering", is_covering(fam.elements, alg.x, budget));
      json elems = json::array();
      for (const Mor& a : fam.elements) elems.push_back(mor_to_json(a));
      r.result = {{"dimension", fam.dimension()}, {"elements", elems}};
    } else if (sc_commutant->parsed()) {
      r.command = "commutant";
      const DaggerAlgebra alg = algebra_from_json(load_input(r, algebra_path));
      const Subsemialgebra c =
          commutant(basis_right_mults(alg), alg.x, alg.sr, budget);
      r.check("commutant.computed", true);
      r.result = subsemialgebra_to_json(c);
    } else if (sc_vn->parsed()) {
      r.command = "vn";
      const DaggerAlgebra alg = algebra_from_json(load_input(r, algebra_path));
      const Subsemialgebra vn = generated_vn(alg, budget);
      const bool is_vn = is_von_neumann(vn, budget);
      const bool is_max = is_maximal(vn, budget);
      r.check("vn.double_commutant", is_vn);
      r.check("vn.maximal", is_max);
      r.result = subsemialgebra_to_json(vn, is_vn, is_max);
    } else if (sc_decompose->parsed()) {
      r.command = "decompose";
      const DaggerAlgebra alg = algebra_from_json(load_input(r, algebra_path));
      const Decomposition dec = decompose(alg, budget, budget);
      r.check("decompose.reconstruction", true);
      r.result = decomposition_to_json(dec);
    } else if (sc_extract->parsed()) {
      r.command = "extract-groups";
      const DaggerAlgebra alg = algebra_from_json(load_input(r, algebra_path));
      const Decomposition dec = decompose(alg, budget, budget);
      const std::vector<GroupTable> groups = rel_extract_groups(dec);
      r.check("components.abelian_groups", true);
      r.result = groups_to_json(groups);
      json forms = json::array();
      for (const GroupTable& g : groups)
        forms.push_back(canonical_form_str(abelian_canonical_form(g)));
      r.result["canonical_forms"] = forms;
    } else if (sc_spectrum->parsed()) {
      r.command = "spectrum";
      const DaggerAlgebra alg = algebra_from_json(load_input(r, algebra_path));
      if (context_path.empty()) {
        const Subsemialgebra vn = generated_vn(alg, budget);
        const std::vector<Character> chars = characters(vn, budget);
        r.check("spectrum.characters_verified", true);
        r.result = characters_to_json(chars);
      } else {
        const json ctx_json = load_input(r, context_path);
        std::vector<Subsemialgebra> contexts;
        for (const json& c : ctx_json.at("contexts"))
          contexts.push_back(context_from_json(alg.sr, alg.x, c, budget));
        const auto sections = global_sections(contexts, budget);
        r.check("spectrum.characters_verified", true);
        json per_context = json::array();
        for (const Subsemialgebra& c : contexts)
          per_context.push_back(characters_to_json(characters(c, budget)));
        r.result = {{"contexts", per_context},
                    {"global_sections", sections.size()}};
      }
    } else if (sc_census->parsed()) {
      r.command = "census";
      const CensusResult res = census(census_size, budget);
      r.check("census.group_unions", res.all_group_unions);
      json classes = json::array();
      for (const CensusClass& c : res.classes)
        classes.push_back({{"class", c.name}, {"count", c.count}});
      r.result = {{"dim", res.dim},
                  {"symmetric_enumeration", res.symmetric_enumeration},
                  {"stages",
                   {{"enumerated", res.stages.enumerated},
                    {"pass_c", res.stages.pass_c},
                    {"pass_s", res.stages.pass_s},
                    {"pass_a", res.stages.pass_a},
                    {"pass_setlike", res.stages.pass_setlike},
                    {"pass_h", res.stages.pass_h}}},
                  {"classes", classes}};
    } else if (sc_demo->parsed()) {
      r.command = "demo";
      std::vector<GroupTable> groups;
      std::stringstream ss(groups_spec);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) groups.push_back(parse_group_spec(item));
      if (groups.empty()) throw input_error("no groups given");
      const DaggerAlgebra alg = make_rel_group_algebra(groups);
      const AxiomReport rep = check_axioms(alg, budget);
      r.check("algebra.hstar", rep.hstar(),
              rep.hstar() ? "" : "axiom check failed");
      const Decomposition dec = decompose(alg, budget, budget);
      const std::vector<GroupTable> extracted = rel_extract_groups(dec);
      std::vector<std::string> in_forms, out_forms;
      for (const GroupTable& g : groups)
        in_forms.push_back(canonical_form_str(abelian_canonical_form(g)));
      for (const GroupTable& g : extracted)
        out_forms.push_back(canonical_form_str(abelian_canonical_form(g)));
      std::sort(in_forms.begin(), in_forms.end());
      std::sort(out_forms.begin(), out_forms.end());
      r.check("demo.roundtrip", in_forms == out_forms);
      // evaluation at each set-like element is a verified character on the
      // closure of the basis right multiplications (enumerable at any dim)
      const Subsemialgebra vn = closure(basis_right_mults(alg), true, budget);
      const SetLikeFamily fam = set_like_elements(alg, false, budget);
      bool chars_ok = true;
      std::string char_witness;
      for (const Mor& a : fam.elements) {
        try {
          rho_from_setlike(alg, a, vn);
        } catch (const check_failure& e) {
          chars_ok = false;
          char_witness = e.what();
          break;
        }
      }
      r.check("demo.setlike_characters", chars_ok, char_witness);
      r.result = {{"algebra", algebra_to_json(alg)},
                  {"components", out_forms}};
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const check_failure& e) {
    r.check("check_failure", false,
            std::string(e.what()) +
                (e.witness.empty() ? "" : "; " + e.witness));
  } catch (const precondition_error& e) {
    r.check("precondition", false,
            std::string(e.what()) +
                (e.witness.empty() ? "" : "; " + e.witness));
  }
  r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  try {
    emit(r, as_json, out_path);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return r.all_pass() ? 0 : 1;
}
