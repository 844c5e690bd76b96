#include "hstarcat/io.hpp"

#include <fstream>

namespace hstarcat {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.contains(key))
    throw input_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

SemiringPtr semiring_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "boolean") return SemiringDef::boolean();
  if (kind == "nat") return SemiringDef::nat();
  if (kind != "table") throw input_error("unknown semiring kind '" + kind + "'");

  const auto carrier = field(j, "carrier").get<std::vector<std::string>>();
  auto index_of = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < carrier.size(); ++i)
      if (carrier[i] == name) return i;
    throw input_error("'" + name + "' is not a carrier element");
  };
  auto read_table = [&](const json& t) {
    std::vector<std::vector<std::size_t>> out;
    for (const json& row : t) {
      std::vector<std::size_t> r;
      for (const json& cell : row) r.push_back(index_of(cell.get<std::string>()));
      out.push_back(std::move(r));
    }
    return out;
  };
  std::vector<std::size_t> star;
  for (const json& cell : field(j, "star"))
    star.push_back(index_of(cell.get<std::string>()));
  return SemiringDef::table(carrier, read_table(field(j, "add")),
                            read_table(field(j, "mul")),
                            index_of(field(j, "zero").get<std::string>()),
                            index_of(field(j, "one").get<std::string>()),
                            std::move(star));
}

json semiring_to_json(const SemiringPtr& sr) {
  switch (sr->kind()) {
    case SemiringKind::boolean:
      return {{"kind", "boolean"}};
    case SemiringKind::nat:
      return {{"kind", "nat"}};
    case SemiringKind::table:
      break;
  }
  json j{{"kind", "table"}};
  const std::size_t n = sr->size();
  std::vector<std::string> carrier;
  for (std::size_t i = 0; i < n; ++i) carrier.push_back(sr->name(sr->element(i)));
  json add = json::array(), mul = json::array(), star = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json ra = json::array(), rm = json::array();
    for (std::size_t b = 0; b < n; ++b) {
      ra.push_back(sr->name(sr->add(sr->element(a), sr->element(b))));
      rm.push_back(sr->name(sr->mul(sr->element(a), sr->element(b))));
    }
    add.push_back(ra);
    mul.push_back(rm);
    star.push_back(sr->name(sr->star(sr->element(a))));
  }
  j["carrier"] = carrier;
  j["add"] = add;
  j["mul"] = mul;
  j["star"] = star;
  j["zero"] = sr->name(sr->zero());
  j["one"] = sr->name(sr->one());
  return j;
}

Mor mor_from_json(const SemiringPtr& sr, const json& j) {
  const std::size_t dom = field(j, "dom").get<std::size_t>();
  const std::size_t cod = field(j, "cod").get<std::size_t>();
  const json& rows = field(j, "entries");
  if (rows.size() != cod) throw input_error("entries: wrong row count");
  std::vector<Scalar> e;
  e.reserve(cod * dom);
  for (const json& row : rows) {
    if (row.size() != dom) throw input_error("entries: wrong column count");
    for (const json& cell : row) e.push_back(sr->parse(cell.get<std::string>()));
  }
  return Mor(sr, Obj{cod}, Obj{dom}, std::move(e));
}

json mor_to_json(const Mor& f) {
  json rows = json::array();
  for (std::size_t i = 0; i < f.cod().dim; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.dom().dim; ++j)
      row.push_back(f.sr()->name(f.at(i, j)));
    rows.push_back(row);
  }
  return {{"dom", f.dom().dim}, {"cod", f.cod().dim}, {"entries", rows}};
}

DaggerAlgebra algebra_from_json(const json& j) {
  SemiringPtr sr = semiring_from_json(field(j, "semiring"));
  const std::size_t dim = field(j, "dim").get<std::size_t>();
  const json& rows = field(j, "mu");
  if (rows.size() != dim) throw input_error("mu: wrong row count");
  std::vector<Scalar> e;
  e.reserve(dim * dim * dim);
  for (const json& row : rows) {
    if (row.size() != dim * dim) throw input_error("mu: wrong column count");
    for (const json& cell : row) e.push_back(sr->parse(cell.get<std::string>()));
  }
  return DaggerAlgebra(sr, Obj{dim},
                       Mor(sr, Obj{dim}, Obj{dim * dim}, std::move(e)));
}

json algebra_to_json(const DaggerAlgebra& alg) {
  json rows = json::array();
  for (std::size_t i = 0; i < alg.x.dim; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < alg.x.dim * alg.x.dim; ++j)
      row.push_back(alg.sr->name(alg.mu.at(i, j)));
    rows.push_back(row);
  }
  return {{"semiring", semiring_to_json(alg.sr)},
          {"dim", alg.x.dim},
          {"mu", rows}};
}

std::vector<GroupTable> groups_from_json(const json& j) {
  std::vector<GroupTable> out;
  for (const json& g : field(j, "groups")) {
    GroupTable t;
    t.table = field(g, "table").get<std::vector<std::vector<std::size_t>>>();
    if (g.contains("order") &&
        g.at("order").get<std::size_t>() != t.order())
      throw input_error("group order does not match its table");
    out.push_back(std::move(t));
  }
  return out;
}

json groups_to_json(const std::vector<GroupTable>& groups) {
  json arr = json::array();
  for (const GroupTable& g : groups)
    arr.push_back({{"order", g.order()}, {"table", g.table}});
  return {{"groups", arr}};
}

json validation_report_to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const AxiomCheck& c : report.checks)
    checks.push_back({{"axiom", c.axiom}, {"pass", c.pass},
                      {"witness", c.witness}});
  return {{"checks", checks},
          {"flags",
           {{"commutative", report.flags.commutative},
            {"zero_sum_free", report.flags.zero_sum_free},
            {"no_zero_divisors", report.flags.no_zero_divisors},
            {"trivial_involution", report.flags.trivial_involution}}},
          {"all_pass", report.all_pass()}};
}

json axiom_report_to_json(const AxiomReport& report) {
  auto one = [](const char* name, const AxiomResult& r) {
    return json{{"axiom", name}, {"pass", r.pass}, {"witness", r.witness}};
  };
  json j;
  j["checks"] = {one("A", report.associative), one("C", report.commutative),
                 one("S", report.special), one("U", report.unital),
                 one("H", report.h)};
  j["hstar"] = report.hstar();
  if (report.unit) j["unit"] = mor_to_json(*report.unit);
  return j;
}

json subsemialgebra_to_json(const Subsemialgebra& a,
                            std::optional<bool> von_neumann,
                            std::optional<bool> maximal) {
  json elems = json::array();
  for (const Mor& f : a.elements) elems.push_back(mor_to_json(f));
  json flags{{"unital", a.unital}};
  if (a.commutative) flags["commutative"] = *a.commutative;
  if (von_neumann) flags["von_neumann"] = *von_neumann;
  if (maximal) flags["maximal"] = *maximal;
  return {{"dim", a.carrier.dim},
          {"size", a.elements.size()},
          {"flags", flags},
          {"elements", elems}};
}

json decomposition_to_json(const Decomposition& dec) {
  json comps = json::array();
  for (const Component& c : dec.components) {
    json comp;
    std::vector<std::size_t> coords;
    for (std::size_t j = 0; j < c.k.dom().dim; ++j)
      for (std::size_t i = 0; i < c.k.cod().dim; ++i)
        if (c.k.at(i, j) != dec.algebra.sr->zero()) coords.push_back(i);
    comp["coordinates"] = coords;
    comp["dim"] = c.x_i.dim;
    comp["alpha"] = mor_to_json(c.alpha);
    comp["mu_i"] = mor_to_json(c.mu_i);
    if (dec.algebra.sr->kind() == SemiringKind::boolean) {
      try {
        Decomposition single{dec.algebra, {c}};
        const auto tables = rel_extract_groups(single);
        comp["group_table"] = tables.front().table;
        comp["group"] = canonical_form_str(
            abelian_canonical_form(tables.front()));
      } catch (const check_failure&) {
        // component is not a group; omit the table
      }
    }
    comps.push_back(std::move(comp));
  }
  return {{"dim", dec.algebra.x.dim}, {"components", comps}};
}

json characters_to_json(const std::vector<Character>& chars) {
  json arr = json::array();
  for (const Character& rho : chars) {
    json values = json::array();
    for (std::size_t i = 0; i < rho.values.size(); ++i)
      values.push_back(rho.algebra->sr->name(rho.values[i]));
    arr.push_back({{"values", values}});
  }
  return {{"count", chars.size()}, {"characters", arr}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw input_error("parse error in '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace hstarcat
