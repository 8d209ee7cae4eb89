#include "pathgpd/io.hpp"

#include <filesystem>
#include <fstream>

namespace pathgpd {

namespace {

const json& need(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

int need_int(const json& j, const char* key, const char* what, int lo, int hi) {
  const auto& v = need(j, key, what);
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + ": field '" + key + "' is not an integer");
  int x = v.get<int>();
  if (x < lo || x >= hi)
    throw ParseError(std::string(what) + ": field '" + key + "' value " + std::to_string(x) +
                     " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
  return x;
}

std::vector<int> int_array(const json& v, const char* what, int lo, int hi) {
  if (!v.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw ParseError(std::string(what) + ": non-integer entry");
    int x = e.get<int>();
    if (x < lo || x >= hi)
      throw ParseError(std::string(what) + ": entry " + std::to_string(x) + " out of range");
    out.push_back(x);
  }
  return out;
}

void check_format(const json& j, const char* tag, const char* what) {
  const auto& f = need(j, "format", what);
  if (!f.is_string() || f.get<std::string>() != tag)
    throw ParseError(std::string(what) + ": expected format '" + tag + "'");
}

} // namespace

json groupoid_to_json(const FiniteGroupoid& g) {
  json j;
  j["format"] = "groupoid/1";
  j["objects"] = json::array();
  for (int o = 0; o < g.num_objects(); ++o) j["objects"].push_back(g.object_name(o));
  j["morphisms"] = json::array();
  for (int m = 0; m < g.num_morphisms(); ++m)
    j["morphisms"].push_back({{"id", m}, {"src", g.src(m)}, {"dst", g.dst(m)}});
  j["identities"] = g.identity;
  j["compose"] = json::array();
  for (int m = 0; m < g.num_morphisms(); ++m)
    for (int f : g.morphisms_into(g.src(m))) j["compose"].push_back({m, f, g.compose(m, f)});
  j["inverse"] = g.inverse;
  return j;
}

GroupoidPtr groupoid_from_json(const json& j) {
  check_format(j, "groupoid/1", "groupoid");
  auto g = std::make_shared<FiniteGroupoid>();
  const auto& objs = need(j, "objects", "groupoid");
  if (!objs.is_array()) throw ParseError("groupoid: 'objects' is not an array");
  for (const auto& o : objs) {
    if (!o.is_string()) throw ParseError("groupoid: object names must be strings");
    g->object_names.push_back(o.get<std::string>());
  }
  const int n = static_cast<int>(g->object_names.size());
  const auto& mors = need(j, "morphisms", "groupoid");
  if (!mors.is_array()) throw ParseError("groupoid: 'morphisms' is not an array");
  for (const auto& m : mors) {
    int id = need_int(m, "id", "morphism", 0, static_cast<int>(mors.size()));
    if (id != static_cast<int>(g->morphisms.size()))
      throw ParseError("groupoid: morphism ids must be 0..n-1 in order, got " + std::to_string(id));
    g->morphisms.push_back(
        {need_int(m, "src", "morphism", 0, n), need_int(m, "dst", "morphism", 0, n)});
  }
  const int nm = g->num_morphisms();
  g->identity = int_array(need(j, "identities", "groupoid"), "groupoid identities", 0, nm);
  if (static_cast<int>(g->identity.size()) != n)
    throw ParseError("groupoid: 'identities' must list one morphism per object");
  g->inverse = int_array(need(j, "inverse", "groupoid"), "groupoid inverse", 0, nm);
  if (static_cast<int>(g->inverse.size()) != nm)
    throw ParseError("groupoid: 'inverse' must list one morphism per morphism");
  g->reserve_composites();
  const auto& comp = need(j, "compose", "groupoid");
  if (!comp.is_array()) throw ParseError("groupoid: 'compose' is not an array");
  for (const auto& t : comp) {
    auto triple = int_array(t, "compose triple", 0, nm);
    if (triple.size() != 3) throw ParseError("groupoid: compose entries must be [g, f, gf]");
    if (g->src(triple[0]) != g->dst(triple[1]))
      throw ParseError("groupoid: compose triple [" + std::to_string(triple[0]) + ", " +
                       std::to_string(triple[1]) + ", ...] is not composable");
    g->set_composite(triple[0], triple[1], triple[2]);
  }
  g->finalize();
  // missing composites are structural defects; surface them at parse time
  for (int m = 0; m < nm; ++m)
    for (int f : g->morphisms_into(g->src(m)))
      if (g->compose(m, f) < 0)
        throw ParseError("groupoid: missing composite for the composable pair (" +
                         std::to_string(m) + ", " + std::to_string(f) + ")");
  return g;
}

json map_to_json(const GroupoidMap& f) {
  json j;
  j["format"] = "functor/1";
  j["domain"] = groupoid_to_json(*f.dom);
  j["codomain"] = groupoid_to_json(*f.cod);
  j["object_map"] = f.object_map;
  j["morphism_map"] = f.morphism_map;
  return j;
}

namespace {

GroupoidPtr side_groupoid(const json& v, const std::string& base_dir, const char* what) {
  if (v.is_string()) {
    auto path = std::filesystem::path(base_dir) / v.get<std::string>();
    return groupoid_from_json(load_json_file(path.string()));
  }
  if (v.is_object()) return groupoid_from_json(v);
  throw ParseError(std::string(what) + ": expected an inline groupoid or a file path");
}

} // namespace

GroupoidMap map_from_json(const json& j, const std::string& base_dir) {
  check_format(j, "functor/1", "functor");
  GroupoidMap f;
  f.dom = side_groupoid(need(j, "domain", "functor"), base_dir, "functor domain");
  f.cod = side_groupoid(need(j, "codomain", "functor"), base_dir, "functor codomain");
  f.object_map =
      int_array(need(j, "object_map", "functor"), "functor object_map", 0, f.cod->num_objects());
  f.morphism_map = int_array(need(j, "morphism_map", "functor"), "functor morphism_map", 0,
                             f.cod->num_morphisms());
  if (static_cast<int>(f.object_map.size()) != f.dom->num_objects())
    throw ParseError("functor: object_map length does not match the domain");
  if (static_cast<int>(f.morphism_map.size()) != f.dom->num_morphisms())
    throw ParseError("functor: morphism_map length does not match the domain");
  return f;
}

json group_to_json(const FiniteGroup& g) {
  json j;
  j["format"] = "group/1";
  j["elements"] = json::array();
  for (int e = 0; e < g.order(); ++e) j["elements"].push_back(g.element_name(e));
  j["table"] = g.table;
  j["identity"] = g.identity;
  return j;
}

FiniteGroup group_from_json(const json& j) {
  check_format(j, "group/1", "group");
  FiniteGroup g;
  const auto& els = need(j, "elements", "group");
  if (!els.is_array()) throw ParseError("group: 'elements' is not an array");
  for (const auto& e : els) {
    if (!e.is_string()) throw ParseError("group: element names must be strings");
    g.element_names.push_back(e.get<std::string>());
  }
  const int n = static_cast<int>(g.element_names.size());
  const auto& table = need(j, "table", "group");
  if (!table.is_array() || static_cast<int>(table.size()) != n)
    throw ParseError("group: 'table' must be an n×n array");
  for (const auto& row : table) g.table.push_back(int_array(row, "group table row", 0, n));
  for (const auto& row : g.table)
    if (static_cast<int>(row.size()) != n) throw ParseError("group: 'table' must be an n×n array");
  g.identity = need_int(j, "identity", "group", 0, n);
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table[a][b] == g.identity && g.table[b][a] == g.identity) g.inverse[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inverse[a] < 0) throw ParseError("group: element " + std::to_string(a) + " has no inverse");
  auto bad = validate_group(g);
  if (!bad.empty()) throw ParseError("group: " + bad.front().law + ": " + bad.front().detail);
  return g;
}

json square_to_json(const LiftingProblem& p) {
  json j;
  j["format"] = "square/1";
  j["m"] = map_to_json(p.m);
  j["f"] = map_to_json(p.f);
  j["top"] = map_to_json(p.top);
  j["bottom"] = map_to_json(p.bottom);
  return j;
}

LiftingProblem square_from_json(const json& j, const std::string& base_dir) {
  check_format(j, "square/1", "square");
  LiftingProblem p;
  p.m = map_from_json(need(j, "m", "square"), base_dir);
  p.f = map_from_json(need(j, "f", "square"), base_dir);
  p.top = map_from_json(need(j, "top", "square"), base_dir);
  p.bottom = map_from_json(need(j, "bottom", "square"), base_dir);
  return p;
}

json natiso_to_json(const NaturalIso& h) {
  json j;
  j["format"] = "homotopy/1";
  j["source"] = map_to_json(h.source);
  j["target"] = map_to_json(h.target);
  j["components"] = h.components;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

} // namespace pathgpd
