#include "unital/cli/spec_file.hpp"

#include <algorithm>
#include <set>

#include "unital/errors.hpp"

namespace unital::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError((path.empty() ? std::string("/") : path) + ": " + msg);
}

void only_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : j.items())
    if (!allowed.contains(k)) fail(path, "unknown field \"" + k + "\"");
}

const json& object_at(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

Int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<Int>();
}

std::size_t natural(const json& j, const std::string& path) {
  const Int v = integer(j, path);
  if (v < 0) fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> naturals(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(natural(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<FiniteGroup::Elem> elems(const json& j, const std::string& path) {
  std::vector<FiniteGroup::Elem> out;
  for (std::size_t v : naturals(j, path)) {
    if (v > 0xffffffffu) fail(path, "element index out of range");
    out.push_back(static_cast<FiniteGroup::Elem>(v));
  }
  return out;
}

std::vector<std::vector<FiniteGroup::Elem>> elem_rows(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  std::vector<std::vector<FiniteGroup::Elem>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(elems(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<std::vector<Int>> int_rows(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (!j[i].is_array()) fail(p, "expected a row");
    std::vector<Int> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(integer(j[i][k], p + "/" + std::to_string(k)));
    out.push_back(std::move(row));
  }
  return out;
}

std::set<std::string> group_names(const std::string& kind) {
  if (kind == "complex2") return {"A", "B"};
  if (kind == "complex3") return {"A", "B", "C"};
  return {"G", "H"};
}

std::set<std::string> map_names(const std::string& kind) {
  if (kind == "complex2") return {"lambda"};
  if (kind == "complex3") return {"delta", "lambda"};
  return {};
}

GroupSpec group_or_trivial(const ComplexSpecFile& spec, const std::string& name) {
  const auto it = spec.groups.find(name);
  return it == spec.groups.end() ? GroupSpec{} : it->second;
}

std::vector<std::vector<Int>> map_or_zero(const ComplexSpecFile& spec, const std::string& name, std::size_t rows,
                                          std::size_t cols) {
  const auto it = spec.maps.find(name);
  if (it != spec.maps.end()) return it->second;
  return std::vector<std::vector<Int>>(rows, std::vector<Int>(cols, 0));
}

FiniteGroup finite_group(const GroupSpec& g, const std::string& name) {
  if (g.table.empty()) return FiniteGroup();
  try {
    return FiniteGroup(g.table, name);
  } catch (const InputError& e) {
    fail("/groups/" + name + "/table", e.what());
  }
}

}  // namespace

// ---- groups in user coordinates ----

PresentedGroup::PresentedGroup(const GroupSpec& spec) {
  moduli_ = spec.inv;
  moduli_.resize(spec.inv.size() + spec.free, 0);
  for (Int m : spec.inv)
    if (m < 0) throw InputError("negative cyclic order " + std::to_string(m));
  const std::size_t s = moduli_.size();
  if (s == 0) {
    cq_ = {FgAbGroup(), IntMatrix(0, 0), IntMatrix(0, 0)};
    return;
  }
  IntMatrix rel(s, spec.inv.size());
  for (std::size_t i = 0; i < spec.inv.size(); ++i) rel(i, i) = spec.inv[i];
  cq_ = canonical_quotient(rel);
}

Coords PresentedGroup::to_canonical(const Coords& user) const {
  if (user.size() != moduli_.size()) throw GroupMismatch("element has the wrong number of coordinates");
  return group().normalize(cq_.to_canonical * std::span<const Int>(user));
}

Coords PresentedGroup::to_user(const Coords& canonical) const {
  group().check_shape(canonical);
  Coords u = cq_.from_canonical * std::span<const Int>(canonical);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (moduli_[i]) u[i] = mod_floor(u[i], moduli_[i]);
  return u;
}

GroupHom presented_hom(const PresentedGroup& source, const PresentedGroup& target,
                       const std::vector<std::vector<Int>>& rows, const std::string& path) {
  const std::size_t s = source.user_generators(), t = target.user_generators();
  if (rows.size() != t)
    fail(path, "expected " + std::to_string(t) + " rows (one per target generator), got " + std::to_string(rows.size()));
  IntMatrix m(t, s);
  for (std::size_t i = 0; i < t; ++i) {
    if (rows[i].size() != s)
      fail(path + "/" + std::to_string(i), "expected " + std::to_string(s) + " entries, got " + std::to_string(rows[i].size()));
    for (std::size_t j = 0; j < s; ++j) m(i, j) = target.modulus(i) ? mod_floor(rows[i][j], target.modulus(i)) : rows[i][j];
  }
  for (std::size_t j = 0; j < s; ++j) {
    const Int order = source.modulus(j);
    if (order == 0) continue;
    for (std::size_t i = 0; i < t; ++i) {
      const Int v = checked_mul(m(i, j), order);
      const Int tm = target.modulus(i);
      if (tm ? v % tm != 0 : v != 0)
        throw IllDefinedHom(path + ": ill-defined hom, generator " + std::to_string(j) + " of order " +
                            std::to_string(order) + " has coordinate " + std::to_string(i) + " = " +
                            std::to_string(m(i, j)) + " of incompatible order");
    }
  }
  const IntMatrix canon = target.quotient().to_canonical * m * source.quotient().from_canonical;
  return GroupHom(source.group(), target.group(), canon);
}

Complex2 to_complex2(const ComplexSpecFile& spec) {
  if (spec.kind != "complex2") throw InputError("expected kind complex2, got " + spec.kind);
  const PresentedGroup a(group_or_trivial(spec, "A")), b(group_or_trivial(spec, "B"));
  return Complex2(presented_hom(a, b, map_or_zero(spec, "lambda", b.user_generators(), a.user_generators()),
                                "/maps/lambda"));
}

Complex3 to_complex3(const ComplexSpecFile& spec) {
  if (spec.kind != "complex3") throw InputError("expected kind complex3, got " + spec.kind);
  const PresentedGroup a(group_or_trivial(spec, "A")), b(group_or_trivial(spec, "B")), c(group_or_trivial(spec, "C"));
  const auto d = map_or_zero(spec, "delta", b.user_generators(), a.user_generators());
  const auto l = map_or_zero(spec, "lambda", c.user_generators(), b.user_generators());
  const GroupHom delta = presented_hom(a, b, d, "/maps/delta");
  const GroupHom lambda = presented_hom(b, c, l, "/maps/lambda");
  // composite in user coordinates, so the reported generator is the user's
  for (std::size_t j = 0; j < a.user_generators(); ++j)
    for (std::size_t i = 0; i < c.user_generators(); ++i) {
      Int v = 0;
      for (std::size_t k = 0; k < b.user_generators(); ++k) v = checked_add(v, checked_mul(l[i][k], d[k][j]));
      if (c.modulus(i) ? mod_floor(v, c.modulus(i)) != 0 : v != 0)
        throw InputError("/maps: composite nonzero at generator " + std::to_string(j));
    }
  return Complex3(delta, lambda);
}

CrossedModule to_crossed_module(const ComplexSpecFile& spec) {
  if (spec.kind != "crossed_module") throw InputError("expected kind crossed_module, got " + spec.kind);
  CrossedModule x{finite_group(group_or_trivial(spec, "G"), "G"), finite_group(group_or_trivial(spec, "H"), "H"),
                  spec.boundary, spec.action};
  if (x.boundary.empty()) x.boundary.assign(x.G.size(), 0);
  if (x.action.empty()) x.action = trivial_action(x.G, x.H);
  if (x.boundary.size() != x.G.size()) fail("/boundary", "expected one entry per element of G");
  for (auto v : x.boundary)
    if (v >= x.H.size()) fail("/boundary", "entry " + std::to_string(v) + " is not an element of H");
  if (x.action.size() != x.H.size()) fail("/action", "expected one row per element of H");
  for (std::size_t h = 0; h < x.action.size(); ++h) {
    if (x.action[h].size() != x.G.size()) fail("/action/" + std::to_string(h), "expected one entry per element of G");
    for (auto v : x.action[h])
      if (v >= x.G.size()) fail("/action/" + std::to_string(h), "entry " + std::to_string(v) + " is not an element of G");
  }
  return x;
}

// ---- covers ----

Cover parse_cover_json(const json& j, const std::string& path) {
  object_at(j, path);
  if (j.contains("builtin")) {
    only_keys(j, path, {"builtin", "arcs"});
    if (!j["builtin"].is_string()) fail(path + "/builtin", "expected a string");
    const auto b = j["builtin"].get<std::string>();
    if (b == "point") {
      if (j.contains("arcs")) fail(path + "/arcs", "only meaningful for the circle");
      return point_cover();
    }
    if (b == "circle") {
      const std::size_t arcs = j.contains("arcs") ? natural(j["arcs"], path + "/arcs") : 3;
      if (arcs < 3) fail(path + "/arcs", "a circle needs at least 3 arcs");
      return circle_cover(arcs);
    }
    fail(path + "/builtin", "unknown nerve \"" + b + "\" (expected point or circle)");
  }
  only_keys(j, path, {"parts", "intersections"});
  Cover c;
  if (!j.contains("parts") || !j["parts"].is_array()) fail(path + "/parts", "expected an array of names");
  for (std::size_t i = 0; i < j["parts"].size(); ++i) {
    if (!j["parts"][i].is_string()) fail(path + "/parts/" + std::to_string(i), "expected a string");
    c.parts.push_back(j["parts"][i].get<std::string>());
  }
  if (c.parts.empty()) fail(path + "/parts", "a cover needs at least one part");
  if (j.contains("intersections")) {
    const json& is = j["intersections"];
    if (!is.is_array()) fail(path + "/intersections", "expected an array");
    for (std::size_t k = 0; k < is.size(); ++k) {
      const std::string p = path + "/intersections/" + std::to_string(k);
      object_at(is[k], p);
      only_keys(is[k], p, {"parts", "components", "parents"});
      Intersection in;
      if (!is[k].contains("parts")) fail(p, "missing \"parts\"");
      in.parts = naturals(is[k]["parts"], p + "/parts");
      for (std::size_t v : in.parts)
        if (v >= c.parts.size()) fail(p + "/parts", "no part " + std::to_string(v));
      if (is[k].contains("components")) in.components = natural(is[k]["components"], p + "/components");
      if (is[k].contains("parents")) {
        const json& pj = is[k]["parents"];
        if (!pj.is_array()) fail(p + "/parents", "expected an array of rows");
        for (std::size_t r = 0; r < pj.size(); ++r)
          in.parents.push_back(naturals(pj[r], p + "/parents/" + std::to_string(r)));
      }
      c.intersections.push_back(std::move(in));
    }
  }
  return c;
}

Cover parse_cover(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("nerve file is not valid JSON: ") + e.what());
  }
  return parse_cover_json(j, "");
}

json to_json(const Cover& cover) {
  json is = json::array();
  for (const auto& in : cover.intersections) {
    json o{{"parts", in.parts}, {"components", in.components}};
    if (!in.parents.empty()) o["parents"] = in.parents;
    is.push_back(o);
  }
  return {{"parts", cover.parts}, {"intersections", is}};
}

// ---- input files ----

ComplexSpecFile parse_spec_json(const json& j) {
  object_at(j, "");
  only_keys(j, "", {"schema", "kind", "groups", "maps", "boundary", "action", "nerve"});
  ComplexSpecFile spec;
  if (!j.contains("schema")) fail("/schema", "missing schema version");
  spec.schema = static_cast<int>(integer(j["schema"], "/schema"));
  if (spec.schema != schema_version) fail("/schema", "unsupported schema " + std::to_string(spec.schema));
  if (!j.contains("kind") || !j["kind"].is_string()) fail("/kind", "expected complex2, complex3 or crossed_module");
  spec.kind = j["kind"].get<std::string>();
  if (spec.kind != "complex2" && spec.kind != "complex3" && spec.kind != "crossed_module")
    fail("/kind", "unknown kind \"" + spec.kind + "\"");
  const bool crossed = spec.kind == "crossed_module";

  if (j.contains("groups")) {
    object_at(j["groups"], "/groups");
    const auto names = group_names(spec.kind);
    for (const auto& [name, g] : j["groups"].items()) {
      const std::string p = "/groups/" + name;
      if (!names.contains(name)) fail(p, "no group named " + name + " in a " + spec.kind);
      object_at(g, p);
      GroupSpec gs;
      if (crossed) {
        only_keys(g, p, {"table"});
        if (!g.contains("table")) fail(p, "missing multiplication table");
        gs.table = elem_rows(g["table"], p + "/table");
      } else {
        only_keys(g, p, {"inv", "free"});
        if (g.contains("inv")) {
          if (!g["inv"].is_array()) fail(p + "/inv", "expected an array");
          for (std::size_t i = 0; i < g["inv"].size(); ++i) {
            const Int v = integer(g["inv"][i], p + "/inv/" + std::to_string(i));
            if (v < 0) fail(p + "/inv/" + std::to_string(i), "cyclic orders are nonnegative");
            gs.inv.push_back(v);
          }
        }
        if (g.contains("free")) gs.free = natural(g["free"], p + "/free");
      }
      spec.groups[name] = std::move(gs);
    }
  }
  if (j.contains("maps")) {
    object_at(j["maps"], "/maps");
    const auto names = map_names(spec.kind);
    for (const auto& [name, m] : j["maps"].items()) {
      if (!names.contains(name)) fail("/maps/" + name, "no map named " + name + " in a " + spec.kind);
      spec.maps[name] = int_rows(m, "/maps/" + name);
    }
  }
  if (j.contains("boundary") || j.contains("action")) {
    if (!crossed) fail("", "boundary and action belong to crossed modules");
    if (j.contains("boundary")) spec.boundary = elems(j["boundary"], "/boundary");
    if (j.contains("action")) spec.action = elem_rows(j["action"], "/action");
  }
  if (j.contains("nerve")) spec.nerve = parse_cover_json(j["nerve"], "/nerve");

  // semantic checks: maps well defined, λδ = 0, tables are groups
  if (spec.kind == "complex2") to_complex2(spec);
  else if (spec.kind == "complex3") to_complex3(spec);
  else to_crossed_module(spec);
  return spec;
}

ComplexSpecFile parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset to line and column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
  }
  return parse_spec_json(j);
}

json to_json(const ComplexSpecFile& spec) {
  json j{{"schema", spec.schema}, {"kind", spec.kind}};
  json groups = json::object();
  for (const auto& [name, g] : spec.groups) {
    json o = json::object();
    if (spec.kind == "crossed_module") {
      o["table"] = g.table;
    } else {
      o["inv"] = g.inv;
      if (g.free) o["free"] = g.free;
    }
    groups[name] = o;
  }
  j["groups"] = groups;
  json maps = json::object();
  for (const auto& [name, m] : spec.maps) maps[name] = m;
  j["maps"] = maps;
  if (!spec.boundary.empty()) j["boundary"] = spec.boundary;
  if (!spec.action.empty()) j["action"] = spec.action;
  if (spec.nerve) j["nerve"] = to_json(*spec.nerve);
  return j;
}

std::string print_spec(const ComplexSpecFile& spec) { return to_json(spec).dump(2) + "\n"; }

}  // namespace unital::cli
