#include "crit2/groupio.hpp"

#include <fstream>

#include "crit2/extension.hpp"
#include "crit2/named.hpp"

namespace crit2 {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Err::malformed, what); }

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

uint32_t uint_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) bad(std::string("field \"") + key + "\" must be a nonnegative integer");
  uint64_t u = v.get<uint64_t>();
  if (u > 0xFFFFFFFFull) bad(std::string("field \"") + key + "\" out of range");
  return uint32_t(u);
}

std::vector<int> word_from_json(const json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of signed generator indices");
  std::vector<int> w;
  for (const auto& e : v) {
    if (!e.is_number_integer()) bad(std::string(what) + " entries must be integers");
    int64_t x = e.get<int64_t>();
    if (x == 0 || x > 0xFFFF || x < -0xFFFF) bad(std::string(what) + " entries must be nonzero 1-based indices");
    w.push_back(int(x));
  }
  return w;
}

Group from_json_inner(const json& j, const Caps& caps) {
  if (!j.is_object()) bad("group spec must be a JSON object");
  std::string name = "group";
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) bad("field \"name\" must be a string");
    name = it->get<std::string>();
  }
  const json& fmt = field(j, "format");
  if (!fmt.is_string()) bad("field \"format\" must be a string");
  std::string f = fmt.get<std::string>();

  if (f == "perm") {
    uint32_t degree = uint_field(j, "degree");
    const json& gj = field(j, "generators");
    if (!gj.is_array()) bad("field \"generators\" must be an array of image arrays");
    std::vector<std::vector<uint32_t>> gens;
    for (const auto& one : gj) {
      if (!one.is_array()) bad("each generator must be an array of 1-based images");
      std::vector<uint32_t> im;
      for (const auto& e : one) {
        if (!e.is_number_unsigned()) bad("permutation images must be positive integers");
        im.push_back(e.get<uint32_t>());
      }
      gens.push_back(std::move(im));
    }
    return from_permutation_generators(degree, gens, name, caps);
  }

  if (f == "cayley") {
    const json& tj = field(j, "table");
    if (!tj.is_array()) bad("field \"table\" must be an array of rows");
    std::vector<std::vector<Elt>> table;
    for (const auto& row : tj) {
      if (!row.is_array()) bad("each table row must be an array");
      std::vector<Elt> r;
      for (const auto& e : row) {
        if (!e.is_number_unsigned()) bad("table entries must be element ids");
        r.push_back(e.get<Elt>());
      }
      table.push_back(std::move(r));
    }
    return from_cayley_table(table, name, caps);
  }

  if (f == "named") {
    const json& fj = field(j, "family");
    if (!fj.is_string()) bad("field \"family\" must be a string");
    std::vector<uint32_t> params;
    if (auto it = j.find("params"); it != j.end()) {
      if (!it->is_array()) bad("field \"params\" must be an array of integers");
      for (const auto& e : *it) {
        if (!e.is_number_unsigned()) bad("params must be nonnegative integers");
        params.push_back(e.get<uint32_t>());
      }
    }
    return named_group(fj.get<std::string>(), params, name, caps);
  }

  if (f == "extension") {
    Group base = from_json_inner(field(j, "base"), caps);
    const json& sj = field(j, "steps");
    if (!sj.is_array()) bad("field \"steps\" must be an array");
    std::vector<ExtensionStep> steps;
    for (const auto& st : sj) {
      if (!st.is_object()) bad("each step must be an object");
      ExtensionStep s;
      s.index = uint_field(st, "index");
      const json& pj = field(st, "phi");
      if (!pj.is_array()) bad("step field \"phi\" must be an array of words");
      for (const auto& w : pj) s.phi.push_back(word_from_json(w, "phi word"));
      if (auto it = st.find("power"); it != st.end())
        s.power = word_from_json(*it, "power word");
      steps.push_back(std::move(s));
    }
    return build_extension(base, steps, name, caps);
  }

  bad("unknown format \"" + f + "\"");
}

}  // namespace

Group group_from_json(const json& j, const Caps& caps) { return from_json_inner(j, caps); }

Group read_group_file(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw Error(Err::io, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Err::malformed, path + ": " + e.what());
  }
  try {
    return from_json_inner(j, caps);
  } catch (Error& e) {
    throw Error(e.kind, path + ": " + e.what());
  }
}

json group_to_json(const Group& g) {
  json j;
  j["name"] = g.name;
  const Provenance& p = g.prov;
  if (p.kind == "perm" && p.degree > 0 && !p.perm_gens.empty()) {
    j["format"] = "perm";
    j["degree"] = p.degree;
    json gens = json::array();
    for (const Perm& pm : p.perm_gens) {
      json im = json::array();
      for (uint16_t x : pm) im.push_back(x + 1);
      gens.push_back(std::move(im));
    }
    j["generators"] = std::move(gens);
    return j;
  }
  if (p.kind == "named" && !p.family.empty()) {
    j["format"] = "named";
    j["family"] = p.family;
    j["params"] = p.params;
    return j;
  }
  if (p.kind == "extension" && p.ext_base) {
    j["format"] = "extension";
    json base = group_to_json(*p.ext_base);
    base.erase("name");
    j["base"] = std::move(base);
    json steps = json::array();
    for (const ExtensionStep& s : p.ext_steps) {
      json st;
      st["index"] = s.index;
      st["phi"] = s.phi;
      st["power"] = s.power;
      steps.push_back(std::move(st));
    }
    j["steps"] = std::move(steps);
    return j;
  }
  j["format"] = "cayley";
  json table = json::array();
  for (uint32_t a = 0; a < g.n; a++) {
    json row = json::array();
    for (uint32_t b = 0; b < g.n; b++) row.push_back(g.mul[a * g.n + b]);
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

void write_group_file(const Group& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Err::io, "cannot open " + path + " for writing");
  out << group_to_json(g).dump(1) << "\n";
  if (!out) throw Error(Err::io, "write failed: " + path);
}

}  // namespace crit2
