#include "braceforge/brace_io.hpp"

#include <fstream>
#include <sstream>

#include "braceforge/errors.hpp"
#include "json.hpp"

namespace braceforge {

namespace {

using nlohmann::json;

json table_to_json(const std::vector<Elem>& table) {
  json arr = json::array();
  for (Elem e : table) arr.push_back(e);
  return arr;
}

std::vector<Elem> table_from_json(const json& arr, int order,
                                  const std::string& field) {
  if (!arr.is_array())
    throw ParseError(field + " must be an array");
  const std::size_t want =
      static_cast<std::size_t>(order) * static_cast<std::size_t>(order);
  if (arr.size() != want)
    throw ParseError(field + " has " + std::to_string(arr.size()) +
                     " entries, expected " + std::to_string(want));
  std::vector<Elem> table;
  table.reserve(want);
  for (const json& v : arr) {
    if (!v.is_number_integer())
      throw ParseError(field + " contains a non-integer entry");
    const std::int64_t x = v.get<std::int64_t>();
    if (x < 0 || x >= order)
      throw ParseError(field + " entry " + std::to_string(x) +
                       " out of range [0, " + std::to_string(order) + ")");
    table.push_back(static_cast<Elem>(x));
  }
  return table;
}

std::vector<Elem> subset_from_json(const json& arr, int order,
                                   const std::string& name) {
  if (!arr.is_array())
    throw ParseError("subset " + name + " must be an array");
  std::vector<Elem> elems;
  for (const json& v : arr) {
    if (!v.is_number_integer())
      throw ParseError("subset " + name + " contains a non-integer entry");
    const std::int64_t x = v.get<std::int64_t>();
    if (x < 0 || x >= order)
      throw ParseError("subset " + name + " entry out of range");
    elems.push_back(static_cast<Elem>(x));
  }
  return elems;
}

// Two-sided identity and inverses derived from a raw table; the follow-up
// build_brace run re-validates everything else.
GroupTable group_from_table(int order, const std::vector<Elem>& mul,
                            const std::string& who) {
  GroupTable g;
  g.order = order;
  g.mul = mul;
  g.label = who;
  g.identity = -1;
  for (Elem e = 0; e < order; ++e) {
    bool two_sided = true;
    for (Elem x = 0; x < order && two_sided; ++x)
      two_sided = g.op(e, x) == x && g.op(x, e) == x;
    if (two_sided) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0)
    throw DomainError(who + " table has no two-sided identity");
  g.inv.assign(static_cast<std::size_t>(order), -1);
  for (Elem x = 0; x < order; ++x) {
    for (Elem y = 0; y < order; ++y)
      if (g.op(x, y) == g.identity && g.op(y, x) == g.identity) {
        g.inv[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (g.inv[static_cast<std::size_t>(x)] < 0)
      throw DomainError(who + " table: element " + std::to_string(x) +
                        " has no two-sided inverse");
  }
  return g;
}

}  // namespace

BraceFile to_brace_file(const SkewBrace& br) {
  BraceFile file;
  file.label = br.label;
  file.order = br.order;
  file.dot_table = br.dot.mul;
  file.circle_table = br.circle.mul;
  return file;
}

SkewBrace from_brace_file(const BraceFile& file) {
  GroupTable dot = group_from_table(file.order, file.dot_table, "dot");
  GroupTable circle = group_from_table(file.order, file.circle_table, "circle");
  if (dot.identity != circle.identity)
    throw DomainError("dot identity " + std::to_string(dot.identity) +
                      " differs from circle identity " +
                      std::to_string(circle.identity));
  return build_brace(std::move(dot), std::move(circle), file.label);
}

std::string write_brace_json(const BraceFile& file) {
  json root;
  root["format_version"] = file.format_version;
  root["label"] = file.label;
  root["order"] = file.order;
  root["dot_table"] = table_to_json(file.dot_table);
  root["circle_table"] = table_to_json(file.circle_table);
  if (file.provenance) {
    json prov;
    prov["family"] = file.provenance->family;
    json params = json::object();
    for (const auto& [name, value] : file.provenance->params)
      params[name] = value;
    prov["params"] = params;
    json subsets = json::object();
    for (const auto& [name, elems] : file.provenance->subsets)
      subsets[name] = table_to_json(elems);
    prov["distinguished_subsets"] = subsets;
    root["provenance"] = prov;
  }
  return root.dump(2) + "\n";
}

BraceFile read_brace_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("top level must be an object");
  for (const char* field : {"format_version", "label", "order", "dot_table",
                            "circle_table"})
    if (!root.contains(field))
      throw ParseError(std::string("missing field ") + field);

  BraceFile file;
  if (!root["format_version"].is_number_integer())
    throw ParseError("format_version must be an integer");
  file.format_version = root["format_version"].get<int>();
  if (file.format_version != 1)
    throw ParseError("unsupported format_version " +
                     std::to_string(file.format_version));
  if (!root["label"].is_string()) throw ParseError("label must be a string");
  file.label = root["label"].get<std::string>();
  if (!root["order"].is_number_integer())
    throw ParseError("order must be an integer");
  const std::int64_t order = root["order"].get<std::int64_t>();
  if (order < 1 || order > (1 << 20))
    throw ParseError("order " + std::to_string(order) + " out of range");
  file.order = static_cast<int>(order);
  file.dot_table = table_from_json(root["dot_table"], file.order, "dot_table");
  file.circle_table =
      table_from_json(root["circle_table"], file.order, "circle_table");

  if (root.contains("provenance")) {
    const json& prov = root["provenance"];
    if (!prov.is_object()) throw ParseError("provenance must be an object");
    BraceProvenance p;
    if (!prov.contains("family") || !prov["family"].is_string())
      throw ParseError("provenance.family must be a string");
    p.family = prov["family"].get<std::string>();
    if (prov.contains("params")) {
      if (!prov["params"].is_object())
        throw ParseError("provenance.params must be an object");
      for (const auto& [name, value] : prov["params"].items()) {
        if (!value.is_string())
          throw ParseError("provenance.params." + name + " must be a string");
        p.params.emplace_back(name, value.get<std::string>());
      }
    }
    if (prov.contains("distinguished_subsets")) {
      if (!prov["distinguished_subsets"].is_object())
        throw ParseError("provenance.distinguished_subsets must be an object");
      for (const auto& [name, value] :
           prov["distinguished_subsets"].items())
        p.subsets.emplace_back(name,
                               subset_from_json(value, file.order, name));
    }
    file.provenance = std::move(p);
  }
  return file;
}

void save_brace_file(const BraceFile& file, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << write_brace_json(file);
  if (!out) throw ParseError("write to " + path + " failed");
}

BraceFile load_brace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_brace_json(buf.str());
}

}  // namespace braceforge
