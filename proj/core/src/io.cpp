#include "leraytk/io.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include <nlohmann/json.hpp>

#include "leraytk/errors.hpp"

namespace leraytk {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw FormatError(path + ": " + what);
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Byte offsets are 1-based and point just past the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min(text.size(), e.byte == 0 ? 0 : e.byte - 1);
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                      ": invalid JSON");
  }
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::size_t index_at(const Json& j, const std::string& path, std::size_t bound) {
  if (!j.is_number_integer()) fail(path, "expected a non-negative integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= bound) {
    fail(path, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  }
  return static_cast<std::size_t>(v);
}

std::string label_at(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  fail(path, "expected a string or integer label");
}

std::string quote(const std::string& s) { return Json(s).dump(); }

SimplicialComplex complex_from(const Json& root) {
  const Json& facets = array_at(field(root, "$", "facets"), "$.facets");
  std::vector<std::string> labels;
  std::size_t n = 0;
  if (root.contains("vertices")) {
    const Json& vs = array_at(root["vertices"], "$.vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      labels.push_back(label_at(vs[i], "$.vertices[" + std::to_string(i) + "]"));
    }
    n = labels.size();
  } else {
    for (const auto& f : facets) {
      if (!f.is_array()) continue;
      for (const auto& v : f) {
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
          n = std::max<std::size_t>(n, static_cast<std::size_t>(v.get<std::int64_t>()) + 1);
        }
      }
    }
  }
  const std::size_t limit = std::numeric_limits<VertexId>::max();
  std::vector<Simplex> generators;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string path = "$.facets[" + std::to_string(i) + "]";
    const Json& f = array_at(facets[i], path);
    std::vector<VertexId> ids;
    for (std::size_t j = 0; j < f.size(); ++j) {
      ids.push_back(static_cast<VertexId>(
          index_at(f[j], path + "[" + std::to_string(j) + "]", std::min(n, limit))));
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) fail(path, "repeated vertex");
    generators.push_back(Simplex::from_sorted(std::move(ids)));
  }
  auto x = SimplicialComplex::from_generators(n, std::move(generators));
  return labels.empty() ? x : x.with_labels(std::move(labels));
}

void write_complex_fields(std::string& out, const SimplicialComplex& x) {
  out += "{\"vertices\":[";
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    if (v != 0) out += ',';
    out += quote(x.label(static_cast<VertexId>(v)));
  }
  out += "],\"facets\":[";
  bool first = true;
  for (const Simplex& f : x.facets()) {
    if (!first) out += ',';
    first = false;
    out += '[';
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j != 0) out += ',';
      out += std::to_string(f[j]);
    }
    out += ']';
  }
  out += ']';
}

Rational rational_at(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  } catch (const FormatError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational string \"p/q\" or an integer");
}

Box box_at(const Json& j, const std::string& path, std::size_t d) {
  array_at(j, path);
  if (j.size() != d) {
    fail(path, "expected " + std::to_string(d) + " axes, got " + std::to_string(j.size()));
  }
  std::vector<Interval> axes;
  for (std::size_t a = 0; a < d; ++a) {
    const std::string ap = path + "[" + std::to_string(a) + "]";
    const Json& pair = array_at(j[a], ap);
    if (pair.size() != 2) fail(ap, "expected [lo, hi]");
    axes.push_back({rational_at(pair[0], ap + "[0]"), rational_at(pair[1], ap + "[1]")});
    if (axes.back().lo > axes.back().hi) fail(ap, "lo exceeds hi");
  }
  return Box(std::move(axes));
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text) { return complex_from(parse_text(text)); }

std::string write_complex(const SimplicialComplex& x) {
  std::string out;
  write_complex_fields(out, x);
  out += "}\n";
  return out;
}

PartitionedComplex parse_partitioned(std::string_view text) {
  const Json root = parse_text(text);
  SimplicialComplex x = complex_from(root);
  const Json& parts_json = array_at(field(root, "$", "parts"), "$.parts");
  std::vector<std::vector<VertexId>> parts;
  for (std::size_t i = 0; i < parts_json.size(); ++i) {
    const std::string path = "$.parts[" + std::to_string(i) + "]";
    const Json& p = array_at(parts_json[i], path);
    std::vector<VertexId> part;
    for (std::size_t j = 0; j < p.size(); ++j) {
      part.push_back(static_cast<VertexId>(
          index_at(p[j], path + "[" + std::to_string(j) + "]", x.vertex_count())));
    }
    parts.push_back(std::move(part));
  }
  try {
    return PartitionedComplex(std::move(x), std::move(parts));
  } catch (const InvalidArgument& e) {
    fail("$.parts", e.what());
  }
}

std::string write_partitioned(const PartitionedComplex& px) {
  std::string out;
  write_complex_fields(out, px.complex());
  out += ",\"parts\":[";
  for (std::size_t i = 0; i < px.part_count(); ++i) {
    if (i != 0) out += ',';
    out += '[';
    const auto& part = px.parts()[i];
    for (std::size_t j = 0; j < part.size(); ++j) {
      if (j != 0) out += ',';
      out += std::to_string(part[j]);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

BoxGroups parse_box_groups(std::string_view text) {
  const Json root = parse_text(text);
  const Json& d = field(root, "$", "d");
  if (!d.is_number_integer() || d.get<std::int64_t>() < 1) fail("$.d", "expected an integer >= 1");
  BoxGroups family;
  family.dimension = static_cast<std::size_t>(d.get<std::int64_t>());
  const Json& members = field(root, "$", "members");
  if (!members.is_object()) fail("$.members", "expected an object of named members");
  for (const auto& [name, boxes] : members.items()) {
    const std::string path = "$.members." + name;
    array_at(boxes, path);
    std::vector<Box> list;
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      list.push_back(box_at(boxes[b], path + "[" + std::to_string(b) + "]", family.dimension));
    }
    family.names.push_back(name);
    family.members.push_back(std::move(list));
  }
  return family;
}

std::string write_box_groups(const BoxGroups& family) {
  std::string out = "{\"d\":" + std::to_string(family.dimension) + ",\"members\":{";
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (i != 0) out += ',';
    out += quote(family.names[i]) + ":[";
    for (std::size_t b = 0; b < family.members[i].size(); ++b) {
      if (b != 0) out += ',';
      out += '[';
      const auto& axes = family.members[i][b].axes();
      for (std::size_t a = 0; a < axes.size(); ++a) {
        if (a != 0) out += ',';
        out += "[" + quote(format_rational(axes[a].lo)) + "," + quote(format_rational(axes[a].hi)) +
               "]";
      }
      out += ']';
    }
    out += ']';
  }
  out += "}}\n";
  return out;
}

AtomFamily parse_atom_family(std::string_view text) {
  const Json root = parse_text(text);
  const Json& atoms = array_at(field(root, "$", "atoms"), "$.atoms");
  AtomFamily family;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string path = "$.atoms[" + std::to_string(i) + "]";
    std::string a = label_at(atoms[i], path);
    if (!index.emplace(a, i).second) fail(path, "duplicate atom \"" + a + "\"");
    family.atoms.push_back(std::move(a));
  }
  const Json& members = field(root, "$", "members");
  if (!members.is_object()) fail("$.members", "expected an object of named members");
  for (const auto& [name, list] : members.items()) {
    const std::string path = "$.members." + name;
    array_at(list, path);
    std::vector<std::size_t> m;
    for (std::size_t j = 0; j < list.size(); ++j) {
      const std::string ep = path + "[" + std::to_string(j) + "]";
      const auto it = index.find(label_at(list[j], ep));
      if (it == index.end()) fail(ep, "unknown atom");
      m.push_back(it->second);
    }
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    family.names.push_back(name);
    family.members.push_back(std::move(m));
  }
  return family;
}

std::string write_atom_family(const AtomFamily& family) {
  std::string out = "{\"atoms\":[";
  for (std::size_t i = 0; i < family.atoms.size(); ++i) {
    if (i != 0) out += ',';
    out += quote(family.atoms[i]);
  }
  out += "],\"members\":{";
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (i != 0) out += ',';
    out += quote(family.names[i]) + ":[";
    for (std::size_t j = 0; j < family.members[i].size(); ++j) {
      if (j != 0) out += ',';
      out += quote(family.atoms[family.members[i][j]]);
    }
    out += ']';
  }
  out += "}}\n";
  return out;
}

bool is_atom_family(std::string_view text) {
  const Json root = parse_text(text);
  return root.is_object() && root.contains("atoms");
}

FrFamily to_fr_family(const BoxGroups& family, std::optional<std::size_t> r) {
  BoxFamily base;
  base.dimension = family.dimension;
  std::vector<std::vector<std::size_t>> grouping;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    std::vector<std::size_t> group;
    for (std::size_t j = 0; j < family.members[i].size(); ++j) {
      group.push_back(base.size());
      base.members.push_back(family.members[i][j]);
      base.names.push_back(family.names[i] + "." + std::to_string(j + 1));
    }
    grouping.push_back(std::move(group));
  }
  if (r) return make_fr_family(std::move(base), std::move(grouping), family.names, *r);
  FrFamily fr = make_fr_family(std::move(base), std::move(grouping), family.names,
                               std::numeric_limits<std::size_t>::max());
  fr.r = required_r(fr);
  return fr;
}

BoxGroups to_box_groups(const FrFamily& family) {
  BoxGroups out;
  out.dimension = family.pieces.dimension;
  out.names = family.names;
  for (const auto& g : family.groups) {
    std::vector<Box> boxes;
    for (std::size_t p : g) boxes.push_back(family.pieces.members[p]);
    out.members.push_back(std::move(boxes));
  }
  return out;
}

}  // namespace leraytk
