#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "conerig/manifest.hpp"

namespace conerig {

using nlohmann::json;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& field(const json& obj, const std::string& ptr, const char* key) {
  if (!obj.is_object()) throw SchemaError(ptr.empty() ? "/" : ptr, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child(ptr, key), "missing field");
  return *it;
}

double number(const json& v, const std::string& ptr) {
  if (!v.is_number()) throw SchemaError(ptr, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw SchemaError(ptr, "expected a finite number");
  return x;
}

std::string string(const json& v, const std::string& ptr) {
  if (!v.is_string()) throw SchemaError(ptr, "expected a string");
  return v.get<std::string>();
}

const json& array(const json& v, const std::string& ptr) {
  if (!v.is_array()) throw SchemaError(ptr, "expected an array");
  return v;
}

Word checked_word(const std::string& text, const std::string& generators, const std::string& ptr) {
  try {
    return parse_word(text, generators);
  } catch (const UnknownGenerator& e) {
    throw SchemaError(ptr, e.what());
  }
}

Matrix2c<double> complex_matrix(const json& v, const std::string& ptr) {
  array(v, ptr);
  if (v.size() != 4) throw SchemaError(ptr, "expected four [re, im] entries (row-major)");
  Matrix2c<double> m;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto p = child(ptr, i);
    const json& e = array(v[i], p);
    if (e.size() != 2) throw SchemaError(p, "expected [re, im]");
    m(i / 2, i % 2) = {number(e[0], child(p, 0)), number(e[1], child(p, 1))};
  }
  return m;
}

bool is_quaternion(const json& v) { return v.is_array() && v.size() == 4 && v[0].is_number(); }

Su2Element<double> su2_payload(const json& v, const std::string& ptr, const std::string& gen) {
  try {
    if (is_quaternion(v))
      return Su2Element<double>::from_quaternion(number(v[0], child(ptr, 0)), number(v[1], child(ptr, 1)),
                                                 number(v[2], child(ptr, 2)), number(v[3], child(ptr, 3)));
    return Su2Element<double>::from_matrix(complex_matrix(v, ptr));
  } catch (const GroupMembershipError& e) {
    throw GroupMembershipError(ptr + ": generator '" + gen + "': " + e.what() + " (defect " +
                                   std::to_string(e.defect()) + ")",
                               e.defect());
  }
}

GroupElement holonomy_payload(GroupKind kind, const json& v, const std::string& ptr, const std::string& gen) {
  switch (kind) {
    case GroupKind::SL2C:
      try {
        return Sl2cElement<double>::from_matrix(complex_matrix(v, ptr));
      } catch (const GroupMembershipError& e) {
        throw GroupMembershipError(ptr + ": generator '" + gen + "': " + e.what() + " (defect " +
                                       std::to_string(e.defect()) + ")",
                                   e.defect());
      }
    case GroupKind::SU2: return su2_payload(v, ptr, gen);
    case GroupKind::SU2xSU2:
      return Su2PairElement<double>{su2_payload(field(v, ptr, "left"), child(ptr, "left"), gen),
                                    su2_payload(field(v, ptr, "right"), child(ptr, "right"), gen)};
  }
  throw SchemaError(ptr, "unsupported group");
}

double cone_angle(const json& v, const std::string& ptr) {
  const double a = number(v, ptr);
  if (!(a > 0.0 && a <= two_pi)) throw SchemaError(ptr, "cone angle outside (0, 2 pi]");
  return a;
}

// Genus of the boundary of a regular neighbourhood of a connected trivalent graph with e edges.
void cross_check_genus(Manifest& m) {
  if (!m.singular_graph || !m.boundary) return;
  const auto& g = *m.singular_graph;
  if (g.vertices.empty()) return;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.edges.size(); ++i) index[g.edges[i].id] = i;
  std::vector<std::size_t> parent(g.edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& v : g.vertices)
    for (const auto& id : v.edges) parent[find(index.at(id))] = find(index.at(v.edges[0]));
  std::size_t roots = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) roots += find(i) == i;
  if (roots != 1) return;
  const std::size_t n = g.edges.size();
  if (n % 3 != 0) {
    m.warnings.push_back("singular graph: edge count " + std::to_string(n) + " is not divisible by 3");
    return;
  }
  const int expected = static_cast<int>((n + 3) / 3);
  for (const auto& c : *m.boundary)
    if (c.genus == expected) return;
  m.warnings.push_back("genus relation g = (N+3)/3 = " + std::to_string(expected) +
                       " does not match any boundary component");
}

json complex_matrix_json(const Matrix2c<double>& m) {
  json out = json::array();
  for (int i = 0; i < 4; ++i) out.push_back({m(i / 2, i % 2).real(), m(i / 2, i % 2).imag()});
  return out;
}

json quaternion_json(const Su2Element<double>& q) {
  const auto& v = q.quaternion();
  return {v.w(), v.x(), v.y(), v.z()};
}

void format_number(std::string& out, double x) {
  if (!std::isfinite(x)) throw SerializationError("NaN or infinity cannot be serialized");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
  if (std::strpbrk(buf, ".eE") == nullptr) out += ".0";
}

void emit(std::string& out, const json& v, int depth) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        emit(out, it.value(), depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        emit(out, v[i], depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float: format_number(out, v.get<double>()); return;
    default: out += v.dump(); return;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": " + std::strerror(errno));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(path + ": " + std::strerror(errno));
  out << text;
  out.flush();
  if (!out) throw Error(path + ": " + std::strerror(errno));
}

}  // namespace

Presentation Manifest::presentation() const {
  Presentation p(generators);
  for (const auto& r : relators) p.add_relator(r);
  for (const auto& m : meridians) p.add_meridian(m.word, m.edge_id, m.cone_angle);
  return p;
}

Representation Manifest::representation() const { return Representation(group, holonomy); }

Manifest parse_manifest(const json& doc) {
  Manifest m;
  const json& schema = field(doc, "", "schema");
  if (!schema.is_number_integer() || schema.get<int>() != manifest_schema_version)
    throw SchemaError("/schema", "unsupported schema version (expected 1)");

  const json& k = field(doc, "", "curvature");
  if (!k.is_number_integer() || std::abs(k.get<int>()) > 1) throw SchemaError("/curvature", "expected -1, 0 or 1");
  m.curvature = Curvature(k.get<int>());

  try {
    m.group = group_kind_from_string(string(field(doc, "", "group"), "/group"));
  } catch (const DomainError& e) {
    throw SchemaError("/group", e.what());
  }

  const json& gens = array(field(doc, "", "generators"), "/generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string g = string(gens[i], child("/generators", i));
    if (g.size() != 1 || g[0] < 'a' || g[0] > 'z') throw SchemaError(child("/generators", i), "expected one lowercase letter");
    if (m.generators.find(g[0]) != std::string::npos) throw SchemaError(child("/generators", i), "duplicate generator");
    m.generators += g;
  }

  const json& rels = array(field(doc, "", "relators"), "/relators");
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const auto p = child("/relators", i);
    m.relators.push_back(string(rels[i], p));
    checked_word(m.relators.back(), m.generators, p);
  }

  const json& mers = array(field(doc, "", "meridians"), "/meridians");
  for (std::size_t i = 0; i < mers.size(); ++i) {
    const auto p = child("/meridians", i);
    MeridianSpec s;
    s.word = string(field(mers[i], p, "word"), child(p, "word"));
    checked_word(s.word, m.generators, child(p, "word"));
    s.edge_id = string(field(mers[i], p, "edge_id"), child(p, "edge_id"));
    s.cone_angle = cone_angle(field(mers[i], p, "cone_angle"), child(p, "cone_angle"));
    m.meridians.push_back(s);
  }

  const json& hol = field(doc, "", "holonomy");
  if (!hol.is_object()) throw SchemaError("/holonomy", "expected an object keyed by generator");
  for (auto it = hol.begin(); it != hol.end(); ++it)
    if (it.key().size() != 1 || m.generators.find(it.key()[0]) == std::string::npos)
      throw SchemaError(child("/holonomy", it.key()), "not a declared generator");
  for (char g : m.generators) {
    const std::string key(1, g);
    m.holonomy.push_back(holonomy_payload(m.group, field(hol, "/holonomy", key.c_str()), child("/holonomy", key), key));
  }

  if (doc.contains("boundary")) {
    const json& b = array(doc["boundary"], "/boundary");
    std::vector<BoundaryComponent> comps;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const auto p = child("/boundary", i);
      BoundaryComponent c;
      const json& genus = field(b[i], p, "genus");
      if (!genus.is_number_integer() || genus.get<int>() < 0) throw SchemaError(child(p, "genus"), "expected a nonnegative integer");
      c.genus = genus.get<int>();
      const json& words = array(field(b[i], p, "generator_words"), child(p, "generator_words"));
      if (words.size() != static_cast<std::size_t>(2 * c.genus))
        throw SchemaError(child(p, "generator_words"), "expected 2 * genus words");
      for (std::size_t j = 0; j < words.size(); ++j) {
        const auto wp = child(child(p, "generator_words"), j);
        c.generator_words.push_back(string(words[j], wp));
        checked_word(c.generator_words.back(), m.generators, wp);
      }
      comps.push_back(std::move(c));
    }
    m.boundary = std::move(comps);
  }

  if (doc.contains("singular_graph")) {
    const json& sg = doc["singular_graph"];
    SingularGraph g;
    const json& edges = array(field(sg, "/singular_graph", "edges"), "/singular_graph/edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto p = child("/singular_graph/edges", i);
      SingularEdge e{string(field(edges[i], p, "id"), child(p, "id")),
                     cone_angle(field(edges[i], p, "angle"), child(p, "angle"))};
      for (const auto& other : g.edges)
        if (other.id == e.id) throw SchemaError(child(p, "id"), "duplicate edge id");
      g.edges.push_back(e);
    }
    const json& verts = array(field(sg, "/singular_graph", "vertices"), "/singular_graph/vertices");
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto p = child(child("/singular_graph/vertices", i), "edges");
      const json& ids = array(field(verts[i], child("/singular_graph/vertices", i), "edges"), p);
      if (ids.size() != 3) throw SchemaError(p, "vertex must be trivalent");
      SingularVertex v;
      for (std::size_t j = 0; j < 3; ++j) {
        v.edges.push_back(string(ids[j], child(p, j)));
        bool known = false;
        for (const auto& e : g.edges) known |= e.id == v.edges.back();
        if (!known) throw SchemaError(child(p, j), "unknown edge id");
      }
      g.vertices.push_back(std::move(v));
    }
    m.singular_graph = std::move(g);
  }
  cross_check_genus(m);
  return m;
}

Manifest parse_manifest_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("/", std::string("invalid JSON: ") + e.what());
  }
  return parse_manifest(doc);
}

Manifest load_manifest(const std::string& path) { return parse_manifest_text(read_file(path)); }

json manifest_to_json(const Manifest& m) {
  json doc;
  doc["schema"] = manifest_schema_version;
  doc["curvature"] = m.curvature.value();
  doc["group"] = to_string(m.group);
  doc["generators"] = json::array();
  for (char g : m.generators) doc["generators"].push_back(std::string(1, g));
  doc["relators"] = m.relators;
  doc["meridians"] = json::array();
  for (const auto& s : m.meridians)
    doc["meridians"].push_back({{"word", s.word}, {"edge_id", s.edge_id}, {"cone_angle", s.cone_angle}});
  doc["holonomy"] = json::object();
  for (std::size_t i = 0; i < m.holonomy.size(); ++i) {
    const std::string key(1, m.generators[i]);
    const GroupElement& g = m.holonomy[i];
    if (auto p = std::get_if<Sl2cElement<double>>(&g))
      doc["holonomy"][key] = complex_matrix_json(p->matrix());
    else if (auto q = std::get_if<Su2Element<double>>(&g))
      doc["holonomy"][key] = quaternion_json(*q);
    else {
      const auto& pr = std::get<Su2PairElement<double>>(g);
      doc["holonomy"][key] = {{"left", quaternion_json(pr.left)}, {"right", quaternion_json(pr.right)}};
    }
  }
  if (m.boundary) {
    doc["boundary"] = json::array();
    for (const auto& c : *m.boundary)
      doc["boundary"].push_back({{"genus", c.genus}, {"generator_words", c.generator_words}});
  }
  if (m.singular_graph) {
    json edges = json::array(), verts = json::array();
    for (const auto& e : m.singular_graph->edges) edges.push_back({{"id", e.id}, {"angle", e.angle}});
    for (const auto& v : m.singular_graph->vertices) verts.push_back({{"edges", v.edges}});
    doc["singular_graph"] = {{"edges", edges}, {"vertices", verts}};
  }
  return doc;
}

void write_manifest(const Manifest& m, const std::string& path) {
  write_file(path, canonical_json(manifest_to_json(m)) + "\n");
}

std::string canonical_json(const json& doc) {
  std::string out;
  emit(out, doc, 0);
  return out;
}

void write_report(const json& report, const std::string& path) { write_file(path, canonical_json(report) + "\n"); }

}  // namespace conerig
