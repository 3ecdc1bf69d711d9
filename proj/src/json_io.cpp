#include "ktoric/json_io.hpp"

#include <fstream>
#include <limits>

namespace ktoric {

Json int_to_json(const Int& v) {
  // Numbers stay numbers while they fit a 64-bit integer exactly.
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

namespace {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw MalformedInputError("expected an integer (number or string)");
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInputError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

Json fan_to_json(const Fan& fan) {
  Json j;
  j["rank"] = fan.rank;
  j["rays"] = Json::array();
  for (const VecZ& v : fan.rays) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < v.rows(); ++i) row.push_back(int_to_json(v(i)));
    j["rays"].push_back(row);
  }
  j["max_cones"] = fan.max_cones;
  return j;
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("rays") ||
      !j.contains("max_cones"))
    throw MalformedInputError("fan: need rank, rays, max_cones");
  Fan fan;
  if (!j["rank"].is_number_integer())
    throw MalformedInputError("fan: rank must be an integer");
  fan.rank = j["rank"].get<int>();
  for (const Json& row : j["rays"]) {
    if (!row.is_array()) throw MalformedInputError("fan: ray must be an array");
    VecZ v(static_cast<Eigen::Index>(row.size()));
    for (size_t i = 0; i < row.size(); ++i)
      v(static_cast<Eigen::Index>(i)) = int_from_json(row[i]);
    fan.rays.push_back(v);
  }
  for (const Json& c : j["max_cones"]) {
    if (!c.is_array()) throw MalformedInputError("fan: cone must be an array");
    Cone cone;
    for (const Json& idx : c) {
      if (!idx.is_number_integer())
        throw MalformedInputError("fan: ray index must be an integer");
      cone.push_back(idx.get<int>());
    }
    fan.max_cones.push_back(cone);
  }
  return fan;
}

Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exp"] = e;
    term["coeff"] = int_to_json(c);
    out.push_back(term);
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j, int num_vars) {
  if (!j.is_array()) throw MalformedInputError("laurent: expected a term list");
  LaurentPoly p(num_vars);
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coeff"))
      throw MalformedInputError("laurent: term needs exp and coeff");
    ExpVec e = term["exp"].get<ExpVec>();
    if (static_cast<int>(e.size()) != num_vars)
      throw MalformedInputError("laurent: exponent length mismatch");
    p.add_term(e, int_from_json(term["coeff"]));
  }
  return p;
}

Json piecewise_to_json(const Fan& fan, const PiecewiseElement& elt) {
  Json components = Json::object();
  for (size_t i = 0; i < fan.max_cones.size(); ++i)
    components[cone_key(fan.max_cones[i])] =
        laurent_to_json(elt.components[i]);
  Json j;
  j["components"] = components;
  return j;
}

PiecewiseElement piecewise_from_json(const Fan& fan, const Json& j) {
  if (!j.is_object() || !j.contains("components"))
    throw MalformedInputError("piecewise element: need components");
  PiecewiseElement elt;
  for (const Cone& sigma : fan.max_cones) {
    const std::string key = cone_key(sigma);
    if (!j["components"].contains(key))
      throw MalformedInputError("piecewise element: missing component " + key);
    elt.components.push_back(laurent_from_json(
        j["components"][key], static_cast<int>(sigma.size())));
  }
  return elt;
}

Json gkm_graph_to_json(const GkmGraph& graph) {
  Json j;
  j["rank"] = graph.rank;
  j["vertices"] = graph.vertices;
  j["edges"] = Json::array();
  for (const GkmEdge& e : graph.edges) {
    Json edge;
    edge["a"] = e.a;
    edge["b"] = e.b;
    Json proj = Json::array();
    for (Eigen::Index r = 0; r < e.proj.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < e.proj.cols(); ++c)
        row.push_back(int_to_json(e.proj(r, c)));
      proj.push_back(row);
    }
    edge["proj"] = proj;
    j["edges"].push_back(edge);
  }
  return j;
}

GkmGraph gkm_graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("vertices") ||
      !j.contains("edges"))
    throw MalformedInputError("gkm graph: need rank, vertices, edges");
  GkmGraph graph;
  graph.rank = j["rank"].get<int>();
  for (const Json& v : j["vertices"]) graph.vertices.push_back(v.get<std::string>());
  for (const Json& e : j["edges"]) {
    if (!e.is_object() || !e.contains("a") || !e.contains("b") ||
        !e.contains("proj"))
      throw MalformedInputError("gkm graph: edge needs a, b, proj");
    GkmEdge edge;
    edge.a = e["a"].get<int>();
    edge.b = e["b"].get<int>();
    const Json& proj = e["proj"];
    const Eigen::Index rows = static_cast<Eigen::Index>(proj.size());
    edge.proj = MatZ(rows, graph.rank);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (static_cast<int>(proj[r].size()) != graph.rank)
        throw MalformedInputError("gkm graph: projection row length mismatch");
      for (Eigen::Index c = 0; c < graph.rank; ++c)
        edge.proj(r, c) = int_from_json(proj[r][c]);
    }
    if (edge.a == edge.b)
      throw MalformedInputError("gkm graph: edge joins a vertex to itself");
    graph.edges.push_back(edge);
  }
  return graph;
}

Json gkm_element_to_json(const GkmElement& elt) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& p : elt.at_vertex) j["vertices"].push_back(laurent_to_json(p));
  return j;
}

GkmElement gkm_element_from_json(const Json& j, int rank) {
  if (!j.is_object() || !j.contains("vertices"))
    throw MalformedInputError("gkm element: need vertices");
  GkmElement elt;
  for (const Json& p : j["vertices"])
    elt.at_vertex.push_back(laurent_from_json(p, rank));
  return elt;
}

}  // namespace ktoric
