#include "ktoric/gkm.hpp"

#include <stdexcept>

#include "ktoric/limits.hpp"

namespace ktoric {

MatZ chart_matrix(const Fan& fan, const Cone& sigma) {
  MatZ m(static_cast<Eigen::Index>(sigma.size()), fan.rank);
  for (size_t i = 0; i < sigma.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = fan.rays[sigma[i]].transpose();
  return m;
}

GkmGraph gkm_from_fan(const Fan& fan) {
  for (const Cone& sigma : fan.max_cones)
    if (static_cast<int>(sigma.size()) != fan.rank)
      throw std::invalid_argument(
          "gkm_from_fan: maximal cone " + cone_key(sigma) +
          " is not full-dimensional");
  if (!is_complete(fan))
    throw std::invalid_argument("gkm_from_fan: fan is not complete");

  GkmGraph graph;
  graph.rank = fan.rank;
  for (const Cone& sigma : fan.max_cones)
    graph.vertices.push_back(cone_key(sigma));
  for (const Wall& w : walls(fan))
    graph.edges.push_back({w.a, w.b, chart_matrix(fan, w.face)});
  return graph;
}

GkmCheck gkm_member(const GkmGraph& graph, const GkmElement& elt) {
  if (elt.at_vertex.size() != graph.vertices.size())
    throw std::invalid_argument("gkm_member: one polynomial per vertex");
  for (const auto& p : elt.at_vertex)
    if (p.num_vars() != graph.rank)
      throw std::invalid_argument("gkm_member: polynomial arity mismatch");
  for (size_t k = 0; k < graph.edges.size(); ++k) {
    const GkmEdge& e = graph.edges[k];
    if (elt.at_vertex[e.a].monomial_pullback(e.proj) !=
        elt.at_vertex[e.b].monomial_pullback(e.proj))
      return {false, static_cast<int>(k)};
  }
  return {};
}

}  // namespace ktoric
