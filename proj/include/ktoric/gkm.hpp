#pragma once

#include <string>
#include <vector>

#include "ktoric/fan.hpp"
#include "ktoric/laurent.hpp"

namespace ktoric {

/// An edge joins two distinct fixed points; proj maps global character
/// exponents to the character lattice of the edge's kernel subgroup, and
/// the congruence is agreement of the two pullbacks.
struct GkmEdge {
  int a = 0;
  int b = 0;
  MatZ proj;
};

struct GkmGraph {
  int rank = 0;
  std::vector<std::string> vertices;
  std::vector<GkmEdge> edges;
};

/// One element of R(G) per vertex, in global exponent coordinates.
struct GkmElement {
  std::vector<LaurentPoly> at_vertex;
};

/// GKM graph of a complete smooth fan with full-dimensional maximal cones:
/// vertices are the maximal cones, edges the walls, the edge projection
/// the pairing against the wall's rays.
GkmGraph gkm_from_fan(const Fan& fan);

/// Pairing matrix of a full-dimensional maximal cone, rows <., v_rho>;
/// unimodular, converts global exponents to chart exponents.
MatZ chart_matrix(const Fan& fan, const Cone& sigma);

struct GkmCheck {
  bool member = true;
  int failing_edge = -1;
};

GkmCheck gkm_member(const GkmGraph& graph, const GkmElement& elt);

}  // namespace ktoric
