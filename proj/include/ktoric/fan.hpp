#pragma once

#include <string>
#include <vector>

#include "ktoric/numeric.hpp"

namespace ktoric {

/// A cone of the fan, stored combinatorially as strictly increasing
/// ray indices. Legitimate because smooth cones are simplicial.
using Cone = std::vector<int>;

struct Fan {
  int rank = 0;
  std::vector<VecZ> rays;
  std::vector<Cone> max_cones;
};

struct ValidationIssue {
  std::string check;   // "primitivity" | "smoothness" | "maximality" | ...
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Fan axioms for smooth fans: ray primitivity, cone smoothness,
/// no containment among maximal cones, every ray used, and the
/// intersection-is-a-face property decided by exact rational feasibility.
ValidationReport validate(const Fan& fan);

bool is_subset(const Cone& a, const Cone& b);
Cone cone_intersection(const Cone& a, const Cone& b);
std::string cone_key(const Cone& c);

/// Columns are the primitive generators of the cone's rays.
MatZ ray_matrix(const Fan& fan, const Cone& c);

/// All faces of all maximal cones, deduplicated, empty cone included,
/// sorted by (size, lexicographic).
std::vector<Cone> faces_closure(const Fan& fan);

/// Cones of the fan containing tau as a face. Throws if tau is not a cone.
std::vector<Cone> star(const Fan& fan, const Cone& tau);

struct Wall {
  int a = 0;  // indices into fan.max_cones
  int b = 0;
  Cone face;
};

/// Pairs of maximal cones meeting in a common face of codimension one.
std::vector<Wall> walls(const Fan& fan);

}  // namespace ktoric
