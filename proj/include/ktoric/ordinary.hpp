#pragma once

#include <vector>

#include "ktoric/fan.hpp"
#include "ktoric/groebner.hpp"

namespace ktoric {

/// Polynomials in doubled variables (x_rho at slot 2*rho, its inverse
/// partner at slot 2*rho + 1) presenting Z tensor_{R T} K: setting every
/// character to 1 gives one relation per lattice basis vector,
/// prod_rho x_rho^{<m, v_rho>} - 1, negative exponents rewritten with the
/// partner variable. Trivial relations are dropped.
std::vector<groebner::Poly> character_relations(const Fan& fan);

/// Inverse relations x_rho * xbar_rho - 1 for every ray.
std::vector<groebner::Poly> inverse_relations(const Fan& fan);

/// Stanley-Reisner relations prod_{rho in S} (x_rho - 1) over the minimal
/// nonfaces, in the doubled variables.
std::vector<groebner::Poly> nonface_relations(const Fan& fan);

struct K0Result {
  long long rank = 0;
  bool enough_limits = false;
  bool verified_against_max_cones = false;
};

/// Q-dimension of the quotient by all three relation families, computed by
/// Buchberger with degrevlex; equals the number of maximal cones for fans
/// with enough limits. Throws on resource exhaustion or an
/// infinite-dimensional quotient.
K0Result k0_rank_over_Q(const Fan& fan);

}  // namespace ktoric
