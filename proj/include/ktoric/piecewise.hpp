#pragma once

#include <vector>

#include "ktoric/fan.hpp"
#include "ktoric/laurent.hpp"

namespace ktoric {

/// One Laurent polynomial per maximal cone, in that cone's chart variables
/// (the dual basis of the cone's rays), parallel to fan.max_cones.
/// Compatibility is checked on demand, not at construction.
struct PiecewiseElement {
  std::vector<LaurentPoly> components;

  bool operator==(const PiecewiseElement& o) const = default;
};

PiecewiseElement pw_constant(const Fan& fan, Int c);
PiecewiseElement pw_add(const PiecewiseElement& a, const PiecewiseElement& b);
PiecewiseElement pw_sub(const PiecewiseElement& a, const PiecewiseElement& b);
PiecewiseElement pw_mul(const PiecewiseElement& a, const PiecewiseElement& b);
bool pw_is_zero(const PiecewiseElement& a);

/// Exponent of the character m in sigma's chart: (<m, v_rho>)_{rho in sigma}.
ExpVec restrict_character(const Fan& fan, const VecZ& m, const Cone& sigma);

/// Restriction R T_sigma -> R T_tau: keep the exponents of rays in tau,
/// kill the rest (their characters restrict trivially to T_tau).
LaurentPoly restrict_to_face(const Fan& fan, const Cone& sigma,
                             const Cone& tau, const LaurentPoly& p);

enum class CompatMode { all_pairs, adjacent_only };

struct CompatResult {
  bool ok = true;
  int a = -1;  // indices of the first failing pair of maximal cones
  int b = -1;
};

CompatResult check_compatible(const Fan& fan, const PiecewiseElement& elt,
                              CompatMode mode);

inline bool is_compatible(const Fan& fan, const PiecewiseElement& elt,
                          CompatMode mode) {
  return check_compatible(fan, elt, mode).ok;
}

/// The distinguished unit of a ray: the dual-basis character on cones
/// containing rho, the constant 1 elsewhere.
PiecewiseElement u_rho(const Fan& fan, int rho);

/// The R T-algebra structure map: m goes to the tuple of its chart
/// restrictions; multiplicative in m.
PiecewiseElement embed_character(const Fan& fan, const VecZ& m);

struct VDeltaResult {
  bool is_basis = false;
  int rank = 0;          // rank of the lattice of compatible character tuples
  MatZ change_of_basis;  // u-vectors in terms of a computed kernel basis
};

/// Prop-style basis check: the u_rho exponent vectors generate the lattice
/// of compatible single-character tuples with a unimodular change of basis.
VDeltaResult v_delta_basis_check(const Fan& fan);

}  // namespace ktoric
