#pragma once

#include <stdexcept>
#include <vector>

#include "ktoric/fan.hpp"
#include "ktoric/laurent.hpp"
#include "ktoric/piecewise.hpp"

namespace ktoric {

/// An element of the multiplicative Stanley-Reisner ring: a Laurent
/// polynomial with one variable per ray. Equality is through phi, not
/// structural.
struct SrElement {
  LaurentPoly poly;
};

/// Inclusion-minimal ray sets contained in no maximal cone; they index the
/// relation products prod_{rho in S} (x_rho - 1).
std::vector<Cone> minimal_nonfaces(const Fan& fan);

/// prod_{rho in S} (x_rho - 1) in the ray variables.
LaurentPoly nonface_generator(const Fan& fan, const Cone& nonface);

/// The presentation homomorphism x_rho -> u_rho, computed per maximal cone
/// by killing the variables of rays outside the cone and renaming the rest
/// to chart variables.
PiecewiseElement phi(const Fan& fan, const LaurentPoly& p);

/// Zero test in the quotient: true iff the phi-image vanishes.
bool sr_is_zero(const Fan& fan, const LaurentPoly& p);

struct IncompatibleElementError : std::invalid_argument {
  int a, b;
  IncompatibleElementError(int a_, int b_)
      : std::invalid_argument("components " + std::to_string(a_) + " and " +
                              std::to_string(b_) + " are incompatible"),
        a(a_),
        b(b_) {}
};

/// A preimage of a compatible element under phi, built cone by cone: at
/// each step the current residue's component is decomposed over the
/// intersection of the ideals forced by the already-cleared cones, lifted
/// to ray variables, and subtracted. The output depends on the stored
/// maximal-cone order; the contract is only phi(express(a)) = a.
LaurentPoly express(const Fan& fan, const PiecewiseElement& a);

}  // namespace ktoric
