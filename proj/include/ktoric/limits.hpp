#pragma once

#include <optional>
#include <stdexcept>

#include "ktoric/fan.hpp"

namespace ktoric {

/// sigma + span(tau) for a face tau of sigma.
struct ShiftedCone {
  Cone sigma;
  Cone tau;
};

/// Exact rational membership v in cone(sigma) + span(tau): in the
/// coordinates of a basis extending sigma's rays, the tau slots are free,
/// the remaining sigma slots nonnegative, the complement slots zero.
bool in_shifted_cone(const Fan& fan, const VecQ& v, const ShiftedCone& sc);

/// True iff for every cone tau of the fan, v lies in the union of
/// sigma + span(tau) over the star of tau.
bool admits_limits(const Fan& fan, const VecQ& v);

/// Support of the fan is all of N tensor R, decided by chamber covering.
bool is_complete(const Fan& fan);

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LimitsResult {
  bool enough_limits = false;
  std::optional<VecQ> witness;  // interior point whose chamber passes
};

/// The nonempty-interior criterion, decided exactly: enumerate the open
/// sign chambers of the arrangement of all shifted-cone facet hyperplanes
/// and test one interior point per chamber. Complete fans short-circuit
/// to true. Bounded to rank <= 4 and <= 40 hyperplanes.
LimitsResult enough_limits(const Fan& fan);

}  // namespace ktoric
