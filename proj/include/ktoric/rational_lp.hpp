#pragma once

#include <optional>

#include "ktoric/numeric.hpp"

namespace ktoric {

/// Exact rational feasibility of { x free : eq*x = eq_rhs, ge*x >= ge_rhs },
/// decided by phase-1 simplex with Bland's rule. Returns a feasible point.
std::optional<VecQ> lp_feasible_point(const MatQ& eq, const VecQ& eq_rhs,
                                      const MatQ& ge, const VecQ& ge_rhs,
                                      int num_vars);

}  // namespace ktoric
