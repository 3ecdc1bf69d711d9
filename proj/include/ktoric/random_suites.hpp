#pragma once

#include <cstdint>
#include <random>

#include "ktoric/laurent.hpp"

namespace ktoric {

/// Default seed for the randomized suites; overridable everywhere a suite
/// runs.
inline constexpr std::uint64_t kDefaultSuiteSeed = 20250826;

LaurentPoly random_laurent(std::mt19937_64& rng, int num_vars, int max_terms,
                           int exp_bound, int coeff_bound);

struct SuiteOutcome {
  long long instances = 0;
  long long failures = 0;
  long long contract_failures = 0;  // product suite only

  bool ok() const { return failures == 0 && contract_failures == 0; }
};

/// Build-then-factor instances: p = s * gamma_1 * ... * gamma_r with
/// unit-ended gammas on pairwise independent axes (finite-index sublattice
/// configurations included). Checks reconstruction, recovery of s, and the
/// two directions of the membership equivalence on perturbed
/// non-members.
SuiteOutcome run_product_factorization_suite(std::uint64_t seed,
                                             long long count);

/// Build-then-decompose instances for the ideal-intersection witness.
SuiteOutcome run_intersection_suite(std::uint64_t seed, long long count);

}  // namespace ktoric
