#pragma once

#include <map>
#include <vector>

#include "ktoric/laurent.hpp"

namespace ktoric {

/// Witness for membership in the intersection of the ideals I_j generated
/// by {x_rho - 1 : rho in A_j}: per qualifying variable set S (meeting
/// every A_j), a cofactor q_S with
///   sum_S (prod_{rho in S} (x_rho - 1)) * q_S = p, entry-exact.
struct IntersectionWitness {
  int num_vars = 0;
  std::map<std::vector<int>, LaurentPoly> parts;

  LaurentPoly reconstruct() const;
};

/// Membership in I_A, decided through the retraction sending the listed
/// variables to 1 (its kernel is exactly I_A).
bool in_unit_shift_ideal(const LaurentPoly& p, const std::vector<int>& A);

/// Thrown when p fails the membership precondition for some A_j.
struct NotInIdealError : std::invalid_argument {
  int failing_set;
  explicit NotInIdealError(int j)
      : std::invalid_argument("element is not in ideal " + std::to_string(j)),
        failing_set(j) {}
};

/// The inductive decomposition: recurse on the tail sets, split the sum by
/// S meeting A_1 or not, kill A_1's variables by the retraction, and expand
/// each q_S - pi(q_S) over {x_rho - 1 : rho in A_1} by telescoping.
IntersectionWitness decompose_intersection(
    const LaurentPoly& p, const std::vector<std::vector<int>>& sets);

/// Thrown when a later-stage division leaves a remainder, which the
/// product-equals-intersection property rules out.
struct FactorizationContractError : std::logic_error {
  using std::logic_error::logic_error;
};

/// q with p = q * gamma_1 * ... * gamma_r, by successive exact division.
/// Preconditions: p divisible by every gamma_i (else NotInIdealError with
/// the failing index), axes pairwise linearly independent.
LaurentPoly product_factorization(const LaurentPoly& p,
                                  const std::vector<UnitEndedPoly>& gammas);

}  // namespace ktoric
