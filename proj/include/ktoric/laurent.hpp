#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ktoric/numeric.hpp"

namespace ktoric {

using ExpVec = std::vector<long long>;

/// Finitely supported map from integer exponent vectors to nonzero integer
/// coefficients; models the group ring Z[M]. Canonical form: no zero
/// coefficients stored, terms ordered lexicographically by exponent.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int num_vars) : num_vars_(num_vars) {}

  static LaurentPoly constant(int num_vars, Int c);
  static LaurentPoly monomial(int num_vars, ExpVec e, Int c = 1);
  static LaurentPoly variable(int num_vars, int index, long long power = 1);

  int num_vars() const { return num_vars_; }
  const std::map<ExpVec, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const ExpVec& e) const;

  void add_term(const ExpVec& e, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Int& s) const;
  bool operator==(const LaurentPoly& o) const = default;

  /// Image under the ring map sending the listed variables to 1.
  LaurentPoly substitute_ones(const std::set<int>& vars) const;

  /// The ring homomorphism sending a monomial with exponent e to the
  /// monomial with exponent L*e; colliding coefficients are summed.
  LaurentPoly monomial_pullback(const MatZ& L) const;

 private:
  int num_vars_ = 0;
  std::map<ExpVec, Int> terms_;
};

/// Sum_{k=m..n} r_k * chi^k along a primitive exponent direction chi,
/// with r_m, r_n in {+1, -1}; admits exact division with remainder.
struct UnitEndedPoly {
  int num_vars = 0;
  ExpVec axis;                       // primitive direction in Z^num_vars
  std::map<long long, Int> profile;  // k -> r_k, end coefficients units

  LaurentPoly to_poly() const;
  void check() const;  // throws unless the invariants hold
};

/// p = q*g + r with the axis-degree span of r strictly smaller than g's
/// span; g is normalized to lowest term 1 internally and the unit monomial
/// factor is tracked, so the identity holds for the original g.
std::pair<LaurentPoly, LaurentPoly> divide_by_unit_ended(
    const LaurentPoly& p, const UnitEndedPoly& g);

}  // namespace ktoric
