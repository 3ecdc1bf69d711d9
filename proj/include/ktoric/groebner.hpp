#pragma once

#include <optional>
#include <vector>

#include "ktoric/numeric.hpp"

namespace ktoric {

/// Minimal Buchberger engine over Q with degrevlex order, enough to count
/// standard monomials of zero-dimensional quotients at desk scale.
namespace groebner {

using Monomial = std::vector<int>;  // nonnegative exponents

/// Degrevlex with variable order x_0 < x_1 < ...: higher total degree
/// wins; on ties the smaller trailing exponent difference wins.
bool monomial_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rat coeff;
};

/// Terms sorted descending by degrevlex, nonzero coefficients only.
struct Poly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

Poly make_poly(int num_vars, std::vector<Term> terms);
Poly add(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Monomial& m, const Rat& c);
Poly multiply(const Poly& a, const Poly& b);

/// Full normal form against the basis; zero iff a is in the ideal
/// generated by the basis (when the basis is a Groebner basis).
Poly normal_form(const Poly& a, const std::vector<Poly>& basis);

/// Buchberger's algorithm with the coprime-lead criterion; leading
/// coefficients normalized to 1; resource-bounded by pair count.
std::vector<Poly> buchberger(std::vector<Poly> generators, int num_vars,
                             long long max_pairs = 2'000'000);

/// Number of monomials outside the leading-term ideal, or nullopt when
/// the quotient is infinite-dimensional.
std::optional<long long> quotient_dimension(const std::vector<Poly>& basis,
                                            int num_vars);

}  // namespace groebner
}  // namespace ktoric
