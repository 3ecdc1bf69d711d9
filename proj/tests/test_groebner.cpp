#include <doctest.h>

#include "ktoric/groebner.hpp"

using namespace ktoric::groebner;
using ktoric::Rat;

namespace {

Poly p(int n, std::vector<Term> terms) { return make_poly(n, std::move(terms)); }

}  // namespace

TEST_CASE("degrevlex order") {
  // Total degree dominates.
  CHECK(monomial_less({1, 0}, {1, 1}));
  // Same degree: degrevlex x^2 > xy > y^2 with x0 < x1 convention reversed
  // by the last-index scan: {2,0} beats {1,1} beats {0,2}.
  CHECK(monomial_less({1, 1}, {2, 0}));
  CHECK(monomial_less({0, 2}, {1, 1}));
  CHECK_FALSE(monomial_less({2, 0}, {2, 0}));
}

TEST_CASE("normal_form and membership") {
  // Ideal (x^2 - 1, y - x): y^2 - 1 reduces to zero.
  std::vector<Poly> gens = {
      p(2, {{{2, 0}, 1}, {{0, 0}, -1}}),
      p(2, {{{0, 1}, 1}, {{1, 0}, -1}}),
  };
  auto basis = buchberger(gens, 2);
  Poly y2m1 = p(2, {{{0, 2}, 1}, {{0, 0}, -1}});
  CHECK(normal_form(y2m1, basis).is_zero());
  Poly x = p(2, {{{1, 0}, 1}});
  CHECK_FALSE(normal_form(x, basis).is_zero());
}

TEST_CASE("buchberger self-check: generators and S-pairs reduce to zero") {
  std::vector<Poly> gens = {
      p(3, {{{2, 0, 0}, 1}, {{0, 1, 0}, -1}}),
      p(3, {{{0, 2, 0}, 1}, {{0, 0, 1}, -1}}),
      p(3, {{{0, 0, 2}, 1}, {{0, 0, 0}, -1}}),
  };
  auto basis = buchberger(gens, 3);
  for (const Poly& g : gens) CHECK(normal_form(g, basis).is_zero());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      const auto& a = basis[i].lead().mono;
      const auto& b = basis[j].lead().mono;
      Monomial la(3), lb(3);
      for (int k = 0; k < 3; ++k) {
        int l = std::max(a[k], b[k]);
        la[k] = l - a[k];
        lb[k] = l - b[k];
      }
      Poly s = add(scale(basis[i], la, Rat(1) / basis[i].lead().coeff),
                   scale(basis[j], lb, Rat(-1) / basis[j].lead().coeff));
      CHECK(normal_form(s, basis).is_zero());
    }
}

TEST_CASE("quotient_dimension") {
  // (x^2, y^3): dimension 6.
  auto basis = buchberger({p(2, {{{2, 0}, 1}}), p(2, {{{0, 3}, 1}})}, 2);
  CHECK(quotient_dimension(basis, 2) == 6);

  // (x^2) in 2 vars: infinite-dimensional.
  auto b2 = buchberger({p(2, {{{2, 0}, 1}})}, 2);
  CHECK_FALSE(quotient_dimension(b2, 2).has_value());

  // Zero variables: the quotient is Q unless the ideal is (1).
  CHECK(quotient_dimension({}, 0) == 1);
}
