#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "ktoric/random_suites.hpp"
#include "ktoric/stanley_reisner.hpp"
#include "test_util.hpp"

using namespace ktoric;

TEST_CASE("minimal_nonfaces examples") {
  CHECK(minimal_nonfaces(corpus::p2()) == std::vector<Cone>{{0, 1, 2}});
  CHECK(minimal_nonfaces(corpus::p1xp1()) ==
        std::vector<Cone>{{0, 2}, {1, 3}});
  CHECK(minimal_nonfaces(corpus::a2()).empty());
  CHECK(minimal_nonfaces(corpus::p1()) == std::vector<Cone>{{0, 1}});
}

TEST_CASE("phi examples") {
  Fan p1 = corpus::p1();
  PiecewiseElement img = phi(p1, LaurentPoly::variable(2, 0));
  CHECK(img == u_rho(p1, 0));

  // Nonface product maps to zero.
  for (const Fan& fan : {corpus::p2(), corpus::p1xp1()})
    for (const Cone& nf : minimal_nonfaces(fan))
      CHECK(pw_is_zero(phi(fan, nonface_generator(fan, nf))));

  CHECK(phi(p1, LaurentPoly::constant(2, 5)) == pw_constant(p1, 5));
}

TEST_CASE("phi is a ring homomorphism") {
  std::mt19937_64 rng(43);
  for (const Fan& fan : corpus::smooth_corpus()) {
    const int n = static_cast<int>(fan.rays.size());
    for (int trial = 0; trial < 20; ++trial) {
      LaurentPoly p = random_laurent(rng, n, 4, 2, 5);
      LaurentPoly q = random_laurent(rng, n, 4, 2, 5);
      CHECK(phi(fan, p * q) == pw_mul(phi(fan, p), phi(fan, q)));
      CHECK(phi(fan, p + q) == pw_add(phi(fan, p), phi(fan, q)));
    }
  }
}

TEST_CASE("phi of the character monomial equals embed_character") {
  std::mt19937_64 rng(47);
  for (const Fan& fan : corpus::smooth_corpus()) {
    const int n = static_cast<int>(fan.rays.size());
    for (int trial = 0; trial < 20; ++trial) {
      VecZ m = testutil::random_character(rng, fan.rank, 3);
      ExpVec e(n, 0);
      for (int rho = 0; rho < n; ++rho)
        e[rho] = (m.transpose() * fan.rays[rho])(0, 0).convert_to<long long>();
      CHECK(phi(fan, LaurentPoly::monomial(n, e)) == embed_character(fan, m));
    }
  }
}

TEST_CASE("sr_is_zero examples") {
  Fan p1 = corpus::p1();
  LaurentPoly one = LaurentPoly::constant(2, 1);
  LaurentPoly g01 = (LaurentPoly::variable(2, 0) - one) *
                    (LaurentPoly::variable(2, 1) - one);
  CHECK(sr_is_zero(p1, g01));
  CHECK_FALSE(sr_is_zero(p1, LaurentPoly::variable(2, 0) - one));
  CHECK(sr_is_zero(p1, LaurentPoly(2)));
}

TEST_CASE("express examples") {
  Fan p1 = corpus::p1();
  PiecewiseElement a{{LaurentPoly::variable(1, 0),
                      LaurentPoly::constant(1, 1)}};
  LaurentPoly q = express(p1, a);
  CHECK(phi(p1, q) == a);

  CHECK(phi(p1, express(p1, pw_constant(p1, 1))) == pw_constant(p1, 1));

  std::mt19937_64 rng(53);
  for (const Fan& fan : corpus::smooth_corpus()) {
    VecZ m = testutil::random_character(rng, fan.rank, 2);
    PiecewiseElement e = embed_character(fan, m);
    CHECK(phi(fan, express(fan, e)) == e);
  }
}

TEST_CASE("express round-trip on random compatible elements") {
  std::mt19937_64 rng(59);
  for (const Fan& fan : corpus::smooth_corpus()) {
    for (int trial = 0; trial < 25; ++trial) {
      PiecewiseElement a = testutil::random_compatible(rng, fan);
      CHECK(phi(fan, express(fan, a)) == a);
    }
  }
}

TEST_CASE("express rejects incompatible input with the failing pair") {
  Fan p1 = corpus::p1();
  PiecewiseElement bad{{LaurentPoly::variable(1, 0), LaurentPoly(1)}};
  CHECK_THROWS_AS(express(p1, bad), IncompatibleElementError);
}

TEST_CASE("kernel characterization on random ideal elements") {
  std::mt19937_64 rng(61);
  for (const Fan& fan : corpus::complete_corpus()) {
    const int n = static_cast<int>(fan.rays.size());
    auto nfs = minimal_nonfaces(fan);
    for (int trial = 0; trial < 25; ++trial) {
      LaurentPoly p(n);
      for (const Cone& nf : nfs)
        p = p + nonface_generator(fan, nf) * random_laurent(rng, n, 3, 2, 5);
      CHECK(sr_is_zero(fan, p));
    }
    // Unit monomial multiples of single variables are never in the kernel.
    for (int trial = 0; trial < 25; ++trial) {
      ExpVec e(n, 0);
      for (int i = 0; i < n; ++i) e[i] = testutil::uniform(rng, -2, 2);
      int var = testutil::uniform(rng, 0, n - 1);
      LaurentPoly p = LaurentPoly::monomial(n, e) *
                      LaurentPoly::variable(n, var);
      CHECK_FALSE(sr_is_zero(fan, p));
    }
  }
}
