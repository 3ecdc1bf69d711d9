#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "ktoric/gkm.hpp"
#include "ktoric/piecewise.hpp"
#include "ktoric/random_suites.hpp"
#include "ktoric/zlattice.hpp"
#include "test_util.hpp"

using namespace ktoric;

namespace {

// Piecewise element (chart coordinates) -> GKM element (global R(T)
// coordinates) via the inverse chart matrices.
GkmElement to_gkm(const Fan& fan, const PiecewiseElement& elt) {
  GkmElement out;
  for (size_t i = 0; i < fan.max_cones.size(); ++i) {
    MatZ C = chart_matrix(fan, fan.max_cones[i]);
    out.at_vertex.push_back(
        elt.components[i].monomial_pullback(unimodular_inverse(C)));
  }
  return out;
}

}  // namespace

TEST_CASE("gkm_from_fan shapes") {
  GkmGraph g1 = gkm_from_fan(corpus::p1());
  CHECK(g1.vertices.size() == 2);
  REQUIRE(g1.edges.size() == 1);
  CHECK(g1.edges.front().proj == MatZ::Zero(0, 1));

  GkmGraph g2 = gkm_from_fan(corpus::p2());
  CHECK(g2.vertices.size() == 3);
  CHECK(g2.edges.size() == 3);

  GkmGraph g3 = gkm_from_fan(corpus::p1xp1());
  CHECK(g3.vertices.size() == 4);
  CHECK(g3.edges.size() == 4);
}

TEST_CASE("gkm_from_fan rejects non-complete fans") {
  CHECK_THROWS(gkm_from_fan(corpus::a2()));
}

TEST_CASE("gkm_member examples") {
  GkmGraph g = gkm_from_fan(corpus::p1());
  GkmElement constant{{LaurentPoly::constant(1, 5),
                       LaurentPoly::constant(1, 5)}};
  CHECK(gkm_member(g, constant).member);

  // (t, 1): both augmentations are 1.
  GkmElement good{{LaurentPoly::variable(1, 0), LaurentPoly::constant(1, 1)}};
  CHECK(gkm_member(g, good).member);

  GkmElement bad{{LaurentPoly::variable(1, 0), LaurentPoly(1)}};
  GkmCheck res = gkm_member(g, bad);
  CHECK_FALSE(res.member);
  CHECK(res.failing_edge == 0);
}

TEST_CASE("gkm_member closed under ring operations") {
  GkmGraph g = gkm_from_fan(corpus::p2());
  std::mt19937_64 rng(79);
  Fan fan = corpus::p2();
  for (int trial = 0; trial < 20; ++trial) {
    GkmElement a = to_gkm(fan, testutil::random_compatible(rng, fan));
    GkmElement b = to_gkm(fan, testutil::random_compatible(rng, fan));
    REQUIRE(gkm_member(g, a).member);
    GkmElement sum, prod;
    for (size_t i = 0; i < a.at_vertex.size(); ++i) {
      sum.at_vertex.push_back(a.at_vertex[i] + b.at_vertex[i]);
      prod.at_vertex.push_back(a.at_vertex[i] * b.at_vertex[i]);
    }
    CHECK(gkm_member(g, sum).member);
    CHECK(gkm_member(g, prod).member);
  }
}

TEST_CASE("gkm decider agrees with adjacent-only compatibility") {
  std::mt19937_64 rng(83);
  for (const Fan& fan : corpus::complete_corpus()) {
    GkmGraph g = gkm_from_fan(fan);
    for (int trial = 0; trial < 25; ++trial) {
      PiecewiseElement elt = testutil::random_compatible(rng, fan);
      if (trial % 2 == 1) {
        // Corrupt one component.
        int i = testutil::uniform(
            rng, 0, static_cast<int>(fan.max_cones.size()) - 1);
        elt.components[i] =
            elt.components[i] + random_laurent(rng, fan.rank, 2, 2, 3);
      }
      bool pw_ok = is_compatible(fan, elt, CompatMode::adjacent_only);
      bool gkm_ok = gkm_member(g, to_gkm(fan, elt)).member;
      CHECK(pw_ok == gkm_ok);
    }
  }
}
