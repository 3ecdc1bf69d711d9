#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "ktoric/limits.hpp"

using namespace ktoric;

namespace {

VecQ vq(std::vector<Rat> v) {
  VecQ out(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index i = 0; i < out.rows(); ++i) out(i) = v[i];
  return out;
}

}  // namespace

TEST_CASE("in_shifted_cone examples") {
  Fan a2 = corpus::a2();
  CHECK(in_shifted_cone(a2, vq({0, 0}), {{0, 1}, {}}));
  CHECK(in_shifted_cone(a2, vq({-5, 1}), {{0, 1}, {0}}));
  CHECK_FALSE(in_shifted_cone(a2, vq({0, -1}), {{0, 1}, {0}}));
}

TEST_CASE("in_shifted_cone invariant under tau translations") {
  Fan a2 = corpus::a2();
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    VecQ v = vq({Rat(num(rng), den(rng)), Rat(num(rng), den(rng))});
    ShiftedCone sc{{0, 1}, {0}};
    bool base = in_shifted_cone(a2, v, sc);
    VecQ shifted = v;
    shifted(0) += Rat(num(rng), den(rng));  // along ray 0 = e1, tau's span
    CHECK(in_shifted_cone(a2, shifted, sc) == base);
  }
}

TEST_CASE("admits_limits examples") {
  CHECK(admits_limits(corpus::p2(), vq({3, -7})));
  CHECK_FALSE(admits_limits(corpus::torus2(), vq({1, 0})));
  CHECK(admits_limits(corpus::a2(), vq({1, 1})));
  CHECK_FALSE(admits_limits(corpus::a2(), vq({-1, 0})));
}

TEST_CASE("complete fans admit all limits") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (const Fan& fan : corpus::complete_corpus()) {
    CHECK(is_complete(fan));
    for (int trial = 0; trial < 20; ++trial) {
      VecQ v(fan.rank);
      for (int i = 0; i < fan.rank; ++i) v(i) = Rat(num(rng), den(rng));
      CHECK(admits_limits(fan, v));
    }
  }
  CHECK_FALSE(is_complete(corpus::a2()));
  CHECK_FALSE(is_complete(corpus::torus2()));
}

TEST_CASE("enough_limits decisions") {
  for (const Fan& fan : corpus::complete_corpus())
    CHECK(enough_limits(fan).enough_limits);
  CHECK_FALSE(enough_limits(corpus::torus2()).enough_limits);
  CHECK(enough_limits(corpus::a2()).enough_limits);
  CHECK_FALSE(enough_limits(corpus::a2_minus_origin()).enough_limits);
  CHECK(enough_limits(corpus::a1xp1()).enough_limits);
}

TEST_CASE("enough_limits witness survives chamber perturbations") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<int> num(-1, 1), den(100, 400);
  for (const Fan& fan : {corpus::a2(), corpus::a1xp1()}) {
    LimitsResult res = enough_limits(fan);
    REQUIRE(res.enough_limits);
    REQUIRE(res.witness.has_value());
    CHECK(admits_limits(fan, *res.witness));
    for (int trial = 0; trial < 20; ++trial) {
      VecQ v = *res.witness;
      for (int i = 0; i < fan.rank; ++i) v(i) += Rat(num(rng), den(rng));
      CHECK(admits_limits(fan, v));
    }
  }
}
