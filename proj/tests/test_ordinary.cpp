#include <doctest.h>

#include "corpus.hpp"
#include "ktoric/ordinary.hpp"

using namespace ktoric;

namespace {

// A monomial of the doubled presentation as an exponent map for comparison.
groebner::Poly find_relation(const std::vector<groebner::Poly>& rels,
                             const groebner::Monomial& lead) {
  for (const auto& r : rels)
    if (r.lead().mono == lead) return r;
  return {};
}

}  // namespace

TEST_CASE("character_relations examples") {
  // P1, m = e1*: x0 xbar1 - 1.
  auto rels = character_relations(corpus::p1());
  REQUIRE(rels.size() == 1);
  groebner::Poly r = rels.front();
  REQUIRE(r.terms.size() == 2);
  CHECK(r.lead().mono == groebner::Monomial{1, 0, 0, 1});
  CHECK(r.lead().coeff == 1);
  CHECK(r.terms.back().coeff == -1);

  // P2, the e1* relation is x0 xbar2 - 1 (rays e1, e2, -e1-e2).
  auto rels2 = character_relations(corpus::p2());
  REQUIRE(rels2.size() == 2);
  groebner::Poly r2 = find_relation(rels2, {1, 0, 0, 0, 0, 1});
  CHECK_FALSE(r2.is_zero());
}

TEST_CASE("inverse and nonface relations shapes") {
  CHECK(inverse_relations(corpus::p2()).size() == 3);
  CHECK(nonface_relations(corpus::p2()).size() == 1);
  CHECK(nonface_relations(corpus::a2()).empty());
}

TEST_CASE("k0 ranks equal the number of maximal cones") {
  for (const Fan& fan : corpus::smooth_corpus()) {
    K0Result res = k0_rank_over_Q(fan);
    CHECK(res.enough_limits);
    CHECK(res.rank == static_cast<long long>(fan.max_cones.size()));
    CHECK(res.verified_against_max_cones);
  }
}
