#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "ktoric/fan.hpp"

using namespace ktoric;

TEST_CASE("corpus fans validate") {
  for (const Fan& fan : corpus::smooth_corpus()) CHECK(validate(fan).ok());
  CHECK(validate(corpus::torus2()).ok());
  CHECK(validate(corpus::a2_minus_origin()).ok());
}

TEST_CASE("smoothness failure is reported with the cone named") {
  ValidationReport report = validate(corpus::nonsmooth());
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& issue : report.issues) {
    if (issue.check == "smoothness" &&
        issue.detail.find("0-1") != std::string::npos)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("rank-one two-ray fan validates") {
  CHECK(validate(corpus::p1()).ok());
}

TEST_CASE("non-primitive ray rejected") {
  Fan fan = corpus::make(2, {{2, 0}, {0, 1}}, {{0, 1}});
  ValidationReport report = validate(fan);
  REQUIRE_FALSE(report.ok());
  CHECK(report.issues.front().check == "primitivity");
}

TEST_CASE("contained maximal cone rejected") {
  Fan fan = corpus::make(2, {{1, 0}, {0, 1}}, {{0, 1}, {0}});
  CHECK_FALSE(validate(fan).ok());
}

TEST_CASE("intersection-is-a-face violation rejected") {
  // Two overlapping full cones: {e1,e2} and {e1+e2... } use rays (1,0),(0,1),
  // (1,1... not unimodular with (0,1)) -- instead overlap {0,1} with {2,3}
  // where cone{2,3} = cone{(1,1),(1,2)} lies inside the first quadrant.
  Fan fan = corpus::make(2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}},
                         {{0, 1}, {2, 3}});
  CHECK_FALSE(validate(fan).ok());
}

TEST_CASE("faces_closure examples") {
  CHECK(faces_closure(corpus::p1()).size() == 3);
  CHECK(faces_closure(corpus::p2()).size() == 7);
  auto a2f = faces_closure(corpus::a2());
  REQUIRE(a2f.size() == 4);
  CHECK(a2f[0] == Cone{});
  CHECK(a2f[1] == Cone{0});
  CHECK(a2f[2] == Cone{1});
  CHECK(a2f[3] == Cone{0, 1});
}

TEST_CASE("faces_closure closed under subsets and intersections") {
  for (const Fan& fan : corpus::smooth_corpus()) {
    auto faces = faces_closure(fan);
    auto is_face = [&](const Cone& c) {
      return std::find(faces.begin(), faces.end(), c) != faces.end();
    };
    for (const Cone& a : faces) {
      for (const Cone& b : faces) CHECK(is_face(cone_intersection(a, b)));
      // All subsets: drop each element.
      for (size_t i = 0; i < a.size(); ++i) {
        Cone sub = a;
        sub.erase(sub.begin() + static_cast<long>(i));
        CHECK(is_face(sub));
      }
    }
  }
}

TEST_CASE("star examples") {
  auto s = star(corpus::p2(), Cone{0});
  REQUIRE(s.size() == 3);
  CHECK(std::find(s.begin(), s.end(), Cone{0}) != s.end());
  CHECK(std::find(s.begin(), s.end(), Cone{0, 1}) != s.end());
  CHECK(std::find(s.begin(), s.end(), Cone{0, 2}) != s.end());

  CHECK(star(corpus::p2(), Cone{}).size() == faces_closure(corpus::p2()).size());
  CHECK(star(corpus::a2(), Cone{0, 1}) == std::vector<Cone>{{0, 1}});
  CHECK_THROWS(star(corpus::p2(), Cone{0, 1, 2}));
}

TEST_CASE("star is antitone in the face") {
  for (const Fan& fan : corpus::smooth_corpus()) {
    auto faces = faces_closure(fan);
    for (const Cone& t1 : faces)
      for (const Cone& t2 : faces) {
        if (!is_subset(t1, t2)) continue;
        auto s1 = star(fan, t1), s2 = star(fan, t2);
        for (const Cone& c : s2)
          CHECK(std::find(s1.begin(), s1.end(), c) != s1.end());
      }
  }
}

TEST_CASE("walls examples") {
  CHECK(walls(corpus::p1()).size() == 1);
  CHECK(walls(corpus::p1()).front().face == Cone{});
  CHECK(walls(corpus::p2()).size() == 3);
  CHECK(walls(corpus::p1xp1()).size() == 4);
  for (const Wall& w : walls(corpus::p2()))
    CHECK(w.face.size() + 1 == corpus::p2().max_cones[w.a].size());
}

TEST_CASE("cone_key") {
  CHECK(cone_key(Cone{0, 1, 2}) == "0-1-2");
  CHECK(cone_key(Cone{}) == "");
}
