#include "ktoric/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ktoric/rational_lp.hpp"
#include "ktoric/zlattice.hpp"

namespace ktoric {

bool is_subset(const Cone& a, const Cone& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Cone cone_intersection(const Cone& a, const Cone& b) {
  Cone out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::string cone_key(const Cone& c) {
  std::ostringstream os;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << '-';
    os << c[i];
  }
  return os.str();
}

MatZ ray_matrix(const Fan& fan, const Cone& c) {
  MatZ m(fan.rank, static_cast<Eigen::Index>(c.size()));
  for (size_t j = 0; j < c.size(); ++j) m.col(j) = fan.rays[c[j]];
  return m;
}

namespace {

// Is there a point of cone(s1) ∩ cone(s2) outside cone(tau)?
// cone(tau) in the coordinates of an extended basis B is
// { y : y_j >= 0 for j < |tau|, y_j = 0 for j >= |tau| }.
bool intersection_escapes_face(const Fan& fan, const Cone& s1, const Cone& s2,
                               const Cone& tau) {
  const int n = fan.rank;
  MatQ a1 = to_rational(ray_matrix(fan, s1));
  MatQ a2 = to_rational(ray_matrix(fan, s2));
  MatZ binv = unimodular_inverse(extend_to_basis(ray_matrix(fan, tau), n));
  const Eigen::Index k1 = a1.cols(), k2 = a2.cols();

  // Variables (lambda, mu) >= 0 with A1*lambda = A2*mu; violating
  // directions are homogeneous, so strictness normalizes to >= 1.
  MatQ eq(n, k1 + k2);
  eq << a1, -a2;
  VecQ eq_rhs = VecQ::Zero(n);
  auto violated = [&](const VecQ& w) {
    MatQ ge(k1 + k2 + 1, k1 + k2);
    ge.setIdentity();
    ge.row(k1 + k2) << (w.transpose() * a1), MatQ::Zero(1, k2);
    VecQ ge_rhs = VecQ::Zero(k1 + k2 + 1);
    ge_rhs(k1 + k2) = 1;
    return lp_feasible_point(eq, eq_rhs, ge, ge_rhs, int(k1 + k2)).has_value();
  };
  for (int j = 0; j < n; ++j) {
    VecQ w = to_rational(VecZ(binv.row(j).transpose()));
    if (j >= static_cast<int>(tau.size()) && violated(w)) return true;
    if (violated(VecQ(-w))) return true;
  }
  return false;
}

}  // namespace

ValidationReport validate(const Fan& fan) {
  ValidationReport report;
  auto issue = [&](const std::string& check, const std::string& detail) {
    report.issues.push_back({check, detail});
  };
  if (fan.rank <= 0) {
    issue("shape", "rank must be positive");
    return report;
  }
  if (fan.max_cones.empty()) {
    issue("shape", "a fan contains at least the zero cone");
    return report;
  }
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    if (fan.rays[i].rows() != fan.rank) {
      issue("shape", "ray " + std::to_string(i) + " has wrong length");
      return report;
    }
    if (fan.rays[i].isZero()) {
      issue("primitivity", "ray " + std::to_string(i) + " is zero");
      continue;
    }
    if (primitive(fan.rays[i]) != fan.rays[i])
      issue("primitivity", "ray " + std::to_string(i) + " is not primitive");
  }
  for (const Cone& c : fan.max_cones) {
    for (int idx : c)
      if (idx < 0 || idx >= static_cast<int>(fan.rays.size())) {
        issue("shape", "cone " + cone_key(c) + " has an out-of-range ray index");
        return report;
      }
    if (!std::is_sorted(c.begin(), c.end()) ||
        std::adjacent_find(c.begin(), c.end()) != c.end()) {
      issue("shape", "cone " + cone_key(c) + " indices not strictly increasing");
      return report;
    }
  }
  if (!report.ok()) return report;

  for (const Cone& c : fan.max_cones) {
    std::vector<VecZ> gens;
    for (int idx : c) gens.push_back(fan.rays[idx]);
    if (!is_part_of_basis(gens))
      issue("smoothness",
            "cone " + cone_key(c) + " is not smooth: its rays are not part "
            "of a lattice basis");
  }
  for (size_t i = 0; i < fan.max_cones.size(); ++i)
    for (size_t j = 0; j < fan.max_cones.size(); ++j)
      if (i != j && is_subset(fan.max_cones[i], fan.max_cones[j]))
        issue("maximality", "cone " + cone_key(fan.max_cones[i]) +
                                " is contained in " +
                                cone_key(fan.max_cones[j]));
  std::set<int> used;
  for (const Cone& c : fan.max_cones) used.insert(c.begin(), c.end());
  for (size_t i = 0; i < fan.rays.size(); ++i)
    if (!used.count(static_cast<int>(i)))
      issue("coverage", "ray " + std::to_string(i) + " lies in no maximal cone");
  if (!report.ok()) return report;

  for (size_t i = 0; i < fan.max_cones.size(); ++i)
    for (size_t j = i + 1; j < fan.max_cones.size(); ++j) {
      Cone tau = cone_intersection(fan.max_cones[i], fan.max_cones[j]);
      if (intersection_escapes_face(fan, fan.max_cones[i], fan.max_cones[j],
                                    tau))
        issue("intersection", "cones " + cone_key(fan.max_cones[i]) + " and " +
                                  cone_key(fan.max_cones[j]) +
                                  " do not meet in their common face");
    }
  return report;
}

std::vector<Cone> faces_closure(const Fan& fan) {
  std::set<Cone> faces;
  for (const Cone& c : fan.max_cones) {
    const size_t k = c.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      Cone f;
      for (size_t j = 0; j < k; ++j)
        if (mask & (size_t{1} << j)) f.push_back(c[j]);
      faces.insert(f);
    }
  }
  std::vector<Cone> out(faces.begin(), faces.end());
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Cone> star(const Fan& fan, const Cone& tau) {
  auto all = faces_closure(fan);
  if (std::find(all.begin(), all.end(), tau) == all.end())
    throw std::invalid_argument("star: not a cone of the fan");
  std::vector<Cone> out;
  for (const Cone& c : all)
    if (is_subset(tau, c)) out.push_back(c);
  return out;
}

std::vector<Wall> walls(const Fan& fan) {
  std::vector<Wall> out;
  for (size_t i = 0; i < fan.max_cones.size(); ++i)
    for (size_t j = i + 1; j < fan.max_cones.size(); ++j) {
      const Cone &a = fan.max_cones[i], &b = fan.max_cones[j];
      Cone tau = cone_intersection(a, b);
      if (tau.size() + 1 == a.size() && tau.size() + 1 == b.size())
        out.push_back({static_cast<int>(i), static_cast<int>(j), tau});
    }
  return out;
}

}  // namespace ktoric
