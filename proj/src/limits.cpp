#include "ktoric/limits.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ktoric/rational_lp.hpp"
#include "ktoric/zlattice.hpp"

namespace ktoric {

namespace {

// Rows of the inverse of a basis extending sigma's rays. The first
// |sigma| rows are the chart functionals, the rest the complement
// equations.
MatZ cobasis(const Fan& fan, const Cone& sigma) {
  return unimodular_inverse(
      extend_to_basis(ray_matrix(fan, sigma), fan.rank));
}

VecZ primitive_up_to_sign(VecZ v) {
  v = primitive(v);
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    if (v(i) > 0) break;
    if (v(i) < 0) { v = -v; break; }
  }
  return v;
}

// Facet-supporting hyperplane normals of the shifted cone: one per slot
// not absorbed into span(tau).
void collect_normals(const Fan& fan, const Cone& sigma, const Cone& tau,
                     std::set<std::vector<Int>>& normals) {
  MatZ rows = cobasis(fan, sigma);
  for (int j = 0; j < fan.rank; ++j) {
    if (j < static_cast<int>(sigma.size()) &&
        std::binary_search(tau.begin(), tau.end(), sigma[j]))
      continue;
    VecZ w = primitive_up_to_sign(rows.row(j).transpose());
    normals.insert(std::vector<Int>(w.data(), w.data() + w.rows()));
  }
}

// Depth-first enumeration of open chambers of a central hyperplane
// arrangement; calls visit with one exact interior point per chamber,
// stopping early when visit returns true.
bool for_each_chamber(const std::vector<VecQ>& normals, int rank,
                      const std::function<bool(const VecQ&)>& visit) {
  const int m = static_cast<int>(normals.size());
  std::vector<int> signs(m, 0);
  auto feasible = [&](int depth) -> std::optional<VecQ> {
    MatQ ge(depth, rank);
    VecQ rhs = VecQ::Ones(depth);  // strict by homogeneity
    for (int i = 0; i < depth; ++i)
      ge.row(i) = Rat(signs[i]) * normals[i].transpose();
    return lp_feasible_point(MatQ(0, rank), VecQ(0), ge, rhs, rank);
  };
  auto rec = [&](auto&& self, int depth) -> bool {
    auto point = feasible(depth);
    if (!point) return false;
    if (depth == m) return visit(*point);
    for (int s : {1, -1}) {
      signs[depth] = s;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<VecQ> to_rational_normals(const std::set<std::vector<Int>>& set) {
  std::vector<VecQ> out;
  for (const auto& n : set) {
    VecQ v(static_cast<Eigen::Index>(n.size()));
    for (size_t i = 0; i < n.size(); ++i) v(static_cast<Eigen::Index>(i)) = n[i];
    out.push_back(v);
  }
  return out;
}

void check_bounds(const Fan& fan, size_t num_hyperplanes) {
  if (fan.rank > 4)
    throw ResourceLimitError("chamber enumeration limited to rank <= 4");
  if (num_hyperplanes > 40)
    throw ResourceLimitError("chamber enumeration limited to 40 hyperplanes");
}

bool in_cone(const Fan& fan, const Cone& sigma, const VecQ& v) {
  MatQ rows = to_rational(cobasis(fan, sigma));
  VecQ y = rows * v;
  for (int j = 0; j < fan.rank; ++j) {
    if (j < static_cast<int>(sigma.size())) {
      if (y(j) < 0) return false;
    } else if (y(j) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool in_shifted_cone(const Fan& fan, const VecQ& v, const ShiftedCone& sc) {
  if (!is_subset(sc.tau, sc.sigma))
    throw std::invalid_argument("in_shifted_cone: tau is not a face of sigma");
  if (v.rows() != fan.rank)
    throw std::invalid_argument("in_shifted_cone: dimension mismatch");
  MatQ rows = to_rational(cobasis(fan, sc.sigma));
  VecQ y = rows * v;
  for (int j = 0; j < fan.rank; ++j) {
    if (j < static_cast<int>(sc.sigma.size())) {
      if (std::binary_search(sc.tau.begin(), sc.tau.end(), sc.sigma[j]))
        continue;  // absorbed into the span
      if (y(j) < 0) return false;
    } else if (y(j) != 0) {
      return false;
    }
  }
  return true;
}

bool admits_limits(const Fan& fan, const VecQ& v) {
  for (const Cone& tau : faces_closure(fan)) {
    bool covered = false;
    for (const Cone& sigma : star(fan, tau))
      if (in_shifted_cone(fan, v, {sigma, tau})) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool is_complete(const Fan& fan) {
  std::set<std::vector<Int>> normal_set;
  for (const Cone& sigma : fan.max_cones)
    collect_normals(fan, sigma, {}, normal_set);
  check_bounds(fan, normal_set.size());
  auto normals = to_rational_normals(normal_set);
  bool escaped = for_each_chamber(normals, fan.rank, [&](const VecQ& p) {
    for (const Cone& sigma : fan.max_cones)
      if (in_cone(fan, sigma, p)) return false;
    return true;  // chamber outside the support
  });
  return !escaped;
}

LimitsResult enough_limits(const Fan& fan) {
  if (is_complete(fan)) return {true, std::nullopt};

  std::set<std::vector<Int>> normal_set;
  for (const Cone& tau : faces_closure(fan))
    for (const Cone& sigma : star(fan, tau))
      collect_normals(fan, sigma, tau, normal_set);
  check_bounds(fan, normal_set.size());
  auto normals = to_rational_normals(normal_set);

  LimitsResult result;
  for_each_chamber(normals, fan.rank, [&](const VecQ& p) {
    if (!admits_limits(fan, p)) return false;
    result.enough_limits = true;
    result.witness = p;
    return true;
  });
  return result;
}

}  // namespace ktoric
