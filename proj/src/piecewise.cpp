#include "ktoric/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

#include "ktoric/zlattice.hpp"

namespace ktoric {

namespace {

void check_arity(const Fan& fan, const PiecewiseElement& elt) {
  if (elt.components.size() != fan.max_cones.size())
    throw std::invalid_argument("piecewise: one component per maximal cone");
  for (size_t i = 0; i < elt.components.size(); ++i)
    if (elt.components[i].num_vars() !=
        static_cast<int>(fan.max_cones[i].size()))
      throw std::invalid_argument("piecewise: chart variable count mismatch");
}

int slot_of(const Cone& sigma, int ray) {
  auto it = std::lower_bound(sigma.begin(), sigma.end(), ray);
  if (it == sigma.end() || *it != ray)
    throw std::invalid_argument("piecewise: ray not in cone");
  return static_cast<int>(it - sigma.begin());
}

}  // namespace

PiecewiseElement pw_constant(const Fan& fan, Int c) {
  PiecewiseElement out;
  for (const Cone& sigma : fan.max_cones)
    out.components.push_back(
        LaurentPoly::constant(static_cast<int>(sigma.size()), c));
  return out;
}

PiecewiseElement pw_add(const PiecewiseElement& a, const PiecewiseElement& b) {
  PiecewiseElement out;
  for (size_t i = 0; i < a.components.size(); ++i)
    out.components.push_back(a.components[i] + b.components[i]);
  return out;
}

PiecewiseElement pw_sub(const PiecewiseElement& a, const PiecewiseElement& b) {
  PiecewiseElement out;
  for (size_t i = 0; i < a.components.size(); ++i)
    out.components.push_back(a.components[i] - b.components[i]);
  return out;
}

PiecewiseElement pw_mul(const PiecewiseElement& a, const PiecewiseElement& b) {
  PiecewiseElement out;
  for (size_t i = 0; i < a.components.size(); ++i)
    out.components.push_back(a.components[i] * b.components[i]);
  return out;
}

bool pw_is_zero(const PiecewiseElement& a) {
  for (const auto& p : a.components)
    if (!p.is_zero()) return false;
  return true;
}

ExpVec restrict_character(const Fan& fan, const VecZ& m, const Cone& sigma) {
  if (m.rows() != fan.rank)
    throw std::invalid_argument("restrict_character: dimension mismatch");
  ExpVec out(sigma.size());
  for (size_t j = 0; j < sigma.size(); ++j) {
    Int pairing = m.dot(fan.rays[sigma[j]]);
    out[j] = pairing.convert_to<long long>();
  }
  return out;
}

LaurentPoly restrict_to_face(const Fan& fan, const Cone& sigma,
                             const Cone& tau, const LaurentPoly& p) {
  if (!is_subset(tau, sigma))
    throw std::invalid_argument("restrict_to_face: tau is not a face of sigma");
  (void)fan;
  MatZ L = MatZ::Zero(static_cast<Eigen::Index>(tau.size()),
                      static_cast<Eigen::Index>(sigma.size()));
  for (size_t i = 0; i < tau.size(); ++i)
    L(static_cast<Eigen::Index>(i), slot_of(sigma, tau[i])) = 1;
  return p.monomial_pullback(L);
}

CompatResult check_compatible(const Fan& fan, const PiecewiseElement& elt,
                              CompatMode mode) {
  check_arity(fan, elt);
  auto agree = [&](int i, int j) {
    Cone tau = cone_intersection(fan.max_cones[i], fan.max_cones[j]);
    return restrict_to_face(fan, fan.max_cones[i], tau, elt.components[i]) ==
           restrict_to_face(fan, fan.max_cones[j], tau, elt.components[j]);
  };
  if (mode == CompatMode::all_pairs) {
    for (size_t i = 0; i < fan.max_cones.size(); ++i)
      for (size_t j = i + 1; j < fan.max_cones.size(); ++j)
        if (!agree(static_cast<int>(i), static_cast<int>(j)))
          return {false, static_cast<int>(i), static_cast<int>(j)};
  } else {
    for (const Wall& w : walls(fan))
      if (!agree(w.a, w.b)) return {false, w.a, w.b};
  }
  return {};
}

PiecewiseElement u_rho(const Fan& fan, int rho) {
  if (rho < 0 || rho >= static_cast<int>(fan.rays.size()))
    throw std::out_of_range("u_rho: ray index out of range");
  PiecewiseElement out;
  for (const Cone& sigma : fan.max_cones) {
    const int k = static_cast<int>(sigma.size());
    if (std::binary_search(sigma.begin(), sigma.end(), rho))
      out.components.push_back(LaurentPoly::variable(k, slot_of(sigma, rho)));
    else
      out.components.push_back(LaurentPoly::constant(k, 1));
  }
  return out;
}

PiecewiseElement embed_character(const Fan& fan, const VecZ& m) {
  PiecewiseElement out;
  for (const Cone& sigma : fan.max_cones)
    out.components.push_back(
        LaurentPoly::monomial(static_cast<int>(sigma.size()),
                              restrict_character(fan, m, sigma)));
  return out;
}

VDeltaResult v_delta_basis_check(const Fan& fan) {
  // Coordinates: one exponent slot per (maximal cone, ray of that cone).
  std::vector<int> offset(fan.max_cones.size() + 1, 0);
  for (size_t i = 0; i < fan.max_cones.size(); ++i)
    offset[i + 1] = offset[i] + static_cast<int>(fan.max_cones[i].size());
  const int dim = offset.back();

  // A tuple of single characters is compatible iff the shared-ray exponents
  // agree for every pair of maximal cones.
  std::vector<VecZ> rows;
  for (size_t i = 0; i < fan.max_cones.size(); ++i)
    for (size_t j = i + 1; j < fan.max_cones.size(); ++j)
      for (int ray : cone_intersection(fan.max_cones[i], fan.max_cones[j])) {
        VecZ row = VecZ::Zero(dim);
        row(offset[i] + slot_of(fan.max_cones[i], ray)) = 1;
        row(offset[j] + slot_of(fan.max_cones[j], ray)) = -1;
        rows.push_back(row);
      }
  MatZ constraints(static_cast<Eigen::Index>(rows.size()), dim);
  for (size_t r = 0; r < rows.size(); ++r)
    constraints.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  std::vector<VecZ> kernel = kernel_basis(constraints);

  VDeltaResult result;
  result.rank = static_cast<int>(kernel.size());
  if (kernel.size() != fan.rays.size()) return result;

  MatZ K(dim, static_cast<Eigen::Index>(kernel.size()));
  for (size_t j = 0; j < kernel.size(); ++j)
    K.col(static_cast<Eigen::Index>(j)) = kernel[j];

  MatZ change(static_cast<Eigen::Index>(kernel.size()),
              static_cast<Eigen::Index>(fan.rays.size()));
  for (size_t rho = 0; rho < fan.rays.size(); ++rho) {
    VecZ u = VecZ::Zero(dim);
    for (size_t i = 0; i < fan.max_cones.size(); ++i) {
      const Cone& sigma = fan.max_cones[i];
      if (std::binary_search(sigma.begin(), sigma.end(), static_cast<int>(rho)))
        u(offset[i] + slot_of(sigma, static_cast<int>(rho))) = 1;
    }
    auto coords = solve_integer(K, u);
    if (!coords) return result;  // u_rho outside the kernel lattice
    change.col(static_cast<Eigen::Index>(rho)) = *coords;
  }
  result.change_of_basis = change;
  Int det = determinant(change);
  result.is_basis = (det == 1 || det == -1);
  return result;
}

}  // namespace ktoric
