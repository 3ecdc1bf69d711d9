#include "ktoric/stanley_reisner.hpp"

#include <algorithm>

#include "ktoric/ideal_lemmas.hpp"

namespace ktoric {

namespace {

bool is_face(const Fan& fan, const Cone& s) {
  for (const Cone& c : fan.max_cones)
    if (is_subset(s, c)) return true;
  return false;
}

// Chart ring of sigma -> ray-variable ring: slot j becomes x_{sigma[j]}.
MatZ chart_to_rays(const Fan& fan, const Cone& sigma) {
  MatZ L = MatZ::Zero(static_cast<Eigen::Index>(fan.rays.size()),
                      static_cast<Eigen::Index>(sigma.size()));
  for (size_t j = 0; j < sigma.size(); ++j)
    L(sigma[j], static_cast<Eigen::Index>(j)) = 1;
  return L;
}

// Ray-variable ring -> chart ring of sigma: x_rho becomes the chart
// variable for rho in sigma and 1 otherwise.
MatZ rays_to_chart(const Fan& fan, const Cone& sigma) {
  MatZ L = MatZ::Zero(static_cast<Eigen::Index>(sigma.size()),
                      static_cast<Eigen::Index>(fan.rays.size()));
  for (size_t j = 0; j < sigma.size(); ++j)
    L(static_cast<Eigen::Index>(j), sigma[j]) = 1;
  return L;
}

}  // namespace

std::vector<Cone> minimal_nonfaces(const Fan& fan) {
  const int r = static_cast<int>(fan.rays.size());
  std::vector<Cone> out;
  // Increasing size; a candidate whose proper subsets are all faces is
  // minimal by construction.
  for (int size = 1; size <= r; ++size) {
    std::vector<int> pick(size);
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == size) {
        Cone s(pick.begin(), pick.end());
        if (is_face(fan, s)) return;
        for (const Cone& nf : out)
          if (is_subset(nf, s)) return;
        out.push_back(s);
        return;
      }
      for (int i = start; i < r; ++i) {
        pick[depth] = i;
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

LaurentPoly nonface_generator(const Fan& fan, const Cone& nonface) {
  const int r = static_cast<int>(fan.rays.size());
  LaurentPoly gen = LaurentPoly::constant(r, 1);
  for (int rho : nonface)
    gen = gen * (LaurentPoly::variable(r, rho) - LaurentPoly::constant(r, 1));
  return gen;
}

PiecewiseElement phi(const Fan& fan, const LaurentPoly& p) {
  if (p.num_vars() != static_cast<int>(fan.rays.size()))
    throw std::invalid_argument("phi: one variable per ray expected");
  PiecewiseElement out;
  for (const Cone& sigma : fan.max_cones)
    out.components.push_back(p.monomial_pullback(rays_to_chart(fan, sigma)));
  return out;
}

bool sr_is_zero(const Fan& fan, const LaurentPoly& p) {
  return pw_is_zero(phi(fan, p));
}

LaurentPoly express(const Fan& fan, const PiecewiseElement& a) {
  const int num_rays = static_cast<int>(fan.rays.size());
  PiecewiseElement residue = a;
  LaurentPoly result(num_rays);

  for (size_t i = 0; i < fan.max_cones.size(); ++i) {
    const Cone& sigma = fan.max_cones[i];
    const LaurentPoly& component = residue.components[i];

    // Earlier cones have been cleared, so the component must lie in every
    // ideal generated by the chart variables of rays outside those cones.
    std::vector<std::vector<int>> sets;
    for (size_t e = 0; e < i; ++e) {
      std::vector<int> outside;
      for (size_t j = 0; j < sigma.size(); ++j)
        if (!std::binary_search(fan.max_cones[e].begin(),
                                fan.max_cones[e].end(), sigma[j]))
          outside.push_back(static_cast<int>(j));
      sets.push_back(std::move(outside));
    }
    IntersectionWitness witness;
    try {
      witness = decompose_intersection(component, sets);
    } catch (const NotInIdealError& err) {
      throw IncompatibleElementError(err.failing_set, static_cast<int>(i));
    }

    // Lift the witness to ray variables; every qualifying set carries a
    // factor vanishing on each earlier cone.
    MatZ lift = chart_to_rays(fan, sigma);
    LaurentPoly step(num_rays);
    for (const auto& [S, q] : witness.parts) {
      LaurentPoly gen = LaurentPoly::constant(num_rays, 1);
      for (int slot : S)
        gen = gen * (LaurentPoly::variable(num_rays, sigma[slot]) -
                     LaurentPoly::constant(num_rays, 1));
      step = step + gen * q.monomial_pullback(lift);
    }
    result = result + step;
    residue = pw_sub(residue, phi(fan, step));
    for (size_t e = 0; e <= i; ++e)
      if (!residue.components[e].is_zero())
        throw std::logic_error(
            "express: cleared component became nonzero at step " +
            std::to_string(i));
  }
  if (!pw_is_zero(residue))
    throw std::logic_error("express: nonzero residue after the last cone");
  return result;
}

}  // namespace ktoric
