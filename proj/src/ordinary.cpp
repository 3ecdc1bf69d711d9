#include "ktoric/ordinary.hpp"

#include <stdexcept>

#include "ktoric/limits.hpp"
#include "ktoric/stanley_reisner.hpp"

namespace ktoric {

namespace {

using groebner::Monomial;
using groebner::Poly;
using groebner::Term;

int doubled_vars(const Fan& fan) {
  return 2 * static_cast<int>(fan.rays.size());
}

Poly one_poly(int nv, int sign) {
  return groebner::make_poly(nv, {{Monomial(nv, 0), Rat(sign)}});
}

}  // namespace

std::vector<Poly> character_relations(const Fan& fan) {
  const int nv = doubled_vars(fan);
  std::vector<Poly> out;
  for (int k = 0; k < fan.rank; ++k) {
    VecZ m = VecZ::Zero(fan.rank);
    m(k) = 1;
    Monomial mono(nv, 0);
    bool trivial = true;
    for (size_t rho = 0; rho < fan.rays.size(); ++rho) {
      Int pairing = m.dot(fan.rays[rho]);
      long long e = pairing.convert_to<long long>();
      if (e > 0) mono[2 * rho] = static_cast<int>(e);
      if (e < 0) mono[2 * rho + 1] = static_cast<int>(-e);
      if (e != 0) trivial = false;
    }
    if (trivial) continue;
    out.push_back(groebner::make_poly(
        nv, {{mono, Rat(1)}, {Monomial(nv, 0), Rat(-1)}}));
  }
  return out;
}

std::vector<Poly> inverse_relations(const Fan& fan) {
  const int nv = doubled_vars(fan);
  std::vector<Poly> out;
  for (size_t rho = 0; rho < fan.rays.size(); ++rho) {
    Monomial mono(nv, 0);
    mono[2 * rho] = 1;
    mono[2 * rho + 1] = 1;
    out.push_back(groebner::make_poly(
        nv, {{mono, Rat(1)}, {Monomial(nv, 0), Rat(-1)}}));
  }
  return out;
}

std::vector<Poly> nonface_relations(const Fan& fan) {
  const int nv = doubled_vars(fan);
  std::vector<Poly> out;
  for (const Cone& s : minimal_nonfaces(fan)) {
    Poly gen = one_poly(nv, 1);
    for (int rho : s) {
      Monomial x(nv, 0);
      x[2 * rho] = 1;
      Poly factor = groebner::make_poly(
          nv, {{x, Rat(1)}, {Monomial(nv, 0), Rat(-1)}});
      gen = groebner::multiply(gen, factor);
    }
    out.push_back(gen);
  }
  return out;
}

K0Result k0_rank_over_Q(const Fan& fan) {
  const int nv = doubled_vars(fan);
  if (nv > 12)
    throw std::runtime_error("k0_rank_over_Q: limited to 12 doubled variables");

  std::vector<Poly> gens = nonface_relations(fan);
  for (auto& g : inverse_relations(fan)) gens.push_back(g);
  for (auto& g : character_relations(fan)) gens.push_back(g);

  std::vector<Poly> basis = groebner::buchberger(gens, nv);
  auto dim = groebner::quotient_dimension(basis, nv);
  if (!dim)
    throw std::runtime_error("k0_rank_over_Q: quotient is not finite over Q");

  K0Result result;
  result.rank = *dim;
  result.enough_limits = enough_limits(fan).enough_limits;
  result.verified_against_max_cones =
      result.enough_limits &&
      result.rank == static_cast<long long>(fan.max_cones.size());
  return result;
}

}  // namespace ktoric
