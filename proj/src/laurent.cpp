#include "ktoric/laurent.hpp"

#include <stdexcept>

#include "ktoric/zlattice.hpp"

namespace ktoric {

LaurentPoly LaurentPoly::constant(int num_vars, Int c) {
  LaurentPoly p(num_vars);
  p.add_term(ExpVec(num_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, ExpVec e, Int c) {
  if (static_cast<int>(e.size()) != num_vars)
    throw std::invalid_argument("monomial: exponent length mismatch");
  LaurentPoly p(num_vars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int index, long long power) {
  ExpVec e(num_vars, 0);
  e.at(index) = power;
  return monomial(num_vars, e);
}

Int LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("laurent: variable-count mismatch");
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("laurent: variable-count mismatch");
  LaurentPoly out(num_vars_);
  ExpVec e(num_vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::operator*(const Int& s) const {
  LaurentPoly out(num_vars_);
  if (s == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
  return out;
}

LaurentPoly LaurentPoly::substitute_ones(const std::set<int>& vars) const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    ExpVec f = e;
    for (int v : vars) f.at(v) = 0;
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly LaurentPoly::monomial_pullback(const MatZ& L) const {
  if (L.cols() != num_vars_)
    throw std::invalid_argument("monomial_pullback: shape mismatch");
  LaurentPoly out(static_cast<int>(L.rows()));
  ExpVec f(L.rows());
  for (const auto& [e, c] : terms_) {
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
      Int s = 0;
      for (Eigen::Index j = 0; j < L.cols(); ++j) s += L(i, j) * Int(e[j]);
      f[i] = s.convert_to<long long>();
    }
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly UnitEndedPoly::to_poly() const {
  LaurentPoly out(num_vars);
  ExpVec e(num_vars);
  for (const auto& [k, c] : profile) {
    for (int i = 0; i < num_vars; ++i) e[i] = k * axis[i];
    out.add_term(e, c);
  }
  return out;
}

void UnitEndedPoly::check() const {
  if (static_cast<int>(axis.size()) != num_vars)
    throw std::invalid_argument("unit-ended: axis length mismatch");
  if (profile.empty()) throw std::invalid_argument("unit-ended: empty profile");
  VecZ a(num_vars);
  for (int i = 0; i < num_vars; ++i) a(i) = axis[i];
  if (primitive(a) != a)
    throw std::invalid_argument("unit-ended: axis is not primitive");
  const Int& lo = profile.begin()->second;
  const Int& hi = profile.rbegin()->second;
  if ((lo != 1 && lo != -1) || (hi != 1 && hi != -1))
    throw std::invalid_argument("unit-ended: extreme coefficients not units");
  for (const auto& [k, c] : profile)
    if (c == 0) throw std::invalid_argument("unit-ended: zero coefficient");
}

std::pair<LaurentPoly, LaurentPoly> divide_by_unit_ended(
    const LaurentPoly& p, const UnitEndedPoly& g) {
  g.check();
  if (p.num_vars() != g.num_vars)
    throw std::invalid_argument("divide: variable-count mismatch");
  const int n = g.num_vars;

  // Dual functional phi with <phi, axis> = 1 (axis is primitive).
  MatZ row(1, n);
  for (int i = 0; i < n; ++i) row(0, i) = g.axis[i];
  VecZ one(1);
  one(0) = 1;
  VecZ phi = *solve_integer(row, one);

  // Normalize g to lowest term 1: gt_k = r_m^-1 * r_{k+m}, k = 0..span.
  const long long m = g.profile.begin()->first;
  const long long span = g.profile.rbegin()->first - m;
  const Int unit = g.profile.begin()->second;  // +-1
  std::map<long long, Int> gt;
  for (const auto& [k, c] : g.profile) gt[k - m] = c * unit;

  // Group p by cosets of Z*axis; within a coset p is univariate in chi.
  std::map<ExpVec, std::map<long long, Int>> cosets;
  for (const auto& [e, c] : p.terms()) {
    Int deg = 0;
    for (int i = 0; i < n; ++i) deg += phi(i) * Int(e[i]);
    long long k = deg.convert_to<long long>();
    ExpVec w(n);
    for (int i = 0; i < n; ++i) w[i] = e[i] - k * g.axis[i];
    cosets[w][k] += c;
  }

  LaurentPoly qt(n), rem(n);
  ExpVec e(n);
  auto emit = [&](LaurentPoly& dst, const ExpVec& w, long long k, const Int& c) {
    for (int i = 0; i < n; ++i) e[i] = w[i] + k * g.axis[i];
    dst.add_term(e, c);
  };
  for (auto& [w, u] : cosets) {
    for (auto it = u.begin(); it != u.end();)
      it = (it->second == 0) ? u.erase(it) : std::next(it);
    // Top-down division by the normalized profile (leading coefficient
    // is a unit, so every step is exact).
    while (!u.empty() && u.rbegin()->first - u.begin()->first >= span) {
      const long long hi = u.rbegin()->first;
      Int q = u.rbegin()->second * gt.rbegin()->second;  // divide by +-1
      emit(qt, w, hi - span, q);
      for (const auto& [k, c] : gt) {
        Int& slot = u[hi - span + k];
        slot -= q * c;
        if (slot == 0) u.erase(hi - span + k);
      }
    }
    for (const auto& [k, c] : u) emit(rem, w, k, c);
  }

  // p = qt * (unit^-1 chi^-m g) + rem, so fold the unit monomial into qt.
  ExpVec shift(n);
  for (int i = 0; i < n; ++i) shift[i] = -m * g.axis[i];
  LaurentPoly quotient = qt * LaurentPoly::monomial(n, shift, unit);
  return {quotient, rem};
}

}  // namespace ktoric
