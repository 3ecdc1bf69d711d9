#include "ktoric/rational_lp.hpp"

#include <stdexcept>
#include <vector>

namespace ktoric {

namespace {

// Phase-1 simplex on standard form M z = d, z >= 0, minimizing the sum of
// artificial variables. Bland's rule; exact rational tableau.
std::optional<VecQ> standard_form_feasible(MatQ M, VecQ d) {
  const Eigen::Index m = M.rows(), n = M.cols();
  for (Eigen::Index i = 0; i < m; ++i)
    if (d(i) < 0) {
      M.row(i) = -M.row(i);
      d(i) = -d(i);
    }
  // Tableau over columns [z | artificials | rhs].
  MatQ T(m + 1, n + m + 1);
  T.setZero();
  T.block(0, 0, m, n) = M;
  for (Eigen::Index i = 0; i < m; ++i) {
    T(i, n + i) = 1;
    T(i, n + m) = d(i);
  }
  // Objective row: minimize sum of artificials; reduced costs after pricing
  // out the artificial basis.
  for (Eigen::Index j = 0; j <= n + m; ++j) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += T(i, j);
    T(m, j) = (j >= n && j < n + m) ? Rat(1) - s : -s;
  }
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j)
      if (T(m, j) < 0) { enter = j; break; }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Rat best = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (T(i, enter) <= 0) continue;
      Rat ratio = T(i, n + m) / T(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      throw std::logic_error("simplex: phase-1 objective unbounded");
    Rat piv = T(leave, enter);
    T.row(leave) /= piv;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave || T(i, enter) == 0) continue;
      T.row(i) -= T(i, enter) * T.row(leave);
    }
    basis[leave] = enter;
  }

  if (T(m, n + m) != 0) return std::nullopt;  // optimum -sum(a) < 0
  VecQ z = VecQ::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[i] < n) z(basis[i]) = T(i, n + m);
  return z;
}

}  // namespace

std::optional<VecQ> lp_feasible_point(const MatQ& eq, const VecQ& eq_rhs,
                                      const MatQ& ge, const VecQ& ge_rhs,
                                      int num_vars) {
  const Eigen::Index ne = eq.rows(), ng = ge.rows(), n = num_vars;
  // x = u - v with u, v >= 0; slacks s >= 0 for the inequalities.
  MatQ M(ne + ng, 2 * n + ng);
  VecQ d(ne + ng);
  M.setZero();
  if (ne > 0) {
    M.block(0, 0, ne, n) = eq;
    M.block(0, n, ne, n) = -eq;
    d.head(ne) = eq_rhs;
  }
  if (ng > 0) {
    M.block(ne, 0, ng, n) = ge;
    M.block(ne, n, ng, n) = -ge;
    for (Eigen::Index i = 0; i < ng; ++i) M(ne + i, 2 * n + i) = -1;
    d.tail(ng) = ge_rhs;
  }
  auto z = standard_form_feasible(M, d);
  if (!z) return std::nullopt;
  VecQ x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = (*z)(i) - (*z)(n + i);
  return x;
}

}  // namespace ktoric
