#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <vector>

namespace ktoric {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline MatZ matz_from(const std::vector<std::vector<Int>>& rows) {
  MatZ m(static_cast<Eigen::Index>(rows.size()),
         rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline VecZ vecz_from(const std::vector<Int>& v) {
  VecZ out(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index i = 0; i < out.rows(); ++i) out(i) = v[i];
  return out;
}

inline MatQ to_rational(const MatZ& m) {
  MatQ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

inline VecQ to_rational(const VecZ& v) {
  VecQ out(v.rows());
  for (Eigen::Index i = 0; i < v.rows(); ++i) out(i) = Rat(v(i));
  return out;
}

}  // namespace ktoric
