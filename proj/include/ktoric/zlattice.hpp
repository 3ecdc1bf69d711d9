#pragma once

#include <optional>
#include <vector>

#include "ktoric/numeric.hpp"

namespace ktoric {

/// Smith normal form U*A*V = D with U, V unimodular and D diagonal,
/// d_i >= 0 and d_i | d_{i+1}.
struct SnfDecomposition {
  MatZ U;
  MatZ D;
  MatZ V;
};

SnfDecomposition snf(const MatZ& A);

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const MatZ& A);

/// Inverse of a unimodular matrix, over the integers. Throws if |det| != 1.
MatZ unimodular_inverse(const MatZ& A);

/// True iff the vectors extend to a Z-basis of the ambient lattice:
/// the SNF of the stacked matrix has all invariant factors equal to 1.
bool is_part_of_basis(const std::vector<VecZ>& vectors);

/// Z-basis of {x : A*x = 0}; empty iff the kernel is trivial.
std::vector<VecZ> kernel_basis(const MatZ& A);

/// v divided by the gcd of its coordinates; sign preserved. Throws on 0.
VecZ primitive(const VecZ& v);

/// A particular integer solution of A*x = b, if one exists.
std::optional<VecZ> solve_integer(const MatZ& A, const VecZ& b);

/// Given an n x k matrix whose columns are part of a lattice basis,
/// returns an n x n unimodular matrix whose first k columns are those columns.
MatZ extend_to_basis(const MatZ& cols, int ambient_rank);

}  // namespace ktoric
