#pragma once

#include <span>

#include "trigcolloc/dense_matrix.hpp"
#include "trigcolloc/expr.hpp"
#include "trigcolloc/grid.hpp"

namespace trigcolloc {

enum class Variant { Plain, Preconditioned };

/// Differentiation matrix D: off-diagonal (psi_m/psi_j) * pi / (L sin(pi(x_m-x_j)/L)),
/// diagonal (pi/L) * sum_{k!=j} cot(pi(x_j-x_k)/L).
DenseMatrix diff_matrix(const Grid& grid);

/// X = Diag(x_0, ..., x_2n)
DenseMatrix mult_matrix(const Grid& grid);

/// Dhat = Psi^{-1} D Psi computed entrywise via the psi ratio; similar to D.
DenseMatrix precond_diff(const Grid& grid);

/// alpha_0 I + alpha_1 M + ... + alpha_s M^s, Horner form.
DenseMatrix matrix_poly(std::span<const double> alphas, const DenseMatrix& m);

/// Lower an operator expression: d -> D or Dhat, x -> X, d-free subtrees ->
/// Diag(f(x_j)), inv -> inverse diagonal (with singularity reporting).
DenseMatrix representation_of(const Expr& op, const Grid& grid, Variant variant);

} // namespace trigcolloc
