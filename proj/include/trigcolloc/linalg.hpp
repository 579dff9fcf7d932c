#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "trigcolloc/dense_matrix.hpp"

namespace trigcolloc {

using Spectrum = std::vector<std::complex<double>>;

/// Solve A x = b by LU with partial pivoting. Throws on numerically
/// singular input (pivot below 1e-13 * ||A||_inf).
std::vector<double> lu_solve(const DenseMatrix& a, const std::vector<double>& b);

struct LeastSquaresResult {
    std::vector<double> x;
    double residual_norm = 0.0;
    std::size_t rank = 0;
    bool rank_deficient = false;
};

/// Minimum-norm least squares via Householder QR with column pivoting
/// (complete orthogonal decomposition for the rank-deficient case).
LeastSquaresResult least_squares(const DenseMatrix& a, const std::vector<double>& b);

struct SvdResult {
    std::vector<double> singular_values; // descending
    DenseMatrix v;                       // right singular vectors, columns
};

/// One-sided Jacobi SVD; returns singular values and right singular vectors.
SvdResult svd(const DenseMatrix& a);

std::vector<double> singular_values(const DenseMatrix& a);

/// Count of singular values above tol; default tol is the classical
/// max(rows,cols) * eps * sigma_max threshold.
std::size_t numerical_rank(const DenseMatrix& a, std::optional<double> tol = {});

/// Orthonormal right singular vectors for singular values at or below tol.
/// Throws if the matrix has full numerical rank at that tolerance.
std::vector<std::vector<double>> kernel_vectors(const DenseMatrix& a,
                                                std::optional<double> tol = {});

/// Eigenvalues of a real square matrix: balancing, Householder reduction to
/// Hessenberg form, Francis implicit double-shift QR.
Spectrum eigenvalues(const DenseMatrix& a);

/// Eigenvalues of B^{-1} A; B factored once by LU. Throws on singular B.
Spectrum generalized_eigenvalues(const DenseMatrix& a, const DenseMatrix& b);

/// Sort helper: ascending by (Re, Im).
void sort_spectrum(Spectrum& s);

} // namespace trigcolloc
