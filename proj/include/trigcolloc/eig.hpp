#pragma once

#include <optional>
#include <vector>

#include "trigcolloc/expr.hpp"
#include "trigcolloc/grid.hpp"
#include "trigcolloc/linalg.hpp"
#include "trigcolloc/operators.hpp"

namespace trigcolloc {

struct EigProblem {
    Grid grid;
    Expr a_expr;
    std::optional<Expr> b_expr; // generalized problem when present
    Variant variant = Variant::Preconditioned;
    double imag_tol = 1e-6;
};

struct BoundsRow {
    int index = 0; // 1-based eigenvalue index
    double lower = 0.0;
    double upper = 0.0;
};
using BoundsTable = std::vector<BoundsRow>;

struct EigResult {
    std::vector<double> real_eigenvalues; // ascending
    std::size_t discarded_count = 0;      // |Im| above tolerance, dropped
    Spectrum spectrum_raw;
};

EigResult solve_eig(const EigProblem& problem);

/// Eigenvector-to-eigenfunction recovery: plain -> sum w_i t_i;
/// preconditioned -> sum psi_i w_i t_i.
TrigInterpolant recover_eigenfunction(const Grid& grid, const std::vector<double>& w,
                                      Variant variant);

struct BoundsCheck {
    BoundsRow row;
    double value = 0.0;
    bool inside = false;
};

/// Slack of 1e-3 on both sides of each fixture bound.
std::vector<BoundsCheck> check_bounds(const EigResult& result, const BoundsTable& table,
                                      double slack = 1e-3);

/// |lambda_i - exact(i)| for each requested 1-based index; exact(i) is a
/// scalar expression evaluated at x = i.
std::vector<double> eigen_error(const EigResult& result, const Expr& exact,
                                const std::vector<int>& indices);

} // namespace trigcolloc
