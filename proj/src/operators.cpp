#include "trigcolloc/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trigcolloc {

namespace {

constexpr double kPi = std::numbers::pi;

// Reject inverted factors that vanish (to within round-off) at a node,
// reporting which node; exact-zero checks in eval_scalar would let
// sin(1.5*pi) = -1 + eps slip through.
void check_inverted_factors(const Expr& e, const Grid& grid) {
    if (e.kind == Expr::Kind::Inv || e.kind == Expr::Kind::Div) {
        const Expr& den = e.args[e.kind == Expr::Kind::Inv ? 0 : 1];
        std::vector<double> vals(grid.size());
        double scale = 1.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            vals[j] = eval_scalar(den, grid.nodes()[j]);
            scale = std::max(scale, std::abs(vals[j]));
        }
        for (std::size_t j = 0; j < grid.size(); ++j)
            if (std::abs(vals[j]) < 1e-12 * scale)
                throw std::runtime_error("singular diagonal factor " + to_string(den) +
                                         " at node x_" + std::to_string(j) + " = " +
                                         std::to_string(grid.nodes()[j]));
    }
    for (const Expr& a : e.args)
        check_inverted_factors(a, grid);
}

// Diagonal matrix of a d-free subtree evaluated at the nodes.
DenseMatrix scalar_diag(const Expr& e, const Grid& grid) {
    check_inverted_factors(e, grid);
    std::vector<double> vals(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
        vals[j] = eval_scalar(e, grid.nodes()[j]);
    return DenseMatrix::diagonal(vals);
}

DenseMatrix inverse_diag(const Expr& e, const Grid& grid) {
    check_inverted_factors(e, grid);
    std::vector<double> vals(grid.size());
    double scale = 1.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        vals[j] = eval_scalar(e, grid.nodes()[j]);
        scale = std::max(scale, std::abs(vals[j]));
    }
    for (std::size_t j = 0; j < grid.size(); ++j) {
        if (std::abs(vals[j]) < 1e-12 * scale)
            throw std::runtime_error("singular diagonal factor " + to_string(e) + " at node x_" +
                                     std::to_string(j) + " = " +
                                     std::to_string(grid.nodes()[j]));
        vals[j] = 1.0 / vals[j];
    }
    return DenseMatrix::diagonal(vals);
}

DenseMatrix lower(const Expr& e, const Grid& grid, const DenseMatrix& d) {
    if (!e.contains_diff())
        return scalar_diag(e, grid);
    switch (e.kind) {
    case Expr::Kind::Diff:
        return d;
    case Expr::Kind::Add:
        return lower(e.args[0], grid, d) + lower(e.args[1], grid, d);
    case Expr::Kind::Sub:
        return lower(e.args[0], grid, d) - lower(e.args[1], grid, d);
    case Expr::Kind::Mul:
        return lower(e.args[0], grid, d) * lower(e.args[1], grid, d);
    case Expr::Kind::Div:
        // validated at parse time: denominator is a d-free constant
        return lower(e.args[0], grid, d) * inverse_diag(e.args[1], grid);
    case Expr::Kind::Neg:
        return -1.0 * lower(e.args[0], grid, d);
    case Expr::Kind::Pow:
        return matrix_power(lower(e.args[0], grid, d),
                            static_cast<unsigned>(e.args[1].number));
    case Expr::Kind::Inv:
        throw std::runtime_error("inverse of a non-diagonal operator is not supported");
    default:
        throw std::runtime_error("malformed operator expression");
    }
}

} // namespace

DenseMatrix diff_matrix(const Grid& grid) {
    const std::size_t n = grid.size();
    const double L = grid.period();
    const auto& x = grid.nodes();
    const auto& psi = grid.psi();
    DenseMatrix d(n, n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j < n; ++j) {
            if (m != j) {
                d(m, j) = (psi[m] / psi[j]) * kPi / (L * std::sin(kPi * (x[m] - x[j]) / L));
            } else {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j)
                        s += 1.0 / std::tan(kPi * (x[j] - x[k]) / L);
                d(j, j) = kPi / L * s;
            }
        }
    return d;
}

DenseMatrix mult_matrix(const Grid& grid) {
    return DenseMatrix::diagonal(grid.nodes());
}

DenseMatrix precond_diff(const Grid& grid) {
    DenseMatrix d = diff_matrix(grid);
    const auto& psi = grid.psi();
    for (std::size_t m = 0; m < grid.size(); ++m)
        for (std::size_t j = 0; j < grid.size(); ++j)
            d(m, j) *= psi[j] / psi[m];
    return d;
}

DenseMatrix matrix_poly(std::span<const double> alphas, const DenseMatrix& m) {
    if (alphas.empty())
        throw std::invalid_argument("matrix_poly: empty coefficient list");
    if (m.rows() != m.cols())
        throw std::invalid_argument("matrix_poly: matrix must be square");
    const std::size_t n = m.rows();
    DenseMatrix acc(n, n);
    for (std::size_t i = 0; i < n; ++i)
        acc(i, i) = alphas.back();
    for (std::size_t k = alphas.size() - 1; k-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i)
            acc(i, i) += alphas[k];
    }
    return acc;
}

DenseMatrix representation_of(const Expr& op, const Grid& grid, Variant variant) {
    const DenseMatrix d = (variant == Variant::Preconditioned) ? precond_diff(grid)
                                                               : diff_matrix(grid);
    return lower(op, grid, d);
}

} // namespace trigcolloc
