#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace trigcolloc {

/// Coefficient form of an L-periodic trigonometric polynomial of degree n:
///   c + sum_k (a_k sin(2*pi*k*x/L) + b_k cos(2*pi*k*x/L))
struct TrigPolyCoeffs {
    double constant = 0.0;
    std::vector<double> sin_coeffs; // a_1..a_n
    std::vector<double> cos_coeffs; // b_1..b_n
    double period = 0.0;
    int degree = 0;
};

double eval_coeffs(const TrigPolyCoeffs& c, double x);

/// Collocation grid: N = 2n+1 strictly increasing nodes spanning less than
/// one period L. The cardinal-function normalizers psi_m are cached on
/// construction.
class Grid {
public:
    Grid(std::vector<double> nodes, double period);

    double period() const { return period_; }
    int degree() const { return degree_; }
    std::size_t size() const { return nodes_.size(); } // N = 2n+1
    const std::vector<double>& nodes() const { return nodes_; }

    /// psi_m = prod_{k!=m} sin(pi (x_m - x_k) / L), all nonzero
    const std::vector<double>& psi() const { return psi_; }

    /// cardinal function t_j(x); x is reduced into one period first
    double cardinal(std::size_t j, double x) const;

    /// index of the node matching x modulo L, within tol
    std::optional<std::size_t> find_node(double x, double tol = 1e-12) const;

private:
    std::vector<double> nodes_;
    double period_;
    int degree_;
    std::vector<double> psi_;
};

/// Uniform nodes x_j = j*L/N; if anchor is given, the nearest node is
/// replaced by anchor exactly and the sequence re-sorted.
Grid make_uniform_grid(int node_count, double period, std::optional<double> anchor = {});

/// Jitter-perturbed uniform grid, deterministic in seed; stays strictly
/// increasing inside [0, L).
Grid make_random_grid(int node_count, double period, std::uint64_t seed);

/// The trigonometric interpolant T[u](x) = sum_j u_j t_j(x).
class TrigInterpolant {
public:
    TrigInterpolant(Grid grid, std::vector<double> values);

    double operator()(double x) const;

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

private:
    Grid grid_;
    std::vector<double> values_;
};

TrigInterpolant interpolate(const Grid& grid, std::vector<double> values);

/// Change of basis from node values to (c, a_k, b_k); solves the N x N
/// collocation system by pivoted LU (grids may be non-uniform).
TrigPolyCoeffs to_coefficients(const Grid& grid, const std::vector<double>& values);

/// Node samples of the coefficient-form polynomial.
std::vector<double> sample_at_nodes(const TrigPolyCoeffs& c, const Grid& grid);

} // namespace trigcolloc
