#include "trigcolloc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "trigcolloc/linalg.hpp"
#include "trigcolloc/rng.hpp"

namespace trigcolloc {

namespace {

constexpr double kPi = std::numbers::pi;

// Reduce x into [base, base + L); one reduction of the evaluation point
// keeps every pairwise difference inside (-L, L).
double reduce_period(double x, double base, double period) {
    double t = std::fmod(x - base, period);
    if (t < 0.0)
        t += period;
    return base + t;
}

} // namespace

double eval_coeffs(const TrigPolyCoeffs& c, double x) {
    const double w = 2.0 * kPi / c.period;
    double s = c.constant;
    for (int k = 1; k <= c.degree; ++k)
        s += c.sin_coeffs[k - 1] * std::sin(w * k * x) + c.cos_coeffs[k - 1] * std::cos(w * k * x);
    return s;
}

Grid::Grid(std::vector<double> nodes, double period)
    : nodes_(std::move(nodes)), period_(period) {
    const std::size_t n = nodes_.size();
    if (period_ <= 0.0)
        throw std::invalid_argument("grid: period must be positive");
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("grid: node count must be odd and >= 3");
    for (std::size_t i = 1; i < n; ++i)
        if (!(nodes_[i] > nodes_[i - 1]))
            throw std::invalid_argument("grid: nodes must be strictly increasing");
    if (!(nodes_.back() - nodes_.front() < period_))
        throw std::invalid_argument("grid: nodes must span less than one period");
    degree_ = static_cast<int>((n - 1) / 2);

    psi_.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        double p = 1.0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != m)
                p *= std::sin(kPi * (nodes_[m] - nodes_[k]) / period_);
        psi_[m] = p;
    }
}

double Grid::cardinal(std::size_t j, double x) const {
    if (j >= nodes_.size())
        throw std::out_of_range("cardinal: node index out of range");
    const double xr = reduce_period(x, nodes_.front(), period_);
    double p = 1.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        if (k != j)
            p *= std::sin(kPi * (xr - nodes_[k]) / period_);
    return p / psi_[j];
}

std::optional<std::size_t> Grid::find_node(double x, double tol) const {
    const double xr = reduce_period(x, nodes_.front(), period_);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        double d = std::abs(xr - nodes_[i]);
        d = std::min(d, std::abs(d - period_));
        if (d <= tol)
            return i;
    }
    return std::nullopt;
}

Grid make_uniform_grid(int node_count, double period, std::optional<double> anchor) {
    if (node_count < 3 || node_count % 2 == 0)
        throw std::invalid_argument("make_uniform_grid: node count must be odd and >= 3");
    if (period <= 0.0)
        throw std::invalid_argument("make_uniform_grid: period must be positive");
    std::vector<double> nodes(static_cast<std::size_t>(node_count));
    for (int j = 0; j < node_count; ++j)
        nodes[static_cast<std::size_t>(j)] = period * j / node_count;
    if (anchor) {
        if (*anchor < 0.0 || *anchor >= period)
            throw std::invalid_argument("make_uniform_grid: anchor outside [0, L)");
        std::size_t nearest = 0;
        for (std::size_t i = 1; i < nodes.size(); ++i)
            if (std::abs(nodes[i] - *anchor) < std::abs(nodes[nearest] - *anchor))
                nearest = i;
        nodes[nearest] = *anchor;
        std::sort(nodes.begin(), nodes.end());
        for (std::size_t i = 1; i < nodes.size(); ++i)
            if (nodes[i] == nodes[i - 1])
                throw std::invalid_argument("make_uniform_grid: anchor collides with a node");
    }
    return Grid(std::move(nodes), period);
}

Grid make_random_grid(int node_count, double period, std::uint64_t seed) {
    if (node_count < 3 || node_count % 2 == 0)
        throw std::invalid_argument("make_random_grid: node count must be odd and >= 3");
    Rng rng(seed);
    const double h = period / node_count;
    std::vector<double> nodes(static_cast<std::size_t>(node_count));
    for (int j = 0; j < node_count; ++j) {
        double jitter = rng.uniform(-0.4, 0.4);
        if (j == 0)
            jitter = std::abs(jitter); // keep x_0 >= 0
        nodes[static_cast<std::size_t>(j)] = (j + jitter) * h;
    }
    return Grid(std::move(nodes), period);
}

TrigInterpolant::TrigInterpolant(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("interpolant: value count does not match grid");
}

double TrigInterpolant::operator()(double x) const {
    double s = 0.0;
    for (std::size_t j = 0; j < values_.size(); ++j)
        s += values_[j] * grid_.cardinal(j, x);
    return s;
}

TrigInterpolant interpolate(const Grid& grid, std::vector<double> values) {
    return TrigInterpolant(grid, std::move(values));
}

TrigPolyCoeffs to_coefficients(const Grid& grid, const std::vector<double>& values) {
    const std::size_t n = grid.size();
    if (values.size() != n)
        throw std::invalid_argument("to_coefficients: value count does not match grid");
    const int deg = grid.degree();
    const double w = 2.0 * kPi / grid.period();
    // Collocation matrix in the basis {1, sin(kx), cos(kx)}.
    DenseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = grid.nodes()[j];
        m(j, 0) = 1.0;
        for (int k = 1; k <= deg; ++k) {
            m(j, static_cast<std::size_t>(2 * k - 1)) = std::sin(w * k * x);
            m(j, static_cast<std::size_t>(2 * k)) = std::cos(w * k * x);
        }
    }
    std::vector<double> c;
    try {
        c = lu_solve(m, values);
    } catch (const std::exception&) {
        throw std::runtime_error("to_coefficients: collocation system singular (invalid grid?)");
    }
    TrigPolyCoeffs out;
    out.constant = c[0];
    out.period = grid.period();
    out.degree = deg;
    out.sin_coeffs.resize(static_cast<std::size_t>(deg));
    out.cos_coeffs.resize(static_cast<std::size_t>(deg));
    for (int k = 1; k <= deg; ++k) {
        out.sin_coeffs[static_cast<std::size_t>(k - 1)] = c[static_cast<std::size_t>(2 * k - 1)];
        out.cos_coeffs[static_cast<std::size_t>(k - 1)] = c[static_cast<std::size_t>(2 * k)];
    }
    return out;
}

std::vector<double> sample_at_nodes(const TrigPolyCoeffs& c, const Grid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
        out[j] = eval_coeffs(c, grid.nodes()[j]);
    return out;
}

} // namespace trigcolloc
