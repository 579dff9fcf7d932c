#include "trigcolloc/bvp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "trigcolloc/linalg.hpp"

namespace trigcolloc {

StackedSystem assemble(const BVProblem& problem) {
    const Grid& grid = problem.grid;
    const std::size_t n = grid.size();
    const std::size_t rows = n + problem.conditions.size();
    const bool hat = problem.variant == Variant::Preconditioned;
    const auto& psi = grid.psi();

    const DenseMatrix op = representation_of(problem.op, grid, problem.variant);
    const DenseMatrix deriv_rows = hat ? precond_diff(grid) : diff_matrix(grid);

    StackedSystem sys{DenseMatrix(rows, n), std::vector<double>(rows, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            sys.c(i, j) = op(i, j);
        const double f = eval_scalar(problem.rhs, grid.nodes()[i]);
        sys.b[i] = hat ? f / psi[i] : f;
    }
    for (std::size_t ci = 0; ci < problem.conditions.size(); ++ci) {
        const BoundaryCondition& bc = problem.conditions[ci];
        const auto node = grid.find_node(bc.location);
        if (!node)
            throw std::invalid_argument("boundary condition at x = " +
                                        std::to_string(bc.location) +
                                        " does not coincide with a grid node");
        const std::size_t row = n + ci;
        const std::size_t k = *node;
        if (bc.kind == BoundaryCondition::Kind::Value) {
            sys.c(row, k) = 1.0;
        } else {
            for (std::size_t j = 0; j < n; ++j)
                sys.c(row, j) = deriv_rows(k, j);
        }
        sys.b[row] = hat ? bc.rhs / psi[k] : bc.rhs;
    }
    return sys;
}

NodeSolution solve_bvp(const BVProblem& problem) {
    const StackedSystem sys = assemble(problem);
    const LeastSquaresResult ls = least_squares(sys.c, sys.b);

    NodeSolution out{problem.grid, {}, ls.x, ls.residual_norm, sys.c.rows(),
                     ls.rank_deficient, problem.post_map, problem.interval};
    const Grid& grid = problem.grid;
    out.values.resize(grid.size());
    if (problem.post_map) {
        const PostMap& pm = *problem.post_map;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double x = grid.nodes()[i];
            double v = ls.x[i];
            if (pm.psi_weighted)
                v *= grid.psi()[i];
            out.values[i] = eval_scalar(pm.g, x) * v + eval_scalar(pm.h, x);
        }
    } else {
        out.values = ls.x;
    }
    return out;
}

double max_error(const NodeSolution& solution, const Expr& exact) {
    double mx = 0.0;
    for (std::size_t i = 0; i < solution.grid.size(); ++i)
        mx = std::max(mx,
                      std::abs(solution.values[i] - eval_scalar(exact, solution.grid.nodes()[i])));
    return mx;
}

std::vector<std::pair<double, double>> dense_sample(const NodeSolution& solution,
                                                    std::size_t count) {
    if (count < 2)
        throw std::invalid_argument("dense_sample: need at least two sample points");
    const Grid& grid = solution.grid;
    double lo = grid.nodes().front();
    double hi = lo + grid.period();
    if (solution.interval) {
        lo = solution.interval->first;
        hi = solution.interval->second;
    }

    std::vector<double> interp_values;
    if (solution.post_map && solution.post_map->psi_weighted) {
        interp_values.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            interp_values[i] = grid.psi()[i] * solution.raw[i];
    } else if (solution.post_map) {
        interp_values = solution.raw;
    } else {
        interp_values = solution.values;
    }
    const TrigInterpolant f = interpolate(grid, std::move(interp_values));

    std::vector<std::pair<double, double>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
        double u = f(x);
        if (solution.post_map)
            u = eval_scalar(solution.post_map->g, x) * u + eval_scalar(solution.post_map->h, x);
        out.emplace_back(x, u);
    }
    return out;
}

} // namespace trigcolloc
