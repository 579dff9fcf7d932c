#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trigcolloc/dense_matrix.hpp"
#include "trigcolloc/expr.hpp"
#include "trigcolloc/grid.hpp"
#include "trigcolloc/operators.hpp"

namespace trigcolloc {

struct BoundaryCondition {
    enum class Kind { Value, Derivative };
    Kind kind = Kind::Value;
    double location = 0.0; // must match a grid node modulo L
    double rhs = 0.0;
};

/// Node-wise recovery of a substituted unknown:
///   u_i = g(x_i) * [psi_i] * v_i + h(x_i)
struct PostMap {
    Expr g;
    Expr h;
    bool psi_weighted = false;
};

struct BVProblem {
    Grid grid;
    Expr op;
    Variant variant = Variant::Plain;
    Expr rhs;
    std::vector<BoundaryCondition> conditions;
    std::optional<PostMap> post_map;
    std::optional<Expr> exact_solution;
    // interval used for dense sampling; defaults to [x_0, x_0 + L)
    std::optional<std::pair<double, double>> interval;
};

struct NodeSolution {
    Grid grid;
    std::vector<double> values; // after post map, approximates u at the nodes
    std::vector<double> raw;    // pre-map solution vector
    double residual_norm = 0.0;
    std::size_t stacked_rows = 0;
    bool rank_deficient = false;
    std::optional<PostMap> post_map;
    std::optional<std::pair<double, double>> interval;
};

struct StackedSystem {
    DenseMatrix c; // (N + #conditions) x N
    std::vector<double> b;
};

/// Operator block on top, one row per boundary condition below. In the
/// preconditioned variant the whole system is expressed in Dhat
/// coordinates, so every rhs entry for row k carries a 1/psi_k factor.
StackedSystem assemble(const BVProblem& problem);

NodeSolution solve_bvp(const BVProblem& problem);

/// max_j |u_j - exact(x_j)|
double max_error(const NodeSolution& solution, const Expr& exact);

/// Interpolant samples at `count` equispaced points over the problem
/// interval; the post map is applied pointwise off-node.
std::vector<std::pair<double, double>> dense_sample(const NodeSolution& solution,
                                                    std::size_t count);

} // namespace trigcolloc
