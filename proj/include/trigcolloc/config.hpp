#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigcolloc/bvp.hpp"
#include "trigcolloc/eig.hpp"
#include "trigcolloc/grid.hpp"

namespace trigcolloc {

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what) {}
};

/// Parsed problem description. Text format: `key = value` lines grouped
/// under [section] headers; see the README for the full schema.
struct ProblemConfig {
    enum class Mode { Bvp, Eig };
    enum class Placement { Uniform, Interior, Endpoints, Explicit };
    enum class RefType { None, Exact, Bounds };

    Mode mode = Mode::Bvp;

    double period = 0.0;
    int points = 0;
    Placement placement = Placement::Uniform;
    std::optional<double> anchor;
    std::optional<std::pair<double, double>> interval;
    std::vector<double> explicit_nodes;

    std::string op_text;
    Variant variant = Variant::Plain;
    std::optional<std::string> rhs_text;
    std::vector<BoundaryCondition> conditions;

    struct PostMapText {
        std::string g;
        std::string h;
        bool psi_weighted = false;
    };
    std::optional<PostMapText> post_map;
    std::optional<std::string> exact_text;

    std::optional<std::string> b_text;
    double imag_tol = 1e-6;

    RefType ref_type = RefType::None;
    std::string ref_expr;
    std::vector<int> ref_indices;
    BoundsTable bounds;
};

ProblemConfig parse_config(const std::string& text);
ProblemConfig load_config(const std::string& path);

Grid build_grid(const ProblemConfig& cfg);
BVProblem build_bvp(const ProblemConfig& cfg);
EigProblem build_eig(const ProblemConfig& cfg);

} // namespace trigcolloc
