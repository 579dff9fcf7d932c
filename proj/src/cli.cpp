#include "trigcolloc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigcolloc/bvp.hpp"
#include "trigcolloc/config.hpp"
#include "trigcolloc/eig.hpp"
#include "trigcolloc/example_configs.hpp"
#include "trigcolloc/rank.hpp"
#include "trigcolloc/svg.hpp"

namespace trigcolloc {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void write_matrix_csv(std::ostream& out, const Grid& grid, const DenseMatrix& m,
                      const std::string& label) {
    out << "# " << label << ", nodes:";
    for (double x : grid.nodes())
        out << ' ' << fmt17(x);
    out << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? "," : "") << fmt17(m(i, j));
        out << '\n';
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open output file '" + path + "'");
    return f;
}

json report_to_json(const RankReport& r, const std::string& grid_kind) {
    json j;
    j["grid"] = grid_kind;
    j["kernel_frequencies"] = r.kernel_freqs;
    j["kernel_frequency_count"] = r.kernel_freq_count;
    j["predicted_rank"] = r.predicted_rank;
    j["measured_rank"] = r.measured_rank;
    j["sigma_tail"] = r.sigma_tail;
    j["match"] = r.match;
    j["max_kernel_residual"] = r.max_kernel_residual;
    return j;
}

int cmd_diffmat(int points, double period, std::optional<double> anchor, bool hat,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
    Grid grid = make_uniform_grid(points, period, anchor);
    std::ofstream file;
    std::ostream* dst = &out;
    if (!out_path.empty()) {
        file = open_out(out_path);
        dst = &file;
    }
    write_matrix_csv(*dst, grid, diff_matrix(grid), "D");
    if (hat)
        write_matrix_csv(*dst, grid, precond_diff(grid), "Dhat");
    if (!out_path.empty())
        err << "wrote " << out_path << "\n";
    return kOk;
}

int cmd_rank(const std::vector<double>& alphas, double period, int degree, int trials,
             std::uint64_t seed, std::ostream& out, std::ostream& err) {
    RankSpec spec{alphas, period, degree};
    validate(spec);
    const int points = 2 * degree + 1;

    json reports = json::array();
    bool all_match = true;
    RankReport uniform = verify_rank(spec, make_uniform_grid(points, period));
    all_match = all_match && uniform.match;
    reports.push_back(report_to_json(uniform, "uniform"));
    for (int t = 0; t < trials; ++t) {
        RankReport r = verify_rank(spec, make_random_grid(points, period, seed + t));
        all_match = all_match && r.match;
        reports.push_back(report_to_json(r, "random[" + std::to_string(t) + "]"));
    }
    out << reports.dump(2) << '\n';
    err << "rank: predicted " << uniform.predicted_rank << ", measured " << uniform.measured_rank
        << " on " << (trials + 1) << " grids"
        << (all_match ? " -- all match" : " -- MISMATCH") << '\n';
    return all_match ? kOk : kCheckFailed;
}

int cmd_solve(const std::string& config_path, const std::string& csv_path,
              const std::string& dense_path, const std::string& svg_path, int samples,
              std::ostream& out, std::ostream& err) {
    const ProblemConfig cfg = load_config(config_path);
    const BVProblem problem = build_bvp(cfg);
    const NodeSolution sol = solve_bvp(problem);

    {
        std::ofstream file;
        std::ostream* dst = &out;
        if (!csv_path.empty()) {
            file = open_out(csv_path);
            dst = &file;
        }
        *dst << "j,x_j,u_j";
        if (problem.exact_solution)
            *dst << ",exact_j,abs_err";
        *dst << '\n';
        for (std::size_t j = 0; j < sol.grid.size(); ++j) {
            *dst << j << ',' << fmt17(sol.grid.nodes()[j]) << ',' << fmt17(sol.values[j]);
            if (problem.exact_solution) {
                const double e = eval_scalar(*problem.exact_solution, sol.grid.nodes()[j]);
                *dst << ',' << fmt17(e) << ',' << fmt17(std::abs(sol.values[j] - e));
            }
            *dst << '\n';
        }
    }

    if (!dense_path.empty() || !svg_path.empty()) {
        const auto pts = dense_sample(sol, static_cast<std::size_t>(samples));
        if (!dense_path.empty()) {
            std::ofstream f = open_out(dense_path);
            f << "x,u\n";
            for (const auto& [x, u] : pts)
                f << fmt17(x) << ',' << fmt17(u) << '\n';
        }
        if (!svg_path.empty()) {
            std::ofstream f = open_out(svg_path);
            f << render_svg_plot(pts, "u(x)");
        }
    }

    err << "residual = " << fmt17(sol.residual_norm)
        << (sol.rank_deficient ? " (rank-deficient system, minimum-norm solution)" : "") << '\n';
    if (problem.exact_solution)
        err << "E_max = " << fmt17(max_error(sol, *problem.exact_solution)) << '\n';
    return kOk;
}

int cmd_eig(const std::string& config_path, const std::string& csv_path,
            const std::string& json_path, std::ostream& out, std::ostream& err) {
    const ProblemConfig cfg = load_config(config_path);
    const EigProblem problem = build_eig(cfg);
    const EigResult result = solve_eig(problem);

    std::optional<Expr> exact;
    if (cfg.ref_type == ProblemConfig::RefType::Exact)
        exact = parse_scalar(cfg.ref_expr);
    std::vector<BoundsCheck> checks;
    if (cfg.ref_type == ProblemConfig::RefType::Bounds)
        checks = check_bounds(result, cfg.bounds);

    {
        std::ofstream file;
        std::ostream* dst = &out;
        if (!csv_path.empty()) {
            file = open_out(csv_path);
            dst = &file;
        }
        *dst << "i,lambda_i,exact_i,lower,upper,in_bounds\n";
        for (std::size_t i = 0; i < result.real_eigenvalues.size(); ++i) {
            const int idx = static_cast<int>(i) + 1;
            *dst << idx << ',' << fmt17(result.real_eigenvalues[i]) << ',';
            if (exact &&
                std::find(cfg.ref_indices.begin(), cfg.ref_indices.end(), idx) !=
                    cfg.ref_indices.end())
                *dst << fmt17(eval_scalar(*exact, idx));
            *dst << ',';
            const BoundsCheck* c = nullptr;
            for (const BoundsCheck& bc : checks)
                if (bc.row.index == idx)
                    c = &bc;
            if (c)
                *dst << fmt17(c->row.lower) << ',' << fmt17(c->row.upper) << ','
                     << (c->inside ? "1" : "0");
            else
                *dst << ',' << ',';
            *dst << '\n';
        }
    }

    if (!json_path.empty()) {
        json j;
        j["real_eigenvalues"] = result.real_eigenvalues;
        j["discarded_count"] = result.discarded_count;
        if (!checks.empty()) {
            json rows = json::array();
            for (const BoundsCheck& c : checks)
                rows.push_back({{"index", c.row.index},
                                {"value", c.value},
                                {"lower", c.row.lower},
                                {"upper", c.row.upper},
                                {"in_bounds", c.inside}});
            j["bounds"] = rows;
        }
        open_out(json_path) << j.dump(2) << '\n';
    }

    err << "real eigenvalues: " << result.real_eigenvalues.size() << ", discarded "
        << result.discarded_count << " with significant imaginary part\n";
    bool all_inside = true;
    for (const BoundsCheck& c : checks) {
        all_inside = all_inside && c.inside;
        err << "lambda_" << c.row.index << " = " << fmt17(c.value) << " in ["
            << fmt17(c.row.lower) << ", " << fmt17(c.row.upper) << "] : "
            << (c.inside ? "ok" : "OUT OF BOUNDS") << '\n';
    }
    if (exact)
        for (int idx : cfg.ref_indices)
            err << "lambda_" << idx << " = "
                << fmt17(result.real_eigenvalues[static_cast<std::size_t>(idx - 1)])
                << ", exact " << fmt17(eval_scalar(*exact, idx)) << '\n';
    return all_inside ? kOk : kCheckFailed;
}

ProblemConfig example_cfg(std::string_view name) {
    return parse_config(std::string(example_config(name)));
}

void write_bvp_error_table(const std::string& path, std::string_view example,
                           const std::vector<int>& point_counts) {
    std::ofstream f = open_out(path);
    f << "N,E_max\n";
    for (int n : point_counts) {
        ProblemConfig cfg = example_cfg(example);
        cfg.points = n;
        const BVProblem problem = build_bvp(cfg);
        const NodeSolution sol = solve_bvp(problem);
        f << n << ',' << fmt17(max_error(sol, *problem.exact_solution)) << '\n';
    }
}

void write_eig_bounds_table(const std::string& path, std::string_view example) {
    ProblemConfig cfg = example_cfg(example);
    const EigResult result = solve_eig(build_eig(cfg));
    const auto checks = check_bounds(result, cfg.bounds);
    std::ofstream f = open_out(path);
    f << "i,lambda_i,lower,upper,in_bounds\n";
    for (const BoundsCheck& c : checks)
        f << c.row.index << ',' << fmt17(c.value) << ',' << fmt17(c.row.lower) << ','
          << fmt17(c.row.upper) << ',' << (c.inside ? 1 : 0) << '\n';
}

int cmd_paper(const std::string& out_dir, std::ostream& err) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto path = [&](const char* name) { return (fs::path(out_dir) / name).string(); };

    write_bvp_error_table(path("table1.csv"), "example1", {5, 7, 9});
    write_bvp_error_table(path("table2.csv"), "example2", {5, 11, 21});

    {
        ProblemConfig cfg = example_cfg("example4");
        const EigResult result = solve_eig(build_eig(cfg));
        const Expr exact = parse_scalar(cfg.ref_expr);
        std::ofstream f = open_out(path("table3.csv"));
        f << "i,lambda_i,exact_i,abs_err\n";
        for (int idx : cfg.ref_indices) {
            const double lam = result.real_eigenvalues[static_cast<std::size_t>(idx - 1)];
            const double ex = eval_scalar(exact, idx);
            f << idx << ',' << fmt17(lam) << ',' << fmt17(ex) << ',' << fmt17(std::abs(lam - ex))
              << '\n';
        }
    }

    write_eig_bounds_table(path("table4.csv"), "example5a");
    write_eig_bounds_table(path("table5.csv"), "example5b");
    write_eig_bounds_table(path("table6.csv"), "example6");

    {
        const NodeSolution sol = solve_bvp(build_bvp(example_cfg("example3")));
        open_out(path("fig1.svg")) << render_svg_plot(dense_sample(sol, 1000), "u(x)");
    }

    json manifest;
    manifest["artifacts"] = json::array({
        {{"file", "table1.csv"}, {"kind", "table"}, {"index", 1}, {"config", "example1"}},
        {{"file", "table2.csv"}, {"kind", "table"}, {"index", 2}, {"config", "example2"}},
        {{"file", "table3.csv"}, {"kind", "table"}, {"index", 3}, {"config", "example4"}},
        {{"file", "table4.csv"}, {"kind", "table"}, {"index", 4}, {"config", "example5a"}},
        {{"file", "table5.csv"}, {"kind", "table"}, {"index", 5}, {"config", "example5b"}},
        {{"file", "table6.csv"}, {"kind", "table"}, {"index", 6}, {"config", "example6"}},
        {{"file", "fig1.svg"}, {"kind", "figure"}, {"index", 1}, {"config", "example3"}},
    });
    open_out(path("manifest.json")) << manifest.dump(2) << '\n';

    err << "wrote 7 artifacts + manifest.json to " << out_dir << '\n';
    return kOk;
}

} // namespace

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TRIGSPEC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("TRIGSPEC_SEED must be an unsigned integer");
        }
    }
    return 0x5eedULL;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trigonometric spectral collocation toolkit"};
    app.require_subcommand(1);

    // diffmat
    int dm_points = 0;
    double dm_period = 2.0 * std::numbers::pi;
    std::optional<double> dm_anchor;
    bool dm_hat = false;
    std::string dm_out;
    auto* diffmat = app.add_subcommand("diffmat", "Write the differentiation matrix as CSV");
    diffmat->add_option("-N,--points", dm_points, "Node count (odd, >= 3)")->required();
    diffmat->add_option("-L,--period", dm_period, "Period");
    diffmat->add_option("--anchor", dm_anchor, "Pin the nearest uniform node to this abscissa");
    diffmat->add_flag("--hat", dm_hat, "Also write the preconditioned matrix");
    diffmat->add_option("-o,--output", dm_out, "Output file (default stdout)");

    // rank
    std::vector<double> rk_alphas;
    double rk_period = 2.0 * std::numbers::pi;
    int rk_degree = 0, rk_trials = 3;
    std::optional<std::uint64_t> rk_seed;
    auto* rank = app.add_subcommand("rank", "Predict and verify the rank of P(D)");
    rank->add_option("--alphas", rk_alphas, "Coefficients alpha_0,...,alpha_s")
        ->required()
        ->delimiter(',');
    rank->add_option("-L,--period", rk_period, "Period");
    rank->add_option("-n,--degree", rk_degree, "Grid degree n (N = 2n+1)")->required();
    rank->add_option("--trials", rk_trials, "Number of random grids")->check(CLI::NonNegativeNumber);
    rank->add_option("--seed", rk_seed, "Seed for random grids (default TRIGSPEC_SEED or 0x5eed)");

    // solve
    std::string sv_config, sv_csv, sv_dense, sv_svg;
    int sv_samples = 1000;
    auto* solve = app.add_subcommand("solve", "Solve a boundary value problem from a config file");
    solve->add_option("config", sv_config, "Problem config file")->required();
    solve->add_option("--csv", sv_csv, "Node solution CSV (default stdout)");
    solve->add_option("--dense", sv_dense, "Dense-sample CSV");
    solve->add_option("--svg", sv_svg, "SVG plot of the dense samples");
    solve->add_option("--samples", sv_samples, "Dense sample count")->check(CLI::Range(2, 100000));

    // eig
    std::string eg_config, eg_csv, eg_json;
    auto* eig = app.add_subcommand("eig", "Solve an eigenvalue problem from a config file");
    eig->add_option("config", eg_config, "Problem config file")->required();
    eig->add_option("--csv", eg_csv, "Spectrum CSV (default stdout)");
    eig->add_option("--json", eg_json, "Spectrum + bounds report as JSON");

    // paper
    std::string pp_out = "paper_out";
    auto* paper = app.add_subcommand("paper", "Regenerate the reference tables and figure");
    paper->add_option("-o,--out", pp_out, "Output directory");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (diffmat->parsed()) {
            if (dm_points < 3 || dm_points % 2 == 0) {
                err << "error: --points must be odd and at least 3\n";
                return kUsage;
            }
            return cmd_diffmat(dm_points, dm_period, dm_anchor, dm_hat, dm_out, out, err);
        }
        if (rank->parsed())
            return cmd_rank(rk_alphas, rk_period, rk_degree, rk_trials,
                            rk_seed ? *rk_seed : default_seed(), out, err);
        if (solve->parsed())
            return cmd_solve(sv_config, sv_csv, sv_dense, sv_svg, sv_samples, out, err);
        if (eig->parsed())
            return cmd_eig(eg_config, eg_csv, eg_json, out, err);
        if (paper->parsed())
            return cmd_paper(pp_out, err);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "expression error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    err << "error: no subcommand given\n";
    return kUsage;
}

} // namespace trigcolloc
