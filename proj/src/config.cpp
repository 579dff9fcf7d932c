#include "trigcolloc/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace trigcolloc {

namespace {

struct Line {
    int number = 0;
    std::string section; // "" for the top level
    std::string key;
    std::string value;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const Line& l) {
    try {
        std::size_t pos = 0;
        double v = std::stod(l.value, &pos);
        if (trim(l.value.substr(pos)).empty())
            return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("expected a number for '" + l.key + "', got '" + l.value + "'", l.number);
}

int parse_int(const Line& l) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(l.value, &pos);
        if (trim(l.value.substr(pos)).empty())
            return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("expected an integer for '" + l.key + "', got '" + l.value + "'", l.number);
}

bool parse_bool(const Line& l) {
    if (l.value == "true" || l.value == "yes" || l.value == "1")
        return true;
    if (l.value == "false" || l.value == "no" || l.value == "0")
        return false;
    throw ConfigError("expected true/false for '" + l.key + "', got '" + l.value + "'", l.number);
}

// Whitespace/comma separated list; each entry may be a constant expression
// (pi/2, -1+1/21, ...).
std::vector<double> parse_numbers(const Line& l) {
    std::vector<double> out;
    std::istringstream in(l.value);
    std::string tok;
    while (in >> tok) {
        if (!tok.empty() && tok.back() == ',')
            tok.pop_back();
        if (tok.empty())
            continue;
        try {
            out.push_back(eval_scalar(parse_scalar(tok), 0.0));
        } catch (const std::exception&) {
            throw ConfigError("expected numbers for '" + l.key + "', got '" + tok + "'", l.number);
        }
    }
    if (out.empty())
        throw ConfigError("expected numbers for '" + l.key + "'", l.number);
    return out;
}

// Numeric fields may be written as expressions (pi/2, -1+2/21, ...).
double parse_numeric_expr(const Line& l) {
    try {
        Expr e = parse_scalar(l.value);
        return eval_scalar(e, 0.0);
    } catch (const std::exception& e) {
        throw ConfigError("cannot evaluate '" + l.key + "': " + e.what(), l.number);
    }
}

} // namespace

ProblemConfig parse_config(const std::string& text) {
    // Group lines into section instances first, preserving order so that
    // repeated [condition] and row entries accumulate.
    struct Section {
        std::string name;
        int line = 0;
        std::vector<Line> entries;
    };
    std::vector<Section> sections;
    sections.push_back({"", 0, {}});

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("unterminated section header", lineno);
            sections.push_back({trim(line.substr(1, line.size() - 2)), lineno, {}});
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", lineno);
        Line l;
        l.number = lineno;
        l.section = sections.back().name;
        l.key = trim(line.substr(0, eq));
        l.value = trim(line.substr(eq + 1));
        if (l.key.empty())
            throw ConfigError("empty key", lineno);
        sections.back().entries.push_back(l);
    }

    ProblemConfig cfg;
    bool saw_mode = false, saw_grid = false, saw_operator = false;
    bool saw_period = false, saw_points = false, saw_op_expr = false;

    auto unknown = [](const Line& l) {
        std::string where = l.section.empty() ? "top level" : "[" + l.section + "]";
        throw ConfigError("unknown key '" + l.key + "' in " + where, l.number);
    };

    for (const Section& sec : sections) {
        if (sec.name.empty()) {
            for (const Line& l : sec.entries) {
                if (l.key == "mode") {
                    if (l.value == "bvp")
                        cfg.mode = ProblemConfig::Mode::Bvp;
                    else if (l.value == "eig")
                        cfg.mode = ProblemConfig::Mode::Eig;
                    else
                        throw ConfigError("mode must be 'bvp' or 'eig'", l.number);
                    saw_mode = true;
                } else {
                    unknown(l);
                }
            }
        } else if (sec.name == "grid") {
            saw_grid = true;
            for (const Line& l : sec.entries) {
                if (l.key == "period") {
                    cfg.period = parse_numeric_expr(l);
                    saw_period = true;
                } else if (l.key == "points") {
                    cfg.points = parse_int(l);
                    saw_points = true;
                } else if (l.key == "placement") {
                    if (l.value == "uniform")
                        cfg.placement = ProblemConfig::Placement::Uniform;
                    else if (l.value == "interior")
                        cfg.placement = ProblemConfig::Placement::Interior;
                    else if (l.value == "endpoints")
                        cfg.placement = ProblemConfig::Placement::Endpoints;
                    else if (l.value == "explicit")
                        cfg.placement = ProblemConfig::Placement::Explicit;
                    else
                        throw ConfigError(
                            "placement must be uniform, interior, endpoints or explicit",
                            l.number);
                } else if (l.key == "anchor") {
                    cfg.anchor = parse_numeric_expr(l);
                } else if (l.key == "interval") {
                    std::vector<double> v = parse_numbers(l);
                    if (v.size() != 2 || !(v[0] < v[1]))
                        throw ConfigError("interval needs two increasing numbers", l.number);
                    cfg.interval = {v[0], v[1]};
                } else if (l.key == "nodes") {
                    cfg.explicit_nodes = parse_numbers(l);
                } else {
                    unknown(l);
                }
            }
        } else if (sec.name == "operator") {
            saw_operator = true;
            for (const Line& l : sec.entries) {
                if (l.key == "expr") {
                    cfg.op_text = l.value;
                    saw_op_expr = true;
                } else if (l.key == "variant") {
                    if (l.value == "plain")
                        cfg.variant = Variant::Plain;
                    else if (l.value == "preconditioned")
                        cfg.variant = Variant::Preconditioned;
                    else
                        throw ConfigError("variant must be 'plain' or 'preconditioned'", l.number);
                } else {
                    unknown(l);
                }
            }
        } else if (sec.name == "rhs") {
            for (const Line& l : sec.entries) {
                if (l.key == "expr")
                    cfg.rhs_text = l.value;
                else
                    unknown(l);
            }
        } else if (sec.name == "condition") {
            BoundaryCondition bc;
            bool saw_kind = false, saw_loc = false;
            for (const Line& l : sec.entries) {
                if (l.key == "kind") {
                    if (l.value == "value")
                        bc.kind = BoundaryCondition::Kind::Value;
                    else if (l.value == "derivative")
                        bc.kind = BoundaryCondition::Kind::Derivative;
                    else
                        throw ConfigError("kind must be 'value' or 'derivative'", l.number);
                    saw_kind = true;
                } else if (l.key == "location") {
                    bc.location = parse_numeric_expr(l);
                    saw_loc = true;
                } else if (l.key == "rhs") {
                    bc.rhs = parse_numeric_expr(l);
                } else {
                    unknown(l);
                }
            }
            if (!saw_kind || !saw_loc)
                throw ConfigError("[condition] needs 'kind' and 'location'", sec.line);
            cfg.conditions.push_back(bc);
        } else if (sec.name == "post_map") {
            ProblemConfig::PostMapText pm;
            bool saw_g = false, saw_h = false;
            for (const Line& l : sec.entries) {
                if (l.key == "g") {
                    pm.g = l.value;
                    saw_g = true;
                } else if (l.key == "h") {
                    pm.h = l.value;
                    saw_h = true;
                } else if (l.key == "psi_weighted") {
                    pm.psi_weighted = parse_bool(l);
                } else {
                    unknown(l);
                }
            }
            if (!saw_g || !saw_h)
                throw ConfigError("[post_map] needs 'g' and 'h'", sec.line);
            cfg.post_map = pm;
        } else if (sec.name == "exact") {
            for (const Line& l : sec.entries) {
                if (l.key == "expr")
                    cfg.exact_text = l.value;
                else
                    unknown(l);
            }
        } else if (sec.name == "B") {
            for (const Line& l : sec.entries) {
                if (l.key == "expr")
                    cfg.b_text = l.value;
                else
                    unknown(l);
            }
        } else if (sec.name == "eig") {
            for (const Line& l : sec.entries) {
                if (l.key == "imag_tol")
                    cfg.imag_tol = parse_double(l);
                else
                    unknown(l);
            }
        } else if (sec.name == "reference") {
            for (const Line& l : sec.entries) {
                if (l.key == "type") {
                    if (l.value == "exact")
                        cfg.ref_type = ProblemConfig::RefType::Exact;
                    else if (l.value == "bounds")
                        cfg.ref_type = ProblemConfig::RefType::Bounds;
                    else
                        throw ConfigError("reference type must be 'exact' or 'bounds'", l.number);
                } else if (l.key == "expr") {
                    cfg.ref_expr = l.value;
                } else if (l.key == "indices") {
                    for (double v : parse_numbers(l)) {
                        if (v < 1 || v != std::floor(v))
                            throw ConfigError("indices must be positive integers", l.number);
                        cfg.ref_indices.push_back(static_cast<int>(v));
                    }
                } else if (l.key == "row") {
                    std::vector<double> v = parse_numbers(l);
                    if (v.size() != 3 || v[0] < 1 || v[0] != std::floor(v[0]) || !(v[1] <= v[2]))
                        throw ConfigError("row needs 'index lower upper'", l.number);
                    cfg.bounds.push_back({static_cast<int>(v[0]), v[1], v[2]});
                } else {
                    unknown(l);
                }
            }
        } else {
            throw ConfigError("unknown section [" + sec.name + "]", sec.line);
        }
    }

    if (!saw_mode)
        throw ConfigError("missing top-level 'mode' (bvp or eig)");
    if (!saw_grid)
        throw ConfigError("missing [grid] section");
    if (!saw_period)
        throw ConfigError("[grid] needs 'period'");
    if (!saw_operator || !saw_op_expr)
        throw ConfigError("missing [operator] section with 'expr'");
    if (cfg.period <= 0.0)
        throw ConfigError("period must be positive");

    if (cfg.placement == ProblemConfig::Placement::Explicit) {
        if (cfg.explicit_nodes.empty())
            throw ConfigError("placement 'explicit' needs [grid] 'nodes'");
        if (saw_points && cfg.points != static_cast<int>(cfg.explicit_nodes.size()))
            throw ConfigError("'points' disagrees with the explicit node list");
        cfg.points = static_cast<int>(cfg.explicit_nodes.size());
    } else {
        if (!saw_points)
            throw ConfigError("[grid] needs 'points'");
        if (!cfg.explicit_nodes.empty())
            throw ConfigError("'nodes' only makes sense with placement 'explicit'");
    }
    if ((cfg.placement == ProblemConfig::Placement::Interior ||
         cfg.placement == ProblemConfig::Placement::Endpoints) &&
        !cfg.interval)
        throw ConfigError("placement '" +
                          std::string(cfg.placement == ProblemConfig::Placement::Interior
                                          ? "interior"
                                          : "endpoints") +
                          "' needs [grid] 'interval'");
    if (cfg.anchor && cfg.placement != ProblemConfig::Placement::Uniform)
        throw ConfigError("'anchor' only applies to placement 'uniform'");

    if (cfg.mode == ProblemConfig::Mode::Bvp) {
        if (!cfg.rhs_text)
            throw ConfigError("mode 'bvp' needs an [rhs] section with 'expr'");
        if (cfg.b_text)
            throw ConfigError("[B] only applies to mode 'eig'");
        if (cfg.ref_type == ProblemConfig::RefType::Bounds || !cfg.bounds.empty())
            throw ConfigError("bounds references only apply to mode 'eig'");
        if (cfg.variant == Variant::Preconditioned && cfg.post_map && !cfg.post_map->psi_weighted)
            throw ConfigError(
                "a post map combined with the preconditioned variant must be psi_weighted");
    } else {
        if (cfg.rhs_text)
            throw ConfigError("[rhs] only applies to mode 'bvp'");
        if (!cfg.conditions.empty())
            throw ConfigError("[condition] only applies to mode 'bvp'");
        if (cfg.post_map)
            throw ConfigError("[post_map] only applies to mode 'bvp'");
        if (cfg.exact_text)
            throw ConfigError("[exact] only applies to mode 'bvp'; use [reference]");
    }
    if (cfg.ref_type == ProblemConfig::RefType::Exact) {
        if (cfg.ref_expr.empty())
            throw ConfigError("reference type 'exact' needs 'expr'");
        if (cfg.ref_indices.empty())
            throw ConfigError("reference type 'exact' needs 'indices'");
    }
    if (cfg.ref_type == ProblemConfig::RefType::Bounds && cfg.bounds.empty())
        throw ConfigError("reference type 'bounds' needs at least one 'row'");

    // Expressions are parsed eagerly so that syntax errors surface with the
    // config file as context, not at solve time.
    try {
        Expr op = parse_operator(cfg.op_text);
        (void)op;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("[operator] expr: ") + e.what());
    }
    auto check_scalar = [](const char* what, const std::string& text) {
        try {
            Expr e = parse_scalar(text);
            (void)e;
        } catch (const std::exception& ex) {
            throw ConfigError(std::string(what) + ": " + ex.what());
        }
    };
    if (cfg.rhs_text)
        check_scalar("[rhs] expr", *cfg.rhs_text);
    if (cfg.post_map) {
        check_scalar("[post_map] g", cfg.post_map->g);
        check_scalar("[post_map] h", cfg.post_map->h);
    }
    if (cfg.exact_text)
        check_scalar("[exact] expr", *cfg.exact_text);
    if (cfg.b_text) {
        try {
            Expr b = parse_operator(*cfg.b_text);
            (void)b;
        } catch (const std::exception& e) {
            throw ConfigError(std::string("[B] expr: ") + e.what());
        }
    }
    if (!cfg.ref_expr.empty())
        check_scalar("[reference] expr", cfg.ref_expr);

    return cfg;
}

ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

Grid build_grid(const ProblemConfig& cfg) {
    switch (cfg.placement) {
    case ProblemConfig::Placement::Uniform:
        return make_uniform_grid(cfg.points, cfg.period, cfg.anchor);
    case ProblemConfig::Placement::Explicit:
        return Grid(cfg.explicit_nodes, cfg.period);
    case ProblemConfig::Placement::Interior: {
        const auto [lo, hi] = *cfg.interval;
        std::vector<double> nodes(static_cast<std::size_t>(cfg.points));
        for (int j = 1; j <= cfg.points; ++j)
            nodes[static_cast<std::size_t>(j - 1)] = lo + (hi - lo) * j / (cfg.points + 1);
        return Grid(std::move(nodes), cfg.period);
    }
    case ProblemConfig::Placement::Endpoints: {
        const auto [lo, hi] = *cfg.interval;
        std::vector<double> nodes(static_cast<std::size_t>(cfg.points));
        for (int j = 0; j < cfg.points; ++j)
            nodes[static_cast<std::size_t>(j)] = lo + (hi - lo) * j / (cfg.points - 1);
        return Grid(std::move(nodes), cfg.period);
    }
    }
    throw ConfigError("unreachable placement");
}

BVProblem build_bvp(const ProblemConfig& cfg) {
    if (cfg.mode != ProblemConfig::Mode::Bvp)
        throw ConfigError("config mode is not 'bvp'");
    BVProblem p{build_grid(cfg),
                parse_operator(cfg.op_text),
                cfg.variant,
                parse_scalar(cfg.rhs_text.value()),
                cfg.conditions,
                {},
                {},
                cfg.interval};
    if (cfg.post_map)
        p.post_map = PostMap{parse_scalar(cfg.post_map->g), parse_scalar(cfg.post_map->h),
                             cfg.post_map->psi_weighted};
    if (cfg.exact_text)
        p.exact_solution = parse_scalar(*cfg.exact_text);
    return p;
}

EigProblem build_eig(const ProblemConfig& cfg) {
    if (cfg.mode != ProblemConfig::Mode::Eig)
        throw ConfigError("config mode is not 'eig'");
    EigProblem p{build_grid(cfg), parse_operator(cfg.op_text), {}, cfg.variant, cfg.imag_tol};
    if (cfg.b_text)
        p.b_expr = parse_operator(*cfg.b_text);
    return p;
}

} // namespace trigcolloc
