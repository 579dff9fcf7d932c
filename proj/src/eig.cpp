#include "trigcolloc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trigcolloc {

EigResult solve_eig(const EigProblem& problem) {
    const DenseMatrix a = representation_of(problem.a_expr, problem.grid, problem.variant);
    EigResult out;
    if (problem.b_expr) {
        const DenseMatrix b = representation_of(*problem.b_expr, problem.grid, problem.variant);
        out.spectrum_raw = generalized_eigenvalues(a, b);
    } else {
        out.spectrum_raw = eigenvalues(a);
    }
    double scale = 0.0;
    for (const auto& z : out.spectrum_raw)
        scale = std::max(scale, std::abs(z));
    for (const auto& z : out.spectrum_raw) {
        if (std::abs(z.imag()) <= problem.imag_tol * scale)
            out.real_eigenvalues.push_back(z.real());
        else
            ++out.discarded_count;
    }
    std::sort(out.real_eigenvalues.begin(), out.real_eigenvalues.end());
    return out;
}

TrigInterpolant recover_eigenfunction(const Grid& grid, const std::vector<double>& w,
                                      Variant variant) {
    if (w.size() != grid.size())
        throw std::invalid_argument("recover_eigenfunction: vector length does not match grid");
    std::vector<double> values = w;
    if (variant == Variant::Preconditioned)
        for (std::size_t i = 0; i < values.size(); ++i)
            values[i] *= grid.psi()[i];
    return interpolate(grid, std::move(values));
}

std::vector<BoundsCheck> check_bounds(const EigResult& result, const BoundsTable& table,
                                      double slack) {
    std::vector<BoundsCheck> out;
    for (const BoundsRow& row : table) {
        if (row.index < 1 || static_cast<std::size_t>(row.index) > result.real_eigenvalues.size())
            throw std::out_of_range("check_bounds: eigenvalue index " +
                                    std::to_string(row.index) + " beyond computed spectrum");
        BoundsCheck c;
        c.row = row;
        c.value = result.real_eigenvalues[static_cast<std::size_t>(row.index - 1)];
        c.inside = c.value >= row.lower - slack && c.value <= row.upper + slack;
        out.push_back(c);
    }
    return out;
}

std::vector<double> eigen_error(const EigResult& result, const Expr& exact,
                                const std::vector<int>& indices) {
    std::vector<double> out;
    for (int i : indices) {
        if (i < 1 || static_cast<std::size_t>(i) > result.real_eigenvalues.size())
            throw std::out_of_range("eigen_error: eigenvalue index beyond computed spectrum");
        out.push_back(std::abs(result.real_eigenvalues[static_cast<std::size_t>(i - 1)] -
                               eval_scalar(exact, static_cast<double>(i))));
    }
    return out;
}

} // namespace trigcolloc
