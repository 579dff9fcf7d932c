#include "trigcolloc/rank.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trigcolloc/linalg.hpp"

namespace trigcolloc {

namespace {

constexpr double kPi = std::numbers::pi;

// Gram-Schmidt; inputs are linearly independent by construction (distinct
// frequencies), so no re-orthogonalization pass is needed.
void orthonormalize(std::vector<std::vector<double>>& vecs) {
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < vecs[i].size(); ++k)
                dot += vecs[i][k] * vecs[j][k];
            for (std::size_t k = 0; k < vecs[i].size(); ++k)
                vecs[i][k] -= dot * vecs[j][k];
        }
        double norm = 0.0;
        for (double v : vecs[i])
            norm += v * v;
        norm = std::sqrt(norm);
        for (double& v : vecs[i])
            v /= norm;
    }
}

} // namespace

void validate(const RankSpec& spec) {
    if (spec.alphas.empty() || spec.alphas.back() == 0.0)
        throw std::invalid_argument("rank spec: leading coefficient must be nonzero");
    if (spec.period <= 0.0)
        throw std::invalid_argument("rank spec: period must be positive");
    if (spec.degree < 1)
        throw std::invalid_argument("rank spec: degree must be at least 1");
}

PhiZeta phi_zeta(const RankSpec& spec, int k) {
    const double w = 2.0 * kPi * k / spec.period;
    PhiZeta out;
    for (std::size_t i = 0; i < spec.alphas.size(); ++i) {
        if (i % 2 == 0) {
            const double sign = (i / 2 % 2 == 0) ? 1.0 : -1.0;
            out.phi += sign * spec.alphas[i] * std::pow(w, static_cast<double>(i));
        } else {
            const double sign = ((i - 1) / 2 % 2 == 0) ? 1.0 : -1.0;
            out.zeta += sign * spec.alphas[i] * std::pow(w, static_cast<double>(i - 1));
        }
    }
    return out;
}

std::vector<int> kernel_frequencies(const RankSpec& spec) {
    validate(spec);
    std::vector<int> out;
    for (int k = 1; k <= spec.degree; ++k) {
        const double w = 2.0 * kPi * k / spec.period;
        double phi_scale = 0.0, zeta_scale = 0.0;
        for (std::size_t i = 0; i < spec.alphas.size(); ++i) {
            if (i % 2 == 0)
                phi_scale += std::abs(spec.alphas[i]) * std::pow(w, static_cast<double>(i));
            else
                zeta_scale += std::abs(spec.alphas[i]) * std::pow(w, static_cast<double>(i - 1));
        }
        const PhiZeta pz = phi_zeta(spec, k);
        if (std::abs(pz.phi) <= 1e-9 * phi_scale && std::abs(pz.zeta) <= 1e-9 * zeta_scale)
            out.push_back(k);
    }
    return out;
}

int predicted_rank(const RankSpec& spec) {
    validate(spec);
    const int m = static_cast<int>(kernel_frequencies(spec).size());
    const int sign0 = (spec.alphas[0] != 0.0) ? 1 : 0;
    return 2 * spec.degree + sign0 - 2 * m;
}

RankReport verify_rank(const RankSpec& spec, const Grid& grid, Variant variant) {
    validate(spec);
    if (grid.degree() != spec.degree)
        throw std::invalid_argument("verify_rank: grid degree does not match spec");
    if (grid.period() != spec.period)
        throw std::invalid_argument("verify_rank: grid period does not match spec");

    RankReport report;
    report.kernel_freqs = kernel_frequencies(spec);
    report.kernel_freq_count = static_cast<int>(report.kernel_freqs.size());
    report.predicted_rank = predicted_rank(spec);

    const DenseMatrix base = (variant == Variant::Preconditioned) ? precond_diff(grid)
                                                                  : diff_matrix(grid);
    const DenseMatrix pd = matrix_poly(spec.alphas, base);

    const auto sv = singular_values(pd);
    const double sigma1 = sv.empty() ? 0.0 : sv.front();
    int r = 0;
    for (double s : sv)
        if (s > 1e-8 * sigma1)
            ++r;
    report.measured_rank = r;
    for (std::size_t i = sv.size() >= 3 ? sv.size() - 3 : 0; i < sv.size(); ++i)
        report.sigma_tail.push_back(sv[i]);
    report.match = report.measured_rank == report.predicted_rank;

    // kernel basis: node samples of cos/sin at each kernel frequency
    const double w = 2.0 * kPi / spec.period;
    for (int k : report.kernel_freqs) {
        std::vector<double> cv(grid.size()), sv2(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) {
            cv[j] = std::cos(w * k * grid.nodes()[j]);
            sv2[j] = std::sin(w * k * grid.nodes()[j]);
        }
        report.kernel_basis.push_back(std::move(cv));
        report.kernel_basis.push_back(std::move(sv2));
    }
    orthonormalize(report.kernel_basis);

    const double pd_norm = pd.infinity_norm();
    for (const auto& v : report.kernel_basis) {
        const std::vector<double> av = pd * v;
        double mx = 0.0;
        for (double t : av)
            mx = std::max(mx, std::abs(t));
        report.max_kernel_residual = std::max(report.max_kernel_residual, mx / pd_norm);
    }
    return report;
}

} // namespace trigcolloc
