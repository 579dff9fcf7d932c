#pragma once

#include <vector>

#include "trigcolloc/grid.hpp"
#include "trigcolloc/operators.hpp"

namespace trigcolloc {

/// Constant-coefficient operator P(d) = alpha_0 + alpha_1 d + ... + alpha_s d^s
/// together with the period and degree its representation is built on.
struct RankSpec {
    std::vector<double> alphas; // alpha_s != 0
    double period = 0.0;
    int degree = 0;
};

struct RankReport {
    std::vector<int> kernel_freqs;                 // k_1 < ... < k_m in {1..n}
    int kernel_freq_count = 0;                     // m
    int predicted_rank = 0;                        // 2n + |sign alpha_0| - 2m
    int measured_rank = 0;
    std::vector<double> sigma_tail;                // smallest three singular values
    bool match = false;
    std::vector<std::vector<double>> kernel_basis; // orthonormal node-sample vectors
    double max_kernel_residual = 0.0;              // max ||P(D) v||_inf / ||P(D)||_inf
};

void validate(const RankSpec& spec);

/// phi(k) = sum over even i of (-1)^{i/2} alpha_i (2 pi k/L)^i;
/// zeta(k) = sum over odd i of (-1)^{(i-1)/2} alpha_i (2 pi k/L)^{i-1}.
struct PhiZeta {
    double phi = 0.0;
    double zeta = 0.0;
};
PhiZeta phi_zeta(const RankSpec& spec, int k);

/// Integer k in {1..n} solving phi(k)=zeta(k)=0, tested with relative
/// tolerance 1e-9 against the absolute-coefficient sums.
std::vector<int> kernel_frequencies(const RankSpec& spec);

int predicted_rank(const RankSpec& spec);

/// Builds P(D) (or P(Dhat)), measures numerical rank at tol 1e-8*sigma_1,
/// and checks annihilation of the predicted trigonometric kernel basis.
RankReport verify_rank(const RankSpec& spec, const Grid& grid, Variant variant = Variant::Plain);

} // namespace trigcolloc
