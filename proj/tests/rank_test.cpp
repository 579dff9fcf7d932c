#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "trigcolloc/rank.hpp"
#include "trigcolloc/rng.hpp"

using namespace trigcolloc;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;
} // namespace

TEST_CASE("validate rejects a zero leading coefficient") {
    CHECK_THROWS((void)validate(RankSpec{{0.0, 0.0}, two_pi, 3}));
    CHECK_THROWS((void)validate(RankSpec{{}, two_pi, 3}));
    CHECK_THROWS((void)validate(RankSpec{{1.0, 1.0}, -1.0, 3}));
    CHECK_NOTHROW(validate(RankSpec{{0.0, 1.0}, two_pi, 3}));
}

TEST_CASE("phi and zeta closed forms") {
    // P(d) = 1 + 2d + 3d^2 + 4d^3 on L = 2pi: omega = k.
    const RankSpec spec{{1.0, 2.0, 3.0, 4.0}, two_pi, 5};
    for (int k = 1; k <= 5; ++k) {
        const PhiZeta pz = phi_zeta(spec, k);
        const double w = static_cast<double>(k);
        CHECK(pz.phi == doctest::Approx(1.0 - 3.0 * w * w).epsilon(1e-14));
        CHECK(pz.zeta == doctest::Approx(2.0 - 4.0 * w * w).epsilon(1e-14));
    }
    // Non-unit period scales omega = 2 pi k / L.
    const RankSpec unit{{1.0, 0.0, 1.0}, 1.0, 3};
    const double w1 = two_pi;
    CHECK(phi_zeta(unit, 1).phi == doctest::Approx(1.0 - w1 * w1).epsilon(1e-14));
}

TEST_CASE("harmonic operator 1 + d^2 loses the k = 1 pair") {
    const RankSpec spec{{1.0, 0.0, 1.0}, two_pi, 5};
    CHECK(kernel_frequencies(spec) == std::vector<int>{1});
    CHECK(predicted_rank(spec) == 9); // 2n + 1 - 2m = 10 + 1 - 2
    const RankReport r = verify_rank(spec, make_uniform_grid(11, two_pi));
    CHECK(r.match);
    CHECK(r.measured_rank == 9);
    CHECK(r.kernel_basis.size() == 2);
    CHECK(r.max_kernel_residual < 1e-7);
}

TEST_CASE("pure derivative powers drop only the constant mode") {
    for (int p = 1; p <= 4; ++p) {
        std::vector<double> alphas(static_cast<std::size_t>(p) + 1, 0.0);
        alphas.back() = 1.0;
        const RankSpec spec{alphas, two_pi, 4};
        CHECK(kernel_frequencies(spec).empty());
        CHECK(predicted_rank(spec) == 8); // 2n, alpha_0 = 0
    }
    const RankSpec d1{{0.0, 1.0}, two_pi, 4};
    const RankReport r = verify_rank(d1, make_uniform_grid(9, two_pi));
    CHECK(r.match);
    CHECK(r.measured_rank == 8);
}

TEST_CASE("(L/2pi)^2 d^2 + m^2 has rank 2n - 1 for every m <= n") {
    Rng rng(404);
    for (int n = 2; n <= 8; ++n) {
        for (int m = 1; m <= n; ++m) {
            const double L = rng.uniform(0.5, 5.0);
            const double s = (L / two_pi) * (L / two_pi);
            const RankSpec spec{{static_cast<double>(m) * m, 0.0, s}, L, n};
            CHECK(kernel_frequencies(spec) == std::vector<int>{m});
            CHECK(predicted_rank(spec) == 2 * n - 1);
        }
    }
}

TEST_CASE("two kernel frequencies give deficiency four") {
    // (1/2pi)^4 d^4 + 13 (1/2pi)^2 d^2 + 36 on L = 1: zeros at k = 2, 3.
    const double c2 = 1.0 / (two_pi * two_pi);
    const RankSpec spec{{36.0, 0.0, 13.0 * c2, 0.0, c2 * c2}, 1.0, 5};
    CHECK(kernel_frequencies(spec) == std::vector<int>{2, 3});
    CHECK(predicted_rank(spec) == 2 * 5 + 1 - 4);
    const RankReport r = verify_rank(spec, make_uniform_grid(11, 1.0));
    CHECK(r.match);
    CHECK(r.kernel_basis.size() == 4);
    CHECK(r.max_kernel_residual < 1e-7);
}

TEST_CASE("kernel frequencies are invariant under scaling the coefficients") {
    const double c2 = 1.0 / (two_pi * two_pi);
    const std::vector<double> base{36.0, 0.0, 13.0 * c2, 0.0, c2 * c2};
    const auto want = kernel_frequencies(RankSpec{base, 1.0, 5});
    for (double s : {1e-6, 0.5, 3.0, 1e+7, -2.0}) {
        std::vector<double> scaled = base;
        for (double& a : scaled)
            a *= s;
        CHECK(kernel_frequencies(RankSpec{scaled, 1.0, 5}) == want);
    }
}

TEST_CASE("verify_rank agrees on random grids and on the preconditioned matrix") {
    const RankSpec spec{{1.0, 0.0, 1.0}, two_pi, 4};
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const Grid grid = make_random_grid(9, two_pi, seed);
        const RankReport plain = verify_rank(spec, grid, Variant::Plain);
        const RankReport hat = verify_rank(spec, grid, Variant::Preconditioned);
        CHECK(plain.match);
        CHECK(hat.match);
        CHECK(plain.measured_rank == hat.measured_rank);
    }
}

TEST_CASE("random full-rank specs measure 2n + 1") {
    Rng rng(606);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 7);
        std::vector<double> alphas{rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0),
                                   rng.uniform(0.5, 2.0)};
        const double L = rng.uniform(0.9, 1.4); // omega irrational, no integer zeros
        const RankSpec spec{alphas, L, n};
        if (!kernel_frequencies(spec).empty())
            continue;
        CHECK(predicted_rank(spec) == 2 * n + 1);
        const RankReport r = verify_rank(spec, make_uniform_grid(2 * n + 1, L));
        CHECK(r.match);
        CHECK(r.sigma_tail.size() == std::min<std::size_t>(3, 2 * n + 1));
    }
}
