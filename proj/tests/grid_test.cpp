#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trigcolloc/grid.hpp"
#include "trigcolloc/rng.hpp"

using namespace trigcolloc;

namespace {

constexpr double pi = std::numbers::pi;

TrigPolyCoeffs random_poly(Rng& rng, int degree, double period) {
    TrigPolyCoeffs c;
    c.period = period;
    c.degree = degree;
    c.constant = rng.uniform(-1.0, 1.0);
    for (int k = 0; k < degree; ++k) {
        c.sin_coeffs.push_back(rng.uniform(-1.0, 1.0));
        c.cos_coeffs.push_back(rng.uniform(-1.0, 1.0));
    }
    return c;
}

} // namespace

TEST_CASE("grid construction validates its input") {
    CHECK_THROWS(Grid({0.0, 1.0}, 4.0));           // even N
    CHECK_THROWS(Grid({0.0, 2.0, 1.0}, 4.0));      // not increasing
    CHECK_THROWS(Grid({0.0, 1.0, 4.0}, 4.0));      // span >= period
    CHECK_NOTHROW(Grid({-1.0, 0.0, 1.0}, 4.0));    // negative nodes are fine
}

TEST_CASE("cardinal identity t_j(x_k) = delta_jk") {
    Rng rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 10);
        const double period = rng.uniform(0.5, 8.0);
        const Grid grid = make_random_grid(2 * n + 1, period, rng.next_u64());
        for (std::size_t j = 0; j < grid.size(); ++j)
            for (std::size_t k = 0; k < grid.size(); ++k)
                CHECK(std::abs(grid.cardinal(j, grid.nodes()[k]) - (j == k ? 1.0 : 0.0)) <
                      1e-12);
    }
}

TEST_CASE("partition of unity at random points") {
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 10);
        const double period = rng.uniform(0.5, 8.0);
        const Grid grid = make_random_grid(2 * n + 1, period, rng.next_u64());
        for (int t = 0; t < 10; ++t) {
            const double x = rng.uniform(-period, 2.0 * period);
            double s = 0.0;
            for (std::size_t j = 0; j < grid.size(); ++j)
                s += grid.cardinal(j, x);
            CHECK(std::abs(s - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("interpolation reproduces trig polynomials of matching degree") {
    Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 8);
        const double period = rng.uniform(1.0, 6.0);
        const Grid grid = make_random_grid(2 * n + 1, period, rng.next_u64());
        const TrigPolyCoeffs poly = random_poly(rng, n, period);
        const TrigInterpolant t = interpolate(grid, sample_at_nodes(poly, grid));
        for (int q = 0; q < 20; ++q) {
            const double x = rng.uniform(0.0, period);
            const double want = eval_coeffs(poly, x);
            CHECK(std::abs(t(x) - want) < 1e-10 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("to_coefficients inverts sample_at_nodes") {
    Rng rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 8);
        const double period = rng.uniform(1.0, 6.0);
        const Grid grid = make_random_grid(2 * n + 1, period, rng.next_u64());
        const TrigPolyCoeffs poly = random_poly(rng, n, period);
        const TrigPolyCoeffs back = to_coefficients(grid, sample_at_nodes(poly, grid));
        CHECK(std::abs(back.constant - poly.constant) < 1e-9);
        for (int k = 0; k < n; ++k) {
            CHECK(std::abs(back.sin_coeffs[k] - poly.sin_coeffs[k]) < 1e-9);
            CHECK(std::abs(back.cos_coeffs[k] - poly.cos_coeffs[k]) < 1e-9);
        }
    }
}

TEST_CASE("uniform grid with anchor pins the nearest node") {
    const Grid grid = make_uniform_grid(5, 2.0 * pi, pi / 2.0);
    CHECK(grid.find_node(pi / 2.0).has_value());
    CHECK(grid.nodes()[0] == 0.0);
    // nodes stay strictly increasing
    for (std::size_t j = 1; j < grid.size(); ++j)
        CHECK(grid.nodes()[j] > grid.nodes()[j - 1]);
}

TEST_CASE("find_node matches modulo the period") {
    const Grid grid = make_uniform_grid(5, 1.0);
    const auto hit = grid.find_node(1.0); // wraps to node 0
    REQUIRE(hit.has_value());
    CHECK(*hit == 0);
    CHECK_FALSE(grid.find_node(0.123).has_value());
}

TEST_CASE("random grids are deterministic in the seed") {
    const Grid a = make_random_grid(9, 3.0, 99);
    const Grid b = make_random_grid(9, 3.0, 99);
    const Grid c = make_random_grid(9, 3.0, 100);
    CHECK(a.nodes() == b.nodes());
    CHECK(a.nodes() != c.nodes());
    for (std::size_t j = 1; j < a.size(); ++j)
        CHECK(a.nodes()[j] > a.nodes()[j - 1]);
    CHECK(a.nodes().back() - a.nodes().front() < 3.0);
}

TEST_CASE("psi values are nonzero and consistent with their definition") {
    const Grid grid = make_random_grid(7, 2.0, 5);
    const double L = grid.period();
    for (std::size_t m = 0; m < grid.size(); ++m) {
        double p = 1.0;
        for (std::size_t k = 0; k < grid.size(); ++k)
            if (k != m)
                p *= std::sin(pi * (grid.nodes()[m] - grid.nodes()[k]) / L);
        CHECK(grid.psi()[m] == doctest::Approx(p).epsilon(1e-12));
        CHECK(grid.psi()[m] != 0.0);
    }
}

TEST_CASE("eval_coeffs evaluates the closed form") {
    TrigPolyCoeffs c;
    c.period = 2.0 * pi;
    c.degree = 2;
    c.constant = 0.5;
    c.sin_coeffs = {1.0, 0.0};
    c.cos_coeffs = {0.0, 2.0};
    const double x = 0.3;
    CHECK(eval_coeffs(c, x) ==
          doctest::Approx(0.5 + std::sin(x) + 2.0 * std::cos(2.0 * x)).epsilon(1e-15));
}
