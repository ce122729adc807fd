#include <doctest.h>

#include "bmoa/analytic.hpp"
#include "bmoa/rng.hpp"

using namespace bmoa;

TEST_CASE("eval: identity, constant, square") {
    const AnalyticFunction id = AnalyticFunction::identity();
    CHECK(std::abs(id.at(cplx(0.5, 0.0)) - cplx(0.5, 0.0)) < 1e-15);

    const AnalyticFunction one = AnalyticFunction::constant(cplx(1.0, 0.0));
    CHECK(std::abs(one.at(cplx(-0.3, 0.7)) - cplx(1.0, 0.0)) < 1e-15);

    // z^2 at i is -1
    const AnalyticFunction sq = AnalyticFunction::monomial(2);
    CHECK(std::abs(sq.at(cplx(0.0, 1.0)) - cplx(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("eval rejects points outside the closed disc") {
    const AnalyticFunction id = AnalyticFunction::identity();
    CHECK_THROWS_AS(id.at(cplx(1.5, 0.0)), std::domain_error);
}

TEST_CASE("DiscPoint validation") {
    CHECK_NOTHROW(DiscPoint(0.9, 0.0));
    CHECK_THROWS_AS(DiscPoint(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(DiscPoint(1.0 - 1e-13, 0.0), std::domain_error);
}

TEST_CASE("boundary_grid: roots of unity and pointwise values") {
    const auto g = boundary_grid(AnalyticFunction::identity(), 4);
    CHECK(std::abs(g[0] - cplx(1, 0)) < 1e-14);
    CHECK(std::abs(g[1] - cplx(0, 1)) < 1e-14);
    CHECK(std::abs(g[2] - cplx(-1, 0)) < 1e-14);
    CHECK(std::abs(g[3] - cplx(0, -1)) < 1e-14);

    const auto gc = boundary_grid(AnalyticFunction::constant(cplx(2.5, -1.0)), 8);
    for (int j = 0; j < 8; ++j) CHECK(std::abs(gc[j] - cplx(2.5, -1.0)) < 1e-14);

    // 1 + z at the 4th roots of unity
    const auto g1z = boundary_grid(AnalyticFunction({cplx(1), cplx(1)}), 4);
    CHECK(std::abs(g1z[0] - cplx(2, 0)) < 1e-14);
    CHECK(std::abs(g1z[1] - cplx(1, 1)) < 1e-14);
    CHECK(std::abs(g1z[2] - cplx(0, 0)) < 1e-14);
    CHECK(std::abs(g1z[3] - cplx(1, -1)) < 1e-14);
}

TEST_CASE("boundary_grid enforces the anti-aliasing rule") {
    const AnalyticFunction f = AnalyticFunction::monomial(4);
    CHECK_THROWS_AS(boundary_grid(f, 8), std::invalid_argument);  // needs 2*(4+1) = 10 -> 16
    CHECK_THROWS_AS(boundary_grid(f, 12), std::invalid_argument);
    CHECK_NOTHROW(boundary_grid(f, 16));
}

TEST_CASE("grid_product matches pointwise evaluation") {
    const auto gz = boundary_grid(AnalyticFunction::identity(), 8);
    const auto g1z = boundary_grid(AnalyticFunction({cplx(1), cplx(1)}), 8);
    const auto prod = grid_product(gz, g1z);
    // z + z^2 at e^{i pi/4}
    const cplx w = prod[1];
    const cplx omega(std::sqrt(0.5), std::sqrt(0.5));
    CHECK(std::abs(w - (omega + omega * omega)) < 1e-14);

    const auto gone = boundary_grid(AnalyticFunction::constant(cplx(1)), 8);
    const auto same = grid_product(gone, g1z);
    for (int j = 0; j < 8; ++j) CHECK(std::abs(same[j] - g1z[j]) < 1e-15);

    CHECK_THROWS_AS(grid_product(gz, boundary_grid(AnalyticFunction::identity(), 16)),
                    std::invalid_argument);
}

TEST_CASE("dilate") {
    const auto f = dilate(AnalyticFunction::identity(), 0.5);
    CHECK(std::abs(f.coefficient(1) - cplx(0.5, 0.0)) < 1e-15);

    const AnalyticFunction g({cplx(3), cplx(1), cplx(2)});
    const auto g0 = dilate(g, 0.0);
    CHECK(std::abs(g0.at(cplx(0.9, 0.0)) - cplx(3.0, 0.0)) < 1e-15);

    // r_n = n/(1+n) with n = 3 gives r = 0.75, and 0.75^2 = 0.5625
    const auto sq = dilate(AnalyticFunction::monomial(2), 0.75);
    CHECK(sq.coefficient(2).real() == doctest::Approx(0.5625).epsilon(1e-15));

    CHECK_THROWS_AS(dilate(g, 1.0), std::domain_error);
    CHECK_THROWS_AS(dilate(g, -0.1), std::domain_error);
}

TEST_CASE("dilate composes multiplicatively") {
    Rng rng(3);
    std::vector<cplx> c(17);
    for (auto& x : c) x = rng.complex_box(1.0);
    const AnalyticFunction f{std::move(c)};
    const auto twice = dilate(dilate(f, 0.6), 0.5);
    const auto once = dilate(f, 0.3);
    for (int k = 0; k <= f.degree(); ++k)
        CHECK(std::abs(twice.coefficient(k) - once.coefficient(k)) < 1e-12);
}

TEST_CASE("DFT round trip recovers coefficients (N up to 256)") {
    Rng rng(11);
    for (int N : {1, 17, 64, 256}) {
        std::vector<cplx> c(static_cast<std::size_t>(N) + 1);
        for (auto& x : c) x = rng.complex_box(1.0);
        const AnalyticFunction f{c};
        const int M = static_cast<int>(next_power_of_two(2 * static_cast<std::size_t>(N + 1)));
        const auto back = coefficients_from_grid(boundary_grid(f, M), N);
        double scale = 0.0;
        for (const auto& x : c) scale = std::max(scale, std::abs(x));
        for (int k = 0; k <= N; ++k)
            CHECK(std::abs(back[static_cast<std::size_t>(k)] - c[static_cast<std::size_t>(k)]) <
                  1e-12 * scale);
    }
}

TEST_CASE("boundary_grid is linear") {
    Rng rng(5);
    std::vector<cplx> c1(9), c2(6);
    for (auto& x : c1) x = rng.complex_box(1.0);
    for (auto& x : c2) x = rng.complex_box(1.0);
    const AnalyticFunction f{c1}, g{c2};
    const cplx alpha(0.7, -0.2), beta(-1.1, 0.4);
    const auto combo = boundary_grid(f.scaled(alpha) + g.scaled(beta), 32);
    const auto gf = boundary_grid(f, 32);
    const auto gg = boundary_grid(g, 32);
    for (int j = 0; j < 32; ++j)
        CHECK(std::abs(combo[j] - (alpha * gf[j] + beta * gg[j])) < 1e-13);
}

TEST_CASE("grid_product agrees with coefficient convolution") {
    Rng rng(9);
    std::vector<cplx> c1(8), c2(14);
    for (auto& x : c1) x = rng.complex_box(1.0);
    for (auto& x : c2) x = rng.complex_box(1.0);
    const AnalyticFunction f{c1}, g{c2};
    const int M = static_cast<int>(
        next_power_of_two(2 * static_cast<std::size_t>(f.degree() + g.degree() + 1)));
    const auto via_grid = grid_product(boundary_grid(f, M), boundary_grid(g, M));
    const auto via_conv = boundary_grid(f * g, M);
    for (int j = 0; j < M; ++j) CHECK(std::abs(via_grid[j] - via_conv[j]) < 1e-10);
}
