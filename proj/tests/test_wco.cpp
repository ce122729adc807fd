#include <doctest.h>

#include <future>
#include <numbers>

#include "bmoa/rng.hpp"
#include "bmoa/verify.hpp"
#include "bmoa/wco.hpp"

using namespace bmoa;

namespace {

const AnalyticFunction kOne = AnalyticFunction::constant(cplx(1.0, 0.0));
const AnalyticFunction kZero = AnalyticFunction::constant(cplx(0.0, 0.0));
const AnalyticFunction kId = AnalyticFunction::identity();
const AnalyticFunction kHalfZ({cplx(0.0), cplx(0.5)});

SupSearchConfig cfg() { return family_sweep_config(); }

// coefficient-level composition oracle: f o phi by Horner over polynomials
AnalyticFunction compose_oracle(const AnalyticFunction& f, const AnalyticFunction& phi) {
    AnalyticFunction acc = AnalyticFunction::constant(f.coefficient(f.degree()));
    for (int k = f.degree() - 1; k >= 0; --k)
        acc = acc * phi + AnalyticFunction::constant(f.coefficient(k));
    return acc;
}

}  // namespace

TEST_CASE("SymbolPair validates self-maps") {
    CHECK_THROWS_AS(SymbolPair(kOne, AnalyticFunction({cplx(0.0), cplx(2.0)})), SelfMapViolation);
    CHECK_THROWS_AS(SymbolPair(kOne, AnalyticFunction::constant(cplx(1.0, 0.0))), SelfMapViolation);
    try {
        SymbolPair(kOne, AnalyticFunction({cplx(0.0), cplx(1.5)}));
        CHECK(false);
    } catch (const SelfMapViolation& e) {
        CHECK(e.modulus() == doctest::Approx(1.5).epsilon(1e-9));
        CHECK(std::abs(std::abs(e.boundary_point()) - 1.0) < 1e-12);
    }

    const SymbolPair cayley(kOne, AnalyticFunction({cplx(0.5), cplx(0.5)}));
    CHECK(cayley.phi_sup_estimate == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(!cayley.strictly_interior());

    const SymbolPair contraction(kOne, kHalfZ);
    CHECK(contraction.phi_sup_estimate == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(contraction.strictly_interior());
}

TEST_CASE("apply_wco: identity, constant argument, monomial composition") {
    const SymbolPair wid(kOne, kId);
    const AnalyticFunction f({cplx(0.3, 0.1), cplx(1.0), cplx(-0.5, 0.2)});
    const auto gf = apply_wco(wid, f, 64);
    const auto direct = boundary_grid(f, 64);
    for (int j = 0; j < 64; ++j) CHECK(std::abs(gf[j] - direct[j]) < 1e-12);

    const SymbolPair wpsi(AnalyticFunction({cplx(0.2), cplx(0.7)}), kHalfZ);
    const auto gpsi = apply_wco(wpsi, kOne, 64);
    const auto psig = boundary_grid(wpsi.psi, 64);
    for (int j = 0; j < 64; ++j) CHECK(std::abs(gpsi[j] - psig[j]) < 1e-12);

    const SymbolPair cube(kId, AnalyticFunction::monomial(2));
    const auto g3 = apply_wco(cube, kId, 64);
    const auto z3 = boundary_grid(AnalyticFunction::monomial(3), 64);
    for (int j = 0; j < 64; ++j) CHECK(std::abs(g3[j] - z3[j]) < 1e-12);

    CHECK_THROWS_AS(apply_wco(cube, AnalyticFunction::monomial(40), 64), std::invalid_argument);
}

TEST_CASE("apply_wco agrees with coefficient-level composition") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<cplx> pc(static_cast<std::size_t>(rng.uniform_int(0, 4)) + 1);
        for (auto& x : pc) x = rng.complex_box(1.0);
        std::vector<cplx> qc(static_cast<std::size_t>(rng.uniform_int(1, 4)) + 1);
        double sum = 0.0;
        for (auto& x : qc) {
            x = rng.complex_box(1.0);
            sum += std::abs(x);
        }
        for (auto& x : qc) x *= 0.8 / (sum + 1e-12);
        std::vector<cplx> fc(static_cast<std::size_t>(rng.uniform_int(0, 5)) + 1);
        for (auto& x : fc) x = rng.complex_box(1.0);

        const SymbolPair pair{AnalyticFunction{pc}, AnalyticFunction{qc}};
        const AnalyticFunction f{fc};
        const int M = static_cast<int>(next_power_of_two(2 * static_cast<std::size_t>(
            pair.psi.degree() + f.degree() * pair.phi.degree() + 1)));
        const auto via_grid = apply_wco(pair, f, std::max(64, M));
        const auto via_coeffs =
            boundary_grid(pair.psi * compose_oracle(f, pair.phi), std::max(64, M));
        for (int j = 0; j < via_grid.size(); ++j)
            CHECK(std::abs(via_grid[j] - via_coeffs[j]) <= 1e-10);
    }
}

TEST_CASE("alpha: identity pair gives 1, degenerate weights give 0") {
    const SymbolPair wid(kOne, kId);
    for (const cplx av : {cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(-0.2, 0.7)})
        CHECK(alpha(wid, DiscPoint(av)) == doctest::Approx(1.0).epsilon(1e-10));

    const SymbolPair wzero(kZero, kId);
    CHECK(alpha(wzero, DiscPoint(0.4, 0.0)) == 0.0);

    const SymbolPair wconst(kOne, kZero);
    CHECK(alpha(wconst, DiscPoint(0.4, -0.3)) <= 1e-13);
}

TEST_CASE("alpha rejects boundary-touching base points") {
    const SymbolPair cayley(kOne, AnalyticFunction({cplx(0.5), cplx(0.5)}));
    const DiscPoint a(1.0 - 1.2e-12, 0.0);  // phi(a) = 1 - 6e-13, within the margin
    CHECK_THROWS_AS(alpha(cayley, a), std::domain_error);
}

TEST_CASE("beta: decomposition and closed cases") {
    const SymbolPair wconstpsi(AnalyticFunction::constant(cplx(2.0, -1.0)), kId);
    for (const cplx av : {cplx(0.0, 0.0), cplx(0.3, 0.4)})
        CHECK(beta(wconstpsi, DiscPoint(av)) <= 1e-12);

    // psi = z, a = 0, phi(0) = 0: beta = log 2 * 1
    const SymbolPair wz(kId, kHalfZ);
    CHECK(beta(wz, DiscPoint(0.0, 0.0)) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    // definitional identity beta = L(phi(a)) * transform_norm(psi, a, 2)
    Rng rng(3);
    const SymbolPair pair(AnalyticFunction({cplx(0.1), cplx(0.8), cplx(-0.4, 0.3)}), kHalfZ);
    for (int i = 0; i < 20; ++i) {
        const DiscPoint a(rng.complex_disc(0.9));
        const cplx b = pair.phi.at(a.value());
        const double expected =
            std::log(2.0 / (1.0 - std::norm(b))) * transform_norm(pair.psi, a, 2.0, 1024);
        CHECK(beta(pair, a) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("power_seminorm_seq: scaled identity gives s^n") {
    const SymbolPair pair(kOne, kHalfZ);
    const auto seq = power_seminorm_seq(pair, 16, cfg());
    CHECK(seq[0] <= 1e-12);  // ||1||_* = 0
    for (int n = 1; n <= 16; ++n)
        CHECK(seq[static_cast<std::size_t>(n)] ==
              doctest::Approx(std::pow(0.5, n)).epsilon(1e-3));
}

TEST_CASE("power_seminorm_seq: identity map gives all ones, zero weight all zeros") {
    const SymbolPair pair(kOne, kId);
    const auto seq = power_seminorm_seq(pair, 12, cfg());
    CHECK(seq[0] <= 1e-12);
    for (int n = 1; n <= 12; ++n)
        CHECK(std::fabs(seq[static_cast<std::size_t>(n)] - 1.0) <= 1e-3);

    const SymbolPair zero(kZero, kId);
    for (double v : power_seminorm_seq(zero, 8, cfg())) CHECK(v == 0.0);

    CHECK_THROWS_AS(power_seminorm_seq(pair, 513, cfg()), std::invalid_argument);
}

TEST_CASE("tail_sup") {
    std::vector<double> geo;
    for (int n = 0; n <= 64; ++n) geo.push_back(std::pow(0.5, n));
    const auto t = tail_sup(geo, 32);
    CHECK(t.value == doctest::Approx(std::pow(0.5, 32)).epsilon(1e-12));
    CHECK(t.argmax_index == 32);
    CHECK(t.nonincreasing);
    CHECK(!t.nondecreasing);

    const std::vector<double> ones(10, 1.0);
    const auto tc = tail_sup(ones, 5);
    CHECK(tc.value == 1.0);
    CHECK(tc.nonincreasing);
    CHECK(tc.nondecreasing);

    const std::vector<double> head{1.0, 0.0, 0.0};
    CHECK(tail_sup(head, 1).value == 0.0);
    CHECK_THROWS_AS(tail_sup(head, 3), std::invalid_argument);
}

TEST_CASE("norm_estimate_powers: pinned examples") {
    const auto r1 = norm_estimate_powers(SymbolPair(kOne, kId), cfg());
    CHECK(r1.value == doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-3));
    CHECK(r1.parts.at("center_term") == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(r1.parts.at("beta_term") <= 1e-12);

    const auto r0 = norm_estimate_powers(SymbolPair(kZero, kId), cfg());
    CHECK(r0.value == 0.0);

    const auto rh = norm_estimate_powers(SymbolPair(kOne, kHalfZ), cfg());
    CHECK(rh.value == doctest::Approx(std::log(2.0) + 0.5).epsilon(1e-3));
    CHECK(rh.proxy_metadata.at("power_argmax_n") == 1);

    // value equals the sum of its parts
    double sum = 0.0;
    for (const auto& [k, v] : rh.parts) sum += v;
    CHECK(rh.value == doctest::Approx(sum).epsilon(1e-15));
}

TEST_CASE("norm_estimate_classic: pinned examples") {
    const auto r1 = norm_estimate_classic(SymbolPair(kOne, kId), cfg());
    CHECK(r1.value == doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-3));

    const auto rc = norm_estimate_classic(SymbolPair(kOne, kZero), cfg());
    CHECK(rc.value == doctest::Approx(std::log(2.0)).epsilon(1e-9));

    CHECK(norm_estimate_classic(SymbolPair(kZero, kId), cfg()).value == 0.0);
}

TEST_CASE("essnorm estimates") {
    const auto compact = essnorm_estimate_powers(SymbolPair(kOne, kHalfZ), cfg());
    CHECK(compact.value <= 1e-6);
    CHECK(!compact.warnings.empty());  // sup|phi| below min rho

    const auto id_pow = essnorm_estimate_powers(SymbolPair(kOne, kId), cfg());
    CHECK(id_pow.value == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(id_pow.parts.at("beta_term") <= 1e-12);

    const auto id_bnd = essnorm_estimate_boundary(SymbolPair(kOne, kId), cfg());
    CHECK(id_bnd.value == doctest::Approx(1.0).epsilon(1e-6));

    const auto c_bnd =
        essnorm_estimate_boundary(SymbolPair(AnalyticFunction::constant(cplx(0.0, 0.7)), kId), cfg());
    CHECK(c_bnd.parts.at("alpha_term") == doctest::Approx(0.7).epsilon(1e-6));
    CHECK(c_bnd.parts.at("beta_term") <= 1e-12);

    CHECK(essnorm_estimate_powers(SymbolPair(kZero, kId), cfg()).value <= 1e-12);
}

TEST_CASE("classify_compactness on the deterministic trio") {
    CHECK(classify_compactness(SymbolPair(kOne, kHalfZ), cfg()).verdict == Compactness::Compact);
    CHECK(classify_compactness(SymbolPair(kOne, kId), cfg()).verdict == Compactness::NonCompact);
    CHECK(classify_compactness(SymbolPair(kId, kId), cfg()).verdict == Compactness::NonCompact);
}

TEST_CASE("test functions f_a and g_a") {
    const SymbolPair pair(kOne, AnalyticFunction({cplx(0.1), cplx(0.6)}));
    const DiscPoint a(0.5, 0.2);
    const cplx b = pair.phi.at(a.value());

    const TestFunctionF f = test_f(pair, a);
    CHECK(std::abs(f(b) - (-b)) < 1e-14);  // f_a(phi(a)) = -phi(a)

    const TestFunctionG g = test_g(pair, a);
    const double lb = std::log(2.0 / (1.0 - std::norm(b)));
    CHECK(std::abs(g(b) - cplx(lb, 0.0)) < 1e-13);  // g_a(phi(a)) = L(phi(a))

    // sup norm of f_a o phi o sigma_a over the boundary grid is at most 2
    double worst = 0.0;
    for (int j = 0; j < 1024; ++j) {
        const double t = 2.0 * std::numbers::pi * j / 1024.0;
        const cplx xi(std::cos(t), std::sin(t));
        cplx s = sigma(a, xi);
        s /= std::max(1.0, std::abs(s));
        worst = std::max(worst, std::abs(f(pair.phi.at(s))));
    }
    CHECK(worst <= 2.0 + 1e-12);

    // truncated Taylor series matches the rational evaluator inside the disc
    const AnalyticFunction trunc = f.truncated(64);
    Rng rng(2);
    for (int i = 0; i < 30; ++i) {
        const cplx w = rng.complex_disc(0.8);
        const double bound = 2.0 * std::pow(std::abs(b) * 0.8, 60);
        CHECK(std::abs(trunc.at(w) - f(w)) <= std::max(bound, 1e-13));
    }
}

TEST_CASE("boundary_set_integral") {
    const SymbolPair idpair(kOne, kId);
    const DiscPoint a(0.3, 0.1);
    // sigma_b o id o sigma_a is inner: |.| = 1 > t on the whole circle
    for (double t : {0.3, 0.7, 0.95})
        CHECK(boundary_set_integral(idpair, a, t, BoundarySet::E, 1024) ==
              doctest::Approx(1.0).epsilon(1e-12));

    // ETilde is empty once t exceeds sup |phi|
    const SymbolPair half(kOne, kHalfZ);
    CHECK(boundary_set_integral(half, a, 0.7, BoundarySet::ETilde, 1024) == 0.0);

    // monotone nonincreasing in t
    const SymbolPair mixed(kOne, AnalyticFunction({cplx(0.2), cplx(0.55)}));
    double prev = 2.0;
    for (double t : {0.3, 0.5, 0.7, 0.9}) {
        const double v = boundary_set_integral(mixed, a, t, BoundarySet::E, 1024);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
    CHECK_THROWS_AS(boundary_set_integral(idpair, a, 1.5, BoundarySet::E, 1024),
                    std::domain_error);
}

TEST_CASE("tail_quantity") {
    CHECK(tail_quantity(SymbolPair(kZero, kId), 0.9, {0.95, 0.99}, cfg()).value == 0.0);
    // strictly contractive phi: the E-gate stays below 2s/(1+s^2) = 0.8 < 0.95
    CHECK(tail_quantity(SymbolPair(kOne, kHalfZ), 0.9, {0.95, 0.99}, cfg()).value == 0.0);
    const auto idv = tail_quantity(SymbolPair(kOne, kId), 0.9, {0.95, 0.99}, cfg());
    CHECK(idv.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(idv.proxy_metadata.contains("per_t"));
    CHECK_THROWS_AS(tail_quantity(SymbolPair(kOne, kId), 0.9, {0.5}, cfg()), std::domain_error);
}

TEST_CASE("series identity: truncations converge at the geometric rate") {
    const SymbolPair pair(AnalyticFunction({cplx(0.4), cplx(0.5, -0.2)}),
                          AnalyticFunction({cplx(0.2), cplx(0.5)}));
    const DiscPoint a(0.6, 0.0);
    const cplx b = pair.phi.at(a.value());
    const double bm = std::abs(b);
    const int M = 1024;
    const auto psi_g = boundary_grid(pair.psi, M);
    const auto phi_g = boundary_grid(pair.phi, M);
    const auto exact = sample_boundary(
        [&](cplx xi) {
            const cplx u = pair.phi.at(xi);
            return pair.psi.at(xi) * ((b - u) / (cplx(1.0) - std::conj(b) * u) - b);
        },
        M);
    const double maxpsi = grid_sup(psi_g);

    std::vector<cplx> partial(M, cplx(0.0, 0.0));
    std::vector<cplx> pw = phi_g.samples();
    cplx bn(1.0, 0.0);
    const cplx factor(std::norm(b) - 1.0, 0.0);
    for (int n = 0; n <= 24; ++n) {
        for (int j = 0; j < M; ++j) partial[static_cast<std::size_t>(j)] +=
            factor * bn * psi_g[j] * pw[static_cast<std::size_t>(j)];
        bn *= std::conj(b);
        for (int j = 0; j < M; ++j) pw[static_cast<std::size_t>(j)] *= phi_g[j];
        if (n == 7 || n == 15 || n == 24) {
            double err = 0.0;
            for (int j = 0; j < M; ++j)
                err = std::max(err, std::abs(partial[static_cast<std::size_t>(j)] - exact[j]));
            CHECK(err <= 2.0 * std::pow(bm, n + 1) * maxpsi * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("EstimateReport serializes with stable keys") {
    const auto r = norm_estimate_powers(SymbolPair(kOne, kHalfZ), cfg());
    const auto j = r.to_json();
    CHECK(j.contains("value"));
    CHECK(j.contains("parts"));
    CHECK(j.contains("proxy_metadata"));
    CHECK(j.contains("warnings"));
    CHECK(j["parts"].contains("center_term"));
    CHECK(j["parts"].contains("power_term"));
    CHECK(j["parts"].contains("beta_term"));
}

TEST_CASE("estimator evaluations are safe to run concurrently") {
    const SymbolPair pair(AnalyticFunction({cplx(0.3), cplx(0.6, 0.1)}), kHalfZ);
    const auto baseline = norm_estimate_powers(pair, cfg()).value;
    std::vector<std::future<double>> futures;
    for (int i = 0; i < 4; ++i)
        futures.push_back(std::async(std::launch::async, [&] {
            return norm_estimate_powers(pair, cfg()).value;
        }));
    for (auto& f : futures) CHECK(f.get() == baseline);
}
