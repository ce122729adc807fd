#include <doctest.h>

#include "bmoa/symbolspec.hpp"
#include "bmoa/wco.hpp"

using namespace bmoa;

TEST_CASE("parse_complex literal forms") {
    CHECK(parse_complex("1.5") == cplx(1.5, 0.0));
    CHECK(parse_complex("-2") == cplx(-2.0, 0.0));
    CHECK(parse_complex("2i") == cplx(0.0, 2.0));
    CHECK(parse_complex("-i") == cplx(0.0, -1.0));
    CHECK(parse_complex("0.3+0.25i") == cplx(0.3, 0.25));
    CHECK(parse_complex("1e-2-3i") == cplx(0.01, -3.0));
    CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
}

TEST_CASE("SymbolSpec parses kind:params and bare numbers") {
    const auto id = SymbolSpec::parse("identity");
    CHECK(id.kind == SymbolSpec::Kind::Identity);
    CHECK(id.materialize(128).degree() == 1);

    const auto c = SymbolSpec::parse("constant:1");
    CHECK(c.kind == SymbolSpec::Kind::Constant);
    CHECK(c.materialize(128).is_constant());

    const auto bare = SymbolSpec::parse("0.5");
    CHECK(bare.kind == SymbolSpec::Kind::Constant);
    CHECK(bare.materialize(128).coefficient(0) == cplx(0.5, 0.0));

    const auto sc = SymbolSpec::parse("scaled_identity:0.5");
    CHECK(sc.materialize(128).coefficient(1) == cplx(0.5, 0.0));

    const auto poly = SymbolSpec::parse("poly:0.5,0.25+0.1i,-0.3");
    CHECK(poly.materialize(128).degree() == 2);
    CHECK(poly.materialize(128).coefficient(1) == cplx(0.25, 0.1));

    CHECK_THROWS_AS(SymbolSpec::parse("nosuchkind:1"), std::invalid_argument);
    CHECK_THROWS_AS(SymbolSpec::parse("constant:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(SymbolSpec::parse("poly"), std::invalid_argument);
}

TEST_CASE("blaschke materialization is a certified self-map with recorded error") {
    const auto spec = SymbolSpec::parse("blaschke:0.6");
    double err = 0.0;
    const AnalyticFunction f = spec.materialize(128, &err);
    CHECK(err == doctest::Approx(1.6 * std::pow(0.6, 128)).epsilon(1e-9));
    CHECK_NOTHROW(SymbolPair(AnalyticFunction::constant(cplx(1.0, 0.0)), f));

    // against the exact sigma_b inside the disc
    const DiscPoint b(0.6, 0.0);
    for (double x : {-0.5, 0.0, 0.3, 0.7}) {
        const cplx exact = sigma(b, cplx(x, 0.1));
        CHECK(std::abs(f.at(cplx(x, 0.1)) - exact) <= err + 1e-12);
    }

    // a strongly off-center base point still validates after rescaling
    const auto tight = SymbolSpec::parse("blaschke:0.9").materialize(256, &err);
    CHECK_NOTHROW(SymbolPair(AnalyticFunction::constant(cplx(1.0, 0.0)), tight));

    CHECK_THROWS_AS(SymbolSpec::parse("blaschke:1.0").materialize(128), std::invalid_argument);
}

TEST_CASE("RunConfig json round trip and validation") {
    RunConfig cfg;
    cfg.grid_size = 2048;
    cfg.n_max = 32;
    cfg.seed = 99;
    cfg.sup.angles_per_radius = 48;
    const auto j = cfg.to_json();
    const RunConfig back = RunConfig::from_json(j);
    CHECK(back.grid_size == 2048);
    CHECK(back.n_max == 32);
    CHECK(back.seed == 99);
    CHECK(back.sup.angles_per_radius == 48);

    nlohmann::json bad = j;
    bad["grid_size"] = 1000;  // not a power of two
    CHECK_THROWS_AS(RunConfig::from_json(bad), std::invalid_argument);
}
