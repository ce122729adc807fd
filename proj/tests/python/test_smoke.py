"""Python smoke tests for the bmoa extension module."""

import json
import math

import pytest

import bmoa


def test_analytic_function_eval():
    f = bmoa.AnalyticFunction([0, 1])
    assert f(0.5) == pytest.approx(0.5)
    sq = bmoa.AnalyticFunction.monomial(2)
    assert sq(1j) == pytest.approx(-1.0)


def test_disc_point_validation():
    with pytest.raises(ValueError):
        bmoa.DiscPoint(1.0, 0.0)


def test_sigma_involution():
    a = bmoa.DiscPoint(0.4, -0.2)
    z = 0.3 + 0.5j
    assert bmoa.sigma(a, bmoa.sigma(a, z)) == pytest.approx(z, abs=1e-12)
    assert bmoa.log_weight(bmoa.DiscPoint(0.0, 0.0)) == pytest.approx(math.log(2.0))


def test_seminorm_of_identity():
    s = bmoa.bmoa_seminorm(bmoa.AnalyticFunction.identity())
    assert s.value == pytest.approx(1.0, abs=1e-9)
    assert abs(s.argmax) < 1e-9
    assert bmoa.bmoa_norm(bmoa.AnalyticFunction([1, 1])) == pytest.approx(2.0, abs=1e-6)


def test_transform_norm_closed_form():
    v = bmoa.transform_norm(bmoa.AnalyticFunction.identity(), bmoa.DiscPoint(0.6, 0.0))
    assert v == pytest.approx(0.8, abs=1e-12)


def test_symbol_pair_and_estimates():
    one = bmoa.AnalyticFunction.constant(1)
    ident = bmoa.AnalyticFunction.identity()
    pair = bmoa.SymbolPair(one, ident)
    report = bmoa.norm_estimate_powers(pair)
    assert report.value == pytest.approx(math.log(2.0) + 1.0, abs=1e-3)
    parts = report.parts
    assert set(parts) == {"center_term", "power_term", "beta_term"}
    payload = json.loads(report.to_json())
    assert payload["value"] == pytest.approx(report.value, rel=1e-11)

    with pytest.raises(bmoa.SelfMapError):
        bmoa.SymbolPair(one, bmoa.AnalyticFunction([0, 2]))


def test_alpha_beta():
    pair = bmoa.SymbolPair(bmoa.AnalyticFunction.constant(1), bmoa.AnalyticFunction.identity())
    assert bmoa.alpha(pair, bmoa.DiscPoint(0.3, 0.1)) == pytest.approx(1.0, abs=1e-9)
    assert bmoa.beta(pair, bmoa.DiscPoint(0.3, 0.1)) == pytest.approx(0.0, abs=1e-12)


def test_classify_compactness():
    one = bmoa.AnalyticFunction.constant(1)
    half = bmoa.AnalyticFunction([0, 0.5])
    ident = bmoa.AnalyticFunction.identity()
    assert bmoa.classify_compactness(bmoa.SymbolPair(one, half)).verdict == bmoa.Compactness.Compact
    res = bmoa.classify_compactness(bmoa.SymbolPair(one, ident))
    assert res.verdict == bmoa.Compactness.NonCompact
    assert res.verdict_name == "non_compact"
    assert len(res.power_seq) == 65


def test_power_sequence_geometric():
    pair = bmoa.SymbolPair(bmoa.AnalyticFunction.constant(1), bmoa.AnalyticFunction([0, 0.5]))
    seq = bmoa.power_seminorm_seq(pair, 8)
    for n in range(1, 9):
        assert seq[n] == pytest.approx(0.5**n, abs=1e-3)


def test_run_check_smoke():
    fam = bmoa.SymbolFamily()
    fam.count = 5
    fam.include_deterministic = False
    reports = bmoa.run_check("garsia_identity", fam)
    assert len(reports) == 5
    assert all(r.pass_ for r in reports)
    jsonl = bmoa.reports_jsonl(reports)
    assert len(jsonl.strip().splitlines()) == 5
    assert "garsia_identity" in bmoa.check_ids()


def test_symbol_spec():
    spec = bmoa.SymbolSpec.parse("blaschke:0.5")
    f, err = spec.materialize(128)
    assert err < 1e-30
    a = bmoa.DiscPoint(0.5, 0.0)
    assert f(0.25) == pytest.approx(bmoa.sigma(a, 0.25), abs=1e-12)
