"""Smoke tests for the python bindings."""

import json

import pytest

import curvecliff as cc


def test_chain_roundtrip():
    graph, warnings = cc.gen_chain([1, 1, 1, 1])
    assert warnings == []
    assert graph.pa == 4
    assert graph.connected

    text = graph.to_json()
    again = cc.parse_curve(text)
    assert again.to_json() == text

    conn = cc.connectivity_number(graph)
    assert conn.m == 1
    bounds = cc.clifford_bounds(graph)
    assert (bounds.lower, bounds.upper, bounds.exact) == (-3, -3, -3)


def test_threecon_numbers():
    graph = cc.gen_threecon([2, 2, 2, 2, 2, 2])
    assert graph.pa == 16
    conn = cc.connectivity_number(graph)
    assert conn.m == 3
    assert cc.is_m_connected(graph, 3)
    assert not cc.is_m_connected(graph, 4)
    assert len(conn.all_min_decompositions) == 7

    profile = cc.split_cluster_profile(graph, [[0], [1], [2], [3], [4], [5]])
    assert profile.cliff == -1
    assert profile.h0 == 12
    assert profile.h1 == 6

    bounds = cc.clifford_bounds(graph)
    assert (bounds.lower, bounds.upper) == (-5, -1)
    assert bounds.exact is None

    cliff, parts, certified = cc.best_split_bound(graph)
    assert cliff == -1
    assert len(parts) == 6
    assert certified


def test_green2_certificate():
    res = cc.green2_certificate(9, 1, 4)
    t = res.trace
    assert (t.pa, t.cliff) == (13, 2)
    assert (t.threshold_comp1_piece, t.threshold_comp0_piece) == (10, 9)
    assert t.vanishing_from == 10
    assert t.pass_
    assert res.shape.value(9, 1) == "Nonzero"
    assert res.shape.value(10, 1) == "Zero"
    assert res.shape.provenance(10, 1) == "GreenProven"

    with pytest.raises(ValueError):
        cc.green2_certificate(9, 1, 6)


def test_oracle_agreement():
    for seed in range(20):
        graph = cc.gen_random(seed, 2 + seed % 6, 1 + seed % 6 + seed % 3, 1, 3)
        fast = cc.connectivity_number(graph)
        slow = cc.min_cut_bruteforce(graph)
        assert fast.m == slow.m
        assert fast.witness.side_b == slow.witness.side_b


def test_analyze_structured_report():
    graph = cc.gen_two_component(9, 1, 4, general=True)
    report = cc.analyze(graph, betti=True)
    assert report.pa == 13
    assert report.clifford.exact == 2
    doc = json.loads(report.to_json())
    assert doc["clifford"]["exact"] == 2
    assert doc["connectivity"]["m"] == 4
    row = {e["p"]: e["value"] for e in doc["betti"]["entries"] if e["q"] == 1}
    assert all(row[p] == "Nonzero" for p in range(1, 10))
    assert all(row[p] == "Zero" for p in range(10, 12))


def test_profile_validation():
    graph = cc.gen_threecon([2, 2, 2, 2, 2, 2])
    bad = cc.parse_profile(
        json.dumps(
            {
                "kind": "UserSupplied",
                "invertible": True,
                "per_component_degree": [1, 1, 1, 1, 1, 1],
                "degree": 6,
                "h0": 5,
                "h1": 14,
                "cliff": -2,
            }
        )
    )
    verdict = cc.validate_sheaf_profile(graph, bad)
    assert not verdict.valid
    assert [v.constraint for v in verdict.violations] == ["invertible-clifford-nonnegative"]


def test_cli_entry_point():
    code, out, err = cc.run_cli(["green2", "--g1", "7", "--g2", "1", "--m", "4"])
    assert code == 0
    assert "verdict: pass" in out

    code, _, err = cc.run_cli(["green2", "--g1", "9", "--g2", "1", "--m", "3"])
    assert code == 2
    assert "m >= 4" in err


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        cc.parse_curve("{ not json")
    with pytest.raises(ValueError):
        cc.gen_threecon([2, 2, 2, 2, 2, 1])
    graph = cc.gen_random(3, 13, 16, 1, 2)
    with pytest.raises(RuntimeError):
        cc.best_split_bound(graph)  # beyond the set-partition guard
