"""Bound orchestration: candidate methods, consistency policing, serialization."""

import pytest

from intersective.abelian import GroupSpec, parse_group
from intersective.cyclotomic import cyclotomic
from intersective.engine import (BoundEntry, InconsistencyError, best_bounds,
                                 best_divisor_polynomial, generic_upper_bound,
                                 pair_upper_bound, report_from_json, report_to_json)
from intersective.oracle import AvoidanceResult
from intersective.spectral import residue_dp_count


# ---------------------------------------------------------------------------
# individual candidates


def test_generic_upper_bound():
    G = GroupSpec((105,))
    J = [(k,) for k in cyclotomic(105).support()]
    assert generic_upper_bound(G, J, 2) == (105 - 33 + 1) ** 2 == 5329
    assert generic_upper_bound(GroupSpec((5,)), [(0,), (1,)], 3) == 4**3


def test_generic_upper_bound_rejects():
    with pytest.raises(ValueError):
        generic_upper_bound(GroupSpec((2, 2)), [(0, 0), (1, 0)], 1)
    with pytest.raises(ValueError):
        generic_upper_bound(GroupSpec((5,)), [(1,)], 1)
    with pytest.raises(ValueError):
        generic_upper_bound(GroupSpec((5,)), [(0,)], 0)


def test_divisor_search_recovers_planted_factor():
    J = set(cyclotomic(105).support())
    h = best_divisor_polynomial(105, J)
    assert h == cyclotomic(105)


def test_divisor_search_degree_is_maximal_under_ties():
    # support of Phi_17 * Phi_27 covers 0..34 entirely, so several divisor
    # subsets reach degree 34; whichever wins, the degree cannot drop
    J = set((cyclotomic(17) * cyclotomic(27)).support())
    h = best_divisor_polynomial(459, J)
    assert h.degree == 34
    assert set(h.support()) <= J


def test_divisor_search_none_when_nothing_fits():
    assert best_divisor_polynomial(5, {0, 1}) is None
    assert best_divisor_polynomial(7, {0}) is None


def test_divisor_search_rejects():
    with pytest.raises(ValueError):
        best_divisor_polynomial(9, {1, 2})  # missing 0
    with pytest.raises(ValueError):
        best_divisor_polynomial(9, {0, 1, 8})  # 1 and -1 collide
    with pytest.raises(ValueError):
        best_divisor_polynomial(105, set(cyclotomic(105).support()), subset_cap=5)


def test_pair_upper_bound():
    assert pair_upper_bound(GroupSpec((3,)), (1,), 2) == residue_dp_count(3, 2) == 4
    # <(0,1)> has order 4 and index 2 in Z_2 x Z_4
    assert pair_upper_bound(GroupSpec((2, 4)), (0, 1), 1) == 2 * residue_dp_count(4, 1) == 6


def test_pair_upper_bound_rejects_involution():
    with pytest.raises(ValueError):
        pair_upper_bound(GroupSpec((2, 4)), (1, 0), 1)


# ---------------------------------------------------------------------------
# the assembled report


@pytest.fixture(scope="module")
def z105_report():
    G = parse_group("105")
    J = [(k,) for k in cyclotomic(105).support()]
    return best_bounds(G, J, 2, oracle_timeout=2.0)


def test_z105_method_values(z105_report):
    r = z105_report
    assert r.method_value("generic") == 5329
    assert r.method_value("spectral-divisor") == 57**2 == 3249
    assert r.method_value("pair-dp") == 4900
    assert r.method_value("spectral-invcyclo") == 4900
    # the support contains the run 8..48, so a progression clique with m = 6
    # covers the whole group: floor(105^2 / 13) beats every spectral count
    assert r.method_value("clique-progression") == 105**2 // 13 == 848
    assert r.best_upper == 848


def test_z105_lower_and_notes(z105_report):
    r = z105_report
    assert r.exact is None
    assert r.method_value("product") == 36   # exact N=1 value is 6
    assert r.best_lower == 36
    assert any("oracle" in note and "cap" in note for note in r.notes)


def test_f4_exact_through_reduction():
    r = best_bounds(GroupSpec((2, 2)), [(0, 0), (1, 0)], 3)
    assert r.exact == 8
    assert r.method_value("clique-symmetric") == 8
    assert r.method_value("clique-progression") == 16
    assert r.method_value("product") == 8
    assert r.best_upper == r.best_lower == 8
    assert any(note.startswith("generic:") for note in r.notes)
    assert r.certificate is None  # reduction index 2: block witness not lifted here


def test_z5_pair_full_stack():
    r = best_bounds(GroupSpec((5,)), [(0,), (1,)], 1)
    assert r.exact == 2
    assert r.method_value("generic") == 4
    assert r.method_value("pair-dp") == 4
    assert r.method_value("pair-count") == 2
    assert r.method_value("slab") == 1
    assert r.certificate == (((0,),), ((2,),))
    assert r.best_upper == 2 and r.best_lower == 2


def test_oracle_timeout_becomes_partial_lower():
    r = best_bounds(GroupSpec((7,)), [(0,), (1,)], 2, oracle_timeout=0.0)
    assert r.exact is None
    assert r.method_value("oracle-partial") >= 1
    assert any("timed out" in note for note in r.notes)


def test_report_rejects_bad_query():
    with pytest.raises(ValueError):
        best_bounds(GroupSpec((5,)), [(1,)], 1)
    with pytest.raises(ValueError):
        best_bounds(GroupSpec((5,)), [(0,)], 0)


def test_inconsistency_raises_with_report(monkeypatch):
    def inflated(G, J, N, *, timeout=None, mis_cap=None):
        return AvoidanceResult(999, 5, 1, 999, True, None)

    monkeypatch.setattr("intersective.engine.exact_avoidance", inflated)
    with pytest.raises(InconsistencyError) as exc:
        best_bounds(GroupSpec((5,)), [(0,), (1,)], 1)
    report = exc.value.report
    assert report.best_lower == 999
    assert report.best_upper < 999


# ---------------------------------------------------------------------------
# serialization


def test_report_json_roundtrip_with_certificate():
    r = best_bounds(GroupSpec((5,)), [(0,), (1,)], 1)
    data = report_to_json(r)
    assert data["exact"] == "2"
    assert data["best_upper"] == "2"
    assert data["certificate"] == [["0"], ["2"]]
    assert report_from_json(data) == r


def test_report_json_roundtrip_noncyclic():
    r = best_bounds(GroupSpec((2, 2)), [(0, 0), (1, 0)], 2)
    data = report_to_json(r)
    assert data["query"]["group"] == "2x2"
    assert report_from_json(data) == r


def test_report_json_values_are_strings():
    # arbitrary-size integers survive any JSON consumer as strings
    r = best_bounds(GroupSpec((5,)), [(0,), (1,)], 1)
    data = report_to_json(r)
    for side in ("upper", "lower"):
        for e in data[side]:
            assert isinstance(e["value"], str)


def test_bound_entry_params_dict():
    e = BoundEntry(4, "pair-dp", (("a", "1"),))
    assert e.params_dict() == {"a": "1"}
