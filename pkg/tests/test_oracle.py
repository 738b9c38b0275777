"""Exact avoidance oracle: graph construction, search, reduction, witnesses.

Anchor values here were cross-checked against independent runs on the
unreduced graph over all of G^N before being frozen.
"""

import itertools

import pytest

from intersective.abelian import GroupSpec, subgroup_generated
from intersective.oracle import (AvoidanceResult, OracleInfeasible, OracleTimeout,
                                 build_cayley, coset_representatives, exact_avoidance,
                                 independence_number, lift_block_witness,
                                 max_independent_set, verify_clique)


# ---------------------------------------------------------------------------
# graph construction


def test_build_cayley_pentagon():
    G = GroupSpec((5,))
    X = build_cayley(G, [(0,), (1,)], 1)
    assert X.n_vertices == 5
    assert X.degree_histogram() == {2: 5}
    assert X.adjacent([(0,)], [(1,)])
    assert X.adjacent([(0,)], [(4,)])
    assert not X.adjacent([(0,)], [(2,)])
    assert not X.adjacent([(3,)], [(3,)])


def test_build_cayley_product_degrees():
    # connection set {0,1}^2 u {0,4}^2 minus zero has 6 vectors, vertex-transitive
    X = build_cayley(GroupSpec((5,)), [(0,), (1,)], 2)
    assert X.n_vertices == 25
    assert X.degree_histogram() == {6: 25}


def test_build_cayley_index_roundtrip():
    X = build_cayley(GroupSpec((6,)), [(0,), (1,)], 2)
    for i in (0, 7, 35):
        assert X.index_of(X.vertices[i]) == i


def test_build_cayley_rejects():
    G = GroupSpec((5,))
    with pytest.raises(ValueError):
        build_cayley(G, [(0,), (1,)], 0)
    with pytest.raises(ValueError):
        build_cayley(G, [(1,)], 1)  # 0 must be in J
    with pytest.raises(OracleInfeasible):
        build_cayley(GroupSpec((7,)), [(0,), (1,)], 3, vertex_cap=100)


def test_build_cayley_sparse_above_dense_cap():
    # 5^7 = 78125 vertices: buildable, but no dense rows and no search
    X = build_cayley(GroupSpec((5,)), [(0,), (1,)], 7)
    assert X.rows is None
    with pytest.raises(OracleInfeasible):
        max_independent_set(X)


# ---------------------------------------------------------------------------
# exact search


def test_independence_number_pentagon():
    assert independence_number(build_cayley(GroupSpec((5,)), [(0,), (1,)], 1)) == 2


def test_search_is_deterministic():
    X = build_cayley(GroupSpec((7,)), [(0,), (1,), (2,)], 2)
    r1 = max_independent_set(X)
    r2 = max_independent_set(X)
    assert r1.value == r2.value == 7
    assert r1.witness == r2.witness
    assert r1.optimal and r2.optimal


def test_witness_is_independent():
    X = build_cayley(GroupSpec((6,)), [(0,), (1,)], 2)
    r = max_independent_set(X)
    assert len(r.witness) == r.value
    for u, v in itertools.combinations(r.witness, 2):
        assert not X.adjacent(u, v)


@pytest.mark.parametrize("orders,J,N,value", [
    ((3,), [(0,), (1,)], 1, 1),
    ((5,), [(0,), (1,)], 1, 2),
    ((5,), [(0,), (1,)], 2, 7),
    ((7,), [(0,), (1,), (2,)], 1, 2),
    ((7,), [(0,), (1,), (2,)], 2, 7),
    ((7,), [(0,), (1,)], 2, 14),
    ((6,), [(0,), (1,)], 1, 3),
    ((6,), [(0,), (3,)], 2, 9),
    ((2, 2), [(0, 0), (1, 0)], 1, 2),
    ((2, 2), [(0, 0), (1, 0)], 2, 4),
    ((2, 2), [(0, 0), (1, 0)], 3, 8),
])
def test_exact_avoidance_anchors(orders, J, N, value):
    r = exact_avoidance(GroupSpec(orders), J, N)
    assert r.optimal
    assert r.value == value


def test_exact_avoidance_subgroup_reduction():
    # <2> in Z_6 has index 2; the 3x3 block graph contributes alpha = 3 at N = 2
    r = exact_avoidance(GroupSpec((6,)), [(0,), (2,)], 2)
    assert (r.value, r.subgroup_order, r.index, r.block_alpha) == (12, 3, 2, 3)


def test_exact_avoidance_trivial_J():
    r = exact_avoidance(GroupSpec((6,)), [(0,)], 2)
    assert r.value == 36
    assert r.optimal and r.mis is None


def test_reduction_matches_unreduced_graph():
    """The coset reduction agrees with a direct search on all of G^N."""
    cases = [((6,), [(0,), (2,)]), ((6,), [(0,), (3,)]),
             ((2, 4), [(0, 0), (0, 2)]), ((2, 4), [(0, 0), (1, 0)])]
    for orders, J in cases:
        G = GroupSpec(orders)
        for N in (1, 2):
            reduced = exact_avoidance(G, J, N).value
            direct = independence_number(build_cayley(G, J, N))
            assert reduced == direct, (orders, J, N)


def test_monotone_in_J():
    """Adding forbidden differences can only shrink the extremal value."""
    values = {}
    for n in (5, 6, 7):
        G = GroupSpec((n,))
        singles = [x for x in range(1, n)]
        for N in (1, 2):
            for x in singles:
                values[(n, (x,), N)] = exact_avoidance(G, [(0,), (x,)], N).value
            for x, y in itertools.combinations(singles, 2):
                v = exact_avoidance(G, [(0,), (x,), (y,)], N).value
                assert v <= values[(n, (x,), N)], (n, x, y, N)
                assert v <= values[(n, (y,), N)], (n, x, y, N)


def test_exact_avoidance_rejects():
    G = GroupSpec((5,))
    with pytest.raises(ValueError):
        exact_avoidance(G, [(0,), (1,)], 0)
    with pytest.raises(OracleInfeasible):
        exact_avoidance(GroupSpec((11,)), [(0,), (1,)], 3, mis_cap=1000)


# ---------------------------------------------------------------------------
# timeouts


def test_timeout_returns_lower_bound():
    X = build_cayley(GroupSpec((7,)), [(0,), (1,)], 2)
    r = max_independent_set(X, timeout=0.0)
    assert not r.optimal
    assert r.value >= 1
    for u, v in itertools.combinations(r.witness, 2):
        assert not X.adjacent(u, v)


def test_independence_number_timeout_carries_result():
    X = build_cayley(GroupSpec((7,)), [(0,), (1,)], 2)
    with pytest.raises(OracleTimeout) as exc:
        independence_number(X, timeout=0.0)
    assert exc.value.result.value >= 1
    assert not exc.value.result.optimal


def test_exact_avoidance_timeout_is_lower_bound():
    r = exact_avoidance(GroupSpec((7,)), [(0,), (1,)], 2, timeout=0.0)
    assert not r.optimal
    assert 1 <= r.value <= 14


# ---------------------------------------------------------------------------
# cliques and witnesses


def test_verify_clique():
    X = build_cayley(GroupSpec((7,)), [(0,), (1,)], 1)
    assert verify_clique(X, [[(0,)], [(1,)]])
    assert not verify_clique(X, [[(0,)], [(2,)]])
    assert not verify_clique(X, [[(0,)], [(0,)]])  # duplicates never form a clique
    assert verify_clique(X, [])


def test_coset_representatives():
    G = GroupSpec((6,))
    H = subgroup_generated(G, [(2,)])
    assert coset_representatives(G, H) == ((0,), (1,))
    G2 = GroupSpec((2, 2))
    H2 = subgroup_generated(G2, [(1, 0)])
    assert coset_representatives(G2, H2) == ((0, 0), (0, 1))


def test_lift_block_witness_through_reduction():
    G = GroupSpec((6,))
    J = [(0,), (2,)]
    r = exact_avoidance(G, J, 2)
    lifted = lift_block_witness(G, J, 2, r)
    assert lifted is not None and len(lifted) == r.value == 12
    assert len(set(lifted)) == 12
    X = build_cayley(G, J, 2)
    for u, v in itertools.combinations(lifted, 2):
        assert not X.adjacent(u, v)


def test_lift_block_witness_index_one():
    G = GroupSpec((5,))
    r = exact_avoidance(G, [(0,), (1,)], 1)
    assert lift_block_witness(G, [(0,), (1,)], 1, r) == r.mis.witness


def test_lift_block_witness_trivial_J():
    G = GroupSpec((3,))
    r = exact_avoidance(G, [(0,)], 1)
    lifted = lift_block_witness(G, [(0,)], 1, r)
    assert lifted is not None and len(lifted) == 3


def test_lift_block_witness_respects_cap():
    G = GroupSpec((6,))
    r = exact_avoidance(G, [(0,), (2,)], 2)
    assert lift_block_witness(G, [(0,), (2,)], 2, r, cap=3) is None
