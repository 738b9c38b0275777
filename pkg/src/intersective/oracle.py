"""Exact independence numbers of difference-avoidance Cayley graphs.

The quantity of interest is the largest A inside G^N whose difference set
meets J^N only at 0. That is exactly the independence number of the Cayley
graph on G^N whose connection set is (J^N u (-J)^N) \\ {0}, and it factors
through the subgroup generated by J: restricting to H = <J> and multiplying
by [G:H]^N gives the full value, since distinct H^N-cosets are unconstrained.

The search is a branch-and-bound maximum clique on the complement with greedy
coloring bounds, bitsets as plain Python ints, and a monotonic-clock budget.
Timeouts surface the best set found so far, flagged non-optimal, so callers
can still use it as a certified lower bound.
"""

from __future__ import annotations

import itertools
import sys
import time
from dataclasses import dataclass
from typing import Iterable

from .abelian import GroupSpec, SubgroupInfo, subgroup_generated

__all__ = [
    "CayleyGraph",
    "build_cayley",
    "MISResult",
    "max_independent_set",
    "independence_number",
    "OracleTimeout",
    "OracleInfeasible",
    "AvoidanceResult",
    "exact_avoidance",
    "coset_representatives",
    "lift_block_witness",
    "verify_clique",
    "VERTEX_CAP",
    "DENSE_CAP",
    "MIS_CAP",
]

VERTEX_CAP = 1 << 20
DENSE_CAP = 1 << 16  # dense bitset adjacency only below this many vertices
MIS_CAP = 4096  # default search cap for exact independence runs


class OracleInfeasible(ValueError):
    """Instance exceeds a configured vertex cap."""


class OracleTimeout(RuntimeError):
    """Search hit its time budget; .result holds the best known lower bound."""

    def __init__(self, result: "MISResult"):
        super().__init__(f"independent-set search timed out at size {result.value}")
        self.result = result


@dataclass(frozen=True)
class CayleyGraph:
    """Difference-avoidance graph on base^N for a vertex base closed under J-shifts.

    Adjacency: u ~ v iff u - v lies coordinatewise all in J or all in -J, and
    u != v. rows holds dense bitset adjacency when the graph is small enough.
    """

    group: GroupSpec
    J: tuple[tuple[int, ...], ...]
    N: int
    vertices: tuple[tuple[tuple[int, ...], ...], ...]
    rows: tuple[int, ...] | None

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def index_of(self, v) -> int:
        return self._index()[tuple(self.group.element(x) for x in v)]

    def _index(self) -> dict:
        if not hasattr(self, "_index_cache"):
            object.__setattr__(self, "_index_cache", {v: i for i, v in enumerate(self.vertices)})
        return self._index_cache

    def adjacent(self, u, v) -> bool:
        G = self.group
        u = tuple(G.element(x) for x in u)
        v = tuple(G.element(x) for x in v)
        if u == v:
            return False
        d = tuple(G.sub(a, b) for a, b in zip(u, v))
        Jset = set(self.J)
        return all(x in Jset for x in d) or all(G.neg(x) in Jset for x in d)

    def degree_histogram(self) -> dict[int, int]:
        if self.rows is None:
            raise ValueError("degrees need dense adjacency")
        hist: dict[int, int] = {}
        for r in self.rows:
            d = bin(r).count("1")
            hist[d] = hist.get(d, 0) + 1
        return hist


def _validated_J(G: GroupSpec, J: Iterable) -> tuple[tuple[int, ...], ...]:
    Jt = tuple(dict.fromkeys(G.element(j) for j in J))
    if G.zero() not in Jt:
        raise ValueError("J must contain 0")
    return Jt


def _build_on_base(G: GroupSpec, J, N: int, base, vertex_cap: int) -> CayleyGraph:
    n_vertices = len(base) ** N
    if n_vertices > vertex_cap:
        raise OracleInfeasible(f"{n_vertices} vertices exceed cap {vertex_cap}")
    vertices = tuple(itertools.product(base, repeat=N))
    rows = None
    if n_vertices <= DENSE_CAP:
        index = {v: i for i, v in enumerate(vertices)}
        # connection vectors: coordinates all in J or all in -J, not all zero
        conn = set()
        for c in itertools.product(J, repeat=N):
            if any(x != G.zero() for x in c):
                conn.add(c)
                conn.add(tuple(G.neg(x) for x in c))
        row_list = [0] * n_vertices
        for c in conn:
            for i, v in enumerate(vertices):
                w = tuple(G.add(a, b) for a, b in zip(v, c))
                j = index.get(w)
                if j is not None:  # base is a subgroup, so shifts stay inside
                    row_list[i] |= 1 << j
        for i in range(n_vertices):
            row_list[i] &= ~(1 << i)
        rows = tuple(row_list)
    return CayleyGraph(G, tuple(J), N, vertices, rows)


def build_cayley(G: GroupSpec, J: Iterable, N: int, *, vertex_cap: int = VERTEX_CAP) -> CayleyGraph:
    """Cayley graph on all of G^N with connection set (J^N u (-J)^N) \\ {0}."""
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    Jt = _validated_J(G, J)
    base = tuple(G.elements())
    return _build_on_base(G, Jt, N, base, vertex_cap)


@dataclass(frozen=True)
class MISResult:
    """Outcome of an independence search; optimal=False means lower bound only."""

    value: int
    witness: tuple
    optimal: bool
    nodes: int
    elapsed: float


def _greedy_seed(comp: list[int], n: int) -> tuple[int, int]:
    """Quick clique in the complement (= independent set), largest-degree first."""
    order = sorted(range(n), key=lambda i: bin(comp[i]).count("1"), reverse=True)
    chosen = 0
    size = 0
    allowed = (1 << n) - 1
    for v in order:
        b = 1 << v
        if allowed & b:
            chosen |= b
            size += 1
            allowed &= comp[v]
    return size, chosen


def _color_order(P: int, comp: list[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rem = P
    while rem:
        color += 1
        Q = rem
        while Q:
            b = Q & -Q
            v = b.bit_length() - 1
            Q &= ~comp[v] & ~b
            rem &= ~b
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_independent_set(X: CayleyGraph, *, timeout: float | None = None) -> MISResult:
    """Exact maximum independent set of X by branch and bound.

    Runs a Tomita-style maximum-clique search on the complement graph with
    greedy coloring upper bounds. Deterministic: same value and witness for
    the same graph and budget. On timeout the best set found so far comes
    back with optimal=False.
    """
    if X.rows is None:
        raise OracleInfeasible(f"{X.n_vertices} vertices have no dense adjacency (cap {DENSE_CAP})")
    n = X.n_vertices
    start = time.monotonic()
    deadline = None if timeout is None else start + timeout
    full = (1 << n) - 1
    comp = [full & ~X.rows[i] & ~(1 << i) for i in range(n)]
    best, best_bits = _greedy_seed(comp, n)
    nodes = 0
    aborted = False

    def expand(r_size: int, r_bits: int, P: int) -> None:
        nonlocal best, best_bits, nodes, aborted
        nodes += 1
        if aborted or (deadline is not None and time.monotonic() > deadline):
            aborted = True
            return
        if r_size > best:
            best, best_bits = r_size, r_bits
        order, bounds = _color_order(P, comp)
        for i in range(len(order) - 1, -1, -1):
            if aborted:
                return
            if r_size + bounds[i] <= best:
                return
            v = order[i]
            b = 1 << v
            expand(r_size + 1, r_bits | b, P & comp[v])
            P &= ~b

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n + 64))
    try:
        expand(0, 0, full)
    finally:
        sys.setrecursionlimit(old_limit)
    witness = tuple(X.vertices[i] for i in range(n) if best_bits >> i & 1)
    return MISResult(best, witness, not aborted, nodes, time.monotonic() - start)


def independence_number(X: CayleyGraph, *, timeout: float | None = None) -> int:
    """Exact independence number alpha(X); raises OracleTimeout on budget exhaustion."""
    result = max_independent_set(X, timeout=timeout)
    if not result.optimal:
        raise OracleTimeout(result)
    return result.value


@dataclass(frozen=True)
class AvoidanceResult:
    """Exact extremal value via the subgroup reduction value = block_alpha * index^N."""

    value: int
    subgroup_order: int
    index: int
    block_alpha: int
    optimal: bool
    mis: MISResult | None


def _subgroup_base(G: GroupSpec, H: SubgroupInfo) -> tuple:
    if H.members is not None:
        return H.sorted_members()
    if G.rank == 1:
        step = G.order // H.order
        return tuple((step * k,) for k in range(H.order))
    raise OracleInfeasible(f"cannot enumerate subgroup of order {H.order} in {G}")


def exact_avoidance(G: GroupSpec, J: Iterable, N: int, *, timeout: float | None = None,
                    mis_cap: int = MIS_CAP) -> AvoidanceResult:
    """Largest |A|, A in G^N, with (A - A) meeting J^N only at 0 -- exactly.

    Reduces to the subgroup H generated by J (cosets of H^N are unconstrained),
    runs the exact search on H^N, and multiplies by [G:H]^N. When the search
    times out the returned value is still a valid lower bound, optimal=False.
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    Jt = _validated_J(G, J)
    gens = [j for j in Jt if j != G.zero()]
    if not gens:
        # J = {0}: every difference condition is vacuous
        return AvoidanceResult(G.order**N, 1, G.order, 1, True, None)
    H = subgroup_generated(G, gens)
    base = _subgroup_base(G, H)
    X = _build_on_base(G, Jt, N, base, mis_cap)
    if X.rows is None:
        raise OracleInfeasible(f"{X.n_vertices} vertices exceed dense cap {DENSE_CAP}")
    mis = max_independent_set(X, timeout=timeout)
    return AvoidanceResult(mis.value * H.index**N, H.order, H.index, mis.value, mis.optimal, mis)


def coset_representatives(G: GroupSpec, H: SubgroupInfo) -> tuple:
    """One representative per coset of H, in the group's element order."""
    reps: list[tuple[int, ...]] = []
    for e in G.elements():
        if not any(H.contains(G.sub(e, r)) for r in reps):
            reps.append(e)
            if len(reps) == H.index:
                break
    return tuple(reps)


def lift_block_witness(G: GroupSpec, J: Iterable, N: int, res: AvoidanceResult, *,
                       cap: int = MIS_CAP) -> tuple | None:
    """Expand a block avoider on <J>^N to one of full size res.value.

    The union of coset translates stays avoiding because J generates the
    subgroup: any cross-coset difference leaves <J>^N and cannot land in J^N.
    Returns None when there is no block witness or the lift exceeds cap.
    """
    if res.value > cap:
        return None
    if res.mis is None:
        if res.optimal and res.subgroup_order == 1:
            # J = {0}: no constraint, all of G^N qualifies
            return tuple(itertools.product(G.elements(), repeat=N))
        return None
    if res.index == 1:
        return res.mis.witness
    Jt = _validated_J(G, J)
    H = subgroup_generated(G, [j for j in Jt if j != G.zero()])
    if H.index != res.index:
        raise ValueError(f"subgroup index {H.index} does not match result index {res.index}")
    reps = coset_representatives(G, H)
    out = []
    for shift in itertools.product(reps, repeat=N):
        for w in res.mis.witness:
            out.append(tuple(G.add(a, b) for a, b in zip(w, shift)))
    return tuple(out)


def verify_clique(X: CayleyGraph, C: Iterable) -> bool:
    """True iff the given vertices are pairwise adjacent in X."""
    vs = [tuple(X.group.element(x) for x in v) for v in C]
    if len(set(vs)) != len(vs):
        return False
    return all(X.adjacent(u, v) for u, v in itertools.combinations(vs, 2))
