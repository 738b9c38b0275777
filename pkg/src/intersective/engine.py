"""Bound orchestration: gather every applicable method for a query (G, J, N).

Upper bounds come from the generic cyclic-group count, clique covers,
spectral counts over cyclic subgroups (with a searched cyclotomic-divisor
weight, the negated inverse cyclotomic, and the pair weight 1 - t), and the
exact oracle when feasible. Lower bounds come from the slab, the power of the
N = 1 oracle value, and oracle runs (including timed-out ones, which are
still witnessed sets). Every method failure is recorded as a note, never
fatal; a lower bound exceeding an upper bound aborts with a diagnostic dump
since it can only mean a bug somewhere in the tower.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .abelian import GroupSpec, element_order, format_element, parse_element, parse_group
from .cyclotomic import IntPolynomial, cyclotomic, inverse_cyclotomic, is_admissible_support
from .numtheory import divisors, euler_phi
from .oracle import OracleInfeasible, exact_avoidance
from .constructions import product_lower_bound, slab_size
from .spectral import (MultisetCapExceeded, clique_bounds, count_nonneg_tuples,
                       residue_dp_count)

__all__ = [
    "BoundEntry",
    "BoundReport",
    "InconsistencyError",
    "generic_upper_bound",
    "best_divisor_polynomial",
    "pair_upper_bound",
    "best_bounds",
    "report_to_json",
    "report_from_json",
]

DIVISOR_SUBSET_CAP = 1 << 20
ORACLE_VERTEX_CAP = 4096
ENGINE_MULTISET_CAP = 200_000


class InconsistencyError(RuntimeError):
    """A lower bound exceeded an upper bound; .report carries the full dump."""

    def __init__(self, message: str, report: "BoundReport"):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class BoundEntry:
    value: int
    method: str
    params: tuple[tuple[str, str], ...] = ()

    def params_dict(self) -> dict[str, str]:
        return dict(self.params)


def _entry(value: int, method: str, **params) -> BoundEntry:
    return BoundEntry(int(value), method, tuple(sorted((k, str(v)) for k, v in params.items())))


@dataclass(frozen=True)
class BoundReport:
    group: GroupSpec
    J: tuple[tuple[int, ...], ...]
    N: int
    upper: tuple[BoundEntry, ...]
    lower: tuple[BoundEntry, ...]
    exact: int | None = None
    certificate: tuple | None = None
    notes: tuple[str, ...] = ()

    @property
    def best_upper(self) -> int | None:
        return min((e.value for e in self.upper), default=None)

    @property
    def best_lower(self) -> int | None:
        return max((e.value for e in self.lower), default=None)

    def method_value(self, method: str) -> int | None:
        vals = [e.value for e in self.upper + self.lower if e.method == method]
        return min(vals) if vals else None


def generic_upper_bound(G: GroupSpec, J: Iterable, N: int) -> int:
    """(|G| - |J| + 1)^N for cyclic G of order >= 3; the always-on baseline."""
    if not G.is_cyclic() or G.order < 3:
        raise ValueError(f"generic bound needs a cyclic group of order >= 3, got {G}")
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    Jset = {G.element(j) for j in J}
    if G.zero() not in Jset:
        raise ValueError("J must contain 0")
    return (G.order - len(Jset) + 1) ** N


def best_divisor_polynomial(n: int, J: Iterable[int], *,
                            subset_cap: int = DIVISOR_SUBSET_CAP) -> IntPolynomial | None:
    """Highest-degree product of cyclotomic factors of t^n - 1 supported inside J.

    Enumerates subsets of divisors d > 1 of n (so the constant term stays 1),
    prunes by total degree <= max(J), and checks the support containment on
    each complete product; intermediate supports may shrink through
    cancellation, so only degree prunes the recursion. Returns None when no
    nonempty subset fits.
    """
    Jset = {j % n for j in J}
    if 0 not in Jset:
        raise ValueError("J must contain 0")
    if not is_admissible_support(Jset, n):
        raise ValueError(f"support {sorted(Jset)} collides with its negation mod {n}")
    max_j = max(Jset)
    if max_j == 0:
        return None
    divs = [d for d in divisors(n) if d > 1 and euler_phi(d) <= max_j]
    best: tuple[int, IntPolynomial] | None = None
    visited = 0

    def rec(i: int, poly: IntPolynomial, deg: int) -> None:
        nonlocal best, visited
        visited += 1
        if visited > subset_cap:
            raise ValueError(f"divisor-subset search exceeded cap {subset_cap}")
        if deg > 0 and (best is None or deg > best[0]) and set(poly.support()) <= Jset:
            best = (deg, poly)
        for k in range(i, len(divs)):
            d = divs[k]
            nd = deg + euler_phi(d)
            if nd <= max_j:
                rec(k + 1, poly * cyclotomic(d), nd)

    rec(0, IntPolynomial.one(), 0)
    return None if best is None else best[1]


def pair_upper_bound(G: GroupSpec, a, N: int) -> int:
    """[G:<a>]^N times the residue-DP count for the pair support {0, a}.

    Needs order(a) >= 3; an element equal to its own negation gets the
    half-group clique bound instead (see clique_bounds).
    """
    a = G.element(a)
    n = element_order(G, a)
    if n < 3:
        raise ValueError(f"element {a} has order {n} < 3 (equal to its own negation)")
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    index = G.order // n
    return index**N * residue_dp_count(n, N)


def _cyclic_residues(G: GroupSpec, a, J) -> tuple[int, int, set[int] | None]:
    """(order, index, residues of J inside <a>); residues None if J elements fall outside."""
    n = element_order(G, a)
    dlog = {}
    x = G.zero()
    for k in range(n):
        dlog[x] = k
        x = G.add(x, a)
    res = set()
    for j in J:
        if j in dlog:
            res.add(dlog[j])
    return n, G.order // n, res


def best_bounds(G: GroupSpec, J: Iterable, N: int, *, oracle_timeout: float | None = 10.0,
                oracle_vertex_cap: int = ORACLE_VERTEX_CAP,
                multiset_cap: int = ENGINE_MULTISET_CAP) -> BoundReport:
    """Collect all applicable upper and lower bounds for the query (G, J, N).

    Methods are tried independently; failures become notes. The report is
    deterministic for fixed inputs and budgets (modulo oracle timeout
    nondeterminism, which can only widen the interval, flagged in notes).
    Raises InconsistencyError when any lower bound exceeds any upper bound.
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    Jt = tuple(dict.fromkeys(G.element(j) for j in J))
    if G.zero() not in Jt:
        raise ValueError("J must contain 0")
    upper: list[BoundEntry] = []
    lower: list[BoundEntry] = [_entry(1, "trivial")]
    notes: list[str] = []
    exact: int | None = None
    certificate: tuple | None = None

    try:
        upper.append(_entry(generic_upper_bound(G, Jt, N), "generic"))
    except ValueError as e:
        notes.append(f"generic: {e}")

    try:
        for cb in clique_bounds(G, Jt, N):
            upper.append(_entry(cb.value, f"clique-{cb.kind}",
                                g=format_element(cb.g), m=cb.m))
    except ValueError as e:
        notes.append(f"clique: {e}")

    pair_t = IntPolynomial.from_coeffs([1, -1])
    best_dp = best_count = best_div = best_inv = None
    for a in sorted(j for j in Jt if j != G.zero()):
        n_a, index, jres = _cyclic_residues(G, a, Jt)
        if n_a < 3:
            continue  # self-inverse elements are covered by the symmetric clique
        v = pair_upper_bound(G, a, N)
        if best_dp is None or v < best_dp[0]:
            best_dp = (v, a)
        if math.comb(N + n_a - 1, n_a - 1) <= multiset_cap:
            try:
                v = index**N * count_nonneg_tuples(pair_t, n_a, N, multiset_cap=multiset_cap)
            except MultisetCapExceeded as e:
                notes.append(f"pair-count at {format_element(a)}: {e}")
            else:
                if best_count is None or v < best_count[0]:
                    best_count = (v, a)
        if not is_admissible_support(jres, n_a):
            continue
        try:
            h = best_divisor_polynomial(n_a, jres)
        except ValueError as e:
            notes.append(f"divisor search at {format_element(a)}: {e}")
            h = None
        if h is not None:
            v = (index * (n_a - h.degree)) ** N
            if best_div is None or v < best_div[0]:
                best_div = (v, a, h)
        hinv = inverse_cyclotomic(n_a).scale(-1)
        if hinv[0] == 1 and set(hinv.support()) <= jres:
            v = (index * (n_a - hinv.degree)) ** N
            if best_inv is None or v < best_inv[0]:
                best_inv = (v, a, hinv)
    if best_dp is not None:
        upper.append(_entry(best_dp[0], "pair-dp", a=format_element(best_dp[1])))
    if best_count is not None:
        upper.append(_entry(best_count[0], "pair-count", a=format_element(best_count[1])))
    if best_div is not None:
        upper.append(_entry(best_div[0], "spectral-divisor", a=format_element(best_div[1]),
                            h=str(best_div[2]), degree=best_div[2].degree))
    if best_inv is not None:
        upper.append(_entry(best_inv[0], "spectral-invcyclo", a=format_element(best_inv[1]),
                            degree=best_inv[2].degree))

    if len(Jt) == 2:
        a = next(j for j in Jt if j != G.zero())
        n_a = element_order(G, a)
        if n_a >= 3:
            index = G.order // n_a
            lower.append(_entry(index**N * slab_size(n_a, N), "slab", a=format_element(a)))

    try:
        pb = product_lower_bound(G, Jt, N, timeout=oracle_timeout)
        lower.append(_entry(pb.value, "product", base=pb.base_value))
        if not pb.base_optimal:
            notes.append("product: base value at N=1 is a timed-out lower bound")
    except OracleInfeasible as e:
        notes.append(f"product: {e}")

    try:
        res = exact_avoidance(G, Jt, N, timeout=oracle_timeout, mis_cap=oracle_vertex_cap)
        if res.optimal:
            exact = res.value
            if res.index == 1 and res.mis is not None:
                certificate = res.mis.witness
            upper.append(_entry(res.value, "oracle"))
            lower.append(_entry(res.value, "oracle"))
        else:
            lower.append(_entry(res.value, "oracle-partial"))
            notes.append(f"oracle: timed out at {res.value}, lower bound only")
    except OracleInfeasible as e:
        notes.append(f"oracle: {e}")

    report = BoundReport(G, Jt, N, tuple(upper), tuple(lower), exact, certificate, tuple(notes))
    bl, bu = report.best_lower, report.best_upper
    if bl is not None and bu is not None and bl > bu:
        raise InconsistencyError(
            f"lower bound {bl} exceeds upper bound {bu} on {G}, J={Jt}, N={N}", report)
    if exact is not None and not (bl <= exact <= bu):
        raise InconsistencyError(f"exact value {exact} outside [{bl}, {bu}]", report)
    return report


# ---------------------------------------------------------------------------
# serialization


def report_to_json(report: BoundReport) -> dict:
    def entry_json(e: BoundEntry) -> dict:
        out = {"value": str(e.value), "method": e.method}
        if e.params:
            out["params"] = e.params_dict()
        return out

    out = {
        "query": {
            "group": str(report.group),
            "J": [format_element(j) for j in report.J],
            "N": str(report.N),
        },
        "upper": [entry_json(e) for e in report.upper],
        "lower": [entry_json(e) for e in report.lower],
        "notes": list(report.notes),
    }
    if report.best_upper is not None:
        out["best_upper"] = str(report.best_upper)
    if report.best_lower is not None:
        out["best_lower"] = str(report.best_lower)
    if report.exact is not None:
        out["exact"] = str(report.exact)
    if report.certificate is not None:
        out["certificate"] = [[format_element(x) for x in v] for v in report.certificate]
    return out


def report_from_json(data: dict) -> BoundReport:
    G = parse_group(data["query"]["group"])

    def entry_back(d: dict) -> BoundEntry:
        return BoundEntry(int(d["value"]), d["method"],
                          tuple(sorted(d.get("params", {}).items())))

    certificate = None
    if "certificate" in data:
        certificate = tuple(tuple(parse_element(G, x) for x in v) for v in data["certificate"])
    exact = int(data["exact"]) if "exact" in data else None
    return BoundReport(
        G,
        tuple(parse_element(G, x) for x in data["query"]["J"]),
        int(data["query"]["N"]),
        tuple(entry_back(d) for d in data["upper"]),
        tuple(entry_back(d) for d in data["lower"]),
        exact,
        certificate,
        tuple(data.get("notes", ())),
    )
