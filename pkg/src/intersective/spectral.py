"""Spectral machinery: weighted Cayley eigenvalues, sign counts, tuple counting.

Numeric layer: ComplexBall, a midpoint/radius pair over mpmath reals. Ball
arithmetic propagates input radii exactly and charges every operation a
32-ulp rounding slack (mpmath's basic arithmetic is correctly rounded and its
transcendentals are accurate to a few ulp, so the slack is a wide margin).
Sign decisions escalate the working precision, and exact ties are settled
symbolically: a product of values h(e_n(v_j)) lives in Z[t]/(t^n - 1), so
"real part equals 1" is equivalent to an integer polynomial being divisible
by the n-th cyclotomic polynomial. Ambiguity at the precision cap is counted
conservatively for the bound direction in force and reported, never dropped.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping

from mpmath import mp

from .abelian import GroupSpec, SubgroupInfo, character_value, element_order, subgroup_generated
from .cyclotomic import IntPolynomial, cyclotomic, is_admissible_support

__all__ = [
    "ComplexBall",
    "WeightFunction",
    "weight_from_polynomial",
    "cayley_eigenvalue",
    "product_eigenvalue",
    "count_nonneg_tuples",
    "sign_count_tuples",
    "SignCount",
    "inertia_bound",
    "ResidueDPState",
    "residue_dp_count",
    "residue_dp_profile",
    "spectral_upper_bound",
    "clique_bounds",
    "CliqueBound",
    "MultisetCapExceeded",
    "PRECISION_START",
    "PRECISION_CAP",
]

PRECISION_START = 64
PRECISION_CAP = 1024
_SLACK_BITS = 5  # 32 ulp charged per operation

MULTISET_CAP = 10**8


class MultisetCapExceeded(ValueError):
    """Tuple enumeration would exceed the configured multiset cap."""


@dataclass(frozen=True)
class ComplexBall:
    """Closed disk {z : |z - (re + i*im)| <= rad} with mpmath midpoints."""

    re: object
    im: object
    rad: object

    def magnitude_bound(self):
        return abs(self.re) + abs(self.im) + self.rad

    def real_interval(self):
        return self.re - self.rad, self.re + self.rad

    def contains_real(self, x) -> bool:
        return (self.re - x) ** 2 + self.im**2 <= self.rad**2


def _slack(*magnitudes):
    s = mp.mpf(0)
    for m in magnitudes:
        s += abs(m)
    return mp.ldexp(s + 1, _SLACK_BITS - mp.prec)


def ball_exact_int(k: int) -> ComplexBall:
    return ComplexBall(mp.mpf(k), mp.mpf(0), mp.mpf(0))


def ball_root_of_unity(num: int, den: int, prec: int) -> ComplexBall:
    """e(num/den) as a ball at the given precision."""
    with mp.workprec(prec):
        theta = 2 * mp.pi * num / den
        c, s = mp.cos(theta), mp.sin(theta)
        return ComplexBall(c, s, _slack(theta, 1))


def ball_add(a: ComplexBall, b: ComplexBall) -> ComplexBall:
    re, im = a.re + b.re, a.im + b.im
    return ComplexBall(re, im, a.rad + b.rad + _slack(re, im))


def ball_mul(a: ComplexBall, b: ComplexBall) -> ComplexBall:
    re = a.re * b.re - a.im * b.im
    im = a.re * b.im + a.im * b.re
    ma, mb = a.magnitude_bound(), b.magnitude_bound()
    rad = ma * b.rad + mb * a.rad + a.rad * b.rad + _slack(re, im, ma * mb)
    return ComplexBall(re, im, rad)


def ball_scale_int(a: ComplexBall, k: int) -> ComplexBall:
    re, im = a.re * k, a.im * k
    return ComplexBall(re, im, a.rad * abs(k) + _slack(re, im))


def ball_pow(a: ComplexBall, k: int) -> ComplexBall:
    if k < 0:
        raise ValueError(f"ball powers must be >= 0, got {k}")
    out = ball_exact_int(1)
    base = a
    while k:
        if k & 1:
            out = ball_mul(out, base)
        base_needed = k > 1
        k >>= 1
        if base_needed:
            base = ball_mul(base, base)
    return out


@dataclass(frozen=True)
class WeightFunction:
    """Symmetric integer weight on Z_n, stored as sorted (residue, value) pairs."""

    n: int
    items: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, n: int, mapping: Mapping[int, int]) -> "WeightFunction":
        items = tuple(sorted((k % n, int(v)) for k, v in mapping.items() if v != 0))
        keys = [k for k, _ in items]
        if len(set(keys)) != len(keys):
            raise ValueError("weight mapping has colliding residues")
        return cls(n, items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def value(self, k: int) -> int:
        return self.as_dict().get(k % self.n, 0)

    def support(self) -> tuple[int, ...]:
        """Nonzero residues; the connection set S = support \\ {0}."""
        return tuple(k for k, _ in self.items if k != 0)

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get((-k) % self.n) == v for k, v in d.items())


def weight_from_polynomial(h: IntPolynomial, n: int) -> WeightFunction:
    """Symmetric extension of h's coefficients: f(k) = f(-k) = coeff_k, f(0) = 1.

    Requires h(0) = 1, support inside [0, n), and support admissible mod n
    (no nonzero k with both k and -k in the support).
    """
    supp = h.support()
    if h[0] != 1:
        raise ValueError(f"constant term must be 1, got {h[0]}")
    if any(k >= n for k in supp):
        raise ValueError(f"support {supp} does not fit inside [0, {n})")
    if not is_admissible_support(supp, n):
        raise ValueError(f"support {supp} collides with its negation mod {n}")
    mapping = {0: 1}
    for k in supp:
        if k != 0:
            mapping[k] = h[k]
            mapping[(-k) % n] = h[k]
    return WeightFunction.from_dict(n, mapping)


def cayley_eigenvalue(G: GroupSpec, f, chi: tuple[int, ...], prec: int = PRECISION_START) -> ComplexBall:
    """Eigenvalue of the f-weighted Cayley graph of G at character chi.

    The value is sum over nonzero support x of f(x) * chi(-x); for symmetric f
    it is real, so the imaginary part of the returned ball contains 0.
    f is either a WeightFunction (G must be the matching Z_n) or a mapping
    from element tuples to integer weights with symmetric support.
    """
    if isinstance(f, WeightFunction):
        if G.orders != (f.n,):
            raise ValueError(f"weight on Z_{f.n} does not match group {G}")
        pairs = [((k,), v) for k, v in f.items if k != 0]
    else:
        pairs = [(G.element(x), int(v)) for x, v in dict(f).items()
                 if int(v) != 0 and G.element(x) != G.zero()]
    weights = dict(pairs)
    for x, v in weights.items():
        if weights.get(G.neg(x)) != v:
            raise ValueError(f"weight not symmetric at {x}: f(x)={v}, f(-x)={weights.get(G.neg(x))}")
    with mp.workprec(prec):
        acc = ball_exact_int(0)
        for x, v in sorted(weights.items()):
            root = character_value(G, chi, G.neg(x))
            acc = ball_add(acc, ball_scale_int(ball_root_of_unity(root.num, root.den, prec), v))
        return acc


# ---------------------------------------------------------------------------
# exact evaluation in Z[t]/(t^n - 1)


def _poly_mod_circle(h: IntPolynomial, n: int, v: int) -> tuple[int, ...]:
    """Coefficients of h(t^v) reduced mod t^n - 1; evaluates to h(e_n(v)) at e_n(1)."""
    out = [0] * n
    for k, c in enumerate(h.coeffs):
        if c:
            out[(k * v) % n] += c
    return tuple(out)


def _circle_mul(a: tuple[int, ...], b: tuple[int, ...], n: int) -> tuple[int, ...]:
    out = [0] * n
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[(i + j) % n] += ca * cb
    return tuple(out)


def _circle_pow(a: tuple[int, ...], k: int, n: int) -> tuple[int, ...]:
    out = tuple([1] + [0] * (n - 1))
    base = a
    while k:
        if k & 1:
            out = _circle_mul(out, base, n)
        k >>= 1
        if k:
            base = _circle_mul(base, base, n)
    return out


def _monic_remainder_is_zero(coeffs: Iterable[int], monic: IntPolynomial) -> bool:
    rem = list(coeffs)
    d = monic.coeffs
    deg = len(d) - 1
    for k in range(len(rem) - 1, deg - 1, -1):
        f = rem[k]
        if f:
            for j, dc in enumerate(d):
                rem[k - deg + j] -= f * dc
    return not any(rem)


def _real_part_is_exactly_one(mults: dict[int, int], shifted: dict[int, tuple[int, ...]], n: int) -> bool:
    """Exact test: Re(prod_v h(e_n(v))^{m_v}) == 1.

    The product is P(e_n(1)) for an integer polynomial P mod t^n - 1; twice its
    real part minus 2 is (P + reverse(P) - 2)(e_n(1)), which vanishes iff Phi_n
    divides that polynomial.
    """
    P = tuple([1] + [0] * (n - 1))
    for v, m in mults.items():
        P = _circle_mul(P, _circle_pow(shifted[v], m, n), n)
    R = [0] * n
    for k, c in enumerate(P):
        R[k] += c
        R[(-k) % n] += c
    R[0] -= 2
    return _monic_remainder_is_zero(R, cyclotomic(n))


def _root_residues(h: IntPolynomial, n: int) -> set[int]:
    """Residues v with h(e_n(v)) = 0 exactly: Phi_{n/gcd(n,v)} divides h."""
    roots = set()
    for d in {n // math.gcd(n, v) for v in range(n)}:
        if cyclotomic(d).divides(h):
            roots.update(v for v in range(n) if n // math.gcd(n, v) == d)
    return roots


def product_eigenvalue(h: IntPolynomial, n: int, v: tuple[int, ...], prec: int = PRECISION_START) -> ComplexBall:
    """Eigenvalue -2 + 2*Re(prod_j h(e_n(v_j))) of the N-fold product weighting.

    Exact when some factor is a cyclotomic root of h (the product is then 0 and
    the eigenvalue exactly -2); otherwise a ball at the requested precision.
    """
    weight_from_polynomial(h, n)  # validate support constraints
    roots = _root_residues(h, n)
    if any(x % n in roots for x in v):
        return ball_exact_int(-2)
    with mp.workprec(prec):
        vals = _ball_values(h, n, prec)
        prod = ball_exact_int(1)
        for x in v:
            prod = ball_mul(prod, vals[x % n])
        re = -2 + 2 * prod.re
        return ComplexBall(re, mp.mpf(0), 2 * prod.rad + _slack(re))


def _ball_values(h: IntPolynomial, n: int, prec: int) -> list[ComplexBall]:
    """h(e_n(v)) for v = 0..n-1 at the given precision."""
    with mp.workprec(prec):
        roots = [ball_root_of_unity(j, n, prec) for j in range(n)]
        out = []
        for v in range(n):
            acc = ball_exact_int(0)
            for k in h.support():
                acc = ball_add(acc, ball_scale_int(roots[(k * v) % n], h[k]))
            out.append(acc)
        return out


def _multinomial(N: int, mults: dict[int, int]) -> int:
    out = math.factorial(N)
    for m in mults.values():
        out //= math.factorial(m)
    return out


def _classify_multiset(mults, ball_cache, h, n, shifted, start_prec, cap_prec):
    """Trichotomy of Re(product) against 1: above / below / equal / ambiguous."""
    prec = start_prec
    exact_checked = False
    while prec <= cap_prec:
        if prec not in ball_cache:
            ball_cache[prec] = _ball_values(h, n, prec)
        vals = ball_cache[prec]
        with mp.workprec(prec):
            prod = ball_exact_int(1)
            for v, m in mults.items():
                prod = ball_mul(prod, ball_pow(vals[v], m))
            lo, hi = prod.re - prod.rad, prod.re + prod.rad
            if lo > 1:
                return "above"
            if hi < 1:
                return "below"
        if not exact_checked:
            if _real_part_is_exactly_one(mults, shifted, n):
                return "equal"
            exact_checked = True
        prec *= 2
    return "ambiguous"


@dataclass(frozen=True)
class SignCount:
    """Eigenvalue sign tallies; zeros appear in both one-sided counts."""

    n_nonneg: int
    n_nonpos: int
    n_zero: int
    n_ambiguous: int
    total: int

    def __post_init__(self) -> None:
        if self.n_nonneg + self.n_nonpos - self.n_zero + self.n_ambiguous != self.total:
            raise ValueError("inconsistent sign bookkeeping")


def inertia_bound(sc: SignCount) -> int:
    """Independence bound min{n_{<=0}, n_{>=0}}; ambiguity counted on both sides."""
    return min(sc.n_nonneg + sc.n_ambiguous, sc.n_nonpos + sc.n_ambiguous)


def _iter_multiplicities(h: IntPolynomial, n: int, N: int, multiset_cap: int,
                        start_prec: int, cap_prec: int):
    """Yield (mults, weight, cls) over value multisets of Z_n^N tuples."""
    weight_from_polynomial(h, n)  # constant term 1, support inside [0, n), admissible
    n_multisets = math.comb(N + n - 1, n - 1)
    if n_multisets > multiset_cap:
        raise MultisetCapExceeded(
            f"{n_multisets} multisets exceed cap {multiset_cap} for n={n}, N={N}")
    roots = _root_residues(h, n)
    shifted = {v: _poly_mod_circle(h, n, v) for v in range(n)}
    ball_cache: dict[int, list[ComplexBall]] = {}
    for combo in itertools.combinations_with_replacement(range(n), N):
        mults: dict[int, int] = {}
        for v in combo:
            mults[v] = mults.get(v, 0) + 1
        weight = _multinomial(N, mults)
        if any(v in roots for v in mults):
            yield mults, weight, "zero-product"
            continue
        yield mults, weight, _classify_multiset(mults, ball_cache, h, n, shifted,
                                                start_prec, cap_prec)


def count_nonneg_tuples(h: IntPolynomial, n: int, N: int, *, multiset_cap: int = MULTISET_CAP,
                        start_prec: int = PRECISION_START, cap_prec: int = PRECISION_CAP) -> int:
    """Number of tuples v in Z_n^N with Re(prod_j h(e_n(v_j))) >= 1.

    Enumerates value multisets with multinomial weights instead of all n^N
    tuples. Values exactly on the threshold count (the condition is >=); values
    still ambiguous at the precision cap count too, keeping the result a valid
    upper-bound ingredient. When h divides t^n - 1 the closed bound
    (n - deg h)^N is asserted against the result.
    """
    total = 0
    ambiguous = 0
    for mults, weight, cls in _iter_multiplicities(h, n, N, multiset_cap, start_prec, cap_prec):
        if cls in ("above", "equal"):
            total += weight
        elif cls == "ambiguous":
            ambiguous += weight
            total += weight
    if _divides_circle(h, n):
        # Re >= 1 forces a nonzero product, and a divisor of t^n - 1 has
        # exactly deg(h) roots among the n-th roots of unity.
        assert total <= (n - h.degree) ** N, "count exceeds the nonzero-product total"
    if ambiguous:
        warnings.warn(f"{ambiguous} tuples ambiguous at precision cap {cap_prec}; counted")
    return total


def sign_count_tuples(h: IntPolynomial, n: int, N: int, *, multiset_cap: int = MULTISET_CAP,
                      start_prec: int = PRECISION_START, cap_prec: int = PRECISION_CAP) -> SignCount:
    """SignCount of the product-weighted Cayley spectrum over all n^N characters.

    Eigenvalue -2 + 2*Re(P) is nonnegative iff Re(P) >= 1, zero iff Re(P) = 1.
    """
    nonneg = nonpos = zero = ambiguous = 0
    for mults, weight, cls in _iter_multiplicities(h, n, N, multiset_cap, start_prec, cap_prec):
        if cls == "above":
            nonneg += weight
        elif cls == "equal":
            nonneg += weight
            nonpos += weight
            zero += weight
        elif cls in ("below", "zero-product"):
            nonpos += weight
        else:
            ambiguous += weight
    return SignCount(nonneg, nonpos, zero, ambiguous, n**N)


def _divides_circle(h: IntPolynomial, n: int) -> bool:
    """h | t^n - 1 over Z (unit factors allowed, so h = -g with g | t^n - 1 counts)."""
    if h.is_zero() or h.degree > n:
        return False
    circle = IntPolynomial.from_coeffs([-1] + [0] * (n - 1) + [1])
    return h.divides(circle)


# ---------------------------------------------------------------------------
# residue DP for the h = 1 - t pair bound


def _band_residues(n: int, N: int) -> set[int]:
    # Re >= 1 forces cos(pi*S/n - pi*N/2) strictly positive, i.e.
    # S strictly inside (nN/2 - n/2, nN/2 + n/2) mod 2n.
    lo2, hi2 = n * N - n, n * N + n
    s_min = lo2 // 2 + 1
    s_max = (hi2 - 1) // 2 if hi2 % 2 == 0 else hi2 // 2
    return {s % (2 * n) for s in range(s_min, s_max + 1)}


@dataclass(frozen=True)
class ResidueDPState:
    """Distribution of coordinate sums S mod 2n over v in {1..n-1}^N."""

    n: int
    N: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != 2 * self.n:
            raise ValueError(f"need 2n = {2 * self.n} residue counts, got {len(self.counts)}")
        total = sum(self.counts)
        if total != (self.n - 1) ** self.N:
            raise ValueError(f"residue counts sum to {total}, not (n-1)^N")

    @classmethod
    def compute(cls, n: int, N: int) -> "ResidueDPState":
        if n < 3:
            raise ValueError(f"need n >= 3, got {n}")
        if N < 1:
            raise ValueError(f"need N >= 1, got {N}")
        return cls(n, N, tuple(_dp_vector(n, N)))

    def band_total(self) -> int:
        return sum(self.counts[r] for r in _band_residues(self.n, self.N))


def residue_dp_count(n: int, N: int) -> int:
    """Exact count of v in {1..n-1}^N whose coordinate sum lies in the open
    cosine-positive band mod 2n.

    This dominates the h = 1 - t tuple count: tuples with a zero coordinate
    contribute a zero product, and Re >= 1 forces the cosine factor of the
    polar form strictly positive. The band has n residues when N is even and
    n odd, n - 1 otherwise.
    """
    return ResidueDPState.compute(n, N).band_total()


def _dp_vector(n: int, N: int) -> list[int]:
    m = 2 * n
    counts = [0] * m
    counts[0] = 1
    for _ in range(N):
        prev = counts
        counts = [0] * m
        for rho in range(m):
            s = 0
            for v in range(1, n):
                s += prev[rho - v]  # negative index wraps, same as mod m
            counts[rho] = s
    return counts


def residue_dp_profile(n: int, max_N: int) -> list[int]:
    """residue_dp_count(n, N) for N = 1..max_N from one incremental DP run."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    m = 2 * n
    counts = [0] * m
    counts[0] = 1
    out = []
    for N in range(1, max_N + 1):
        prev = counts
        counts = [0] * m
        for rho in range(m):
            s = 0
            for v in range(1, n):
                s += prev[rho - v]
            counts[rho] = s
        out.append(sum(counts[r] for r in _band_residues(n, N)))
    return out


# ---------------------------------------------------------------------------
# the counting upper bound


def _generator_of(G: GroupSpec, a_or_H) -> tuple[int, ...]:
    if isinstance(a_or_H, SubgroupInfo):
        if len(a_or_H.generators) != 1:
            raise ValueError("need a cyclic subgroup given by a single generator")
        return a_or_H.generators[0]
    return G.element(a_or_H)


def spectral_upper_bound(G: GroupSpec, a_or_H, J: Iterable[tuple[int, ...]], h: IntPolynomial,
                         N: int, *, multiset_cap: int = MULTISET_CAP) -> int:
    """Upper bound [G:H]^N * #{v : Re(prod h(e_n(v_j))) >= 1} for J inside H = <a>.

    When h divides t^n - 1 (n = |H|), the count is bounded by (n - deg h)^N
    without enumeration, giving (|G| - deg(h) * [G:H])^N. Support residues that
    are all self-inverse (2k = 0 mod n) are accepted through the divisor route
    only: the eigenvalue form is then -1 + prod, real, and the same root-count
    argument applies.
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    a = _generator_of(G, a_or_H)
    H = subgroup_generated(G, [a])
    n, index = H.order, H.index
    if n < 2:
        raise ValueError("generator must be nonzero")
    dlog = {}
    x = G.zero()
    for k in range(n):
        dlog[x] = k
        x = G.add(x, a)
    J_res = set()
    for j in J:
        j = G.element(j)
        if j not in dlog:
            raise ValueError(f"element {j} outside the cyclic subgroup of order {n}")
        J_res.add(dlog[j])
    if 0 not in J_res:
        raise ValueError("J must contain 0")
    supp = set(h.support())
    if h[0] != 1:
        raise ValueError(f"constant term of h must be 1, got {h[0]}")
    if not supp <= J_res:
        raise ValueError(f"support {sorted(supp)} not inside J residues {sorted(J_res)}")
    if is_admissible_support(J_res, n):
        if _divides_circle(h, n):
            return (index * (n - h.degree)) ** N
        return index**N * count_nonneg_tuples(h, n, N, multiset_cap=multiset_cap)
    if all((2 * k) % n == 0 for k in J_res):
        if _divides_circle(h, n):
            return (index * (n - h.degree)) ** N
        raise ValueError("self-inverse support needs h dividing t^n - 1")
    raise ValueError(f"J residues {sorted(J_res)} collide with their negation mod {n}")


# ---------------------------------------------------------------------------
# clique bounds


@dataclass(frozen=True)
class CliqueBound:
    """One clique-coclique bound with its generating data and optional witness."""

    kind: str  # "progression" or "symmetric"
    g: tuple[int, ...]
    m: int
    value: int
    witness: tuple | None


_WITNESS_CAP = 4096


def clique_bounds(G: GroupSpec, J: Iterable[tuple[int, ...]], N: int) -> list[CliqueBound]:
    """Upper bounds from arithmetic-progression cliques inside the Cayley graph.

    For g in J with {0, g, ..., mg} inside J and order(g) >= m + 1, a clique of
    size mN + 1 gives |G|^N / (mN + 1); if additionally -g, ..., -mg lie in J,
    the product clique {0, g, ..., mg}^N gives (|G| / (m + 1))^N. Values are
    floored to integers. Witnesses are emitted when they fit the size cap.
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    Jset = {G.element(j) for j in J}
    if G.zero() not in Jset:
        raise ValueError("J must contain 0")
    out: list[CliqueBound] = []
    for g in sorted(Jset):
        if g == G.zero():
            continue
        order = element_order(G, g)
        m = 0
        x = G.zero()
        while m + 1 <= order - 1:
            x = G.add(x, g)
            if x not in Jset:
                break
            m += 1
        if m >= 1:
            value = G.order**N // (m * N + 1)
            out.append(CliqueBound("progression", g, m, value, _progression_witness(G, g, m, N)))
        m_sym = 0
        x = G.zero()
        while m_sym + 1 <= order - 1:
            x = G.add(x, g)
            if x not in Jset or G.neg(x) not in Jset:
                break
            m_sym += 1
        if m_sym >= 1:
            value = G.order**N // (m_sym + 1) ** N
            out.append(CliqueBound("symmetric", g, m_sym, value,
                                   _symmetric_witness(G, g, m_sym, N)))
    return out


def _progression_witness(G: GroupSpec, g: tuple[int, ...], m: int, N: int) -> tuple | None:
    if m * N + 1 > _WITNESS_CAP:
        return None
    # prefixes (g..g, 0..0) with k leading copies, shifted by i*(g..g)
    steps = [tuple(g if j < k else G.zero() for j in range(N)) for k in range(1, N + 1)]
    diag = tuple(g for _ in range(N))
    clique = [tuple([G.zero()] * N)]
    shift = tuple([G.zero()] * N)
    for _ in range(m):
        for step in steps:
            clique.append(tuple(G.add(a, b) for a, b in zip(step, shift)))
        shift = tuple(G.add(a, b) for a, b in zip(shift, diag))
    return tuple(clique)


def _symmetric_witness(G: GroupSpec, g: tuple[int, ...], m: int, N: int) -> tuple | None:
    if (m + 1) ** N > _WITNESS_CAP:
        return None
    points = [G.zero()]
    x = G.zero()
    for _ in range(m):
        x = G.add(x, g)
        points.append(x)
    return tuple(itertools.product(points, repeat=N))
