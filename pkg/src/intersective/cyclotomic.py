"""Integer polynomials and cyclotomic arithmetic, exact throughout.

Polynomials are dense tuples of int coefficients, low degree first, with no
trailing zeros. All division here is exact division over Z; a failed exact
division raises rather than rounding.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .numtheory import divisors, euler_phi, factorize, radical

__all__ = [
    "IntPolynomial",
    "NonExactDivision",
    "cyclotomic",
    "inverse_cyclotomic",
    "lam_leung",
    "support_and_gaps",
    "is_admissible_support",
    "CyclotomicStats",
    "cyclotomic_stats",
]

# Dense storage only; degrees beyond this are refused rather than silently slow.
DENSE_DEGREE_LIMIT = 2_000_000


class NonExactDivision(ArithmeticError):
    """Raised when polynomial division over Z leaves a remainder."""


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[k] is the coefficient of t^k."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.coeffs
        if c and c[-1] == 0:
            last = len(c) - 1
            while last >= 0 and c[last] == 0:
                last -= 1
            c = c[:last + 1]
            object.__setattr__(self, "coeffs", c)
        if len(c) > DENSE_DEGREE_LIMIT:
            raise ValueError(f"degree {len(c) - 1} exceeds dense storage limit {DENSE_DEGREE_LIMIT}")

    @classmethod
    def from_coeffs(cls, coeffs) -> "IntPolynomial":
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        if k < 0:
            raise ValueError(f"monomial exponent must be >= 0, got {k}")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial (its distinct marker)."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.coeffs) if c != 0)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPolynomial(tuple(out))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial.zero()
        # sparse factors stay cheap: cost is nnz(a) * nnz(b), not len * len
        bnz = [(j, cb) for j, cb in enumerate(b) if cb]
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in bnz:
                    out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(tuple(k * c for c in self.coeffs))

    def substitute_power(self, k: int) -> "IntPolynomial":
        """t -> t^k."""
        if k < 1:
            raise ValueError(f"substitution power must be >= 1, got {k}")
        if not self.coeffs:
            return IntPolynomial.zero()
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPolynomial(tuple(out))

    def substitute_neg(self) -> "IntPolynomial":
        """t -> -t."""
        return IntPolynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def exact_divide(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient over Z; raises NonExactDivision on any remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return IntPolynomial.zero()
        if self.degree < divisor.degree:
            raise NonExactDivision(f"degree {self.degree} < divisor degree {divisor.degree}")
        rem = list(self.coeffs)
        d = divisor.coeffs
        lead = d[-1]
        qlen = len(rem) - len(d) + 1
        q = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            head = rem[k + len(d) - 1]
            if head % lead != 0:
                raise NonExactDivision(f"leading coefficient {lead} does not divide {head}")
            f = head // lead
            q[k] = f
            if f:
                for j, dc in enumerate(d):
                    rem[k + j] -= f * dc
        if any(rem):
            raise NonExactDivision("nonzero remainder")
        return IntPolynomial(tuple(q))

    def divides(self, other: "IntPolynomial") -> bool:
        try:
            other.exact_divide(self)
            return True
        except NonExactDivision:
            return False

    def evaluate(self, x):
        """Horner evaluation; works for int, Fraction, complex."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                term = f"{mag}t" if k == 1 else f"{mag}t^{k}"
                parts.append(term if c > 0 else "-" + term)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _t_power_minus_one(n: int) -> IntPolynomial:
    return IntPolynomial((-1,) + (0,) * (n - 1) + (1,))


@functools.lru_cache(maxsize=2048)
def _cyclotomic_squarefree(n: int) -> IntPolynomial:
    """Phi_n for squarefree n, by division of t^n - 1 by the proper-divisor factors."""
    if n == 1:
        return IntPolynomial((-1, 1))
    if n % 2 == 0 and n > 2:
        # Phi_2m(t) = Phi_m(-t) for odd m > 1
        return _cyclotomic_squarefree(n // 2).substitute_neg()
    facs = factorize(n)
    if len(facs) == 1:
        return IntPolynomial((1,) * n)  # prime n
    poly = _t_power_minus_one(n)
    for d in divisors(n):
        if d != n:
            poly = poly.exact_divide(_cyclotomic_squarefree(d))
    return poly


def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial Phi_n, degree phi(n).

    Reduces to the squarefree radical first: Phi_n(t) = Phi_rad(n)(t^{n/rad(n)}).
    """
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    r = radical(n)
    base = _cyclotomic_squarefree(r)
    return base if r == n else base.substitute_power(n // r)


def inverse_cyclotomic(n: int) -> IntPolynomial:
    """(t^n - 1) / Phi_n, the product of Phi_d over proper divisors d of n."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return _t_power_minus_one(n).exact_divide(cyclotomic(n))


def lam_leung(p: int, q: int) -> IntPolynomial:
    """Phi_pq for distinct primes p < q via the closed +-1 coefficient form.

    With pb = p^{-1} mod q and qb = q^{-1} mod p: coefficient +1 at exponents
    p*x + q*y for 0 <= x < pb, 0 <= y < qb; coefficient -1 at p*x + q*y - pq
    for pb <= x < q, qb <= y < p. Nonzero count is 2*pb*qb - 1.
    """
    from .numtheory import is_prime

    if not (is_prime(p) and is_prime(q)):
        raise ValueError(f"need primes, got {p}, {q}")
    if not p < q:
        raise ValueError(f"need p < q, got p={p}, q={q}")
    pb = pow(p, -1, q)
    qb = pow(q, -1, p)
    out = [0] * ((p - 1) * (q - 1) + 1)
    for x in range(pb):
        for y in range(qb):
            out[p * x + q * y] += 1
    for x in range(pb, q):
        for y in range(qb, p):
            out[p * x + q * y - p * q] -= 1
    return IntPolynomial(tuple(out))


def support_and_gaps(h: IntPolynomial) -> tuple[tuple[int, ...], int]:
    """(support exponents, max gap between consecutive support exponents)."""
    supp = h.support()
    gap = max((b - a for a, b in zip(supp, supp[1:])), default=0)
    return supp, gap


def is_admissible_support(J, n: int) -> bool:
    """True iff 0 in J, J inside [0, n), and J and -J share only 0 mod n."""
    Jset = set(J)
    if 0 not in Jset:
        return False
    if any(not 0 <= j < n for j in Jset):
        return False
    return all((-j) % n not in Jset for j in Jset if j != 0)


@dataclass(frozen=True)
class CyclotomicStats:
    n: int
    phi: int
    radical: int
    nonzero_count: int
    max_gap: int
    height: int


def cyclotomic_stats(n: int) -> CyclotomicStats:
    h = cyclotomic(n)
    supp, gap = support_and_gaps(h)
    return CyclotomicStats(
        n=n,
        phi=euler_phi(n),
        radical=radical(n),
        nonzero_count=len(supp),
        max_gap=gap,
        height=max(abs(c) for c in h.coeffs),
    )
