"""Finite abelian groups as products of cyclic factors: elements, characters, subgroups.

Elements of a group with factor orders (n_1, ..., n_k) are int tuples of length k,
coordinate i reduced mod n_i. Characters are indexed the same way; the character
with index c sends g to e(sum_i c_i g_i / n_i), an exact root of unity.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "GroupSpec",
    "RootOfUnity",
    "SubgroupInfo",
    "element_order",
    "subgroup_generated",
    "character_value",
    "count_character_extensions",
    "parse_group",
    "parse_element",
    "parse_element_set",
    "format_element",
]

ENUMERATION_CAP = 1 << 20


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group given as Z_{n_1} x ... x Z_{n_k}, each n_i >= 2."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.orders:
            raise ValueError("group needs at least one cyclic factor")
        for n in self.orders:
            if not isinstance(n, int) or n < 2:
                raise ValueError(f"cyclic factor orders must be integers >= 2, got {n!r}")

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    def is_cyclic(self) -> bool:
        return math.lcm(*self.orders) == self.order

    def canonical(self) -> "GroupSpec":
        """Same group with factors sorted ascending (isomorphism-stable form)."""
        return GroupSpec(tuple(sorted(self.orders)))

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def element(self, coords) -> tuple[int, ...]:
        """Coerce and reduce coordinates mod the factor orders; bare int works for rank 1."""
        tup = (coords,) if isinstance(coords, int) else tuple(coords)
        if len(tup) != len(self.orders):
            raise ValueError(f"element {tup} has {len(tup)} coordinates, group has {len(self.orders)}")
        return tuple(c % n for c, n in zip(tup, self.orders))

    def add(self, u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((a + b) % n for a, b, n in zip(u, v, self.orders))

    def neg(self, u: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((-a) % n for a, n in zip(u, self.orders))

    def sub(self, u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((a - b) % n for a, b, n in zip(u, v, self.orders))

    def scale(self, k: int, u: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((k * a) % n for a, n in zip(u, self.orders))

    def elements(self):
        """All elements in mixed-radix order (last coordinate fastest)."""
        if self.order > ENUMERATION_CAP:
            raise ValueError(f"group order {self.order} exceeds enumeration cap {ENUMERATION_CAP}")
        return itertools.product(*[range(n) for n in self.orders])

    def __str__(self) -> str:
        return "x".join(str(n) for n in self.orders)


@dataclass(frozen=True)
class RootOfUnity:
    """The exact root of unity e(num/den) = exp(2*pi*i*num/den), reduced, 0 <= num < den."""

    num: int
    den: int

    @classmethod
    def from_fraction(cls, q: Fraction) -> "RootOfUnity":
        q = q - math.floor(q)
        return cls(q.numerator, q.denominator)

    @property
    def angle(self) -> Fraction:
        return Fraction(self.num, self.den)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity.from_fraction(-self.angle)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity.from_fraction(self.angle + other.angle)

    def is_one(self) -> bool:
        return self.num == 0

    def to_complex(self) -> complex:
        return complex(math.cos(2 * math.pi * self.num / self.den),
                       math.sin(2 * math.pi * self.num / self.den))


def element_order(G: GroupSpec, g: tuple[int, ...]) -> int:
    """Order of g: lcm over coordinates of n_i / gcd(g_i, n_i)."""
    g = G.element(g)
    return math.lcm(*[n // math.gcd(c, n) for c, n in zip(g, G.orders)])


@dataclass(frozen=True)
class SubgroupInfo:
    """Subgroup of G with order, index, generators, and a membership oracle.

    members is None on the gcd fallback path (single-factor cyclic G too large
    to enumerate); contains() works either way.
    """

    group: GroupSpec
    order: int
    index: int
    generators: tuple[tuple[int, ...], ...]
    members: frozenset | None

    def contains(self, g: tuple[int, ...]) -> bool:
        g = self.group.element(g)
        if self.members is not None:
            return g in self.members
        # gcd path: G = Z_n, subgroup = <d> with d = n / order
        n = self.group.orders[0]
        return g[0] % (n // self.order) == 0

    def sorted_members(self) -> list[tuple[int, ...]]:
        if self.members is None:
            raise ValueError("subgroup too large to enumerate")
        return sorted(self.members)


def subgroup_generated(G: GroupSpec, gens) -> SubgroupInfo:
    """Closure of a generator set under addition.

    Uses BFS closure when |G| fits the enumeration cap; for larger single-factor
    cyclic G it falls back to <gcd(gens, n)> without materializing members.
    """
    gen_tuple = tuple(G.element(g) for g in gens)
    if G.order <= ENUMERATION_CAP:
        seen = {G.zero()}
        frontier = [G.zero()]
        while frontier:
            u = frontier.pop()
            for g in gen_tuple:
                v = G.add(u, g)
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
        order = len(seen)
        return SubgroupInfo(G, order, G.order // order, gen_tuple, frozenset(seen))
    if G.rank != 1:
        raise ValueError(f"cannot enumerate subgroup of {G} (order {G.order} over cap)")
    n = G.orders[0]
    d = math.gcd(n, *[g[0] for g in gen_tuple]) if gen_tuple else n
    return SubgroupInfo(G, n // d, d, gen_tuple, None)


def character_value(G: GroupSpec, chi: tuple[int, ...], g: tuple[int, ...]) -> RootOfUnity:
    """chi(g) as an exact root of unity."""
    chi = G.element(chi)
    g = G.element(g)
    angle = sum((Fraction(c * x, n) for c, x, n in zip(chi, g, G.orders)), Fraction(0))
    return RootOfUnity.from_fraction(angle)


def count_character_extensions(G: GroupSpec, a: tuple[int, ...], x: int) -> int:
    """Number of characters chi of G with chi(a) = e(x / order(a)).

    Enumerates all |G| characters; the count always equals [G : <a>].
    """
    a = G.element(a)
    n = element_order(G, a)
    if not 0 <= x < n:
        raise ValueError(f"need 0 <= x < order(a) = {n}, got {x}")
    target = RootOfUnity.from_fraction(Fraction(x, n))
    if G.order > ENUMERATION_CAP:
        raise ValueError(f"character enumeration over cap for |G| = {G.order}")
    count = 0
    for chi in itertools.product(*[range(m) for m in G.orders]):
        if character_value(G, chi, a) == target:
            count += 1
    return count


def parse_group(text: str) -> GroupSpec:
    """Group literal: '12' for Z_12, '2x4' for Z_2 x Z_4."""
    parts = text.strip().lower().split("x")
    try:
        orders = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad group literal {text!r}; expected forms like '12' or '2x4'") from None
    return GroupSpec(orders)


def parse_element(G: GroupSpec, text: str) -> tuple[int, ...]:
    """Element literal: '7' (rank 1) or '1,3' (one coordinate per factor)."""
    try:
        coords = tuple(int(p) for p in text.strip().split(","))
    except ValueError:
        raise ValueError(f"bad element literal {text!r}") from None
    if len(coords) == 1 and G.rank > 1:
        raise ValueError(f"element {text!r} has 1 coordinate, group {G} needs {G.rank}")
    return G.element(coords)


def parse_element_set(G: GroupSpec, text: str) -> list[tuple[int, ...]]:
    """Semicolon-separated element literals, e.g. '0;1;6' or '0,0;1,0'."""
    items = [p for p in text.strip().split(";") if p != ""]
    if not items:
        raise ValueError("empty element set")
    seen: list[tuple[int, ...]] = []
    for item in items:
        e = parse_element(G, item)
        if e not in seen:
            seen.append(e)
    return seen


def format_element(g: tuple[int, ...]) -> str:
    return ",".join(str(c) for c in g)
