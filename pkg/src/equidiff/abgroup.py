"""Finite abelian groups ``Z/m1 x ... x Z/mk`` and their characters.

Elements and characters share one encoding, a tuple of residues. A character
``c`` evaluates on an element ``g`` as ``sum(c_i * g_i / m_i) mod 1``; the
value is a :class:`UnitExponent`, i.e. the root of unity ``exp(2 pi i q)``
recorded by its exponent ``q`` in ``[0, 1)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import CapacityError

__all__ = [
    "DEFAULT_MAX_ORDER",
    "UnitExponent",
    "AbelianGroup",
    "GroupElement",
    "Subgroup",
    "Character",
    "element_order",
    "subgroup_generate",
    "characters_all",
    "char_eval",
    "char_restrict_is_trivial",
]

DEFAULT_MAX_ORDER = 10_000

GroupElement = Tuple[int, ...]

HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class UnitExponent:
    """An element of Q/Z, stored as a reduced fraction in ``[0, 1)``."""

    value: Fraction

    def __init__(self, value: Fraction | int | str = 0):
        q = Fraction(value)
        object.__setattr__(self, "value", q - math.floor(q))

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __add__(self, other: UnitExponent) -> UnitExponent:
        if not isinstance(other, UnitExponent):
            return NotImplemented
        return UnitExponent(self.value + other.value)

    def __neg__(self) -> UnitExponent:
        return UnitExponent(-self.value)

    def __sub__(self, other: UnitExponent) -> UnitExponent:
        return self + (-other)

    def __mul__(self, k: int) -> UnitExponent:
        return UnitExponent(self.value * k)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.value == 0

    def is_minus_one(self) -> bool:
        """True when the root of unity is -1."""
        return self.value == HALF

    def __repr__(self) -> str:
        return f"UnitExponent({self.value})"

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z/m1 x ... x Z/mk`` with an enumeration bound on its order."""

    invariants: Tuple[int, ...]
    max_order: int = field(default=DEFAULT_MAX_ORDER, compare=False)

    def __post_init__(self):
        inv = tuple(int(m) for m in self.invariants)
        object.__setattr__(self, "invariants", inv)
        if any(m < 1 for m in inv):
            raise ValueError(f"invariants must be >= 1, got {inv}")
        if self.order > self.max_order:
            raise CapacityError(
                f"group order {self.order} exceeds the bound {self.max_order}"
            )

    @property
    def rank(self) -> int:
        return len(self.invariants)

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.rank

    def element(self, coords: Iterable[int]) -> GroupElement:
        """Reduce ``coords`` into canonical form, checking the arity."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise ValueError(
                f"expected {self.rank} coordinates for {self}, got {len(coords)}"
            )
        return tuple(c % m for c, m in zip(coords, self.invariants))

    def contains(self, g: Sequence[int]) -> bool:
        return len(g) == self.rank and all(
            0 <= c < m for c, m in zip(g, self.invariants)
        )

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.invariants))

    def neg(self, g: GroupElement) -> GroupElement:
        return tuple(-a % m for a, m in zip(g, self.invariants))

    def sub(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return self.add(g, self.neg(h))

    def mul(self, k: int, g: GroupElement) -> GroupElement:
        return tuple(k * a % m for a, m in zip(g, self.invariants))

    def total(self, elements: Iterable[GroupElement]) -> GroupElement:
        acc = self.identity
        for g in elements:
            acc = self.add(acc, g)
        return acc

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic order."""
        return itertools.product(*(range(m) for m in self.invariants))

    def characters(self) -> list[Character]:
        return characters_all(self)

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, tuple(self.elements()))

    @cached_property
    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, (self.identity,))

    def __str__(self) -> str:
        if not self.invariants:
            return "1"
        return " x ".join(f"Z/{m}" for m in self.invariants)


def element_order(G: AbelianGroup, g: GroupElement) -> int:
    """Least ``e >= 1`` with ``e * g = 0``."""
    e = 1
    for c, m in zip(g, G.invariants):
        e = math.lcm(e, m // math.gcd(c, m))
    return e


@dataclass(frozen=True)
class Subgroup:
    """A subgroup held as its full, sorted element list."""

    parent: AbelianGroup
    elements: Tuple[GroupElement, ...]

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, g) -> bool:
        return tuple(g) in self._members

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def issubset(self, other: Subgroup) -> bool:
        return self._members <= other._members

    def coset(self, g: GroupElement) -> list[GroupElement]:
        return [self.parent.add(g, h) for h in self.elements]

    def join(self, gens: Iterable[GroupElement]) -> Subgroup:
        """Subgroup generated by this one together with ``gens``."""
        return subgroup_generate(self.parent, [*self.elements, *gens])

    def multiple(self, k: int) -> Subgroup:
        """The image ``k * H``."""
        return subgroup_generate(self.parent, [self.parent.mul(k, h) for h in self])

    def rank(self) -> int:
        """Minimal number of generators of this subgroup."""
        return quotient_rank(self, self.parent.trivial_subgroup)


def subgroup_generate(G: AbelianGroup, gens: Iterable[GroupElement]) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``gens``."""
    if G.order > G.max_order:
        raise CapacityError(f"group order {G.order} exceeds the bound {G.max_order}")
    members = {G.identity}
    for g in gens:
        g = G.element(g)
        if g in members:
            continue
        # members is a subgroup; adjoin the cyclic group generated by g
        step = []
        x = g
        while x not in members:
            step.append(x)
            x = G.add(x, g)
        members = {G.add(a, b) for a in members for b in [G.identity, *step]}
    return Subgroup(G, tuple(sorted(members)))


def quotient_rank(H: Subgroup, K: Subgroup) -> int:
    """Minimal number of generators of ``H / K`` (``K <= H``).

    For a finite abelian group ``A`` this is ``max_p dim_Fp(A / pA)``, with
    ``|A / pA| = |H| / |pH + K|``.
    """
    order = len(H) // len(K)
    best = 0
    for p in _prime_factors(order):
        pH_plus_K = K.join(H.multiple(p).elements)
        quotient = len(H) // len(pH_plus_K)
        r = 0
        while quotient > 1:
            quotient //= p
            r += 1
        best = max(best, r)
    return best


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class Character:
    """A 1-dimensional character of ``group``, encoded by residues."""

    group: AbelianGroup
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", self.group.element(self.coords))

    def __call__(self, g: GroupElement) -> UnitExponent:
        return char_eval(self, g)

    def is_trivial(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


def characters_all(G: AbelianGroup) -> list[Character]:
    """The dual group, lexicographic; the trivial character comes first."""
    return [Character(G, c) for c in G.elements()]


def char_eval(chi: Character, g: Sequence[int]) -> UnitExponent:
    G = chi.group
    if len(g) != G.rank:
        raise ValueError(
            f"element {tuple(g)} has {len(g)} coordinates, character expects {G.rank}"
        )
    return UnitExponent(
        sum((Fraction(c * x, m) for c, x, m in zip(chi.coords, g, G.invariants)),
            Fraction(0))
    )


def char_restrict_is_trivial(chi: Character, H: Subgroup) -> bool:
    return all(char_eval(chi, h).is_zero() for h in H)
