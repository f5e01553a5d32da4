"""Divisors with rational coefficients on the quotient curve.

Points are opaque string labels. Zero coefficients are dropped on
construction so that equal divisors have equal support.
"""
from __future__ import annotations

import math
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping, Union

__all__ = ["RationalDivisor", "floor_div", "deg", "add", "scale"]

Number = Union[int, Fraction]


class RationalDivisor(Mapping[str, Fraction]):
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[str, Number] | None = None):
        clean = {}
        for label, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                clean[str(label)] = c
        self._coeffs = MappingProxyType(dict(sorted(clean.items())))

    def __getitem__(self, label: str) -> Fraction:
        return self._coeffs[label]

    def __iter__(self) -> Iterator[str]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def coefficient(self, label: str) -> Fraction:
        return self._coeffs.get(label, Fraction(0))

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(self._coeffs)

    def degree(self) -> Fraction:
        return sum(self._coeffs.values(), Fraction(0))

    def floor(self) -> RationalDivisor:
        return RationalDivisor({p: math.floor(c) for p, c in self._coeffs.items()})

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    def __add__(self, other: RationalDivisor) -> RationalDivisor:
        if not isinstance(other, RationalDivisor):
            return NotImplemented
        out = dict(self._coeffs)
        for p, c in other.items():
            out[p] = out.get(p, 0) + c
        return RationalDivisor(out)

    def __neg__(self) -> RationalDivisor:
        return self * -1

    def __sub__(self, other: RationalDivisor) -> RationalDivisor:
        return self + (-other)

    def __mul__(self, r: Number) -> RationalDivisor:
        r = Fraction(r)
        return RationalDivisor({p: r * c for p, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalDivisor):
            return dict(self._coeffs) == dict(other._coeffs)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "RationalDivisor({})"
        body = ", ".join(f"{p!r}: {c}" for p, c in self._coeffs.items())
        return f"RationalDivisor({{{body}}})"


def floor_div(D: RationalDivisor) -> RationalDivisor:
    return D.floor()


def deg(D: RationalDivisor) -> Fraction:
    return D.degree()


def add(D1: RationalDivisor, D2: RationalDivisor) -> RationalDivisor:
    return D1 + D2


def scale(r: Number, D: RationalDivisor) -> RationalDivisor:
    return D * r
