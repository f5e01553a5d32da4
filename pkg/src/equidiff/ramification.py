"""Branch data of a tame abelian cover and its ramification-module pairings.

A branch point ``Q`` of the cover is recorded through one point ``P`` above
it: a generator ``g`` of the cyclic stabilizer ``G_P`` and the exponent ``t``
with ``theta_P(g) = t / e``, where ``theta_P`` is the character by which
``G_P`` acts on the cotangent line at ``P``.

The pairing ``<chi, R_{G,Q}>`` of a character with the ramification module
of ``Q`` is the integer ``(n / e) * a`` where ``chi|G_P = theta_P ** a`` and
``0 <= a < e``.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .abgroup import (
    AbelianGroup,
    Character,
    GroupElement,
    Subgroup,
    char_eval,
    characters_all,
    element_order,
    subgroup_generate,
)
from .errors import CapacityError, SpecInconsistency

__all__ = [
    "BranchPoint",
    "pairing_a",
    "pairing_RGQ",
    "pairing_bruteforce",
    "admissibility_check",
    "first_inadmissible_character",
    "local_monodromy",
]

BRUTEFORCE_MAX_ORDER = 64


@dataclass(frozen=True)
class BranchPoint:
    label: str
    stab_gen: GroupElement
    e: int
    theta_exp: int

    @classmethod
    def from_generator(cls, G: AbelianGroup, label: str, stab_gen: Sequence[int],
                       theta_exp: int) -> BranchPoint:
        """Build a branch point, reading ``e`` off the order of ``stab_gen``."""
        g = G.element(stab_gen)
        return cls(label, g, element_order(G, g), int(theta_exp))


def pairing_a(chi: Character, b: BranchPoint) -> int:
    """Exponent ``a`` in ``[0, e)`` with ``chi|G_P = theta_P ** a``."""
    value = char_eval(chi, b.stab_gen).value
    if b.e % value.denominator:
        raise SpecInconsistency(
            f"branch {b.label}: chi(g) = {value} does not have order dividing e = {b.e}"
        )
    s = value.numerator * (b.e // value.denominator)
    if b.e == 1:
        return 0
    try:
        t_inv = pow(b.theta_exp, -1, b.e)
    except ValueError:
        raise SpecInconsistency(
            f"branch {b.label}: theta exponent {b.theta_exp} is not a unit mod {b.e}"
        ) from None
    return t_inv * s % b.e


def pairing_RGQ(chi: Character, b: BranchPoint, n1: int) -> int:
    """``<chi, R_{G1,Q}>`` for a cover of degree ``n1``."""
    if n1 % b.e:
        raise SpecInconsistency(
            f"branch {b.label}: ramification index {b.e} does not divide {n1}"
        )
    return n1 // b.e * pairing_a(chi, b)


def pairing_bruteforce(chi: Character, b: BranchPoint, G1: Subgroup) -> int:
    """``<chi, R_{G1,Q}>`` from the induced character, summed over ``G1``.

    Computes ``psi = sum_d d * theta**d`` on ``G_P``, induces it to ``G1``
    with the coset-sum formula, takes the character inner product with
    ``chi`` over all of ``G1`` and multiplies by the fiber size
    ``|G1| / e``. Floating point sums are rounded and checked to be integral.
    Meant for test-scale groups only.
    """
    if len(G1) > BRUTEFORCE_MAX_ORDER:
        raise CapacityError(
            f"brute-force pairing is limited to |G1| <= {BRUTEFORCE_MAX_ORDER}"
        )
    G = G1.parent
    GP = subgroup_generate(G, [b.stab_gen])
    e = len(GP)
    # theta on G_P: theta(k*g) = k*t/e
    theta = {}
    x = G.identity
    for k in range(e):
        theta[x] = Fraction(k * b.theta_exp, e)
        x = G.add(x, b.stab_gen)

    def root(q: Fraction) -> complex:
        return cmath.exp(2j * cmath.pi * float(q))

    psi = {h: sum(d * root(d * theta[h]) for d in range(e)) for h in theta}

    def induced(g: GroupElement) -> complex:
        total = 0j
        for x in G1:
            conj = G.sub(G.add(x, g), x)
            if conj in psi:
                total += psi[conj]
        return total / e

    inner = sum(
        root(char_eval(chi, g).value) * induced(g).conjugate() for g in G1
    ) / len(G1)
    value = round(inner.real)
    if abs(inner - value) > 1e-6:
        raise SpecInconsistency(f"non-integral pairing {inner} at branch {b.label}")
    return value * (len(G1) // e)


def local_monodromy(G: AbelianGroup, b: BranchPoint) -> GroupElement:
    """The stabilizer element acting on the cotangent line by ``exp(2 pi i / e)``."""
    return G.mul(pow(b.theta_exp, -1, b.e) if b.e > 1 else 0, b.stab_gen)


def first_inadmissible_character(branches: Iterable[BranchPoint], G1: Subgroup,
                                 n1: int) -> Optional[Character]:
    branches = list(branches)
    for chi in characters_all(G1.parent):
        if sum(pairing_RGQ(chi, b, n1) for b in branches) % n1:
            return chi
    return None


def admissibility_check(branches: Iterable[BranchPoint], G1: Subgroup, n1: int) -> bool:
    """Whether ``sum_Q <chi, R_{G1,Q}> = 0 (mod n1)`` for every character.

    Characters of ``G1`` are enumerated as restrictions of characters of the
    ambient group, which reach every character of ``G1``.
    """
    return first_inadmissible_character(branches, G1, n1) is None

