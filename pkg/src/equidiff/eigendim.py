"""Multiplicities of characters in the holomorphic differentials of a nodal curve.

For a character ``chi`` of ``G`` with restriction ``chi1`` to ``G1``::

    dim H0(X, omega_X)_chi = g_Y - 1 + m + delta

where ``m`` is the degree of the floor divisor attached to the set of node
preimages at which a ``chi``-eigendifferential may have a pole, and ``delta``
is 1 exactly when ``chi1`` is trivial and no component intersection is
selected. With one component this reduces to ``g_Y - 1 + m + <chi, 1>``.

``m`` is computed along two independent routes, :func:`m_chi_closed` and
:func:`m_chi_divisor`; callers that want a cross-check run both.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .abgroup import Character, char_eval, char_restrict_is_trivial
from .coverspec import CoverSpec
from .divisor import RationalDivisor
from .errors import SpecInconsistency
from .ramification import pairing_a, pairing_RGQ

__all__ = [
    "ChiSetResult",
    "singular_chi_set",
    "intersection_chi_set",
    "chi_sets",
    "m_chi_closed",
    "m_chi_divisor",
    "delta_chi",
    "dim_irreducible",
    "dim_connected",
    "dims_table",
]


@dataclass(frozen=True)
class ChiSetResult:
    selected_nodes: Tuple[str, ...]
    selected_intersections: Tuple[str, ...]

    @property
    def s(self) -> int:
        # one orbit per quotient point, so orbits and their images correspond
        return len(self.selected_nodes) + len(self.selected_intersections)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.selected_nodes + self.selected_intersections


def _swaps_to_minus_one(spec: CoverSpec, chi: Character, orbit) -> bool:
    # exists tau in swap + H with chi(tau) = -1
    H = spec.orbit_stabilizer(orbit)
    return any(char_eval(chi, tau).is_minus_one() for tau in H.coset(orbit.swap))


def singular_chi_set(spec: CoverSpec, chi: Character) -> list[str]:
    return [o.label for o in spec.nodes if _swaps_to_minus_one(spec, chi, o)]


def intersection_chi_set(spec: CoverSpec, chi: Character) -> list[str]:
    return [o.label for o in spec.intersections if _swaps_to_minus_one(spec, chi, o)]


def chi_sets(spec: CoverSpec, chi: Character) -> ChiSetResult:
    return ChiSetResult(tuple(singular_chi_set(spec, chi)),
                        tuple(intersection_chi_set(spec, chi)))


def _selected_points(spec: CoverSpec, S: ChiSetResult) -> set[str]:
    chosen = set(S.labels)
    return {o.quotient_point for o in spec.orbits() if o.label in chosen}


def m_chi_closed(spec: CoverSpec, chi: Character, S: ChiSetResult) -> int:
    """``m_chi(S)`` in closed form.

    Since ``0 <= a_Q < e_Q`` the floor ``floor((e_Q - 1)/e_Q + a_Q/e_Q)`` is
    just the indicator of ``a_Q != 0``.
    """
    under = _selected_points(spec, S)
    m = Fraction(S.s)
    for b in spec.branches:
        a = pairing_a(chi, b)
        if b.label not in under and a:
            m += 1
        m -= Fraction(a, b.e)
    if m.denominator != 1:
        raise SpecInconsistency(f"m_chi = {m} is not an integer; branch data not admissible")
    return int(m)


def m_chi_divisor(spec: CoverSpec, chi: Character, S: ChiSetResult) -> int:
    """``m_chi(S)`` as ``deg floor(S/n1 + B/n1 + R/n1) - deg(B/n1)``.

    Every term is the push-forward to ``Y`` divided by ``n1``: a selected orbit
    fills the fiber over its point (``n1/e`` points), the ramification divisor
    contributes ``(n1/e)(e - 1)`` and ``B`` carries ``<chi, R_{G1,Q}>``.
    """
    n1 = spec.n1
    selected = RationalDivisor({
        p: Fraction(1, spec.ramification_index(p)) for p in _selected_points(spec, S)
    })
    b_div = RationalDivisor({
        b.label: Fraction(pairing_RGQ(chi, b, n1), n1) for b in spec.branches
    })
    ram = RationalDivisor({b.label: Fraction(b.e - 1, b.e) for b in spec.branches})
    m = (selected + b_div + ram).floor().degree() - b_div.degree()
    if m.denominator != 1:
        raise SpecInconsistency(f"deg D_chi = {m} is not an integer")
    return int(m)


def delta_chi(spec: CoverSpec, chi: Character) -> int:
    if intersection_chi_set(spec, chi):
        return 0
    return int(char_restrict_is_trivial(chi, spec.G1))


def dim_irreducible(spec: CoverSpec, chi: Character) -> int:
    if spec.component_count != 1:
        raise ValueError(
            f"dim_irreducible needs one component, spec has {spec.component_count}"
        )
    S = chi_sets(spec, chi)
    return spec.genus_y - 1 + m_chi_closed(spec, chi, S) + int(chi.is_trivial())


def dim_connected(spec: CoverSpec, chi: Character) -> int:
    S = chi_sets(spec, chi)
    return spec.genus_y - 1 + m_chi_closed(spec, chi, S) + delta_chi(spec, chi)


def dims_table(spec: CoverSpec) -> list[tuple[Character, int]]:
    """``(chi, dim)`` for every character, in enumeration order."""
    return [(chi, dim_connected(spec, chi)) for chi in spec.group.characters()]
