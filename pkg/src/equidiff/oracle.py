"""Independent check on smooth cyclic covers of the projective line.

The curve ``y**e = prod (x - l_i)**d_i`` carries the action ``y -> zeta * y``
of ``Z/e``. Its differentials ``f(x) dx / y**j`` with ``f`` rational form one
eigenspace each; holomorphy at the points over ``l_i`` and over infinity
bounds the divisor of ``f`` from below, so the dimension is a Riemann-Roch
count ``max(0, deg E + 1)`` on the line. No ramification module or floor
divisor from :mod:`equidiff.eigendim` is used here.

Which character the ``j``-th space belongs to depends on how ``Z/e`` acts on
functions. ``"forward"`` places it at character ``-j``, ``"inverse"`` at ``j``;
:func:`calibrate` selects the one consistent with the eigenspace formulas.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Literal, Sequence, Tuple, Union

from .abgroup import AbelianGroup, characters_all
from .coverspec import CoverSpec
from .errors import EquidiffError
from .ramification import BranchPoint

__all__ = [
    "DIRECTIONS",
    "SuperellipticData",
    "CalibrationError",
    "oracle_dims",
    "superelliptic_genus",
    "to_cover_spec",
    "matching_directions",
    "calibrate",
    "CALIBRATION_BATTERY",
]

Direction = Literal["forward", "inverse"]
DIRECTIONS: Tuple[Direction, ...] = ("forward", "inverse")


class CalibrationError(EquidiffError):
    pass


@dataclass(frozen=True)
class SuperellipticData:
    e: int
    branch_exponents: Tuple[Tuple[str, int], ...]
    action_direction: Direction = "forward"

    def __post_init__(self):
        pairs = tuple((str(label), int(d)) for label, d in self.branch_exponents)
        object.__setattr__(self, "branch_exponents", pairs)
        if self.e < 2:
            raise ValueError(f"e must be >= 2, got {self.e}")
        labels = [label for label, _ in pairs]
        if len(set(labels)) != len(labels) or "inf" in labels:
            raise ValueError("branch labels must be distinct and must not be 'inf'")
        if any(not 1 <= d < self.e for _, d in pairs):
            raise ValueError(f"exponents must lie in [1, {self.e})")
        if math.gcd(self.e, *(d for _, d in pairs)) != 1:
            raise ValueError("gcd(e, d_1, ..., d_r) must be 1 for an irreducible curve")
        if self.action_direction not in DIRECTIONS:
            raise ValueError(f"unknown action direction {self.action_direction!r}")

    @classmethod
    def from_exponents(cls, e: int, exponents: Sequence[int],
                       action_direction: Direction = "forward") -> SuperellipticData:
        return cls(e, tuple((f"l{i}", d) for i, d in enumerate(exponents)),
                   action_direction)

    @property
    def exponent_sum(self) -> int:
        return sum(d for _, d in self.branch_exponents)

    def local_data(self) -> list[tuple[str, int, int]]:
        """``(label, e_P, exponent)`` for every point of the line, infinity last.

        The exponent at infinity is ``-sum(d_i)``, the order of ``y`` there.
        """
        pts = [(label, self.e // math.gcd(d, self.e), d) for label, d in self.branch_exponents]
        D = self.exponent_sum
        pts.append(("inf", self.e // math.gcd(D, self.e), -D))
        return pts


def superelliptic_genus(data: SuperellipticData) -> int:
    e = data.e
    twice = -2 * e + sum(e // ep * (ep - 1) for _, ep, _ in data.local_data())
    return twice // 2 + 1


def _eigenspace_dimension(data: SuperellipticData, j: int) -> int:
    """``dim`` of the holomorphic ``f(x) dx / y**j``."""
    e = data.e
    degree = 0
    for _, ep, d in data.local_data()[:-1]:
        # v_P(x - l) = ep, v_P(y) = d*ep/e, v_P(dx) = ep - 1:
        # ep*v(f) + ep - 1 - j*d*ep/e >= 0
        bound = math.ceil(Fraction(j * d, e) - 1 + Fraction(1, ep))
        degree -= bound
    _, e_inf, _ = data.local_data()[-1]
    D = data.exponent_sum
    # v_P(x) = -e_inf, v_P(y) = -D*e_inf/e, v_P(dx) = -e_inf - 1; with
    # v_P(f) = e_inf * v_inf(f):  e_inf*v_inf(f) - e_inf - 1 + j*D*e_inf/e >= 0
    bound_inf = math.ceil(1 + Fraction(1, e_inf) - Fraction(j * D, e))
    degree -= bound_inf
    return max(0, degree + 1)


def oracle_dims(data: SuperellipticData) -> dict[int, int]:
    """Eigenspace dimensions keyed by character index ``c`` in ``[0, e)``."""
    e = data.e
    out = {}
    for j in range(e):
        c = (-j) % e if data.action_direction == "forward" else j
        out[c] = _eigenspace_dimension(data, j)
    return dict(sorted(out.items()))


def to_cover_spec(data: SuperellipticData) -> CoverSpec:
    """The node-free one-component cover ``X -> P1`` with group ``Z/e``.

    The stabilizer over ``l_i`` is generated by ``g = c * sigma`` with
    ``c = gcd(d_i, e)``; ``g`` multiplies ``y`` by a primitive ``e_P``-th
    root of unity, and since ``y`` has order ``d_i / c`` at ``P`` it acts on
    a local parameter through the exponent ``(d_i / c)**-1 mod e_P``.
    """
    G = AbelianGroup((data.e,))
    branches = []
    for label, ep, dv in data.local_data():
        if ep == 1:
            continue
        c = data.e // ep
        reduced = dv // c
        branches.append(BranchPoint(label, (c,), ep, pow(reduced, -1, ep)))
    return CoverSpec(G, 0, 1, ((1,),), tuple(branches))


def _formula_dims(spec: CoverSpec) -> dict[int, int]:
    from .eigendim import dim_irreducible

    return {chi.coords[0]: dim_irreducible(spec, chi) for chi in characters_all(spec.group)}


def matching_directions(data: SuperellipticData) -> list[Direction]:
    """Directions under which the oracle agrees with the formula."""
    formula = _formula_dims(to_cover_spec(data))
    return [d for d in DIRECTIONS
            if oracle_dims(replace(data, action_direction=d)) == formula]


CALIBRATION_BATTERY: Tuple[SuperellipticData, ...] = (
    SuperellipticData.from_exponents(3, [1, 1, 1, 1]),
    SuperellipticData.from_exponents(3, [1, 2, 1]),
    SuperellipticData.from_exponents(5, [1, 2, 3, 1]),
    SuperellipticData.from_exponents(5, [2, 4, 1]),
)


def calibrate(battery: Union[SuperellipticData, Iterable[SuperellipticData], None] = None
              ) -> Direction:
    """The action direction matching the formula on every case of ``battery``.

    When several directions match (``e = 2``, where the two coincide) the
    first in :data:`DIRECTIONS` is returned.
    """
    if battery is None:
        battery = CALIBRATION_BATTERY
    elif isinstance(battery, SuperellipticData):
        battery = (battery,)
    candidates = list(DIRECTIONS)
    for data in battery:
        ok = matching_directions(data)
        candidates = [d for d in candidates if d in ok]
    if not candidates:
        raise CalibrationError("no action direction reproduces the formula")
    return candidates[0]
