"""Combinatorial description of a G-cover ``X -> Y`` of a nodal curve.

``X`` has ``d`` irreducible components permuted transitively by ``G``; ``G1``
is the stabilizer of a distinguished component ``X1`` and all branch and node
data is recorded on the normalization of ``X1`` as a ``G1``-cover of the
smooth quotient ``Y``. Each orbit of nodes sits over a single point of ``Y``,
either a branch point (referenced by label) or an unramified point (the tag
``"smooth"``; the orbit's own label then names the quotient point).
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

from .abgroup import (
    AbelianGroup,
    GroupElement,
    Subgroup,
    element_order,
    quotient_rank,
    subgroup_generate,
)
from .errors import SpecInconsistency
from .ramification import BranchPoint, first_inadmissible_character, local_monodromy

__all__ = [
    "SMOOTH",
    "NodeOrbit",
    "IntersectionOrbit",
    "CoverSpec",
    "Violation",
    "validate",
    "genus_normalization",
    "node_count_total",
    "arithmetic_genus",
]

SMOOTH = "smooth"


@dataclass(frozen=True)
class _SwapOrbit:
    label: str
    quotient: str
    branch_stabilizer: Tuple[GroupElement, ...]
    swap: GroupElement

    @property
    def quotient_point(self) -> str:
        return self.label if self.quotient == SMOOTH else self.quotient

    @property
    def over_branch_point(self) -> bool:
        return self.quotient != SMOOTH


@dataclass(frozen=True)
class NodeOrbit(_SwapOrbit):
    """A ``G1``-orbit of nodes of ``X1``; ``swap`` exchanges the two branches."""

    @property
    def h0_gens(self) -> Tuple[GroupElement, ...]:
        return self.branch_stabilizer


@dataclass(frozen=True)
class IntersectionOrbit(_SwapOrbit):
    """A ``G``-orbit of points where two components meet; ``swap`` lies outside ``G1``."""

    @property
    def h1_gens(self) -> Tuple[GroupElement, ...]:
        return self.branch_stabilizer


@dataclass(frozen=True)
class Violation:
    code: str
    label: str
    message: str

    def __str__(self) -> str:
        return f"{self.code} [{self.label}] {self.message}"


@dataclass(frozen=True)
class CoverSpec:
    group: AbelianGroup
    genus_y: int
    component_count: int = 1
    stab_gens: Tuple[GroupElement, ...] = ()
    branches: Tuple[BranchPoint, ...] = ()
    nodes: Tuple[NodeOrbit, ...] = ()
    intersections: Tuple[IntersectionOrbit, ...] = ()

    def __post_init__(self):
        for name in ("stab_gens", "branches", "nodes", "intersections"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    @property
    def n(self) -> int:
        return self.group.order

    @cached_property
    def G1(self) -> Subgroup:
        return subgroup_generate(self.group, self.stab_gens)

    @property
    def n1(self) -> int:
        return len(self.G1)

    @cached_property
    def branch_by_label(self) -> dict[str, BranchPoint]:
        return {b.label: b for b in self.branches}

    def orbits(self) -> Tuple[_SwapOrbit, ...]:
        return self.nodes + self.intersections

    @cached_property
    def _orbit_stabilizers(self) -> dict:
        return {}

    def orbit_stabilizer(self, orbit: _SwapOrbit) -> Subgroup:
        """``H0`` (node) or ``H1`` (intersection) as an enumerated subgroup."""
        cache = self._orbit_stabilizers
        key = orbit.branch_stabilizer
        if key not in cache:
            cache[key] = subgroup_generate(self.group, key)
        return cache[key]

    def ramification_index(self, quotient_point: str) -> int:
        b = self.branch_by_label.get(quotient_point)
        return b.e if b is not None else 1


def validate(spec: CoverSpec) -> list[Violation]:
    """All violations of the cover invariants, sorted; empty iff valid."""
    out: list[Violation] = []
    G = spec.group

    def report(code, label, message):
        out.append(Violation(code, label, message))

    if spec.genus_y < 0:
        report("quotient-genus", "quotient", f"genus {spec.genus_y} is negative")
    if spec.component_count < 1:
        report("component-count", "components", f"count {spec.component_count} < 1")

    labels = Counter([b.label for b in spec.branches]
                     + [o.label for o in spec.orbits()])
    for label, k in sorted(labels.items()):
        if k > 1:
            report("duplicate-label", label, f"label used {k} times")

    # element well-formedness gates every later check that touches the element
    def ok(g, label, what) -> bool:
        if G.contains(tuple(g)):
            return True
        report("bad-element", label, f"{what} {_fmt(g)} is not an element of {G}")
        return False

    if not all(ok(g, "components", "stabilizer generator") for g in spec.stab_gens):
        return sorted(out, key=_key)
    G1 = spec.G1
    n1 = len(G1)
    if spec.component_count >= 1 and n1 * spec.component_count != G.order:
        report("stabilizer-index", "components",
               f"|G1| = {n1} but |G| / d = {G.order}/{spec.component_count}")

    good_branches = []
    for b in spec.branches:
        if not ok(b.stab_gen, b.label, "generator"):
            continue
        problems = len(out)
        if b.stab_gen not in G1:
            report("branch-outside-stabilizer", b.label,
                   f"generator {_fmt(b.stab_gen)} is not in G1")
        order = element_order(G, b.stab_gen)
        if b.e != order:
            report("branch-order", b.label, f"e = {b.e} but the generator has order {order}")
        if order < 2:
            report("branch-unramified", b.label, "stabilizer generator is the identity")
        elif not (0 <= b.theta_exp < order and math.gcd(b.theta_exp, order) == 1):
            report("theta-not-faithful", b.label,
                   f"theta = {b.theta_exp} is not a unit mod {order}")
        if len(out) == problems:
            good_branches.append(b)

    for o in spec.nodes:
        _check_orbit(spec, o, report, ok, internal=True)
    for o in spec.intersections:
        _check_orbit(spec, o, report, ok, internal=False)

    fibers = Counter(o.quotient_point for o in spec.orbits())
    for point, k in sorted(fibers.items()):
        if k > 1:
            report("fiber-capacity", point, f"{k} orbits share one quotient point")

    if spec.component_count > 1 and all(G.contains(o.swap) for o in spec.intersections):
        span = G1.join(o.swap for o in spec.intersections)
        if len(span) != G.order:
            report("disconnected", "components",
                   f"G1 and the intersection swaps generate a subgroup of order "
                   f"{len(span)} < {G.order}")

    if len(good_branches) == len(spec.branches) and not any(
            v.code == "duplicate-label" for v in out):
        chi = first_inadmissible_character(spec.branches, G1, n1)
        if chi is not None:
            report("admissibility", "branches",
                   f"pairings with character ({chi}) do not sum to 0 mod {n1}")
        elif spec.genus_y >= 0:
            inertia = subgroup_generate(G, [local_monodromy(G, b) for b in spec.branches])
            need = quotient_rank(G1, inertia)
            if need > 2 * spec.genus_y:
                report("disconnected-normalization", "branches",
                       f"G1 modulo inertia needs {need} generators, "
                       f"the quotient genus allows {2 * spec.genus_y}")
            twice = _twice_euler(spec)
            if twice % 2 or twice < -2:
                report("riemann-hurwitz", "branches",
                       f"2g - 2 = {twice} is not an even integer >= -2")
    return sorted(out, key=_key)


def _fmt(g) -> str:
    return "(" + ",".join(str(c) for c in g) + ")"


def _key(v: Violation):
    return (v.code, v.label, v.message)


def _check_orbit(spec, o, report, ok, *, internal: bool) -> None:
    G = spec.group
    G1 = spec.G1
    kind = "node" if internal else "intersection"
    if not (ok(o.swap, o.label, "swap")
            and all(ok(h, o.label, "branch stabilizer generator")
                    for h in o.branch_stabilizer)):
        return
    H = spec.orbit_stabilizer(o)
    if not H.issubset(G1):
        report(f"{kind}-outside-stabilizer", o.label,
               "branch stabilizer is not contained in G1")
    if internal and o.swap not in G1:
        report("node-outside-stabilizer", o.label, f"swap {_fmt(o.swap)} is not in G1")
    if not internal and o.swap in G1:
        report("swap-inside-stabilizer", o.label,
               f"swap {_fmt(o.swap)} lies in G1 and cannot exchange components")
    if o.swap in H:
        report("swap-fixes-branches", o.label,
               f"swap {_fmt(o.swap)} lies in the branch stabilizer")
    elif G.mul(2, o.swap) not in H:
        report("swap-order", o.label,
               f"2 * swap = {_fmt(G.mul(2, o.swap))} is not in the branch stabilizer")
    if o.over_branch_point:
        b = spec.branch_by_label.get(o.quotient)
        if b is None:
            report("unknown-quotient", o.label, f"no branch point named {o.quotient!r}")
        elif G.contains(b.stab_gen) and H != subgroup_generate(G, [b.stab_gen]):
            report("branch-stabilizer-mismatch", o.label,
                   f"branch stabilizer differs from the stabilizer at {b.label}")
    elif not H.is_trivial():
        report("branch-stabilizer-mismatch", o.label,
               "orbit over an unramified point must have trivial branch stabilizer")


def _twice_euler(spec: CoverSpec) -> int:
    n1 = spec.n1
    return n1 * (2 * spec.genus_y - 2) + sum(n1 // b.e * (b.e - 1) for b in spec.branches)


def genus_normalization(spec: CoverSpec) -> int:
    """Genus of the normalized component, by Riemann-Hurwitz."""
    twice = _twice_euler(spec)
    if twice % 2 or twice < -2:
        raise SpecInconsistency(f"Riemann-Hurwitz gives 2g - 2 = {twice}")
    return twice // 2 + 1


def node_count_total(spec: CoverSpec) -> int:
    total = 0
    for o in spec.nodes:
        total += spec.component_count * spec.n1 // (2 * len(spec.orbit_stabilizer(o)))
    for o in spec.intersections:
        total += spec.n // (2 * len(spec.orbit_stabilizer(o)))
    return total


def arithmetic_genus(spec: CoverSpec) -> int:
    d = spec.component_count
    return d * genus_normalization(spec) + node_count_total(spec) - d + 1
