"""Random valid cover specifications, for property checks and benchmarking.

Construction follows the realizability conditions: the local monodromies sum
to zero in ``G1``, they generate ``G1`` together with at most ``2 g_Y``
further elements, and the intersection swaps generate ``G`` modulo ``G1``.
Candidates that still fail :func:`~equidiff.coverspec.validate` are redrawn.
"""
from __future__ import annotations

import math
import random
from typing import Optional

from .abgroup import AbelianGroup, GroupElement, Subgroup, element_order, subgroup_generate
from .coverspec import SMOOTH, CoverSpec, IntersectionOrbit, NodeOrbit, validate
from .ramification import BranchPoint

__all__ = ["random_group", "random_cover_spec", "random_corpus"]


def random_group(rng: random.Random, max_order: int = 24) -> AbelianGroup:
    while True:
        k = rng.choice([1, 1, 2, 2, 3])
        inv = [rng.randint(1, 12) for _ in range(k)]
        if math.prod(inv) <= max_order:
            return AbelianGroup(tuple(inv))


def _units(e: int) -> list[int]:
    return [t for t in range(1, e) if math.gcd(t, e) == 1]


def _try_spec(rng: random.Random, max_order: int, max_genus: int,
              max_branches: int, max_nodes: int) -> Optional[CoverSpec]:
    G = random_group(rng, max_order)
    elements = list(G.elements())

    # G1 with G/G1 elementary 2-abelian, so intersection swaps can reach G
    if rng.random() < 0.4:
        G1 = G.whole.multiple(2).join(rng.sample(elements, rng.randint(0, 1)))
    else:
        G1 = G.whole
    d = G.order // len(G1)
    stab_gens = _small_generating_set(G, G1)

    g_y = rng.randint(0, max_genus)
    g1_nonzero = [g for g in G1 if g != G.identity]
    monodromy: list[GroupElement] = []
    if g1_nonzero:
        r = rng.randint(0, max_branches)
        monodromy = [rng.choice(g1_nonzero) for _ in range(max(r - 1, 0))]
        last = G.neg(G.total(monodromy))
        if last != G.identity:
            monodromy.append(last)
    branches = []
    for i, sigma in enumerate(monodromy):
        e = element_order(G, sigma)
        t = rng.choice(_units(e))
        # theta(g) = t/e for g = t * sigma, since sigma acts by 1/e
        branches.append(BranchPoint(f"Q{i}", G.mul(t, sigma), e, t))

    free_points = [b.label for b in branches]
    rng.shuffle(free_points)

    def place() -> tuple[str, Subgroup]:
        if free_points and rng.random() < 0.4:
            label = free_points.pop()
            b = next(b for b in branches if b.label == label)
            return label, subgroup_generate(G, [b.stab_gen])
        return SMOOTH, G.trivial_subgroup

    def swaps(H: Subgroup, inside: bool) -> list[GroupElement]:
        return [t for t in elements
                if (t in G1) == inside and t not in H and G.mul(2, t) in H]

    intersections = []
    span = G1
    while len(span) < G.order:
        quotient, H = place()
        options = [t for t in swaps(H, inside=False) if t not in span]
        if not options:
            if quotient != SMOOTH:
                continue
            return None
        tau = rng.choice(options)
        intersections.append(IntersectionOrbit(
            f"I{len(intersections)}", quotient, _small_generating_set(G, H), tau))
        span = span.join([tau])
        if len(intersections) > 6:
            return None
    if d > 1:
        for _ in range(rng.randint(0, 2)):
            quotient, H = place()
            options = swaps(H, inside=False)
            if options:
                intersections.append(IntersectionOrbit(
                    f"I{len(intersections)}", quotient, _small_generating_set(G, H),
                    rng.choice(options)))

    nodes = []
    for _ in range(rng.randint(0, max_nodes)):
        quotient, H = place()
        options = swaps(H, inside=True)
        if options:
            nodes.append(NodeOrbit(f"N{len(nodes)}", quotient,
                                   _small_generating_set(G, H), rng.choice(options)))

    spec = CoverSpec(G, g_y, d, stab_gens, tuple(branches), tuple(nodes),
                     tuple(intersections))
    return spec if not validate(spec) else None


def _small_generating_set(G: AbelianGroup, H: Subgroup) -> tuple[GroupElement, ...]:
    gens: list[GroupElement] = []
    span = G.trivial_subgroup
    for h in sorted(H, key=lambda x: (-element_order(G, x), x)):
        if h not in span:
            gens.append(h)
            span = span.join([h])
            if len(span) == len(H):
                break
    return tuple(gens)


def random_cover_spec(rng: random.Random, *, max_order: int = 24, max_genus: int = 4,
                      max_branches: int = 6, max_nodes: int = 4) -> CoverSpec:
    """Draw until a valid spec comes out."""
    while True:
        spec = _try_spec(rng, max_order, max_genus, max_branches, max_nodes)
        if spec is not None:
            return spec


def random_corpus(count: int, seed: int = 0, **kwargs) -> list[CoverSpec]:
    rng = random.Random(seed)
    return [random_cover_spec(rng, **kwargs) for _ in range(count)]
