"""Cover specs for the worked examples, built in code."""
from equidiff import SMOOTH, AbelianGroup, BranchPoint, CoverSpec, IntersectionOrbit, NodeOrbit

Z2 = AbelianGroup((2,))


def hyperelliptic(g: int, nodes: int) -> CoverSpec:
    """Irreducible hyperelliptic curve: normalization of genus g, ``nodes`` nodes."""
    branches = [BranchPoint.from_generator(Z2, f"Q{i}", (1,), 1) for i in range(2 * g + 2)]
    orbits = [NodeOrbit(f"N{i}", SMOOTH, (), (1,)) for i in range(nodes)]
    return CoverSpec(Z2, 0, 1, ((1,),), branches, orbits)


def two_lines(m: int) -> CoverSpec:
    """Two lines meeting in m points, exchanged by the involution."""
    orbits = [IntersectionOrbit(f"I{i}", SMOOTH, (), (1,)) for i in range(m)]
    return CoverSpec(Z2, 0, 2, (), (), (), orbits)
