"""Character multiplicities in the holomorphic differentials of nodal curves
with an abelian group action."""
from .abgroup import (
    AbelianGroup,
    Character,
    Subgroup,
    UnitExponent,
    char_eval,
    char_restrict_is_trivial,
    characters_all,
    element_order,
    subgroup_generate,
)
from .coverspec import (
    SMOOTH,
    CoverSpec,
    IntersectionOrbit,
    NodeOrbit,
    Violation,
    arithmetic_genus,
    genus_normalization,
    node_count_total,
    validate,
)
from .divisor import RationalDivisor
from .eigendim import (
    ChiSetResult,
    chi_sets,
    delta_chi,
    dim_connected,
    dim_irreducible,
    dims_table,
    intersection_chi_set,
    m_chi_closed,
    m_chi_divisor,
    singular_chi_set,
)
from .errors import CapacityError, EquidiffError, SpecInconsistency
from .ramification import (
    BranchPoint,
    admissibility_check,
    pairing_a,
    pairing_bruteforce,
    pairing_RGQ,
)

__version__ = "0.1.0"
