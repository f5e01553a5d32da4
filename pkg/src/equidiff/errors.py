class EquidiffError(Exception):
    """Base class for all errors raised by equidiff."""


class CapacityError(EquidiffError):
    """A group or subgroup is too large for enumeration."""


class SpecInconsistency(EquidiffError):
    """Cover data that cannot come from an actual group action.

    Raised by the numeric routines when they meet data that should have been
    rejected by validation (non-integral degrees, mismatched orders, ...).
    """
