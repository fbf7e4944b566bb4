"""Exception types raised by the library."""


class RegsetError(Exception):
    """Base class for every library-specific error."""


class InvalidPermutation(RegsetError):
    """A generator is not a bijection on 0..degree-1."""


class ClosureExceedsCap(RegsetError):
    """Generated set grew past the configured closure cap."""


class NotLatinSquare(RegsetError):
    """A row or column of the multiplication table repeats an entry."""


class NoIdentity(RegsetError):
    pass


class NoInverse(RegsetError):
    pass


class NotAssociative(RegsetError):
    pass


class OrderExceedsCap(RegsetError):
    """Group order is above the configured enumeration cap."""


class PNotDividing(RegsetError):
    pass


class NotNormal(RegsetError):
    pass


class NotDoubleCosetUnion(RegsetError):
    """A set straddles the boundary of some double coset."""


class NotLeftCosetUnion(RegsetError):
    """A set is not a union of left cosets of the given subgroup."""


class IntersectsSubgroup(RegsetError):
    """A connection set meets the subgroup it is defined over."""


class NotInverseClosed(RegsetError):
    pass


class NotEquitable(RegsetError):
    """Partition not equitable; ``witness`` is a vertex with inconsistent counts."""

    def __init__(self, message: str, witness: int | None = None):
        super().__init__(message)
        self.witness = witness


class SearchBudgetExceeded(RegsetError):
    """Search hit its node budget before deciding (distinct from a definite 'absent')."""


class ConstructionFailed(RegsetError):
    """Internal consistency failure: preconditions guaranteed a witness but none was built."""


class PreconditionViolated(RegsetError):
    pass


class FrattiniCheckFailed(RegsetError):
    """The Frattini product identity failed for a Sylow subgroup (indicates a bug)."""


class ParseError(RegsetError):
    pass
