"""Exception hierarchy shared by every module."""


class CatenaError(Exception):
    """Base class for all library errors."""


class ArithmeticOverflow(CatenaError, OverflowError):
    """An intermediate value left the signed 64-bit range."""


class BudgetExceeded(CatenaError):
    """A search frontier or enumeration grew past its configured budget."""


class FiberCapExceeded(BudgetExceeded):
    """A factorization fiber has more elements than the configured cap."""


class InvalidSemigroup(CatenaError, ValueError):
    """The generator data does not describe a valid reduced affine semigroup."""


class NotReduced(InvalidSemigroup):
    pass


class ZeroGenerator(InvalidSemigroup):
    pass


class DuplicateGenerator(InvalidSemigroup):
    pass


class NotMinimalGenerating(InvalidSemigroup):
    """The operation needs the generators to be exactly the atoms."""
