"""Exception hierarchy. Every failure the library raises derives from PointedCatError."""


class PointedCatError(Exception):
    """Base class for all errors raised by this package."""


class NotSymmetric(PointedCatError):
    """Input matrix is not symmetric, so the bilinear pairing is ill-defined."""


class OddDiagonal(PointedCatError):
    """Input matrix has an odd diagonal entry, so twists are not well-defined mod 1."""


class Singular(PointedCatError):
    """Input matrix is singular; its cokernel is infinite."""


class NotInDiscriminantGroup(PointedCatError):
    """Vector v fails the membership condition B*v integral."""


class NonIntegralFusion(PointedCatError):
    """A reconstructed fusion multiplicity is not a non-negative integer."""


class NotProbabilistic(PointedCatError):
    """A fusion outcome weight is not a non-negative rational."""


class NotModular(PointedCatError):
    """A defining identity of modular data fails structurally."""


class NoLatticeProvenance(PointedCatError):
    """Operation requires data constructed from a Gram matrix."""


class RankTooLarge(PointedCatError):
    """Rank exceeds the bound for exhaustive relabeling."""


class ParseError(PointedCatError):
    """Malformed document text. Carries 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}" if line else message)
        self.line = line
        self.column = column


class ValidationError(PointedCatError):
    """Parsed data violates a type invariant."""
