"""Exception types shared across the library."""


class CohinvError(Exception):
    """Base class for all library-specific errors."""


class ZeroElement(CohinvError):
    """Zero was used where a nonzero field element is required."""


class FactorizationFailure(CohinvError):
    """The factorization step budget was exhausted before completion."""

    def __init__(self, n, budget):
        super().__init__(f"could not factor {n} within a budget of {budget} rho steps")
        self.n = n
        self.budget = budget


class BaseMismatch(CohinvError):
    """Operands live over different base fields, or over the wrong one."""


class SpecializationAtPole(CohinvError):
    """Substitution point is a zero or pole of some symbol entry."""


class DegenerateForm(CohinvError):
    """The quadratic form has determinant zero."""


class IndexOutOfRange(CohinvError, IndexError):
    """Requested class degree lies outside the valid range."""


class NotEtale(CohinvError):
    """A defining polynomial is constant or not squarefree."""


class NotSquarefree(CohinvError):
    """The binary form has a repeated root."""


class OutsideU0(CohinvError):
    """Leading coefficient vanishes; the invariant does not extend there."""


class OddGenusUnsupported(CohinvError):
    """The construction is only available for even genus."""


class PointOnWeierstrassDivisor(CohinvError):
    """Evaluation point is a root of the binary form."""


class SingularMatrix(CohinvError):
    """The matrix is not invertible."""


class GenerationFailure(CohinvError):
    """Random generation exhausted its retry allowance."""


class EmptyCorpus(CohinvError):
    """The corpus file contained no valid records."""


class UnknownSuite(CohinvError):
    """No verification suite is registered under that name."""
