"""Exception hierarchy for the toolkit.

Every anticipated failure mode has its own class so callers (and the CLI's
exit-code mapping) can dispatch on type rather than on message text.
"""


class DofsepError(Exception):
    """Base class for all toolkit errors."""


# -- geometry ---------------------------------------------------------------

class DimensionMismatch(DofsepError):
    """Operands live in different ambient dimensions."""


class EmptyPolytope(DofsepError):
    """The inequality system is infeasible."""


class Unbounded(DofsepError):
    """The polyhedron has an unbounded direction; regions are always bounded,
    so this signals a malformed input."""


class NonpositiveScale(DofsepError):
    """Polytope scaling requires a strictly positive factor."""


class DegeneratePolytope(DofsepError):
    """Operation requires a full-dimensional polytope but the feasible set
    lies in a proper affine subspace."""


class UnknownVariable(DofsepError):
    """Variable label not declared in the linear system."""


class InfeasibleProjection(DofsepError):
    """Fourier-Motzkin elimination derived 0 <= negative, i.e. the system
    is infeasible."""


# -- CSIT model and regions -------------------------------------------------

class ParameterOutOfRange(DofsepError):
    """CSIT quality parameters must lie in [0, 1]."""


class IndexOutOfRange(DofsepError):
    """Subchannel or user index outside the declared range."""


class EmptySubset(DofsepError):
    """A nonempty user subset is required."""


class SameUser(DofsepError):
    """A pair of distinct users is required."""


class UserCapExceeded(DofsepError):
    """User count exceeds the configured cap for exhaustive subset
    enumeration (see dofsep.config.MAX_USERS)."""


class UnsortedAlpha(DofsepError):
    """Quality vector must be sorted in nonincreasing order."""


class CommonBudgetExceeded(DofsepError):
    """Common DoF assignment exceeds the multicast power budget."""


class NotTotallyOrdered(DofsepError):
    """Operation requires a totally ordered CSIT pattern."""


class TupleOutsideOuterBound(DofsepError):
    """DoF tuple is not a member of the outer-bound region."""


class InternalInvariantError(DofsepError):
    """A postcondition that is mathematically guaranteed failed; this is a
    bug in the toolkit, not a user error."""
