"""Exception types shared across the library."""


class HeckebError(Exception):
    """Base class for all library errors."""


class SizeMismatch(HeckebError):
    """Two bipartitions (or partitions) of different total size were compared."""


class CoreMismatch(HeckebError):
    """A partition does not have the 2-core required by the requested map."""


class BoundExceeded(HeckebError):
    """A rank or size argument is above the configured desk-scale bound."""


class MalformedTableau(HeckebError):
    """A domino tableau violates standardness or its core convention."""


class IrrationalityViolation(HeckebError):
    """A tie occurred in a xi-order comparison: the chosen rational xi is
    unfaithful to the irrational order it stands in for."""


class BadResidue(HeckebError):
    """A residue index lies outside 0..e-1."""


class NonIntegralDivision(HeckebError):
    """Exact division of Laurent polynomials left a remainder; signals a
    convention bug upstream."""


class NotUglov(HeckebError):
    """A bipartition has no path to the empty bipartition in the crystal."""


class IncompatibleCharges(HeckebError):
    """Two charges do not parametrize isomorphic highest-weight modules."""


class ChargeOutOfRange(HeckebError):
    """A charge lies outside the domain of a closed-form characterization."""


class ConventionViolation(HeckebError):
    """The canonical-basis reduction met an index it cannot resolve; signals
    a convention bug in the Fock/crystal layer."""


class ConjectureAViolation(HeckebError):
    """Insertion fibers do not match Kazhdan-Lusztig cells."""


class RankDeficiency(HeckebError):
    """Trace functions of the computed simple modules are linearly dependent;
    signals a simples-detection bug."""
