"""Exception hierarchy shared by all turan3 modules."""


class Turan3Error(Exception):
    """Base class for all library errors."""


class NotPrime(Turan3Error):
    """Field characteristic is not a prime."""


class TooLarge(Turan3Error):
    """Input exceeds a documented size cap."""


class ZeroInput(Turan3Error):
    """Operation is undefined at zero (norms, fibers)."""


class DegenerateInput(Turan3Error):
    """Inputs coincide where distinctness is required."""


class NotDivisor(Turan3Error):
    """Requested subgroup order does not divide the group order."""


class UnknownName(Turan3Error):
    """Unrecognised named graph or pattern."""


class BadParameter(Turan3Error):
    """Structurally invalid parameter value."""


class SameVertex(Turan3Error):
    """Two distinct vertices were required."""


class ImproperColoring(Turan3Error):
    """A proper coloring was required."""


class PatternTooDense(Turan3Error):
    """Copy enumeration exceeded its budget."""


class FormatError(Turan3Error):
    """Malformed graph/hypergraph text input."""


class GoldenMismatch(Turan3Error):
    """A recomputed value disagrees with the stored golden value."""
