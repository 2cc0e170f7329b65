"""Exception hierarchy shared by all modules."""


class MatroidError(Exception):
    """Base class for every error raised by this package."""


class InvalidParams(MatroidError):
    pass


class DuplicateElement(MatroidError):
    pass


class UnknownVertex(MatroidError):
    pass


class InvalidMatrix(MatroidError):
    pass


class GroundSetMismatch(MatroidError):
    """A subset or separation refers to elements outside the ground set."""


class GroundSetTooLarge(MatroidError):
    """An exhaustive enumeration was requested above the subset-enumeration cap."""


class AxiomViolation(MatroidError):
    """A circuit family violates one of the circuit axioms.

    `axiom` is "C1", "C2" or "C3"; `witnesses` holds the offending circuits.
    """

    def __init__(self, axiom, message, witnesses=()):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom
        self.witnesses = tuple(witnesses)


class DependentInput(MatroidError):
    pass


class NotDependent(MatroidError):
    pass


class NotACircuit(MatroidError):
    pass


class Disconnected(MatroidError):
    pass


class TooSmall(MatroidError):
    pass


class NotCrossing(MatroidError):
    pass


class QuadrantTooSmall(MatroidError):
    pass


class NotA2Separation(MatroidError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class FamilyNotDisjoint(MatroidError):
    pass


class BadSharedElement(MatroidError):
    pass


class PreconditionViolated(MatroidError):
    def __init__(self, which, message=""):
        super().__init__(f"{which}: {message}" if message else which)
        self.which = which


class NotNested(MatroidError):
    pass


class NotSymmetric(MatroidError):
    pass


class NotATree(MatroidError):
    pass


class NotAPartition(MatroidError):
    pass


class LemmaFailure(MatroidError):
    """A verified structural invariant failed.

    This never fires on correct inputs; it exists so the library doubles as a
    falsification harness when run on arbitrary user matroids.
    """

    def __init__(self, which, message=""):
        super().__init__(f"{which}: {message}" if message else which)
        self.which = which


class Unclassifiable(LemmaFailure):
    """A torso is neither 3-connected nor a circuit nor a cocircuit."""
