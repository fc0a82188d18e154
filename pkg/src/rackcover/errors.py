"""Exception types raised by the library.

Validation errors carry an optional ``witness`` so callers (and the CLI) can
show exactly which elements broke the rule.
"""


class RackError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ShapeError(RackError, ValueError):
    pass


class AxiomViolation(RackError, ValueError):
    def __init__(self, axiom, witness=None, message=None):
        self.axiom = axiom
        super().__init__(message or f"axiom {axiom} fails at {witness}", witness)


class NotClosed(RackError, ValueError):
    pass


class NotHomomorphism(RackError, ValueError):
    pass


class NotSurjective(RackError, ValueError):
    pass


class CarrierMismatch(RackError, ValueError):
    pass


class CodomainMismatch(RackError, ValueError):
    pass


class DomainMismatch(RackError, ValueError):
    pass


class NotFactorable(RackError, ValueError):
    pass


class NotDoubleExtension(RackError, ValueError):
    pass


class NonCommutingCube(RackError, ValueError):
    pass


class NotThreeFold(RackError, ValueError):
    pass


class NotAMembrane(RackError, ValueError):
    pass


class NotAVolume(RackError, ValueError):
    pass


class NotAGroup(RackError, ValueError):
    def __init__(self, axiom, witness=None, message=None):
        self.axiom = axiom
        super().__init__(message or f"group axiom {axiom} fails at {witness}", witness)


# conj G and friends report malformed groups under this name as well
InvalidGroup = NotAGroup


class InternalConsistencyError(RackError, AssertionError):
    """Two independent computations of the same quantity disagree."""
