"""Exception hierarchy shared by every module.

Input problems derive from ``InputError`` (the CLI maps them to exit code 3);
``InvariantViolation`` signals that a guaranteed identity failed to hold,
which means a bug rather than bad data (exit code 2).
"""


class OrbitLimError(Exception):
    pass


class InputError(OrbitLimError):
    pass


class InvariantViolation(OrbitLimError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AmbientMismatch(InputError):
    pass


class NotContained(InputError):
    pass


class NoSolution(OrbitLimError):
    pass


class ShapeMismatch(InputError):
    pass


class Singular(InputError):
    pass


class ZeroParameter(InputError):
    pass


class ZeroVector(InputError):
    pass


class ZeroCharacter(InputError):
    pass


class NotInParabolic(InputError):
    pass


class NotSemisimple(InputError):
    pass


class IrrationalSpectrum(OrbitLimError):
    pass


class DegenerateSelection(OrbitLimError):
    pass


class PrecheckFailed(OrbitLimError):
    pass


class NotTangent(InputError):
    pass


class NotInPositiveCone(InputError):
    def __init__(self, message, character=None):
        super().__init__(message)
        self.character = character


class NoRoom(OrbitLimError):
    pass


class KNotContained(InputError):
    pass


class TooLarge(InputError):
    pass
