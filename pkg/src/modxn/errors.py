"""Exception types raised across the package."""


class ModxnError(Exception):
    pass


class ModulusMismatch(ModxnError, ValueError):
    pass


class ModulusTooLarge(ModxnError, ValueError):
    pass


class LevelTooSmall(ModxnError, ValueError):
    pass


class GenusTooSmall(ModxnError, ValueError):
    pass


class HypothesisNotMet(ModxnError, ValueError):
    """A cover does not satisfy "g_Y >= 2 or d odd"."""


class SampleConstructionFailure(ModxnError, RuntimeError):
    pass


class BadReductionPrime(ModxnError, ValueError):
    pass


class PrimeTooLarge(ModxnError, ValueError):
    pass


class PointNotOnCurve(ModxnError, ValueError):
    pass


class DegenerateImage(ModxnError, RuntimeError):
    pass
