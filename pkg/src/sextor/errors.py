"""Exception types shared across the package."""


class SextorError(Exception):
    """Base class for all library errors."""


class ZeroPolynomial(SextorError, ValueError):
    pass


class NonMonic(SextorError, ValueError):
    pass


class ReduciblePolynomial(SextorError, ValueError):
    pass


class DivisionByZero(SextorError, ZeroDivisionError):
    pass


class DegenerateShift(SextorError, RuntimeError):
    pass


class FactorizationLimit(SextorError, RuntimeError):
    """Recombination needed more subset trials than the configured cap."""


class SingularCurve(SextorError, ValueError):
    pass


class ExcludedParameter(SextorError, ValueError):
    pass


class FieldMismatch(SextorError, ValueError):
    pass


class BadReduction(SextorError, ValueError):
    pass


class TooLarge(SextorError, ValueError):
    pass


class NotTorsionWithinBound(SextorError, ValueError):
    pass


class UnsupportedLevel(SextorError, ValueError):
    pass


class UnknownBaseGroup(SextorError, KeyError):
    pass


class OutOfTable(SextorError, KeyError):
    pass


class UnsupportedDegree(SextorError, ValueError):
    pass


class UnsupportedPrime(SextorError, ValueError):
    pass


class RuleViolation(SextorError):
    """A computed configuration contradicts a classification rule."""

    def __init__(self, rule_ids, results=()):
        self.rule_ids = tuple(rule_ids)
        self.results = tuple(results)
        super().__init__("rule violation: " + ", ".join(self.rule_ids))


class ParseError(SextorError, ValueError):
    """Malformed curve, field or fixture input."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
