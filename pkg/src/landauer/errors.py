"""Exception types shared across the toolkit.

Every domain error raised by the library derives from LandauerError so the
CLI can map the whole family onto exit code 1 with a structured report.
"""


class LandauerError(Exception):
    """Base class for all domain errors."""


class WidthMismatch(LandauerError):
    """Input length does not match the circuit width / input count."""


class BadConstantLine(LandauerError):
    """A CONST_ONE line is not 1 or an ANCILLA_ZERO line is not 0."""


class BadWiring(LandauerError):
    """Composition wiring is not a bijection between compatible widths."""


class DomainTooLarge(LandauerError):
    """An exhaustive sweep was requested beyond the width ceiling."""


class MalformedCode(LandauerError):
    """A self-delimiting header or codec bit stream cannot be parsed."""


class CompressorOverflow(LandauerError):
    """A coded block does not fit the available bit budget."""


class CodecNotInjective(LandauerError):
    """A codec failed the round-trip (injectivity) contract on its domain."""


class NotConservative(LandauerError):
    """A circuit required to preserve Hamming weight does not."""


class NonIntegralWeights(LandauerError):
    """w*n or (w+delta)*n is not an integer for the requested grid."""


class WidthTooSmall(LandauerError):
    """Circuit width is too small for the requested gate family."""


class GeneratorMismatch(LandauerError):
    """The generator circuit does not produce the expected string."""


class TooManyLines(LandauerError):
    """Compilation exceeded the configured ancilla budget."""


class NonPositiveTemperature(LandauerError):
    """Joule conversion requires a temperature above 0 K."""


class StringTooShort(LandauerError):
    """A complexity rate was requested for a string below the minimum length."""
