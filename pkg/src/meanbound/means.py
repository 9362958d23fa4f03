"""Bivariate means of two positive reals.

Eight means are supported: contra-harmonic, centroidal, arithmetic,
geometric, harmonic, root-square, and the two Seiffert means defined
through arcsin and arctan of the normalized difference (a-b)/(a+b).
Every evaluator is a pure function of an immutable, validated pair and
extends the Seiffert means continuously to a == b.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DegeneratePairError, DomainError

__all__ = [
    "MeanKind",
    "PositivePair",
    "eval_mean",
    "half_sum_ratio",
    "seiffert_p_arctan_form",
]


class MeanKind(enum.Enum):
    """The eight supported means, keyed by their conventional short codes."""

    CONTRA_HARMONIC = "C"
    CENTROIDAL = "Cbar"
    ARITHMETIC = "A"
    GEOMETRIC = "G"
    HARMONIC = "H"
    ROOT_SQUARE = "S"
    SEIFFERT_P = "P"
    SEIFFERT_T = "T"


@dataclass(frozen=True)
class PositivePair:
    """A validated pair of positive finite reals.

    ``degenerate`` records whether a == b; the Seiffert evaluators use it
    to route to the continuous extension M(a, a) = a.
    """

    a: float
    b: float
    degenerate: bool = field(init=False, compare=False)

    def __post_init__(self) -> None:
        a = float(self.a)
        b = float(self.b)
        if not (a > 0.0 and b > 0.0) or a == math.inf or b == math.inf:
            raise DomainError(
                f"means are defined for positive finite reals, got a={self.a!r}, b={self.b!r}"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "degenerate", a == b)


# Truncated even series of u/arcsin(u) and u/arctan(u).  Below the cutoff
# the direct quotients (a-b)/(2*asin(u)) and (a-b)/(2*atan(u)) would lose
# one digit per decade of |u| once the arguments have been scaled, while
# the first omitted series term is under 1e-40.
_U_OVER_ASIN = (1.0, -1.0 / 6.0, -17.0 / 360.0, -367.0 / 15120.0, -27859.0 / 1814400.0)
_U_OVER_ATAN = (1.0, 1.0 / 3.0, -4.0 / 45.0, 44.0 / 945.0, -428.0 / 14175.0)
_SERIES_CUTOFF = 1e-4


def _even_poly(coeffs: tuple[float, ...], u: float) -> float:
    w = u * u
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * w + c
    return acc


def _contra_harmonic(x: float, y: float) -> float:
    return (x * x + y * y) / (x + y)


def _centroidal(x: float, y: float) -> float:
    return 2.0 * ((x * x + y * y) + x * y) / (3.0 * (x + y))


def _arithmetic(x: float, y: float) -> float:
    return 0.5 * (x + y)


def _geometric(x: float, y: float) -> float:
    # sqrt(x)*sqrt(y) instead of sqrt(x*y): the product underflows for
    # ratios beyond ~1e308, the factored form never does.
    return math.sqrt(x) * math.sqrt(y)


def _harmonic(x: float, y: float) -> float:
    return 2.0 * (x * y) / (x + y)


def _root_square(x: float, y: float) -> float:
    return math.sqrt(0.5 * (x * x + y * y))


def _seiffert_p(x: float, y: float) -> float:
    s = x + y
    u = (x - y) / s
    if -_SERIES_CUTOFF < u < _SERIES_CUTOFF:
        return 0.5 * s * _even_poly(_U_OVER_ASIN, u)
    # asin((x-y)/(x+y)) == atan((x-y)/(2*sqrt(xy))); asin amplifies the
    # quotient's rounding by 1/sqrt(1-u^2) as u -> 1, atan does not
    t = (x - y) / (2.0 * math.sqrt(x) * math.sqrt(y))
    return (x - y) / (2.0 * math.atan(t))


def _seiffert_t(x: float, y: float) -> float:
    s = x + y
    u = (x - y) / s
    if -_SERIES_CUTOFF < u < _SERIES_CUTOFF:
        return 0.5 * s * _even_poly(_U_OVER_ATAN, u)
    return (x - y) / (2.0 * math.atan(u))


_EVALUATORS = {
    MeanKind.CONTRA_HARMONIC: _contra_harmonic,
    MeanKind.CENTROIDAL: _centroidal,
    MeanKind.ARITHMETIC: _arithmetic,
    MeanKind.GEOMETRIC: _geometric,
    MeanKind.HARMONIC: _harmonic,
    MeanKind.ROOT_SQUARE: _root_square,
    MeanKind.SEIFFERT_P: _seiffert_p,
    MeanKind.SEIFFERT_T: _seiffert_t,
}


def eval_mean(kind: MeanKind, pair: PositivePair) -> float:
    """Evaluate one mean of the pair.

    The arguments are scaled by 1/max(a, b) and the result rescaled, so
    extreme magnitudes cannot overflow.  The result lies between min(a, b)
    and max(a, b), with equality exactly when a == b; the Seiffert means
    take their continuous-extension value a at a == b.
    """
    m = pair.a if pair.a >= pair.b else pair.b
    x = pair.a / m
    y = pair.b / m
    if x == 0.0 or y == 0.0:
        raise DomainError(f"ratio of {pair.a!r} to {pair.b!r} exceeds the binary64 range")
    return m * _EVALUATORS[kind](x, y)


_ONE_INSIDE = math.nextafter(1.0, 0.0)


def half_sum_ratio(pair: PositivePair) -> float:
    """(a - b)/(a + b): the reduction variable of the bounds engine.

    Lies in (-1, 1) and is antisymmetric under swapping a and b.  Ratios
    beyond ~1e16 would round the quotient to +-1.0 exactly; those are
    clamped to the nearest double inside the open interval.
    """
    m = pair.a if pair.a >= pair.b else pair.b
    x = pair.a / m
    y = pair.b / m
    r = (x - y) / (x + y)
    if r >= 1.0:
        return _ONE_INSIDE
    if r <= -1.0:
        return -_ONE_INSIDE
    return r


def seiffert_p_arctan_form(pair: PositivePair) -> float:
    """First Seiffert mean in its (a - b)/(4*atan(sqrt(a/b)) - pi) form.

    Uses the identity 4*atan(sqrt(a/b)) - pi == 4*atan((a-b)/(a+b+2*sqrt(ab)))
    so the subtraction of pi never cancels; agrees with
    eval_mean(SEIFFERT_P, pair) to ~1e-15 relative across the full
    argument range.  Raises for a == b, where the defining form is 0/0.
    """
    if pair.degenerate:
        raise DegeneratePairError("(a - b)/(4*atan(sqrt(a/b)) - pi) is 0/0 at a == b")
    m = pair.a if pair.a >= pair.b else pair.b
    x = pair.a / m
    y = pair.b / m
    w = (x - y) / (x + y + 2.0 * math.sqrt(x) * math.sqrt(y))
    return m * (x - y) / (4.0 * math.atan(w))
