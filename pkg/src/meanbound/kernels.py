"""Trigonometric kernel functions and reciprocal-sine series.

Four kernel functions drive the sharp-bounds engine:

    h1(x) = (sin x / x - cos^2 x) / sin^2 x        on (0, pi),   decreasing, 5/6 -> -inf
    h2(x) = (sin x - x cos x) / (x (1 - cos x))    on (0, 2 pi), decreasing, 2/3 -> -inf
    h3(x) = (x - sin x cos x) / (x sin^2 x)        on (0, pi),   increasing, 2/3 -> +inf
    h4(x) = (x - sin x) cos x / (x - sin x cos x)  on (0, pi),   decreasing, 1/4 -> -1

Direct trigonometric evaluation is used for x >= 1/2.  Below that the
direct numerators cancel, so h1 and h3 switch to power series whose
coefficients come from the Bernoulli table,

    h1(x) = 1 + sum_n [(1-n) 2^(2n+1) - 2] |B_2n| / (2n)! * x^(2n-2)
    h3(x) =     sum_n  n 2^(2n+1)          |B_2n| / (2n)! * x^(2n-2)

while h2 and h4 are evaluated as quotients of the Maclaurin expansions of
their numerators and denominators.

The module also provides adaptive evaluators for the three series

    1/sin x   = 1/x   + sum_n 2 (2^(2n-1) - 1) |B_2n| / (2n)! * x^(2n-1)
    cot x     = 1/x   - sum_n 2^(2n)           |B_2n| / (2n)! * x^(2n-1)
    1/sin^2 x = 1/x^2 + sum_n 2^(2n) (2n-1)    |B_2n| / (2n)! * x^(2n-2)

on 0 < |x| < pi.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernoulli import MAX_INDEX, BernoulliTable, bernoulli_table
from .errors import DomainError

__all__ = [
    "BERNOULLI_ENV_VAR",
    "HFunctionId",
    "HFunctionInfo",
    "H_INFO",
    "SeriesEvaluation",
    "X_SWITCH",
    "csc_coefficients",
    "cot_coefficients",
    "csc_sq_coefficients",
    "csc_series",
    "cot_series",
    "csc_sq_series",
    "default_table",
    "h1_coefficients",
    "h3_coefficients",
    "h_eval",
    "h_limit",
]

#: environment variable capping the shared Bernoulli table (default 64)
BERNOULLI_ENV_VAR = "MEANBOUND_BERNOULLI_MAX"

#: series/direct switch point for the kernel functions
X_SWITCH = 0.5

# Adaptive truncation: stop once the next term drops below _REL_STOP of the
# partial sum, never using more than _MAX_TERMS terms.  All tails here are
# single-signed on the evaluation window, so the first omitted term bounds
# the truncation error.
_REL_STOP = 1e-18
_MAX_TERMS = 32


@dataclass(frozen=True)
class SeriesEvaluation:
    """A truncated series value plus truncation diagnostics.

    ``truncation_bound`` is the magnitude of the first term not added (or
    of the last term, if the hard cap was reached).
    """

    value: float
    terms_used: int
    truncation_bound: float


def _env_max_index() -> int:
    raw = os.environ.get(BERNOULLI_ENV_VAR)
    if raw is None:
        return MAX_INDEX
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(
            f"{BERNOULLI_ENV_VAR} must be an even integer in [2, {MAX_INDEX}], got {raw!r}"
        ) from exc


@lru_cache(maxsize=None)
def _cached_table(n_max: int) -> BernoulliTable:
    return bernoulli_table(n_max)


def default_table() -> BernoulliTable:
    """The shared Bernoulli table, sized by MEANBOUND_BERNOULLI_MAX."""
    return _cached_table(_env_max_index())


# ---------------------------------------------------------------------------
# exact series coefficients


def _check_order(order: int, table: BernoulliTable) -> None:
    if not isinstance(order, int) or not 1 <= order <= table.n_terms:
        raise DomainError(f"order must be an integer in [1, {table.n_terms}], got {order!r}")


def csc_coefficients(order: int, table: BernoulliTable) -> list[tuple[int, Fraction]]:
    """(power, coefficient) of x^(2n-1), n = 1..order, in 1/sin x - 1/x."""
    _check_order(order, table)
    return [
        (2 * n - 1, 2 * (2 ** (2 * n - 1) - 1) * table.abs_b2n(n) / math.factorial(2 * n))
        for n in range(1, order + 1)
    ]


def cot_coefficients(order: int, table: BernoulliTable) -> list[tuple[int, Fraction]]:
    """(power, coefficient) of x^(2n-1) in cot x - 1/x; all negative."""
    _check_order(order, table)
    return [
        (2 * n - 1, -(2 ** (2 * n)) * table.abs_b2n(n) / math.factorial(2 * n))
        for n in range(1, order + 1)
    ]


def csc_sq_coefficients(order: int, table: BernoulliTable) -> list[tuple[int, Fraction]]:
    """(power, coefficient) of x^(2n-2) in 1/sin^2 x - 1/x^2."""
    _check_order(order, table)
    return [
        (2 * n - 2, 2 ** (2 * n) * (2 * n - 1) * table.abs_b2n(n) / math.factorial(2 * n))
        for n in range(1, order + 1)
    ]


def h1_coefficients(order: int, table: BernoulliTable) -> list[tuple[int, Fraction]]:
    """(power, coefficient) of x^(2n-2) in the h1 expansion.

    The standalone +1 of the expansion is folded into the n = 1 term, so
    the constant term is 5/6 and every later coefficient is negative.
    """
    _check_order(order, table)
    out = []
    for n in range(1, order + 1):
        c = ((1 - n) * 2 ** (2 * n + 1) - 2) * table.abs_b2n(n) / math.factorial(2 * n)
        if n == 1:
            c += 1
        out.append((2 * n - 2, c))
    return out


def h3_coefficients(order: int, table: BernoulliTable) -> list[tuple[int, Fraction]]:
    """(power, coefficient) of x^(2n-2) in the h3 expansion; all positive."""
    _check_order(order, table)
    return [
        (2 * n - 2, n * 2 ** (2 * n + 1) * table.abs_b2n(n) / math.factorial(2 * n))
        for n in range(1, order + 1)
    ]


@lru_cache(maxsize=None)
def _csc_floats(table: BernoulliTable) -> tuple[float, ...]:
    order = min(_MAX_TERMS, table.n_terms)
    return tuple(float(c) for _, c in csc_coefficients(order, table))


@lru_cache(maxsize=None)
def _cot_floats(table: BernoulliTable) -> tuple[float, ...]:
    order = min(_MAX_TERMS, table.n_terms)
    return tuple(float(c) for _, c in cot_coefficients(order, table))


@lru_cache(maxsize=None)
def _csc_sq_floats(table: BernoulliTable) -> tuple[float, ...]:
    order = min(_MAX_TERMS, table.n_terms)
    return tuple(float(c) for _, c in csc_sq_coefficients(order, table))


@lru_cache(maxsize=None)
def _h1_floats(table: BernoulliTable) -> tuple[float, ...]:
    order = min(_MAX_TERMS, table.n_terms)
    return tuple(float(c) for _, c in h1_coefficients(order, table))


@lru_cache(maxsize=None)
def _h3_floats(table: BernoulliTable) -> tuple[float, ...]:
    order = min(_MAX_TERMS, table.n_terms)
    return tuple(float(c) for _, c in h3_coefficients(order, table))


# ---------------------------------------------------------------------------
# adaptive series evaluation


def _series_sum(lead: float, coeffs: tuple[float, ...], x_first: float, x_step: float) -> SeriesEvaluation:
    acc = lead
    xp = x_first
    used = 0
    bound = 0.0
    for c in coeffs:
        term = c * xp
        bound = abs(term)
        if bound < _REL_STOP * abs(acc):
            break
        acc += term
        xp *= x_step
        used += 1
    return SeriesEvaluation(acc, used, bound)


def _sine_domain(x: float) -> None:
    if not 0.0 < abs(x) < math.pi:
        raise DomainError(f"series argument must satisfy 0 < |x| < pi, got {x!r}")


def csc_series(x: float, table: BernoulliTable | None = None) -> SeriesEvaluation:
    """1/sin x via its series, truncated adaptively.

    Agrees with direct 1/sin x to better than 1e-12 relative on
    |x| <= pi/2; convergence degrades as |x| -> pi (see truncation_bound).
    """
    _sine_domain(x)
    if table is None:
        table = default_table()
    return _series_sum(1.0 / x, _csc_floats(table), x, x * x)


def cot_series(x: float, table: BernoulliTable | None = None) -> SeriesEvaluation:
    """cot x via its series, truncated adaptively."""
    _sine_domain(x)
    if table is None:
        table = default_table()
    return _series_sum(1.0 / x, _cot_floats(table), x, x * x)


def csc_sq_series(x: float, table: BernoulliTable | None = None) -> SeriesEvaluation:
    """1/sin^2 x via its series; equals the negated derivative of cot x."""
    _sine_domain(x)
    if table is None:
        table = default_table()
    return _series_sum(1.0 / (x * x), _csc_sq_floats(table), 1.0, x * x)


# ---------------------------------------------------------------------------
# kernel functions


class HFunctionId(enum.Enum):
    H1 = "h1"
    H2 = "h2"
    H3 = "h3"
    H4 = "h4"


@dataclass(frozen=True)
class HFunctionInfo:
    """Domain, monotonicity direction, and endpoint limits of one kernel."""

    domain_right: float
    increasing: bool
    limit_at_zero: Fraction
    limit_at_right: float


H_INFO: dict[HFunctionId, HFunctionInfo] = {
    HFunctionId.H1: HFunctionInfo(math.pi, False, Fraction(5, 6), -math.inf),
    HFunctionId.H2: HFunctionInfo(math.tau, False, Fraction(2, 3), -math.inf),
    HFunctionId.H3: HFunctionInfo(math.pi, True, Fraction(2, 3), math.inf),
    HFunctionId.H4: HFunctionInfo(math.pi, False, Fraction(1, 4), -1.0),
}


def _h1_direct(x: float) -> float:
    s = math.sin(x)
    c = math.cos(x)
    return (s / x - c * c) / (s * s)


def _h2_direct(x: float) -> float:
    s = math.sin(x)
    c = math.cos(x)
    return (s - x * c) / (x * (1.0 - c))


def _h3_direct(x: float) -> float:
    s = math.sin(x)
    c = math.cos(x)
    return (x - s * c) / (x * s * s)


def _h4_direct(x: float) -> float:
    s = math.sin(x)
    c = math.cos(x)
    return (x - s) * c / (x - s * c)


# Maclaurin coefficients (exact, converted once) for the quotient forms of
# h2 and h4 below X_SWITCH:
#     sin x - x cos x  = sum_k (-1)^(k+1) 2k      x^(2k+1) / (2k+1)!
#     x (1 - cos x)    = sum_k (-1)^(k+1)         x^(2k+1) / (2k)!
#     x - sin x        = sum_k (-1)^(k+1)         x^(2k+1) / (2k+1)!
#     x - sin x cos x  = sum_k (-1)^(k+1) 2^(2k)  x^(2k+1) / (2k+1)!
# The common x^3 factor cancels in each quotient; ten terms leave the
# remainder below 1e-24 relative everywhere on (0, 1/2).
_QUOT_TERMS = 10
_H2_NUM = tuple(
    float(Fraction((-1) ** (k + 1) * 2 * k, math.factorial(2 * k + 1)))
    for k in range(1, _QUOT_TERMS + 1)
)
_H2_DEN = tuple(
    float(Fraction((-1) ** (k + 1), math.factorial(2 * k))) for k in range(1, _QUOT_TERMS + 1)
)
_H4_NUM = tuple(
    float(Fraction((-1) ** (k + 1), math.factorial(2 * k + 1))) for k in range(1, _QUOT_TERMS + 1)
)
_H4_DEN = tuple(
    float(Fraction((-1) ** (k + 1) * 2 ** (2 * k), math.factorial(2 * k + 1)))
    for k in range(1, _QUOT_TERMS + 1)
)


def _poly(coeffs: tuple[float, ...], w: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * w + c
    return acc


def _h1_series(x: float) -> float:
    return _series_sum(0.0, _h1_floats(default_table()), 1.0, x * x).value


def _h2_series(x: float) -> float:
    w = x * x
    return _poly(_H2_NUM, w) / _poly(_H2_DEN, w)


def _h3_series(x: float) -> float:
    return _series_sum(0.0, _h3_floats(default_table()), 1.0, x * x).value


def _h4_series(x: float) -> float:
    w = x * x
    return math.cos(x) * _poly(_H4_NUM, w) / _poly(_H4_DEN, w)


_DIRECT = {
    HFunctionId.H1: _h1_direct,
    HFunctionId.H2: _h2_direct,
    HFunctionId.H3: _h3_direct,
    HFunctionId.H4: _h4_direct,
}

_SERIES = {
    HFunctionId.H1: _h1_series,
    HFunctionId.H2: _h2_series,
    HFunctionId.H3: _h3_series,
    HFunctionId.H4: _h4_series,
}


def h_eval(fn_id: HFunctionId, x: float) -> float:
    """Evaluate a kernel function strictly inside its domain.

    Direct trigonometric formulas for x >= 1/2, series forms below; the
    two branches agree to better than 1e-10 relative on [0.05, 0.5].
    """
    info = H_INFO[fn_id]
    if not 0.0 < x < info.domain_right:
        raise DomainError(
            f"{fn_id.value} is defined on the open interval (0, {info.domain_right!r}), got {x!r}"
        )
    if x >= X_SWITCH:
        return _DIRECT[fn_id](x)
    return _SERIES[fn_id](x)


def h_limit(fn_id: HFunctionId, endpoint: str) -> float:
    """Exact endpoint limit: 'left' is x -> 0+, 'right' the upper domain end."""
    info = H_INFO[fn_id]
    if endpoint == "left":
        return float(info.limit_at_zero)
    if endpoint == "right":
        return float(info.limit_at_right)
    raise DomainError(f"endpoint must be 'left' or 'right', got {endpoint!r}")
