"""Arbitrary-precision checks of the large-n sums, the Stirling stratum
expansion and the Laplace-type integrals.

All floating point work goes through mpmath at an explicit binary precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, log2
from typing import Sequence

import mpmath

from .combinatorics import double_factorial

__all__ = [
    "SECOND",
    "PrecisionError",
    "QuadratureError",
    "AsymptoticReport",
    "asym_sum",
    "first_form_limit",
    "second_form_subleading",
    "asym_leading_check",
    "laplace_values",
    "laplace_check",
    "join_integral_values",
    "join_integral_check",
    "stirling_ratio",
    "stirling_stratum_check",
]

SECOND = "second"
DEFAULT_SCHEDULE = (100, 1000, 10000)
GUARD_BITS = 24


class PrecisionError(ValueError):
    pass


class QuadratureError(ArithmeticError):
    pass


def _require_precision(n: int, bits: int) -> None:
    # exponents of size ~ n log n lose about log2(n log n) bits on exp()
    needed = log2(max(n, 2) * max(log2(n), 1)) + GUARD_BITS
    if bits < needed:
        raise PrecisionError(f"{bits} bits too few for n={n}; need at least {int(needed) + 1}")


@lru_cache(maxsize=8)
def _log_tables(n: int, bits: int):
    """ln p and (p+1) ln p - ln p! for p = 1 .. n-1."""
    with mpmath.workprec(bits):
        logs = [mpmath.log(p) for p in range(1, n)]
        base = [(p + 1) * logs[p - 1] - mpmath.loggamma(p + 1) for p in range(1, n)]
    return logs, base


def asym_sum(n: int, k: int, l, precision_bits: int = 128):
    """e^{-n} sum_{p+q=n, p,q>=1} p^{p+k+1} q^{q+l+1} / (p! q!), or with
    ``l=SECOND`` the same sum with q^{q-1} in place of q^{q+l+1}."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 0 or (l != SECOND and l < 0):
        raise ValueError("k and l must be non-negative")
    _require_precision(n, precision_bits)
    logs, base = _log_tables(n, precision_bits)
    shift = -2 if l == SECOND else l
    with mpmath.workprec(precision_bits):
        terms = []
        for p in range(1, n):
            q = n - p
            e = base[p - 1] + k * logs[p - 1] + base[q - 1] + shift * logs[q - 1] - n
            terms.append(mpmath.exp(e))
        return +mpmath.fsum(terms)


def first_form_limit(k: int, l: int) -> Fraction:
    """1/2 (2k+1)!!(2l+1)!! / (2^{k+l+2} (k+l+2)!)."""
    return Fraction(double_factorial(2 * k + 1) * double_factorial(2 * l + 1),
                    2 * 2 ** (k + l + 2) * factorial(k + l + 2))


def second_form_subleading(k: int) -> Fraction:
    """-(2k+1)!! / (2^{k+1} k!)."""
    return Fraction(-double_factorial(2 * k + 1), 2 ** (k + 1) * factorial(k))


@dataclass(frozen=True)
class AsymptoticReport:
    formula: str
    params: tuple
    ns: tuple
    measured: tuple
    extrapolated: object
    target: object
    tolerance: float
    passed: bool

    @property
    def relative_error(self):
        return abs(self.extrapolated / self.target - 1)


def _mpq(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def asym_leading_check(k: int, l, schedule: Sequence[int] = DEFAULT_SCHEDULE, precision_bits: int = 128,
                       tolerance: float | None = None) -> AsymptoticReport:
    """First form: S(n)/n^{k+l+2} at the last schedule point within ``tolerance``
    (default 2%) of the limit, with the error shrinking along the schedule.

    Second form: (S(n) - n^{k+1/2}/sqrt(2 pi)) / n^k has an n^{-1/2} correction;
    the last two points are combined to remove it, and the result must lie
    within ``tolerance`` (default 5%) of the sub-leading coefficient.
    """
    ns = tuple(schedule)
    if len(ns) < 3 or any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("schedule needs at least three strictly increasing sizes")
    with mpmath.workprec(precision_bits):
        if l == SECOND:
            tol = 0.05 if tolerance is None else tolerance
            target = _mpq(second_form_subleading(k))
            half = mpmath.mpf(1) / 2
            lead = 1 / mpmath.sqrt(2 * mpmath.pi)
            measured = tuple((asym_sum(n, k, SECOND, precision_bits) - lead * mpmath.mpf(n) ** (k + half))
                             / mpmath.mpf(n) ** k for n in ns)
            r1, r2 = mpmath.sqrt(ns[-2]), mpmath.sqrt(ns[-1])
            extrapolated = (r2 * measured[-1] - r1 * measured[-2]) / (r2 - r1)
            passed = abs(extrapolated / target - 1) <= tol
            return AsymptoticReport("second", (k,), ns, measured, extrapolated, target, tol, bool(passed))
        tol = 0.02 if tolerance is None else tolerance
        target = _mpq(first_form_limit(k, l))
        measured = tuple(asym_sum(n, k, l, precision_bits) / mpmath.mpf(n) ** (k + l + 2) for n in ns)
        errors = [abs(m / target - 1) for m in measured]
        monotone = all(b < a for a, b in zip(errors, errors[1:]))
        passed = monotone and errors[-1] <= tol
        return AsymptoticReport("first", (k, l), ns, measured, measured[-1], target, tol, bool(passed))


def laplace_values(k: int, s, precision_bits: int = 128):
    """Numerical and closed-form values of

        int_0^oo x^{k-1/2}/sqrt(2 pi) e^{-x/2s} dx = (2k-1)!! s^{k+1/2}
        int_0^oo x^k e^{-x/2s} dx = k! (2s)^{k+1}

    as ((half_numeric, half_exact), (int_numeric, int_exact))."""
    if k < 0:
        raise ValueError("k must be non-negative")
    with mpmath.workprec(precision_bits):
        s = mpmath.mpf(s) if not isinstance(s, Fraction) else _mpq(s)
        if s <= 0:
            raise ValueError("s must be positive")
        half = mpmath.mpf(1) / 2
        root = mpmath.sqrt(2 * mpmath.pi)
        f_half = lambda x: x ** (k - half) / root * mpmath.exp(-x / (2 * s))
        f_int = lambda x: x**k * mpmath.exp(-x / (2 * s))
        out = []
        for f, exact in ((f_half, double_factorial(2 * k - 1) * s ** (k + half)),
                         (f_int, factorial(k) * (2 * s) ** (k + 1))):
            value, err = mpmath.quad(f, [0, 2 * s * (k + 1), mpmath.inf], error=True)
            if not mpmath.isfinite(value) or err > abs(value) * mpmath.mpf(10) ** -20:
                raise QuadratureError(f"quadrature did not converge for k={k}, s={s}: error {err}")
            out.append((+value, +exact))
        return tuple(out)


def laplace_check(k: int, s, precision_bits: int = 128, tolerance: float = 1e-9) -> bool:
    for numeric, exact in laplace_values(k, s, precision_bits):
        if abs(numeric / exact - 1) > tolerance:
            return False
    return True


def join_integral_values(k: int, y_i, y_j, precision_bits: int = 128):
    """(two-dimensional quadrature, one-dimensional reduction, closed form) of

        1/sqrt(2 pi) int int (x_i+x_j)^{k+1/2} e^{-x_i y_i - x_j y_j} dx_i dx_j.

    Integrating along x_i + x_j = r first leaves
    Gamma(k+3/2)/sqrt(2 pi) (y_j^{-a} - y_i^{-a})/(y_i - y_j), a = k + 3/2,
    which is the independent reference for the closed form
    (2k+1)!!/((sqrt y_i + sqrt y_j)(2 y_i y_j)^{k+3/2}) sum_{m=0}^{2k+2} y_i^{(2k+2-m)/2} y_j^{m/2}.
    """
    with mpmath.workprec(precision_bits):
        yi, yj = mpmath.mpf(y_i), mpmath.mpf(y_j)
        if yi <= 0 or yj <= 0:
            raise ValueError("y_i and y_j must be positive")
        half = mpmath.mpf(1) / 2
        root = mpmath.sqrt(2 * mpmath.pi)
        c = k + half
        f = lambda xi, xj: (xi + xj) ** c * mpmath.exp(-xi * yi - xj * yj)
        # 20 digits is ample for the 1e-8 target and keeps the 2D rule affordable
        with mpmath.workdps(20):
            numeric, err = mpmath.quad(f, [0, mpmath.inf], [0, mpmath.inf], error=True)
        if not mpmath.isfinite(numeric) or err > abs(numeric) * mpmath.mpf(10) ** -12:
            raise QuadratureError(f"2D quadrature did not converge: error {err}")
        numeric = numeric / root
        a = k + 3 * half
        if yi == yj:
            reduced = mpmath.gamma(a) / root * a * yi ** (-a - 1)
        else:
            reduced = mpmath.gamma(a) / root * (yj**-a - yi**-a) / (yi - yj)
        si, sj = mpmath.sqrt(yi), mpmath.sqrt(yj)
        poly = mpmath.fsum(si ** (2 * k + 2 - m) * sj**m for m in range(2 * k + 3))
        closed = double_factorial(2 * k + 1) / ((si + sj) * (2 * yi * yj) ** a) * poly
        return +numeric, +reduced, +closed


def join_integral_check(k: int, y_i, y_j, precision_bits: int = 128, tolerance: float = 1e-8) -> bool:
    numeric, reduced, closed = join_integral_values(k, y_i, y_j, precision_bits)
    return abs(numeric / closed - 1) <= tolerance and abs(reduced / closed - 1) <= tolerance


def stirling_ratio(mu: Sequence[int], ks: Sequence[int], precision_bits: int = 128):
    """prod mu^{mu+k}/mu! divided by e^{|mu|} prod mu^{k-1/2}/sqrt(2 pi)."""
    with mpmath.workprec(precision_bits):
        half = mpmath.mpf(1) / 2
        log_ratio = mpmath.mpf(0)
        for m, k in zip(mu, ks):
            m = mpmath.mpf(m)
            log_ratio += (m + half) * mpmath.log(m) - mpmath.loggamma(m + 1) - m + mpmath.log(2 * mpmath.pi) / 2
        return +mpmath.exp(log_ratio)


def stirling_stratum_check(x: Sequence[int], ks: Sequence[int], schedule: Sequence[int] = (10, 100, 1000, 10000),
                           precision_bits: int = 128, tolerance: float = 0.01) -> AsymptoticReport:
    """With mu_i = x_i N, the ratio tends to 1 and N (ratio - 1) tends to
    -sum 1/(12 x_i), the first Stirling correction; the last point must be
    within ``tolerance`` of that rate."""
    if len(x) != len(ks):
        raise ValueError("one exponent per part")
    ns = tuple(schedule)
    with mpmath.workprec(precision_bits):
        ratios = tuple(stirling_ratio([xi * n for xi in x], ks, precision_bits) for n in ns)
        rates = tuple(n * (r - 1) for n, r in zip(ns, ratios))
        target = -mpmath.fsum(mpmath.mpf(1) / (12 * xi) for xi in x)
        errs = [abs(r - 1) for r in ratios]
        shrinking = all(b < a for a, b in zip(errs, errs[1:]))
        passed = shrinking and abs(rates[-1] / target - 1) <= tolerance
        return AsymptoticReport("stirling", (tuple(x), tuple(ks)), ns, ratios, rates[-1], target, tolerance,
                                bool(passed))
