"""High-precision evaluation of the N^{m+1/2} stratum relation between
cut-and-join graphs, term by term:

    sum_i [ A_i - sum_{j != i} J_ij - C_i ] = 0

    A_i  = (2k_i+1)!! / (2^{k_i+1} k_i!) x_i^{k_i} P_i <prod tau_k>_g
    J_ij = (x_i+x_j)^{k_i+k_j-1/2}/sqrt(2 pi) P_ij <tau_{k_i+k_j-1} prod_{l != i,j} tau_{k_l}>_g
    C_i  = 1/2 sum_{a+b=k_i-2} c_{a,b} x_i^{k_i} P_i [ <tau_a tau_b prod_{j != i}>_{g-1}
                                                     + sum <tau_a X>_{g1} <tau_b Y>_{g2} ]

with P_i = prod_{j != i} x_j^{k_j-1/2}/sqrt(2 pi), P_ij the same product
without i and j, c_{a,b} = (2a+1)!!(2b+1)!!/(2^{a+b+2}(a+b+2)!), and the
last sum over genus splittings and ordered splittings X, Y of the other
points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

import mpmath

from ..combinatorics import double_factorial
from ..psi import psi_correlator

__all__ = ["StarStarSample", "StarStarReport", "starstar_terms", "starstar_report", "starstar_numeric_check"]

DEFAULT_TOLERANCE = mpmath.mpf("1e-20")


def _corr(g: int, ks) -> Fraction:
    if g < 0 or any(k < 0 for k in ks):
        return Fraction(0)
    return psi_correlator(g, ks)


def _q(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def starstar_terms(g: int, ks: Sequence[int], xs: Sequence) -> list:
    """Signed terms of the sum at the point ``xs`` in the current mpmath context."""
    ks = list(ks)
    xs = [mpmath.mpf(x) for x in xs]
    n = len(ks)
    if len(xs) != n:
        raise ValueError("one sample coordinate per exponent")
    root = mpmath.sqrt(2 * mpmath.pi)
    half = mpmath.mpf(1) / 2
    factors = [xs[j] ** (ks[j] - half) / root for j in range(n)]
    full = _corr(g, ks)
    terms = []
    for i in range(n):
        others = [j for j in range(n) if j != i]
        p_i = mpmath.fprod(factors[j] for j in others)
        if full:
            a_coef = Fraction(double_factorial(2 * ks[i] + 1), 2 ** (ks[i] + 1) * factorial(ks[i]))
            terms.append(_q(a_coef * full) * xs[i] ** ks[i] * p_i)
        for j in others:
            w = ks[i] + ks[j] - 1
            rest = [ks[l] for l in range(n) if l not in (i, j)]
            val = _corr(g, [w] + rest)
            if val:
                p_ij = mpmath.fprod(factors[l] for l in range(n) if l not in (i, j))
                terms.append(-_q(val) * (xs[i] + xs[j]) ** (w + half) / root * p_ij)
        rest = [ks[j] for j in others]
        for a in range(ks[i] - 1):
            b = ks[i] - 2 - a
            c_ab = Fraction(double_factorial(2 * a + 1) * double_factorial(2 * b + 1),
                            2 ** (a + b + 2) * factorial(a + b + 2))
            bracket = _corr(g - 1, [a, b] + rest)
            for mask in range(1 << len(rest)):
                left = [rest[t] for t in range(len(rest)) if mask >> t & 1]
                right = [rest[t] for t in range(len(rest)) if not mask >> t & 1]
                for g1 in range(g + 1):
                    bracket += _corr(g1, [a] + left) * _corr(g - g1, [b] + right)
            if bracket:
                terms.append(-_q(c_ab * bracket / 2) * xs[i] ** ks[i] * p_i)
    return terms


@dataclass(frozen=True)
class StarStarSample:
    point: tuple
    value: mpmath.mpf
    magnitude: mpmath.mpf

    @property
    def relative(self):
        return abs(self.value) / self.magnitude if self.magnitude else abs(self.value)


@dataclass
class StarStarReport:
    genus: int
    exponents: tuple[int, ...]
    precision_bits: int
    tolerance: mpmath.mpf
    samples: list[StarStarSample] = field(default_factory=list)
    refined: list[StarStarSample] = field(default_factory=list)

    @property
    def max_relative(self):
        return max((s.relative for s in self.samples), default=mpmath.mpf(0))

    @property
    def passed(self) -> bool:
        return bool(self.samples) and all(s.relative <= self.tolerance for s in self.samples)

    @property
    def roundoff_only(self) -> bool:
        """True if doubling the precision shrinks every residual by the expected factor."""
        if not self.refined:
            return False
        for lo, hi in zip(self.samples, self.refined):
            if lo.relative and hi.relative > lo.relative * mpmath.mpf(2) ** (-self.precision_bits // 2):
                return False
        return True


def _sample(g, ks, point, bits):
    with mpmath.workprec(bits):
        terms = starstar_terms(g, ks, point)
        value = mpmath.fsum(terms)
        magnitude = mpmath.fsum(abs(t) for t in terms)
        return StarStarSample(tuple(point), +value, +magnitude)


def starstar_report(g: int, ks: Sequence[int], samples: Sequence[Sequence], precision_bits: int = 256,
                    tolerance=DEFAULT_TOLERANCE, refine: bool = True) -> StarStarReport:
    """Evaluate every sample at ``precision_bits`` and, with ``refine``, again at twice that."""
    if precision_bits < 64:
        raise ValueError("precision below 64 bits")
    report = StarStarReport(g, tuple(ks), precision_bits, mpmath.mpf(tolerance))
    for point in samples:
        if any(mpmath.mpf(x) <= 0 for x in point):
            raise ValueError("sample coordinates must be positive")
        report.samples.append(_sample(g, ks, point, precision_bits))
        if refine:
            report.refined.append(_sample(g, ks, point, 2 * precision_bits))
    return report


def starstar_numeric_check(g: int, ks: Sequence[int], samples: Sequence[Sequence], precision_bits: int = 256,
                           tolerance=DEFAULT_TOLERANCE) -> bool:
    return starstar_report(g, ks, samples, precision_bits, tolerance).passed
