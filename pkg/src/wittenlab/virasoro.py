"""Truncated tau-function and the Virasoro constraints L_n tau = 0.

Monomials in t~_0, ..., t~_K are stored as weakly decreasing tuples of
variable indices, so ``(2, 0, 0)`` is t~_2 t~_0^2 and ``()`` is 1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Iterable, Mapping

from .combinatorics import sub_multisets
from .psi import CorrelatorCache, tilde_correlator

__all__ = [
    "SparseSeries",
    "VirasoroOperator",
    "monomials",
    "monomial_genus",
    "build_free_energy",
    "series_exp",
    "series_log",
    "apply_virasoro",
    "virasoro_residual",
    "convention_report",
    "tau_function",
]

Monomial = tuple[int, ...]
HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def _mono(indices: Iterable[int]) -> Monomial:
    return tuple(sorted(indices, reverse=True))


def _sym(mono: Monomial) -> int:
    out = 1
    for m in Counter(mono).values():
        out *= factorial(m)
    return out


def monomials(max_index: int, max_degree: int, min_degree: int = 0):
    for deg in range(min_degree, max_degree + 1):
        for combo in combinations_with_replacement(range(max_index, -1, -1), deg):
            yield combo


@dataclass(frozen=True)
class SparseSeries:
    """Finitely supported power series with exact coefficients.

    Coefficients are meaningful for monomials of degree <= ``max_degree`` in
    variables of index <= ``max_index``; nothing outside that window is stored.
    """

    coeffs: Mapping[Monomial, Fraction]
    max_index: int
    max_degree: int

    @classmethod
    def build(cls, coeffs: Mapping[Iterable[int], Fraction], max_index: int, max_degree: int) -> "SparseSeries":
        clean: dict[Monomial, Fraction] = {}
        for mono, c in coeffs.items():
            mono = _mono(mono)
            if c and len(mono) <= max_degree and (not mono or mono[0] <= max_index):
                clean[mono] = Fraction(c)
        return cls(clean, max_index, max_degree)

    def __getitem__(self, mono: Iterable[int]) -> Fraction:
        return self.coeffs.get(_mono(mono), Fraction(0))

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def restrict(self, max_index: int, max_degree: int) -> "SparseSeries":
        return SparseSeries.build(self.coeffs, min(max_index, self.max_index), min(max_degree, self.max_degree))

    def __add__(self, other: "SparseSeries") -> "SparseSeries":
        k, d = min(self.max_index, other.max_index), min(self.max_degree, other.max_degree)
        out = dict(self.restrict(k, d).coeffs)
        for mono, c in other.restrict(k, d).coeffs.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return SparseSeries.build(out, k, d)

    def scale(self, factor) -> "SparseSeries":
        return SparseSeries.build({m: factor * c for m, c in self.coeffs.items()}, self.max_index, self.max_degree)

    def __sub__(self, other: "SparseSeries") -> "SparseSeries":
        return self + other.scale(-1)

    def exponent_vector(self, mono: Monomial) -> tuple[int, ...]:
        counts = Counter(mono)
        return tuple(counts.get(i, 0) for i in range(self.max_index + 1))

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), tuple(reversed(kv[0]))))


def monomial_genus(mono: Monomial) -> int | None:
    """Genus g with sum k_i = 3g - 3 + n, or None when no stable genus fits."""
    n, s = len(mono), sum(mono)
    if n == 0 or (s - n) % 3:
        return None
    g = (s - n + 3) // 3
    if g < 0 or 2 * g - 2 + n <= 0:
        return None
    return g


def build_free_energy(max_index: int, max_degree: int, cache: CorrelatorCache | None = None) -> SparseSeries:
    """F = sum_g <exp sum_n t~_n sigma~_n>_g truncated to the window."""
    coeffs = {}
    for mono in monomials(max_index, max_degree, 1):
        g = monomial_genus(mono)
        if g is None:
            continue
        value = tilde_correlator(g, mono, cache)
        if value:
            coeffs[mono] = value / _sym(mono)
    return SparseSeries(coeffs, max_index, max_degree)


def _divisors(mono: Monomial):
    for _, xs, ys in sub_multisets(mono):
        yield xs, ys


def series_exp(f: SparseSeries) -> SparseSeries:
    """exp(f) for f without constant term, via deg(M) E_M = sum_Q deg(Q) f_Q E_{M/Q}."""
    if f[()]:
        raise ValueError("series_exp needs a series without constant term")
    out: dict[Monomial, Fraction] = {(): Fraction(1)}
    for mono in monomials(f.max_index, f.max_degree, 1):
        acc = Fraction(0)
        for q, rest in _divisors(mono):
            if not q:
                continue
            fq = f.coeffs.get(q)
            if fq is None:
                continue
            er = out.get(rest)
            if er is not None:
                acc += len(q) * fq * er
        if acc:
            out[mono] = acc / len(mono)
    return SparseSeries(out, f.max_index, f.max_degree)


def series_log(e: SparseSeries) -> SparseSeries:
    if e[()] != 1:
        raise ValueError("series_log needs constant term 1")
    out: dict[Monomial, Fraction] = {}
    for mono in monomials(e.max_index, e.max_degree, 1):
        acc = e.coeffs.get(mono, Fraction(0)) * len(mono)
        for q, rest in _divisors(mono):
            if not q or not rest:
                continue
            fq = out.get(q)
            if fq is None:
                continue
            er = e.coeffs.get(rest)
            if er is not None:
                acc -= len(q) * fq * er
        if acc:
            out[mono] = acc / len(mono)
    return SparseSeries(out, e.max_index, e.max_degree)


def tau_function(max_index: int, max_degree: int, cache: CorrelatorCache | None = None) -> SparseSeries:
    return series_exp(build_free_energy(max_index, max_degree, cache))


@dataclass(frozen=True)
class VirasoroOperator:
    """L_n = -1/2 d/dt~_f + sum_k (k+1/2) t~_k d/dt~_{k+n} + extra terms.

    ``first_index`` is f. The extra term is t~_0^2/4 for n = -1, the
    constant 1/16 for n = 0 and 1/4 sum_{i=1}^n d^2/dt~_{i-1}dt~_{n-i} for
    n >= 1.
    """

    n: int
    first_index: int

    @classmethod
    def of(cls, n: int, convention: str = "n+1") -> "VirasoroOperator":
        if n < -1:
            raise ValueError(f"L_n is defined for n >= -1, got {n}")
        if n == -1:
            first = 0
        elif n == 0:
            first = 1
        elif convention == "n+1":
            first = n + 1
        elif convention == "n-1":
            first = n - 1
        else:
            raise ValueError(f"unknown operator convention {convention!r}")
        return cls(n, first)

    @property
    def constant(self) -> Fraction:
        return Fraction(1, 16) if self.n == 0 else Fraction(0)

    def output_window(self, s: SparseSeries) -> tuple[int, int]:
        if self.first_index > s.max_index or self.n - 1 > s.max_index:
            raise ValueError(f"window K={s.max_index} too small for L_{self.n}")
        return min(s.max_index, s.max_index - self.n), s.max_degree - 2

    def apply(self, s: SparseSeries) -> SparseSeries:
        n, f = self.n, self.first_index
        max_index, max_degree = self.output_window(s)
        c = s.coeffs
        zero = Fraction(0)
        out: dict[Monomial, Fraction] = {}
        for mono in monomials(max_index, max_degree):
            counts = Counter(mono)
            acc = zero
            up = _mono(mono + (f,))
            acc -= HALF * (counts[f] + 1) * c.get(up, zero)
            for k in counts:
                target = k + n
                if target < 0:
                    continue
                shifted = list(mono)
                shifted.remove(k)
                shifted = _mono(shifted + [target])
                val = c.get(shifted)
                if val:
                    acc += (k + HALF) * Counter(shifted)[target] * val
            if n == -1 and counts[0] >= 2:
                low = list(mono)
                low.remove(0)
                low.remove(0)
                acc += QUARTER * c.get(tuple(low), zero)
            elif n == 0:
                acc += self.constant * c.get(mono, zero)
            elif n >= 1:
                for i in range(1, n + 1):
                    a, b = i - 1, n - i
                    big = _mono(mono + (a, b))
                    val = c.get(big)
                    if val:
                        bc = Counter(big)
                        mult = bc[a] * (bc[b] - 1) if a == b else bc[a] * bc[b]
                        acc += QUARTER * mult * val
            if acc:
                out[mono] = acc
        return SparseSeries(out, max_index, max_degree)


def apply_virasoro(n: int, s: SparseSeries, convention: str = "n+1") -> SparseSeries:
    """Apply L_n and keep only coefficients fully determined by the window of ``s``."""
    return VirasoroOperator.of(n, convention).apply(s)


def virasoro_residual(n: int, max_index: int, max_degree: int, convention: str = "n+1",
                      cache: CorrelatorCache | None = None, tau: SparseSeries | None = None) -> SparseSeries:
    """L_n tau on its reliable window; identically zero when the constraint holds."""
    if tau is None:
        tau = tau_function(max_index, max_degree, cache)
    return apply_virasoro(n, tau, convention)


def convention_report(ns: Iterable[int], max_index: int, max_degree: int,
                      cache: CorrelatorCache | None = None) -> dict[str, dict[int, bool]]:
    """For each first-term convention, whether L_n tau vanishes for each n."""
    tau = tau_function(max_index, max_degree, cache)
    report: dict[str, dict[int, bool]] = {}
    for conv in ("n+1", "n-1"):
        report[conv] = {n: virasoro_residual(n, max_index, max_degree, conv, tau=tau).is_zero() for n in ns}
    return report
