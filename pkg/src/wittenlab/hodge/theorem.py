"""Coefficient check of

    [lambda^{l(mu) - chi}] sum_{|nu| = |mu|} Phi*_{mu,nu}(-lambda) z_nu D*_{nu,e}(lambda) = 0

where Phi* collects disconnected double Hurwitz numbers as
sum_r H*(mu, nu, r) lambda^r / r! and D* = exp(D) with

    D = sum lambda^{2g-2+l(nu)} p_nu q_e D_{g,nu,e},
    D_{g,nu,e} = 1/(l(e)! |Aut nu|) prod nu_i^nu_i/nu_i! int Lambda^vee_g(1) prod (1-psi_j)^{e_j} / prod (1 - nu_i psi_i).

D* is expanded lazily, one lambda-exponent at a time, so a coefficient is
available exactly when every Hodge integral it touches is known.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..combinatorics import Partition, partitions, sub_multisets, z_order
from ..hurwitz import HurwitzKey, connected_disconnected_transform, hurwitz_number, required_keys
from .integrals import HodgeDataMissing, HodgeTable, hodge_rational_integral

__all__ = [
    "DSeriesEntry",
    "d_connected",
    "d_bullet",
    "disconnected_hurwitz_table",
    "phi_bullet",
    "theorem1_coefficient",
    "Theorem1Report",
    "theorem1_report",
    "theorem1_check",
]

MAX_EXPONENT_SCAN = 12


@dataclass(frozen=True)
class DSeriesEntry:
    genus: int
    nu: Partition
    e: Partition
    value: Fraction


def d_connected(g: int, nu, e=(), table: HodgeTable | None = None) -> DSeriesEntry:
    nu, e = Partition(nu), Partition(e)
    if g < 0 or not nu:
        return DSeriesEntry(g, nu, e, Fraction(0))
    pre = Fraction(1, factorial(len(e)) * nu.aut_order())
    for v in nu:
        pre *= Fraction(v**v, factorial(v))
    return DSeriesEntry(g, nu, e, pre * hodge_rational_integral(g, list(nu), e_powers=list(e), table=table))


def _distinct_splits(p: Partition):
    seen = set()
    for _, xs, ys in sub_multisets(p):
        if xs not in seen:
            seen.add(xs)
            yield Partition(xs), Partition(ys)


@lru_cache(maxsize=None)
def _d_conn_coeff(nu: Partition, e: Partition, s: int) -> Fraction:
    twice_g = s + 2 - len(nu)
    if twice_g < 0 or twice_g % 2:
        return Fraction(0)
    return d_connected(twice_g // 2, nu, e).value


@lru_cache(maxsize=None)
def _d_bullet(nu: Partition, e: Partition, s: int) -> Fraction:
    if not nu:
        return Fraction(1 if not e and s == 0 else 0)
    if s < -len(nu):
        return Fraction(0)
    total = Fraction(0)
    for nu1, nu2 in _distinct_splits(nu):
        if not nu1:
            continue
        for e1, e2 in _distinct_splits(e):
            if not nu2 and e2:
                continue
            for s1 in range(-1, s + len(nu2) + 1):
                rest = _d_bullet(nu2, e2, s - s1)
                if rest:
                    total += nu1.size * _d_conn_coeff(nu1, e1, s1) * rest
    return total / nu.size


def d_bullet(nu, e, s: int) -> Fraction:
    """Coefficient of lambda^s p_nu q_e in exp(D)."""
    return _d_bullet(Partition(nu), Partition(e), s)


@lru_cache(maxsize=None)
def disconnected_hurwitz_table(d_max: int, r_max: int) -> dict[HurwitzKey, Fraction]:
    """Disconnected double Hurwitz numbers from brute-forced connected ones via exp."""
    connected = {HurwitzKey(nu, mu, r, True): hurwitz_number(nu, mu, r, True, budget=(d_max, r_max))
                 for nu, mu, r in required_keys(d_max, r_max)}
    return connected_disconnected_transform(connected, "exp")


def phi_bullet(mu, nu, r: int, r_max: int | None = None) -> Fraction:
    """H*(mu, nu, r), the coefficient of lambda^r / r! in Phi*_{mu,nu}."""
    mu, nu = Partition(mu), Partition(nu)
    if (r - len(mu) - len(nu)) % 2:
        return Fraction(0)
    table = disconnected_hurwitz_table(mu.size, max(r, r_max or 0))
    return table[HurwitzKey(mu, nu, r, False)]


def theorem1_coefficient(mu, e, a: int) -> Fraction:
    """[lambda^a] sum_nu Phi*_{mu,nu}(-lambda) z_nu D*_{nu,e}(lambda)."""
    mu, e = Partition(mu), Partition(e)
    total = Fraction(0)
    for nu in partitions(mu.size):
        for r in range(0, a + len(nu) + 1):
            h = phi_bullet(mu, nu, r)
            if not h:
                continue
            d = d_bullet(nu, e, a - r)
            if d:
                total += (-1) ** r * h / factorial(r) * z_order(nu) * d
    return total


@dataclass
class Theorem1Report:
    mu: Partition
    e: Partition
    coefficients: dict[int, Fraction] = field(default_factory=dict)
    stopped_by: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.coefficients) and not any(self.coefficients.values())

    @property
    def chi_values(self) -> list[int]:
        return [len(self.mu) - a for a in self.coefficients]


def theorem1_report(mu, e=(), chi_min: int | None = None) -> Theorem1Report:
    """Scan a = l(mu) - chi upward from the smallest value allowed by
    |e| < |mu| + l(mu) - chi. Without ``chi_min`` the scan stops at the first
    coefficient needing unavailable Hodge data."""
    mu, e = Partition(mu), Partition(e)
    report = Theorem1Report(mu, e)
    a_min = e.size - mu.size + 1
    a_max = len(mu) - chi_min if chi_min is not None else a_min + MAX_EXPONENT_SCAN
    for a in range(a_min, a_max + 1):
        try:
            report.coefficients[a] = theorem1_coefficient(mu, e, a)
        except HodgeDataMissing as exc:
            if chi_min is not None:
                raise
            report.stopped_by = str(exc)
            break
    return report


def theorem1_check(mu, e=(), chi_min: int | None = None) -> bool:
    return theorem1_report(mu, e, chi_min).passed
