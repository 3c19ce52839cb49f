"""Verification suites. Each yields ``CheckResult`` records; default bounds are
the acceptance ranges and can be overridden through ``Bounds``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

import mpmath

from . import asymptotics as asym
from .combinatorics import format_rational, partitions
from .hodge import (
    cutjoin_relation_sides,
    elsv_rhs,
    extract_hodge_table,
    starstar_report,
    theorem1_report,
)
from .hurwitz import (
    HurwitzKey,
    cut_join_sides,
    factorization_count_frobenius,
    hurwitz_gamma,
    hurwitz_number,
    single_hurwitz,
)
from .psi import (
    correlator_keys,
    genus0_closed_form,
    one_point_closed_form,
    psi_correlator,
    sharp_vs_star_check,
)
from .virasoro import convention_report, tau_function, virasoro_residual

__all__ = ["Bounds", "CheckResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    inputs: str
    passed: bool
    witness: str = ""


@dataclass
class Bounds:
    max_index: int = 7
    max_degree: int = 6
    precision_bits: int = 128
    starstar_bits: int = 256
    max_genus: int | None = None
    max_points: int | None = None
    extra: dict = field(default_factory=dict)


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, 15)
    return str(x)


def _label(mu) -> str:
    return "(" + ",".join(map(str, mu)) + ")"


def dvv_suite(b: Bounds) -> Iterator[CheckResult]:
    max_n = b.max_points or 9
    for n in range(3, max_n + 1):
        for ks in correlator_keys(0, n):
            got, want = psi_correlator(0, ks), genus0_closed_form(ks)
            yield CheckResult("genus0-closed-form", f"k={_label(ks)}", got == want, f"{_fmt(got)} vs {_fmt(want)}")
    for g in range(1, (b.max_genus or 3) + 1):
        got, want = psi_correlator(g, [3 * g - 2]), one_point_closed_form(g)
        yield CheckResult("one-point-closed-form", f"g={g}", got == want, f"{_fmt(got)} vs {_fmt(want)}")
    for g in range(0, min(b.max_genus or 2, 2) + 1):
        for n in range(1, min(max_n, 7) + 1):
            if 2 * g - 2 + n <= 0:
                continue
            for ks in correlator_keys(g, n):
                ks = list(ks)
                lhs_s = psi_correlator(g, ks + [0])
                rhs_s = sum((psi_correlator(g, ks[:i] + [ks[i] - 1] + ks[i + 1:]) for i in range(n) if ks[i] > 0),
                            Fraction(0))
                yield CheckResult("string", f"g={g} k={_label(ks)}", lhs_s == rhs_s, f"{_fmt(lhs_s)} vs {_fmt(rhs_s)}")
                lhs_d = psi_correlator(g, ks + [1])
                rhs_d = (2 * g - 2 + n) * psi_correlator(g, ks)
                yield CheckResult("dilaton", f"g={g} k={_label(ks)}", lhs_d == rhs_d, f"{_fmt(lhs_d)} vs {_fmt(rhs_d)}")


def sharp_suite(b: Bounds) -> Iterator[CheckResult]:
    for g in range(0, (b.max_genus if b.max_genus is not None else 2) + 1):
        for n in range(1, (b.max_points or 5) + 1):
            if 2 * g - 2 + n <= 0:
                continue
            for ks in correlator_keys(g, n):
                ok = sharp_vs_star_check(g, ks)
                yield CheckResult("sharp-vs-star", f"g={g} k={_label(ks)}", ok)


def virasoro_suite(b: Bounds) -> Iterator[CheckResult]:
    tau = tau_function(b.max_index, b.max_degree)
    for n in range(-1, 5):
        res = virasoro_residual(n, b.max_index, b.max_degree, tau=tau)
        witness = "" if res.is_zero() else f"{len(res)} nonzero coefficients, first {res.sorted_items()[0]}"
        yield CheckResult("virasoro", f"n={n} K={b.max_index} D={b.max_degree}", res.is_zero(), witness)
    report = convention_report(range(-1, 5), b.max_index, b.max_degree)
    satisfying = [c for c, per_n in report.items() if all(per_n.values())]
    yield CheckResult("virasoro-convention", "first index n+1 vs n-1", satisfying == ["n+1"],
                      f"satisfied by {','.join(satisfying) or 'none'}")


def elsv_suite(b: Bounds) -> Iterator[CheckResult]:
    for d in range(1, 6):
        for mu in partitions(d):
            if len(mu) < 3:
                continue
            got, want = elsv_rhs(0, mu), single_hurwitz(0, mu)
            yield CheckResult("elsv-genus0", f"mu={_label(mu)}", got == want, f"{_fmt(got)} vs {_fmt(want)}")
    result = extract_hodge_table()
    worst = max((abs(r) for r in result.residuals), default=Fraction(0))
    yield CheckResult("hodge-extraction", f"{len(result.equations)} equations, {len(result.unknowns)} unknowns",
                      result.consistent and result.surplus > 0, f"max residual {_fmt(worst)}")
    value = result.table.lookup(1, (0,), 1)
    yield CheckResult("lambda1-one-point", "g=1 n=1", value == Fraction(1, 24), _fmt(value))


HURWITZ_CUTJOIN_CASES = ((0, (1, 1, 1)), (0, (2, 1)), (1, (1,)), (1, (2,)))


def hurwitz_suite(b: Bounds) -> Iterator[CheckResult]:
    for d in range(1, 6):
        for nu in partitions(d):
            for mu in partitions(d):
                for r in range(7):
                    bf = hurwitz_number(nu, mu, r, connected=False)
                    fr = factorization_count_frobenius(HurwitzKey(nu, mu, r, False))
                    yield CheckResult("brute-vs-frobenius", f"nu={_label(nu)} mu={_label(mu)} r={r}", bf == fr,
                                      f"{_fmt(bf)} vs {_fmt(fr)}")
    for nu, mu, r, want in (((1, 1, 1), (1, 1, 1), 4, Fraction(4)), ((1, 1), (1, 1), 2, Fraction(1, 2))):
        got = hurwitz_number(nu, mu, r)
        yield CheckResult("hurwitz-connected", f"nu={_label(nu)} mu={_label(mu)} r={r}", got == want, _fmt(got))


def cutjoin_suite(b: Bounds) -> Iterator[CheckResult]:
    gamma = hurwitz_gamma()
    for g, mu in HURWITZ_CUTJOIN_CASES:
        sides = cut_join_sides(g, mu, gamma)
        yield CheckResult("cutjoin-hurwitz", f"g={g} mu={_label(mu)}", sides.holds,
                          f"{_fmt(sides.lhs)} vs {_fmt(sides.rhs)}")
    for g in range(0, 2):
        for d in range(1, 5):
            for mu in partitions(d):
                if 2 * g - 2 + d + len(mu) <= 0:
                    continue
                sides = cutjoin_relation_sides(g, mu)
                yield CheckResult("cutjoin-hodge", f"g={g} mu={_label(mu)}", sides.holds,
                                  f"{_fmt(sides.lhs)} vs {_fmt(sides.rhs)}")


THEOREM1_CASES = tuple((mu, e) for mu in ((1,), (2,), (1, 1)) for e in ((), (1,)))


def theorem1_suite(b: Bounds) -> Iterator[CheckResult]:
    for mu, e in THEOREM1_CASES:
        rep = theorem1_report(mu, e)
        nonzero = {a: v for a, v in rep.coefficients.items() if v}
        witness = (f"chi in {rep.chi_values}" if not nonzero
                   else "nonzero " + ", ".join(f"[lambda^{a}]={_fmt(v)}" for a, v in nonzero.items()))
        yield CheckResult("theorem1", f"mu={_label(mu)} e={_label(e)}", rep.passed, witness)


STARSTAR_CASES = (
    (0, (1, 0, 0, 0), (("0.7", "1.3", "2.1", "0.45"), ("1.9", "0.6", "1.2", "3.3"))),
    (1, (1,), (("1",),)),
    (2, (4,), (("1",),)),
)


def starstar_suite(b: Bounds) -> Iterator[CheckResult]:
    for g, ks, samples in STARSTAR_CASES:
        rep = starstar_report(g, ks, samples, b.starstar_bits)
        yield CheckResult("starstar", f"g={g} k={_label(ks)} bits={b.starstar_bits}", rep.passed,
                          f"max relative residual {_fmt(rep.max_relative)}; roundoff only: {rep.roundoff_only}")


def asymptotic_suite(b: Bounds) -> Iterator[CheckResult]:
    for k in range(4):
        for l in range(4):
            rep = asym.asym_leading_check(k, l, precision_bits=b.precision_bits)
            yield CheckResult("asymptotic-first", f"k={k} l={l}", rep.passed,
                              f"ratio {_fmt(rep.extrapolated)} target {_fmt(rep.target)}")
    for k in range(4):
        rep = asym.asym_leading_check(k, asym.SECOND, precision_bits=b.precision_bits)
        yield CheckResult("asymptotic-second", f"k={k}", rep.passed,
                          f"extrapolated {_fmt(rep.extrapolated)} target {_fmt(rep.target)}")


def laplace_suite(b: Bounds) -> Iterator[CheckResult]:
    for k in range(7):
        for s in (Fraction(1, 2), Fraction(1), Fraction(2)):
            ok = asym.laplace_check(k, s, b.precision_bits)
            yield CheckResult("laplace", f"k={k} s={_fmt(s)}", ok)


JOIN_CASES = ((0, 1, 4), (1, 1, 2), (2, 1, 2), (2, 3, "0.5"))


def join_suite(b: Bounds) -> Iterator[CheckResult]:
    for k, yi, yj in JOIN_CASES:
        numeric, reduced, closed = asym.join_integral_values(k, yi, yj, b.precision_bits)
        ok = asym.join_integral_check(k, yi, yj, b.precision_bits)
        yield CheckResult("join-integral", f"k={k} yi={yi} yj={yj}", ok,
                          f"quad {_fmt(numeric)} closed {_fmt(closed)}")


STIRLING_CASES = (((1,), (0,)), ((1, 1), (1, 0)), ((2, 1), (0, 0)))


def stirling_suite(b: Bounds) -> Iterator[CheckResult]:
    for x, ks in STIRLING_CASES:
        rep = asym.stirling_stratum_check(x, ks, precision_bits=b.precision_bits)
        yield CheckResult("stirling", f"x={_label(x)} k={_label(ks)}", rep.passed,
                          f"N(ratio-1) {_fmt(rep.extrapolated)} target {_fmt(rep.target)}")


SUITES: dict[str, Callable[[Bounds], Iterator[CheckResult]]] = {
    "dvv": dvv_suite,
    "sharp": sharp_suite,
    "virasoro": virasoro_suite,
    "hurwitz": hurwitz_suite,
    "elsv": elsv_suite,
    "cutjoin": cutjoin_suite,
    "theorem1": theorem1_suite,
    "starstar": starstar_suite,
    "asymptotic": asymptotic_suite,
    "laplace": laplace_suite,
    "join-integral": join_suite,
    "stirling": stirling_suite,
}


def run_suite(name: str, bounds: Bounds | None = None) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return list(SUITES[name](bounds or Bounds()))

