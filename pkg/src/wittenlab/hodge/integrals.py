"""Linear Hodge integrals, the ELSV right-hand side and the genus-1 one-lambda
table recovered from Hurwitz numbers.

Integrands have the shape

    Lambda^vee_g(1) prod_e (1 - psi)^{e} / prod_i (1 - w_i psi_i)

with Lambda^vee_g(1) = sum_j (-1)^j lambda_j. They expand into integrals
<lambda_j prod tau_{b_i}>_g, taken from the psi recursion for j = 0 and from
the extracted table for (g, j) = (1, 1). Everything else needed raises
``HodgeDataMissing``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from ..combinatorics import Partition, partitions
from ..hurwitz import simple_branch_count, single_hurwitz
from ..linalg import solve_exact
from ..psi import psi_correlator

__all__ = [
    "HodgeDataMissing",
    "HodgeKey",
    "HodgeTable",
    "ExtractionResult",
    "lambda_integral",
    "hodge_expansion",
    "hodge_rational_integral",
    "gamma_r",
    "elsv_rhs",
    "extract_hodge_table",
    "default_hodge_table",
    "mumford_genus1",
]


class HodgeDataMissing(LookupError):
    pass


@dataclass(frozen=True, order=True)
class HodgeKey:
    genus: int
    exponents: tuple[int, ...]
    lambda_index: int

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(sorted(self.exponents, reverse=True)))

    @property
    def dimension_ok(self) -> bool:
        n = len(self.exponents)
        return sum(self.exponents) + self.lambda_index == 3 * self.genus - 3 + n

    def label(self) -> str:
        return f"{self.genus}|{','.join(map(str, self.exponents))}|{self.lambda_index}"


@dataclass
class HodgeTable:
    """Solved one-lambda integrals plus the largest n they cover per genus.

    Lookups beyond ``n_max`` in genus 1 use the string equation, which holds
    for integrands with lambda classes because they pull back under
    forgetting a point.
    """

    values: dict[HodgeKey, Fraction] = field(default_factory=dict)
    n_max: int = 0

    def lookup(self, g: int, ks: tuple[int, ...], j: int) -> Fraction:
        key = HodgeKey(g, ks, j)
        if key in self.values:
            return self.values[key]
        if g != 1 or j != 1:
            raise HodgeDataMissing(f"no value for <lambda_{j} tau_{key.exponents}>_{g}")
        ks = key.exponents
        if len(ks) <= self.n_max:
            raise HodgeDataMissing(f"table lacks {key.label()}")
        if 0 not in ks:
            return Fraction(0)
        rest = list(ks)
        rest.remove(0)
        total = Fraction(0)
        for i in range(len(rest)):
            if rest[i] > 0:
                lowered = rest[:i] + [rest[i] - 1] + rest[i + 1:]
                total += lambda_integral(1, lowered, 1, self)
        return total

    def items(self):
        return sorted(self.values.items())


def mumford_genus1(exponents: Sequence[int]) -> Fraction:
    """<lambda_1 prod tau_{k_i}>_1 = (1/24) multinomial(n-1; k), used as an oracle."""
    ks = list(exponents)
    n = len(ks)
    if sum(ks) != n - 1:
        return Fraction(0)
    return Fraction(factorial(n - 1), 24 * prod(factorial(k) for k in ks))


def lambda_integral(g: int, exponents: Iterable[int], j: int, table: HodgeTable | None = None) -> Fraction:
    """<lambda_j prod tau_{k_i}>_g on a stable moduli space."""
    ks = tuple(sorted(exponents, reverse=True))
    n = len(ks)
    if 2 * g - 2 + n <= 0:
        raise ValueError(f"(g, n) = ({g}, {n}) is unstable")
    if (ks and ks[-1] < 0) or j < 0 or j > g or sum(ks) + j != 3 * g - 3 + n:
        return Fraction(0)
    if j == 0:
        return psi_correlator(g, ks)
    if table is None:
        table = default_hodge_table()
    return table.lookup(g, ks, j)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def hodge_expansion(g: int, weights: Sequence, e_powers: Sequence[int] = (), dual: bool = True):
    """Yield (coefficient, j, exponents) with the integral equal to
    sum coefficient * <lambda_j prod tau_exponents>_g. Exponents list the
    weighted points first, then the e-points."""
    weights = [Fraction(w) for w in weights]
    n = len(weights) + len(e_powers)
    for j in range(g + 1):
        sign = -1 if dual and j % 2 else 1
        deg = 3 * g - 3 + n - j
        if deg < 0:
            continue
        for comp in _compositions(deg, n):
            bs, cs = comp[: len(weights)], comp[len(weights):]
            coef = Fraction(sign)
            for w, b in zip(weights, bs):
                coef *= w**b
            for e, c in zip(e_powers, cs):
                coef *= comb(e, c) * (-1) ** c
            if coef:
                yield coef, j, comp


def _unstable_value(weights: Sequence[Fraction], e_powers: Sequence[int]) -> Fraction:
    if len(weights) == 1 and not e_powers:
        return 1 / weights[0] ** 2
    if len(weights) == 2 and not e_powers:
        return 1 / (weights[0] + weights[1])
    if len(weights) == 1 and len(e_powers) == 1:
        a = weights[0]
        return (1 / a) * (1 + 1 / a) ** e_powers[0]
    raise ValueError(f"no convention for genus 0 with {len(weights)} weighted and {len(e_powers)} plain points")


def hodge_rational_integral(g: int, weights: Sequence, dual: bool = True, e_powers: Sequence[int] = (),
                            table: HodgeTable | None = None) -> Fraction:
    """Integral of Lambda^vee_g(1) prod (1-psi)^e / prod (1 - w_i psi_i) over M_{g,n}.

    With ``dual=False`` the integrand uses Lambda_g(1) = sum_j lambda_j. Genus-0
    one- and two-point integrals use the conventions 1/w^2, 1/(w1+w2) and,
    for one weighted and one plain point, (1/a)(1+1/a)^e.
    """
    weights = [Fraction(w) for w in weights]
    n = len(weights) + len(e_powers)
    if g == 0 and n <= 2:
        return _unstable_value(weights, e_powers)
    if 2 * g - 2 + n <= 0:
        raise ValueError(f"(g, n) = ({g}, {n}) is unstable")
    total = Fraction(0)
    for coef, j, comp in hodge_expansion(g, weights, e_powers, dual):
        total += coef * lambda_integral(g, comp, j, table)
    return total


def _prefactor(mu: Partition) -> Fraction:
    out = Fraction(1, mu.aut_order())
    for m in mu:
        out *= Fraction(m**m, factorial(m))
    return out


def gamma_r(g: int, mu: Iterable[int], table: HodgeTable | None = None) -> Fraction:
    """1/|Aut mu| prod mu_i^mu_i / mu_i! times the ELSV integral; 0 for g < 0."""
    mu = Partition(mu)
    if g < 0 or not mu:
        return Fraction(0)
    return _prefactor(mu) * hodge_rational_integral(g, list(mu), table=table)


def elsv_rhs(g: int, mu: Iterable[int], table: HodgeTable | None = None) -> Fraction:
    """r!/|Aut mu| prod mu_i^mu_i/mu_i! int Lambda^vee_g(1) / prod (1 - mu_i psi_i)."""
    mu = Partition(mu)
    r = simple_branch_count(g, mu)
    if r < 0:
        raise ValueError(f"no simple branch points for g={g}, mu={tuple(mu)}")
    return factorial(r) * gamma_r(g, mu, table)


@dataclass(frozen=True)
class ExtractionResult:
    table: HodgeTable
    unknowns: tuple[HodgeKey, ...]
    equations: tuple[Partition, ...]
    residuals: tuple[Fraction, ...]

    @property
    def consistent(self) -> bool:
        return not any(self.residuals)

    @property
    def surplus(self) -> int:
        return len(self.equations) - len(self.unknowns)


def _genus1_unknowns(n_max: int) -> list[HodgeKey]:
    keys = []
    for n in range(1, n_max + 1):
        for part in partitions(n - 1, None):
            if len(part) <= n:
                keys.append(HodgeKey(1, tuple(part) + (0,) * (n - len(part)), 1))
    return keys


def extract_hodge_table(genus: int = 1, n_max: int = 3, d_max: int = 5, r_max: int = 8) -> ExtractionResult:
    """Solve ELSV equations H_{1,mu} = elsv_rhs(1, mu) for the unknowns <lambda_1 prod tau>_1.

    One equation per mu with l(mu) <= n_max, |mu| <= d_max and at most
    ``r_max`` branch points; Hurwitz numbers come from exhaustive counting.
    """
    if genus != 1:
        raise HodgeDataMissing("only genus-1 one-lambda integrals are extracted")
    unknowns = _genus1_unknowns(n_max)
    column = {k: i for i, k in enumerate(unknowns)}
    rows, rhs, eqs = [], [], []
    for d in range(1, d_max + 1):
        for mu in partitions(d):
            r = simple_branch_count(1, mu)
            if mu.length > n_max or r > r_max:
                continue
            pre = factorial(r) * _prefactor(mu)
            row = [Fraction(0)] * len(unknowns)
            known = Fraction(0)
            for coef, j, comp in hodge_expansion(1, list(mu)):
                if j == 0:
                    known += coef * psi_correlator(1, comp)
                else:
                    key = HodgeKey(1, comp, 1)
                    if key.dimension_ok:
                        row[column[key]] += pre * coef
            rows.append(row)
            rhs.append(single_hurwitz(1, mu, budget=(d_max, r_max)) - pre * known)
            eqs.append(mu)
    solution = solve_exact(rows, rhs)
    table = HodgeTable(dict(zip(unknowns, solution.values)), n_max)
    return ExtractionResult(table, tuple(unknowns), tuple(eqs), solution.residuals)


_default: HodgeTable | None = None


def default_hodge_table() -> HodgeTable:
    global _default
    if _default is None:
        _default = extract_hodge_table().table
    return _default
