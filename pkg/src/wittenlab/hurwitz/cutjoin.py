"""The cut-and-join recursion for single Hurwitz numbers.

With Gamma_{g,mu} = H_{g,mu} / r! and r = 2g - 2 + |mu| + l(mu), the
coefficient of p_mu in the cut-and-join equation reads

    r Gamma_{g,mu} = sum_joins w m_{a+b}(eta) Gamma_{g,eta}
                   + sum_cuts  w [ M Gamma_{g-1,nu}
                                   + sum m_p(A) m_q(B) Gamma_{g1,A} Gamma_{g2,B} ]

where joins and cuts run over distinct moves of ``cut_join_moves``, w is the
move weight, the multiplicity factors m count the parts the derivative can
hit, and in the last sum A = alpha + p, B = beta + q range over splittings
of mu minus the cut part with g1 + g2 = g.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable

from ..combinatorics import Partition, cut_join_moves, sub_multisets
from .factorizations import simple_branch_count, single_hurwitz

__all__ = ["CutJoinSides", "cut_join_sides", "cutjoin_hurwitz_check", "hurwitz_gamma"]

GammaFn = Callable[[int, Partition], Fraction]


class CutJoinSides(tuple):
    """(lhs, rhs) of the relation, both as exact rationals."""

    @property
    def lhs(self) -> Fraction:
        return self[0]

    @property
    def rhs(self) -> Fraction:
        return self[1]

    @property
    def holds(self) -> bool:
        return self[0] == self[1]


def _pair_multiplicity(part: Partition, p: int, q: int) -> int:
    mp = part.multiplicity(p)
    return mp * (mp - 1) if p == q else mp * part.multiplicity(q)


def cut_join_sides(g: int, mu, gamma: GammaFn) -> CutJoinSides:
    """Both sides of the recursion with Gamma supplied by ``gamma(g, mu)``.

    ``gamma`` must return 0 for negative genus and handle every genus-0 one-
    and two-part partition the cuts produce.
    """
    mu = Partition(mu)
    r = simple_branch_count(g, mu)
    lhs = r * gamma(g, mu)
    rhs = Fraction(0)
    for move in cut_join_moves(mu):
        if move.kind == "join":
            eta = move.result
            rhs += move.weight * eta.multiplicity(move.created[0]) * gamma(g, eta)
            continue
        c, p = move.parts
        q = c - p
        if g >= 1:
            nu = move.result
            rhs += move.weight * _pair_multiplicity(nu, p, q) * gamma(g - 1, nu)
        rest = mu.remove(c)
        seen = set()
        split = Fraction(0)
        for _, xs, ys in sub_multisets(rest):
            if xs in seen:
                continue
            seen.add(xs)
            a, b = Partition(xs).add(p), Partition(ys).add(q)
            mult = a.multiplicity(p) * b.multiplicity(q)
            for g1 in range(g + 1):
                split += mult * gamma(g1, a) * gamma(g - g1, b)
        rhs += move.weight * split
    return CutJoinSides((lhs, rhs))


def hurwitz_gamma(budget=None) -> GammaFn:
    def gamma(g: int, mu: Partition) -> Fraction:
        r = simple_branch_count(g, mu)
        if g < 0 or r < 0:
            return Fraction(0)
        return single_hurwitz(g, mu, budget) / factorial(r)
    return gamma


def cutjoin_hurwitz_check(g: int, mu, budget=None) -> bool:
    """Cut-and-join equation with every Hurwitz number brute-forced."""
    return cut_join_sides(g, mu, hurwitz_gamma(budget)).holds
