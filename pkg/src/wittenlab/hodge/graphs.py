"""Graph contributions to the cut-and-join relation on the Hodge side.

Every contribution is a product of ELSV-normalized values

    Gamma_{g,mu} = 1/|Aut mu| prod mu_i^mu_i / mu_i! int Lambda^vee_g(1) / prod (1 - mu_i psi_i)

evaluated at the partition the graph produces.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..combinatorics import Partition
from ..hurwitz.cutjoin import CutJoinSides, cut_join_sides
from .integrals import HodgeTable, gamma_r

__all__ = ["GAMMA_KINDS", "GammaEvaluation", "gamma_value", "cutjoin_relation_sides", "cutjoin_relation_check",
           "positional_relation_sides"]

GAMMA_KINDS = ("r", "J", "C1", "C2")


class GammaEvaluation(tuple):
    """(kind, g, mu, indices, value)."""

    @property
    def value(self) -> Fraction:
        return self[4]


def _check_position(mu: Partition, i: int) -> None:
    if not 0 <= i < len(mu):
        raise IndexError(f"position {i} outside partition of length {len(mu)}")


def gamma_value(kind: str, g: int, mu, indices: Sequence = (), table: HodgeTable | None = None) -> Fraction:
    """Contribution of one graph. Positions are 0-based into the sorted partition.

    - ``"r"``: no indices.
    - ``"J"``: (i, j), parts i and j joined.
    - ``"C1"``: (i, p), part i cut into p and mu_i - p on a genus g-1 vertex.
    - ``"C2"``: (i, p, g1, X) with X the positions (other than i) on the vertex
      of genus g1 that carries p; the other vertex carries mu_i - p.
    """
    mu = Partition(mu)
    if kind == "r":
        return gamma_r(g, mu, table)
    if kind == "J":
        i, j = indices
        _check_position(mu, i)
        _check_position(mu, j)
        if i == j:
            raise ValueError("join needs two distinct positions")
        return gamma_r(g, mu.remove(mu[i], mu[j]).add(mu[i] + mu[j]), table)
    if kind in ("C1", "C2"):
        i, p = indices[0], indices[1]
        _check_position(mu, i)
        if not 1 <= p < mu[i]:
            raise ValueError(f"cut piece {p} must lie in [1, {mu[i] - 1}]")
        q = mu[i] - p
        if kind == "C1":
            return gamma_r(g - 1, mu.remove(mu[i]).add(p, q), table)
        g1, xs = indices[2], set(indices[3])
        if i in xs or any(not 0 <= x < len(mu) for x in xs):
            raise ValueError("split positions must avoid the cut part")
        if not 0 <= g1 <= g:
            raise ValueError(f"vertex genus {g1} outside [0, {g}]")
        left = Partition([mu[x] for x in xs]).add(p)
        right = Partition([mu[x] for x in range(len(mu)) if x != i and x not in xs]).add(q)
        return gamma_r(g1, left, table) * gamma_r(g - g1, right, table)
    raise ValueError(f"unknown graph kind {kind!r}")


def cutjoin_relation_sides(g: int, mu, table: HodgeTable | None = None) -> CutJoinSides:
    return cut_join_sides(g, mu, lambda h, nu: gamma_r(h, nu, table))


def cutjoin_relation_check(g: int, mu, table: HodgeTable | None = None) -> bool:
    """r Gamma_r equals the weighted sum over distinct joins and cuts, exactly."""
    return cutjoin_relation_sides(g, mu, table).holds


def positional_relation_sides(g: int, mu, table: HodgeTable | None = None) -> CutJoinSides:
    """The relation summed literally over positions: i, j != i for joins,
    p = 1 .. mu_i - 1 for cuts and every (g1, subset) for splittings, without
    multiplicity factors. Kept to compare against the distinct-move form."""
    mu = Partition(mu)
    n = len(mu)
    r = 2 * g - 2 + mu.size + n
    lhs = r * gamma_value("r", g, mu, (), table)
    rhs = Fraction(0)
    for i in range(n):
        for j in range(n):
            if j != i:
                w = Fraction(mu[i] + mu[j], 2 if mu[i] == mu[j] else 1)
                rhs += w * gamma_value("J", g, mu, (i, j), table)
        others = [x for x in range(n) if x != i]
        for p in range(1, mu[i]):
            q = mu[i] - p
            w = Fraction(p * q, 2 if p == q else 1)
            acc = gamma_value("C1", g, mu, (i, p), table) if g >= 1 else Fraction(0)
            for mask in range(1 << len(others)):
                xs = [others[b] for b in range(len(others)) if mask >> b & 1]
                for g1 in range(g + 1):
                    acc += gamma_value("C2", g, mu, (i, p, g1, xs), table)
            rhs += w * acc
    return CutJoinSides((lhs, rhs))
