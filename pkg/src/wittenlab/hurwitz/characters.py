"""Irreducible characters of S_d by the Murnaghan-Nakayama rule, and the
character-sum formula for disconnected double Hurwitz numbers."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..combinatorics import Partition, conjugacy_class_size, partitions, z_order

__all__ = ["mn_character", "CharacterTable", "character_table", "central_character", "frobenius_hurwitz"]


def _beta_to_partition(beta: list[int]) -> tuple[int, ...]:
    length = len(beta)
    parts = [b - (length - 1 - i) for i, b in enumerate(sorted(beta, reverse=True))]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def mn_character(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """chi^lam evaluated on the class of cycle type rho.

    Rim hooks of length rho[0] are removed on the beta-set (abacus) of lam:
    moving a bead from b to b - h removes a hook of height equal to the
    number of beads strictly between the two positions.
    """
    if not rho:
        return 1 if not lam else 0
    h, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - h
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = [nb if x == b else x for x in beta]
        sign = -1 if height % 2 else 1
        total += sign * mn_character(_beta_to_partition(new_beta), rest)
    return total


class CharacterTable:
    """Character table of S_d with rows (irreducibles) and columns (classes)
    both indexed by partitions of d in reverse lexicographic order."""

    def __init__(self, d: int):
        self.degree = d
        self.partitions = list(partitions(d))
        self.values = {(lam, rho): mn_character(tuple(lam), tuple(rho))
                       for lam in self.partitions for rho in self.partitions}

    def __call__(self, lam, rho) -> int:
        return self.values[(Partition(lam), Partition(rho))]

    def class_size(self, rho) -> int:
        return conjugacy_class_size(rho)

    def dimension(self, lam) -> int:
        return self(lam, [1] * self.degree)

    def column_orthogonality_ok(self) -> bool:
        d_fact = factorial(self.degree)
        for rho in self.partitions:
            for sig in self.partitions:
                s = sum(self(lam, rho) * self(lam, sig) for lam in self.partitions)
                expected = z_order(rho) if rho == sig else 0
                if s != expected:
                    return False
            if sum(self(lam, rho) ** 2 for lam in self.partitions) * self.class_size(rho) != d_fact:
                return False
        return True

    def row_orthogonality_ok(self) -> bool:
        d_fact = factorial(self.degree)
        for lam in self.partitions:
            for kap in self.partitions:
                s = sum(self.class_size(rho) * self(lam, rho) * self(kap, rho) for rho in self.partitions)
                if s != (d_fact if lam == kap else 0):
                    return False
        return True


@lru_cache(maxsize=None)
def character_table(d: int) -> CharacterTable:
    return CharacterTable(d)


def central_character(lam, table: CharacterTable | None = None) -> Fraction:
    """|C_t| chi^lam(t) / dim lam for the class t of transpositions."""
    lam = Partition(lam)
    d = lam.size
    if d < 2:
        return Fraction(0)
    table = table or character_table(d)
    t = Partition([2] + [1] * (d - 2))
    return Fraction(table.class_size(t) * table(lam, t), table.dimension(lam))


def frobenius_hurwitz(nu, mu, r: int) -> Fraction:
    """Disconnected double Hurwitz number from characters::

        H = 1/(z_nu z_mu) sum_lam chi^lam(nu) chi^lam(mu) f_lam^r

    with f_lam the central character of a transposition.
    """
    nu, mu = Partition(nu), Partition(mu)
    if nu.size != mu.size:
        raise ValueError("|nu| must equal |mu|")
    d = nu.size
    if d == 0:
        return Fraction(1 if r == 0 else 0)
    table = character_table(d)
    total = Fraction(0)
    for lam in table.partitions:
        f = central_character(lam, table)
        total += table(lam, nu) * table(lam, mu) * f**r
    return total / (z_order(nu) * z_order(mu))
