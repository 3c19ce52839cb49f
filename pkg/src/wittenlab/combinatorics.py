"""Exact rationals and partition combinatorics shared by every other module."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Iterator

Rational = Fraction

__all__ = [
    "Rational",
    "Partition",
    "CutJoinMove",
    "double_factorial",
    "aut_order",
    "z_order",
    "conjugacy_class_size",
    "cut_join_moves",
    "partitions",
    "sub_multisets",
    "parse_rational",
    "format_rational",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Any iterable of positive integers is accepted and sorted; the empty
    partition is allowed.

    >>> Partition([1, 3, 2])
    Partition(3, 2, 1)
    >>> Partition([2, 2]).aut_order()
    2
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def multiplicity(self, value: int) -> int:
        return self.count(value)

    def aut_order(self) -> int:
        return aut_order(self)

    def z_order(self) -> int:
        return z_order(self)

    def remove(self, *values: int) -> "Partition":
        parts = list(self)
        for v in values:
            parts.remove(v)
        return Partition(parts)

    def add(self, *values: int) -> "Partition":
        return Partition(list(self) + list(values))

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(list(self) + list(other))

    def label(self) -> str:
        return ",".join(map(str, self))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "-", "()", "empty"):
            return cls()
        return cls(int(t) for t in text.split(","))


def double_factorial(m: int) -> int:
    """m!! with the empty-product convention (-1)!! = 0!! = 1."""
    if m < -1:
        raise ValueError(f"double factorial undefined for {m}")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def aut_order(mu: Iterable[int]) -> int:
    return prod(factorial(m) for m in Counter(mu).values())


def z_order(nu: Iterable[int]) -> int:
    """Centralizer order prod_v v^{m_v} m_v! of a permutation of cycle type nu."""
    return prod(v**m * factorial(m) for v, m in Counter(nu).items())


def conjugacy_class_size(nu: Iterable[int]) -> int:
    nu = tuple(nu)
    return factorial(sum(nu)) // z_order(nu)


@dataclass(frozen=True)
class CutJoinMove:
    """One join (two parts merged) or cut (one part split) of a partition.

    ``parts`` holds the source values involved: ``(mu_i, mu_j)`` for a join,
    ``(mu_i, p)`` for a cut producing ``p`` and ``mu_i - p``.
    """

    kind: str
    source: Partition
    result: Partition
    parts: tuple[int, int]
    weight: Fraction

    @property
    def created(self) -> tuple[int, ...]:
        """Parts present in ``result`` but not in ``source``."""
        if self.kind == "join":
            return (self.parts[0] + self.parts[1],)
        c, p = self.parts
        return (p, c - p)


def cut_join_moves(mu: Iterable[int]) -> list[CutJoinMove]:
    """Distinct joins and cuts of ``mu`` with their cut-and-join weights.

    Moves that would repeat because of equal parts are emitted once. Joins
    come first, ordered by the pair of values; cuts follow, ordered by the
    value cut and then by the smaller piece.
    """
    mu = Partition(mu)
    if mu.size < 1:
        raise ValueError("cut_join_moves needs a non-empty partition")
    counts = Counter(mu)
    values = sorted(counts, reverse=True)
    moves: list[CutJoinMove] = []
    for ia, a in enumerate(values):
        for b in values[ia:]:
            if a == b and counts[a] < 2:
                continue
            weight = Fraction(a + b, 2 if a == b else 1)
            moves.append(CutJoinMove("join", mu, mu.remove(a, b).add(a + b), (a, b), weight))
    for c in values:
        for p in range(1, c // 2 + 1):
            q = c - p
            weight = Fraction(p * q, 2 if p == q else 1)
            moves.append(CutJoinMove("cut", mu, mu.remove(c).add(p, q), (c, p), weight))
    return moves


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


def sub_multisets(items: Iterable[int]) -> Iterator[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """Split a multiset into (X, Y) in every way, up to reordering equal elements.

    Yields ``(w, X, Y)`` where ``w`` counts the labelled subsets giving the
    same pair of multisets.
    """
    counts = sorted(Counter(items).items(), reverse=True)
    for picks in product(*(range(m + 1) for _, m in counts)):
        w = 1
        xs: list[int] = []
        ys: list[int] = []
        for (v, m), x in zip(counts, picks):
            w *= comb(m, x)
            xs.extend([v] * x)
            ys.extend([v] * (m - x))
        yield w, tuple(xs), tuple(ys)


def parse_rational(text: str) -> Fraction:
    num, _, den = text.strip().partition("/")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
