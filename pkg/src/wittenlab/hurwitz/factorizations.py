"""Exhaustive counting of transposition factorizations in S_d.

A fixed permutation sigma_0 of cycle type nu is multiplied by every tuple
(tau_1, ..., tau_r) of transpositions. Tuples are not walked one by one:
two partial products that agree on the permutation and on the orbits of
the group generated so far have identical futures, so counts are pushed
through the graph of such states. The totals are exactly the tuple counts.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

from ..combinatorics import Partition, conjugacy_class_size
from .kernel import evolve

__all__ = [
    "HurwitzKey",
    "BudgetError",
    "BRUTE_FORCE_BUDGET",
    "cycle_type",
    "base_permutation",
    "state_graph",
    "factorization_profile",
    "factorization_count_bruteforce",
    "hurwitz_number",
    "single_hurwitz",
    "simple_branch_count",
]

# (max degree, max number of transpositions)
BRUTE_FORCE_BUDGET = (5, 8)


class BudgetError(ValueError):
    pass


@dataclass(frozen=True)
class HurwitzKey:
    nu: Partition
    mu: Partition
    r: int
    connected: bool = True

    def __post_init__(self):
        object.__setattr__(self, "nu", Partition(self.nu))
        object.__setattr__(self, "mu", Partition(self.mu))
        if self.nu.size != self.mu.size:
            raise ValueError(f"|nu| = {self.nu.size} differs from |mu| = {self.mu.size}")
        if self.r < 0:
            raise ValueError("number of transpositions must be >= 0")

    @property
    def degree(self) -> int:
        return self.nu.size

    @property
    def euler_characteristic(self) -> int:
        return self.nu.length + self.mu.length - self.r

    @property
    def parity_ok(self) -> bool:
        return (self.r - self.nu.length - self.mu.length) % 2 == 0

    def label(self) -> str:
        return f"{self.nu.label() or '-'}|{self.mu.label() or '-'}|{self.r}|{'c' if self.connected else 'd'}"


def cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            n += 1
        lengths.append(n)
    return Partition(lengths)


def base_permutation(nu: Iterable[int]) -> tuple[int, ...]:
    """Permutation of cycle type nu with cycles on consecutive points."""
    perm: list[int] = []
    start = 0
    for c in Partition(nu):
        perm.extend(start + (i + 1) % c for i in range(c))
        start += c
    return tuple(perm)


@lru_cache(maxsize=None)
def state_graph(nu: Partition):
    """States reachable from (sigma_0, cycles of sigma_0) and the transition table.

    Returns ``(states, next_state, n_trans)`` where a state is a pair
    (permutation, orbit labels) and ``next_state[s * n_trans + t]`` is the
    state after composing with the t-th transposition.
    """
    nu = Partition(nu)
    d = nu.size
    trans = [(a, b) for a in range(d) for b in range(a + 1, d)]
    perm = base_permutation(nu)
    labels = [0] * d
    start = 0
    for c in nu:
        for i in range(c):
            labels[start + i] = start
        start += c
    init = (perm, tuple(labels))
    index = {init: 0}
    states = [init]
    next_state: list[int] = []
    queue = deque([init])
    while queue:
        p, lab = queue.popleft()
        for a, b in trans:
            q = tuple(b if v == a else a if v == b else v for v in p)
            la, lb = lab[a], lab[b]
            if la != lb:
                lo, hi = min(la, lb), max(la, lb)
                nl = tuple(lo if v == hi else v for v in lab)
            else:
                nl = lab
            st = (q, nl)
            if st not in index:
                index[st] = len(states)
                states.append(st)
                queue.append(st)
            next_state.append(index[st])
    return states, next_state, len(trans)


_profiles: dict[Partition, list[dict]] = {}


def factorization_profile(nu: Iterable[int], r_max: int, backend: str | None = None) -> list[Counter]:
    """For r = 0..r_max, counts of tuples by (cycle type of product, transitive?)."""
    nu = Partition(nu)
    cached = _profiles.get(nu)
    if cached is not None and len(cached) > r_max and backend is None:
        return cached[: r_max + 1]
    states, next_state, n_trans = state_graph(nu)
    init = [0] * len(states)
    init[0] = 1
    history = evolve(next_state, n_trans, init, r_max, backend)
    tags = [(cycle_type(p), len(set(lab)) <= 1) for p, lab in states]
    profile = []
    for row in history:
        agg: Counter = Counter()
        for s, c in enumerate(row):
            if c:
                agg[tags[s]] += c
        profile.append(agg)
    if backend is None:
        _profiles[nu] = profile
    return profile


def _check_budget(d: int, r: int, budget) -> None:
    max_d, max_r = BRUTE_FORCE_BUDGET if budget is None else budget
    if d > max_d or r > max_r:
        raise BudgetError(f"brute force limited to d <= {max_d}, r <= {max_r}; got d={d}, r={r}")


def factorization_count_bruteforce(key: HurwitzKey, budget=None) -> Fraction:
    """count * |C_nu| / d! where count is the number of transposition tuples
    taking a fixed sigma_0 of type nu to a permutation of type mu (transitive
    tuples only if ``key.connected``).
    """
    d, r = key.degree, key.r
    _check_budget(d, r, budget)
    profile = factorization_profile(key.nu, r)[r]
    if key.connected:
        count = profile.get((key.mu, True), 0)
    else:
        count = profile.get((key.mu, True), 0) + profile.get((key.mu, False), 0)
    return Fraction(count * conjugacy_class_size(key.nu), factorial(d))


def hurwitz_number(nu, mu, r: int, connected: bool = True, budget=None) -> Fraction:
    return factorization_count_bruteforce(HurwitzKey(nu, mu, r, connected), budget)


def simple_branch_count(genus: int, mu: Iterable[int]) -> int:
    """r = 2g - 2 + |mu| + l(mu) for single Hurwitz numbers."""
    mu = Partition(mu)
    return 2 * genus - 2 + mu.size + mu.length


def single_hurwitz(genus: int, mu: Iterable[int], budget=None) -> Fraction:
    """Connected single Hurwitz number H_{g,mu}: nu = (1^d), r simple branch points."""
    mu = Partition(mu)
    r = simple_branch_count(genus, mu)
    if genus < 0 or r < 0:
        return Fraction(0)
    return hurwitz_number(Partition([1] * mu.size), mu, r, True, budget)
