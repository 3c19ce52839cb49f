"""Intersection numbers of psi-classes on the moduli space of stable curves.

Correlators <tau_{k_1} ... tau_{k_n}>_g are computed with the
Dijkgraaf-Verlinde-Verlinde recursion written in the normalization
``sigma~_k = (2k+1)!! tau_k`` where it has integer-free coefficients::

    <s~_m S>_g = sum_{k in S} (2k+1) <s~_{m+k-1} S\\k>_g
               + 1/2 sum_{a+b=m-2} <s~_a s~_b S>_{g-1}
               + 1/2 sum_{a+b=m-2} sum_{S=X+Y, g1+g2=g} <s~_a X>_{g1} <s~_b Y>_{g2}

seeded by <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
"""

from __future__ import annotations

import sys
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator

from .combinatorics import double_factorial, sub_multisets

__all__ = [
    "CorrelatorKey",
    "CorrelatorCache",
    "default_cache",
    "psi_correlator",
    "tilde_correlator",
    "tilde_factor",
    "genus0_closed_form",
    "one_point_closed_form",
    "dimension_ok",
    "is_stable",
    "BASE_VALUES",
    "StarTerms",
    "star_terms",
    "sharp_terms",
    "sharp_vs_star_check",
    "correlator_keys",
]

# plain normalization
BASE_VALUES = {
    (0, (0, 0, 0)): Fraction(1),
    (1, (1,)): Fraction(1, 24),
}

_RECURSION_LIMIT = 50_000


@dataclass(frozen=True)
class CorrelatorKey:
    genus: int
    exponents: tuple[int, ...]

    @classmethod
    def of(cls, genus: int, exponents: Iterable[int]) -> "CorrelatorKey":
        return cls(int(genus), tuple(sorted((int(k) for k in exponents), reverse=True)))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def label(self) -> str:
        return f"{self.genus}:{','.join(map(str, self.exponents))}"


class CorrelatorCache:
    """Memo table for tilde-normalized correlators keyed by (g, sorted exponents).

    Lookups and stores are plain dict operations; two threads may both
    compute the same key, which is harmless since the values agree.
    """

    def __init__(self) -> None:
        self._values: dict[tuple[int, tuple[int, ...]], Fraction] = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._values.get(key)

    def put(self, key, value: Fraction) -> None:
        self._values[key] = value

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key) -> bool:
        return key in self._values

    def items(self) -> Iterator[tuple[CorrelatorKey, Fraction]]:
        """Yield (key, plain value) in sorted key order."""
        for (g, ks) in sorted(self._values):
            yield CorrelatorKey(g, ks), self._values[(g, ks)] / tilde_factor(ks)

    def load(self, key: CorrelatorKey, plain_value: Fraction) -> None:
        with self._lock:
            self._values[(key.genus, key.exponents)] = Fraction(plain_value) * tilde_factor(key.exponents)

    def clear(self) -> None:
        self._values.clear()


default_cache = CorrelatorCache()


def tilde_factor(exponents: Iterable[int]) -> int:
    out = 1
    for k in exponents:
        out *= double_factorial(2 * k + 1)
    return out


def dimension_ok(genus: int, exponents: tuple[int, ...]) -> bool:
    return sum(exponents) == 3 * genus - 3 + len(exponents)


def is_stable(genus: int, n: int) -> bool:
    return 2 * genus - 2 + n > 0


def _sorted(ks) -> tuple[int, ...]:
    return tuple(sorted(ks, reverse=True))


def _pick_index(ks: tuple[int, ...], policy: str) -> int:
    if policy == "largest":
        return 0
    # string / dilaton first: only join terms, no splitting sums
    if ks[-1] <= 1:
        return len(ks) - 1
    return 0


def _tilde(g: int, ks: tuple[int, ...], cache: CorrelatorCache, policy: str) -> Fraction:
    key = (g, ks)
    hit = cache.get(key)
    if hit is not None:
        return hit
    n = len(ks)
    if g < 0 or (ks and ks[-1] < 0) or sum(ks) != 3 * g - 3 + n or 2 * g - 2 + n <= 0:
        return Fraction(0)
    if key in BASE_VALUES:
        value = BASE_VALUES[key] * tilde_factor(ks)
    else:
        i = _pick_index(ks, policy)
        terms = star_terms(g, ks, i, lambda h, js: _tilde(h, _sorted(js), cache, policy))
        value = terms.rhs
    cache.put(key, value)
    return value


def _with_recursion_room(fn, *args):
    if sys.getrecursionlimit() < _RECURSION_LIMIT:
        sys.setrecursionlimit(_RECURSION_LIMIT)
    return fn(*args)


def tilde_correlator(genus: int, exponents: Iterable[int], cache: CorrelatorCache | None = None,
                     policy: str = "auto") -> Fraction:
    """<prod sigma~_{k_i}>_g = prod (2k_i+1)!! <prod tau_{k_i}>_g."""
    if policy not in ("auto", "largest"):
        raise ValueError(f"unknown distinguished-index policy {policy!r}")
    cache = default_cache if cache is None else cache
    ks = _sorted(exponents)
    return _with_recursion_room(_tilde, int(genus), ks, cache, policy)


def psi_correlator(genus: int, exponents: Iterable[int], cache: CorrelatorCache | None = None,
                   policy: str = "auto") -> Fraction:
    """The intersection number <tau_{k_1} ... tau_{k_n}>_g as an exact fraction.

    Returns 0 off the dimension constraint sum k_i = 3g - 3 + n and for
    unstable (g, n).

    >>> psi_correlator(2, [4])
    Fraction(1, 1152)
    """
    ks = _sorted(exponents)
    if ks and ks[-1] < 0:
        return Fraction(0)
    return tilde_correlator(genus, ks, cache, policy) / tilde_factor(ks)


def genus0_closed_form(exponents: Iterable[int]) -> Fraction:
    """(n-3)! / prod k_i! for genus-zero correlators."""
    ks = tuple(exponents)
    n = len(ks)
    if n < 3 or sum(ks) != n - 3:
        raise ValueError(f"genus-0 dimension constraint fails for {ks}")
    den = 1
    for k in ks:
        den *= factorial(k)
    return Fraction(factorial(n - 3), den)


def one_point_closed_form(genus: int) -> Fraction:
    """<tau_{3g-2}>_g = 1 / (24^g g!)."""
    if genus < 1:
        raise ValueError("one-point correlators need genus >= 1")
    return Fraction(1, 24**genus * factorial(genus))


@dataclass
class StarTerms:
    """Right-hand side of the recursion split into its three groups.

    ``join`` is indexed by position j in the exponent tuple (the
    distinguished position contributes 0).
    """

    join: list[Fraction] = field(default_factory=list)
    genus: Fraction = Fraction(0)
    split: Fraction = Fraction(0)

    @property
    def rhs(self) -> Fraction:
        return sum(self.join, Fraction(0)) + self.genus + self.split


def _split_sum(g: int, m: int, rest: tuple[int, ...], value, weight_fn) -> Fraction:
    total = Fraction(0)
    for w, xs, ys in sub_multisets(rest):
        sx, n1 = sum(xs), len(xs) + 1
        for a in range(m - 1):
            b = m - 2 - a
            s1 = a + sx
            if (s1 - n1) % 3:
                continue
            g1 = (s1 - n1 + 3) // 3
            if g1 < 0 or g1 > g:
                continue
            v1 = value(g1, xs + (a,))
            if not v1:
                continue
            v2 = value(g - g1, ys + (b,))
            if v2:
                total += w * weight_fn(a, b) * v1 * v2
    return total


def star_terms(genus: int, exponents: tuple[int, ...], i: int, value) -> StarTerms:
    """Terms of the recursion in tilde normalization for distinguished position i.

    ``value(g, ks)`` must return tilde-normalized correlators.
    """
    ks = tuple(exponents)
    m = ks[i]
    rest = ks[:i] + ks[i + 1:]
    out = StarTerms(join=[Fraction(0)] * len(ks))
    for j, k in enumerate(ks):
        if j == i:
            continue
        others = tuple(ks[l] for l in range(len(ks)) if l not in (i, j))
        w = m + k - 1
        if w >= 0:
            out.join[j] = (2 * k + 1) * value(genus, others + (w,))
    if m >= 2:
        half = Fraction(1, 2)
        out.genus = half * sum((value(genus - 1, rest + (a, m - 2 - a)) for a in range(m - 1)), Fraction(0))
        out.split = half * _split_sum(genus, m, rest, value, lambda a, b: 1)
    return out


def sharp_terms(genus: int, exponents: tuple[int, ...], i: int, value) -> tuple[Fraction, StarTerms]:
    """Both sides of the coefficient-extracted relation in plain normalization.

    Returns ``(lhs, terms)`` with::

        lhs = (2k_i+1)!! prod_{j!=i} (2k_j-1)!! <prod tau_k>_g
        join_j = (2w+1)!! prod_{l!=i,j} (2k_l-1)!! <tau_w prod_{l!=i,j} tau_{k_l}>_g,  w = k_i+k_j-1
        genus = 1/2 sum_{a+b=k_i-2} (2a+1)!!(2b+1)!! prod_{l!=i} (2k_l-1)!! <tau_a tau_b ...>_{g-1}
        split = the same weights on the products over splittings

    ``value(g, ks)`` must return plain correlators.
    """
    ks = tuple(exponents)
    m = ks[i]
    rest = ks[:i] + ks[i + 1:]
    df = double_factorial
    rest_odd = 1
    for k in rest:
        rest_odd *= df(2 * k - 1)
    lhs = df(2 * m + 1) * rest_odd * value(genus, ks)
    out = StarTerms(join=[Fraction(0)] * len(ks))
    for j, k in enumerate(ks):
        if j == i:
            continue
        others = tuple(ks[l] for l in range(len(ks)) if l not in (i, j))
        w = m + k - 1
        if w < 0:
            continue
        odd = 1
        for kl in others:
            odd *= df(2 * kl - 1)
        out.join[j] = df(2 * w + 1) * odd * value(genus, others + (w,))
    if m >= 2:
        half = Fraction(rest_odd, 2)
        out.genus = half * sum(
            (df(2 * a + 1) * df(2 * (m - 2 - a) + 1) * value(genus - 1, rest + (a, m - 2 - a))
             for a in range(m - 1)),
            Fraction(0),
        )
        out.split = half * _split_sum(genus, m, rest, value,
                                      lambda a, b: df(2 * a + 1) * df(2 * b + 1))
    return lhs, out


def sharp_vs_star_check(genus: int, exponents: Iterable[int], index: int | None = None,
                        cache: CorrelatorCache | None = None) -> bool:
    """Check the recursion in both normalizations and their term-by-term agreement.

    With ``index=None`` every position is used as the distinguished one.
    The two seed keys have no recursion; for them the check confirms the
    stored seed value.
    """
    ks = _sorted(exponents)
    g = int(genus)
    if not dimension_ok(g, ks) or not is_stable(g, len(ks)):
        raise ValueError(f"({g}, {ks}) is not a stable key on the dimension constraint")
    plain = lambda h, js: psi_correlator(h, js, cache)  # noqa: E731
    tilde = lambda h, js: tilde_correlator(h, js, cache)  # noqa: E731
    if (g, ks) in BASE_VALUES:
        return plain(g, ks) == BASE_VALUES[(g, ks)]
    positions = range(len(ks)) if index is None else [index]
    for i in positions:
        star = star_terms(g, ks, i, tilde)
        if tilde(g, ks) != star.rhs:
            return False
        lhs, sharp = sharp_terms(g, ks, i, plain)
        if lhs != sharp.rhs:
            return False
        scale = 1
        for j, k in enumerate(ks):
            if j != i:
                scale *= 2 * k + 1
        if lhs * scale != tilde(g, ks):
            return False
        if any(a * scale != b for a, b in zip(sharp.join, star.join)):
            return False
        if sharp.genus * scale != star.genus or sharp.split * scale != star.split:
            return False
    return True


def correlator_keys(genus: int, n: int) -> Iterator[tuple[int, ...]]:
    """All sorted exponent tuples of length n on the dimension constraint."""
    total = 3 * genus - 3 + n
    if total < 0 or n == 0:
        if total == 0 and n == 0:
            yield ()
        return

    def rec(remaining: int, slots: int, cap: int):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for first in range(min(remaining, cap), -1, -1):
            if first * slots < remaining:
                break
            for tail in rec(remaining - first, slots - 1, first):
                yield (first,) + tail

    yield from rec(total, n, total)
