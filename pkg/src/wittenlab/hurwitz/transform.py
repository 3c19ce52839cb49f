"""Exponential and logarithmic transforms between connected and disconnected
Hurwitz data.

A table is read as the generating function

    sum H(nu, mu, r) p_nu q_mu beta^r / r!

so multiplying two components multiplies monomials p, q and picks up a
binomial factor C(r, r1) from the beta^r / r! normalization.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Mapping

from ..combinatorics import Partition, partitions, sub_multisets
from .factorizations import HurwitzKey

__all__ = ["ClosureError", "connected_disconnected_transform", "required_keys"]


class ClosureError(ValueError):
    pass


def required_keys(d_max: int, r_max: int):
    """(nu, mu, r) with 1 <= |nu| <= d_max, r <= r_max and the parity that
    allows a nonzero count."""
    for d in range(1, d_max + 1):
        parts = list(partitions(d))
        for nu in parts:
            for mu in parts:
                for r in range(r_max + 1):
                    if (r - nu.length - mu.length) % 2 == 0:
                        yield nu, mu, r


def _splits(p: Partition):
    seen = set()
    for _, xs, ys in sub_multisets(p):
        if xs not in seen:
            seen.add(xs)
            yield Partition(xs), Partition(ys)


def connected_disconnected_transform(table: Mapping[HurwitzKey, Fraction], direction: str = "exp"
                                     ) -> dict[HurwitzKey, Fraction]:
    """``direction="exp"`` maps a connected table to the disconnected one,
    ``"log"`` goes back. The truncation is read off the table (largest degree
    and r present) and every key inside it must be supplied.
    """
    if direction not in ("exp", "log"):
        raise ValueError(f"direction must be 'exp' or 'log', got {direction!r}")
    want_connected = direction == "exp"
    values: dict[tuple, Fraction] = {}
    for key, v in table.items():
        if key.connected != want_connected:
            raise ValueError(f"{direction} expects {'connected' if want_connected else 'disconnected'} keys, got {key.label()}")
        if key.degree == 0:
            continue
        values[(key.nu, key.mu, key.r)] = Fraction(v)
    if not values:
        return {}
    d_max = max(nu.size for nu, _, _ in values)
    r_max = max(r for _, _, r in values)
    keys = list(required_keys(d_max, r_max))
    missing = [k for k in keys if k not in values]
    if missing:
        nu, mu, r = missing[0]
        raise ClosureError(f"table not closed at d <= {d_max}, r <= {r_max}: missing {HurwitzKey(nu, mu, r).label()} "
                           f"and {len(missing) - 1} more")

    # connected F and disconnected Z, one of them known; solve for the other degree by degree
    known = values
    solved: dict[tuple, Fraction] = {}

    def z(nu, mu, r):
        if not nu:
            return Fraction(1 if r == 0 else 0)
        return (known if not want_connected else solved).get((nu, mu, r), Fraction(0))

    def f(nu, mu, r):
        return (known if want_connected else solved).get((nu, mu, r), Fraction(0))

    for nu, mu, r in keys:
        d = nu.size
        acc = Fraction(0)
        for nu1, nu2 in _splits(nu):
            d1 = nu1.size
            if d1 == 0:
                continue
            for mu1, mu2 in _splits(mu):
                if mu1.size != d1:
                    continue
                if not want_connected and not nu2:
                    continue  # the term F_k Z_empty is the unknown itself
                for r1 in range(r + 1):
                    fv = f(nu1, mu1, r1)
                    if not fv:
                        continue
                    zv = z(nu2, mu2, r - r1)
                    if zv:
                        acc += d1 * comb(r, r1) * fv * zv
        if want_connected:
            solved[(nu, mu, r)] = acc / d
        else:
            solved[(nu, mu, r)] = known[(nu, mu, r)] - acc / d
    return {HurwitzKey(nu, mu, r, not want_connected): v for (nu, mu, r), v in solved.items()}
