from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from wittenlab.combinatorics import (
    Partition,
    aut_order,
    conjugacy_class_size,
    cut_join_moves,
    double_factorial,
    format_rational,
    parse_rational,
    partitions,
    sub_multisets,
    z_order,
)
from wittenlab.hurwitz.factorizations import cycle_type

small_parts = st.lists(st.integers(1, 4), min_size=1, max_size=5)


def test_partition_sorts_and_validates():
    assert Partition([1, 3, 2]) == (3, 2, 1)
    assert repr(Partition([2, 1])) == "Partition(2, 1)"
    with pytest.raises(ValueError):
        Partition([2, 0])
    assert Partition() == ()


def test_partition_parse_and_label():
    assert Partition.parse("1,3") == Partition([3, 1])
    assert Partition.parse("-") == Partition()
    assert Partition([2, 2, 1]).label() == "2,2,1"


def test_double_factorial_values():
    assert [double_factorial(m) for m in (-1, 0, 1, 2, 5, 7, 8)] == [1, 1, 1, 2, 15, 105, 384]
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_partition_counts_match_known_sequence():
    assert [sum(1 for _ in partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_class_sizes_by_enumeration():
    # count permutations of S_4 by cycle type
    counts = Counter(cycle_type(p) for p in permutations(range(4)))
    for nu in partitions(4):
        assert counts[nu] == conjugacy_class_size(nu)
        assert conjugacy_class_size(nu) * z_order(nu) == factorial(4)


@given(small_parts)
def test_aut_divides_z(parts):
    assert z_order(parts) % aut_order(parts) == 0


@given(small_parts)
def test_sub_multisets_weights_count_subsets(parts):
    total = sum(w for w, _, _ in sub_multisets(parts))
    assert total == 2 ** len(parts)
    for _, xs, ys in sub_multisets(parts):
        assert Counter(xs) + Counter(ys) == Counter(parts)


def test_cut_join_moves_of_211():
    moves = cut_join_moves([2, 1, 1])
    kinds = [(m.kind, m.parts, m.result, m.weight) for m in moves]
    assert kinds == [
        ("join", (2, 1), Partition([3, 1]), Fraction(3)),
        ("join", (1, 1), Partition([2, 2]), Fraction(1)),
        ("cut", (2, 1), Partition([1, 1, 1, 1]), Fraction(1, 2)),
    ]
    assert moves[0].created == (3,)
    assert moves[2].created == (1, 1)


def test_cut_join_moves_rejects_empty():
    with pytest.raises(ValueError):
        cut_join_moves([])


@given(small_parts)
def test_moves_preserve_size(parts):
    for m in cut_join_moves(parts):
        assert m.result.size == Partition(parts).size
        assert len(m.result) == len(parts) + (1 if m.kind == "cut" else -1)


@given(st.fractions(max_denominator=1000))
def test_rational_text_roundtrip(x):
    assert parse_rational(format_rational(x)) == x
