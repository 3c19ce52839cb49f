from fractions import Fraction
from math import factorial, prod

import pytest

from oracles import naive_count
from wittenlab.combinatorics import Partition, aut_order, partitions
from wittenlab.hurwitz import (
    BudgetError,
    ClosureError,
    HurwitzKey,
    character_table,
    compiled_available,
    connected_disconnected_transform,
    cut_join_sides,
    cutjoin_hurwitz_check,
    factorization_count_bruteforce,
    factorization_count_frobenius,
    factorization_profile,
    hurwitz_gamma,
    hurwitz_number,
    mn_character,
    required_keys,
    simple_branch_count,
    single_hurwitz,
)


SMALL = [(nu, mu, r) for d in range(1, 5) for nu in partitions(d) for mu in partitions(d) for r in range(4)]


@pytest.mark.parametrize("nu,mu,r", SMALL)
@pytest.mark.parametrize("connected", [False, True])
def test_bruteforce_matches_naive_enumeration(nu, mu, r, connected):
    key = HurwitzKey(nu, mu, r, connected)
    assert factorization_count_bruteforce(key) == naive_count(nu, mu, r, connected)


def test_hand_values():
    assert hurwitz_number((3,), (3,), 0) == Fraction(1, 3)
    assert hurwitz_number((2,), (2,), 0) == Fraction(1, 2)
    assert hurwitz_number((1, 1), (1, 1), 2) == Fraction(1, 2)
    assert hurwitz_number((1, 1, 1), (1, 1, 1), 4) == 4
    assert hurwitz_number((1, 1), (1, 1), 0, connected=False) == Fraction(1, 2)
    assert hurwitz_number((1, 1), (1, 1), 0) == 0


def genus0_hurwitz_formula(mu):
    mu = Partition(mu)
    d, n = mu.size, mu.length
    r = d + n - 2
    return Fraction(factorial(r), aut_order(mu)) * Fraction(d) ** (n - 3) * prod(
        Fraction(m ** m, factorial(m)) for m in mu)


@pytest.mark.parametrize("mu", [mu for d in range(1, 6) for mu in partitions(d)])
def test_genus0_single_hurwitz_formula(mu):
    assert single_hurwitz(0, mu) == genus0_hurwitz_formula(mu)


def test_single_hurwitz_edge_cases():
    assert simple_branch_count(1, (2,)) == 3
    assert single_hurwitz(-1, (2,)) == 0
    assert single_hurwitz(1, (1,)) == 0  # odd r parity


@pytest.mark.parametrize("d", range(1, 6))
def test_bruteforce_matches_characters(d):
    for nu in partitions(d):
        for mu in partitions(d):
            for r in range(7):
                key = HurwitzKey(nu, mu, r, False)
                assert factorization_count_bruteforce(key) == factorization_count_frobenius(key)


def test_parity_vanishing():
    for nu, mu, r in SMALL:
        key = HurwitzKey(nu, mu, r, False)
        if not key.parity_ok:
            assert factorization_count_bruteforce(key) == 0


def test_connected_never_exceeds_disconnected():
    for nu, mu, r in SMALL:
        assert hurwitz_number(nu, mu, r) <= hurwitz_number(nu, mu, r, connected=False)


def test_key_validation():
    with pytest.raises(ValueError):
        HurwitzKey((2,), (1,), 0)
    with pytest.raises(ValueError):
        HurwitzKey((1,), (1,), -1)
    # 2 - 2g = l(nu) + l(mu) - r
    assert HurwitzKey((1, 1), (1, 1), 2).euler_characteristic == 2
    assert HurwitzKey((1, 1), (1, 1), 4).euler_characteristic == 0


def test_budget_enforced():
    with pytest.raises(BudgetError):
        hurwitz_number((1,) * 6, (6,), 5)
    with pytest.raises(BudgetError):
        hurwitz_number((1, 1), (1, 1), 9)
    assert hurwitz_number((1, 1), (1, 1), 10, budget=(2, 10)) == Fraction(1, 2)


def test_frobenius_limits():
    with pytest.raises(ValueError):
        factorization_count_frobenius(HurwitzKey((2,), (2,), 0, True))
    with pytest.raises(BudgetError):
        factorization_count_frobenius(HurwitzKey((9,), (9,), 0, False))


@pytest.mark.parametrize("d", range(1, 9))
def test_character_orthogonality(d):
    table = character_table(d)
    assert table.column_orthogonality_ok()
    assert table.row_orthogonality_ok()
    assert sum(table.dimension(lam) ** 2 for lam in partitions(d)) == factorial(d)


def test_known_characters():
    # S_3: sign and standard representations
    assert mn_character((1, 1, 1), (2, 1)) == -1
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((2, 2), (2, 2)) == 2


def _connected_table(d_max, r_max):
    return {HurwitzKey(nu, mu, r, True): hurwitz_number(nu, mu, r) for nu, mu, r in required_keys(d_max, r_max)}


def test_exp_transform_matches_bruteforce():
    dis = connected_disconnected_transform(_connected_table(5, 6), "exp")
    for key, value in dis.items():
        assert value == hurwitz_number(key.nu, key.mu, key.r, connected=False), key.label()


def test_log_inverts_exp():
    conn = _connected_table(4, 5)
    back = connected_disconnected_transform(connected_disconnected_transform(conn, "exp"), "log")
    assert back == conn


def test_transform_closure_error():
    conn = _connected_table(3, 4)
    conn.pop(HurwitzKey((2, 1), (2, 1), 2, True))
    with pytest.raises(ClosureError):
        connected_disconnected_transform(conn, "exp")


def test_transform_rejects_wrong_kind():
    dis = {HurwitzKey((1,), (1,), 0, False): Fraction(1)}
    with pytest.raises(ValueError):
        connected_disconnected_transform(dis, "exp")
    with pytest.raises(ValueError):
        connected_disconnected_transform(dis, "sideways")


@pytest.mark.parametrize("g", [0, 1, 2])
def test_cut_join_for_hurwitz_numbers(g):
    for d in range(1, 6):
        for mu in partitions(d):
            r = simple_branch_count(g, mu)
            if r < 1 or r > 8:
                continue
            sides = cut_join_sides(g, mu, hurwitz_gamma())
            assert sides.holds, (g, mu, sides.lhs, sides.rhs)


def test_cut_join_check_wrapper():
    assert cutjoin_hurwitz_check(0, (2, 1))


@pytest.mark.skipif(not compiled_available(), reason="extension not built")
@pytest.mark.parametrize("nu", [(1, 1, 1, 1), (2, 1, 1), (3, 2), (1, 1, 1, 1, 1)])
def test_backends_agree(nu):
    assert factorization_profile(nu, 6, backend="python") == factorization_profile(nu, 6, backend="compiled")


def test_unknown_backend():
    with pytest.raises(ValueError):
        factorization_profile((2, 1), 2, backend="gpu")


def test_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, WITTENLAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from wittenlab.hurwitz import BACKEND; print(BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout
    assert out.strip() == "python"
