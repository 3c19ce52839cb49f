from fractions import Fraction

import pytest

from wittenlab.combinatorics import double_factorial
from wittenlab.psi import psi_correlator
from wittenlab.virasoro import (
    SparseSeries,
    VirasoroOperator,
    build_free_energy,
    convention_report,
    series_exp,
    series_log,
    tau_function,
    virasoro_residual,
)

K, D = 7, 6


@pytest.fixture(scope="module")
def tau():
    return tau_function(K, D)


def test_free_energy_coefficients_by_hand():
    f = build_free_energy(4, 4)
    # t~ coefficient = (2k+1)!! <tau_k ...> / |Aut|
    assert f[(0, 0, 0)] == Fraction(1, 6)
    assert f[(1,)] == double_factorial(3) * psi_correlator(1, [1])
    assert f[(1, 1)] == Fraction(9, 2) * psi_correlator(1, [1, 1])
    assert f[(4,)] == double_factorial(9) * psi_correlator(2, [4])


def test_exp_of_small_series():
    tau = tau_function(4, 4)
    f1 = build_free_energy(4, 4)[(1,)]
    assert tau[()] == 1
    assert tau[(1, 1)] == build_free_energy(4, 4)[(1, 1)] + f1 ** 2 / 2


def test_log_inverts_exp():
    f = build_free_energy(5, 5)
    assert series_log(series_exp(f)).coeffs == f.coeffs


def test_exp_of_linear_series():
    s = SparseSeries.build({(2,): Fraction(3)}, 3, 4)
    e = series_exp(s)
    assert [e[(2,) * m] for m in range(5)] == [Fraction(3) ** m / [1, 1, 2, 6, 24][m] for m in range(5)]


@pytest.mark.parametrize("n", range(-1, 5))
def test_constraints_vanish(tau, n):
    assert virasoro_residual(n, K, D, tau=tau).is_zero()


@pytest.mark.parametrize("n", range(1, 5))
def test_shifted_first_index_fails(tau, n):
    res = virasoro_residual(n, K, D, convention="n-1", tau=tau)
    assert not res.is_zero()


def test_convention_report_singles_out_one_choice():
    report = convention_report(range(-1, 3), 5, 5)
    assert all(report["n+1"].values())
    assert not all(report["n-1"].values())


def test_operator_validation():
    with pytest.raises(ValueError):
        VirasoroOperator.of(-2)
    with pytest.raises(ValueError):
        VirasoroOperator.of(1, "n")
    assert VirasoroOperator.of(0).constant == Fraction(1, 16)
    assert VirasoroOperator.of(3).first_index == 4


def test_window_too_small():
    with pytest.raises(ValueError):
        virasoro_residual(4, 2, 4)


def test_mixed_coefficient(tau):
    f = build_free_energy(K, D)
    # <tau_0^3 tau_1> = 1, weight 3!! / 3!
    assert f[(0, 0, 0, 1)] == Fraction(1, 2)
