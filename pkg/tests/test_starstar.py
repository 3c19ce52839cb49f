"""The N^{m+1/2} stratum relation evaluated term by term.

These tests pin down the behaviour of the evaluator. The relation as written
does not balance, and the residual is structural: it is the same at 256 and
512 bits. The exact coefficient form of the relation is tested in test_psi.
"""

from fractions import Fraction

import mpmath
import pytest

from wittenlab.hodge import starstar_report, starstar_terms
from wittenlab.verify import STARSTAR_CASES


def test_genus1_single_term_by_hand():
    # only A_1 survives: 3!!/(2^2 1!) * <tau_1>_1 * x = x/32
    with mpmath.workprec(128):
        terms = starstar_terms(1, (1,), ("2",))
        assert len(terms) == 1
        assert terms[0] == mpmath.mpf(2) / 32


def test_genus2_terms_by_hand():
    with mpmath.workprec(128):
        terms = starstar_terms(2, (4,), ("1",))
    a = Fraction(945, 2**5 * 24) * Fraction(1, 1152)
    # c_{a,b} with a + b = 2 and brackets <tau_a tau_b>_1 + <tau_1>_1^2 [a = b = 1]
    c = Fraction(1, 2) * (Fraction(15, 384) * Fraction(1, 24) * 2 + Fraction(9, 384) * Fraction(25, 576))
    assert len(terms) == 4
    assert mpmath.almosteq(terms[0], mpmath.mpf(a.numerator) / a.denominator, 1e-30)
    assert mpmath.almosteq(-mpmath.fsum(terms[1:]), mpmath.mpf(c.numerator) / c.denominator, 1e-30)
    assert c == 2 * a


def test_sample_dimension_checked():
    with pytest.raises(ValueError):
        starstar_terms(0, (1, 0, 0, 0), ("1", "1"))
    with pytest.raises(ValueError):
        starstar_report(1, (1,), (("-1",),))
    with pytest.raises(ValueError):
        starstar_report(1, (1,), (("1",),), precision_bits=32)


@pytest.mark.parametrize("g,ks,samples", STARSTAR_CASES)
def test_residual_is_structural(g, ks, samples):
    rep = starstar_report(g, ks, samples, 256)
    assert not rep.passed
    assert not rep.roundoff_only
    for lo, hi in zip(rep.samples, rep.refined):
        assert mpmath.almosteq(lo.relative, hi.relative, 1e-60)


def test_tolerance_respected_for_balanced_sum():
    rep = starstar_report(1, (1,), (("1",),), 256, tolerance=1)
    assert rep.passed
