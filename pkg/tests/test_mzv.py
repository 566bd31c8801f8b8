"""Zeta and multiple zeta numerics against independent partial-sum oracles.

The reference decimals in this file were produced by a separate
brute-force script (direct partial sums in 40-digit decimal arithmetic
with integral-sandwich tail bounds) and then frozen here.
"""

import math
from decimal import Decimal
from fractions import Fraction

import pytest

from feynperiods.mzv import (
    IteratedIntegralWord,
    bernoulli,
    euler_even_zeta,
    iterated_integral_word,
    mzv,
    mzv_with_error,
    p35,
    p35_period,
    stuffle_check,
    zeta,
)

ZETA2 = Decimal("1.64493406684822643647")
ZETA3 = Decimal("1.202056903159594285")
ZETA4 = Decimal("1.08232323371113819152")
ZETA5 = Decimal("1.036927755143369926")
ZETA8 = Decimal("1.004077356197944339")
ZETA35 = Decimal("0.03770767298484754401")
ZETA22 = Decimal("0.81174242528335364364")
P35 = 2.2345650561425603
P35_PERIOD = 71.50608179656193


def brute_mzv(indices, kmax):
    """Plain nested partial sum, float arithmetic, no acceleration."""
    r = len(indices)
    sums = [0.0] * (r + 1)
    sums[0] = 1.0
    # sums[i] after processing k holds the depth-i partial sum with k_i <= k
    for k in range(1, kmax + 1):
        for i in range(r, 0, -1):
            sums[i] += sums[i - 1] / k ** indices[i - 1]
    return sums[r]


def test_bernoulli():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(8) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_euler_even_zeta_exact_coefficients():
    assert euler_even_zeta(2)[0] == Fraction(1, 6)
    assert euler_even_zeta(4)[0] == Fraction(1, 90)
    assert euler_even_zeta(6)[0] == Fraction(1, 945)
    assert euler_even_zeta(8)[0] == Fraction(1, 9450)
    with pytest.raises(ValueError):
        euler_even_zeta(3)


def test_zeta_against_frozen_values():
    for n, ref in ((2, ZETA2), (3, ZETA3), (4, ZETA4), (5, ZETA5), (8, ZETA8)):
        assert abs(zeta(n, 14) - float(ref)) < 5e-14, n


def test_zeta_matches_euler_closed_form():
    for n in (2, 4, 6, 8, 10):
        assert zeta(n, 13) == pytest.approx(euler_even_zeta(n)[1], abs=2e-13)


def test_zeta_error_bound_is_honest():
    for n in (2, 3, 5):
        value, bound = mzv_with_error((n,), 16)
        ref = {2: ZETA2, 3: ZETA3, 5: ZETA5}[n]
        assert abs(value - ref) <= bound + Decimal("1e-18")
        assert bound < Decimal("1e-16")


def test_mzv_35_against_frozen_value():
    value, bound = mzv_with_error((3, 5), 16)
    assert abs(value - ZETA35) <= bound + Decimal("1e-18")
    assert bound < Decimal("1e-16")
    assert mzv((3, 5)) == pytest.approx(float(ZETA35), abs=1e-12)


def test_mzv_against_brute_partial_sums():
    # brute sums are increasing; the tail after kmax is under zeta(2)/kmax^2
    for idx in ((2, 3), (3, 2), (2, 2, 2)):
        ref = mzv(idx, 13)
        low = brute_mzv(idx, 400)
        assert low < ref < low + 1.7 / 400 ** (idx[-1] - 1) + 1e-10, idx


def test_mzv_22_closed_form():
    # zeta(2,2) = (zeta(2)^2 - zeta(4)) / 2 = pi^4 / 120
    value = mzv((2, 2), 14)
    assert value == pytest.approx(float(ZETA22), abs=1e-13)
    assert value == pytest.approx(math.pi ** 4 / 120, abs=1e-13)


def test_mzv_euler_identity_at_low_accuracy():
    # sum over k1 < k2 of 1/(k1 k2^2) equals zeta(3); the inner 1 makes the
    # sum converge like (ln L)/L, so only a few digits are certifiable and
    # higher targets refuse rather than guess
    value, bound = mzv_with_error((1, 2), 4)
    assert abs(value - ZETA3) <= bound
    assert bound < Decimal("5e-4")
    with pytest.raises(ValueError, match="cannot certify"):
        mzv((1, 2), 12)


def test_divergent_indices_rejected():
    with pytest.raises(ValueError, match="last entry"):
        mzv((2, 1))
    with pytest.raises(ValueError, match="last entry"):
        mzv((1,))
    with pytest.raises(ValueError):
        mzv((0, 2))
    with pytest.raises(ValueError):
        mzv(())


def test_cutoff_diagnostics():
    # a pinned cutoff certifies less accuracy but must stay honest
    v_lo, b_lo = mzv_with_error((3, 5), 12, cutoff=64)
    v_hi, b_hi = mzv_with_error((3, 5), 12, cutoff=4096)
    assert b_lo > b_hi
    assert abs(v_lo - ZETA35) <= b_lo
    assert abs(v_hi - ZETA35) <= b_hi


def test_stuffle_product():
    assert stuffle_check(2, 3)
    assert stuffle_check(2, 2)
    assert stuffle_check(3, 4, tol=1e-9)
    with pytest.raises(ValueError):
        stuffle_check(1, 2)


def test_word_encoding():
    w = iterated_integral_word((2,))
    assert w == IteratedIntegralWord(sign=-1, letters=(1, 0))
    assert w.weight == 2
    w = iterated_integral_word((3, 5))
    assert w.sign == 1
    assert w.letters == (1, 0, 0, 1, 0, 0, 0, 0)
    assert w.weight == 8
    with pytest.raises(ValueError):
        iterated_integral_word((2, 1))


def test_p35_value():
    assert p35(14) == pytest.approx(P35, abs=1e-13)
    assert p35_period(14) == pytest.approx(P35_PERIOD, abs=1e-11)
    assert p35_period(12) == pytest.approx(32 * p35(12), abs=1e-12)
