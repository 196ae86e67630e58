import random

import numpy as np
import pytest

from zcpair.algebra import CycSum, IntPoly, cyclotomic_poly, divisors


def test_cyclotomic_small_moduli():
    assert cyclotomic_poly(1).coeffs == (-1, 1)
    assert cyclotomic_poly(2).coeffs == (1, 1)
    assert cyclotomic_poly(4).coeffs == (1, 0, 1)
    assert cyclotomic_poly(6).coeffs == (1, -1, 1)
    assert cyclotomic_poly(8).coeffs == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12).coeffs == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_cyclotomic_prime_is_all_ones(p):
    assert cyclotomic_poly(p).coeffs == (1,) * p


@pytest.mark.parametrize("M", [1, 2, 6, 12, 16, 24, 36, 60, 64, 100, 105])
def test_cyclotomic_degrees_sum_to_modulus(M):
    assert sum(cyclotomic_poly(d).degree for d in divisors(M)) == M


def test_cyclotomic_rejects_nonpositive():
    with pytest.raises(ValueError):
        cyclotomic_poly(0)


def test_intpoly_rejects_trailing_zero():
    with pytest.raises(ValueError):
        IntPoly((1, 0))


def test_accumulate_reduces_exponent():
    s = CycSum(4)
    s.accumulate(5)
    assert s.coeffs == [0, 1, 0, 0]


def test_accumulate_negative_weight():
    s = CycSum(2, [1, 0])
    s.accumulate(1, -1)
    assert s.coeffs == [1, -1]


def test_accumulate_stacks_weight():
    s = CycSum(4, [2, 0, 0, 0])
    s.accumulate(0, 3)
    assert s.coeffs == [5, 0, 0, 0]


def test_add_requires_same_modulus():
    with pytest.raises(ValueError):
        CycSum(2) + CycSum(4)


def test_is_integer_examples():
    assert CycSum(4, [1, 1, 1, 1]).is_integer(0)       # 1 + j - 1 - j
    assert CycSum(4, [1, 0, 1, 0]).is_integer(0)       # 1 + (-1)
    assert CycSum(6, [0, 1, 0, 0, 0, 1]).is_integer(1)  # 2*cos(60 deg)
    assert not CycSum(4, [1, 1, 1, 1]).is_integer(1)
    assert not CycSum(4, [2, 1, 1, 1]).is_integer(0)
    assert CycSum(4, [2, 1, 1, 1]).is_integer(1)


def test_is_integer_modulus_one():
    assert CycSum(1, [7]).is_integer(7)
    assert not CycSum(1, [7]).is_integer(6)


def test_value_examples():
    assert CycSum(4, [0, 1, 0, 0]).value() == pytest.approx(1j)
    assert CycSum(2, [3, 1]).value() == pytest.approx(2 + 0j)
    assert abs(CycSum(8, [1, 0, 0, 0, 1, 0, 0, 0]).value()) < 1e-12


def test_integer_value():
    assert CycSum(4, [5, 2, 1, 2]).integer_value() == 4
    assert CycSum(4, [0, 1, 0, 0]).integer_value() is None


def test_is_integer_matches_float_on_random_sums():
    rng = random.Random(2024)
    for _ in range(400):
        M = rng.randrange(1, 65)
        s = CycSum(M)
        for _ in range(rng.randrange(0, 12)):
            s.accumulate(rng.randrange(-2 * M, 2 * M), rng.randrange(-8, 9))
        assert sum(abs(c) for c in s.coeffs) <= 100
        n = rng.randrange(-3, 4)
        exact = s.is_integer(n)
        approx = abs(s.value() - n) < 1e-9
        assert exact == approx, (M, s.coeffs, n)


def test_zero_structured_sums_detected_exactly():
    # full orbits of any root sum to zero for every modulus
    for M in range(2, 40):
        s = CycSum(M, [3] * M)
        assert s.is_zero()
        assert abs(s.value()) < 1e-9


def test_value_matches_numpy_evaluation():
    rng = random.Random(7)
    for _ in range(100):
        M = rng.randrange(1, 33)
        coeffs = [rng.randrange(-5, 6) for _ in range(M)]
        s = CycSum(M, coeffs)
        want = sum(c * np.exp(2j * np.pi * k / M) for k, c in enumerate(coeffs))
        assert s.value() == pytest.approx(want, abs=1e-9)
