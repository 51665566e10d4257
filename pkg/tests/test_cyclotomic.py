import math
import random
from fractions import Fraction

import mpmath
import pytest

from coxtrace.cyclotomic import (ArithmeticFault, CyclotomicElement,
                                 crr_reconstruct, cyc_add, cyc_is_zero_at_zeta,
                                 cyc_mul, cyc_sign_real, cyclotomic_polynomial)


def mono(m, j, c=1):
    return CyclotomicElement.monomial(m, j, c)


def test_add():
    x = mono(3, 1)
    assert cyc_add(x, x) == mono(3, 1, 2)
    assert cyc_add(x, CyclotomicElement.zero(3)) == x
    top = mono(3, 5)
    assert cyc_add(top, top) == mono(3, 5, 2)


def test_add_ring_mismatch():
    with pytest.raises(ValueError, match="mismatched"):
        cyc_add(mono(3, 0), mono(4, 0))


def test_mul_wraparound():
    m = 3
    assert cyc_mul(mono(m, m), mono(m, m)) == CyclotomicElement.one(m)
    x = mono(m, 2, 5)
    assert cyc_mul(x, CyclotomicElement.one(m)) == x


def test_mul_hand_convolution():
    # (X + X^5)^2 = X^2 + 2X^6 + X^10 = X^2 + 2 + X^4 modulo X^6 - 1
    x = cyc_add(mono(3, 1), mono(3, 5))
    sq = cyc_mul(x, x)
    assert sq == CyclotomicElement(3, (2, 0, 1, 0, 1, 0))


def test_ring_laws_random():
    random.seed(11)
    for _ in range(120):
        m = random.randrange(1, 7)
        xs = [CyclotomicElement(m, [random.randrange(-9, 10)
                                    for _ in range(2 * m)]) for _ in range(3)]
        x, y, z = xs
        assert cyc_mul(x, y) == cyc_mul(y, x)
        assert cyc_mul(cyc_mul(x, y), z) == cyc_mul(x, cyc_mul(y, z))
        assert cyc_mul(x, cyc_add(y, z)) == cyc_add(cyc_mul(x, y), cyc_mul(x, z))
        assert cyc_add(x, y) == cyc_add(y, x)


def test_cyclotomic_polynomial_values():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_zero_at_zeta_examples():
    # zeta^3 = -1 for m = 3
    assert cyc_is_zero_at_zeta(cyc_add(mono(3, 3), mono(3, 0)))
    assert cyc_is_zero_at_zeta(CyclotomicElement.zero(3))
    # 2cos(pi/3) = 1, so X + X^5 - 1 is not zero but X + X^5 is not either
    assert not cyc_is_zero_at_zeta(cyc_add(mono(3, 1), mono(3, 5)))


def _numeric_value(x, prec=256):
    with mpmath.workprec(prec):
        zeta = mpmath.e ** (mpmath.mpc(0, 1) * mpmath.pi / x.m)
        return sum(a * zeta ** j for j, a in enumerate(x.coeffs) if a)


def test_zero_test_matches_numeric():
    random.seed(5)
    for _ in range(800):
        m = random.randrange(1, 13)
        coeffs = [random.randrange(-100, 101) for _ in range(2 * m)]
        if random.random() < 0.3:
            # plant an exact zero: a multiple of the minimal polynomial
            phi = cyclotomic_polynomial(2 * m)
            shift = random.randrange(0, 2 * m)
            scale = random.randrange(-4, 5)
            coeffs = [0] * (2 * m)
            for j, c in enumerate(phi):
                coeffs[(j + shift) % (2 * m)] += scale * c
        x = CyclotomicElement(m, coeffs)
        assert cyc_is_zero_at_zeta(x) == (abs(_numeric_value(x)) < 1e-30)


def test_sign_examples():
    assert cyc_sign_real(cyc_add(mono(3, 1), mono(3, 5))) == 1   # value 1
    assert cyc_sign_real(mono(3, 3)) == -1                       # value -1
    # m=2: 2cos(pi/2) + 2cos(3pi/2) = 0
    assert cyc_sign_real(cyc_add(mono(2, 1, 2), mono(2, 3, 2))) == 0
    assert cyc_sign_real(CyclotomicElement.zero(5)) == 0


def test_sign_matches_rational_cosines():
    # for m in {1, 2, 3} every cos(j*pi/m) is rational
    rational_cos = {
        1: [Fraction(1), Fraction(-1)],
        2: [Fraction(1), Fraction(0), Fraction(-1), Fraction(0)],
        3: [Fraction(1), Fraction(1, 2), Fraction(-1, 2), Fraction(-1),
            Fraction(-1, 2), Fraction(1, 2)],
    }
    random.seed(6)
    for _ in range(600):
        m = random.randrange(1, 4)
        coeffs = [random.randrange(-50, 51) for _ in range(2 * m)]
        x = CyclotomicElement(m, coeffs)
        exact = sum(c * rational_cos[m][j] for j, c in enumerate(coeffs))
        want = 0 if exact == 0 else (1 if exact > 0 else -1)
        # the real part determines the documented result either way
        got = cyc_sign_real(x)
        if cyc_is_zero_at_zeta(x) or cyc_is_zero_at_zeta(x + x.conjugate()):
            assert got == 0 and exact == 0
        else:
            assert got == want


def test_sign_huge_coefficients():
    # forces the interval escalation path (floats overflow at ~1e308)
    big = 10 ** 400
    x = CyclotomicElement(3, (0, big, 0, 0, 0, big))   # value big * 2cos(pi/3)
    assert cyc_sign_real(x) == 1
    y = CyclotomicElement(3, (0, -big, 0, 0, 0, -big))
    assert cyc_sign_real(y) == -1


def test_crr_examples():
    assert crr_reconstruct([2, 3, 5], [1, 2, 0]) == 5
    assert crr_reconstruct([2, 3, 5], [0, 0, 0]) == 0
    # independent brute scan over the full range
    want = next(m for m in range(30)
                if m % 2 == 0 and m % 3 == 1 and m % 5 == 2)
    assert want == 22
    assert crr_reconstruct([2, 3, 5], [0, 1, 2]) == want


def test_crr_round_trip_random():
    random.seed(9)
    primes_pool = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    for _ in range(500):
        ps = random.sample(primes_pool, random.randrange(1, 6))
        prod = math.prod(ps)
        m = random.randrange(prod)
        assert crr_reconstruct(ps, [m % p for p in ps]) == m


def test_crr_validation():
    with pytest.raises(ValueError, match="distinct"):
        crr_reconstruct([3, 3], [1, 2])
    with pytest.raises(ValueError, match="out of range"):
        crr_reconstruct([2, 3], [1, 3])
    with pytest.raises(ValueError, match="equal length"):
        crr_reconstruct([2, 3], [1])
