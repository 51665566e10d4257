"""Exact arithmetic in Z[X]/(X^(2m) - 1) with evaluation at the
primitive 2m-th root of unity zeta = exp(i*pi/m).

Zero testing at zeta is exact: an element vanishes iff its lifted
polynomial is divisible by the 2m-th cyclotomic polynomial.  Sign
determination of real values combines a machine-float evaluation with a
rigorous error bound, the exact zero test, and an interval-arithmetic
escalation whose precision is capped by the root-of-unity gap bound
(a nonzero value of an integer polynomial at a d-th root of unity has
absolute value above the inverse d-th power of the coefficient sum).
"""

from __future__ import annotations

import math
from functools import lru_cache

import mpmath


class ArithmeticFault(RuntimeError):
    """An internal invariant of the exact arithmetic failed; indicates a
    bug, not bad input."""


class CyclotomicElement:
    """An element of Z[X]/(X^(2m) - 1), coefficients a_0 .. a_{2m-1}."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        if m < 1:
            raise ValueError("m must be positive")
        coeffs = tuple(coeffs)
        if len(coeffs) != 2 * m:
            raise ValueError("expected %d coefficients, got %d" % (2 * m, len(coeffs)))
        self.m = m
        self.coeffs = coeffs

    @staticmethod
    def zero(m: int) -> "CyclotomicElement":
        return CyclotomicElement(m, (0,) * (2 * m))

    @staticmethod
    def one(m: int) -> "CyclotomicElement":
        return CyclotomicElement.monomial(m, 0)

    @staticmethod
    def monomial(m: int, j: int, c: int = 1) -> "CyclotomicElement":
        coeffs = [0] * (2 * m)
        coeffs[j % (2 * m)] = c
        return CyclotomicElement(m, coeffs)

    def _check(self, other):
        if not isinstance(other, CyclotomicElement):
            raise TypeError("expected CyclotomicElement")
        if self.m != other.m:
            raise ValueError("mismatched rings: m=%d vs m=%d" % (self.m, other.m))

    def __add__(self, other):
        self._check(other)
        return CyclotomicElement(self.m, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return CyclotomicElement(self.m, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CyclotomicElement(self.m, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicElement(self.m, (a * other for a in self.coeffs))
        self._check(other)
        d = 2 * self.m
        out = [0] * d
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    k = i + j
                    out[k - d if k >= d else k] += a * b
        return CyclotomicElement(self.m, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, CyclotomicElement) and self.m == other.m
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        terms = []
        for j, a in enumerate(self.coeffs):
            if a:
                terms.append("%d*X^%d" % (a, j))
        return "Cyc(m=%d: %s)" % (self.m, " + ".join(terms) or "0")

    def conjugate(self) -> "CyclotomicElement":
        """Exponent negation mod 2m; complex conjugation at zeta."""
        d = 2 * self.m
        out = [0] * d
        for j, a in enumerate(self.coeffs):
            out[(d - j) % d] = a
        return CyclotomicElement(self.m, out)

    def abs_sum(self) -> int:
        return sum(abs(a) for a in self.coeffs)


def cyc_add(x: CyclotomicElement, y: CyclotomicElement) -> CyclotomicElement:
    return x + y


def cyc_mul(x: CyclotomicElement, y: CyclotomicElement) -> CyclotomicElement:
    return x * y


def _poly_divmod(num, den):
    """Exact division of integer polynomials (coefficient lists, low to
    high); den must be monic."""
    num = list(num)
    deg_d = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * max(0, len(num) - deg_d)
    for k in range(len(num) - 1, deg_d - 1, -1):
        c = num[k]
        if c == 0:
            continue
        quot[k - deg_d] = c
        for t, d in enumerate(den):
            num[k - deg_d + t] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, by dividing
    X^n - 1 by the cyclotomic polynomials of the proper divisors."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            if rem:
                raise ArithmeticFault("cyclotomic division left a remainder")
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_table(m: int):
    """X^j mod Phi_2m for 0 <= j < 2m, as vectors of length deg Phi_2m."""
    phi = list(cyclotomic_polynomial(2 * m))
    deg = len(phi) - 1
    rows = []
    for j in range(2 * m):
        mono = [0] * (j + 1)
        mono[j] = 1
        _, rem = _poly_divmod(mono, phi)
        rem += [0] * (deg - len(rem))
        rows.append(tuple(rem))
    return tuple(rows), deg


def cyc_is_zero_at_zeta(x: CyclotomicElement) -> bool:
    """Exact test of sum a_j * zeta^j == 0 via divisibility by the
    2m-th cyclotomic polynomial."""
    if all(a == 0 for a in x.coeffs):
        return True
    rows, deg = _reduction_table(x.m)
    acc = [0] * deg
    for j, a in enumerate(x.coeffs):
        if a:
            row = rows[j]
            for t in range(deg):
                if row[t]:
                    acc[t] += a * row[t]
    return not any(acc)


# Machine-float fast path: cosine table accurate to ~1 ulp, so a partial
# sum of 2m products carries error below abs_sum * 2**-48.
_FLOAT_SLACK = 2.0 ** -48


def _float_sign(coeffs, m):
    if max(abs(a) for a in coeffs).bit_length() > 900:
        return None  # float conversion would overflow
    total = 0.0
    abs_sum = 0
    for j, a in enumerate(coeffs):
        if a:
            total += a * math.cos(j * math.pi / m)
            abs_sum += abs(a)
    if abs_sum == 0:
        return 0
    bound = abs_sum * _FLOAT_SLACK * (2 * m)
    if total > bound:
        return 1
    if total < -bound:
        return -1
    return None


def _interval_sign(coeffs, m, start_bits, cap_bits):
    iv = mpmath.iv
    old = iv.prec
    try:
        prec = start_bits
        while prec <= cap_bits:
            iv.prec = prec
            total = iv.mpf(0)
            step = iv.pi / m
            for j, a in enumerate(coeffs):
                if a:
                    total = total + iv.mpf(a) * iv.cos(step * j)
            if total.a > 0:
                return 1
            if total.b < 0:
                return -1
            prec *= 2
        raise ArithmeticFault(
            "interval sign undecided at %d bits; exact arithmetic bug" % cap_bits)
    finally:
        iv.prec = old


def cyc_sign_real(x: CyclotomicElement) -> int:
    """Sign of sum a_j * cos(j*pi/m), i.e. of the value at zeta when
    that value is real (the caller's guarantee).  Returns 0 exactly when
    the value is zero; on non-real input the sign of the real part is
    returned instead.
    """
    if cyc_is_zero_at_zeta(x):
        return 0
    twice_real = x + x.conjugate()
    if cyc_is_zero_at_zeta(twice_real):
        return 0
    fast = _float_sign(twice_real.coeffs, x.m)
    if fast is not None and fast != 0:
        return fast
    abs_sum = twice_real.abs_sum()
    bits = max(64, abs_sum.bit_length() + 32)
    cap = (2 * x.m + 1) * max(1, abs_sum.bit_length()) + 128
    return _interval_sign(twice_real.coeffs, x.m, bits, max(bits, cap))


def crr_reconstruct(primes, residues) -> int:
    """The unique M in [0, prod primes) with M = r_i mod p_i."""
    primes = list(primes)
    residues = list(residues)
    if len(primes) != len(residues):
        raise ValueError("primes and residues must have equal length")
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be pairwise distinct")
    total = 1
    for p in primes:
        if p < 2:
            raise ValueError("modulus %d out of range" % p)
        total *= p
    acc = 0
    for p, r in zip(primes, residues):
        if not 0 <= r < p:
            raise ValueError("residue %d out of range for modulus %d" % (r, p))
        rest = total // p
        acc += r * rest * pow(rest, -1, p)
    return acc % total
