"""General Coxeter group algorithms through the geometric representation.

The representation acts on the letter basis; the matrix entry attached
to a pair with order m is 2*cos(pi/m), written exactly as
X^k + X^(2M-k) in Z[X]/(X^(2M)-1) where M is the least common multiple
of the finite orders and M = m*k.  Infinite order contributes the
constant 2, the diagonal the constant -1.

Geodesic length runs the incremental sign-test loop: appending a letter
lengthens the element exactly when the current image of that letter is
nonnegative.  Every tested coefficient vector must be entirely >= 0 or
entirely <= 0; a mixed vector raises ArithmeticFault since the
mathematics excludes it.  The geodesic alphabet comes from adjoining an
extra letter of infinite order against everything and reading off the
exactly-nonzero coefficients of its image.
"""

from __future__ import annotations

import math
from functools import lru_cache

from . import kernels
from .cyclotomic import (ArithmeticFault, CyclotomicElement, cyc_is_zero_at_zeta,
                         cyc_sign_real)
from .groupspec import COXETER_KINDS, GroupSpec, KindMismatch, Word

K_INF = -2


def _require_coxeter(spec):
    if spec.kind not in COXETER_KINDS:
        raise KindMismatch("operation needs kind coxeter or even-coxeter, got %s"
                           % spec.kind)


@lru_cache(maxsize=None)
def _lcm_order(spec: GroupSpec) -> int:
    finite = [spec.matrix[i][j]
              for i in range(spec.n) for j in range(i + 1, spec.n)
              if spec.matrix[i][j] != 0]
    return math.lcm(*finite) if finite else 1


@lru_cache(maxsize=None)
def _scan_tables(spec: GroupSpec):
    """Kernel tables over the alphabet extended by the adjoined letter
    (index n, infinite order against everything)."""
    n = spec.n
    big_m = _lcm_order(spec)
    kexp = []
    for a in range(n + 1):
        row = []
        for j in range(n + 1):
            if a == n or j == n or a == j:
                row.append(K_INF)  # diagonal entries are never read
                continue
            mij = spec.matrix[a][j]
            row.append(K_INF if mij == 0 else big_m // mij)
        kexp.append(tuple(row))
    costab = tuple(math.cos(t * math.pi / big_m) for t in range(2 * big_m))
    return (n, 2 * big_m, tuple(kexp), costab)


def _entry(spec, big_m, a, j) -> CyclotomicElement:
    """2*cos(pi/m[a,j]) as an exact ring element."""
    mij = spec.matrix[a][j]
    if mij == 0:
        return CyclotomicElement.monomial(big_m, 0, 2)
    k = big_m // mij
    return (CyclotomicElement.monomial(big_m, k)
            + CyclotomicElement.monomial(big_m, 2 * big_m - k))


class GeoMatrix:
    """Matrix of a generator in the letter basis; entry(i, j) is the
    coefficient of letter i in the image of letter j."""

    __slots__ = ("letters", "entries")

    def __init__(self, letters, entries):
        self.letters = tuple(letters)
        self.entries = tuple(tuple(row) for row in entries)

    def entry(self, i: int, j: int) -> CyclotomicElement:
        return self.entries[i][j]

    def __matmul__(self, other: "GeoMatrix") -> "GeoMatrix":
        n = len(self.letters)
        rows = [[sum((self.entries[i][k] * other.entries[k][j]
                      for k in range(1, n)),
                     start=self.entries[i][0] * other.entries[0][j])
                 for j in range(n)] for i in range(n)]
        return GeoMatrix(self.letters, rows)

    def __eq__(self, other):
        return (isinstance(other, GeoMatrix) and self.letters == other.letters
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.letters, self.entries))


def identity_matrix(spec: GroupSpec) -> GeoMatrix:
    _require_coxeter(spec)
    big_m = _lcm_order(spec)
    n = spec.n
    rows = [[CyclotomicElement.one(big_m) if i == j else CyclotomicElement.zero(big_m)
             for j in range(n)] for i in range(n)]
    return GeoMatrix(spec.letters, rows)


def sigma_generator(spec: GroupSpec, a: str) -> GeoMatrix:
    """The matrix of the generator a."""
    _require_coxeter(spec)
    ia = spec.index(a)
    big_m = _lcm_order(spec)
    n = spec.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == ia:
                if j == ia:
                    row.append(CyclotomicElement.monomial(big_m, 0, -1))
                else:
                    row.append(_entry(spec, big_m, ia, j))
            else:
                one = CyclotomicElement.one(big_m)
                row.append(one if i == j else CyclotomicElement.zero(big_m))
        rows.append(row)
    return GeoMatrix(spec.letters, rows)


def sigma_apply(spec: GroupSpec, word: Word, b: str) -> dict:
    """Coefficient vector of the image of the letter b under the word's
    representation, letters applied from the right, one column at a
    time (the full matrix product is never materialized)."""
    _require_coxeter(spec)
    big_m = _lcm_order(spec)
    ids = spec.encode_word(word)
    n = spec.n
    vec = [CyclotomicElement.zero(big_m) for _ in range(n)]
    vec[spec.index(b)] = CyclotomicElement.one(big_m)
    for a in reversed(ids):
        acc = -vec[a]
        for j in range(n):
            if j != a and any(vec[j].coeffs):
                acc = acc + _entry(spec, big_m, a, j) * vec[j]
        vec[a] = acc
    return {name: vec[i] for i, name in enumerate(spec.letters)}


def sign_of_coefficient(spec: GroupSpec, word: Word, a: str, b: str) -> int:
    """Sign of the coefficient of b in the image of a."""
    return cyc_sign_real(sigma_apply(spec, word, a)[b])


def _scan(spec, word):
    _require_coxeter(spec)
    tables = _scan_tables(spec)
    status, length, counts, mask = kernels.cox_scan_one(tables, spec.encode_word(word))
    if status == kernels.FAULT:
        raise ArithmeticFault("sign dichotomy violated while scanning %r"
                              % word.render())
    return length, counts, mask


def geodesic_length(spec: GroupSpec, word: Word) -> int:
    """Length of any geodesic representative."""
    length, _, _ = _scan(spec, word)
    return length


def geodesic_alphabet(spec: GroupSpec, word: Word) -> set:
    """Set of letter names occurring in the shortlex normal form."""
    _, _, mask = _scan(spec, word)
    return {name for i, name in enumerate(spec.letters) if mask & (1 << i)}


def parikh_even(spec: GroupSpec, word: Word) -> dict:
    """Letter-count vector of the shortlex normal form; defined only for
    even Coxeter groups, where all geodesics share one Parikh image."""
    if spec.kind != "even-coxeter":
        raise KindMismatch("parikh_even needs kind even-coxeter, got %s" % spec.kind)
    _, counts, _ = _scan(spec, word)
    return {name: counts[i] for i, name in enumerate(spec.letters)}
