"""Pure-Python kernels.

These are the reference implementations of the hot inner loops: the
streaming geometric-representation scan for Coxeter groups, the integer
scan and shortlex passes for right-angled Coxeter and graph groups, and
the stratified oracle tables.  The compiled twin in ``_speed`` mirrors
each function; results must be bit-identical.  Python integers are
unbounded, so the pure kernels never request a retry.

Word encodings: letters are ids 0..n-1; a sweep covers every word of
length <= maxlen ordered by stratum and then big-endian digit value,
which makes the numeric order within a stratum the lexicographic one.
"""

from __future__ import annotations

import numpy as np

from ..cyclotomic import (ArithmeticFault, _float_sign, _interval_sign,
                          _reduction_table)

OK = 0
RETRY = 1
FAULT = 2

K_INF = -2

PARIKH_BIAS = 16  # per-letter pack offset so negative counters stay byte-sized


# -- indexing -------------------------------------------------------------


def stratum_offsets(n, maxlen):
    offs = [0]
    for k in range(maxlen + 1):
        offs.append(offs[-1] + n ** k)
    return offs


def encode_word(n, offs, word):
    local = 0
    for a in word:
        local = local * n + a
    return offs[len(word)] + local


def decode_word(n, offs, idx):
    k = 0
    while offs[k + 1] <= idx:
        k += 1
    local = idx - offs[k]
    out = [0] * k
    for p in range(k - 1, -1, -1):
        local, out[p] = divmod(local, n)
    return out


def _iter_words(n, k):
    """All digit lists of length k in big-endian numeric order."""
    word = [0] * k
    yield word
    total = n ** k
    for _ in range(total - 1):
        p = k - 1
        while word[p] == n - 1:
            word[p] = 0
            p -= 1
        word[p] += 1
        yield word


def _pack_parikh(counts):
    acc = 0
    for i, c in enumerate(counts):
        acc |= (c + PARIKH_BIAS) << (8 * i)
    return acc


def unpack_parikh(packed, n):
    return [((packed >> (8 * i)) & 0xFF) - PARIKH_BIAS for i in range(n)]


# -- Coxeter scan ---------------------------------------------------------
#
# tables = (n_base, two_m, kexp, costab) where kexp is an
# (n_base+1) x (n_base+1) tuple of rotation exponents: K_INF encodes the
# constant 2 (infinite order), anything else k encodes X^k + X^(2m-k).
# The extra letter n_base is the adjoined one of infinite order against
# everything; its column tracks the normal-form alphabet.


def _vec_sign(vec, m, redtab, phi_deg):
    """Sign of sum vec[t] * cos(t*pi/m); exact."""
    fast = _float_sign(vec, m)
    if fast:
        return fast
    if _vec_is_zero(vec, redtab, phi_deg):
        return 0
    abs_sum = sum(abs(a) for a in vec)
    bits = max(64, abs_sum.bit_length() + 32)
    cap = (4 * m + 2) * max(1, abs_sum.bit_length()) + 128
    return _interval_sign(vec, m, bits, max(bits, cap))


def _vec_is_zero(vec, redtab, phi_deg):
    if not any(vec):
        return True
    acc = [0] * phi_deg
    for j, a in enumerate(vec):
        if a:
            row = redtab[j]
            for t in range(phi_deg):
                if row[t]:
                    acc[t] += a * row[t]
    return not any(acc)


def _scan_step(P, a, kexp_row, n_ext, d):
    """P <- P * A(a) where A(a) is the generator matrix: a rank-one
    column update plus negation of column a."""
    base = [vec[:] for vec in P[a]]
    for j in range(n_ext):
        if j == a:
            continue
        k = kexp_row[j]
        col = P[j]
        if k == K_INF:
            for r in range(n_ext):
                cj, cb = col[r], base[r]
                for t in range(d):
                    cj[t] += 2 * cb[t]
        else:
            for r in range(n_ext):
                cj, cb = col[r], base[r]
                cj[:] = [cj[t] + cb[t - k] + cb[(t + k) % d] for t in range(d)]
    P[a] = [[-v for v in vec] for vec in base]


def cox_scan_one(tables, word):
    """One pass of the geodesic-length loop, also collecting per-letter
    counters and the normal-form alphabet mask.

    Returns (status, length, counts, alpha_mask); status FAULT means the
    sign dichotomy failed (every coefficient vector must be entirely
    >= 0 or entirely <= 0).
    """
    n_base, two_m, kexp, _costab = tables
    m = two_m // 2
    redtab, phi_deg = _reduction_table(m)
    n_ext = n_base + 1
    P = [[[0] * two_m for _ in range(n_ext)] for _ in range(n_ext)]
    for j in range(n_ext):
        P[j][j][0] = 1
    ell = 0
    counts = [0] * n_base
    for a in word:
        col = P[a]
        pos = neg = False
        for r in range(n_ext):
            s = _vec_sign(col[r], m, redtab, phi_deg)
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
        if pos == neg:  # mixed signs, or the impossible zero vector
            return (FAULT, ell, tuple(counts), 0)
        if pos:
            ell += 1
            counts[a] += 1
        else:
            ell -= 1
            counts[a] -= 1
        _scan_step(P, a, kexp[a], n_ext, two_m)
    mask = 0
    xcol = P[n_base]
    for b in range(n_base):
        if not _vec_is_zero(xcol[b], redtab, phi_deg):
            mask |= 1 << b
    return (OK, ell, tuple(counts), mask)


def cox_sweep(tables, maxlen):
    """cox_scan_one over every word of length <= maxlen; arrays indexed
    by the global word order."""
    n_base = tables[0]
    offs = stratum_offsets(n_base, maxlen)
    total = offs[-1]
    status = np.zeros(total, dtype=np.uint8)
    length = np.zeros(total, dtype=np.int8)
    alpha = np.zeros(total, dtype=np.int32)
    parikh = np.zeros(total, dtype=np.int64)
    idx = 0
    for k in range(maxlen + 1):
        for word in _iter_words(n_base, k):
            st, ell, counts, mask = cox_scan_one(tables, word)
            status[idx] = st
            length[idx] = ell
            alpha[idx] = mask
            parikh[idx] = _pack_parikh(counts)
            idx += 1
    return status, length, alpha, parikh


# -- right-angled integer scan --------------------------------------------
#
# dep is an n x n tuple of 0/1 rows over the trace alphabet (diagonal 1);
# the shortlex kernels extend it internally with a top letter dependent
# on everything, used for the window alphabet tests.


def racg_vector_one(n, dep, word, start):
    """Integer coefficient vector of the geometric representation
    applied to the unit vector of ``start``, letters applied from the
    right."""
    v = [0] * n
    v[start] = 1
    for t in range(len(word) - 1, -1, -1):
        c = word[t]
        row = dep[c]
        s = 0
        for b in range(n):
            if b != c and row[b] and v[b]:
                s += v[b]
        v[c] = -v[c] + 2 * s
    return (OK, v)


def _ext_dep(n, dep):
    rows = [tuple(dep[i]) + (1,) for i in range(n)]
    rows.append((1,) * (n + 1))
    return tuple(rows)


def _window_alpha_ok(n, dep_ext, word, lo, hi, a):
    """Does the normal-form alphabet of word[lo..hi] stay independent of
    the letter a?  Decided through the integer vector of the top letter."""
    v = [0] * (n + 1)
    v[n] = 1
    for t in range(hi, lo - 1, -1):
        c = word[t]
        row = dep_ext[c]
        s = 0
        for b in range(n + 1):
            if b != c and row[b] and v[b]:
                s += v[b]
        v[c] = -v[c] + 2 * s
    dep_a = dep_ext[a]
    for b in range(n):
        if v[b] and (b == a or dep_a[b]):
            return False
    return True


def _ashort_pass(n, dep_ext, word, a):
    """One elimination pass: on reading the letter a, jump to the
    furthest matching a whose window alphabet commutes with a, emitting
    the window with all a's deleted."""
    out = []
    L = len(word)
    positions = [p for p in range(L) if word[p] == a]
    i = 0
    while i < L:
        if word[i] != a:
            out.append(word[i])
            i += 1
            continue
        target = -1
        for j in reversed(positions):
            if j <= i:
                break
            if _window_alpha_ok(n, dep_ext, word, i + 1, j - 1, a):
                target = j
                break
        if target < 0:
            out.append(a)
            i += 1
        else:
            out.extend(c for c in word[i + 1:target] if c != a)
            i = target + 1
    return out


def _lexnf(n, dep, word):
    remaining = list(word)
    out = []
    while remaining:
        best = None
        for pos in range(len(remaining)):
            a = remaining[pos]
            blocked = False
            for q in range(pos):
                b = remaining[q]
                if a == b or dep[a][b]:
                    blocked = True
                    break
            if not blocked and (best is None or a < remaining[best]):
                best = pos
        out.append(remaining.pop(best))
    return out


def racg_shortlex_one(n, dep, word):
    """Shortlex normal form in the right-angled Coxeter group: one
    elimination pass per letter in declared order, then the
    lexicographic normal form of the resulting trace."""
    dep_ext = _ext_dep(n, dep)
    w = list(word)
    for a in range(n):
        w = _ashort_pass(n, dep_ext, w, a)
    return (OK, _lexnf(n, dep, w))


def _gamma_dep(n_sigma, indep):
    n_g = 2 * n_sigma
    rows = []
    for x in range(n_g):
        row = []
        for y in range(n_g):
            if x // 2 == y // 2:
                row.append(1)
            else:
                row.append(0 if indep[x // 2][y // 2] else 1)
        rows.append(tuple(row))
    return tuple(rows)


def graph_shortlex_one(n_sigma, indep, word):
    """Shortlex normal form in the graph group: duplicate every letter
    into an involution pair, normalize in the right-angled Coxeter group
    over the doubled alphabet, then contract the pairs back."""
    n_g = 2 * n_sigma
    dep_g = _gamma_dep(n_sigma, indep)
    embedded = []
    for g in word:
        embedded.append(g)
        embedded.append(g ^ 1)
    st, nf = racg_shortlex_one(n_g, dep_g, embedded)
    if st != OK:
        return (st, [])
    if len(nf) % 2 != 0:
        return (FAULT, [])
    contracted = []
    for t in range(0, len(nf), 2):
        if nf[t + 1] != nf[t] ^ 1:
            return (FAULT, [])
        contracted.append(nf[t])
    return (OK, _lexnf(n_g, dep_g, contracted))


def racg_sweep(n, dep, maxlen):
    """Shortlex (encoded as a global word index) and normal-form
    alphabet mask for every word of length <= maxlen."""
    offs = stratum_offsets(n, maxlen)
    total = offs[-1]
    slex = np.zeros(total, dtype=np.int64)
    alpha = np.zeros(total, dtype=np.int32)
    dep_ext = _ext_dep(n, dep)
    idx = 0
    for k in range(maxlen + 1):
        for word in _iter_words(n, k):
            _, nf = racg_shortlex_one(n, dep, word)
            slex[idx] = encode_word(n, offs, nf)
            _, v = racg_vector_one(n + 1, dep_ext, word, n)
            mask = 0
            for b in range(n):
                if v[b]:
                    mask |= 1 << b
            alpha[idx] = mask
            idx += 1
    return slex, alpha


def graph_sweep(n_sigma, indep, maxlen):
    n_g = 2 * n_sigma
    offs = stratum_offsets(n_g, maxlen)
    total = offs[-1]
    slex = np.zeros(total, dtype=np.int64)
    idx = 0
    for k in range(maxlen + 1):
        for word in _iter_words(n_g, k):
            st, nf = graph_shortlex_one(n_sigma, indep, word)
            if st != OK:
                raise ArithmeticFault("pair contraction failed in graph sweep")
            slex[idx] = encode_word(n_g, offs, nf)
            idx += 1
    return slex


# -- oracle tables --------------------------------------------------------
#
# Stratified dynamic programming over every word of length <= maxlen.
# Length-preserving moves (braid exchanges, independent swaps) partition
# a stratum into components; length-reducing moves (square or inverse
# cancellations) jump two strata down.  Minimal reachable length and the
# shortlex geodesic propagate bottom-up.


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _braid_neighbors(word, mmat):
    """Indices rewritten under one braid exchange, yielded as new digit
    lists."""
    k = len(word)
    for p in range(k - 1):
        x, y = word[p], word[p + 1]
        if x == y:
            continue
        mm = mmat[x][y]
        if mm < 2 or p + mm > k:
            continue
        ok = True
        for i in range(mm):
            if word[p + i] != (x if i % 2 == 0 else y):
                ok = False
                break
        if ok:
            other = list(word)
            for i in range(mm):
                other[p + i] = y if i % 2 == 0 else x
            yield other


def _table_dp(n, maxlen, same_length_neighbors, cancels_at, want_parikh):
    offs = stratum_offsets(n, maxlen)
    total = offs[-1]
    f = np.zeros(total, dtype=np.uint8)
    slex = np.zeros(total, dtype=np.int64)
    pk = np.zeros(total, dtype=np.int64)
    pk_ok = np.ones(total, dtype=np.uint8)
    if want_parikh:
        pk[0] = _pack_parikh([0] * n)
    NO_F = 255
    for k in range(1, maxlen + 1):
        size = n ** k
        base = offs[k]
        uf = _UnionFind(size)
        for local, word in enumerate(_iter_words(n, k)):
            for other in same_length_neighbors(word):
                loc2 = 0
                for a in other:
                    loc2 = loc2 * n + a
                uf.union(local, loc2)
        comp_f = {}
        comp_s = {}
        comp_pk = {}
        comp_pk_ok = {}
        comp_member = {}
        comp_member_pk = {}
        comp_member_pk_ok = {}
        for local, word in enumerate(_iter_words(n, k)):
            r = uf.find(local)
            if r not in comp_member or local < comp_member[r]:
                comp_member[r] = local
            if want_parikh:
                counts = [0] * n
                for a in word:
                    counts[a] += 1
                packed = _pack_parikh(counts)
                if r not in comp_member_pk:
                    comp_member_pk[r] = packed
                    comp_member_pk_ok[r] = 1
                elif comp_member_pk[r] != packed:
                    comp_member_pk_ok[r] = 0
            for p in cancels_at(word):
                reduced = word[:p] + word[p + 2:]
                loc2 = 0
                for a in reduced:
                    loc2 = loc2 * n + a
                tg = offs[k - 2] + loc2
                ft, st = int(f[tg]), int(slex[tg])
                cur = comp_f.get(r, NO_F)
                if ft < cur:
                    comp_f[r] = ft
                    comp_s[r] = st
                    if want_parikh:
                        comp_pk[r] = int(pk[tg])
                        comp_pk_ok[r] = int(pk_ok[tg])
                elif ft == cur:
                    comp_s[r] = min(comp_s[r], st)
                    if want_parikh:
                        if not pk_ok[tg] or int(pk[tg]) != comp_pk[r]:
                            comp_pk_ok[r] = 0
        for local in range(size):
            r = uf.find(local)
            g = base + local
            if r in comp_f:
                f[g] = comp_f[r]
                slex[g] = comp_s[r]
                if want_parikh:
                    pk[g] = comp_pk[r]
                    pk_ok[g] = comp_pk_ok[r]
            else:
                f[g] = k
                slex[g] = base + comp_member[r]
                if want_parikh:
                    pk[g] = comp_member_pk[r]
                    pk_ok[g] = comp_member_pk_ok[r]
    if want_parikh:
        return f, slex, pk, pk_ok
    return f, slex


def oracle_cox_table(n, mmat, maxlen):
    """Geodesic table for a Coxeter matrix: braid exchanges plus square
    deletions, with the geodesic Parikh data."""
    def neighbors(word):
        return _braid_neighbors(word, mmat)

    def cancels(word):
        return [p for p in range(len(word) - 1) if word[p] == word[p + 1]]

    return _table_dp(n, maxlen, neighbors, cancels, True)


def oracle_graph_table(n_sigma, indep, maxlen):
    """Geodesic table over the doubled alphabet of a graph group:
    independent swaps plus inverse cancellations."""
    n_g = 2 * n_sigma

    def swappable(x, y):
        return x // 2 != y // 2 and indep[x // 2][y // 2]

    def neighbors(word):
        for p in range(len(word) - 1):
            if swappable(word[p], word[p + 1]):
                other = list(word)
                other[p], other[p + 1] = other[p + 1], other[p]
                yield other

    def cancels(word):
        return [p for p in range(len(word) - 1) if word[p + 1] == word[p] ^ 1]

    return _table_dp(n_g, maxlen, neighbors, cancels, False)
