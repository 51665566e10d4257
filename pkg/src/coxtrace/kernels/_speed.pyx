# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled kernels: fixed-width twins of the pure-Python reference.

Coefficients live in int64 with conservative overflow guards; any
computation that might overflow, and any sign a double evaluation
cannot settle against its rigorous error bound (and that is not an
exact zero), reports RETRY so the dispatcher reruns the pure kernel.
Results are otherwise identical to the pure backend.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

import numpy as np

from ..cyclotomic import _reduction_table

OK = 0
RETRY = 1
FAULT = 2

cdef int C_OK = 0
cdef int C_RETRY = 1
cdef int C_FAULT = 2

cdef int K_INF = -2

# hard caps for the fixed-width path; beyond them we RETRY into pure
cdef int CAP_N = 18          # letters including the adjoined one
cdef int CAP_D = 64          # ring degree 2m
cdef int CAP_PHI = 64
cdef long long OVF = <long long> 1 << 60
cdef double FLOAT_SLACK = 1.0 / 281474976710656.0   # 2 ** -48
cdef int PARIKH_BIAS = 16

cdef extern from "math.h":
    double cos(double x) nogil
    double fabs(double x) nogil


# -- shared helpers --------------------------------------------------------


cdef inline long long llabs64(long long x) nogil:
    return x if x >= 0 else -x


def _offsets_list(int n, int maxlen):
    offs = [0]
    cdef long long acc = 0, p = 1
    cdef int k
    for k in range(maxlen + 1):
        acc += p
        offs.append(acc)
        p *= n
    return offs


# -- Coxeter scan ----------------------------------------------------------


cdef struct CoxTab:
    int n_base
    int n_ext
    int two_m
    int m
    int phi_deg
    int kexp[18][18]
    double costab[64]
    long long redtab[64][64]
    long long red_guard     # abs-sum cap keeping the zero reduction in range


cdef int _build_cox_tab(object tables, CoxTab* tab) except -1:
    """Fill the C-side tables; returns C_RETRY when out of fixed range."""
    n_base, two_m, kexp, costab = tables
    if n_base + 1 > CAP_N or two_m > CAP_D:
        return C_RETRY
    tab.n_base = n_base
    tab.n_ext = n_base + 1
    tab.two_m = two_m
    tab.m = two_m // 2
    cdef int a, j, t
    for a in range(tab.n_ext):
        for j in range(tab.n_ext):
            tab.kexp[a][j] = kexp[a][j]
    for t in range(two_m):
        tab.costab[t] = costab[t]
    redtab, phi_deg = _reduction_table(tab.m)
    if phi_deg > CAP_PHI:
        return C_RETRY
    tab.phi_deg = phi_deg
    cdef long long red_max = 1
    cdef long long v
    for t in range(two_m):
        row = redtab[t]
        for j in range(phi_deg):
            v = row[j]
            tab.redtab[t][j] = v
            if llabs64(v) > red_max:
                red_max = llabs64(v)
    tab.red_guard = ((<long long> 1) << 62) // (red_max * two_m + 1)
    return C_OK


cdef int _vec_is_zero(CoxTab* tab, long long* vec) nogil:
    """1 zero, 0 nonzero, C_RETRY when the reduction could overflow."""
    cdef int t, j
    cdef long long abssum = 0
    for t in range(tab.two_m):
        abssum += llabs64(vec[t])
    if abssum == 0:
        return 1
    if abssum > tab.red_guard:
        return C_RETRY + 8  # distinct from 0/1
    cdef long long acc[64]
    memset(acc, 0, tab.phi_deg * sizeof(long long))
    for t in range(tab.two_m):
        if vec[t] != 0:
            for j in range(tab.phi_deg):
                acc[j] += vec[t] * tab.redtab[t][j]
    for j in range(tab.phi_deg):
        if acc[j] != 0:
            return 0
    return 1


cdef int _vec_sign(CoxTab* tab, long long* vec) nogil:
    """-1/0/+1, or 9 when undecided (caller retries in pure)."""
    cdef double total = 0.0
    cdef double abssum = 0.0
    cdef int t
    cdef long long a
    cdef bint any_nonzero = 0
    for t in range(tab.two_m):
        a = vec[t]
        if a != 0:
            any_nonzero = 1
            total += a * tab.costab[t]
            abssum += <double> llabs64(a)
    if not any_nonzero:
        return 0
    cdef double bound = abssum * FLOAT_SLACK * tab.two_m
    if total > bound:
        return 1
    if total < -bound:
        return -1
    cdef int z = _vec_is_zero(tab, vec)
    if z == 1:
        return 0
    return 9


cdef int _scan_step(CoxTab* tab, long long* P, int a) nogil:
    """P <- P * A(a); P is column-major [col][row][coeff]."""
    cdef int n_ext = tab.n_ext
    cdef int d = tab.two_m
    cdef int colsz = n_ext * d
    cdef long long base[18 * 64]
    memcpy(base, P + a * colsz, colsz * sizeof(long long))
    cdef int j, r, t, k, tt
    cdef long long val
    cdef long long* col
    cdef long long* cb
    for j in range(n_ext):
        if j == a:
            continue
        k = tab.kexp[a][j]
        col = P + j * colsz
        if k == K_INF:
            for r in range(n_ext):
                cb = base + r * d
                for t in range(d):
                    val = col[r * d + t] + 2 * cb[t]
                    if llabs64(val) > OVF:
                        return C_RETRY
                    col[r * d + t] = val
        else:
            for r in range(n_ext):
                cb = base + r * d
                for t in range(d):
                    tt = t - k
                    if tt < 0:
                        tt += d
                    val = col[r * d + t] + cb[tt]
                    tt = t + k
                    if tt >= d:
                        tt -= d
                    val += cb[tt]
                    if llabs64(val) > OVF:
                        return C_RETRY
                    col[r * d + t] = val
    col = P + a * colsz
    for t in range(colsz):
        col[t] = -base[t]
    return C_OK


cdef int _scan_sign_test(CoxTab* tab, long long* P, int a) nogil:
    """Dichotomy-checked sign of column a: +1, -1, C_FAULT or 9."""
    cdef int r, s
    cdef bint pos = 0, neg = 0
    cdef int colsz = tab.n_ext * tab.two_m
    for r in range(tab.n_ext):
        s = _vec_sign(tab, P + a * colsz + r * tab.two_m)
        if s == 9:
            return 9
        if s > 0:
            pos = 1
        elif s < 0:
            neg = 1
    if pos == neg:
        return C_FAULT
    return 1 if pos else -1


cdef int _alpha_mask(CoxTab* tab, long long* P, int* mask_out) nogil:
    cdef int b, z
    cdef int mask = 0
    cdef int colsz = tab.n_ext * tab.two_m
    cdef long long* xcol = P + tab.n_base * colsz
    for b in range(tab.n_base):
        z = _vec_is_zero(tab, xcol + b * tab.two_m)
        if z > 1:
            return C_RETRY
        if z == 0:
            mask |= 1 << b
    mask_out[0] = mask
    return C_OK


def cox_scan_one(tables, word):
    cdef CoxTab tab
    if _build_cox_tab(tables, &tab) != C_OK:
        return (RETRY, 0, (), 0)
    cdef int L = len(word)
    cdef int colsz = tab.n_ext * tab.two_m
    cdef long long* P = <long long*> malloc(tab.n_ext * colsz * sizeof(long long))
    cdef int* w = <int*> malloc((L + 1) * sizeof(int))
    if P == NULL or w == NULL:
        free(P); free(w)
        raise MemoryError()
    cdef int i, a, s, status = C_OK
    cdef int mask = 0
    cdef long long ell = 0
    cdef long long counts[18]
    try:
        for i in range(L):
            w[i] = word[i]
        memset(P, 0, tab.n_ext * colsz * sizeof(long long))
        for i in range(tab.n_ext):
            P[i * colsz + i * tab.two_m] = 1
        memset(counts, 0, tab.n_ext * sizeof(long long))
        for i in range(L):
            a = w[i]
            s = _scan_sign_test(&tab, P, a)
            if s == 9:
                return (RETRY, 0, (), 0)
            if s == C_FAULT:
                return (FAULT, int(ell),
                        tuple(counts[j] for j in range(tab.n_base)), 0)
            ell += s
            counts[a] += s
            if _scan_step(&tab, P, a) != C_OK:
                return (RETRY, 0, (), 0)
        if _alpha_mask(&tab, P, &mask) != C_OK:
            return (RETRY, 0, (), 0)
        return (OK, int(ell), tuple(counts[j] for j in range(tab.n_base)), mask)
    finally:
        free(P)
        free(w)


cdef void _sweep_fill(unsigned char[::1] status, long long* offs, int n,
                      int depth, int maxlen, long long local, int code) nogil:
    """Mark a whole subtree with an error code; the dispatcher reruns
    those words through the pure kernel."""
    cdef int c
    status[offs[depth] + local] = <unsigned char> code
    if depth < maxlen:
        for c in range(n):
            _sweep_fill(status, offs, n, depth + 1, maxlen,
                        local * n + c, code)


cdef void _sweep_node(CoxTab* tab, long long* pstack, long long* ellstack,
                      long long* cntstack, unsigned char[::1] status,
                      signed char[::1] length, int[::1] alpha,
                      long long[::1] parikh, long long* offs,
                      int depth, int maxlen, long long local) nogil:
    cdef int n = tab.n_base
    cdef int colsz = tab.n_ext * tab.two_m
    cdef int psize = tab.n_ext * colsz
    cdef long long* P = pstack + depth * psize
    cdef long long* counts = cntstack + depth * tab.n_ext
    cdef long long idx = offs[depth] + local
    cdef int mask = 0, c, s, j
    cdef long long packed
    if _alpha_mask(tab, P, &mask) != C_OK:
        _sweep_fill(status, offs, n, depth, maxlen, local, C_RETRY)
        return
    status[idx] = C_OK
    length[idx] = <signed char> ellstack[depth]
    alpha[idx] = mask
    packed = 0
    for j in range(n):
        packed |= (counts[j] + PARIKH_BIAS) << (8 * j)
    parikh[idx] = packed
    if depth == maxlen:
        return
    cdef long long* Pc = pstack + (depth + 1) * psize
    cdef long long* cc = cntstack + (depth + 1) * tab.n_ext
    for c in range(n):
        s = _scan_sign_test(tab, P, c)
        if s == 9 or s == C_FAULT:
            _sweep_fill(status, offs, n, depth + 1, maxlen, local * n + c,
                        C_RETRY if s == 9 else C_FAULT)
            continue
        memcpy(Pc, P, psize * sizeof(long long))
        memcpy(cc, counts, tab.n_ext * sizeof(long long))
        ellstack[depth + 1] = ellstack[depth] + s
        cc[c] += s
        if _scan_step(tab, Pc, c) != C_OK:
            _sweep_fill(status, offs, n, depth + 1, maxlen, local * n + c,
                        C_RETRY)
            continue
        _sweep_node(tab, pstack, ellstack, cntstack, status, length, alpha,
                    parikh, offs, depth + 1, maxlen, local * n + c)


def cox_sweep(tables, int maxlen):
    cdef CoxTab tab
    if _build_cox_tab(tables, &tab) != C_OK:
        raise ValueError("spec out of range for the compiled backend")
    if tab.n_base > 7:
        raise ValueError("parikh packing supports at most 7 letters")
    offs_list = _offsets_list(tab.n_base, maxlen)
    cdef long long total = offs_list[len(offs_list) - 1]
    status = np.zeros(total, dtype=np.uint8)
    length = np.zeros(total, dtype=np.int8)
    alpha = np.zeros(total, dtype=np.int32)
    parikh = np.zeros(total, dtype=np.int64)
    cdef unsigned char[::1] status_v = status
    cdef signed char[::1] length_v = length
    cdef int[::1] alpha_v = alpha
    cdef long long[::1] parikh_v = parikh
    cdef int psize = tab.n_ext * tab.n_ext * tab.two_m
    cdef long long* pstack = <long long*> malloc((maxlen + 1) * psize * sizeof(long long))
    cdef long long* ellstack = <long long*> malloc((maxlen + 1) * sizeof(long long))
    cdef long long* cntstack = <long long*> malloc((maxlen + 1) * tab.n_ext * sizeof(long long))
    cdef long long* offs = <long long*> malloc((maxlen + 2) * sizeof(long long))
    if pstack == NULL or ellstack == NULL or cntstack == NULL or offs == NULL:
        free(pstack); free(ellstack); free(cntstack); free(offs)
        raise MemoryError()
    cdef int i
    try:
        for i in range(maxlen + 2):
            offs[i] = offs_list[i]
        memset(pstack, 0, psize * sizeof(long long))
        for i in range(tab.n_ext):
            pstack[i * tab.n_ext * tab.two_m + i * tab.two_m] = 1
        memset(cntstack, 0, tab.n_ext * sizeof(long long))
        ellstack[0] = 0
        with nogil:
            _sweep_node(&tab, pstack, ellstack, cntstack, status_v, length_v,
                        alpha_v, parikh_v, offs, 0, maxlen, 0)
    finally:
        free(pstack); free(ellstack); free(cntstack); free(offs)
    return status, length, alpha, parikh


# -- right-angled integer kernels ------------------------------------------


cdef int _racg_apply(int n, char* dep, int* word, int lo, int hi,
                     long long* v) nogil:
    """Apply letters word[lo..hi] right to left to the vector v."""
    cdef int t, b, c
    cdef long long s
    for t in range(hi, lo - 1, -1):
        c = word[t]
        s = 0
        for b in range(n):
            if b != c and dep[c * n + b]:
                s += v[b]
        v[c] = -v[c] + 2 * s
        if llabs64(v[c]) > OVF:
            return C_RETRY
    return C_OK


def racg_vector_one(int n, dep, word, int start):
    cdef int L = len(word)
    cdef char* cdep = <char*> malloc(n * n * sizeof(char))
    cdef int* w = <int*> malloc((L + 1) * sizeof(int))
    cdef long long* v = <long long*> malloc(n * sizeof(long long))
    if cdep == NULL or w == NULL or v == NULL:
        free(cdep); free(w); free(v)
        raise MemoryError()
    cdef int i, j
    try:
        for i in range(n):
            row = dep[i]
            for j in range(n):
                cdep[i * n + j] = 1 if row[j] else 0
        for i in range(L):
            w[i] = word[i]
        memset(v, 0, n * sizeof(long long))
        v[start] = 1
        if _racg_apply(n, cdep, w, 0, L - 1, v) != C_OK:
            return (RETRY, [])
        return (OK, [v[i] for i in range(n)])
    finally:
        free(cdep); free(w); free(v)


cdef bint _window_ok(int n, char* dep_ext, int* word, int lo, int hi,
                     int a) nogil:
    """Normal-form alphabet of word[lo..hi] independent of a?  n is the
    base alphabet size; dep_ext is (n+1) x (n+1) with the top letter."""
    cdef long long v[18]
    cdef int ne = n + 1
    memset(v, 0, ne * sizeof(long long))
    v[n] = 1
    if _racg_apply(ne, dep_ext, word, lo, hi, v) != C_OK:
        return 0  # cannot happen under the length guards
    cdef int b
    for b in range(n):
        if v[b] != 0 and (b == a or dep_ext[a * ne + b]):
            return 0
    return 1


cdef int _ashort_pass(int n, char* dep_ext, int* word, int L, int a,
                      int* out) nogil:
    """One elimination pass for the letter a; returns the new length."""
    cdef int olen = 0
    cdef int i = 0, j, c
    cdef bint found
    while i < L:
        c = word[i]
        if c != a:
            out[olen] = c
            olen += 1
            i += 1
            continue
        found = 0
        j = L - 1
        while j > i:
            if word[j] == a and _window_ok(n, dep_ext, word, i + 1, j - 1, a):
                found = 1
                break
            j -= 1
        if not found:
            out[olen] = a
            olen += 1
            i += 1
        else:
            for c in range(i + 1, j):
                if word[c] != a:
                    out[olen] = word[c]
                    olen += 1
            i = j + 1
    return olen


cdef int _lexnf(int n, char* dep, int* word, int L, int* out) nogil:
    """Greedy least linearization; dep is n x n over the trace alphabet."""
    cdef int done = 0, pos, q, best, a
    cdef bint blocked
    cdef int olen = 0
    # emitted flags reuse out tail as scratch? keep a local array
    cdef char used[40]
    memset(used, 0, L * sizeof(char))
    while olen < L:
        best = -1
        for pos in range(L):
            if used[pos]:
                continue
            a = word[pos]
            blocked = 0
            for q in range(pos):
                if not used[q] and (word[q] == a or dep[a * n + word[q]]):
                    blocked = 1
                    break
            if not blocked and (best < 0 or a < word[best]):
                best = pos
        used[best] = 1
        out[olen] = word[best]
        olen += 1
    return olen


cdef int _racg_shortlex_core(int n, char* dep, char* dep_ext, int* word,
                             int L, int* out) nogil:
    """Passes in letter order, then the lexicographic normal form.
    Returns the output length."""
    cdef int a, newlen
    cdef int cur = L
    # two ping-pong buffers carved out of out: caller sized out >= 2L+2
    cdef int* buf = out + L + 1
    cdef int i
    for i in range(L):
        buf[i] = word[i]
    for a in range(n):
        newlen = _ashort_pass(n, dep_ext, buf, cur, a, out)
        for i in range(newlen):
            buf[i] = out[i]
        cur = newlen
    return _lexnf(n, dep, buf, cur, out)


def racg_shortlex_one(int n, dep, word):
    cdef int L = len(word)
    if L > 34 or n + 1 > CAP_N:
        return (RETRY, [])
    cdef char* cdep = <char*> malloc(n * n * sizeof(char))
    cdef char* cext = <char*> malloc((n + 1) * (n + 1) * sizeof(char))
    cdef int* w = <int*> malloc((L + 1) * sizeof(int))
    cdef int* out = <int*> malloc((2 * L + 2) * sizeof(int))
    if cdep == NULL or cext == NULL or w == NULL or out == NULL:
        free(cdep); free(cext); free(w); free(out)
        raise MemoryError()
    cdef int i, j, olen
    try:
        for i in range(n):
            row = dep[i]
            for j in range(n):
                cdep[i * n + j] = 1 if row[j] else 0
        for i in range(n + 1):
            for j in range(n + 1):
                if i == n or j == n:
                    cext[i * (n + 1) + j] = 1
                else:
                    cext[i * (n + 1) + j] = cdep[i * n + j]
        for i in range(L):
            w[i] = word[i]
        olen = _racg_shortlex_core(n, cdep, cext, w, L, out)
        return (OK, [out[i] for i in range(olen)])
    finally:
        free(cdep); free(cext); free(w); free(out)


cdef void _gamma_dep(int n_sigma, char* indep, char* dep_g) nogil:
    cdef int ng = 2 * n_sigma
    cdef int x, y
    for x in range(ng):
        for y in range(ng):
            if x // 2 == y // 2:
                dep_g[x * ng + y] = 1
            else:
                dep_g[x * ng + y] = 0 if indep[(x // 2) * n_sigma + (y // 2)] else 1


cdef int _graph_shortlex_core(int n_sigma, char* dep_g, char* dep_g_ext,
                              int* word, int L, int* out) nogil:
    """Embed, normalize over the doubled alphabet, contract the pairs.
    Returns output length, or -1 on a pairing fault."""
    cdef int ng = 2 * n_sigma
    cdef int i, t, olen
    # embedded word lives in out scratch: caller sized out >= 8L+8
    cdef int* emb = out + 4 * L + 4
    for i in range(L):
        emb[2 * i] = word[i]
        emb[2 * i + 1] = word[i] ^ 1
    olen = _racg_shortlex_core(ng, dep_g, dep_g_ext, emb, 2 * L, out)
    if olen % 2 != 0:
        return -1
    cdef int clen = 0
    for t in range(0, olen, 2):
        if out[t + 1] != (out[t] ^ 1):
            return -1
        emb[clen] = out[t]
        clen += 1
    return _lexnf(ng, dep_g, emb, clen, out)


def graph_shortlex_one(int n_sigma, indep, word):
    cdef int L = len(word)
    cdef int ng = 2 * n_sigma
    if 2 * L > 34 or ng + 1 > CAP_N:
        return (RETRY, [])
    cdef char* cind = <char*> malloc(n_sigma * n_sigma * sizeof(char))
    cdef char* dep_g = <char*> malloc(ng * ng * sizeof(char))
    cdef char* dep_ge = <char*> malloc((ng + 1) * (ng + 1) * sizeof(char))
    cdef int* w = <int*> malloc((L + 1) * sizeof(int))
    cdef int* out = <int*> malloc((8 * L + 8) * sizeof(int))
    if cind == NULL or dep_g == NULL or dep_ge == NULL or w == NULL or out == NULL:
        free(cind); free(dep_g); free(dep_ge); free(w); free(out)
        raise MemoryError()
    cdef int i, j, olen
    try:
        for i in range(n_sigma):
            row = indep[i]
            for j in range(n_sigma):
                cind[i * n_sigma + j] = 1 if row[j] else 0
        _gamma_dep(n_sigma, cind, dep_g)
        for i in range(ng + 1):
            for j in range(ng + 1):
                if i == ng or j == ng:
                    dep_ge[i * (ng + 1) + j] = 1
                else:
                    dep_ge[i * (ng + 1) + j] = dep_g[i * ng + j]
        for i in range(L):
            w[i] = word[i]
        olen = _graph_shortlex_core(n_sigma, dep_g, dep_ge, w, L, out)
        if olen < 0:
            return (FAULT, [])
        return (OK, [out[i] for i in range(olen)])
    finally:
        free(cind); free(dep_g); free(dep_ge); free(w); free(out)


cdef void _next_word(int* digits, int k, int n) nogil:
    cdef int p = k - 1
    while digits[p] == n - 1:
        digits[p] = 0
        p -= 1
    digits[p] += 1


def racg_sweep(int n, dep, int maxlen):
    if maxlen > 17 or n + 1 > CAP_N:
        raise ValueError("sweep out of range for the compiled backend")
    offs_list = _offsets_list(n, maxlen)
    cdef long long total = offs_list[len(offs_list) - 1]
    slex = np.zeros(total, dtype=np.int64)
    alpha = np.zeros(total, dtype=np.int32)
    cdef long long[::1] slex_v = slex
    cdef int[::1] alpha_v = alpha
    cdef char* cdep = <char*> malloc(n * n * sizeof(char))
    cdef char* cext = <char*> malloc((n + 1) * (n + 1) * sizeof(char))
    cdef int* w = <int*> malloc((maxlen + 1) * sizeof(int))
    cdef int* out = <int*> malloc((2 * maxlen + 2) * sizeof(int))
    cdef long long* offs = <long long*> malloc((maxlen + 2) * sizeof(long long))
    cdef long long* v = <long long*> malloc((n + 1) * sizeof(long long))
    if cdep == NULL or cext == NULL or w == NULL or out == NULL or offs == NULL or v == NULL:
        free(cdep); free(cext); free(w); free(out); free(offs); free(v)
        raise MemoryError()
    cdef int i, j, k, olen, mask, b
    cdef long long idx, count, enc, wi
    try:
        for i in range(n):
            row = dep[i]
            for j in range(n):
                cdep[i * n + j] = 1 if row[j] else 0
        for i in range(n + 1):
            for j in range(n + 1):
                if i == n or j == n:
                    cext[i * (n + 1) + j] = 1
                else:
                    cext[i * (n + 1) + j] = cdep[i * n + j]
        for i in range(maxlen + 2):
            offs[i] = offs_list[i]
        with nogil:
            idx = 0
            for k in range(maxlen + 1):
                count = 1
                for i in range(k):
                    count *= n
                memset(w, 0, (maxlen + 1) * sizeof(int))
                for wi in range(count):
                    olen = _racg_shortlex_core(n, cdep, cext, w, k, out)
                    enc = 0
                    for i in range(olen):
                        enc = enc * n + out[i]
                    slex_v[idx] = offs[olen] + enc
                    memset(v, 0, (n + 1) * sizeof(long long))
                    v[n] = 1
                    _racg_apply(n + 1, cext, w, 0, k - 1, v)
                    mask = 0
                    for b in range(n):
                        if v[b] != 0:
                            mask |= 1 << b
                    alpha_v[idx] = mask
                    idx += 1
                    if idx < offs[k + 1]:
                        _next_word(w, k, n)
    finally:
        free(cdep); free(cext); free(w); free(out); free(offs); free(v)
    return slex, alpha


def graph_sweep(int n_sigma, indep, int maxlen):
    cdef int ng = 2 * n_sigma
    if 2 * maxlen > 34 or ng + 1 > CAP_N:
        raise ValueError("sweep out of range for the compiled backend")
    offs_list = _offsets_list(ng, maxlen)
    cdef long long total = offs_list[len(offs_list) - 1]
    slex = np.zeros(total, dtype=np.int64)
    cdef long long[::1] slex_v = slex
    cdef char* cind = <char*> malloc(n_sigma * n_sigma * sizeof(char))
    cdef char* dep_g = <char*> malloc(ng * ng * sizeof(char))
    cdef char* dep_ge = <char*> malloc((ng + 1) * (ng + 1) * sizeof(char))
    cdef int* w = <int*> malloc((maxlen + 1) * sizeof(int))
    cdef int* out = <int*> malloc((8 * maxlen + 8) * sizeof(int))
    cdef long long* offs = <long long*> malloc((maxlen + 2) * sizeof(long long))
    if cind == NULL or dep_g == NULL or dep_ge == NULL or w == NULL or out == NULL or offs == NULL:
        free(cind); free(dep_g); free(dep_ge); free(w); free(out); free(offs)
        raise MemoryError()
    cdef int i, j, k, olen
    cdef long long idx, count, enc, wi
    try:
        for i in range(n_sigma):
            row = indep[i]
            for j in range(n_sigma):
                cind[i * n_sigma + j] = 1 if row[j] else 0
        _gamma_dep(n_sigma, cind, dep_g)
        for i in range(ng + 1):
            for j in range(ng + 1):
                if i == ng or j == ng:
                    dep_ge[i * (ng + 1) + j] = 1
                else:
                    dep_ge[i * (ng + 1) + j] = dep_g[i * ng + j]
        for i in range(maxlen + 2):
            offs[i] = offs_list[i]
        with nogil:
            idx = 0
            for k in range(maxlen + 1):
                count = 1
                for i in range(k):
                    count *= ng
                memset(w, 0, (maxlen + 1) * sizeof(int))
                for wi in range(count):
                    olen = _graph_shortlex_core(n_sigma, dep_g, dep_ge, w, k, out)
                    if olen < 0:
                        with gil:
                            raise RuntimeError("pair contraction failed in graph sweep")
                    enc = 0
                    for i in range(olen):
                        enc = enc * ng + out[i]
                    slex_v[idx] = offs[olen] + enc
                    idx += 1
                    if idx < offs[k + 1]:
                        _next_word(w, k, ng)
    finally:
        free(cind); free(dep_g); free(dep_ge); free(w); free(out); free(offs)
    return slex


# -- oracle tables ---------------------------------------------------------


cdef long long _uf_find(int* parent, long long x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void _uf_union(int* parent, long long x, long long y) nogil:
    cdef long long rx = _uf_find(parent, x)
    cdef long long ry = _uf_find(parent, y)
    if rx != ry:
        if rx < ry:
            parent[ry] = <int> rx
        else:
            parent[rx] = <int> ry


def oracle_cox_table(int n, mmat, int maxlen):
    return _oracle_table(n, mmat, None, maxlen, True)


def oracle_graph_table(int n_sigma, indep, int maxlen):
    f, slex, pk, pk_ok = _oracle_table(2 * n_sigma, None, indep, maxlen, False)
    return f, slex


def _oracle_table(int n, mmat, indep, int maxlen, bint want_parikh):
    if maxlen > 12 or n > CAP_N:
        raise ValueError("table out of range for the compiled backend")
    if want_parikh and n > 7:
        raise ValueError("parikh packing supports at most 7 letters")
    offs_list = _offsets_list(n, maxlen)
    cdef long long total = offs_list[len(offs_list) - 1]
    f_arr = np.zeros(total, dtype=np.uint8)
    slex_arr = np.zeros(total, dtype=np.int64)
    pk_arr = np.zeros(total, dtype=np.int64)
    pkok_arr = np.ones(total, dtype=np.uint8)
    cdef unsigned char[::1] f = f_arr
    cdef long long[::1] slex = slex_arr
    cdef long long[::1] pk = pk_arr
    cdef unsigned char[::1] pk_ok = pkok_arr

    cdef int cm[18][18]
    cdef char swap_ok[18][18]
    cdef int i, j
    cdef int half = n // 2
    if mmat is not None:
        for i in range(n):
            row = mmat[i]
            for j in range(n):
                cm[i][j] = row[j]
    else:
        for i in range(n):
            for j in range(n):
                if i // 2 == j // 2:
                    swap_ok[i][j] = 0
                else:
                    swap_ok[i][j] = 1 if indep[i // 2][j // 2] else 0

    cdef long long offs[16]
    cdef long long pows[16]
    for i in range(maxlen + 2):
        offs[i] = offs_list[i]
    pows[0] = 1
    for i in range(1, maxlen + 1):
        pows[i] = pows[i - 1] * n

    cdef long long pk_bias = _pack_zero(n)
    if want_parikh:
        pk[0] = pk_bias

    cdef int k, p, t, x, y, mm
    cdef long long size, local, loc2, r, tg, ft, st, high, low
    cdef int digits[16]
    cdef int* parent
    cdef unsigned char* comp_f
    cdef long long* comp_s
    cdef long long* comp_pk
    cdef unsigned char* comp_pkok
    cdef long long* comp_member
    cdef long long* comp_mpk
    cdef unsigned char* comp_mpkok
    cdef bint is_braid = mmat is not None
    cdef bint altok
    cdef long long packed, cur

    for k in range(1, maxlen + 1):
        size = pows[k]
        parent = <int*> malloc(size * sizeof(int))
        comp_f = <unsigned char*> malloc(size * sizeof(unsigned char))
        comp_s = <long long*> malloc(size * sizeof(long long))
        comp_pk = <long long*> malloc(size * sizeof(long long))
        comp_pkok = <unsigned char*> malloc(size * sizeof(unsigned char))
        comp_member = <long long*> malloc(size * sizeof(long long))
        comp_mpk = <long long*> malloc(size * sizeof(long long))
        comp_mpkok = <unsigned char*> malloc(size * sizeof(unsigned char))
        if (parent == NULL or comp_f == NULL or comp_s == NULL or comp_pk == NULL
                or comp_pkok == NULL or comp_member == NULL or comp_mpk == NULL
                or comp_mpkok == NULL):
            free(parent); free(comp_f); free(comp_s); free(comp_pk)
            free(comp_pkok); free(comp_member); free(comp_mpk); free(comp_mpkok)
            raise MemoryError()
        with nogil:
            for local in range(size):
                parent[local] = <int> local
                comp_f[local] = 255
                comp_member[local] = -1
            # pass 1: same-length moves
            memset(digits, 0, k * sizeof(int))
            local = 0
            while True:
                if is_braid:
                    for p in range(k - 1):
                        x = digits[p]
                        y = digits[p + 1]
                        if x == y:
                            continue
                        mm = cm[x][y]
                        if mm < 2 or p + mm > k:
                            continue
                        altok = 1
                        for t in range(mm):
                            if digits[p + t] != (x if t % 2 == 0 else y):
                                altok = 0
                                break
                        if altok:
                            loc2 = local
                            for t in range(mm):
                                loc2 += (<long long> ((y if t % 2 == 0 else x)
                                                      - digits[p + t])) \
                                    * pows[k - 1 - (p + t)]
                            _uf_union(parent, local, loc2)
                else:
                    for p in range(k - 1):
                        x = digits[p]
                        y = digits[p + 1]
                        if swap_ok[x][y]:
                            loc2 = local + (<long long> (y - x)) * pows[k - 1 - p] \
                                + (<long long> (x - y)) * pows[k - 2 - p]
                            _uf_union(parent, local, loc2)
                local += 1
                if local >= size:
                    break
                _next_word(digits, k, n)
            # pass 2: aggregate members and length-reducing moves
            memset(digits, 0, k * sizeof(int))
            local = 0
            while True:
                r = _uf_find(parent, local)
                if comp_member[r] < 0:
                    comp_member[r] = local
                if want_parikh:
                    packed = pk_bias
                    for t in range(k):
                        packed += (<long long> 1) << (8 * digits[t])
                    if comp_member[r] == local:
                        comp_mpk[r] = packed
                        comp_mpkok[r] = 1
                    elif comp_mpk[r] != packed:
                        comp_mpkok[r] = 0
                for p in range(k - 1):
                    if is_braid:
                        if digits[p + 1] != digits[p]:
                            continue
                    else:
                        if digits[p + 1] != (digits[p] ^ 1):
                            continue
                    high = local // pows[k - p]
                    low = local % pows[k - 2 - p]
                    tg = offs[k - 2] + high * pows[k - 2 - p] + low
                    ft = f[tg]
                    st = slex[tg]
                    if ft < comp_f[r]:
                        comp_f[r] = <unsigned char> ft
                        comp_s[r] = st
                        if want_parikh:
                            comp_pk[r] = pk[tg]
                            comp_pkok[r] = pk_ok[tg]
                    elif ft == comp_f[r]:
                        if st < comp_s[r]:
                            comp_s[r] = st
                        if want_parikh:
                            if pk_ok[tg] == 0 or pk[tg] != comp_pk[r]:
                                comp_pkok[r] = 0
                local += 1
                if local >= size:
                    break
                _next_word(digits, k, n)
            # pass 3: write out
            for local in range(size):
                r = _uf_find(parent, local)
                tg = offs[k] + local
                if comp_f[r] != 255:
                    f[tg] = comp_f[r]
                    slex[tg] = comp_s[r]
                    if want_parikh:
                        pk[tg] = comp_pk[r]
                        pk_ok[tg] = comp_pkok[r]
                else:
                    f[tg] = <unsigned char> k
                    slex[tg] = offs[k] + comp_member[r]
                    if want_parikh:
                        pk[tg] = comp_mpk[r]
                        pk_ok[tg] = comp_mpkok[r]
        free(parent); free(comp_f); free(comp_s); free(comp_pk)
        free(comp_pkok); free(comp_member); free(comp_mpk); free(comp_mpkok)
    return f_arr, slex_arr, pk_arr, pkok_arr


cdef long long _pack_zero(int n):
    cdef long long packed = 0
    cdef int i
    for i in range(n):
        packed |= (<long long> PARIKH_BIAS) << (8 * i)
    return packed
