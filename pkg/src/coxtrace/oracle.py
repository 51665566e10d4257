"""Brute-force ground truth, sharing no machinery with the modules it
checks: no traces, no geometric representation, only raw words and
moves.

For Coxeter kinds the moves are braid exchanges (replace an alternating
factor of length m in two letters by the swapped alternation) and
square deletions; every geodesic of a word is reachable this way
without ever increasing length.  For graph kinds the moves are adjacent
swaps of independent letters (inverses inherit independence) and
inverse cancellations.  Closures are breadth-first and exponential by
design; a length bound guards against runaway inputs.

Whole-sweep queries go through GeodesicTable, a stratified dynamic
program over every word up to a length bound, built from the same
moves.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .groupspec import COXETER_KINDS, GroupSpec, KindMismatch, Word

DEFAULT_BOUND = 10


class BoundExceeded(ValueError):
    """Input word longer than the configured closure bound."""


def _mmat(spec):
    if spec.kind in COXETER_KINDS:
        return spec.matrix
    if spec.kind == "racg":
        n = spec.n
        return tuple(tuple(1 if i == j else (2 if spec.independent(i, j) else 0)
                           for j in range(n)) for i in range(n))
    raise KindMismatch("braid-move oracle needs a Coxeter kind, got %s" % spec.kind)


def _braid_targets(word, mmat):
    k = len(word)
    for p in range(k - 1):
        x, y = word[p], word[p + 1]
        if x == y:
            continue
        mm = mmat[x][y]
        if mm < 2 or p + mm > k:
            continue
        if all(word[p + i] == (x if i % 2 == 0 else y) for i in range(mm)):
            yield word[:p] + tuple(y if i % 2 == 0 else x for i in range(mm)) \
                + word[p + mm:]


def _closure(start, moves, bound):
    if len(start) > bound:
        raise BoundExceeded("word of length %d exceeds oracle bound %d"
                            % (len(start), bound))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for w2 in moves(w):
                if w2 not in seen:
                    seen.add(w2)
                    nxt.append(w2)
        frontier = nxt
    shortest = min(len(w) for w in seen)
    return {w for w in seen if len(w) == shortest}


def tits_closure(spec: GroupSpec, word: Word, bound: int = DEFAULT_BOUND) -> set:
    """The set of geodesics of a Coxeter-kind word: minimal-length
    stratum of the closure under braid exchanges and square deletions."""
    mmat = _mmat(spec)

    def moves(w):
        yield from _braid_targets(w, mmat)
        for p in range(len(w) - 1):
            if w[p] == w[p + 1]:
                yield w[:p] + w[p + 2:]

    ids = tuple(spec.encode_word(word))
    return {spec.decode_word(w) for w in _closure(ids, moves, bound)}


def swap_cancel_closure(spec: GroupSpec, word: Word,
                        bound: int = DEFAULT_BOUND) -> set:
    """The set of geodesics of a graph-group word: minimal-length
    stratum of the closure under independent swaps and inverse
    cancellations."""
    if spec.kind != "graph":
        raise KindMismatch("swap/cancel oracle needs kind graph, got %s" % spec.kind)
    edges = spec.edges

    def moves(w):
        for p in range(len(w) - 1):
            x, y = w[p], w[p + 1]
            if x // 2 != y // 2 and (x // 2, y // 2) in edges:
                yield w[:p] + (y, x) + w[p + 2:]
            if y == x ^ 1:
                yield w[:p] + w[p + 2:]

    ids = tuple(spec.encode_word(word))
    return {spec.decode_word(w) for w in _closure(ids, moves, bound)}


def _geodesics(spec, word, bound):
    if spec.kind == "graph":
        return swap_cancel_closure(spec, word, bound)
    return tits_closure(spec, word, bound)


def oracle_shortlex(spec: GroupSpec, word: Word, bound: int = DEFAULT_BOUND) -> Word:
    """Lexicographically least geodesic, by exhaustion."""
    best = min((tuple(spec.encode_word(w)) for w in _geodesics(spec, word, bound)))
    return spec.decode_word(best)


def oracle_length(spec: GroupSpec, word: Word, bound: int = DEFAULT_BOUND) -> int:
    for w in _geodesics(spec, word, bound):
        return len(w)
    raise AssertionError("closure cannot be empty")


def oracle_equal(spec: GroupSpec, u: Word, v: Word,
                 bound: int = DEFAULT_BOUND) -> bool:
    """True iff the two words' geodesic sets coincide."""
    gu = {tuple(spec.encode_word(w)) for w in _geodesics(spec, u, bound)}
    gv = {tuple(spec.encode_word(w)) for w in _geodesics(spec, v, bound)}
    return gu == gv


@dataclass
class GeodesicTable:
    """Geodesic data for every word of length <= maxlen, one entry per
    word in stratum-then-lexicographic order."""

    spec: GroupSpec
    maxlen: int
    n_letters: int
    offsets: list
    min_length: object       # uint8 array
    shortlex: object         # int64 array of encoded shortlex words
    parikh: object = None    # packed geodesic Parikh image (Coxeter kinds)
    parikh_agree: object = None

    @property
    def size(self):
        return self.offsets[-1]

    def index_of(self, word: Word) -> int:
        ids = self.spec.encode_word(word)
        if len(ids) > self.maxlen:
            raise BoundExceeded("word of length %d exceeds table bound %d"
                                % (len(ids), self.maxlen))
        return kernels.encode_word(self.n_letters, self.offsets, ids)

    def length_of(self, word: Word) -> int:
        return int(self.min_length[self.index_of(word)])

    def shortlex_of(self, word: Word) -> Word:
        encoded = int(self.shortlex[self.index_of(word)])
        return self.spec.decode_word(
            kernels.decode_word(self.n_letters, self.offsets, encoded))

    def decode(self, encoded: int) -> list:
        return kernels.decode_word(self.n_letters, self.offsets, int(encoded))


def geodesic_table(spec: GroupSpec, maxlen: int) -> GeodesicTable:
    """Build the whole-sweep oracle table for a spec."""
    if spec.kind == "graph":
        n = 2 * spec.n
        indep = tuple(tuple(1 if spec.independent(i, j) else 0
                            for j in range(spec.n)) for i in range(spec.n))
        f, slex = kernels.oracle_graph_table(spec.n, indep, maxlen)
        return GeodesicTable(spec, maxlen, n, kernels.stratum_offsets(n, maxlen),
                             f, slex)
    mmat = _mmat(spec)
    f, slex, pk, pk_ok = kernels.oracle_cox_table(spec.n, mmat, maxlen)
    return GeodesicTable(spec, maxlen, spec.n,
                         kernels.stratum_offsets(spec.n, maxlen),
                         f, slex, pk, pk_ok)
