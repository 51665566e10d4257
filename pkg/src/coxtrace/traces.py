"""Trace monoids over an independence alphabet.

A trace is a congruence class of words modulo swapping adjacent
independent letters.  Traces are stored by their lexicographic normal
form, so equality is a tuple comparison.  Letters are integer ids into
an IndepAlphabet, which carries the rendered names.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groupspec import GroupSpec, ExtendedIndependence, extend_independence


@dataclass(frozen=True)
class IndepAlphabet:
    """An ordered alphabet with a symmetric irreflexive independence
    relation over letter ids."""

    letters: tuple[str, ...]
    pairs: frozenset

    def __post_init__(self):
        n = len(self.letters)
        for (i, j) in self.pairs:
            if not (0 <= i < n and 0 <= j < n) or i == j or (j, i) not in self.pairs:
                raise ValueError("independence relation must be symmetric and irreflexive")

    @property
    def n(self):
        return len(self.letters)

    def independent(self, i, j):
        return (i, j) in self.pairs

    def dependent(self, i, j):
        return i == j or (i, j) not in self.pairs


def sigma_alphabet(spec: GroupSpec) -> IndepAlphabet:
    """The base alphabet of a racg spec as a trace alphabet."""
    return IndepAlphabet(spec.letters, frozenset(spec.edges))


def gamma_alphabet(spec_or_ext) -> IndepAlphabet:
    """The doubled alphabet of a graph/fim spec with the closed relation."""
    ext = spec_or_ext
    if isinstance(ext, GroupSpec):
        ext = extend_independence(ext)
    assert isinstance(ext, ExtendedIndependence)
    return IndepAlphabet(tuple(l.render() for l in ext.letters), ext.pairs)


class Trace:
    """An element of the trace monoid, held in canonical form."""

    __slots__ = ("alph", "word")

    def __init__(self, alph: IndepAlphabet, word, _canonical=False):
        word = tuple(word)
        if not _canonical:
            word = _lex_least(alph, word)
        object.__setattr__(self, "alph", alph)
        object.__setattr__(self, "word", word)

    def __setattr__(self, *args):
        raise AttributeError("Trace is immutable")

    def __eq__(self, other):
        return (isinstance(other, Trace) and self.alph == other.alph
                and self.word == other.word)

    def __hash__(self):
        return hash((self.alph, self.word))

    def __len__(self):
        return len(self.word)

    def __lt__(self, other):
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __mul__(self, other: "Trace") -> "Trace":
        assert self.alph == other.alph
        return Trace(self.alph, self.word + other.word)

    def __repr__(self):
        return "Trace(%s)" % (self.render(),)

    def render(self) -> str:
        if not self.word:
            return "1"
        return ".".join(self.alph.letters[i] for i in self.word)


def _lex_least(alph, word):
    """Greedy lexicographic normal form: repeatedly emit the least
    letter among the currently minimal vertices of the dependence graph."""
    remaining = list(word)
    out = []
    while remaining:
        best = None
        for pos, a in enumerate(remaining):
            blocked = any(alph.dependent(remaining[q], a) for q in range(pos))
            if not blocked and (best is None or a < remaining[best]):
                best = pos
        out.append(remaining.pop(best))
    return tuple(out)


def trace_from_word(alph: IndepAlphabet, word) -> Trace:
    """The trace of a word (a sequence of letter ids)."""
    word = tuple(word)
    for a in word:
        if not 0 <= a < alph.n:
            raise ValueError("letter id %r out of range" % (a,))
    return Trace(alph, word)


def trace_alphabet(t: Trace) -> frozenset:
    """The set of letter ids occurring in the trace."""
    return frozenset(t.word)


def _dependence_arcs(alph, word):
    arcs = set()
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            if alph.dependent(word[i], word[j]):
                arcs.add((i, j))
    return arcs


@dataclass(frozen=True)
class DependenceGraph:
    """Vertices are word positions labelled by letter ids; arcs run
    between dependent positions in word order."""

    labels: tuple[int, ...]
    arcs: frozenset


def dependence_graph(t: Trace) -> DependenceGraph:
    return DependenceGraph(t.word, frozenset(_dependence_arcs(t.alph, t.word)))


def is_prime(t: Trace) -> bool:
    """True iff the dependence graph has exactly one maximal vertex.
    The empty trace has none, so it is not prime."""
    word = t.word
    maximal = 0
    for i in range(len(word)):
        if all(not t.alph.dependent(word[i], word[j]) for j in range(i + 1, len(word))):
            maximal += 1
    return maximal == 1


def prime_prefixes(t: Trace) -> tuple[Trace, ...]:
    """All prime prefixes of t, sorted by (length, word).

    Prime prefixes are exactly the principal downward-closed subsets of
    the dependence graph, one per vertex.
    """
    word = t.word
    n = len(word)
    preds = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if t.alph.dependent(word[i], word[j]):
                preds[j].append(i)
    out = set()
    for v in range(n):
        down = {v}
        stack = [v]
        while stack:
            for q in preds[stack.pop()]:
                if q not in down:
                    down.add(q)
                    stack.append(q)
        out.add(Trace(t.alph, tuple(word[i] for i in sorted(down))))
    return tuple(sorted(out))


def hasse_diagram(t: Trace) -> DependenceGraph:
    """The covering arcs of the partial order induced by the dependence
    graph: arcs (i, j) with no vertex strictly between."""
    word = t.word
    n = len(word)
    reach = [[False] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if t.alph.dependent(word[i], word[j]):
                reach[i][j] = True
                for k in range(n):
                    if reach[j][k]:
                        reach[i][k] = True
    covering = set()
    for i in range(n):
        for j in range(i + 1, n):
            if not t.alph.dependent(word[i], word[j]):
                continue
            if any(reach[i][k] and reach[k][j] for k in range(i + 1, j)):
                continue
            covering.add((i, j))
    return DependenceGraph(word, frozenset(covering))


def lex_normal_form(t: Trace, order=None) -> tuple[int, ...]:
    """The least linearization of the dependence graph; ``order`` is an
    optional permutation of letter ids overriding the alphabet order."""
    if order is None:
        return t.word
    rank = {a: r for r, a in enumerate(order)}
    remaining = list(t.word)
    out = []
    while remaining:
        best = None
        for pos, a in enumerate(remaining):
            blocked = any(t.alph.dependent(remaining[q], a) for q in range(pos))
            if not blocked and (best is None or rank[a] < rank[remaining[best]]):
                best = pos
        out.append(remaining.pop(best))
    return tuple(out)
