"""Length-reducing trace rewriting systems.

Two built-in systems matter here: cancellation of a letter against its
formal inverse (defining graph groups over the doubled alphabet) and
cancellation of squares (defining right-angled Coxeter groups).  Both
are strongly confluent, so any reduction strategy reaches the same
irreducible trace; we scan the word for the leftmost redex.

Arbitrary systems are supported through a brute-force factor matcher;
results for those are only meaningful when the caller's system is
confluent and terminating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .traces import IndepAlphabet, Trace

INVERSE_CANCEL = "inverse-cancel"
SQUARE_CANCEL = "square-cancel"


@dataclass(frozen=True)
class TraceRewritingSystem:
    rules: tuple
    flavor: str | None = field(default=None, compare=False)

    def __post_init__(self):
        for left, right in self.rules:
            if not (isinstance(left, Trace) and isinstance(right, Trace)):
                raise TypeError("rules must be pairs of traces")
            if len(left) <= len(right):
                raise ValueError("rule %s -> %s is not length-reducing"
                                 % (left.render(), right.render()))


def inverse_cancellation_system(alph: IndepAlphabet) -> TraceRewritingSystem:
    """a.a' -> 1 for every letter of a doubled alphabet (ids 2i, 2i+1)."""
    if alph.n % 2 != 0:
        raise ValueError("doubled alphabet expected")
    empty = Trace(alph, ())
    rules = []
    for a in range(alph.n):
        rules.append((Trace(alph, (a, a ^ 1)), empty))
    return TraceRewritingSystem(tuple(rules), INVERSE_CANCEL)


def square_cancellation_system(alph: IndepAlphabet) -> TraceRewritingSystem:
    """a.a -> 1 for every letter."""
    empty = Trace(alph, ())
    rules = tuple((Trace(alph, (a, a)), empty) for a in range(alph.n))
    return TraceRewritingSystem(rules, SQUARE_CANCEL)


def _partner(flavor, a):
    return a ^ 1 if flavor == INVERSE_CANCEL else a


def _scan_redex(alph, word, flavor):
    """Leftmost hidden factor a.v.b with b the cancelling partner of a
    and every letter of v independent of a; returns (i, j) or None."""
    for i in range(len(word)):
        want = _partner(flavor, word[i])
        for j in range(i + 1, len(word)):
            if word[j] == want:
                return (i, j)
            if not alph.independent(word[i], word[j]):
                break
    return None


def _reduce_cancellative(t, flavor):
    word = list(t.word)
    while True:
        hit = _scan_redex(t.alph, word, flavor)
        if hit is None:
            break
        i, j = hit
        del word[j]
        del word[i]
    return Trace(t.alph, word)


def _convex_factorizations(t, size):
    """Yield (left, middle, right) position lists for every convex
    subset of the given size in the dependence graph of t."""
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
    for subset in combinations(range(n), size):
        inside = set(subset)
        convex = True
        for p in subset:
            for q in subset:
                if p < q and reach[p][q]:
                    for k in range(p + 1, q):
                        if k not in inside and reach[p][k] and reach[k][q]:
                            convex = False
                            break
                if not convex:
                    break
            if not convex:
                break
        if not convex:
            continue
        left = [p for p in range(n) if p not in inside
                and any(reach[p][q] for q in subset)]
        right = [p for p in range(n) if p not in inside and p not in left]
        yield left, list(subset), right


def _rewrite_generic_once(t, system):
    for rule_left, rule_right in system.rules:
        for left, mid, right in _convex_factorizations(t, len(rule_left)):
            piece = Trace(t.alph, tuple(t.word[p] for p in mid))
            if piece == rule_left:
                new_word = ([t.word[p] for p in left] + list(rule_right.word)
                            + [t.word[p] for p in right])
                return Trace(t.alph, new_word)
    return None


def reduce(t: Trace, system: TraceRewritingSystem) -> Trace:
    """The irreducible trace reached from t.  Unique for confluent and
    terminating systems (both built-in systems qualify)."""
    if system.flavor in (INVERSE_CANCEL, SQUARE_CANCEL):
        return _reduce_cancellative(t, system.flavor)
    while True:
        nxt = _rewrite_generic_once(t, system)
        if nxt is None:
            return t
        t = nxt


def is_irreducible(t: Trace, system: TraceRewritingSystem) -> bool:
    """No rule applies: for the built-in systems, no hidden factor of a
    letter next to its cancelling partner."""
    if system.flavor in (INVERSE_CANCEL, SQUARE_CANCEL):
        return _scan_redex(t.alph, t.word, system.flavor) is None
    return _rewrite_generic_once(t, system) is None
