"""Word problem for free partially commutative inverse monoids.

Two words are equal iff they agree in the graph group and their Munn
sets agree.  The Munn set collects, over every prefix of the word, the
prime prefixes of the prefix's cancellation normal form; it plays the
role the Munn tree plays for free inverse monoids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groupspec import GroupSpec, KindMismatch, Word
from .rewriting import inverse_cancellation_system, reduce
from .traces import Trace, gamma_alphabet, prime_prefixes, trace_from_word


def _require_fim(spec):
    if spec.kind != "fim":
        raise KindMismatch("operation needs kind fim, got %s" % spec.kind)


@lru_cache(maxsize=None)
def _machinery(spec: GroupSpec):
    alph = gamma_alphabet(spec)
    return alph, inverse_cancellation_system(alph)


@dataclass(frozen=True)
class MunnSet:
    """A finite set of prime irreducible traces over the doubled
    alphabet, stored sorted by (length, word)."""

    traces: tuple

    def render_lines(self):
        return [t.render() for t in self.traces]


def munn_set(spec: GroupSpec, word: Word) -> MunnSet:
    """Union over all prefixes of the prime prefixes of the prefix's
    cancellation normal form."""
    _require_fim(spec)
    alph, system = _machinery(spec)
    ids = spec.encode_word(word)
    out = set()
    for i in range(1, len(ids) + 1):
        reduced = reduce(trace_from_word(alph, ids[:i]), system)
        out.update(prime_prefixes(reduced))
    return MunnSet(tuple(sorted(out)))


def fim_equal(spec: GroupSpec, u: Word, v: Word) -> bool:
    """Equality in the free partially commutative inverse monoid:
    graph-group equality plus equality of Munn sets."""
    _require_fim(spec)
    alph, system = _machinery(spec)
    ru = reduce(trace_from_word(alph, spec.encode_word(u)), system)
    rv = reduce(trace_from_word(alph, spec.encode_word(v)), system)
    if ru != rv:
        return False
    return munn_set(spec, u) == munn_set(spec, v)
