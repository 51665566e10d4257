"""Right-angled Coxeter groups and graph groups.

Over an independence alphabet the geometric representation is integral:
a generator negates its own coordinate and adds twice itself to every
dependent letter.  The normal-form alphabet falls out of the image of
an adjoined letter that depends on everything; shortlex normal forms
come from one elimination pass per letter followed by the lexicographic
normal form of the resulting trace.  Graph group elements embed into
the right-angled Coxeter group over the doubled alphabet by duplicating
each letter into an involution pair.
"""

from __future__ import annotations

from functools import lru_cache

from . import kernels
from .cyclotomic import ArithmeticFault
from .groupspec import GroupSpec, KindMismatch, Word


def _require(spec, kind):
    if spec.kind != kind:
        raise KindMismatch("operation needs kind %s, got %s" % (kind, spec.kind))


@lru_cache(maxsize=None)
def _dep_rows(spec: GroupSpec):
    """Dependence matrix over the base alphabet (diagonal dependent)."""
    n = spec.n
    return tuple(tuple(1 if i == j or not spec.independent(i, j) else 0
                       for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def _indep_rows(spec: GroupSpec):
    n = spec.n
    return tuple(tuple(1 if spec.independent(i, j) else 0 for j in range(n))
                 for i in range(n))


def racg_sigma_apply(spec: GroupSpec, word: Word, d: str) -> dict:
    """Integer coefficient vector of the image of the letter d."""
    _require(spec, "racg")
    status, vec = kernels.racg_vector_one(spec.n, _dep_rows(spec),
                                          spec.encode_word(word), spec.index(d))
    assert status == kernels.OK
    return {name: vec[i] for i, name in enumerate(spec.letters)}


def _alphabet_mask(n, dep_rows, ids):
    """Nonzero pattern of the adjoined-letter image: the normal-form
    alphabet, exactly."""
    ext = tuple(row + (1,) for row in dep_rows) + ((1,) * (n + 1),)
    status, vec = kernels.racg_vector_one(n + 1, ext, ids, n)
    assert status == kernels.OK
    return [b for b in range(n) if vec[b] != 0]


def normal_form_alphabet(spec: GroupSpec, word: Word) -> set:
    """Letters surviving square cancellation, read off the integer
    representation without normalizing."""
    _require(spec, "racg")
    hits = _alphabet_mask(spec.n, _dep_rows(spec), spec.encode_word(word))
    return {spec.letters[b] for b in hits}


def a_short_pass(spec: GroupSpec, word: Word, a: str) -> Word:
    """One elimination pass for the letter a: scan left to right; on
    reading a, jump to the furthest later a whose in-between window has
    a normal-form alphabet commuting with a, and emit that window with
    all a's deleted.  Equality in the group and shortness in every other
    letter are preserved."""
    _require(spec, "racg")
    n = spec.n
    dep = _dep_rows(spec)
    ids = spec.encode_word(word)
    target_letter = spec.index(a)
    out = []
    i = 0
    while i < len(ids):
        c = ids[i]
        if c != target_letter:
            out.append(c)
            i += 1
            continue
        found = -1
        for j in range(len(ids) - 1, i, -1):
            if ids[j] != target_letter:
                continue
            window = ids[i + 1:j]
            hits = _alphabet_mask(n, dep, window)
            if all(b != target_letter and spec.independent(target_letter, b)
                   for b in hits):
                found = j
                break
        if found < 0:
            out.append(c)
            i += 1
        else:
            out.extend(b for b in ids[i + 1:found] if b != target_letter)
            i = found + 1
    return spec.decode_word(out)


def shortlex_racg(spec: GroupSpec, word: Word) -> Word:
    """Shortlex normal form in the right-angled Coxeter group."""
    _require(spec, "racg")
    status, nf = kernels.racg_shortlex_one(spec.n, _dep_rows(spec),
                                           spec.encode_word(word))
    assert status == kernels.OK
    return spec.decode_word(nf)


def embed_phi(spec: GroupSpec, word: Word) -> Word:
    """Image of a graph-group word under letter duplication: a maps to
    a.a' and a' maps to a'.a (both images are involution pairs)."""
    _require(spec, "graph")
    letters = []
    for letter in word:
        letters.append(letter)
        letters.append(letter.inverse())
    return Word(tuple(letters))


def shortlex_graph_group(spec: GroupSpec, word: Word) -> Word:
    """Shortlex normal form in the graph group: normalize the duplicated
    word over the doubled alphabet, then contract each involution pair
    back to its letter."""
    _require(spec, "graph")
    status, nf = kernels.graph_shortlex_one(spec.n, _indep_rows(spec),
                                            spec.encode_word(word))
    if status != kernels.OK:
        raise ArithmeticFault("pair contraction failed for %r" % word.render())
    return spec.decode_word(nf)


def graph_normal_form_alphabet(spec: GroupSpec, word: Word) -> set:
    """Letters (with inversion marks) occurring in the graph-group
    shortlex normal form; used by the CLI alphabet path."""
    return set(shortlex_graph_group(spec, word))
