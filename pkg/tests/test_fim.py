import random

import pytest

from coxtrace.fim import fim_equal, munn_set
from coxtrace.groupspec import GroupSpec, KindMismatch, Letter, Word, parse_word

FIM = GroupSpec.fim("ab", [("a", "b")])
FIM_FREE = GroupSpec.fim("ab", [])
FIM3 = GroupSpec.fim("abc", [("a", "b"), ("b", "c")])


def w(text, spec=FIM):
    return parse_word(text, spec)


def test_munn_set_examples():
    assert munn_set(FIM, w("a.a'")).render_lines() == ["a"]
    assert munn_set(FIM, w("a'.a")).render_lines() == ["a'"]
    assert munn_set(FIM, w("a.b")).render_lines() == ["a", "b"]
    assert munn_set(FIM_FREE, w("a.b", FIM_FREE)).render_lines() == ["a", "a.b"]
    assert munn_set(FIM, w("")).render_lines() == []


def test_munn_set_prefix_monotone():
    random.seed(31)
    for spec in (FIM, FIM_FREE, FIM3):
        for _ in range(80):
            ids = [random.randrange(2 * spec.n) for _ in range(random.randrange(8))]
            word = spec.decode_word(ids)
            whole = set(munn_set(spec, word).traces)
            for i in range(len(ids) + 1):
                part = set(munn_set(spec, spec.decode_word(ids[:i])).traces)
                assert part <= whole


def test_fim_equal_examples():
    assert fim_equal(FIM, w("a.a'.a"), w("a"))
    assert not fim_equal(FIM, w("a.a'"), w("a'.a"))
    assert fim_equal(FIM, w("a.b"), w("b.a"))
    assert not fim_equal(FIM_FREE, w("a.b", FIM_FREE), w("b.a", FIM_FREE))


def _bar(word: Word) -> Word:
    return Word(tuple(l.inverse() for l in reversed(word.letters)))


def _rand_word(spec, maxlen, rng):
    ids = [rng.randrange(2 * spec.n) for _ in range(rng.randrange(maxlen + 1))]
    return spec.decode_word(ids)


def test_inverse_monoid_axioms():
    rng = random.Random(32)
    for spec in (FIM, FIM_FREE, FIM3):
        for _ in range(60):
            u = _rand_word(spec, 4, rng)
            v = _rand_word(spec, 4, rng)
            x = _rand_word(spec, 3, rng)
            y = _rand_word(spec, 3, rng)
            xbar, ybar = _bar(x), _bar(y)
            assert fim_equal(spec, u + x + xbar + x + v, u + x + v)
            assert fim_equal(spec, u + xbar + x + xbar + v, u + xbar + v)
            assert fim_equal(spec, u + x + xbar + y + ybar + v,
                             u + y + ybar + x + xbar + v)


def test_defining_commutations():
    rng = random.Random(33)
    for spec in (FIM, FIM3):
        pairs = [(i, j) for (i, j) in spec.edges]
        for _ in range(60):
            u = _rand_word(spec, 4, rng)
            v = _rand_word(spec, 4, rng)
            i, j = pairs[rng.randrange(len(pairs))]
            for si in (False, True):
                for sj in (False, True):
                    x = Word((Letter(spec.letters[i], si),))
                    y = Word((Letter(spec.letters[j], sj),))
                    assert fim_equal(spec, u + x + y + v, u + y + x + v)


def test_fim_equal_is_reflexive_and_symmetric():
    rng = random.Random(34)
    for _ in range(80):
        u = _rand_word(FIM, 6, rng)
        v = _rand_word(FIM, 6, rng)
        assert fim_equal(FIM, u, u)
        assert fim_equal(FIM, u, v) == fim_equal(FIM, v, u)


def test_fim_equal_implies_graph_group_equal():
    from coxtrace.racg import shortlex_graph_group
    gg = GroupSpec.graph_group("ab", [("a", "b")])
    rng = random.Random(35)
    for _ in range(100):
        u = _rand_word(FIM, 6, rng)
        v = _rand_word(FIM, 6, rng)
        if fim_equal(FIM, u, v):
            assert shortlex_graph_group(gg, u) == shortlex_graph_group(gg, v)


def test_kind_guard():
    with pytest.raises(KindMismatch):
        munn_set(GroupSpec.racg("ab", []), Word(()))
    with pytest.raises(KindMismatch):
        fim_equal(GroupSpec.graph_group("ab", []), Word(()), Word(()))
