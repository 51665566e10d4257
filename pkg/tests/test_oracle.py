import itertools
import random

import pytest

from coxtrace.groupspec import GroupSpec, Word, parse_word
from coxtrace.kernels import unpack_parikh
from coxtrace.oracle import (BoundExceeded, geodesic_table, oracle_equal,
                             oracle_length, oracle_shortlex, swap_cancel_closure,
                             tits_closure)

S3 = GroupSpec.coxeter("ab", {("a", "b"): 3})
RACG = GroupSpec.racg("ab", [("a", "b")])
GG = GroupSpec.graph_group("ab", [("a", "b")])


def w(text, spec=S3):
    return parse_word(text, spec)


def test_tits_closure_examples():
    got = {u.render() for u in tits_closure(S3, w("aba"))}
    assert got == {"a.b.a", "b.a.b"}
    assert {u.render() for u in tits_closure(S3, w("aa"))} == {"1"}
    got = {u.render() for u in tits_closure(RACG, w("ba", RACG))}
    assert got == {"a.b", "b.a"}


def test_oracle_shortlex_examples():
    assert oracle_shortlex(S3, w("bab")).render() == "a.b.a"
    assert oracle_shortlex(S3, w("aa")).render() == "1"
    assert oracle_shortlex(GG, w("b.a", GG)).render() == "a.b"


def test_swap_cancel_closure_examples():
    assert {u.render() for u in swap_cancel_closure(GG, w("a.a'", GG))} == {"1"}
    assert {u.render() for u in swap_cancel_closure(GG, w("a.b.a'", GG))} == {"b"}
    free = GroupSpec.graph_group("ab", [])
    assert {u.render() for u in swap_cancel_closure(free, w("a.b", free))} == {"a.b"}


def test_oracle_equal_examples():
    assert oracle_equal(S3, w("aba"), w("bab"))
    assert not oracle_equal(S3, w("a"), w("b"))
    assert oracle_equal(S3, w("aa"), w(""))


def test_minimal_stratum_shares_length_and_alphabet():
    random.seed(41)
    specs = [S3, GroupSpec.coxeter("abc", {("a", "b"): 4, ("b", "c"): 3}),
             RACG]
    for spec in specs:
        for _ in range(60):
            word = Word(tuple(random.choice(spec.sigma_letters())
                              for _ in range(random.randrange(8))))
            geos = tits_closure(spec, word)
            lengths = {len(u) for u in geos}
            assert len(lengths) == 1
            alphabets = {frozenset(l.name for l in u) for u in geos}
            assert len(alphabets) == 1


def test_even_spec_geodesics_share_parikh():
    spec = GroupSpec.coxeter("ab", {("a", "b"): 4}, kind="even-coxeter")
    random.seed(42)
    for _ in range(60):
        word = Word(tuple(random.choice(spec.sigma_letters())
                          for _ in range(random.randrange(9))))
        images = set()
        for u in tits_closure(spec, word):
            counts = tuple(sum(1 for l in u if l.name == name)
                           for name in spec.letters)
            images.add(counts)
        assert len(images) == 1


def test_bound_guard():
    with pytest.raises(BoundExceeded):
        tits_closure(S3, w("ab" * 6), bound=10)
    with pytest.raises(BoundExceeded):
        swap_cancel_closure(GG, Word(tuple(w("a", GG)) * 11))


def test_geodesic_table_matches_bfs_coxeter():
    spec = GroupSpec.coxeter("abc", {("a", "b"): 3, ("a", "c"): 2, ("b", "c"): 0})
    table = geodesic_table(spec, 5)
    for k in range(6):
        for ids in itertools.product(range(3), repeat=k):
            word = spec.decode_word(list(ids))
            geos = tits_closure(spec, word)
            assert table.length_of(word) == min(len(u) for u in geos)
            assert table.shortlex_of(word) == oracle_shortlex(spec, word)


def test_geodesic_table_matches_bfs_graph():
    table = geodesic_table(GG, 4)
    for k in range(5):
        for ids in itertools.product(range(4), repeat=k):
            word = GG.decode_word(list(ids))
            geos = swap_cancel_closure(GG, word)
            assert table.length_of(word) == min(len(u) for u in geos)
            assert table.shortlex_of(word) == oracle_shortlex(GG, word)


def test_geodesic_table_parikh_data():
    spec = GroupSpec.coxeter("ab", {("a", "b"): 2}, kind="even-coxeter")
    table = geodesic_table(spec, 6)
    word = parse_word("abab", spec)
    idx = table.index_of(word)
    assert int(table.parikh_agree[idx]) == 1
    # commuting involutions: abab = aabb = 1
    assert unpack_parikh(int(table.parikh[idx]), 2) == [0, 0]
    assert table.length_of(word) == 0


def test_geodesic_table_bound():
    table = geodesic_table(S3, 4)
    with pytest.raises(BoundExceeded):
        table.length_of(w("ababa"))
