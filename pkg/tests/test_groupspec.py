import pytest

from coxtrace.groupspec import (GroupSpec, Letter, SpecError, Word, WordError,
                                extend_independence, parse_group_spec, parse_word,
                                render_group_spec)


def test_parse_racg_spec():
    spec = parse_group_spec("kind = racg\nletters = a b\nedge a b\n")
    assert spec.kind == "racg"
    assert spec.letters == ("a", "b")
    assert spec.independent(0, 1) and spec.independent(1, 0)


def test_parse_coxeter_spec():
    spec = parse_group_spec("kind = coxeter\nletters = a b\nm a b 3\n")
    assert spec.matrix == ((1, 3), (3, 1))


def test_even_kind_rejects_odd_entry():
    with pytest.raises(SpecError, match="odd entry"):
        parse_group_spec("kind = even-coxeter\nletters = a b\nm a b 3\n")


def test_unlisted_pairs_default_to_infinite():
    spec = parse_group_spec("kind = coxeter\nletters = a b c\nm a b 3\n")
    assert spec.matrix[0][2] == 0 and spec.matrix[1][2] == 0


def test_comments_and_blank_lines():
    text = "# a group\nkind = racg\n\nletters = a b  # two letters\nedge a b\n"
    assert parse_group_spec(text).letters == ("a", "b")


@pytest.mark.parametrize("text,fragment", [
    ("kind = racg\nletters = a a\n", "duplicate letter"),
    ("kind = coxeter\nletters = a b\nm a b 1\n", "diagonal"),
    ("kind = coxeter\nletters = a b\nm a a 2\n", "must be 1"),
    ("kind = coxeter\nletters = a b\nm a b 3\nm b a 4\n", "asymmetric"),
    ("kind = racg\nletters = a b\nedge a c\n", "unknown letter"),
    ("kind = racg\nletters = a b\nedge a a\n", "irreflexive"),
    ("kind = racg\nletters = a b\nm a b 2\n", "not allowed"),
    ("kind = coxeter\nletters = a b\nedge a b\n", "not allowed"),
    ("kind = nonsense\nletters = a\n", "unknown kind"),
    ("letters = a b\nkind = racg\n", "kind must be declared"),
    ("kind = racg\n", "missing letters"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(SpecError, match=fragment):
        parse_group_spec(text)


def test_error_carries_line_number():
    try:
        parse_group_spec("kind = coxeter\nletters = a b\nm a b 1\n")
    except SpecError as exc:
        assert exc.line == 3


def test_round_trip_render_parse():
    specs = [
        GroupSpec.coxeter("abc", {("a", "b"): 3, ("b", "c"): 4}),
        GroupSpec.coxeter("ab", {("a", "b"): 4}, kind="even-coxeter"),
        GroupSpec.racg("abc", [("a", "c")]),
        GroupSpec.graph_group("ab", [("a", "b")]),
        GroupSpec.fim("abc", [("a", "b"), ("b", "c")]),
    ]
    for spec in specs:
        assert parse_group_spec(render_group_spec(spec)) == spec


def test_parse_word_dotted_and_undotted():
    spec = GroupSpec.coxeter("ab", {("a", "b"): 3})
    assert parse_word("a.b.a", spec).letters == parse_word("aba", spec).letters
    assert [l.name for l in parse_word("aba", spec)] == ["a", "b", "a"]


def test_parse_word_inverse_marker():
    g = GroupSpec.graph_group("ab", [("a", "b")])
    word = parse_word("a'.b", g)
    assert word.letters == (Letter("a", True), Letter("b"))
    with pytest.raises(WordError):
        parse_word("a'", GroupSpec.coxeter("ab", {("a", "b"): 2}))


def test_parse_word_empty_forms():
    spec = GroupSpec.racg("ab", [])
    assert len(parse_word("1", spec)) == 0
    assert len(parse_word("", spec)) == 0
    assert parse_word("1", spec).render() == "1"


def test_parse_word_unknown_letter():
    spec = GroupSpec.racg("ab", [])
    with pytest.raises(WordError, match="unknown letter"):
        parse_word("a.c", spec)


def test_word_encoding_round_trip():
    g = GroupSpec.graph_group("ab", [("a", "b")])
    word = parse_word("a.b'.a'", g)
    assert g.decode_word(g.encode_word(word)) == word
    assert g.encode_word(word) == [0, 3, 1]


def test_extend_independence_closure():
    g = GroupSpec.graph_group("ab", [("a", "b")])
    ext = extend_independence(g)
    # every signed combination of an independent pair is independent
    assert {(0, 2), (0, 3), (1, 2), (1, 3)} <= set(ext.pairs)
    # never a letter with its own inverse
    assert (0, 1) not in ext.pairs and (2, 3) not in ext.pairs
    # minimal: nothing beyond the closure of the base pairs
    assert len(ext.pairs) == 8


def test_extend_independence_empty():
    g = GroupSpec.graph_group("ab", [])
    assert extend_independence(g).pairs == frozenset()


def test_extend_independence_symmetric_irreflexive():
    g = GroupSpec.graph_group("abc", [("a", "b"), ("b", "c")])
    ext = extend_independence(g)
    for (i, j) in ext.pairs:
        assert i != j
        assert (j, i) in ext.pairs
        assert i // 2 != j // 2
