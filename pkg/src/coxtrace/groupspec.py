"""Alphabets, group specifications and words.

A group is described by an ordered alphabet together with either a
Coxeter matrix (kinds ``coxeter`` and ``even-coxeter``) or an
independence relation (kinds ``racg``, ``graph`` and ``fim``).  The
declared letter order is the shortlex order; for the kinds with formal
inverses the induced order on the doubled alphabet places the inverse
of a letter immediately after the letter itself (a < a' < b < b' ...).

The module also owns the line-oriented group-spec file format and the
dotted word syntax.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

KINDS = ("coxeter", "even-coxeter", "racg", "graph", "fim")
COXETER_KINDS = ("coxeter", "even-coxeter")
EDGE_KINDS = ("racg", "graph", "fim")
INVERSE_KINDS = ("graph", "fim")

_NAME_RE = re.compile(r"[a-z0-9_]+\Z")


class SpecError(ValueError):
    """Malformed group-spec text or inconsistent group data."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class WordError(ValueError):
    """Malformed word text or word not over the group's alphabet."""


class KindMismatch(ValueError):
    """Operation applied to a group kind it is not defined for."""


@dataclass(frozen=True)
class Letter:
    """A generator name, optionally marked as a formal inverse."""

    name: str
    inverted: bool = False

    def render(self) -> str:
        return self.name + ("'" if self.inverted else "")

    def inverse(self) -> "Letter":
        return Letter(self.name, not self.inverted)


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters over some group's alphabet."""

    letters: tuple[Letter, ...] = ()

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def render(self) -> str:
        if not self.letters:
            return "1"
        return ".".join(l.render() for l in self.letters)


def _check_letter_name(name, line=None):
    if not _NAME_RE.match(name):
        raise SpecError("invalid letter name %r (allowed: [a-z0-9_]+)" % name, line)


@dataclass(frozen=True)
class GroupSpec:
    """A named alphabet with linear order plus relations, tagged by kind.

    ``matrix`` is the full symmetric Coxeter matrix (entry 0 encodes
    infinity) for the Coxeter kinds and ``None`` otherwise.  ``edges``
    holds the independence relation as index pairs, both orientations,
    for the edge kinds and is empty otherwise.
    """

    kind: str
    letters: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...] | None = None
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError("unknown kind %r" % (self.kind,))
        if not self.letters:
            raise SpecError("no letters declared")
        for name in self.letters:
            _check_letter_name(name)
        if len(set(self.letters)) != len(self.letters):
            raise SpecError("duplicate letter")
        n = len(self.letters)
        if self.kind in COXETER_KINDS:
            m = self.matrix
            if m is None or len(m) != n or any(len(row) != n for row in m):
                raise SpecError("Coxeter matrix must be %dx%d" % (n, n))
            if self.edges:
                raise SpecError("edges not allowed under kind %s" % self.kind)
            for i in range(n):
                if m[i][i] != 1:
                    raise SpecError("m[%s,%s] must be 1" % (self.letters[i],) * 2)
                for j in range(n):
                    if m[i][j] != m[j][i]:
                        raise SpecError("asymmetric matrix")
                    if i != j and m[i][j] == 1:
                        raise SpecError("m[%s,%s] = 1 only allowed on the diagonal"
                                        % (self.letters[i], self.letters[j]))
                    if i != j and m[i][j] < 0:
                        raise SpecError("negative matrix entry")
                    if (self.kind == "even-coxeter" and i != j
                            and m[i][j] % 2 != 0):
                        raise SpecError("odd entry m[%s,%s] = %d under kind even-coxeter"
                                        % (self.letters[i], self.letters[j], m[i][j]))
        else:
            if self.matrix is not None:
                raise SpecError("Coxeter matrix not allowed under kind %s" % self.kind)
            for (i, j) in self.edges:
                if not (0 <= i < n and 0 <= j < n):
                    raise SpecError("edge index out of range")
                if i == j:
                    raise SpecError("edge %s %s: relation must be irreflexive"
                                    % (self.letters[i],) * 2)
                if (j, i) not in self.edges:
                    raise SpecError("edges must be stored symmetrically")

    # -- constructors ------------------------------------------------

    @staticmethod
    def coxeter(letters, entries=None, kind="coxeter") -> "GroupSpec":
        """Build a Coxeter-kind spec from a sparse {(a, b): m} mapping.

        Unlisted pairs default to 0, i.e. infinite order.
        """
        letters = tuple(letters)
        n = len(letters)
        idx = {name: i for i, name in enumerate(letters)}
        m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for (a, b), value in (entries or {}).items():
            i, j = idx[a], idx[b]
            m[i][j] = m[j][i] = value
        return GroupSpec(kind, letters, tuple(tuple(row) for row in m))

    @staticmethod
    def _with_edges(kind, letters, edges) -> "GroupSpec":
        letters = tuple(letters)
        idx = {name: i for i, name in enumerate(letters)}
        pairs = set()
        for (a, b) in edges or ():
            i = idx[a] if isinstance(a, str) else a
            j = idx[b] if isinstance(b, str) else b
            pairs.add((i, j))
            pairs.add((j, i))
        return GroupSpec(kind, letters, None, frozenset(pairs))

    @staticmethod
    def racg(letters, edges=()) -> "GroupSpec":
        return GroupSpec._with_edges("racg", letters, edges)

    @staticmethod
    def graph_group(letters, edges=()) -> "GroupSpec":
        return GroupSpec._with_edges("graph", letters, edges)

    @staticmethod
    def fim(letters, edges=()) -> "GroupSpec":
        return GroupSpec._with_edges("fim", letters, edges)

    # -- accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.letters)

    def index(self, name: str) -> int:
        try:
            return self.letters.index(name)
        except ValueError:
            raise WordError("unknown letter %r" % name) from None

    def m(self, i: int, j: int) -> int:
        if self.kind not in COXETER_KINDS:
            raise KindMismatch("no Coxeter matrix under kind %s" % self.kind)
        return self.matrix[i][j]

    def independent(self, i: int, j: int) -> bool:
        """Independence of base letters, for the edge kinds."""
        return (i, j) in self.edges

    def sigma_letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(name) for name in self.letters)

    def gamma_letters(self) -> tuple[Letter, ...]:
        """The doubled alphabet a < a' < b < b' ... for graph/fim kinds."""
        out = []
        for name in self.letters:
            out.append(Letter(name))
            out.append(Letter(name, True))
        return tuple(out)

    # -- word encoding -----------------------------------------------

    def encode_word(self, word: Word) -> list[int]:
        """Map a word to letter indices (doubled alphabet for graph/fim)."""
        ids = []
        doubled = self.kind in INVERSE_KINDS
        for letter in word:
            i = self.index(letter.name)
            if letter.inverted:
                if not doubled:
                    raise WordError("formal inverse %s under kind %s"
                                    % (letter.render(), self.kind))
                ids.append(2 * i + 1)
            else:
                ids.append(2 * i if doubled else i)
        return ids

    def decode_word(self, ids) -> Word:
        doubled = self.kind in INVERSE_KINDS
        letters = []
        for g in ids:
            if doubled:
                letters.append(Letter(self.letters[g // 2], bool(g % 2)))
            else:
                letters.append(Letter(self.letters[g]))
        return Word(tuple(letters))


@dataclass(frozen=True)
class ExtendedIndependence:
    """The doubled alphabet of a graph/fim spec with the closed relation.

    The relation is the minimal one containing the base independence
    such that independence of two letters carries over to their formal
    inverses; no letter is ever independent of its own inverse.
    """

    base: GroupSpec
    letters: tuple[Letter, ...]
    pairs: frozenset


def extend_independence(spec: GroupSpec) -> ExtendedIndependence:
    """Close the independence relation of a graph (or fim) spec over
    the doubled alphabet."""
    if spec.kind not in INVERSE_KINDS:
        raise KindMismatch("extend_independence needs kind graph or fim, got %s"
                           % spec.kind)
    pairs = set()
    for (i, j) in spec.edges:
        for s in (0, 1):
            for t in (0, 1):
                pairs.add((2 * i + s, 2 * j + t))
    return ExtendedIndependence(spec, spec.gamma_letters(), frozenset(pairs))


# -- group-spec file format ----------------------------------------------


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the line-oriented group-spec format.

    Lines: ``kind = <k>``, ``letters = <name>...`` (order significant),
    then ``m <a> <b> <nat>`` for the Coxeter kinds or ``edge <a> <b>``
    for the others.  ``#`` starts a comment.  Unlisted Coxeter pairs
    default to 0 (infinite order).
    """
    kind = None
    letters = None
    entries = {}
    edges = set()
    idx = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "kind":
            if len(tokens) != 3 or tokens[1] != "=":
                raise SpecError("expected 'kind = <kind>'", lineno)
            if kind is not None:
                raise SpecError("duplicate kind line", lineno)
            kind = tokens[2]
            if kind not in KINDS:
                raise SpecError("unknown kind %r" % kind, lineno)
        elif tokens[0] == "letters":
            if len(tokens) < 3 or tokens[1] != "=":
                raise SpecError("expected 'letters = <name>...'", lineno)
            if kind is None:
                raise SpecError("kind must be declared before letters", lineno)
            if letters is not None:
                raise SpecError("duplicate letters line", lineno)
            letters = tuple(tokens[2:])
            for name in letters:
                _check_letter_name(name, lineno)
                if name in idx:
                    raise SpecError("duplicate letter %r" % name, lineno)
                idx[name] = len(idx)
        elif tokens[0] == "m":
            if kind is None or letters is None:
                raise SpecError("kind and letters must come first", lineno)
            if kind not in COXETER_KINDS:
                raise SpecError("'m' line not allowed under kind %s" % kind, lineno)
            if len(tokens) != 4:
                raise SpecError("expected 'm <a> <b> <nat>'", lineno)
            a, b, value = tokens[1], tokens[2], tokens[3]
            if a not in idx or b not in idx:
                raise SpecError("unknown letter in m line", lineno)
            if not value.isdigit():
                raise SpecError("matrix entry must be a natural number", lineno)
            value = int(value)
            i, j = idx[a], idx[b]
            if i == j:
                if value != 1:
                    raise SpecError("m[%s,%s] must be 1" % (a, b), lineno)
                continue
            if value == 1:
                raise SpecError("m[%s,%s] = 1 only allowed on the diagonal"
                                % (a, b), lineno)
            if kind == "even-coxeter" and value % 2 != 0:
                raise SpecError("odd entry m[%s,%s] = %d under kind even-coxeter"
                                % (a, b, value), lineno)
            key = (min(i, j), max(i, j))
            if key in entries and entries[key] != value:
                raise SpecError("asymmetric matrix: conflicting values for m[%s,%s]"
                                % (a, b), lineno)
            entries[key] = value
        elif tokens[0] == "edge":
            if kind is None or letters is None:
                raise SpecError("kind and letters must come first", lineno)
            if kind not in EDGE_KINDS:
                raise SpecError("'edge' line not allowed under kind %s" % kind, lineno)
            if len(tokens) != 3:
                raise SpecError("expected 'edge <a> <b>'", lineno)
            a, b = tokens[1], tokens[2]
            if a not in idx or b not in idx:
                raise SpecError("edge on unknown letter", lineno)
            if a == b:
                raise SpecError("edge %s %s: relation must be irreflexive"
                                % (a, b), lineno)
            edges.add((idx[a], idx[b]))
            edges.add((idx[b], idx[a]))
        else:
            raise SpecError("unknown directive %r" % tokens[0], lineno)

    if kind is None:
        raise SpecError("missing kind line")
    if letters is None:
        raise SpecError("missing letters line")
    n = len(letters)
    if kind in COXETER_KINDS:
        m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), value in entries.items():
            m[i][j] = m[j][i] = value
        return GroupSpec(kind, letters, tuple(tuple(row) for row in m))
    return GroupSpec(kind, letters, None, frozenset(edges))


def render_group_spec(spec: GroupSpec) -> str:
    """Inverse of parse_group_spec, up to omitted defaults."""
    lines = ["kind = %s" % spec.kind, "letters = %s" % " ".join(spec.letters)]
    if spec.kind in COXETER_KINDS:
        for i in range(spec.n):
            for j in range(i + 1, spec.n):
                if spec.matrix[i][j] != 0:
                    lines.append("m %s %s %d"
                                 % (spec.letters[i], spec.letters[j], spec.matrix[i][j]))
    else:
        for (i, j) in sorted(spec.edges):
            if i < j:
                lines.append("edge %s %s" % (spec.letters[i], spec.letters[j]))
    return "\n".join(lines) + "\n"


# -- word syntax ----------------------------------------------------------


def _parse_token(token, spec, known):
    inverted = token.endswith("'")
    name = token[:-1] if inverted else token
    if inverted and spec.kind not in INVERSE_KINDS:
        raise WordError("formal inverse %r not allowed under kind %s"
                        % (token, spec.kind))
    if name not in known:
        raise WordError("unknown letter %r" % name)
    return Letter(name, inverted)


def parse_word(text: str, spec: GroupSpec) -> Word:
    """Parse a dotted word; an undotted string is accepted when every
    letter name is a single character.  ``1`` denotes the empty word.
    A trailing apostrophe marks a formal inverse (graph/fim only).
    """
    known = set(spec.letters)
    if text == "" or (text == "1" and "1" not in known):
        return Word(())
    letters = []
    if "." in text:
        for token in text.split("."):
            if not token:
                raise WordError("empty token in word %r" % text)
            letters.append(_parse_token(token, spec, known))
    elif all(len(name) == 1 for name in spec.letters):
        i = 0
        while i < len(text):
            token = text[i]
            if i + 1 < len(text) and text[i + 1] == "'":
                token += "'"
                i += 1
            i += 1
            letters.append(_parse_token(token, spec, known))
    else:
        letters.append(_parse_token(text, spec, known))
    return Word(tuple(letters))
