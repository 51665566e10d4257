"""Command-line front end.

Every subcommand reads the group from a spec file and words from the
positional arguments; output is lowercase, single-space separated and
newline-terminated, so runs diff cleanly.  Exit codes: 0 on success
(including a false verdict), 2 for usage or parse errors, 3 when an
operation is asked of a group kind it is not defined for.
"""

from __future__ import annotations

import argparse
import sys

from . import coxeter, fim, oracle, racg
from .groupspec import (COXETER_KINDS, GroupSpec, KindMismatch, SpecError, Word,
                        WordError, parse_group_spec, parse_word)

_WORD_OPS = ("length", "alphabet", "parikh", "normalize", "munn")
_PAIR_OPS = ("equal", "fim-equal")
_CHECKABLE = ("length", "alphabet", "parikh", "normalize", "equal")


def _reverse(word: Word) -> Word:
    return Word(tuple(reversed(word.letters)))


def _length(spec, word):
    if spec.kind in COXETER_KINDS:
        return coxeter.geodesic_length(spec, word)
    if spec.kind == "racg":
        return len(racg.shortlex_racg(spec, word))
    if spec.kind == "graph":
        return len(racg.shortlex_graph_group(spec, word))
    raise KindMismatch("length is not defined for kind %s" % spec.kind)


def _alphabet(spec, word):
    """Letters of the shortlex normal form, in spec order."""
    if spec.kind in COXETER_KINDS:
        hits = coxeter.geodesic_alphabet(spec, word)
        return [name for name in spec.letters if name in hits]
    if spec.kind == "racg":
        hits = racg.normal_form_alphabet(spec, word)
        return [name for name in spec.letters if name in hits]
    if spec.kind == "graph":
        hits = racg.graph_normal_form_alphabet(spec, word)
        return [l.render() for l in spec.gamma_letters() if l in hits]
    raise KindMismatch("alphabet is not defined for kind %s" % spec.kind)


def _parikh(spec, word):
    counts = coxeter.parikh_even(spec, word)
    return ",".join("%s:%d" % (name, counts[name]) for name in spec.letters)


def _normalize(spec, word):
    if spec.kind == "racg":
        return racg.shortlex_racg(spec, word)
    if spec.kind == "graph":
        return racg.shortlex_graph_group(spec, word)
    raise KindMismatch("normalize supports kinds racg and graph, not %s" % spec.kind)


def _equal(spec, u, v):
    if spec.kind in COXETER_KINDS:
        return coxeter.geodesic_length(spec, u + _reverse(v)) == 0
    if spec.kind == "racg":
        return racg.shortlex_racg(spec, u) == racg.shortlex_racg(spec, v)
    if spec.kind == "graph":
        return racg.shortlex_graph_group(spec, u) == racg.shortlex_graph_group(spec, v)
    raise KindMismatch("equal is not defined for kind %s (use fim-equal)" % spec.kind)


def _format(op, spec, words):
    if op == "length":
        return "length %d" % _length(spec, words[0])
    if op == "alphabet":
        names = _alphabet(spec, words[0])
        return ("alphabet " + ",".join(names)).rstrip()
    if op == "parikh":
        return "parikh %s" % _parikh(spec, words[0])
    if op == "normalize":
        return _normalize(spec, words[0]).render()
    if op == "equal":
        return "true" if _equal(spec, words[0], words[1]) else "false"
    if op == "fim-equal":
        return "true" if fim.fim_equal(spec, words[0], words[1]) else "false"
    raise AssertionError(op)


def _oracle_format(op, spec, words, bound):
    if op == "length":
        return "length %d" % oracle.oracle_length(spec, words[0], bound)
    if op == "alphabet":
        nf = oracle.oracle_shortlex(spec, words[0], bound)
        hits = set(nf)
        if spec.kind == "graph":
            names = [l.render() for l in spec.gamma_letters() if l in hits]
        else:
            names = [name for name in spec.letters
                     if any(l.name == name for l in hits)]
        return ("alphabet " + ",".join(names)).rstrip()
    if op == "parikh":
        if spec.kind != "even-coxeter":
            raise KindMismatch("parikh needs kind even-coxeter, got %s" % spec.kind)
        nf = oracle.oracle_shortlex(spec, words[0], bound)
        counts = {name: 0 for name in spec.letters}
        for letter in nf:
            counts[letter.name] += 1
        return "parikh %s" % ",".join("%s:%d" % (name, counts[name])
                                      for name in spec.letters)
    if op == "normalize":
        if spec.kind not in ("racg", "graph"):
            raise KindMismatch("normalize supports kinds racg and graph, not %s"
                               % spec.kind)
        return oracle.oracle_shortlex(spec, words[0], bound).render()
    if op == "equal":
        if spec.kind == "fim":
            raise KindMismatch("equal is not defined for kind fim")
        return "true" if oracle.oracle_equal(spec, words[0], words[1], bound) \
            else "false"
    raise AssertionError(op)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="coxtrace",
        description="geodesics, normal forms and word problems over a group spec")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, nwords, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--group", required=True, help="group spec file")
        p.add_argument("words", nargs=nwords, help="input word(s)")
        return p

    add("length", 1, help="geodesic length of a word")
    add("alphabet", 1, help="letters of the shortlex normal form")
    add("parikh", 1, help="Parikh image of the shortlex normal form (even Coxeter)")
    add("normalize", 1, help="shortlex normal form (racg/graph)")
    add("equal", 2, help="equality in the group")
    add("fim-equal", 2, help="equality in the inverse monoid (fim)")
    add("munn", 1, help="Munn set of a word (fim)")
    check = add("oracle-check", "+",
                help="cross-check an operation against the brute-force oracle")
    check.add_argument("--op", required=True, choices=_CHECKABLE)
    check.add_argument("--bound", type=int, default=oracle.DEFAULT_BOUND,
                       help="oracle closure length bound")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        with open(args.group, encoding="utf-8") as handle:
            spec = parse_group_spec(handle.read())
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except SpecError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2

    try:
        words = [parse_word(text, spec) for text in args.words]
        if args.command == "munn":
            for line in fim.munn_set(spec, words[0]).render_lines():
                print(line)
            return 0
        if args.command == "oracle-check":
            expected = 2 if args.op == "equal" else 1
            if len(words) != expected:
                print("error: %s takes %d word(s)" % (args.op, expected),
                      file=sys.stderr)
                return 2
            computed = _format(args.op, spec, words)
            reference = _oracle_format(args.op, spec, words, args.bound)
            print("agree" if computed == reference else "disagree")
            print("computed %s" % computed)
            print("oracle %s" % reference)
            return 0
        print(_format(args.command, spec, words))
        return 0
    except (WordError, oracle.BoundExceeded) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except KindMismatch as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
