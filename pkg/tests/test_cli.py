import io
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout

import pytest

from coxtrace.cli import main


@pytest.fixture()
def groups(tmp_path):
    files = {
        "s3.grp": "kind = coxeter\nletters = a b\nm a b 3\n",
        "b2even.grp": "kind = even-coxeter\nletters = a b\nm a b 4\n",
        "racg.grp": "kind = racg\nletters = a b\nedge a b\n",
        "gg.grp": "kind = graph\nletters = a b\nedge a b\n",
        "fim.grp": "kind = fim\nletters = a b\nedge a b\n",
    }
    for name, text in files.items():
        (tmp_path / name).write_text(text)
    return tmp_path


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_length(groups):
    code, out, _ = run("length", "--group", str(groups / "s3.grp"), "ababab")
    assert (code, out) == (0, "length 0\n")


def test_length_all_group_kinds(groups):
    assert run("length", "--group", str(groups / "racg.grp"), "aba")[1] == "length 1\n"
    assert run("length", "--group", str(groups / "gg.grp"), "a.b.a'")[1] == "length 1\n"
    assert run("length", "--group", str(groups / "b2even.grp"), "abab")[1] == "length 4\n"


def test_normalize(groups):
    code, out, _ = run("normalize", "--group", str(groups / "racg.grp"), "b.a.b")
    assert (code, out) == (0, "a\n")
    code, out, _ = run("normalize", "--group", str(groups / "gg.grp"), "a.a'")
    assert (code, out) == (0, "1\n")


def test_normalize_round_trips(groups):
    _, out, _ = run("normalize", "--group", str(groups / "gg.grp"), "b.a.b'.a'")
    again = run("normalize", "--group", str(groups / "gg.grp"), out.strip())[1]
    assert again == out


def test_parikh(groups):
    code, out, _ = run("parikh", "--group", str(groups / "b2even.grp"), "ababab")
    assert (code, out) == (0, "parikh a:1,b:1\n")


def test_alphabet(groups):
    assert run("alphabet", "--group", str(groups / "s3.grp"), "abab")[1] == "alphabet a,b\n"
    assert run("alphabet", "--group", str(groups / "s3.grp"), "aa")[1] == "alphabet\n"
    assert run("alphabet", "--group", str(groups / "gg.grp"), "a.b.a")[1] \
        == "alphabet a,b\n"


def test_equal(groups):
    assert run("equal", "--group", str(groups / "s3.grp"), "aba", "bab") \
        == (0, "true\n", "")
    assert run("equal", "--group", str(groups / "s3.grp"), "a", "b") \
        == (0, "false\n", "")


def test_fim_equal_and_munn(groups):
    fim = str(groups / "fim.grp")
    assert run("fim-equal", "--group", fim, "a.a'.a", "a") == (0, "true\n", "")
    assert run("fim-equal", "--group", fim, "a.a'", "a'.a") == (0, "false\n", "")
    assert run("munn", "--group", fim, "a.b")[1] == "a\nb\n"
    assert run("munn", "--group", fim, "1")[1] == ""


def test_oracle_check(groups):
    code, out, _ = run("oracle-check", "--op", "length",
                       "--group", str(groups / "s3.grp"), "ababab")
    assert code == 0
    assert out == "agree\ncomputed length 0\noracle length 0\n"
    code, out, _ = run("oracle-check", "--op", "normalize",
                       "--group", str(groups / "gg.grp"), "b.a")
    assert out.startswith("agree\n")
    code, out, _ = run("oracle-check", "--op", "equal",
                       "--group", str(groups / "racg.grp"), "ab", "ba")
    assert out.splitlines()[0] == "agree"


def test_exit_code_2_on_bad_input(groups):
    code, _, err = run("length", "--group", str(groups / "s3.grp"), "a.z")
    assert code == 2 and "unknown letter" in err
    code, _, err = run("length", "--group", str(groups / "missing.grp"), "a")
    assert code == 2
    bad = groups / "bad.grp"
    bad.write_text("kind = coxeter\nletters = a b\nm a b 1\n")
    code, _, err = run("length", "--group", str(bad), "a")
    assert code == 2 and "line 3" in err


def test_exit_code_3_on_kind_mismatch(groups):
    assert run("parikh", "--group", str(groups / "s3.grp"), "ab")[0] == 3
    assert run("normalize", "--group", str(groups / "s3.grp"), "ab")[0] == 3
    assert run("normalize", "--group", str(groups / "fim.grp"), "a")[0] == 3
    assert run("length", "--group", str(groups / "fim.grp"), "a")[0] == 3
    assert run("munn", "--group", str(groups / "s3.grp"), "a")[0] == 3
    assert run("fim-equal", "--group", str(groups / "gg.grp"), "a", "a")[0] == 3


def test_deterministic_output(groups):
    commands = [
        ("length", "--group", str(groups / "s3.grp"), "ababab"),
        ("alphabet", "--group", str(groups / "b2even.grp"), "abba"),
        ("parikh", "--group", str(groups / "b2even.grp"), "abab"),
        ("normalize", "--group", str(groups / "gg.grp"), "b.a.a'.b'.a"),
        ("equal", "--group", str(groups / "racg.grp"), "ab", "ba"),
        ("fim-equal", "--group", str(groups / "fim.grp"), "a.b", "b.a"),
        ("munn", "--group", str(groups / "fim.grp"), "a.b.a'"),
        ("oracle-check", "--op", "alphabet", "--group", str(groups / "s3.grp"), "ab"),
    ]
    for argv in commands:
        outputs = {run(*argv) for _ in range(3)}
        assert len(outputs) == 1


def test_console_entry_point(groups):
    result = subprocess.run(
        [sys.executable, "-m", "coxtrace.cli", "length",
         "--group", str(groups / "s3.grp"), "abab"],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout == "length 2\n"
