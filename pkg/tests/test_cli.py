import json

import pytest

from patlang.cli import main
from patlang.matcher import membership
from patlang.pattern_core import Alphabet, parse_pattern, parse_word

BIN = Alphabet.parse("01")
GOLDEN = "x1 0 x2 0 x3 1 x4 1 x5"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def sample_file(tmp_path, text, name="s.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


# ---------------------------------------------------------------- match


def test_match_member_and_nonmember(capsys):
    code, out, _ = run(capsys, "match", "--alphabet", "01", "--pattern", GOLDEN, "--word", "00011")
    assert code == 0 and out.strip() == "member"
    code, out, _ = run(capsys, "match", "--alphabet", "01", "--pattern", GOLDEN, "--word", "01101")
    assert code == 1 and out.strip() == "not member"


def test_match_witness(capsys):
    code, out, _ = run(capsys, "match", "--pattern", "x1 x2 x1", "--word", "01101", "--witness")
    assert code == 0
    lines = out.splitlines()
    assert any(line.startswith("intervals ") for line in lines)
    subst = {}
    for line in lines:
        if " -> " in line:
            var, value = line.split(" -> ")
            subst[int(var.strip()[1:])] = parse_word(value.strip(), BIN)
    assert parse_pattern("x1 x2 x1", BIN).substitute(subst) == parse_word("01101", BIN)


def test_match_symbolic_word(capsys):
    code, _, _ = run(capsys, "match", "--pattern", "x1^4 x2^8 x3^9", "--word", "(01)^4(001)^8(0001)^9")
    assert code == 0


def test_match_bad_input(capsys):
    code, _, err = run(capsys, "match", "--pattern", "x0", "--word", "0")
    assert code == 2 and err.startswith("error:")
    code, _, _ = run(capsys, "match", "--pattern", "x1", "--word", "2")
    assert code == 2
    code, _, _ = run(capsys, "match", "--pattern", "x1")
    assert code == 2


# ---------------------------------------------------------------- teachset


def test_teachset_sr(capsys):
    code, out, _ = run(capsys, "teachset", "--class", "sr", "--pattern", "x1 0 x2 0 x3")
    assert code == 0 and out.splitlines() == ["+ 00", "- 0"]


def test_teachset_noncross_td_stays_symbolic(capsys):
    code, out, _ = run(capsys, "teachset", "--class", "noncross-td", "--pattern", "x1^4 x2^8 x3^9", "--m", "9")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    assert "- (01)^{1260}(001)^{1260}(0001)^{1260}" in lines
    assert max(len(line) for line in lines) < 100


def test_teachset_x222_fixed(capsys):
    code, out, _ = run(capsys, "teachset", "--class", "x222-fixed")
    assert code == 0 and len(out.splitlines()) == 6


def test_teachset_golden_words(capsys):
    code, out, _ = run(capsys, "teachset", "--class", "sr-vs-regular", "--pattern", GOLDEN)
    assert code == 0 and out.splitlines() == ["+ 10101010", "+ 00011", "- 01101"]


def test_teachset_unknown_class_and_precondition(capsys):
    assert run(capsys, "teachset", "--class", "bogus")[0] == 2
    assert run(capsys, "teachset", "--class", "sr", "--pattern", "x1 x1")[0] == 2


# ---------------------------------------------------------------- verify


def test_verify_refuted_then_confirmed_with_preference(capsys, tmp_path):
    f = sample_file(tmp_path, "+ 0\n")
    code, out, _ = run(capsys, "verify", "--pattern", "x1 0 x2", "--class", "sbr", "--sample", f)
    assert code == 1
    assert "verdict refuted" in out and "counterexample x1" in out
    assert "bounds max-pattern-len=8 max-word-len=8" in out
    code, out, _ = run(capsys, "verify", "--pattern", "x1 0 x2", "--class", "sbr", "--sample", f, "--pbt", "sr")
    assert code == 0 and "verdict confirmed" in out


def test_verify_golden_set_is_refuted(capsys, tmp_path):
    f = sample_file(tmp_path, "+ 10101010\n+ 00011\n- 01101\n")
    code, out, _ = run(
        capsys, "verify", "--pattern", GOLDEN, "--class", "regular", "--sample", f, "--max-pattern-len", "9"
    )
    assert code == 1 and "counterexample x1 0 x2 0 x3 0 x4" in out


def test_verify_inconsistent_sample(capsys, tmp_path):
    f = sample_file(tmp_path, "- 00\n")
    code, _, err = run(capsys, "verify", "--pattern", "x1 0 x2", "--class", "sbr", "--sample", f)
    assert code == 4 and "error" in err


def test_verify_inconclusive(capsys, tmp_path):
    f = sample_file(tmp_path, "+ eps\n")
    code, out, _ = run(
        capsys, "verify", "--pattern", "x1 x1", "--class", "all", "--sample", f,
        "--max-pattern-len", "3", "--max-word-len", "0",
    )
    assert code == 5 and "verdict inconclusive" in out and "unresolved" in out


def test_verify_bad_files(capsys, tmp_path):
    assert run(capsys, "verify", "--pattern", "x1", "--class", "sbr", "--sample", str(tmp_path / "missing"))[0] == 2
    f = sample_file(tmp_path, "* 0\n")
    assert run(capsys, "verify", "--pattern", "x1", "--class", "sbr", "--sample", f)[0] == 2
    f = sample_file(tmp_path, "+ 0\n")
    assert run(capsys, "verify", "--pattern", "x1", "--class", "nope", "--sample", f)[0] == 2
    assert run(capsys, "verify", "--pattern", "x1", "--class", "sbr", "--sample", f, "--pbt", "nope")[0] == 2


def test_bounds_from_environment(capsys, tmp_path, monkeypatch):
    f = sample_file(tmp_path, "+ 0\n")
    monkeypatch.setenv("PATLANG_MAX_PATTERN_LEN", "3")
    monkeypatch.setenv("PATLANG_MAX_WORD_LEN", "4")
    _, out, _ = run(capsys, "verify", "--pattern", "x1 0 x2", "--class", "sbr", "--sample", f)
    assert "bounds max-pattern-len=3 max-word-len=4" in out
    _, out, _ = run(capsys, "verify", "--pattern", "x1 0 x2", "--class", "sbr", "--sample", f, "--max-word-len", "5")
    assert "bounds max-pattern-len=3 max-word-len=5" in out
    monkeypatch.setenv("PATLANG_MAX_WORD_LEN", "many")
    assert run(capsys, "verify", "--pattern", "x1 0 x2", "--class", "sbr", "--sample", f)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["--class", "sr", "--pattern", "x1 0 x2 1 x3"],
        ["--class", "sr-zero-chain", "--n", "2"],
        ["--class", "qr-unary", "--pattern", "0 0 x1 x1", "--alphabet", "0"],
    ],
)
def test_teachset_output_feeds_verify(capsys, tmp_path, argv):
    code, out, _ = run(capsys, "teachset", *argv)
    assert code == 0
    f = sample_file(tmp_path, out)
    opts = dict(zip(argv[::2], argv[1::2]))
    pattern = opts.get("--pattern", "x1 0 x2 0 x3")
    verify_class = {"sr": "sbr", "sr-zero-chain": "all", "qr-unary": "qr"}[opts["--class"]]
    extra = ["--alphabet", opts["--alphabet"]] if "--alphabet" in opts else []
    code, out, _ = run(
        capsys, "verify", "--pattern", pattern, "--class", verify_class, "--sample", f,
        "--max-pattern-len", "5", "--max-word-len", "6", *extra,
    )
    assert code == 0, out


# ---------------------------------------------------------------- td


def test_td_qr_unary(capsys):
    code, out, _ = run(
        capsys, "td", "--pattern", "0 0 x1 x1", "--class", "qr", "--alphabet", "0",
        "--max-word-len", "6", "--max-pattern-len", "8",
    )
    assert code == 0 and out.splitlines()[0] == "size 3"


def test_td_single_variable(capsys):
    code, out, _ = run(capsys, "td", "--pattern", "x1", "--class", "sbr", "--max-word-len", "3", "--max-pattern-len", "4")
    assert code == 0 and out.splitlines()[:2] == ["size 1", "+ eps"]


def test_td_budget(capsys):
    code, _, err = run(capsys, "td", "--pattern", "x1 0 x2 1 x3", "--class", "regular", "--budget", "3",
                       "--max-word-len", "5", "--max-pattern-len", "5")
    assert code == 3 and "budget" in err


# ---------------------------------------------------------------- passe-partout


def test_passepartout(capsys, tmp_path):
    f = sample_file(tmp_path, "001100\n")
    code, out, _ = run(capsys, "passepartout", "--positives", f)
    assert code == 0
    lines = out.splitlines()
    tau = parse_pattern(lines[0], BIN)
    assert tau.max_frequency <= 4 and membership(parse_word("001100", BIN), tau)
    assert "accepts 001100 yes" in lines and "morphism-from-target yes" in lines


def test_passepartout_errors(capsys, tmp_path):
    code, _, err = run(capsys, "passepartout", "--positives", sample_file(tmp_path, "0\n"))
    assert code == 2 and "word 0" in err
    code, _, err = run(capsys, "passepartout", "--positives", sample_file(tmp_path, "", "empty.txt"))
    assert code == 2 and "no words" in err


# ---------------------------------------------------------------- structured output and determinism


def test_json_output(capsys, tmp_path):
    code, out, _ = run(capsys, "teachset", "--class", "sr", "--pattern", "x1 0 x2 0 x3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["exit"] == 0 and doc["command"] == "teachset"
    assert doc["sample"] == [{"label": "+", "word": "00"}, {"label": "-", "word": "0"}]
    f = sample_file(tmp_path, "+ 0\n")
    code, out, _ = run(capsys, "verify", "--pattern", "x1 0 x2", "--class", "sbr", "--sample", f, "--json")
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "refuted" and doc["counterexample"] == "x1"
    code, out, _ = run(capsys, "match", "--pattern", "x1", "--word", "2", "--json")
    assert code == 2 and json.loads(out)["exit"] == 2


def test_json_sample_roundtrips_through_verify(capsys, tmp_path):
    _, out, _ = run(capsys, "teachset", "--class", "sr", "--pattern", "x1 1 x2 0 x3", "--json")
    lines = [f"{e['label']} {e['word']}" for e in json.loads(out)["sample"]]
    f = sample_file(tmp_path, "\n".join(lines) + "\n")
    code, _, _ = run(capsys, "verify", "--pattern", "x1 1 x2 0 x3", "--class", "sbr", "--sample", f,
                     "--max-pattern-len", "5", "--max-word-len", "6")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["teachset", "--class", "noncross-td", "--pattern", "x1^4 x2^8 x3^9", "--m", "9"],
        ["teachset", "--class", "sr-vs-regular", "--pattern", "x1 0 x2 1 x3 2 x4", "--alphabet", "012"],
        ["td", "--pattern", "x1 0 x2", "--class", "sbr", "--max-word-len", "4", "--max-pattern-len", "5", "--json"],
        ["match", "--pattern", "x1 x2 x1 x2", "--word", "01100110", "--witness"],
    ],
)
def test_output_is_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
