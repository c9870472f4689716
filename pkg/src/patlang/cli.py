"""Command-line front end.

Exit codes: 0 success or confirmed, 1 negative or refuted, 2 usage or input
error, 3 search budget exceeded, 4 sample inconsistent with the target,
5 verdict inconclusive within the bounds.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from .matcher import match_witness, membership, pattern_morphism
from .pattern_core import (
    DEFAULT_MATERIALIZE_CAP,
    Alphabet,
    ClassSpec,
    InconsistentSample,
    MaterializeError,
    ParseError,
    Pattern,
    Sample,
    noncross_exponents,
    parse_pattern,
    parse_sample,
    parse_word,
    render_pattern,
    render_sample,
    render_word,
)
from . import teachsets as ts
from .verifier import Bounds, BudgetExceeded, brute_force_td, is_teaching_set

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET, EXIT_INCONSISTENT, EXIT_INCONCLUSIVE = range(6)

ENV_PATTERN_LEN = "PATLANG_MAX_PATTERN_LEN"
ENV_WORD_LEN = "PATLANG_MAX_WORD_LEN"

CLASS_ALIASES = {
    "all": "all",
    "regular": "regular",
    "sbr": "sbr",
    "m-regular": "m-regular",
    "qr": "m-quasi-regular",
    "m-quasi-regular": "m-quasi-regular",
    "non-cross": "non-cross",
    "noncross": "non-cross",
    "k-var-m-regular": "k-var-m-regular",
}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- output


class Out:
    def __init__(self, structured: bool, stream=None):
        self.structured = structured
        self.stream = stream or sys.stdout
        self.doc: dict = {}

    def line(self, text: str = ""):
        if not self.structured:
            print(text, file=self.stream)

    def put(self, **fields):
        self.doc.update(fields)

    def finish(self, command: str, code: int) -> int:
        if self.structured:
            self.doc = {"command": command, "exit": code, **self.doc}
            print(json.dumps(self.doc, sort_keys=True), file=self.stream)
        return code


def _sample_doc(s: Sample) -> list[dict]:
    return [{"label": e.label, "word": render_word(e.word)} for e in s]


# ---------------------------------------------------------------- helpers


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer") from None


def _class_spec(args, p: Pattern | None, alphabet: Alphabet) -> ClassSpec:
    family = CLASS_ALIASES.get(args.cls)
    if family is None:
        raise UsageError(f"unknown class {args.cls!r}; choose from {', '.join(sorted(CLASS_ALIASES))}")
    m = args.m
    if m is None and family in ("m-regular", "m-quasi-regular", "k-var-m-regular") and p is not None:
        m = max(p.max_frequency, 1)
    if m is None and family == "non-cross" and p is not None:
        exps = noncross_exponents(p)
        m = max(exps) if exps else None
    k = args.k
    if k is None and family == "k-var-m-regular" and p is not None:
        k = len(p.variables)
    return ClassSpec(family, alphabet, m=m, k=k, constant_free=args.constant_free)


def _pref(name: str | None) -> ts.PreferenceOrder | None:
    if name is None:
        return None
    try:
        return ts.PREFERENCES[name]
    except KeyError:
        raise UsageError(f"unknown preference {name!r}; choose from {', '.join(sorted(ts.PREFERENCES))}") from None


def _bounds(args) -> Bounds:
    L = args.max_pattern_len if args.max_pattern_len is not None else _env_int(ENV_PATTERN_LEN, 8)
    W = args.max_word_len if args.max_word_len is not None else _env_int(ENV_WORD_LEN, 8)
    if L < 1 or W < 0:
        raise UsageError("bounds must be positive")
    return Bounds(L, W)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


# ---------------------------------------------------------------- commands


def cmd_match(args, alphabet: Alphabet, out: Out) -> int:
    p = parse_pattern(args.pattern, alphabet)
    w = parse_word(args.word, alphabet)
    cap = args.materialize_cap
    ok = membership(w, p, alphabet, cap=cap)
    out.line("member" if ok else "not member")
    out.put(pattern=render_pattern(p), word=render_word(w), member=ok)
    if args.witness and ok:
        wit = match_witness(w, p, cap=cap)
        for v in p.variables:
            out.line(f"x{v} -> {render_word(wit.assignment[v])}")
        cells = []
        for sym, (s, e) in zip(p.symbols, wit.intervals):
            name = f"x{sym}" if isinstance(sym, int) else sym
            cells.append(f"{name}:[{s},{e}]")
        out.line("intervals " + " ".join(cells))
        out.line("cuts " + " ".join(str(c) for c in wit.cut_points))
        out.put(
            witness={
                "assignment": {f"x{v}": render_word(wit.assignment[v]) for v in p.variables},
                "intervals": [list(iv) for iv in wit.intervals],
                "cuts": list(wit.cut_points),
            }
        )
    return EXIT_OK if ok else EXIT_NEGATIVE


def _need_pattern(args, alphabet) -> Pattern:
    if not args.pattern:
        raise UsageError(f"class {args.cls} needs --pattern")
    return parse_pattern(args.pattern, alphabet)


def _need_m(args) -> int:
    if args.m is None:
        raise UsageError(f"class {args.cls} needs --m")
    return args.m


def _single(word) -> Sample:
    return Sample([(word, True)])


TEACHSET_BUILDERS: dict[str, Callable] = {
    "sr": lambda a, al: ts.sr_td_set(_need_pattern(a, al)),
    "sr-pbt": lambda a, al: ts.sr_pbt_set(_need_pattern(a, al)),
    "sr-vs-regular": lambda a, al: ts.sr_vs_regular_set(_need_pattern(a, al), al, a.variant),
    "sr-vs-all": lambda a, al: ts.sr_vs_all_set(_need_pattern(a, al), al),
    "sr-zero-chain": lambda a, al: ts.sr_zero_chain_set(a.n if a.n is not None else _need_m(a), al),
    "qr-unary": lambda a, al: ts.qr_unary_set(_need_pattern(a, al), a.m),
    "qr-unary-pbt": lambda a, al: ts.qr_unary_pbt_set(_need_pattern(a, al)),
    "qr-pbt-witness": lambda a, al: _single(ts.qr_pbt_witness(_need_pattern(a, al), al)),
    "noncross-unary": lambda a, al: ts.noncross_unary_set(_need_pattern(a, al), _need_m(a), al.letter(0)),
    "noncross-pbt": lambda a, al: _single(ts.noncross_pbt_witness(_need_pattern(a, al))),
    "noncross-td": lambda a, al: ts.noncross_td_set(_need_pattern(a, al), _need_m(a)),
    "infinite-pbt": lambda a, al: ts.infinite_pbt_set(_need_pattern(a, al), al),
    "unary-mregular": lambda a, al: ts.unary_mregular_set(_need_pattern(a, al), _need_m(a)),
    "x222-fixed": lambda a, al: ts.fixed_x222_set(),
}


def cmd_teachset(args, alphabet: Alphabet, out: Out) -> int:
    build = TEACHSET_BUILDERS.get(args.cls)
    if build is None:
        raise UsageError(f"unknown class {args.cls!r}; choose from {', '.join(TEACHSET_BUILDERS)}")
    s = build(args, alphabet)
    if not out.structured:
        out.stream.write(render_sample(s))
    out.put(sample=_sample_doc(s), size=len(s))
    return EXIT_OK


def _report_verdict(v, out: Out):
    b = v.bounds
    out.line(f"verdict {v.status}")
    out.line(f"bounds max-pattern-len={b.max_pattern_len} max-word-len={b.max_word_len}")
    out.line(
        f"stats patterns={v.patterns_enumerated} consistent={v.consistent_rivals} membership-calls={v.membership_calls}"
    )
    if v.counterexample is not None:
        out.line(f"counterexample {render_pattern(v.counterexample)}")
    if v.separating_word is not None:
        out.line(f"separating-word {render_word(v.separating_word)}")
    for r in v.unresolved:
        out.line(f"unresolved {render_pattern(r)}")
    out.put(
        status=v.status,
        bounds={"max_pattern_len": b.max_pattern_len, "max_word_len": b.max_word_len},
        patterns_enumerated=v.patterns_enumerated,
        consistent_rivals=v.consistent_rivals,
        membership_calls=v.membership_calls,
        counterexample=render_pattern(v.counterexample) if v.counterexample is not None else None,
        separating_word=render_word(v.separating_word) if v.separating_word is not None else None,
        unresolved=[render_pattern(r) for r in v.unresolved],
    )


def cmd_verify(args, alphabet: Alphabet, out: Out) -> int:
    p = parse_pattern(args.pattern, alphabet)
    sample = parse_sample(_read(args.sample), alphabet)
    spec = _class_spec(args, p, alphabet)
    try:
        v = is_teaching_set(p, sample, spec, _bounds(args), _pref(args.pbt))
    except InconsistentSample as exc:
        print(f"error: {exc}", file=sys.stderr)
        out.put(error=str(exc))
        return EXIT_INCONSISTENT
    _report_verdict(v, out)
    return {"confirmed": EXIT_OK, "refuted": EXIT_NEGATIVE}.get(v.status, EXIT_INCONCLUSIVE)


def cmd_td(args, alphabet: Alphabet, out: Out) -> int:
    p = parse_pattern(args.pattern, alphabet)
    spec = _class_spec(args, p, alphabet)
    b = _bounds(args)
    r = brute_force_td(p, spec, b.max_word_len, b.max_pattern_len, _pref(args.pbt), args.budget)
    out.line(f"size {r.size}")
    if not out.structured:
        out.stream.write(render_sample(r.sample))
    out.line(f"bounds max-pattern-len={b.max_pattern_len} max-word-len={b.max_word_len}")
    out.line(f"rivals {r.rivals} unseparable {len(r.unseparable)} nodes {r.nodes}")
    out.put(
        size=r.size,
        sample=_sample_doc(r.sample),
        bounds={"max_pattern_len": b.max_pattern_len, "max_word_len": b.max_word_len},
        rivals=r.rivals,
        unseparable=[render_pattern(q) for q in r.unseparable],
    )
    return EXIT_OK


def cmd_passepartout(args, alphabet: Alphabet, out: Out) -> int:
    words = []
    for raw in _read(args.positives).splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line[0] in "+-":
            if line[0] == "-":
                continue
            line = line[1:].strip()
        words.append(parse_word(line, alphabet))
    if not words:
        raise UsageError("positives file holds no words")
    for w in words:
        if not membership(w, ts.X222):
            raise UsageError(f"word {render_word(w)} is not in L(x1^2 x2^2 x3^2)")
    tau = ts.passe_partout(words, ts.X222, alphabet)
    out.line(render_pattern(tau))
    checks = [(render_word(w), membership(w, tau)) for w in words]
    for text, ok in checks:
        out.line(f"accepts {text} {'yes' if ok else 'no'}")
    morph = pattern_morphism(ts.X222, tau) is not None
    out.line(f"max-frequency {tau.max_frequency}")
    out.line(f"morphism-from-target {'yes' if morph else 'no'}")
    out.put(
        pattern=render_pattern(tau),
        accepts={t: ok for t, ok in checks},
        max_frequency=tau.max_frequency,
        morphism_from_target=morph,
    )
    return EXIT_OK if morph and all(ok for _, ok in checks) else EXIT_NEGATIVE


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="patlang", description="Erasing pattern languages: matching and teaching sets.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", default="01", help='letters, e.g. "01", or "inf:01" for an unbounded alphabet')
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--materialize-cap", type=int, default=DEFAULT_MATERIALIZE_CAP)
    sub = ap.add_subparsers(dest="command", required=True)

    m = sub.add_parser("match", parents=[common], help="decide membership of a word")
    m.add_argument("--pattern", required=True)
    m.add_argument("--word", required=True)
    m.add_argument("--witness", action="store_true", help="print the substitution and interval map")

    def class_opts(p, with_bounds: bool):
        p.add_argument("--class", dest="cls", required=True)
        p.add_argument("--m", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--constant-free", action="store_true")
        if with_bounds:
            p.add_argument("--max-pattern-len", type=int)
            p.add_argument("--max-word-len", type=int)
            p.add_argument("--pbt", help="preference order: " + ", ".join(sorted(ts.PREFERENCES)))

    t = sub.add_parser("teachset", parents=[common], help="build a teaching set")
    class_opts(t, False)
    t.add_argument("--pattern")
    t.add_argument("--n", type=int, help="chain length for sr-zero-chain")
    t.add_argument("--variant", choices=("example", "printed"), default="example")

    v = sub.add_parser("verify", parents=[common], help="verify a sample as a teaching set within bounds")
    class_opts(v, True)
    v.add_argument("--pattern", required=True)
    v.add_argument("--sample", required=True, help="sample file, '-' for stdin")

    d = sub.add_parser("td", parents=[common], help="exact minimum teaching set within bounds")
    class_opts(d, True)
    d.add_argument("--pattern", required=True)
    d.add_argument("--budget", type=int, default=2_000_000, help="search node budget")

    pp = sub.add_parser("passepartout", parents=[common], help="passe-partout for x1^2 x2^2 x3^2")
    pp.add_argument("--positives", required=True, help="file of positive words, '-' for stdin")
    return ap


COMMANDS = {
    "match": cmd_match,
    "teachset": cmd_teachset,
    "verify": cmd_verify,
    "td": cmd_td,
    "passepartout": cmd_passepartout,
}


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Out(args.json)
    try:
        alphabet = Alphabet.parse(args.alphabet)
        code = COMMANDS[args.command](args, alphabet, out)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        out.put(error=f"budget exceeded: {exc}")
        code = EXIT_BUDGET
    except InconsistentSample as exc:
        print(f"error: {exc}", file=sys.stderr)
        out.put(error=str(exc))
        code = EXIT_INCONSISTENT
    except (UsageError, ParseError, MaterializeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        out.put(error=str(exc))
        code = EXIT_USAGE
    return out.finish(args.command, code)


if __name__ == "__main__":
    sys.exit(main())
