"""Membership in erasing pattern languages.

The general decider is a backtracking search that binds each variable at its
first occurrence, trying image lengths from 0 upwards.  Special cases with
polynomial deciders are dispatched automatically: unary words, regular
patterns, non-cross patterns on explicit words and on staircase words.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .numtheory import coin_representable
from .pattern_core import (
    DEFAULT_MATERIALIZE_CAP,
    MaterializeError,
    Pattern,
    Symbol,
    Word,
    noncross_exponents,
)

STAIRCASE_PREFERRED_LENGTH = 2000


class MatchTooLarge(ValueError):
    """No decider applies to a word this long."""


# ---------------------------------------------------------------- encoding


def _encode(w: Word, p: Pattern, cap: int) -> tuple[str, list]:
    """Spell w as a str (one char per letter) and translate p's constants the same way."""
    try:
        letters = w.letters(cap)
    except MaterializeError as exc:
        raise MatchTooLarge(str(exc)) from None
    alpha = set(letters) | set(p.constants)
    if all(len(a) == 1 for a in alpha):
        return "".join(letters), list(p.symbols)
    table = {a: chr(0xE000 + i) for i, a in enumerate(sorted(alpha))}
    text = "".join(table[a] for a in letters)
    syms = [table[s] if isinstance(s, str) else s for s in p.symbols]
    return text, syms


# ---------------------------------------------------------------- general search


def _search(tokens: Sequence[Hashable], is_var: Sequence[bool], target: Sequence) -> dict | None:
    """First binding var -> (start, length) with tokens matching target, or None.

    Constants are compared to target items with ==; variables take any slice.
    """
    P, n = len(tokens), len(target)
    occ = Counter(t for t, v in zip(tokens, is_var) if v)

    const_suffix = [0] * (P + 1)
    for i in range(P - 1, -1, -1):
        const_suffix[i] = const_suffix[i + 1] + (0 if is_var[i] else 1)

    first: dict = {}
    for i, (t, v) in enumerate(zip(tokens, is_var)):
        if v and t not in first:
            first[t] = i
    new_after = [False] * (P + 1)
    for i in range(P - 1, -1, -1):
        new_after[i] = new_after[i + 1] or (is_var[i] and first[tokens[i]] == i)

    # variables bound before i and still used at or after i
    carried: list[tuple] = []
    for i in range(P + 1):
        later = {tokens[k] for k in range(i, P) if is_var[k]}
        carried.append(tuple(sorted((v for v in later if first[v] < i), key=lambda v: first[v])))

    # per-letter constant demand of each suffix, against letters available in target suffixes
    letters = sorted({t for t, v in zip(tokens, is_var) if not v}, key=repr)
    demand = [[0] * len(letters) for _ in range(P + 1)]
    for i in range(P - 1, -1, -1):
        demand[i] = demand[i + 1][:]
        if not is_var[i]:
            demand[i][letters.index(tokens[i])] += 1
    supply = []
    for a in letters:
        col = [0] * (n + 1)
        for j in range(n - 1, -1, -1):
            col[j] = col[j + 1] + (1 if target[j] == a else 0)
        supply.append(col)

    bind: dict = {}
    failed: set = set()

    def rec(i: int, j: int, need: int) -> bool:
        if i == P:
            return j == n
        rem = n - j
        if need > rem or (not new_after[i] and need != rem):
            return False
        d = demand[i]
        for li in range(len(letters)):
            if d[li] > supply[li][j]:
                return False
        key = None
        if new_after[i]:
            key = (i, j, tuple(target[bind[v][0] : bind[v][0] + bind[v][1]] for v in carried[i]))
            if key in failed:
                return False
        tok = tokens[i]
        ok = False
        if not is_var[i]:
            ok = j < n and target[j] == tok and rec(i + 1, j + 1, need - 1)
        elif tok in bind:
            s, L = bind[tok]
            ok = target[j : j + L] == target[s : s + L] and rec(i + 1, j + L, need - L)
        else:
            k = occ[tok]
            for L in range((rem - need) // k + 1):
                bind[tok] = (j, L)
                if rec(i + 1, j + L, need + (k - 1) * L):
                    ok = True
                    break
                del bind[tok]
        if not ok and key is not None:
            failed.add(key)
        return ok

    if rec(0, 0, const_suffix[0]):
        return dict(bind)
    return None


def _general_member(text: str, syms: list) -> bool:
    return _search(syms, [isinstance(s, int) for s in syms], text) is not None


# ---------------------------------------------------------------- fast paths


def _regular_member(text: str, syms: list) -> bool:
    """Regular patterns: place constant blocks greedily leftmost, honouring anchored ends."""
    segs: list[str] = [""]
    for s in syms:
        if isinstance(s, int):
            segs.append("")
        else:
            segs[-1] += s
    if len(segs) == 1:
        return text == segs[0]
    head, tail, mid = segs[0], segs[-1], segs[1:-1]
    n = len(text)
    if len(head) + len(tail) > n or not text.startswith(head) or not text.endswith(tail):
        return False
    pos, end = len(head), n - len(tail)
    for seg in mid:
        if not seg:
            continue
        k = text.find(seg, pos, end)
        if k < 0:
            return False
        pos = k + len(seg)
    return True


def _noncross_explicit(text: str, exps: Sequence[int]) -> bool:
    """Split text into consecutive pieces, the t-th being an exps[t]-th power (possibly empty)."""
    n = len(text)
    reach = {0}
    for e in exps:
        nxt = set(reach)
        for j in reach:
            for L in range(1, (n - j) // e + 1):
                end = j + e * L
                if end in nxt:
                    continue
                if text[j : end - L] == text[j + L : end]:
                    nxt.add(end)
        reach = nxt
    return n in reach


def unary_membership(n: int, p: Pattern) -> bool:
    """Membership of a^n in L(p) for a pattern whose constants are all the letter a."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if len(p.constants) > 1:
        raise ValueError("pattern is not unary")
    c = len(p) - sum(p.frequencies.values())
    if not p.variables:
        return n == c
    return coin_representable(n - c, p.frequencies.values())


# ---------------------------------------------------------------- staircase words


@dataclass(frozen=True)
class StaircaseForm:
    """The word (0 1)^c1 (0^2 1)^c2 ... (0^l 1)^cl; widths are 1..l."""

    counts: tuple[int, ...]

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(range(1, len(self.counts) + 1))

    def to_word(self, zero: str = "0", one: str = "1") -> Word:
        return Word([((zero,) * j + (one,), c) for j, c in zip(self.widths, self.counts)])


def staircase_word(counts: Sequence[int], zero: str = "0", one: str = "1") -> Word:
    return StaircaseForm(tuple(counts)).to_word(zero, one)


class _NotStaircase(Exception):
    pass


def staircase_decompose(w: Word, zero: str = "0", one: str = "1") -> StaircaseForm | None:
    """Read w as (0^j 1)^(c_j) runs with widths exactly 1, 2, ..., l; None otherwise."""
    runs: list[list[int]] = []

    def emit(width: int, count: int):
        if count <= 0:
            return
        if width <= 0:
            raise _NotStaircase
        if runs and runs[-1][0] == width:
            runs[-1][1] += count
        else:
            if runs and width != runs[-1][0] + 1:
                raise _NotStaircase
            if not runs and width != 1:
                raise _NotStaircase
            runs.append([width, count])

    z = 0
    try:
        for base, e in w.factors:
            if any(a not in (zero, one) for a in base):
                return None
            if base == (zero,):
                z += e
                continue
            if base == (one,):
                emit(z, 1)
                emit(0, e - 1)
                z = 0
                continue
            widths, cur = [], 0
            for a in base:
                if a == zero:
                    cur += 1
                else:
                    widths.append(cur)
                    cur = 0
            trail = cur
            if not widths:
                z += len(base) * e
                continue
            emit(z + widths[0], 1)
            for wd in widths[1:]:
                emit(wd, 1)
            if e > 1:
                cyc = [trail + widths[0]] + widths[1:]
                if len(cyc) == 1:
                    emit(cyc[0], e - 1)
                elif e - 1 == 1:
                    for wd in cyc:
                        emit(wd, 1)
                else:
                    raise _NotStaircase
            z = trail
    except _NotStaircase:
        return None
    if z:
        return None
    return StaircaseForm(tuple(c for _, c in runs))


def noncross_staircase_membership(s: StaircaseForm, p: Pattern | Sequence[int]) -> bool:
    """Decide a staircase word against x1^n1 ... xk^nk.

    Every block count must be a nonnegative combination of the exponents of a
    nonempty window of consecutive variables, windows taken left to right.
    """
    exps = tuple(p) if not isinstance(p, Pattern) else noncross_exponents(p)
    if exps is None:
        raise ValueError("pattern is not non-cross")
    if any(e < 1 for e in exps):
        raise ValueError("exponents must be positive")
    if 1 in exps:
        return True
    counts, k = s.counts, len(exps)
    # can[j] = set of variable indices t such that blocks j.. are coverable by variables t..
    can_next = set(range(k + 1))
    for j in range(len(counts) - 1, -1, -1):
        cur = set()
        for t in range(k):
            for t2 in range(t + 1, k + 1):
                if t2 in can_next and coin_representable(counts[j], exps[t:t2]):
                    cur.add(t)
                    break
        can_next = cur
    return 0 in can_next


# ---------------------------------------------------------------- membership


def membership(w: Word, p: Pattern, alphabet=None, cap: int = DEFAULT_MATERIALIZE_CAP) -> bool:
    """True iff some substitution (empty images allowed) maps p onto w."""
    consts = p.constants
    skel_len = len(p) - sum(p.frequencies.values())
    if w.length < skel_len:
        return False
    if len(consts | w.letter_set()) <= 1:
        return unary_membership(w.length, p)
    if not (consts <= w.letter_set()):
        return False
    exps = noncross_exponents(p)
    if exps is not None:
        if 1 in exps:
            return True
        if w.length > STAIRCASE_PREFERRED_LENGTH or w.length > cap:
            s = staircase_decompose(w)
            if s is not None:
                return noncross_staircase_membership(s, exps)
        text, _ = _encode(w, p, cap)
        return _noncross_explicit(text, exps)
    text, syms = _encode(w, p, cap)
    if p.max_frequency <= 1:
        return _regular_member(text, syms)
    return _general_member(text, syms)


def general_membership(w: Word, p: Pattern, cap: int = DEFAULT_MATERIALIZE_CAP) -> bool:
    """The backtracking decider alone, with no special-case dispatch."""
    text, syms = _encode(w, p, cap)
    return _general_member(text, syms)


# ---------------------------------------------------------------- witnesses


@dataclass(frozen=True)
class Witness:
    """A substitution together with the word interval each pattern position produces.

    Intervals are 1-based and closed; an empty image at position i is (s, s - 1).
    """

    pattern: Pattern
    word: Word
    assignment: Mapping[int, Word]
    intervals: tuple[tuple[int, int], ...]

    @property
    def cut_points(self) -> tuple[int, ...]:
        n = self.word.length
        return tuple(e for s, e in self.intervals if s <= e < n)

    def check(self) -> bool:
        if self.pattern.substitute(self.assignment) != self.word:
            return False
        pos = 1
        for (s, e), sym in zip(self.intervals, self.pattern.symbols):
            if s != pos:
                return False
            size = e - s + 1
            expected = 1 if isinstance(sym, str) else self.assignment.get(sym, Word()).length
            if size != expected:
                return False
            pos = e + 1
        return pos == self.word.length + 1


def witness_from_assignment(p: Pattern, w: Word, assignment: Mapping[int, Word]) -> Witness:
    if p.substitute(assignment) != w:
        raise ValueError("assignment does not produce the word")
    intervals, pos = [], 1
    for s in p.symbols:
        size = 1 if isinstance(s, str) else assignment.get(s, Word()).length
        intervals.append((pos, pos + size - 1))
        pos += size
    full = {v: assignment.get(v, Word()) for v in p.variables}
    return Witness(p, w, full, tuple(intervals))


def match_witness(w: Word, p: Pattern, cap: int = DEFAULT_MATERIALIZE_CAP) -> Witness | None:
    """First witness in the fixed search order, or None when w is not in L(p)."""
    if w.length < len(p) - sum(p.frequencies.values()):
        return None
    letters = w.letters(cap) if w.length <= cap else None
    if letters is None:
        raise MatchTooLarge("word too long for witness search")
    text, syms = _encode(w, p, cap)
    found = _search(syms, [isinstance(s, int) for s in syms], text)
    if found is None:
        return None
    assignment = {v: Word.of(letters[s : s + L]) for v, (s, L) in found.items()}
    return witness_from_assignment(p, w, assignment)


# ---------------------------------------------------------------- pattern morphisms


def pattern_morphism(source: Pattern, target: Pattern) -> dict[int, tuple[Symbol, ...]] | None:
    """A constant-preserving morphism g with g(source) = target, or None.

    Its existence shows L(target) is a subset of L(source).
    """
    if not (source.constants <= target.constants):
        return None
    syms = list(source.symbols)
    found = _search(syms, [isinstance(s, int) for s in syms], target.symbols)
    if found is None:
        return None
    return {v: tuple(target.symbols[s : s + L]) for v, (s, L) in found.items()}


# ---------------------------------------------------------------- shuffle


def shuffle_member(w: Word, u: Word, v: Word, cap: int = 10**4) -> bool:
    """True iff w is an interleaving of u and v."""
    if max(w.length, u.length, v.length) > cap:
        raise MatchTooLarge("shuffle inputs exceed cap")
    if w.length != u.length + v.length:
        return False
    ws, us, vs = w.letters(), u.letters(), v.letters()
    row = [True] * (len(vs) + 1)
    for j in range(1, len(vs) + 1):
        row[j] = row[j - 1] and vs[j - 1] == ws[j - 1]
    for i in range(1, len(us) + 1):
        new = [row[0] and us[i - 1] == ws[i - 1]] + [False] * len(vs)
        for j in range(1, len(vs) + 1):
            c = ws[i + j - 1]
            new[j] = (row[j] and us[i - 1] == c) or (new[j - 1] and vs[j - 1] == c)
        row = new
    return row[-1]
