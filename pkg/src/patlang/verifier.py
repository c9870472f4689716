"""Bounded verification of teaching sets and exact teaching dimensions on small classes.

Every verdict is relative to explicit bounds: patterns of length at most L and
words of length at most W.  Equivalence between a rival and the target is
decided exactly where a class-specific canonical form exists; otherwise a
pair of morphisms certifies equality and a separating word certifies
inequality.  When neither is found within W the verdict is inconclusive.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .matcher import membership, pattern_morphism
from .numtheory import minimal_generators
from .pattern_core import (
    Alphabet,
    ClassSpec,
    InconsistentSample,
    Pattern,
    Sample,
    Word,
    binary_regular_normalize,
    is_simple_block_regular,
    merge_free_variables,
    noncross_exponents,
    normalize,
    render_word,
    sbr_from_skeleton,
)
from .teachsets import PreferenceOrder

DEFAULT_MAX_PATTERN_LEN = 8
DEFAULT_MAX_WORD_LEN = 8
DEFAULT_NODE_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Bounds:
    max_pattern_len: int = DEFAULT_MAX_PATTERN_LEN
    max_word_len: int = DEFAULT_MAX_WORD_LEN

    def __post_init__(self):
        if self.max_pattern_len < 1 or self.max_word_len < 0:
            raise ValueError("bounds must be positive")


@dataclass
class Verdict:
    status: str
    bounds: Bounds
    counterexample: Pattern | None = None
    separating_word: Word | None = None
    patterns_enumerated: int = 0
    consistent_rivals: int = 0
    membership_calls: int = 0
    unresolved: list[Pattern] = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return self.status == "confirmed"


# ---------------------------------------------------------------- enumeration


def _letters(alphabet: Alphabet) -> tuple[str, ...]:
    return alphabet.seeds


def canonical_key(p: Pattern, spec: ClassSpec) -> tuple:
    """Equal keys imply equal languages within the class."""
    if spec.family == "sbr" and is_simple_block_regular(p):
        return ("sbr", p.skeleton.letters())
    exps = noncross_exponents(p)
    if spec.family == "non-cross" and exps is not None:
        return ("nc", (1,) if 1 in exps else exps)
    if not spec.alphabet.unbounded and len(spec.alphabet.seeds) == 1:
        return ("unary", len(p) - sum(p.frequencies.values()), minimal_generators(p.frequencies.values()))
    q = merge_free_variables(normalize(p))
    if (
        q.max_frequency <= 1
        and not spec.alphabet.unbounded
        and len(spec.alphabet.seeds) == 2
        and q.constants <= set(spec.alphabet.seeds)
    ):
        q = binary_regular_normalize(q, spec.alphabet)
    return ("seq", q.symbols)


def _raw_patterns(spec: ClassSpec, n: int) -> Iterator[Pattern]:
    """All normalized symbol sequences of length n respecting the class's frequency and variable caps."""
    letters = () if spec.constant_free else _letters(spec.alphabet)
    cap = spec.frequency_cap
    max_vars = spec.k if spec.family == "k-var-m-regular" else None
    counts: list[int] = []
    syms: list = []

    def rec(i: int):
        if i == n:
            yield Pattern(tuple(syms))
            return
        k = len(counts)
        for v in range(1, k + 2):
            if v == k + 1:
                if max_vars is not None and k >= max_vars:
                    continue
                if cap == 1 and syms and isinstance(syms[-1], int):
                    continue
                counts.append(1)
            else:
                if cap is not None and counts[v - 1] >= cap:
                    continue
                counts[v - 1] += 1
            syms.append(v)
            yield from rec(i + 1)
            syms.pop()
            if v == k + 1:
                counts.pop()
            else:
                counts[v - 1] -= 1
        for a in letters:
            syms.append(a)
            yield from rec(i + 1)
            syms.pop()

    yield from rec(0)


def enumerate_patterns(spec: ClassSpec, max_len: int) -> Iterator[Pattern]:
    """Class members of length at most max_len, one per canonical key, shortest first.

    For the simple block-regular class max_len bounds the skeleton length.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if spec.family == "sbr":
        letters = _letters(spec.alphabet)
        for n in range(max_len + 1):
            for skel in itertools.product(letters, repeat=n):
                yield sbr_from_skeleton(skel)
        return
    if spec.family == "non-cross":
        seen = set()
        for total in range(1, max_len + 1):
            for exps in _compositions(total, spec.m):
                key = (1,) if 1 in exps else exps
                if key in seen:
                    continue
                seen.add(key)
                yield Pattern(tuple(i + 1 for i, e in enumerate(key) for _ in range(e)))
        return
    seen = set()
    for n in range(1, max_len + 1):
        for p in _raw_patterns(spec, n):
            if not spec.contains(p):
                continue
            key = canonical_key(p, spec)
            if key in seen:
                continue
            seen.add(key)
            yield p


def _compositions(total: int, cap: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(1, min(cap, total) + 1):
        for rest in _compositions(total - first, cap):
            yield (first,) + rest


# ---------------------------------------------------------------- equivalence


def words_upto(letters: Sequence[str], max_len: int) -> Iterator[Word]:
    """All words of length at most max_len, shortest first, then lexicographic."""
    for n in range(max_len + 1):
        for t in itertools.product(letters, repeat=n):
            yield Word.of(t)


class _Counter:
    def __init__(self):
        self.calls = 0

    def member(self, w: Word, p: Pattern) -> bool:
        self.calls += 1
        return membership(w, p)


def _word_letters(p: Pattern, q: Pattern, alphabet: Alphabet) -> tuple[str, ...]:
    letters = list(alphabet.seeds)
    for a in sorted(p.constants | q.constants):
        if a not in letters:
            letters.append(a)
    if alphabet.unbounded:
        avoid = set(letters)
        letters.append(next(a for a in alphabet.fresh_letters() if a not in avoid))
    return tuple(letters)


def equivalence(p: Pattern, q: Pattern, spec: ClassSpec, max_word_len: int, counter: _Counter | None = None):
    """(True|False|None, separating word or None); None means unresolved within the bound."""
    counter = counter or _Counter()
    if canonical_key(p, spec) == canonical_key(q, spec):
        return True, None
    alpha = spec.alphabet
    if not alpha.unbounded and len(alpha.seeds) == 1:
        return False, _first_separating(p, q, _word_letters(p, q, alpha), max(max_word_len, 64), counter)
    if is_simple_block_regular(p) and is_simple_block_regular(q):
        if p.skeleton == q.skeleton:
            return True, None
        # the shorter skeleton is in one language and not the other
        w = min((p.skeleton, q.skeleton), key=lambda s: s.length)
        if membership(w, p) != membership(w, q):
            return False, w
        return False, _first_separating(p, q, _word_letters(p, q, alpha), max_word_len, counter)
    if pattern_morphism(p, q) is not None and pattern_morphism(q, p) is not None:
        return True, None
    w = _first_separating(p, q, _word_letters(p, q, alpha), max_word_len, counter)
    if w is not None:
        return False, w
    return None, None


def _first_separating(p: Pattern, q: Pattern, letters, max_len: int, counter: _Counter) -> Word | None:
    lo = min(len(p) - sum(p.frequencies.values()), len(q) - sum(q.frequencies.values()))
    for n in range(lo, max_len + 1):
        for t in itertools.product(letters, repeat=n):
            w = Word.of(t)
            if counter.member(w, p) != counter.member(w, q):
                return w
    return None


def equivalent_bounded(p: Pattern, q: Pattern, max_word_len: int, alphabet: Alphabet) -> bool:
    """True iff p and q agree on every word of length at most max_word_len (exact shortcuts first)."""
    if normalize(p) == normalize(q):
        return True
    if merge_free_variables(p) == merge_free_variables(q):
        return True
    if is_simple_block_regular(p) and is_simple_block_regular(q):
        if p.skeleton == q.skeleton:
            return True
    ep, eq = noncross_exponents(p), noncross_exponents(q)
    if ep is not None and eq is not None:
        if (1 in ep and 1 in eq) or ep == eq:
            return True
    letters = _word_letters(p, q, alphabet)
    return _first_separating(p, q, letters, max_word_len, _Counter()) is None


# ---------------------------------------------------------------- teaching-set verification


def _consistent(p: Pattern, ordered: Sequence[tuple[Word, bool]], counter: _Counter) -> bool:
    return all(counter.member(w, p) == lab for w, lab in ordered)


def _ordered(sample: Sample) -> list[tuple[Word, bool]]:
    return sorted(((e.word, e.positive) for e in sample), key=lambda e: e[0].length)


def is_teaching_set(
    target: Pattern,
    sample: Sample,
    spec: ClassSpec,
    bounds: Bounds = Bounds(),
    pref: PreferenceOrder | None = None,
) -> Verdict:
    """Check that every consistent class member within bounds is equivalent to the target.

    With ``pref`` given, rivals the order ranks below the target are also accepted.
    """
    counter = _Counter()
    ordered = _ordered(sample)
    for w, lab in ordered:
        if counter.member(w, target) != lab:
            raise InconsistentSample(f"sample labels {render_word(w)} {'+' if lab else '-'} but the target disagrees")
    verdict = Verdict("confirmed", bounds)
    tkey = canonical_key(target, spec)
    for rival in enumerate_patterns(spec, bounds.max_pattern_len):
        verdict.patterns_enumerated += 1
        if canonical_key(rival, spec) == tkey:
            continue
        if not _consistent(rival, ordered, counter):
            continue
        verdict.consistent_rivals += 1
        if pref is not None and pref.less(rival, target):
            continue
        eq, sep = equivalence(target, rival, spec, bounds.max_word_len, counter)
        if eq is True:
            continue
        if eq is False:
            verdict.status = "refuted"
            verdict.counterexample = rival
            verdict.separating_word = sep
            break
        verdict.unresolved.append(rival)
    if verdict.status == "confirmed" and verdict.unresolved:
        verdict.status = "inconclusive"
    verdict.membership_calls = counter.calls
    return verdict


def is_pbt_set(
    target: Pattern, sample: Sample, spec: ClassSpec, pref: PreferenceOrder, bounds: Bounds = Bounds()
) -> Verdict:
    return is_teaching_set(target, sample, spec, bounds, pref)


# ---------------------------------------------------------------- exact teaching dimension


@dataclass
class TDResult:
    size: int
    sample: Sample
    bounds: Bounds
    rivals: int
    unseparable: list[Pattern]
    nodes: int


def _pool_letters(alphabet: Alphabet) -> tuple[str, ...]:
    if alphabet.unbounded:
        return alphabet.seeds + tuple(itertools.islice(alphabet.fresh_letters(), 2))
    return alphabet.seeds


def brute_force_td(
    target: Pattern,
    spec: ClassSpec,
    max_word_len: int = DEFAULT_MAX_WORD_LEN,
    max_pattern_len: int = DEFAULT_MAX_PATTERN_LEN,
    pref: PreferenceOrder | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> TDResult:
    """Smallest sample over the word pool that rules out every separable rival.

    Rivals the pool cannot separate from the target are skipped and reported.
    Among minimum samples the lexicographically least one (by pool index,
    shortest-then-lexicographic word order) is returned.
    """
    bounds = Bounds(max_pattern_len, max_word_len)
    pool = list(words_upto(_pool_letters(spec.alphabet), max_word_len))
    labels = [membership(w, target) for w in pool]
    tkey = canonical_key(target, spec)
    masks: list[int] = []
    unseparable: list[Pattern] = []
    rivals = 0
    for rival in enumerate_patterns(spec, max_pattern_len):
        if canonical_key(rival, spec) == tkey:
            continue
        if pref is not None and pref.less(rival, target):
            continue
        rivals += 1
        mask = 0
        for i, w in enumerate(pool):
            if membership(w, rival) != labels[i]:
                mask |= 1 << i
        if mask:
            masks.append(mask)
        else:
            unseparable.append(rival)

    # a constraint containing another is redundant
    masks = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    kept: list[int] = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)

    nodes = 0

    def covers(k: int) -> list[tuple[int, ...]]:
        found: list[tuple[int, ...]] = []

        def rec(chosen: tuple[int, ...], hit: int, left: int):
            nonlocal nodes
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded(f"search exceeded {node_budget} nodes")
            open_ = next((m for m in kept if not m & hit), None)
            if open_ is None:
                found.append(tuple(sorted(chosen)))
                return
            if left == 0:
                return
            bits = open_
            while bits:
                low = bits & -bits
                i = low.bit_length() - 1
                bits ^= low
                rec(chosen + (i,), hit | low, left - 1)

        rec((), 0, k)
        return found

    for k in range(len(kept) + 1):
        found = covers(k)
        if found:
            best = min(found)
            sample = Sample((pool[i], labels[i]) for i in best)
            return TDResult(k, sample, bounds, rivals, unseparable, nodes)
    raise AssertionError("unreachable: the full pool always covers")


__all__ = [
    "Bounds",
    "BudgetExceeded",
    "TDResult",
    "Verdict",
    "brute_force_td",
    "canonical_key",
    "enumerate_patterns",
    "equivalence",
    "equivalent_bounded",
    "is_pbt_set",
    "is_teaching_set",
    "words_upto",
]
