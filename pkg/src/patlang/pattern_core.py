"""Patterns, words, alphabets and labelled samples.

A pattern is a nonempty sequence of symbols.  Variables are positive ints and
constants are letter strings.  Words are kept as a sequence of power factors
``(base, exponent)`` so that words such as ``(01)^(9!)`` stay small in memory;
equality and hashing are defined on the spelled-out letter sequence.
"""
from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Union

Symbol = Union[int, str]

DEFAULT_MATERIALIZE_CAP = 10**6
EXPLICIT_RENDER_LIMIT = 64

_FORBIDDEN_LETTER_CHARS = set("x()^{}+-#,:") | set(" \t\r\n")


class ParseError(ValueError):
    pass


class MaterializeError(ValueError):
    """A word is too long to spell out under the configured cap."""


# ---------------------------------------------------------------- alphabets


@dataclass(frozen=True)
class Alphabet:
    """Ordered letters, optionally extended by an endless supply of fresh letters.

    Fresh letters are named ``a0, a1, ...``; names that clash with a seed are skipped.
    """

    seeds: tuple[str, ...]
    unbounded: bool = False

    def __post_init__(self):
        if len(set(self.seeds)) != len(self.seeds):
            raise ValueError(f"duplicate letters in alphabet {self.seeds!r}")
        for a in self.seeds:
            if not a or any(ch in _FORBIDDEN_LETTER_CHARS for ch in a):
                raise ValueError(f"illegal alphabet letter {a!r}")
            if self.unbounded and a.startswith("a"):
                raise ValueError("seed letters of an unbounded alphabet may not start with 'a'")
        if not self.unbounded and not self.seeds:
            raise ValueError("a finite alphabet needs at least one letter")

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        """``"01"`` is the finite alphabet {0,1}; ``"inf:01"`` is unbounded with seeds 0, 1."""
        text = text.strip()
        if text.startswith("inf:") or text == "inf":
            return cls(tuple(text[4:]), unbounded=True)
        return cls(tuple(text))

    @classmethod
    def of(cls, letters: Iterable[str]) -> "Alphabet":
        return cls(tuple(letters))

    @property
    def size(self) -> float:
        return float("inf") if self.unbounded else len(self.seeds)

    @property
    def is_unary(self) -> bool:
        return not self.unbounded and len(self.seeds) == 1

    def fresh_letters(self) -> Iterator[str]:
        for i in itertools.count():
            name = f"a{i}"
            if name not in self.seeds:
                yield name

    def letter(self, i: int) -> str:
        """The i-th letter (0-based), running into fresh letters past the seeds."""
        if i < len(self.seeds):
            return self.seeds[i]
        if not self.unbounded:
            raise IndexError(f"alphabet has only {len(self.seeds)} letters")
        return next(itertools.islice(self.fresh_letters(), i - len(self.seeds), None))

    def first_letters(self, count: int) -> tuple[str, ...]:
        if not self.unbounded:
            return self.seeds[:count]
        return tuple(self.letter(i) for i in range(count))

    def __contains__(self, letter: object) -> bool:
        if letter in self.seeds:
            return True
        return self.unbounded and isinstance(letter, str) and re.fullmatch(r"a\d+", letter) is not None

    def index(self, letter: str) -> int:
        if letter in self.seeds:
            return self.seeds.index(letter)
        if self.unbounded and re.fullmatch(r"a\d+", letter):
            for i, name in enumerate(self.fresh_letters()):
                if name == letter:
                    return len(self.seeds) + i
        raise ValueError(f"letter {letter!r} not in alphabet")

    def render(self) -> str:
        return ("inf:" if self.unbounded else "") + "".join(self.seeds)


# ---------------------------------------------------------------- words


def _primitive_root(base: tuple[str, ...]) -> tuple[tuple[str, ...], int]:
    n = len(base)
    for d in range(1, n):
        if n % d == 0 and base[:d] * (n // d) == base:
            return base[:d], n // d
    return base, 1


class Word:
    """An immutable word over letter strings, stored as power factors."""

    __slots__ = ("factors", "length", "_hash")

    def __init__(self, factors: Iterable[tuple[Sequence[str], int]] = ()):
        out: list[tuple[tuple[str, ...], int]] = []
        for base, exp in factors:
            base = tuple(base)
            if exp < 0:
                raise ValueError("negative exponent")
            if exp == 0 or not base:
                continue
            root, k = _primitive_root(base)
            exp *= k
            if len(root) > 1 and exp == 1:
                pieces = [((a,), 1) for a in root]
            else:
                pieces = [(root, exp)]
            for piece in pieces:
                if out and out[-1][0] == piece[0]:
                    out[-1] = (piece[0], out[-1][1] + piece[1])
                else:
                    out.append(piece)
        self.factors: tuple[tuple[tuple[str, ...], int], ...] = tuple(out)
        self.length: int = sum(len(b) * e for b, e in self.factors)
        self._hash = None

    # construction helpers
    @classmethod
    def of(cls, letters: Iterable[str]) -> "Word":
        return cls(((a,), 1) for a in letters)

    @classmethod
    def power(cls, base: Union["Word", Sequence[str], str], exp: int) -> "Word":
        if isinstance(base, Word):
            letters = base.letters()
        else:
            letters = tuple(base)
        return cls([(letters, exp)])

    @classmethod
    def empty(cls) -> "Word":
        return cls()

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.factors + other.factors)

    def __mul__(self, k: int) -> "Word":
        if len(self.factors) == 1:
            base, e = self.factors[0]
            return Word([(base, e * k)])
        return Word(self.factors * k) if k * len(self.factors) <= 4096 else Word.power(self, k)

    def __len__(self) -> int:
        return self.length

    def __bool__(self) -> bool:
        return self.length > 0

    # inspection
    def runs(self) -> Iterator[tuple[str, int]]:
        """Maximal letter runs ``(letter, count)`` of the spelled-out word."""
        cur, cnt = None, 0
        for base, exp in self.factors:
            if len(base) == 1:
                if base[0] == cur:
                    cnt += exp
                else:
                    if cur is not None:
                        yield cur, cnt
                    cur, cnt = base[0], exp
                continue
            inner = list(_runs_of(base))
            for _ in range(exp):
                for a, c in inner:
                    if a == cur:
                        cnt += c
                    else:
                        if cur is not None:
                            yield cur, cnt
                        cur, cnt = a, c
        if cur is not None:
            yield cur, cnt

    def letters(self, cap: int = DEFAULT_MATERIALIZE_CAP) -> tuple[str, ...]:
        if self.length > cap:
            raise MaterializeError(f"word of length {self.length} exceeds materialize cap {cap}")
        out: list[str] = []
        for base, exp in self.factors:
            out.extend(base * exp)
        return tuple(out)

    def text(self, cap: int = DEFAULT_MATERIALIZE_CAP) -> str:
        return "".join(self.letters(cap))

    def letter_set(self) -> frozenset[str]:
        return frozenset(a for base, _ in self.factors for a in base)

    def is_explicit(self, cap: int = DEFAULT_MATERIALIZE_CAP) -> bool:
        return self.length <= cap

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        if self.length != other.length:
            return False
        if self.factors == other.factors:
            return True
        return all(a == b for a, b in zip(self.runs(), other.runs()))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.length, tuple(itertools.islice(self.runs(), 16))))
        return self._hash

    def __repr__(self) -> str:
        return f"Word({render_word(self)!r})"

    def sort_key(self) -> tuple:
        """Shortest first, then lexicographic; only meaningful for explicit words."""
        return (self.length, self.letters())


def _runs_of(letters: Sequence[str]) -> Iterator[tuple[str, int]]:
    for a, grp in itertools.groupby(letters):
        yield a, sum(1 for _ in grp)


EPS = Word()


def _needs_space(letter: str) -> bool:
    return len(letter) > 1


def _join_letters(letters: Sequence[str]) -> str:
    out = []
    for i, a in enumerate(letters):
        if _needs_space(a) or (i and _needs_space(letters[i - 1])):
            if out:
                out.append(" ")
        out.append(a)
    return "".join(out)


def _exponent(n: int) -> str:
    return str(n) if n < 10 else "{" + str(n) + "}"


def render_word(w: Word) -> str:
    """Canonical text: explicit letters for short words, power notation for long ones."""
    if w.length == 0:
        return "eps"
    if w.length <= EXPLICIT_RENDER_LIMIT:
        return _join_letters(w.letters())
    parts = []
    for base, exp in w.factors:
        body = _join_letters(base)
        if exp == 1:
            parts.append(body)
        elif len(base) == 1:
            parts.append(f"{body}^{_exponent(exp)}")
        else:
            parts.append(f"({body})^{_exponent(exp)}")
    return " ".join(p for p in parts) if any(" " in p for p in parts) else "".join(parts)


class _WordParser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.s = text
        self.i = 0
        self.alphabet = alphabet

    def error(self, msg: str) -> ParseError:
        return ParseError(f"{msg} at offset {self.i} in {self.s!r}")

    def skip_ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def number(self) -> int:
        """``{digits}`` of any length; a bare exponent is one digit when digits are letters."""
        m = re.compile(r"\{(\d+)\}").match(self.s, self.i)
        if m:
            self.i = m.end()
            return int(m.group(1))
        bare = r"\d" if any(a.isdigit() for a in self.alphabet.seeds) else r"\d+"
        m = re.compile(bare).match(self.s, self.i)
        if not m:
            raise self.error("expected exponent")
        self.i = m.end()
        return int(m.group())

    def letter(self) -> str:
        s, i = self.s, self.i
        if self.alphabet.unbounded:
            m = re.compile(r"a\d+").match(s, i)
            if m:
                self.i = m.end()
                return m.group()
        # longest seed match first so multi-character seeds are honoured
        for a in sorted(self.alphabet.seeds, key=len, reverse=True):
            if s.startswith(a, i):
                self.i += len(a)
                return a
        raise self.error(f"unknown letter {s[i]!r}")

    def factors(self, closing: bool) -> list[tuple[tuple[str, ...], int]]:
        out: list[tuple[tuple[str, ...], int]] = []
        while True:
            self.skip_ws()
            if self.i >= len(self.s):
                if closing:
                    raise self.error("unbalanced parentheses")
                return out
            ch = self.s[self.i]
            if ch == ")":
                if not closing:
                    raise self.error("unbalanced parentheses")
                self.i += 1
                return out
            if ch == "(":
                self.i += 1
                inner = Word(self.factors(closing=True))
                self.skip_ws()
                if not self.s.startswith("^", self.i):
                    raise self.error("parenthesised group needs an exponent")
                self.i += 1
                exp = self.number()
                if exp == 0:
                    raise self.error("zero exponent")
                if len(inner.factors) == 1:
                    base, e = inner.factors[0]
                    out.append((base, e * exp))
                else:
                    out.append((inner.letters(), exp))
                continue
            if self.s.startswith("eps", self.i) and not self.alphabet.__contains__("e"):
                self.i += 3
                continue
            a = self.letter()
            if self.s.startswith("^", self.i):
                self.i += 1
                exp = self.number()
                if exp == 0:
                    raise self.error("zero exponent")
                out.append(((a,), exp))
            else:
                out.append(((a,), 1))


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse ``term*`` with ``term := letter | letter^n | (word)^n``; ``eps`` is the empty word.

    ``n`` is ``{digits}``, or a bare digit run.  When the alphabet has digit
    letters a bare exponent is a single digit, so ``0^61`` reads as 0^6 1.
    """
    return Word(_WordParser(text, alphabet).factors(closing=False))


# ---------------------------------------------------------------- patterns


@dataclass(frozen=True)
class Pattern:
    symbols: tuple[Symbol, ...]

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("a pattern must be nonempty")
        for s in self.symbols:
            if isinstance(s, bool) or not isinstance(s, (int, str)):
                raise TypeError(f"bad pattern symbol {s!r}")
            if isinstance(s, int) and s < 1:
                raise ValueError("variable indices are positive")

    @classmethod
    def of(cls, *symbols: Symbol) -> "Pattern":
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    @cached_property
    def variables(self) -> tuple[int, ...]:
        """Variables in order of first occurrence."""
        return tuple(dict.fromkeys(s for s in self.symbols if isinstance(s, int)))

    @cached_property
    def frequencies(self) -> Mapping[int, int]:
        return Counter(s for s in self.symbols if isinstance(s, int))

    @property
    def max_frequency(self) -> int:
        return max(self.frequencies.values(), default=0)

    @cached_property
    def skeleton(self) -> Word:
        """The word obtained by erasing every variable."""
        return Word.of(s for s in self.symbols if isinstance(s, str))

    @property
    def constants(self) -> frozenset[str]:
        return frozenset(s for s in self.symbols if isinstance(s, str))

    @property
    def is_constant(self) -> bool:
        return not self.variables

    @property
    def is_constant_free(self) -> bool:
        return not self.constants

    def substitute(self, assignment: Mapping[int, Word]) -> Word:
        parts = []
        for s in self.symbols:
            if isinstance(s, int):
                parts.extend(assignment.get(s, EPS).factors)
            else:
                parts.append(((s,), 1))
        return Word(parts)

    def __str__(self) -> str:
        return render_pattern(self)

    def __repr__(self) -> str:
        return f"Pattern({render_pattern(self)!r})"


def render_pattern(p: Pattern) -> str:
    tokens: list[str] = []
    for key, grp in itertools.groupby(p.symbols, key=lambda s: ("v", s) if isinstance(s, int) else ("c", None)):
        grp = list(grp)
        if key[0] == "v":
            tokens.append(f"x{key[1]}" if len(grp) == 1 else f"x{key[1]}^{len(grp)}")
        else:
            tokens.append(_join_letters(grp))
    return " ".join(tokens)


_VAR_TOKEN = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_pattern(text: str, alphabet: Alphabet) -> Pattern:
    """Whitespace-separated tokens: ``x<i>`` or ``x<i>^<n>`` for variables, anything else is constants.

    ``x10`` is variable number 10; write ``x1 0`` for x1 followed by the letter 0.
    """
    symbols: list[Symbol] = []
    for tok in text.split():
        if tok.startswith("x"):
            m = _VAR_TOKEN.fullmatch(tok)
            if not m:
                raise ParseError(f"malformed variable token {tok!r}")
            idx = int(m.group(1))
            if idx < 1:
                raise ParseError(f"variable index must be positive in {tok!r}")
            rep = int(m.group(2)) if m.group(2) else 1
            if rep == 0:
                raise ParseError(f"zero repetition in {tok!r}")
            symbols.extend([idx] * rep)
            continue
        w = parse_word(tok, alphabet)
        if w.length == 0:
            raise ParseError(f"constant token {tok!r} is empty")
        symbols.extend(w.letters())
    if not symbols:
        raise ParseError("empty pattern")
    return Pattern(tuple(symbols))


def check_pattern_alphabet(p: Pattern, alphabet: Alphabet) -> None:
    for a in p.constants:
        if a not in alphabet:
            raise ValueError(f"constant {a!r} is not in the alphabet")


def normalize(p: Pattern) -> Pattern:
    """Rename variables to x1, x2, ... in order of first occurrence."""
    ren = {v: i + 1 for i, v in enumerate(p.variables)}
    return Pattern(tuple(ren[s] if isinstance(s, int) else s for s in p.symbols))


def merge_free_variables(p: Pattern) -> Pattern:
    """Collapse runs of adjacent variables that each occur once; the language is unchanged."""
    freq = p.frequencies
    out: list[Symbol] = []
    for s in p.symbols:
        if isinstance(s, int) and freq[s] == 1 and out and isinstance(out[-1], int) and freq[out[-1]] == 1:
            continue
        out.append(s)
    return normalize(Pattern(tuple(out)))


# ---------------------------------------------------------------- classification


@dataclass(frozen=True)
class ClassInfo:
    tags: frozenset[str]
    max_frequency: int
    noncross_exponents: tuple[int, ...] | None = None

    def __contains__(self, tag: str) -> bool:
        return tag in self.tags


def noncross_exponents(p: Pattern) -> tuple[int, ...] | None:
    """Block exponents (n1, ..., nk) if p is x1^n1 ... xk^nk with distinct variables, else None."""
    if not p.is_constant_free:
        return None
    exps: list[int] = []
    seen: set[int] = set()
    for v, grp in itertools.groupby(p.symbols):
        if v in seen:
            return None
        seen.add(v)
        exps.append(sum(1 for _ in grp))
    return tuple(exps)


def _sbr_blocks(p: Pattern) -> list[list[int]] | None:
    """Variable blocks X1..Xn if p has the shape X1 a1 X2 ... a_{n-1} Xn, else None."""
    syms = p.symbols
    if isinstance(syms[0], str) or isinstance(syms[-1], str):
        return None
    blocks: list[list[int]] = [[]]
    for s in syms:
        if isinstance(s, str):
            if not blocks[-1]:
                return None
            blocks.append([])
        else:
            blocks[-1].append(s)
    return blocks


def is_simple_block_regular(p: Pattern) -> bool:
    blocks = _sbr_blocks(p)
    if blocks is None or p.max_frequency > 1:
        return False
    return True


def sbr_canonicalize(p: Pattern) -> Pattern | None:
    """Equivalent form x1 a1 x2 ... ak x(k+1) for a simple block-regular p, else None."""
    if not is_simple_block_regular(p):
        return None
    return sbr_from_skeleton(p.skeleton.letters())


def sbr_from_skeleton(skeleton: Sequence[str]) -> Pattern:
    syms: list[Symbol] = [1]
    for i, a in enumerate(skeleton):
        syms.extend([a, i + 2])
    return Pattern(tuple(syms))


def classify(p: Pattern) -> ClassInfo:
    tags = set()
    freq = p.frequencies
    m = p.max_frequency
    if m <= 1:
        tags.add("regular")
    if p.is_constant_free:
        tags.add("constant-free")
    if len(set(freq.values())) <= 1:
        tags.add("quasi-regular")
    exps = noncross_exponents(p)
    if exps is not None:
        tags.add("non-cross")
    if is_simple_block_regular(p):
        tags.add("simple-block-regular")
    if p.is_constant:
        tags.add("constant")
    return ClassInfo(frozenset(tags), m, exps)


# ---------------------------------------------------------------- word relations


def subsequence(u: Word, w: Word) -> bool:
    """True iff u is a scattered subsequence of w; greedy over letter runs."""
    if u.length == 0:
        return True
    if u.length > w.length:
        return False
    wr = w.runs()
    have_letter, have = None, 0
    for a, need in u.runs():
        while need:
            if have_letter == a and have:
                take = min(have, need)
                have -= take
                need -= take
                continue
            nxt = next(wr, None)
            if nxt is None:
                return False
            have_letter, have = nxt
    return True


def complement_letter(a: str, alphabet: Alphabet) -> str:
    if alphabet.unbounded or len(alphabet.seeds) != 2:
        raise ValueError("letter complement needs a binary alphabet")
    x, y = alphabet.seeds
    return y if a == x else x


def binary_regular_normalize(p: Pattern, alphabet: Alphabet) -> Pattern:
    """Delete x' from the first factor x d x' d~ x'' (three variables, d != d~) until none is left."""
    if alphabet.unbounded or len(alphabet.seeds) != 2:
        raise ValueError("binary alphabet required")
    check_pattern_alphabet(p, alphabet)
    if p.max_frequency > 1:
        raise ValueError("pattern is not regular")
    syms = list(p.symbols)
    while True:
        for i in range(len(syms) - 4):
            x, d, x1, e, x2 = syms[i : i + 5]
            if (
                isinstance(x, int)
                and isinstance(x1, int)
                and isinstance(x2, int)
                and isinstance(d, str)
                and isinstance(e, str)
                and d != e
            ):
                del syms[i + 2]
                break
        else:
            return normalize(Pattern(tuple(syms)))


# ---------------------------------------------------------------- samples


@dataclass(frozen=True)
class Example:
    word: Word
    positive: bool

    @property
    def label(self) -> str:
        return "+" if self.positive else "-"


class InconsistentSample(ValueError):
    pass


class Sample:
    """An ordered, duplicate-free set of labelled words."""

    __slots__ = ("examples",)

    def __init__(self, examples: Iterable[Example | tuple[Word, bool]] = ()):
        out: dict[Word, bool] = {}
        for ex in examples:
            word, pos = (ex.word, ex.positive) if isinstance(ex, Example) else ex
            if word in out and out[word] != pos:
                raise InconsistentSample(f"word {render_word(word)!r} carries both labels")
            out.setdefault(word, bool(pos))
        self.examples: tuple[Example, ...] = tuple(Example(w, p) for w, p in out.items())

    def __iter__(self) -> Iterator[Example]:
        return iter(self.examples)

    def __len__(self) -> int:
        return len(self.examples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sample):
            return NotImplemented
        return set(self.examples) == set(other.examples)

    def __hash__(self):
        return hash(frozenset(self.examples))

    @property
    def positives(self) -> tuple[Word, ...]:
        return tuple(e.word for e in self.examples if e.positive)

    @property
    def negatives(self) -> tuple[Word, ...]:
        return tuple(e.word for e in self.examples if not e.positive)

    def as_set(self) -> frozenset[tuple[Word, bool]]:
        return frozenset((e.word, e.positive) for e in self.examples)

    def __repr__(self) -> str:
        return "Sample(" + ", ".join(f"{e.label}{render_word(e.word)}" for e in self.examples) + ")"


def render_sample(s: Sample) -> str:
    return "".join(f"{e.label} {render_word(e.word)}\n" for e in s)


def parse_sample(text: str, alphabet: Alphabet) -> Sample:
    examples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        label, _, rest = line.partition(" ")
        if label not in ("+", "-"):
            raise ParseError(f"line {lineno}: expected '+' or '-' label, got {label!r}")
        examples.append((parse_word(rest.strip() or "eps", alphabet), label == "+"))
    return Sample(examples)


# ---------------------------------------------------------------- classes


FAMILIES = ("all", "regular", "m-regular", "m-quasi-regular", "non-cross", "sbr", "k-var-m-regular")


@dataclass(frozen=True)
class ClassSpec:
    """A pattern class: family plus parameters, alphabet and constant-free flag."""

    family: str
    alphabet: Alphabet
    m: int | None = None
    k: int | None = None
    constant_free: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown class family {self.family!r}")
        if self.family in ("m-regular", "m-quasi-regular", "non-cross", "k-var-m-regular"):
            if self.m is None or self.m < 1:
                raise ValueError(f"{self.family} needs m >= 1")
        if self.family == "k-var-m-regular" and (self.k is None or self.k < 0):
            raise ValueError("k-var-m-regular needs k >= 0")

    @property
    def frequency_cap(self) -> int | None:
        if self.family == "regular":
            return 1
        return self.m

    def contains(self, p: Pattern) -> bool:
        for a in p.constants:
            if a not in self.alphabet:
                return False
        if self.constant_free and not p.is_constant_free:
            return False
        freq = p.frequencies
        f = self.family
        if f == "all":
            return True
        if f == "regular":
            return p.max_frequency <= 1
        if f == "m-regular":
            return p.max_frequency <= self.m
        if f == "m-quasi-regular":
            return all(c == self.m for c in freq.values())
        if f == "non-cross":
            exps = noncross_exponents(p)
            return exps is not None and max(exps) <= self.m
        if f == "sbr":
            return is_simple_block_regular(p)
        if f == "k-var-m-regular":
            return len(freq) <= self.k and p.max_frequency <= self.m
        raise AssertionError(f)

    def describe(self) -> str:
        bits = [self.family]
        if self.m is not None:
            bits.append(f"m={self.m}")
        if self.k is not None:
            bits.append(f"k={self.k}")
        if self.constant_free:
            bits.append("constant-free")
        bits.append(f"alphabet={self.alphabet.render()}")
        return ", ".join(bits)


__all__ = [
    "Alphabet",
    "ClassInfo",
    "ClassSpec",
    "EPS",
    "Example",
    "InconsistentSample",
    "MaterializeError",
    "ParseError",
    "Pattern",
    "Sample",
    "Symbol",
    "Word",
    "binary_regular_normalize",
    "check_pattern_alphabet",
    "classify",
    "complement_letter",
    "is_simple_block_regular",
    "merge_free_variables",
    "noncross_exponents",
    "normalize",
    "parse_pattern",
    "parse_sample",
    "parse_word",
    "render_pattern",
    "render_sample",
    "render_word",
    "sbr_canonicalize",
    "sbr_from_skeleton",
    "subsequence",
]
