"""Teaching-set and witness-word constructors.

Every "pick some letter" choice resolves to the smallest eligible letter in
alphabet order, so all outputs are deterministic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .matcher import (
    match_witness,
    membership,
    noncross_staircase_membership,
    pattern_morphism,
    staircase_word,
    StaircaseForm,
)
from .numtheory import PrimePowerFactor, coin_representable, e_value, factorial, prime_power_factors
from .pattern_core import (
    EPS,
    Alphabet,
    Pattern,
    Sample,
    Word,
    noncross_exponents,
    normalize,
    sbr_canonicalize,
)


# ---------------------------------------------------------------- preference orders


@dataclass(frozen=True)
class PreferenceOrder:
    """A strict partial order; ``less(a, b)`` means b is preferred to a."""

    name: str
    less: Callable[[Pattern, Pattern], bool] = field(compare=False)

    def __call__(self, a: Pattern, b: Pattern) -> bool:
        return self.less(a, b)


def _skel_len(p: Pattern) -> int:
    return len(p) - sum(p.frequencies.values())


def _strictly_smaller_language(a: Pattern, b: Pattern) -> bool:
    """L(b) is a proper subset of L(a), certified by morphisms in one direction only."""
    return pattern_morphism(a, b) is not None and pattern_morphism(b, a) is None


pref_sr = PreferenceOrder("sr", lambda a, b: _skel_len(a) < _skel_len(b))


def _qr_unary_less(a: Pattern, b: Pattern) -> bool:
    if b.is_constant and not a.is_constant:
        return True
    if not a.is_constant and not b.is_constant:
        return _skel_len(a) < _skel_len(b)
    return False


pref_qr_unary = PreferenceOrder("qr-unary", _qr_unary_less)

pref_shorter_pattern = PreferenceOrder("shorter", lambda a, b: len(b) < len(a))


def _noncross_key(p: Pattern) -> tuple[bool, int]:
    exps = noncross_exponents(p)
    if exps is None:
        raise ValueError(f"{p} is not non-cross")
    return 1 in exps, len(exps)


def _noncross_less(a: Pattern, b: Pattern) -> bool:
    full_a, vars_a = _noncross_key(a)
    full_b, vars_b = _noncross_key(b)
    if full_a != full_b:
        return full_a
    if full_a:
        return False
    if vars_a >= 2 and vars_b >= 2 and vars_a != vars_b:
        return vars_b < vars_a
    return _strictly_smaller_language(a, b)


pref_noncross = PreferenceOrder("noncross", _noncross_less)


def _infinite_less(a: Pattern, b: Pattern) -> bool:
    la, lb = _skel_len(a), _skel_len(b)
    if la != lb:
        return la < lb
    return _strictly_smaller_language(a, b)


pref_infinite = PreferenceOrder("infinite", _infinite_less)

PREFERENCES = {p.name: p for p in (pref_sr, pref_qr_unary, pref_shorter_pattern, pref_noncross, pref_infinite)}


# ---------------------------------------------------------------- helpers


def _word(letters: Sequence[str]) -> Word:
    return Word.of(letters)


def _sample(*pairs: tuple[Word, bool]) -> Sample:
    return Sample(pairs)


def _require_sbr(p: Pattern) -> Pattern:
    q = sbr_canonicalize(p)
    if q is None:
        raise ValueError(f"{p} is not simple block-regular")
    return q


def _require_canonical_sbr(p: Pattern) -> Pattern:
    q = _require_sbr(p)
    if normalize(p) != q:
        raise ValueError(f"{p} is not in canonical form x1 a1 x2 ... x(k+1); use {q}")
    return q


def _fresh(alphabet: Alphabet, avoid: frozenset[str], count: int) -> list[str]:
    if not alphabet.unbounded:
        raise ValueError("fresh letters need an unbounded alphabet")
    gen = (a for a in alphabet.fresh_letters() if a not in avoid)
    return list(itertools.islice(gen, count))


# ---------------------------------------------------------------- simple block-regular


def hat_word(w: Word) -> Word:
    """Replace each block boundary d^m e^n by d^(m-1) e^n d and drop one letter of the last block."""
    blocks = list(w.runs())
    if not blocks:
        raise ValueError("hat_word needs a nonempty word")
    parts: list[tuple[tuple[str, ...], int]] = []
    for (d, m), (e, n) in zip(blocks, blocks[1:]):
        parts += [((d,), m - 1), ((e,), n), ((d,), 1)]
    d, m = blocks[-1]
    parts.append(((d,), m - 1))
    return Word(parts)


def sr_td_set(p: Pattern) -> Sample:
    q = _require_sbr(p)
    skel = q.skeleton
    if not skel:
        return _sample((EPS, True))
    return _sample((skel, True), (hat_word(skel), False))


def sr_pbt_set(p: Pattern) -> Sample:
    return _sample((_require_sbr(p).skeleton, True))


def _binary_regular_set(consts: list[str], alphabet: Alphabet) -> Sample:
    a, b = alphabet.seeds
    bar = {a: b, b: a}
    n = len(consts) + 1
    phi: dict[int, list[str]] = {1: [bar[consts[0]]], n: [bar[consts[-1]]]}
    psi: dict[int, list[str]] = {}
    for i in range(2, n):
        left, right = consts[i - 2], consts[i - 1]
        if left == right:
            phi[i] = [bar[left]]
        else:
            psi[i] = [left]
    w1 = _spell(consts, phi)
    w2 = _spell(consts, psi)
    return _sample((w1, True), (w2, True), (hat_word(_word(consts)), False))


def _spell(consts: list[str], images: dict[int, list[str]]) -> Word:
    out: list[str] = list(images.get(1, []))
    for i, c in enumerate(consts):
        out.append(c)
        out.extend(images.get(i + 2, []))
    return _word(out)


@dataclass(frozen=True)
class TernaryParts:
    """The three words of the regular-class teaching set over three or more letters, with their substitutions."""

    w1: Word
    w2: Word
    w3: Word
    phi: dict
    psi: dict
    alphas: tuple[Word, ...]


def ternary_parts(p: Pattern, alphabet: Alphabet, variant: str = "example") -> TernaryParts:
    """Build w1, w2 and w3 = alpha_1 ... alpha_(n-2) for x1 a_(i1) x2 ... a_(i(n-1)) xn.

    ``variant="example"`` follows the worked ternary example where it departs
    from the general recipe: endpoint letters of psi look at the neighbouring
    letter actually written in w2, and the boundary cases that would prepend
    psi(x1) or append psi(xn) leave them out.  When those endpoint letters
    make the three words inconsistent with p, the recipe's endpoint letters
    are used instead.  ``variant="printed"`` follows the general recipe
    literally.
    """
    if variant not in ("example", "printed"):
        raise ValueError("variant must be 'example' or 'printed'")
    q = _require_canonical_sbr(p)
    if variant == "printed":
        return _ternary_build(q, alphabet, example_endpoints=False, example_bodies=False)
    parts = _ternary_build(q, alphabet, example_endpoints=True, example_bodies=True)
    if membership(parts.w1, q) and membership(parts.w2, q) and not membership(parts.w3, q):
        return parts
    return _ternary_build(q, alphabet, example_endpoints=False, example_bodies=True)


def _ternary_build(q: Pattern, alphabet: Alphabet, example_endpoints: bool, example_bodies: bool) -> TernaryParts:
    consts = list(q.skeleton.letters())
    n = len(consts) + 1
    if n < 3:
        raise ValueError("ternary construction needs at least two constants")
    letters = alphabet.seeds
    if alphabet.unbounded or len(letters) < 3:
        raise ValueError("needs a finite alphabet with at least three letters")

    def idx(a: str) -> int:
        return letters.index(a) + 1

    def odd(a: str) -> bool:
        return idx(a) % 2 == 1

    odds = [a for a in letters if odd(a)]
    evens = [a for a in letters if not odd(a)]

    def first(cands, avoid=()) -> str:
        return next(a for a in cands if a not in avoid)

    c = {j + 1: a for j, a in enumerate(consts)}  # c[j] = a_(i_j), j = 1..n-1

    phi: dict[int, list[str]] = {}
    psi: dict[int, list[str]] = {}
    for j in range(1, n - 1):
        A, B = c[j], c[j + 1]
        if odd(A) == odd(B):
            phi[j + 1] = [first(evens if odd(A) else odds)]
            psi[j + 1] = []
        elif not odd(A):
            if j > 1 and not odd(c[j - 1]):
                psi[j + 1] = [first(odds, (B,))]
            else:
                psi[j + 1] = [first(evens), first(odds, (B,))]
        else:
            psi[j + 1] = [first(odds, (A,))]
    if example_endpoints:
        psi[1] = [first(letters, (c[1], (psi[2] + [c[2]])[0]))]
        psi[n] = [first(letters, (c[n - 1], ([c[n - 2]] + psi[n - 1])[-1]))]
    else:
        psi[1] = [first(letters, (c[1], c[2]))]
        psi[n] = [first(letters, (c[n - 1], c[n - 2]))]

    P1, Pn = psi[1], psi[n]
    example = example_bodies
    alphas: list[list[str]] = []
    for j in range(1, n - 1):
        A, B = c[j], c[j + 1]
        Pj = psi[j]
        has_prev, has_next2 = j - 1 >= 1, j + 2 <= n - 1
        prev_odd = has_prev and odd(c[j - 1])
        prev_even = has_prev and not odd(c[j - 1])
        next2_odd = has_next2 and odd(c[j + 2])
        next2_even = has_next2 and not odd(c[j + 2])

        def three_way() -> list[str]:
            if has_prev and has_next2:
                return [B, A] if A != B else [A]
            if not has_prev:
                return P1 + [B] + P1 + [A] if A != B else P1 + [A]
            return [B] + Pn + [A] + Pn if A != B else [A] + Pn

        def i11(jp: list[str], jpp: list[str]) -> list[str]:
            return [B] + jpp + jp + [A] if A != B else jp + [A] + jpp

        if odd(A) == odd(B):
            if not odd(A):
                if prev_odd and next2_odd:
                    alpha = i11(psi[j], psi[j + 2])
                elif prev_odd:
                    if next2_even:
                        alpha = i11(psi[j], [])
                    else:
                        alpha = i11(psi[j], Pn) + ([] if example else Pn)
                elif next2_odd:
                    if prev_even:
                        alpha = i11([], psi[j + 2])
                    else:
                        alpha = ([] if example else P1) + i11(P1, psi[j + 2])
                else:
                    alpha = three_way()
            else:
                alpha = three_way()
        elif odd(A):
            j1 = psi[j + 1]
            if next2_odd and (prev_even or prev_odd or not has_prev):
                j2, j3 = psi[j + 2][0], psi[j + 2][1]
                if not has_prev:
                    core_pj, pre = ([], []) if example else (P1, P1)
                else:
                    core_pj, pre = Pj, []
                tail = [j2, A] if j3 == A else [j2, j3, A]
                alpha = pre + j1 + [B, j2] + core_pj + tail + j1
            elif prev_even:
                if next2_even:
                    alpha = j1 + [B] + Pj + [A] + j1
                else:
                    alpha = j1 + [B] + Pn + Pj + Pn + [A] + j1 + Pn
            else:
                if prev_odd and next2_even:
                    alpha = j1 + [B, A] + j1
                elif not has_prev:
                    alpha = P1 + j1 + [B] + P1 + [A] + j1
                else:
                    alpha = j1 + [B] + Pn + [A] + j1 + Pn
        else:
            pair = psi[j + 1]
            j1, j2 = (pair[:1], pair[1]) if len(pair) == 2 else ([], pair[0])
            if has_prev and has_next2:
                alpha = [j2, B] + psi[j + 2] + Pj + [A] + j1 + [j2]
            elif not has_prev:
                alpha = P1 + [j2, B] + psi[j + 2] + P1 + [A] + j1 + [j2]
            else:
                alpha = [j2, B] + Pn + Pj + [A] + j1 + [j2] + Pn
        alphas.append(alpha)

    w1 = _spell(consts, phi)
    w2 = _spell(consts, psi)
    w3 = _word([a for al in alphas for a in al])
    return TernaryParts(w1, w2, w3, phi, psi, tuple(_word(a) for a in alphas))


def sr_vs_regular_set(p: Pattern, alphabet: Alphabet, variant: str = "example") -> Sample:
    """Three examples telling a simple block-regular pattern apart from all regular patterns."""
    q = _require_canonical_sbr(p)
    consts = list(q.skeleton.letters())
    if not consts:
        return _sample((EPS, True))
    if alphabet.unbounded:
        raise ValueError("needs a finite alphabet")
    if alphabet.is_unary:
        a = alphabet.seeds[0]
        return Sample(list(sr_td_set(q)) + [(Word.power(a, len(consts) + 1), True)])
    if len(alphabet.seeds) == 2:
        return _binary_regular_set(consts, alphabet)
    if len(consts) == 1:
        a = consts[0]
        b = next(x for x in alphabet.seeds if x != a)
        return _sample((_word([a]), True), (_word([b, a, b]), True), (EPS, False))
    parts = ternary_parts(q, alphabet, variant)
    return _sample((parts.w1, True), (parts.w2, True), (parts.w3, False))


def sr_vs_all_set(p: Pattern, alphabet: Alphabet) -> Sample:
    """Teaching set against all patterns, for a unary or an unbounded alphabet.

    Over one letter any pattern equivalent to 0^m x1 is accepted, i.e. one
    with a variable occurring exactly once.
    """
    if not alphabet.unbounded and not alphabet.is_unary:
        raise ValueError("no construction is available for finite alphabets of size >= 2")
    if alphabet.is_unary:
        if 1 not in p.frequencies.values() or not p.constants <= set(alphabet.seeds):
            raise ValueError(f"{p} is not equivalent to a simple block-regular pattern")
        a, m = alphabet.seeds[0], _skel_len(p)
        if m == 0:
            return _sample((EPS, True), (_word([a]), True))
        return _sample((Word.power(a, m), True), (Word.power(a, m + 1), True), (Word.power(a, m - 1), False))
    q = _require_sbr(p)
    skel = q.skeleton
    if not skel:
        return _sample((EPS, True), (_word([alphabet.letter(0)]), True))
    fresh = _fresh(alphabet, q.constants, len(q.variables))
    image = {v: _word([fresh[i]]) for i, v in enumerate(q.variables)}
    return _sample((skel, True), (q.substitute(image), True), (hat_word(skel), False))


def sr_zero_chain_set(n: int, alphabet: Alphabet) -> Sample:
    """Examples for x1 0 x2 0 ... 0 x(n+1): 0^n, all shorter powers of 0, and one 1 in each gap."""
    if n < 1:
        raise ValueError("n must be >= 1")
    zero, one = alphabet.letter(0), alphabet.letter(1)
    pairs: list[tuple[Word, bool]] = [(Word.power(zero, n), True)]
    pairs += [(Word.power(zero, k), False) for k in range(n)]
    for i in range(n + 1):
        pairs.append((Word.power(zero, i) + _word([one]) + Word.power(zero, n - i), True))
    return Sample(pairs)


def sr_zero_chain_pattern(n: int, alphabet: Alphabet) -> Pattern:
    zero = alphabet.letter(0)
    syms: list = [1]
    for i in range(n):
        syms += [zero, i + 2]
    return Pattern(tuple(syms))


# ---------------------------------------------------------------- quasi-regular, unary


def _unary_shape(p: Pattern) -> tuple[int, int | None]:
    """(constant count k, common variable frequency m or None for a constant pattern)."""
    if len(p.constants) > 1:
        raise ValueError(f"{p} is not unary")
    freqs = set(p.frequencies.values())
    if len(freqs) > 1:
        raise ValueError(f"{p} is not quasi-regular")
    return _skel_len(p), (freqs.pop() if freqs else None)


def _unary_letter(p: Pattern, letter: str | None) -> str:
    if p.constants:
        (a,) = p.constants
        if letter is not None and letter != a:
            raise ValueError("letter does not match the pattern's constant")
        return a
    return letter or "0"


def qr_unary_set(p: Pattern, m: int | None = None, letter: str | None = None) -> Sample:
    k, freq = _unary_shape(p)
    a = _unary_letter(p, letter)
    if freq is None:
        if m is None or m < 1:
            raise ValueError("a constant pattern needs the class parameter m")
        return _sample((Word.power(a, k), True), (Word.power(a, k + m), False))
    if m is not None and m != freq:
        raise ValueError(f"pattern frequency {freq} does not match m={m}")
    pairs = [(Word.power(a, k), True), (Word.power(a, k + freq), True)]
    if k >= freq:
        pairs.append((Word.power(a, k - freq), False))
    return Sample(pairs)


def qr_unary_pbt_set(p: Pattern, letter: str | None = None) -> Sample:
    k, freq = _unary_shape(p)
    a = _unary_letter(p, letter)
    if freq is None:
        return _sample((Word.power(a, k), True))
    return _sample((Word.power(a, k), True), (Word.power(a, k + freq), True))


# ---------------------------------------------------------------- quasi-regular, constant-free PBT witness


@dataclass(frozen=True)
class ColouredAdjacency:
    """Bipartite adjacency graph and its colouring.

    Vertices are copies (v, "L") and (v, "R") of each variable; an edge
    ((i, "L"), (j, "R")) is recorded as (i, j) whenever x_i x_j is a substring.
    ``colouring`` is the greedy colouring of the contracted graph and
    ``copy_colouring`` its lift to both copies.
    """

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    colouring: dict
    copy_colouring: dict
    xi: dict
    p: dict

    @property
    def colour_count(self) -> int:
        return max(self.colouring.values(), default=0)

    def contracted_neighbours(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)} - {v}

    def max_degree(self) -> int:
        return max((len(self.contracted_neighbours(v)) for v in self.vertices), default=0)

    def condition1(self) -> bool:
        """Both copies of every variable share a colour."""
        return all(self.copy_colouring[(v, "L")] == self.copy_colouring[(v, "R")] for v in self.vertices)

    def condition2(self) -> bool:
        """Distinct neighbours of a common copy get distinct colours."""
        c = self.copy_colouring
        for i in self.vertices:
            right = {j for a, j in self.edges if a == i}
            left = {j for j, b in self.edges if b == i}
            for group, side in ((right, "R"), (left, "L")):
                for j1, j2 in itertools.combinations(sorted(group), 2):
                    if c[(j1, side)] == c[(j2, side)]:
                        return False
        return True


def qr_adjacency(p: Pattern, letters: int | None = None) -> ColouredAdjacency:
    """Greedy distance-2 colouring of the contracted adjacency graph, with xi and heights."""
    if not p.is_constant_free:
        raise ValueError("pattern must be constant-free")
    if len(set(p.frequencies.values())) != 1:
        raise ValueError("pattern must be quasi-regular")
    verts = p.variables
    edges = frozenset(zip(p.symbols, p.symbols[1:]))
    nbrs = {v: set() for v in verts}
    for a, b in edges:
        if a != b:
            nbrs[a].add(b)
            nbrs[b].add(a)
    colour: dict[int, int] = {}
    for v in verts:
        near = set(nbrs[v])
        for u in nbrs[v]:
            near |= nbrs[u]
        near.discard(v)
        used = {colour[u] for u in near if u in colour}
        colour[v] = next(c for c in itertools.count(1) if c not in used)
    k = max(colour.values())
    if letters is not None and letters < max(k, 2):
        raise ValueError(f"alphabet has {letters} letters but the construction needs {max(k, 2)}")
    xi = {v: (2 if colour[v] == 1 else 1) for v in verts}
    heights = {v: i + 3 for i, v in enumerate(verts)}
    copies = {(v, side): colour[v] for v in verts for side in ("L", "R")}
    return ColouredAdjacency(verts, edges, colour, copies, xi, heights)


def qr_pbt_witness(p: Pattern, alphabet: Alphabet) -> Word:
    """phi(p) with phi(x_i) = a_c a_xi^(p_i) a_c for colour c of x_i."""
    if p.max_frequency < 2:
        raise ValueError("frequency-1 class is {x}; no witness is needed")
    size = None if alphabet.unbounded else len(alphabet.seeds)
    g = qr_adjacency(p, size)
    image = {}
    for v in g.vertices:
        a, b = alphabet.letter(g.colouring[v] - 1), alphabet.letter(g.xi[v] - 1)
        image[v] = Word([((a,), 1), ((b,), g.p[v]), ((a,), 1)])
    return p.substitute(image)


# ---------------------------------------------------------------- non-cross


def noncross_unary_set(p: Pattern, m: int, letter: str = "0") -> Sample:
    exps = noncross_exponents(p)
    if exps is None:
        raise ValueError(f"{p} is not non-cross")
    if max(exps) > m:
        raise ValueError(f"exponent {max(exps)} exceeds m={m}")
    return Sample((Word.power(letter, j), coin_representable(j, exps)) for j in range(m + 1))


def noncross_pbt_witness(p: Pattern, zero: str = "0", one: str = "1") -> Word:
    exps = noncross_exponents(p)
    if exps is None:
        raise ValueError(f"{p} is not non-cross")
    if 1 in exps:
        return _word([zero])
    return staircase_word(exps, zero, one)


@dataclass(frozen=True)
class TWord:
    """A negative staircase word built from one prime-power factor, with the rival it rules out."""

    factor: PrimePowerFactor
    d: int
    e: int
    word: Word
    rival: Pattern


def _noncross_pattern(exps: Sequence[int]) -> Pattern:
    return Pattern(tuple(i + 1 for i, n in enumerate(exps) for _ in range(n)))


def noncross_t_words(p: Pattern, m: int) -> list[TWord]:
    exps = noncross_exponents(p)
    if exps is None:
        raise ValueError(f"{p} is not non-cross")
    if 1 in exps:
        raise ValueError("a frequency-1 variable makes the language full; use the witness '0'")
    if max(exps) > m:
        raise ValueError(f"exponent {max(exps)} exceeds m={m}")
    out = []
    for f in prime_power_factors(exps):
        d = sum(1 for n in exps if n % f.power)
        e = e_value(f, m)
        pos = exps.index(f.source)
        rival = list(exps)
        rival[pos] //= f.q
        out.append(TWord(f, d, e, staircase_word([e] * (d + 1)), _noncross_pattern(rival)))
    return out


def noncross_td_set(p: Pattern, m: int) -> Sample:
    """v1 positive, v2 negative with k+2 blocks of m!, and one negative t-word per prime-power factor."""
    exps = noncross_exponents(p)
    if exps is None:
        raise ValueError(f"{p} is not non-cross")
    tws = noncross_t_words(p, m)
    v1 = staircase_word(exps)
    v2_counts = [factorial(m)] * (len(exps) + 1)
    v2 = staircase_word(v2_counts)
    if noncross_staircase_membership(StaircaseForm(tuple(v2_counts)), exps):
        raise AssertionError("v2 unexpectedly belongs to the target language")
    for t in tws:
        if noncross_staircase_membership(StaircaseForm((t.e,) * (t.d + 1)), exps):
            raise AssertionError(f"t-word for {t.factor} unexpectedly belongs to the target language")
    return Sample([(v1, True), (v2, False)] + [(t.word, False) for t in tws])


# ---------------------------------------------------------------- unbounded alphabet


def infinite_pbt_set(p: Pattern, alphabet: Alphabet) -> Sample:
    fresh = _fresh(alphabet, p.constants, len(p.variables))
    image = {v: _word([fresh[i]]) for i, v in enumerate(p.variables)}
    return _sample((p.skeleton, True), (p.substitute(image), True))


# ---------------------------------------------------------------- unary m-regular


def unary_mregular_set(p: Pattern, m: int, letter: str | None = None) -> Sample:
    """Pin the constant count, then separate every rival exponent set with a different monoid."""
    if len(p.constants) > 1:
        raise ValueError(f"{p} is not unary")
    if p.max_frequency > m:
        raise ValueError(f"variable frequency exceeds m={m}")
    a = _unary_letter(p, letter)
    k = _skel_len(p)
    gens = set(p.frequencies.values())
    pairs: list[tuple[Word, bool]] = [(Word.power(a, k), True)]
    pairs += [(Word.power(a, k - i), False) for i in range(1, min(k, m) + 1)]

    def member(n: int, coins) -> bool:
        return n >= k and coin_representable(n - k, coins)

    for size in range(m + 1):
        for subset in itertools.combinations(range(1, m + 1), size):
            for n in range(k, k + m + 1):
                mine = member(n, gens)
                if mine != member(n, subset):
                    pairs.append((Word.power(a, n), mine))
                    break
    return Sample(pairs)


# ---------------------------------------------------------------- passe-partout


X222 = Pattern((1, 1, 2, 2, 3, 3))


def passe_partout(positives: Sequence[Word], p: Pattern = X222, alphabet: Alphabet = Alphabet(("0", "1"))) -> Pattern:
    """A pattern accepting every given positive whose language sits strictly inside L(x1^2 x2^2 x3^2)."""
    if normalize(p) != X222:
        raise ValueError("construction is defined for x1^2 x2^2 x3^2 only")
    words = [w for w in positives if w.length > 0]
    if not words:
        raise ValueError("need at least one nonempty positive word")
    a0, a1 = alphabet.seeds[:2]
    bar = {a0: a1, a1: a0}
    ids: dict[tuple, int] = {}

    def var(key: tuple) -> int:
        return ids.setdefault(key, len(ids) + 1)

    gammas: list[tuple[list, list, list]] = []
    for i, w in enumerate(words):
        wit = match_witness(w, p)
        if wit is None:
            raise ValueError(f"word {w!r} is not in L({p})")
        s1, s2, s3 = (wit.assignment[v].letters() for v in (1, 2, 3))
        sig = list(s1 + s2 + s3)
        delta = next(
            (d for d in alphabet.seeds[:2] if d in sig and max(k for k, b in enumerate(sig) if b == d) < len(s1)),
            None,
        )
        if delta is not None:
            kinds = {delta: "x", bar[delta]: "y"}
        else:
            kinds = {a0: "x", a1: "y"}
        seen = {a0: 0, a1: 0}
        tau: list[int] = []
        for b in sig:
            tau.append(var((kinds[b], i, seen[b] // 2)))
            seen[b] += 1
        if delta is not None:
            gammas.append(([], tau[: len(s1)], tau[len(s1) :]))
        else:
            gammas.append((tau[: len(s1)], tau[len(s1) : len(s1) + len(s2)], tau[len(s1) + len(s2) :]))
    syms: list[int] = []
    for part in range(3):
        block = [v for g in gammas for v in g[part]]
        syms += block + block
    if not syms:
        raise ValueError("degenerate construction")
    return normalize(Pattern(tuple(syms)))


# ---------------------------------------------------------------- fixed set for x1^2 x2^2 x3^2


def fixed_x222_set(zero: str = "0", one: str = "1") -> Sample:
    def st(*counts: int) -> Word:
        return staircase_word(counts, zero, one)

    return Sample(
        [
            (EPS, True),
            (Word([((zero,), 2), ((one,), 2), ((zero,), 2)]), True),
            (Word.of([zero]), False),
            (Word.of([zero, one, one, zero]), False),
            (Word.power(zero, 3), False),
            (st(2, 2, 2, 2), False),
        ]
    )


__all__ = [
    "ColouredAdjacency",
    "PREFERENCES",
    "PreferenceOrder",
    "TWord",
    "TernaryParts",
    "X222",
    "fixed_x222_set",
    "hat_word",
    "infinite_pbt_set",
    "noncross_pbt_witness",
    "noncross_t_words",
    "noncross_td_set",
    "noncross_unary_set",
    "passe_partout",
    "pref_infinite",
    "pref_noncross",
    "pref_qr_unary",
    "pref_shorter_pattern",
    "pref_sr",
    "qr_adjacency",
    "qr_pbt_witness",
    "qr_unary_pbt_set",
    "qr_unary_set",
    "sr_pbt_set",
    "sr_td_set",
    "sr_vs_all_set",
    "sr_vs_regular_set",
    "sr_zero_chain_pattern",
    "sr_zero_chain_set",
    "ternary_parts",
    "unary_mregular_set",
]
