import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import is_subsequence, language_upto, member_by_lengths
from patlang.matcher import membership, pattern_morphism, staircase_decompose
from patlang.numtheory import factorial, prime_power_count, prime_power_factors
from patlang.pattern_core import (
    EPS,
    Alphabet,
    Pattern,
    parse_pattern,
    parse_word,
    render_word,
    sbr_from_skeleton,
)
from patlang.teachsets import (
    X222,
    PREFERENCES,
    fixed_x222_set,
    hat_word,
    infinite_pbt_set,
    noncross_pbt_witness,
    noncross_t_words,
    noncross_td_set,
    noncross_unary_set,
    passe_partout,
    qr_adjacency,
    qr_pbt_witness,
    qr_unary_pbt_set,
    qr_unary_set,
    sr_pbt_set,
    sr_td_set,
    sr_vs_all_set,
    sr_vs_regular_set,
    sr_zero_chain_pattern,
    sr_zero_chain_set,
    ternary_parts,
    unary_mregular_set,
)

BIN = Alphabet.parse("01")
TER = Alphabet.parse("012")
UNARY = Alphabet.parse("0")
INF = Alphabet.parse("inf:01")


def pat(text, alphabet=BIN):
    return parse_pattern(text, alphabet)


def w(text, alphabet=BIN):
    return parse_word(text or "eps", alphabet)


def as_set(sample):
    return {(render_word(e.word), e.label) for e in sample}


def assert_consistent(sample, p):
    for e in sample:
        assert membership(e.word, p) == e.positive, (render_word(e.word), e.label, p)


# ---------------------------------------------------------------- hat word


def test_hat_word_examples():
    assert hat_word(w("0")) == EPS
    assert hat_word(w("0011")) == w("01101")
    assert hat_word(w("012", TER)) == w("1021", TER)
    assert not is_subsequence("012", "1021")


def test_hat_word_rejects_empty():
    with pytest.raises(ValueError):
        hat_word(EPS)


def test_hat_word_on_random_skeletons():
    rng = random.Random(7)
    for _ in range(200):
        k = rng.randint(1, 3)
        skel = "".join(rng.choice("012"[:k]) for _ in range(rng.randint(1, 6)))
        hat = render_word(hat_word(w(skel, TER)))
        hat = "" if hat == "eps" else hat
        assert not is_subsequence(skel, hat)
        for r in range(len(skel)):
            for sub in itertools.combinations(skel, r):
                assert is_subsequence("".join(sub), hat)


# ---------------------------------------------------------------- simple block-regular sets


def test_sr_td_set_examples():
    assert as_set(sr_td_set(pat("x1 0 x2 0 x3"))) == {("00", "+"), ("0", "-")}
    assert as_set(sr_td_set(pat("x1"))) == {("eps", "+")}
    assert as_set(sr_td_set(pat("x1 0 x2 1 x3"))) == {("01", "+"), ("10", "-")}


def test_sr_td_set_accepts_equivalent_forms():
    assert sr_td_set(pat("x1 x2 0 x3")) == sr_td_set(pat("x1 0 x2"))
    with pytest.raises(ValueError):
        sr_td_set(pat("0 x1"))


def test_sr_pbt_set_examples():
    assert as_set(sr_pbt_set(pat("x1 0 x2"))) == {("0", "+")}
    assert as_set(sr_pbt_set(pat("x1"))) == {("eps", "+")}
    # adjacent constants are not separated by variables, so this is not simple block-regular
    with pytest.raises(ValueError):
        sr_pbt_set(pat("x1 01 x2"))
    assert as_set(sr_pbt_set(pat("x1 0 x2 1 x3"))) == {("01", "+")}


def test_sr_vs_regular_binary_golden():
    s = sr_vs_regular_set(pat("x1 0 x2 0 x3 1 x4 1 x5"), BIN)
    assert as_set(s) == {("10101010", "+"), ("00011", "+"), ("01101", "-")}


def test_sr_vs_regular_ternary_golden():
    parts = ternary_parts(pat("x1 0 x2 1 x3 2 x4 1 x5 1 x6", TER), TER)
    assert render_word(parts.w1) == "012101"
    assert render_word(parts.w2) == "10211020110"
    assert render_word(parts.w3) == "2111020202110011020010"
    assert "".join(render_word(a) for a in parts.alphas) == "2111020202110011020010"


def test_sr_vs_regular_printed_variant_differs_at_first_endpoint():
    parts = ternary_parts(pat("x1 0 x2 1 x3 2 x4 1 x5 1 x6", TER), TER, variant="printed")
    assert render_word(parts.w1) == "012101"
    assert render_word(parts.w2).startswith("2")


def test_sr_vs_regular_two_variables_ternary():
    assert as_set(sr_vs_regular_set(pat("x1 0 x2", TER), TER)) == {("0", "+"), ("101", "+"), ("eps", "-")}


def test_binary_structural_facts():
    for n in range(1, 7):
        for skel in itertools.product("01", repeat=n):
            s = sr_vs_regular_set(sbr_from_skeleton(skel), BIN)
            w1, w2 = (render_word(x) for x in s.positives)
            assert "00" not in w1 and "11" not in w1
            assert "010" not in w2 and "101" not in w2
            assert w1[0] != w2[0] and w1[-1] != w2[-1]


@pytest.mark.parametrize("variant", ["example", "printed"])
def test_ternary_sets_are_consistent(variant):
    for n in range(1, 6):
        for skel in itertools.product("012", repeat=n):
            p = sbr_from_skeleton(skel)
            assert_consistent(sr_vs_regular_set(p, TER, variant), p)


def test_ternary_construction_can_fail_to_teach():
    # x1 01 x2 is regular, consistent with the set and inequivalent to the target
    target = (1, "0", 2, "0", 3)
    rival = (1, "0", "1", 2)
    s = sr_vs_regular_set(Pattern(target), TER)
    for e in s:
        assert member_by_lengths(e.word.text(), rival) == e.positive
    assert language_upto(target, "012", 4) != language_upto(rival, "012", 4)


def test_sr_vs_all_examples():
    assert as_set(sr_vs_all_set(pat("0 0 x1", UNARY), UNARY)) == {("00", "+"), ("000", "+"), ("0", "-")}
    assert as_set(sr_vs_all_set(pat("x1 0 x2", INF), INF)) == {("0", "+"), ("a0 0 a1", "+"), ("eps", "-")}
    assert as_set(sr_vs_all_set(pat("x1", INF), INF)) == {("eps", "+"), ("0", "+")}


def test_sr_vs_all_rejects_finite_alphabets():
    with pytest.raises(ValueError):
        sr_vs_all_set(pat("x1 0 x2"), BIN)


def test_zero_chain():
    assert as_set(sr_zero_chain_set(1, BIN)) == {("0", "+"), ("eps", "-"), ("10", "+"), ("01", "+")}
    assert as_set(sr_zero_chain_set(2, BIN)) == {
        ("00", "+"),
        ("eps", "-"),
        ("0", "-"),
        ("100", "+"),
        ("010", "+"),
        ("001", "+"),
    }
    for n in range(1, 8):
        s = sr_zero_chain_set(n, BIN)
        assert len(s) == 2 * n + 2
        assert_consistent(s, sr_zero_chain_pattern(n, BIN))


# ---------------------------------------------------------------- quasi-regular


def test_qr_unary_examples():
    assert as_set(qr_unary_set(pat("0 0 x1 x1", UNARY))) == {("00", "+"), ("0000", "+"), ("eps", "-")}
    assert as_set(qr_unary_set(pat("0 x1^3", UNARY))) == {("0", "+"), ("0000", "+")}
    assert as_set(qr_unary_set(pat("0 0", UNARY), 2)) == {("00", "+"), ("0000", "-")}


def test_qr_unary_pbt_examples():
    assert as_set(qr_unary_pbt_set(pat("0 0", UNARY))) == {("00", "+")}
    assert as_set(qr_unary_pbt_set(pat("0 x1^2", UNARY))) == {("0", "+"), ("000", "+")}
    assert as_set(qr_unary_pbt_set(pat("x1^3", UNARY))) == {("eps", "+"), ("000", "+")}


@given(st.integers(0, 5), st.integers(1, 4))
def test_qr_unary_sets_consistent(k, m):
    p = Pattern(("0",) * k + (1,) * m)
    assert_consistent(qr_unary_set(p), p)
    assert_consistent(qr_unary_pbt_set(p), p)


def test_qr_witness_examples():
    p = pat("x1 x2 x1 x2")
    wit = qr_pbt_witness(p, BIN)
    assert render_word(wit) == "0111010000101110100001"
    g = qr_adjacency(p, 2)
    assert g.colouring == {1: 1, 2: 2}
    assert render_word(qr_pbt_witness(pat("x1 x1"), BIN)) == "0111001110"
    with pytest.raises(ValueError):
        qr_pbt_witness(pat("x1 x2"), BIN)


def _quasi_regular(rng, m):
    k = rng.randint(1, 4)
    syms = [v for v in range(1, k + 1) for _ in range(m)]
    rng.shuffle(syms)
    return Pattern(tuple(syms))


def test_qr_witness_properties_random():
    rng = random.Random(11)
    for _ in range(60):
        m = rng.randint(2, 3)
        p = _quasi_regular(rng, m)
        g = qr_adjacency(p)
        assert g.condition1() and g.condition2()
        assert g.colour_count <= (2 * m) ** 2 + 1
        assert g.colour_count <= g.max_degree() ** 2 + 1
        assert all(g.p[v] > 2 for v in g.vertices)
        heights = [g.p[v] for v in g.vertices]
        assert heights == sorted(set(heights))
        big = Alphabet.of(str(i) for i in range(max(g.colour_count, 2)))
        assert membership(qr_pbt_witness(p, big), p)


def test_qr_witness_needs_enough_letters():
    p = Pattern((1, 2, 3, 1, 2, 3))
    with pytest.raises(ValueError):
        qr_pbt_witness(p, BIN)


# ---------------------------------------------------------------- non-cross


def test_noncross_unary_examples():
    labels = [e.label for e in sorted(noncross_unary_set(pat("x1^2 x2^3"), 3, "0"), key=lambda e: e.word.length)]
    assert labels == ["+", "-", "+", "+"]
    assert as_set(noncross_unary_set(pat("x1"), 1, "0")) == {("eps", "+"), ("0", "+")}
    assert as_set(noncross_unary_set(pat("x1^2"), 2, "0")) == {("eps", "+"), ("0", "-"), ("00", "+")}


def test_noncross_pbt_witness_examples():
    assert render_word(noncross_pbt_witness(pat("x1^2 x2^2"))) == "0101001001"
    assert noncross_pbt_witness(pat("x1^4 x2^8 x3^9")) == w("(01)^4(001)^8(0001)^9")
    assert render_word(noncross_pbt_witness(pat("x1^3 x2 x3^2"))) == "0"


def test_noncross_td_worked_example():
    pi = pat("x1^4 x2^8 x3^9")
    s = noncross_td_set(pi, 9)
    assert len(s) == 5
    f9 = factorial(9)
    assert w(f"(01)^{{{f9}}}(001)^{{{f9}}}(0001)^{{{f9}}}(00001)^{{{f9}}}") in s.negatives
    ts = noncross_t_words(pi, 9)
    assert sorted((t.factor.q, t.factor.r, t.e) for t in ts) == [(2, 2, 630), (2, 3, 1260), (3, 2, 840)]
    counts = {t.e: len(staircase_decompose(t.word).counts) for t in ts}
    assert counts == {630: 2, 1260: 3, 840: 3}
    for t in ts:
        assert not membership(t.word, pi)
        assert membership(t.word, t.rival)


def test_noncross_td_square():
    s = noncross_td_set(pat("x1^2"), 2)
    assert as_set(s) == {("0101", "+"), ("0101001001", "-"), ("01", "-")}


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(2, 5), min_size=1, max_size=3))
def test_noncross_sets_consistent(exps):
    p = Pattern(tuple(i + 1 for i, e in enumerate(exps) for _ in range(e)))
    m = max(exps)
    assert_consistent(noncross_unary_set(p, m, "0"), p)
    assert membership(noncross_pbt_witness(p), p)
    assert_consistent(noncross_td_set(p, m), p)
    size = len(noncross_td_set(p, m))
    assert size == 2 + len(prime_power_factors(exps)) <= 2 + prime_power_count(m)


def test_noncross_td_size_can_exceed_count_below_m():
    # exponents 4, 3, 2 hit every prime power up to 4
    s = noncross_td_set(pat("x1^4 x2^3 x3^2"), 4)
    assert len(s) == 5 > 2 + prime_power_count(3)


# ---------------------------------------------------------------- other classes


def test_infinite_pbt_examples():
    assert as_set(infinite_pbt_set(pat("x1 0 x1", INF), INF)) == {("0", "+"), ("a0 0 a0", "+")}
    assert as_set(infinite_pbt_set(pat("0 1", INF), INF)) == {("01", "+")}
    assert as_set(infinite_pbt_set(pat("x1 x2", INF), INF)) == {("eps", "+"), ("a0 a1", "+")}


def test_unary_mregular_examples():
    s = unary_mregular_set(pat("0 0 x1 x1", UNARY), 2)
    assert {("00", "+"), ("0", "-"), ("eps", "-")} <= as_set(s)
    assert_consistent(s, pat("0 0 x1 x1", UNARY))
    for rival in ("0 0", "0 0 x1", "0 0 x1 x2 x2"):
        q = pat(rival, UNARY)
        assert any(membership(e.word, q) != e.positive for e in s), rival
    assert as_set(unary_mregular_set(pat("x1", UNARY), 1)) == {("eps", "+"), ("0", "+")}


@given(st.integers(0, 3), st.lists(st.integers(1, 3), max_size=2), st.integers(1, 3))
def test_unary_mregular_consistent(k, freqs, m):
    if freqs and max(freqs) > m:
        return
    syms = ("0",) * k + tuple(v for i, f in enumerate(freqs) for v in [i + 1] * f)
    if not syms:
        return
    p = Pattern(syms)
    s = unary_mregular_set(p, m)
    assert_consistent(s, p)
    assert len(s) <= 2**m + m + 1 + 2


# ---------------------------------------------------------------- passe-partout


def test_passe_partout_example():
    tau = passe_partout([w("001100")], X222, BIN)
    assert tau.max_frequency <= 4
    assert membership(w("001100"), tau)
    assert pattern_morphism(X222, tau) is not None


def test_passe_partout_rejects_bad_input():
    with pytest.raises(ValueError):
        passe_partout([], X222, BIN)
    with pytest.raises(ValueError):
        passe_partout([w("0")], X222, BIN)


def _x222_word(rng):
    parts = ["".join(rng.choice("01") for _ in range(rng.randint(0, 3))) for _ in range(3)]
    return "".join(p + p for p in parts)


def test_passe_partout_random():
    rng = random.Random(3)
    for _ in range(40):
        texts = [_x222_word(rng) for _ in range(rng.randint(1, 4))]
        if not any(texts):
            continue
        words = [w(t) for t in texts]
        tau = passe_partout(words, X222, BIN)
        assert tau.max_frequency <= 4
        assert all(membership(x, tau) for x in words)
        assert pattern_morphism(X222, tau) is not None


def test_fixed_x222_set():
    s = fixed_x222_set()
    assert len(s) == 6
    assert ("001100", "+") in as_set(s)
    assert sorted(x.length for x in s.negatives) == [1, 3, 4, 28]
    assert_consistent(s, X222)


# ---------------------------------------------------------------- preference orders


def _domain(name):
    if name == "noncross":
        shapes = [exps for n in range(1, 4) for exps in itertools.product((1, 2, 3), repeat=n)]
        return [Pattern(tuple(i + 1 for i, e in enumerate(exps) for _ in range(e))) for exps in shapes]
    if name == "qr-unary":
        return [Pattern(("0",) * k + (1,) * m) for k in range(4) for m in range(0, 4) if k + m]
    letters = ["0", 1, 2] if name != "sr" else ["0", "1"]
    if name == "sr":
        return [sbr_from_skeleton(sk) for n in range(4) for sk in itertools.product(letters, repeat=n)]
    return [Pattern(syms) for n in range(1, 4) for syms in itertools.product(letters, repeat=n)]


@pytest.mark.parametrize("name", sorted(PREFERENCES))
def test_preferences_are_strict_orders(name):
    less = PREFERENCES[name].less
    ps = _domain(name)
    for a in ps:
        assert not less(a, a)
    for a, b in itertools.permutations(ps, 2):
        assert not (less(a, b) and less(b, a))
    for a, b, c in itertools.permutations(ps[:20], 3):
        if less(a, b) and less(b, c):
            assert less(a, c)
