"""Exact checks for the word algebra: shuffle, regularization, antipode, enumeration."""

import itertools
from fractions import Fraction
from math import comb

import pytest

from polykz.errors import DomainError
from polykz.words import (
    EMPTY_WORD,
    LinComb,
    MultiIndex,
    Word,
    antipode,
    enumerate_g,
    reg0,
    reg1,
    shuffle,
    shuffle_lin,
    suffix_closure,
    words_of_weight,
    x_decomposition,
)

W = Word.parse


def lc(*pairs):
    return LinComb([(W(w), Fraction(c)) for w, c in pairs])


def all_words_up_to(kmax):
    for k in range(kmax + 1):
        yield from words_of_weight(k)


# ---------------------------------------------------------------- basic types

def test_word_stats():
    w = W("xxyxy")
    assert w.weight == 5 and w.depth == 2 and w.height == 2
    assert W("y").height == 1
    assert W("xy").height == 1
    assert W("yx").height == 2
    with pytest.raises(DomainError):
        _ = EMPTY_WORD.height


def test_membership_predicates():
    assert EMPTY_WORD.in_h1 and EMPTY_WORD.in_h0
    assert W("xy").in_h0 and W("xy").in_h1
    assert W("y").in_h1 and not W("y").in_h0
    assert not W("x").in_h1 and not W("x").in_h0
    assert not W("yx").in_h1


def test_word_parse_roundtrip():
    assert str(W("1")) == "1"
    assert W("1") is EMPTY_WORD
    assert str(W("xxy")) == "xxy"
    with pytest.raises(ValueError):
        Word("xz")


def test_multiindex_bijection():
    mi = MultiIndex.parse("3,1")
    assert mi.to_word() == W("xxyy")
    assert MultiIndex.from_word(W("xxyy")) == mi
    assert mi.weight == 4 and mi.depth == 2 and mi.height == 1
    assert mi.admissible
    assert not MultiIndex((1, 2)).admissible
    for w in all_words_up_to(7):
        if w.is_empty or not w.in_h1:
            continue
        mi = MultiIndex.from_word(w)
        assert mi.to_word() == w
        assert mi.weight == w.weight and mi.depth == w.depth


def test_lincomb_serialization_roundtrip():
    c = lc(("xy", Fraction(2, 3)), ("1", -1))
    data = c.to_jsonable()
    assert data == [
        {"word": "1", "numerator": -1, "denominator": 1},
        {"word": "xy", "numerator": 2, "denominator": 3},
    ]
    assert LinComb.from_jsonable(data) == c


# ---------------------------------------------------------------- shuffle

def test_shuffle_examples():
    assert shuffle(EMPTY_WORD, W("xy")) == lc(("xy", 1))
    assert shuffle(W("x"), W("y")) == lc(("xy", 1), ("yx", 1))
    assert shuffle(W("xy"), W("y")) == lc(("xyy", 2), ("yxy", 1))


def brute_shuffle(u, v):
    """Independent oracle: enumerate position subsets preserving letter order."""
    out = {}
    n = len(u) + len(v)
    for pos in itertools.combinations(range(n), len(u)):
        w = [None] * n
        it_u = iter(u)
        for i in pos:
            w[i] = next(it_u)
        it_v = iter(v)
        for i in range(n):
            if w[i] is None:
                w[i] = next(it_v)
        s = "".join(w)
        out[s] = out.get(s, 0) + 1
    return out


def test_shuffle_against_brute_force():
    for u, v in [("xy", "y"), ("xx", "yy"), ("xyx", "yx"), ("xyy", "xy")]:
        got = shuffle(W(u), W(v))
        expect = brute_shuffle(u, v)
        assert {str(w): int(c) for w, c in got.items()} == expect


def test_shuffle_commutativity_and_coefficient_mass():
    words = list(all_words_up_to(3))
    for w1 in words:
        for w2 in words:
            s12 = shuffle(w1, w2)
            assert s12 == shuffle(w2, w1)
            total = sum(s12.terms.values())
            assert total == comb(len(w1) + len(w2), len(w1))


def test_shuffle_associativity_small():
    words = list(all_words_up_to(2))
    for a in words:
        for b in words:
            for c in words:
                left = shuffle_lin(shuffle(a, b), LinComb.of(c))
                right = shuffle_lin(LinComb.of(a), shuffle(b, c))
                assert left == right


# ---------------------------------------------------------------- reg maps

def test_reg1_examples():
    assert reg1(W("y")) == lc(("y", 1))
    assert reg1(W("yx")) == lc(("xy", -1))
    assert reg1(W("x")) == LinComb.zero()


def test_reg0_examples():
    assert reg0(W("xy")) == lc(("xy", 1))
    assert reg0(W("y")) == LinComb.zero()
    assert reg0(W("yx")) == lc(("xy", -1))


def test_reg_identity_on_subalgebras():
    for w in all_words_up_to(6):
        if w.in_h1:
            assert reg1(w) == LinComb.of(w)
        if w.in_h0:
            assert reg0(w) == LinComb.of(w)


def test_reg1_lands_in_h1_and_reg0_in_h0():
    for w in all_words_up_to(6):
        for ww, _ in reg1(w).items():
            assert ww.in_h1
        for ww, _ in reg0(w).items():
            assert ww.in_h0


def test_reg1_reconstruction():
    # w x^n = sum_j reg1(w x^(n-j)) sh x^j, exactly, for h1 words
    for w in all_words_up_to(4):
        if not w.in_h1:
            continue
        for n in range(1, 5 - len(w) if len(w) < 4 else 2):
            target = LinComb.of(Word(w.s + "x" * n))
            total = LinComb.zero()
            for j in range(n + 1):
                total = total + shuffle_lin(reg1(Word(w.s + "x" * (n - j))), LinComb.of(Word("x" * j)))
            assert total == target


def test_reg1_trailing_y_formula():
    # reg1(w y x^n) = (-1)^n (w sh x^n) y, exactly
    for w in all_words_up_to(5):
        for n in range(0, 4):
            if len(w) + 1 + n > 8:
                continue
            lhs = reg1(Word(w.s + "y" + "x" * n))
            sh = shuffle_lin(LinComb.of(w), LinComb.of(Word("x" * n)))
            rhs = LinComb({Word(u.s + "y"): ((-1) ** n) * c for u, c in sh.terms.items()})
            assert lhs == rhs


def test_x_decomposition_reconstructs():
    for w in all_words_up_to(6):
        parts = x_decomposition(w)
        total = LinComb.zero()
        for j, v in parts.items():
            total = total + shuffle_lin(v, LinComb.of(Word("x" * j)))
        assert total == LinComb.of(w)
        for v in parts.values():
            assert all(u.in_h1 for u, _ in v.items())


def test_reg0_full_reconstruction():
    # reconstruct w from its two-stage decomposition: strip x's then y's
    from polykz.words import _reg0_h1_str, _shuffle_str  # noqa: the exact internals

    for w in all_words_up_to(5):
        # stage 1
        xparts = x_decomposition(w)
        rebuilt = LinComb.zero()
        for j, v in xparts.items():
            # stage 2 on each h1 component: v = sum_n u_n sh y^n
            for u, cu in v.terms.items():
                stripped = u.s.lstrip("y")
                m = len(u.s) - len(stripped)
                inner = LinComb.zero()
                for n in range(m + 1):
                    comp = LinComb(
                        [(Word(s), c) for s, c in _reg0_h1_str("y" * (m - n) + stripped)]
                    )
                    inner = inner + shuffle_lin(comp, LinComb.of(Word("y" * n)))
                rebuilt = rebuilt + shuffle_lin(inner * cu, LinComb.of(Word("x" * j)))
        assert rebuilt == LinComb.of(w)


# ---------------------------------------------------------------- antipode

def test_antipode_examples():
    assert antipode(W("xy")) == lc(("yx", 1))
    assert antipode(W("x")) == lc(("x", -1))
    assert antipode(W("xyy")) == lc(("yyx", -1))


def test_antipode_involution():
    for w in all_words_up_to(7):
        assert antipode(antipode(w)) == LinComb.of(w)


# ---------------------------------------------------------------- enumeration

def compositions(k, n):
    """All compositions of k into n positive parts."""
    if n == 1:
        if k >= 1:
            yield (k,)
        return
    for first in range(1, k - n + 2):
        for rest in compositions(k - first, n - 1):
            yield (first,) + rest


def test_enumerate_g_examples():
    assert enumerate_g(0, 3, 1, 1) == lc(("xxy", 1))
    assert enumerate_g(0, 4, 2, 1) == lc(("xxyy", 1))
    assert enumerate_g(0, 2, 2, 1) == LinComb.zero()


def test_enumerate_g_vanishing_conventions():
    assert enumerate_g(0, 3, 2, 2) == LinComb.zero()  # k < n + s
    assert enumerate_g(1, 2, 2, 2) == LinComb.zero()  # n < s would fail too
    assert enumerate_g(1, 3, 2, 2) != LinComb.zero()  # k = n + s - 1 allowed in h1
    assert enumerate_g(0, 0, 1, 1) == LinComb.zero()
    assert enumerate_g(0, 4, 0, 1) == LinComb.zero()
    assert enumerate_g(0, 4, 1, 0) == LinComb.zero()
    assert enumerate_g(0, 4, -1, 1) == LinComb.zero()


def test_enumerate_g0_matches_composition_enumeration():
    for k in range(2, 11):
        for n in range(1, k):
            for s in range(1, n + 1):
                expect = set()
                for parts in compositions(k, n):
                    if parts[0] >= 2 and sum(1 for p in parts if p >= 2) == s:
                        expect.add(MultiIndex(parts).to_word())
                got = enumerate_g(0, k, n, s)
                assert set(got.terms) == expect
                assert all(c == 1 for c in got.terms.values())


def test_enumerate_g1_matches_composition_enumeration():
    # h1 words are named by compositions with k1 >= 1; the word height is
    # #{i | ki >= 2} when k1 >= 2 and one more than that when k1 = 1
    for k in range(1, 9):
        for n in range(1, k + 1):
            for s in range(1, n + 2):
                expect = set()
                for parts in compositions(k, n):
                    big = sum(1 for p in parts if p >= 2)
                    h = big if parts[0] >= 2 else big + 1
                    if h == s:
                        expect.add(MultiIndex(parts).to_word())
                got = enumerate_g(1, k, n, s)
                assert set(got.terms) == expect


# ---------------------------------------------------------------- suffixes

def test_suffix_closure():
    assert suffix_closure(W("xy")) == [EMPTY_WORD, W("y"), W("xy")]
    assert suffix_closure(W("y")) == [EMPTY_WORD, W("y")]
    assert suffix_closure(W("xxy")) == [EMPTY_WORD, W("y"), W("xy"), W("xxy")]
