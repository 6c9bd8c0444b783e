"""Trace calculus on two-generator words and the Chebyshev families."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from knotpoly.exactpoly import MultiPoly
from knotpoly.sl2trace import (DEFAULT_SEED, FreeWord, GENERATOR_A,
                               GENERATOR_B, chebyshev_s, chebyshev_t,
                               inverse_word, matrix_of_word,
                               numeric_trace_oracle, random_reduced_word,
                               reduce_word, reverse_word, rotate_word,
                               trace_poly, validate_rewrite_table,
                               word_from_string, word_to_string)

X = MultiPoly.variable("x", ("x", "y", "z"))
Y = MultiPoly.variable("y", ("x", "y", "z"))
Z = MultiPoly.variable("z", ("x", "y", "z"))


def w(text):
    return word_from_string(text)[0]


@st.composite
def words(draw, max_len=8):
    n = draw(st.integers(0, max_len))
    letters = [(draw(st.sampled_from((GENERATOR_A, GENERATOR_B))),
                draw(st.sampled_from((-2, -1, 1, 2))))
               for _ in range(n)]
    return reduce_word(letters)


# -- word plumbing ---------------------------------------------------------

def test_reduce_word_merges_and_cancels():
    word = reduce_word([(0, 1), (0, 1), (1, -1), (1, 1), (0, -2)])
    assert word.letters == ()
    assert reduce_word([(0, 1), (1, 2), (1, -1)]).letters == ((0, 1), (1, 1))


def test_free_word_validation():
    with pytest.raises(ValueError):
        FreeWord(((0, 0),))
    with pytest.raises(ValueError):
        FreeWord(((0, 1), (0, 2)))
    with pytest.raises(ValueError):
        FreeWord(((2, 1),))


def test_word_string_round_trip():
    word = w("a b^-2 a^3 b")
    assert word_to_string(word) == "a b^-2 a^3 b"
    assert word_to_string(FreeWord(())) == "1"


def test_word_from_string_rejects_three_generators():
    with pytest.raises(ValueError):
        word_from_string("a b c")


@settings(max_examples=50, deadline=None)
@given(words())
def test_word_round_trip_property(word):
    # names are assigned by first appearance, so the round trip is textual
    text = word_to_string(word)
    if word.is_empty():
        return
    back, names = word_from_string(text)
    assert word_to_string(back, names + ("a", "b")[len(names):]) == text


# -- basic traces ----------------------------------------------------------

def test_generator_traces():
    assert trace_poly(w("a")) == X
    assert trace_poly(FreeWord(((GENERATOR_B, 1),))) == Y
    assert trace_poly(w("a b")) == Z
    assert trace_poly(FreeWord(())) == 2
    # parsing assigns indices by first appearance, so a lone "b" is the
    # first generator and still traces to x
    assert trace_poly(w("b")) == X


def test_inverse_pair_trace():
    assert trace_poly(w("a b^-1")) == X * Y - Z


def test_commutator_trace():
    expected = X ** 2 + Y ** 2 + Z ** 2 - X * Y * Z - 2
    assert trace_poly(w("a b a^-1 b^-1")) == expected


def test_power_traces_are_chebyshev():
    # tr(a^k) = T_k(x)
    for k in range(-4, 5):
        word = reduce_word([(GENERATOR_A, k)])
        assert trace_poly(word) == chebyshev_t(k, "x").extend_to(
            ("x", "y", "z"))


# -- invariance properties -------------------------------------------------

@settings(max_examples=50, deadline=None)
@given(words())
def test_trace_invariant_under_inverse(word):
    assert trace_poly(inverse_word(word)) == trace_poly(word)


@settings(max_examples=50, deadline=None)
@given(words())
def test_trace_invariant_under_reversal(word):
    assert trace_poly(reverse_word(word)) == trace_poly(word)


@settings(max_examples=40, deadline=None)
@given(words(), st.integers(-3, 3))
def test_trace_invariant_under_rotation(word, k):
    assert trace_poly(rotate_word(word, k)) == trace_poly(word)


# -- chebyshev families ----------------------------------------------------

def test_chebyshev_seeds_and_recurrence():
    y = MultiPoly.variable("y", ("y",))
    assert chebyshev_s(0) == 1
    assert chebyshev_s(1) == y
    assert chebyshev_t(0) == 2
    assert chebyshev_t(1) == y
    for k in range(2, 9):
        assert chebyshev_s(k) == y * chebyshev_s(k - 1) - chebyshev_s(k - 2)
        assert chebyshev_t(k) == y * chebyshev_t(k - 1) - chebyshev_t(k - 2)


def test_chebyshev_negative_index_rules():
    for k in range(0, 9):
        assert chebyshev_s(-k) == -chebyshev_s(k - 2)
        assert chebyshev_t(-k) == chebyshev_t(k)


def test_chebyshev_t_from_s():
    for k in range(-5, 9):
        assert chebyshev_t(k) == chebyshev_s(k) - chebyshev_s(k - 2)


def test_chebyshev_trigonometric_values():
    for k in range(-6, 7):
        for theta in (0.3, 1.1, 2.5):
            val = chebyshev_t(k).eval_complex({"y": 2 * math.cos(theta)})
            assert abs(val - 2 * math.cos(k * theta)) < 1e-9
            sval = chebyshev_s(k).eval_complex({"y": 2 * math.cos(theta)})
            expected = math.sin((k + 1) * theta) / math.sin(theta)
            assert abs(sval - expected) < 1e-9


# -- numeric oracle --------------------------------------------------------

def test_rewrite_table_spot_check():
    assert validate_rewrite_table()


def test_numeric_oracle_on_sample_words():
    rng = random.Random(DEFAULT_SEED)
    for text in ("a b", "a b^-1 a b", "a^2 b^-3 a^-1 b",
                 "b a b a^-1 b^-1 a"):
        assert numeric_trace_oracle(w(text), rng=rng)


def test_numeric_oracle_catches_wrong_polynomial():
    rng = random.Random(DEFAULT_SEED)
    word = w("a b")
    # perturb the candidate: compare z + 1 against tr(ab)
    from knotpoly.sl2trace import numeric_word_trace, random_sl2
    wrong = Z + 1
    hits = 0
    for _ in range(10):
        ma, mb = random_sl2(rng), random_sl2(rng)
        prod_tr = (ma[0] * mb[0] + ma[1] * mb[2]
                   + ma[2] * mb[1] + ma[3] * mb[3])
        direct = numeric_word_trace(word, ma, mb)
        via = wrong.eval_complex({"x": ma[0] + ma[3], "y": mb[0] + mb[3],
                                  "z": prod_tr})
        if abs(direct - via) > 1e-6:
            hits += 1
    assert hits == 10


def test_random_reduced_word_respects_length_bound():
    rng = random.Random(1)
    for _ in range(200):
        word = random_reduced_word(rng, 12)
        assert len(word) <= 12


# -- matrix evaluation -----------------------------------------------------

def test_matrix_of_word_matches_trace():
    # exact dual route on a concrete integer representation
    from knotpoly.exactpoly import Matrix2
    ma = Matrix2(1, 1, 0, 1)
    mb = Matrix2(1, 0, 1, 1)
    word = w("a b a^-1 b^-1")
    m = matrix_of_word(word, (ma, mb))
    prod = ma * mb
    x_val, y_val, z_val = 2, 2, prod.a + prod.d
    poly_val = trace_poly(word).eval_complex(
        {"x": x_val, "y": y_val, "z": z_val})
    assert m.a + m.d == round(poly_val.real)
