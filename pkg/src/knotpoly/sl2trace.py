"""Trace polynomials of words in a rank-2 free group.

For matrices A, B in SL2 every word trace is a polynomial in
x = tr(A), y = tr(B), z = tr(AB).  Left multiplication by a generator maps
the module spanned by {1, A, B, AB} to itself, so a word is folded one
letter at a time through a 4-tuple of coefficient polynomials; the trace
is then 2*alpha + x*beta + y*gamma + z*delta.  The fold is linear in the
word length.

Generators are indexed 0 ("a") and 1 ("b").  The rewrite table is not
taken on faith: validate_rewrite_table and the numeric oracle check it
against random SL2(C) matrix pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .exactpoly import Matrix2, MultiPoly

VARS_XYZ = ("x", "y", "z")

DEFAULT_SEED = 20231115
DEFAULT_ORACLE_TOL = 1e-8

GENERATOR_A = 0
GENERATOR_B = 1


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word; letters are (generator, nonzero exponent)."""

    letters: tuple

    def __post_init__(self):
        for gen, exp in self.letters:
            if gen not in (GENERATOR_A, GENERATOR_B):
                raise ValueError(f"unknown generator {gen!r}")
            if exp == 0:
                raise ValueError("zero exponent letter")
        for (g1, _), (g2, _) in zip(self.letters, self.letters[1:]):
            if g1 == g2:
                raise ValueError("adjacent letters share a generator")

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def is_empty(self) -> bool:
        return not self.letters


def reduce_word(letters: Iterable) -> FreeWord:
    """Freely reduce a letter sequence, merging and cancelling as needed."""
    stack: list[list[int]] = []
    for gen, exp in letters:
        gen = int(gen)
        exp = int(exp)
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return FreeWord(tuple((g, e) for g, e in stack))


def reverse_word(word: FreeWord) -> FreeWord:
    return FreeWord(tuple(reversed(word.letters)))


def inverse_word(word: FreeWord) -> FreeWord:
    return FreeWord(tuple((g, -e) for g, e in reversed(word.letters)))


def rotate_word(word: FreeWord, k: int) -> FreeWord:
    """Cyclic rotation by k letters (re-reduced at the seam)."""
    letters = word.letters
    if not letters:
        return word
    k %= len(letters)
    return reduce_word(letters[k:] + letters[:k])


def word_from_string(text: str) -> tuple[FreeWord, tuple[str, ...]]:
    """Parse a word like "a b^-1 a" with caller-chosen generator names.

    Returns the reduced word and the generator names in order of first
    appearance (at most two distinct names are allowed).
    """
    names: list[str] = []
    letters = []
    for token in text.split():
        if "^" in token:
            name, _, raw = token.partition("^")
            exp = int(raw)
        else:
            name, exp = token, 1
        if not name:
            raise ValueError(f"malformed token {token!r}")
        if name not in names:
            if len(names) == 2:
                raise ValueError("more than two distinct generators")
            names.append(name)
        letters.append((names.index(name), exp))
    return reduce_word(letters), tuple(names)


def word_to_string(word: FreeWord, names=("a", "b")) -> str:
    """Inverse of word_from_string; the empty word prints as "1"."""
    if word.is_empty():
        return "1"
    return " ".join(names[gen] if exp == 1 else f"{names[gen]}^{exp}"
                    for gen, exp in word.letters)


# -- symbolic fold --------------------------------------------------------


def _fold(letters, px: MultiPoly, py: MultiPoly, pz: MultiPoly):
    """Coefficients (alpha, beta, gamma, delta) of the word on {1,A,B,AB}."""
    zero = px * 0
    one = px ** 0
    al, be, ga, de = one, zero, zero, zero
    z_xy = pz - px * py
    for gen, exp in reversed(letters):
        step = abs(exp)
        if gen == GENERATOR_A and exp > 0:
            for _ in range(step):
                al, be, ga, de = -be, al + px * be, -de, ga + px * de
        elif gen == GENERATOR_A:
            for _ in range(step):
                al, be, ga, de = px * al + be, -al, px * ga + de, -ga
        elif exp > 0:
            for _ in range(step):
                al, be, ga, de = (z_xy * be - ga - px * de,
                                  py * be + de,
                                  al + px * be + py * ga + pz * de,
                                  -be)
        else:
            for _ in range(step):
                al, be, ga, de = (py * al - z_xy * be + ga + px * de,
                                  -de,
                                  -al - px * be - pz * de,
                                  py * de + be)
    return al, be, ga, de


def trace_poly_with(word: FreeWord, px: MultiPoly, py: MultiPoly,
                    pz: MultiPoly) -> MultiPoly:
    """Trace of the word with tr(A), tr(B), tr(AB) bound to given polynomials."""
    al, be, ga, de = _fold(word.letters, px, py, pz)
    return 2 * al + px * be + py * ga + pz * de


@lru_cache(maxsize=None)
def _trace_xyz(letters) -> MultiPoly:
    x = MultiPoly.variable("x", VARS_XYZ)
    y = MultiPoly.variable("y", VARS_XYZ)
    z = MultiPoly.variable("z", VARS_XYZ)
    return trace_poly_with(FreeWord(letters), x, y, z)


def trace_poly(word: FreeWord) -> MultiPoly:
    """Trace polynomial in (x, y, z); input is reduced defensively."""
    if not isinstance(word, FreeWord):
        word = reduce_word(word)
    else:
        word = reduce_word(word.letters)
    return _trace_xyz(word.letters)


# -- Chebyshev-like polynomials ------------------------------------------


@lru_cache(maxsize=None)
def chebyshev_s(k: int, var: str = "y") -> MultiPoly:
    """S_k: S_0 = 1, S_1 = y, S_(k+1) = y*S_k - S_(k-1), both directions."""
    vars = (var,)
    if k < -1:
        return -chebyshev_s(-k - 2, var)
    if k == -1:
        return MultiPoly.zero(vars)
    y = MultiPoly.variable(var, vars)
    prev, cur = MultiPoly.const(vars, 1), y
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, y * cur - prev
    return cur


def chebyshev_t(k: int, var: str = "y") -> MultiPoly:
    """T_k = S_k - S_(k-2); T_0 = 2, T_1 = y, T_(-k) = T_k."""
    return chebyshev_s(k, var) - chebyshev_s(k - 2, var)


# -- symbolic word evaluation in a matrix group ---------------------------


def matrix_of_word(word: FreeWord, mats: Sequence[Matrix2]) -> Matrix2:
    """Product of assigned matrices over the word letters."""
    result = mats[0].identity_like()
    for gen, exp in word.letters:
        result = result * (mats[gen] ** exp)
    return result


# -- numeric oracle -------------------------------------------------------


def _num_mul(m1, m2):
    a1, b1, c1, d1 = m1
    a2, b2, c2, d2 = m2
    return (a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
            c1 * a2 + d1 * c2, c1 * b2 + d1 * d2)


def _num_inv(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def _num_pow(m, n):
    if n < 0:
        m, n = _num_inv(m), -n
    out = (1 + 0j, 0j, 0j, 1 + 0j)
    for _ in range(n):
        out = _num_mul(out, m)
    return out


def random_sl2(rng: random.Random, max_entry: float = 1.0):
    """Random SL2(C) matrix with all entries in the unit box.

    The entry solving det = 1 is resampled until it also fits the box;
    without the bound its heavy tail makes long word products lose more
    than half the double-precision mantissa.
    """
    while True:
        a = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        b = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        c = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(a) < 0.1:
            continue
        d = (1 + b * c) / a
        if abs(d) <= max_entry:
            return (a, b, c, d)


def numeric_word_trace(word: FreeWord, ma, mb) -> complex:
    out = (1 + 0j, 0j, 0j, 1 + 0j)
    for gen, exp in word.letters:
        base = ma if gen == GENERATOR_A else mb
        out = _num_mul(out, _num_pow(base, exp))
    return out[0] + out[3]


def numeric_trace_oracle(word: FreeWord, trials: int = 20,
                         tol: float = DEFAULT_ORACLE_TOL,
                         rng: random.Random | None = None) -> bool:
    """Compare trace_poly against random-matrix numeric traces."""
    if rng is None:
        rng = random.Random(DEFAULT_SEED)
    poly = trace_poly(word)
    for _ in range(trials):
        ma = random_sl2(rng)
        mb = random_sl2(rng)
        x = ma[0] + ma[3]
        y = mb[0] + mb[3]
        prod = _num_mul(ma, mb)
        z = prod[0] + prod[3]
        direct = numeric_word_trace(word, ma, mb)
        via_poly = poly.eval_complex({"x": x, "y": y, "z": z})
        if abs(direct - via_poly) >= tol:
            return False
    return True


def random_reduced_word(rng: random.Random, max_len: int = 12) -> FreeWord:
    """Random freely reduced word with at most max_len single letters."""
    n = rng.randint(1, max_len)
    letters = [(rng.randrange(2), rng.choice((-1, 1))) for _ in range(n)]
    return reduce_word(letters)


def validate_rewrite_table(rng: random.Random | None = None,
                           words: int = 25,
                           tol: float = DEFAULT_ORACLE_TOL) -> bool:
    """Spot-check the fold table against the numeric oracle."""
    if rng is None:
        rng = random.Random(DEFAULT_SEED)
    basics = [
        FreeWord(()),
        FreeWord(((GENERATOR_A, 1),)),
        FreeWord(((GENERATOR_B, 1),)),
        FreeWord(((GENERATOR_A, 1), (GENERATOR_B, 1))),
        FreeWord(((GENERATOR_A, 1), (GENERATOR_B, -1))),
        FreeWord(((GENERATOR_A, 1), (GENERATOR_B, 1),
                  (GENERATOR_A, -1), (GENERATOR_B, -1))),
    ]
    for word in basics:
        if not numeric_trace_oracle(word, trials=8, tol=tol, rng=rng):
            return False
    for _ in range(words):
        if not numeric_trace_oracle(random_reduced_word(rng), trials=4,
                                    tol=tol, rng=rng):
            return False
    return True
