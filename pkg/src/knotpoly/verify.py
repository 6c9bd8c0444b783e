"""Aggregated verification suites over every exactly checkable claim.

Each check_* function covers one acceptance surface and returns a list of
VerificationReport records; the suite_* functions compose them with the
default ranges, so one call reproduces the full ledger.  Passing an
explicit n_range narrows or widens a pretzel surface, clamped to the word
and witness expansion bounds where those apply.
"""

from __future__ import annotations

import random

from . import pretzel, twobridge
from .exactpoly import MultiPoly, exact_div
from .qtorus import (QTElem, VARS_ML, LAURENT_ML, alpha_unknot,
                     annihilation_check, epsilon_eval, JONES_UNKNOT_SEQ,
                     qt_mul, qt_sigma, sigma_symmetry_factor, tm_poly)
from .report import VerificationReport, sort_reports, status_of
from .sl2trace import (DEFAULT_SEED, numeric_word_trace, random_reduced_word,
                       random_sl2, trace_poly, word_to_string)

CLOSED_RANGE = (-6, 6)
RESULTANT_RANGE = (-8, 8)
RESULTANT_IDENTITY_RANGE = (-5, 8)
X0_RANGE = (-6, 12)
RADICAL_DIRECT_NS = (0, 1, 2)
WITNESS_RANGE = (-4, 4)
RESIDUAL_TOL = 1e-9

TWOBRIDGE_P_MAX = 45
LEADING_P_MAX = 31
IRREDUCIBILITY_P_MAX = 23

QT_RANDOM_CASES = 200
QT_WINDOW = (-20, 20)

ORACLE_WORDS = 500
ORACLE_TRIALS = 20
ORACLE_TOL = 1e-8
ORACLE_MAX_LEN = 12


def _span(n_range, default, clamp=None):
    lo, hi = default if n_range is None else n_range
    if clamp is not None:
        lo, hi = max(lo, -clamp), min(hi, clamp)
    return range(lo, hi + 1)


def check_closed_forms(n_range=None) -> list:
    """Closed P, Q_n against the trace-engine rebuilds."""
    return [pretzel.closed_form_report(n)
            for n in _span(n_range, CLOSED_RANGE,
                           clamp=pretzel.TRACE_WORD_BOUND)]


def check_resultants(n_range=None) -> list:
    """Leading coefficient and degree of Res_z(P, Q_n), plus the closed
    bracket identity on its stated range."""
    lo, hi = RESULTANT_IDENTITY_RANGE
    return [pretzel.resultant_report(n, check_identity=lo <= n <= hi)
            for n in _span(n_range, RESULTANT_RANGE)]


def check_x0_slices(n_range=None, tol: float = RESIDUAL_TOL) -> list:
    """Slice identity and square-freeness at x = 0, cosine-root residuals,
    and the direct radical certificates at the three smallest knots."""
    reports = [pretzel.x0_report(n) for n in _span(n_range, X0_RANGE)]
    for n in _span(n_range, X0_RANGE):
        details = {"tol": tol}
        worst = 0.0
        if n >= 1:
            worst = max(pretzel.u_root_residuals(n), default=0.0)
            details["u_max_residual"] = worst
        if n >= 3:
            a_worst = max(pretzel.a_root_residuals(n), default=0.0)
            details["a_max_residual"] = a_worst
            worst = max(worst, a_worst)
        if len(details) == 1:
            continue
        reports.append(VerificationReport(
            "x0-cosine-roots", f"n={n}",
            status_of(worst < tol, numeric=True), details))
    for n in RADICAL_DIRECT_NS:
        if n_range is None or n_range[0] <= n <= n_range[1]:
            reports.append(pretzel.radical_slice_report(n))
    return reports


def check_witnesses(n_range=None) -> list:
    """All three representation-witness lemmas, exactly, including the
    determinant-one checks."""
    reports = []
    for n in _span(n_range, WITNESS_RANGE, clamp=pretzel.WITNESS_BOUND):
        reports.extend(pretzel.witness_reports(n))
    return reports


def check_two_bridge(p_max: int = TWOBRIDGE_P_MAX,
                     leading_p_max: int = LEADING_P_MAX) -> list:
    """Structural suite for every valid (p, m), with the per-slice leading
    term checks on the smaller range."""
    reports = []
    for knot in twobridge.all_knots(p_max):
        reports.extend(twobridge.structural_reports(knot))
        if knot.p <= leading_p_max:
            reports.append(twobridge.leading_term_report(knot))
    return reports


def check_irreducibility(p_max: int = IRREDUCIBILITY_P_MAX) -> list:
    """Primality verdict for S_d - S_(d-1) against the factor oracle."""
    reports = []
    for p in range(3, p_max + 1, 2):
        d = (p - 1) // 2
        factors = twobridge.factor_oracle(twobridge.chebyshev_difference(d))
        prime = twobridge.is_prime(p)
        agree = (len(factors) == 1) == prime
        reports.append(VerificationReport(
            "irreducibility-crosscheck", f"p={p}", status_of(agree),
            {"p": p, "d": d, "prime": prime,
             "factor_degrees": [f.degree_in("z") for f in factors]}))
    return reports


def _random_qt_elem(rng: random.Random, nterms: int = 3) -> QTElem:
    out = QTElem.zero()
    for _ in range(nterms):
        out = out + QTElem.term(rng.randint(-4, 4),
                                t_exp=rng.randint(-3, 3),
                                m_exp=rng.randint(-2, 2),
                                l_exp=rng.randint(-2, 2))
    return out


def unknot_reports(window=QT_WINDOW) -> list:
    """The three headline unknot checks: annihilation of [n], the shape of
    the t = -1 specialization, and the symmetry factor."""
    alpha = alpha_unknot()
    reports = [annihilation_check(alpha, JONES_UNKNOT_SEQ, window)]

    eps = epsilon_eval(alpha)
    m = MultiPoly.variable("M", VARS_ML, LAURENT_ML)
    el = MultiPoly.variable("L", VARS_ML, LAURENT_ML)
    m_only_factor = m ** 2 - 1
    shape_ok = eps == m_only_factor * (el - 1)
    quotient_ok = shape_ok and exact_div(eps, el - 1) == m_only_factor
    reports.append(VerificationReport(
        "aj-shape-unknot", "alpha", status_of(shape_ok and quotient_ok),
        {"epsilon_alpha": eps.to_text(),
         "quotient_by_l_minus_1": m_only_factor.to_text(),
         "m_only": m_only_factor.degree_in("L") == 0}))

    factor = sigma_symmetry_factor(alpha)
    factor_ok = (factor is not None and factor.ordering == "LdLeft"
                 and factor.den == 1
                 and factor.num == tm_poly({(2, 2): 1}))
    reports.append(VerificationReport(
        "sigma-factor-unknot", "alpha", status_of(factor_ok),
        factor.as_dict() if factor else {"found": False}))
    return reports


def check_quantum_torus(cases: int = QT_RANDOM_CASES,
                        window=QT_WINDOW,
                        seed: int = DEFAULT_SEED) -> list:
    """Ring laws on random elements, the unknot annihilator, its shape at
    t = -1, and its symmetry factor."""
    rng = random.Random(seed)
    failures = {"associativity": [], "sigma": [], "epsilon": []}
    for i in range(cases):
        p, q, r = (_random_qt_elem(rng) for _ in range(3))
        if qt_mul(qt_mul(p, q), r) != qt_mul(p, qt_mul(q, r)):
            failures["associativity"].append(i)
        if (qt_sigma(qt_sigma(p)) != p
                or qt_sigma(qt_mul(p, q)) != qt_mul(qt_sigma(p),
                                                    qt_sigma(q))):
            failures["sigma"].append(i)
        if epsilon_eval(qt_mul(p, q)) != epsilon_eval(p) * epsilon_eval(q):
            failures["epsilon"].append(i)
    return [
        VerificationReport("qt-associativity", f"random x{cases}",
                           status_of(not failures["associativity"]),
                           {"cases": cases,
                            "failed_at": failures["associativity"][:5]}),
        VerificationReport("qt-sigma-automorphism", f"random x{cases}",
                           status_of(not failures["sigma"]),
                           {"cases": cases,
                            "failed_at": failures["sigma"][:5]}),
        VerificationReport("qt-epsilon-multiplicative", f"random x{cases}",
                           status_of(not failures["epsilon"]),
                           {"cases": cases,
                            "failed_at": failures["epsilon"][:5]}),
    ] + unknot_reports(window)


def check_trace_oracle(words: int = ORACLE_WORDS,
                       trials: int = ORACLE_TRIALS,
                       tol: float = ORACLE_TOL,
                       seed: int = DEFAULT_SEED) -> list:
    """Trace polynomials against random-matrix numeric traces."""
    rng = random.Random(seed)
    worst = 0.0
    bad = []
    for i in range(words):
        word = random_reduced_word(rng, ORACLE_MAX_LEN)
        poly = trace_poly(word)
        for _ in range(trials):
            ma = random_sl2(rng)
            mb = random_sl2(rng)
            prod_z = (ma[0] * mb[0] + ma[1] * mb[2]
                      + ma[2] * mb[1] + ma[3] * mb[3])
            point = {"x": ma[0] + ma[3], "y": mb[0] + mb[3], "z": prod_z}
            gap = abs(numeric_word_trace(word, ma, mb)
                      - poly.eval_complex(point))
            worst = max(worst, gap)
            if gap >= tol:
                bad.append(word_to_string(word))
                break
    return [VerificationReport(
        "trace-oracle", f"words={words} seed={seed}",
        status_of(not bad, numeric=True),
        {"words": words, "trials": trials, "tol": tol,
         "max_residual": worst, "failed_words": bad[:5]})]


def suite_twobridge(p_max: int = TWOBRIDGE_P_MAX) -> list:
    return sort_reports(check_two_bridge(p_max)
                        + check_irreducibility(min(p_max,
                                                   IRREDUCIBILITY_P_MAX)))


def suite_pretzel(n_range=None, tol: float = RESIDUAL_TOL) -> list:
    return sort_reports(check_closed_forms(n_range)
                        + check_resultants(n_range)
                        + check_x0_slices(n_range, tol)
                        + check_witnesses(n_range))


def suite_qtorus(seed: int = DEFAULT_SEED) -> list:
    return sort_reports(check_quantum_torus(seed=seed))


def suite_all(n_range=None, p_max: int = TWOBRIDGE_P_MAX,
              seed: int = DEFAULT_SEED, tol: float = RESIDUAL_TOL) -> list:
    return sort_reports(suite_twobridge(p_max)
                        + suite_pretzel(n_range, tol)
                        + suite_qtorus(seed)
                        + check_trace_oracle(seed=seed))
