"""Character-variety polynomials of two-bridge knots.

A two-bridge knot is indexed by coprime odd integers (p, m) with
0 < m < p.  The meridian pair (a, b) satisfies the single relation
w a = b w for the alternating word w determined by the sign sequence
eps_j = (-1)^floor(j*m/p).  The nonabelian character variety is cut out
by an alternating sum of subword traces; with both meridian traces
identified (x = tr a = tr b) the result lives in Z[x^2, z].

Everything here is exact; the only floating-point ingredient is the
high-precision factor oracle, whose output is still verified by exact
integer division before being reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import gcd

from .exactpoly import (MultiPoly, is_squarefree_in, newton_polygon,
                        rational_normalize)
from .report import (InternalInconsistencyError, STATUS_FAIL, STATUS_PASS,
                     VerificationReport, status_of)
from .sl2trace import (FreeWord, GENERATOR_A, GENERATOR_B, chebyshev_s,
                       trace_poly_with)

VARS_XZ = ("x", "z")
VARS_XZCAP = ("X", "z")

FACTOR_ORACLE_MAX_DEGREE = 24
FACTOR_ORACLE_PRECISION = 60
FACTOR_ORACLE_WINDOW = 1e-20


class IrreducibilityCertificate(Enum):
    GUARANTEED_IRREDUCIBLE_OVER_C = "guaranteed-irreducible-over-C"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TwoBridgeKnot:
    """Normal form b(p, m): p, m odd, coprime, 0 < m < p."""

    p: int
    m: int

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise ValueError(f"p must be odd and >= 3, got {self.p}")
        if self.m % 2 == 0 or not 0 < self.m < self.p:
            raise ValueError(f"m must be odd with 0 < m < p, got {self.m}")
        if gcd(self.p, self.m) != 1:
            raise ValueError(f"p and m must be coprime, got ({self.p}, {self.m})")

    @property
    def d(self) -> int:
        return (self.p - 1) // 2

    @property
    def c(self) -> int:
        return (self.m - 1) // 2

    def label(self) -> str:
        return f"b({self.p},{self.m})"


def all_knots(p_max: int):
    """Every valid (p, m) with p <= p_max, ordered by (p, m)."""
    for p in range(3, p_max + 1, 2):
        for m in range(1, p, 2):
            if gcd(p, m) == 1:
                yield TwoBridgeKnot(p, m)


def sign_sequence(knot: TwoBridgeKnot) -> tuple:
    """eps_j = (-1)^floor(j*m/p) for j = 1..p-1; always a palindrome."""
    p, m = knot.p, knot.m
    eps = tuple(-1 if ((j * m) // p) % 2 else 1 for j in range(1, p))
    if eps != eps[::-1]:
        raise InternalInconsistencyError(
            f"sign sequence of {knot.label()} is not palindromic")
    return eps


def bridge_word(knot: TwoBridgeKnot) -> FreeWord:
    """w = a^eps1 b^eps2 ... a^eps(p-2) b^eps(p-1)."""
    eps = sign_sequence(knot)
    letters = tuple((GENERATOR_A if j % 2 == 0 else GENERATOR_B, e)
                    for j, e in enumerate(eps))
    return FreeWord(letters)


@lru_cache(maxsize=None)
def _meridian_trace(letters) -> MultiPoly:
    """Word trace with both generator traces bound to x; result in (x, z)."""
    x = MultiPoly.variable("x", VARS_XZ)
    z = MultiPoly.variable("z", VARS_XZ)
    return trace_poly_with(FreeWord(letters), x, x, z)


def character_polynomial(knot: TwoBridgeKnot) -> MultiPoly:
    """Alternating sum of end-deleted subword traces, in Z[x^2, z].

    The j-th summand deletes j letters from each end of the bridge word;
    alternating generators cannot cancel, so slices stay reduced.  The
    result is checked to contain only even x-powers and to carry z-leading
    term z^d.
    """
    letters = bridge_word(knot).letters
    d = knot.d
    total = MultiPoly.const(VARS_XZ, (-1) ** d)
    for j in range(d):
        sliced = letters[j:len(letters) - j]
        term = _meridian_trace(sliced)
        total = total + term if j % 2 == 0 else total - term
    for exp in total.terms:
        if exp[0] % 2 != 0:
            raise InternalInconsistencyError(
                f"odd x-power in character polynomial of {knot.label()}")
    if total.degree_in("z") != d or total.coeff_in("z", d) != 1:
        raise InternalInconsistencyError(
            f"z-leading term of {knot.label()} is not z^{d}")
    return total


def character_polynomial_even(knot: TwoBridgeKnot) -> MultiPoly:
    """Character polynomial with x^2 collapsed to X; top part is checked
    to factor as z^(d-c) (z - X)^c."""
    phi = character_polynomial(knot)
    gamma = phi.substitute_square("x", "X")
    _check_top_part(gamma, knot.d, knot.c, knot.label())
    return gamma


def _check_top_part(poly: MultiPoly, degree: int, c: int, label: str):
    if poly.total_degree() != degree:
        raise InternalInconsistencyError(
            f"total degree of {label} is {poly.total_degree()}, wanted {degree}")
    top = MultiPoly._make(poly.vars, poly.laurent,
                          {e: v for e, v in poly.terms.items()
                           if sum(e) == degree})
    z = MultiPoly.variable("z", poly.vars)
    cap_x = MultiPoly.variable("X", poly.vars)
    expected = z ** (degree - c) * (z - cap_x) ** c
    if top != expected:
        raise InternalInconsistencyError(
            f"leading part of {label} is not z^{degree - c} (z-X)^{c}")


def x_zero_profile(knot: TwoBridgeKnot) -> VerificationReport:
    """Check phi(0, z) = S_d(z) - S_(d-1)(z)."""
    phi = character_polynomial(knot)
    at_zero = phi.substitute("x", MultiPoly.zero(VARS_XZ)).restrict(("z",))
    expected = chebyshev_difference(knot.d, "z")
    ok = at_zero == expected
    return VerificationReport(
        "x0-chebyshev", knot.label(), status_of(ok),
        {"phi_at_x0": at_zero.to_text(), "expected": expected.to_text()})


def newton_vertex_report(knot: TwoBridgeKnot) -> VerificationReport:
    """Both predicted hull corners must be vertices of the Newton polygon."""
    gamma = character_polynomial_even(knot)
    hull = newton_polygon(gamma)
    want = [(0, knot.d), (knot.c, (knot.p - knot.m) // 2)]
    present = [tuple(v) in hull.vertices for v in want]
    return VerificationReport(
        "newton-vertices", knot.label(), status_of(all(present)),
        {"vertices": [list(v) for v in hull.vertices],
         "expected": [list(v) for v in want]})


def leading_term_report(knot: TwoBridgeKnot) -> VerificationReport:
    """Degrees and leading parts of the nested palindromic subwords.

    With nu = sign sequence (indices 1..2d), the j-th word alternates
    a, b starting from a with exponents nu_j .. nu_(2d+1-j).  Its trace,
    with x^2 collapsed to X, must have total degree d+1-j and leading
    part z^(d+1-j-c_j) (z - X)^(c_j) where c_j counts sign changes
    mu_k = nu_k nu_(k+1) = -1 over k in [j, d].
    """
    eps = sign_sequence(knot)
    d = knot.d
    mu = [eps[k] * eps[k + 1] for k in range(d)]  # mu_j for j = 1..d
    per_j = []
    ok = True
    for j in range(1, d + 1):
        c_j = sum(1 for k in range(j - 1, d) if mu[k] == -1)
        exponents = eps[j - 1:2 * d + 1 - j]
        letters = tuple((GENERATOR_A if i % 2 == 0 else GENERATOR_B, e)
                        for i, e in enumerate(exponents))
        tr = _meridian_trace(letters)
        entry = {"j": j, "c_j": c_j}
        try:
            gamma = tr.substitute_square("x", "X")
            _check_top_part(gamma, d + 1 - j, c_j, f"{knot.label()} slice {j}")
            entry["ok"] = True
        except (InternalInconsistencyError, ValueError) as err:
            entry["ok"] = False
            entry["error"] = str(err)
            ok = False
        per_j.append(entry)
    return VerificationReport("leading-terms", knot.label(),
                              status_of(ok), {"per_j": per_j})


# -- irreducibility -------------------------------------------------------


def chebyshev_difference(d: int, var: str = "z") -> MultiPoly:
    """S_d - S_(d-1); the x = 0 character polynomial of b(p, 1)."""
    return chebyshev_s(d, var) - chebyshev_s(d - 1, var)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def irreducible_over_q(p: int) -> bool:
    """Irreducibility over Q of S_d - S_(d-1) for d = (p-1)/2.

    The verdict is primality of p; for d <= 11 it is cross-checked against
    the numeric factor oracle.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")
    d = (p - 1) // 2
    verdict = is_prime(p)
    if d <= 11:
        factors = factor_oracle(chebyshev_difference(d, "z"))
        if (len(factors) == 1) != verdict:
            raise InternalInconsistencyError(
                f"primality of {p} disagrees with the factor oracle")
    return verdict


def irreducibility_certificate(knot: TwoBridgeKnot) -> IrreducibilityCertificate:
    """Guaranteed C-irreducibility needs p prime and gcd(d, c) = 1,
    reading gcd(d, 0) as d."""
    g = gcd(knot.d, knot.c) if knot.c != 0 else knot.d
    if is_prime(knot.p) and g == 1:
        return IrreducibilityCertificate.GUARANTEED_IRREDUCIBLE_OVER_C
    return IrreducibilityCertificate.UNKNOWN


def _int_coeffs(f: MultiPoly) -> list:
    """Ascending integer coefficient list of a monic univariate polynomial."""
    if len(f.vars) != 1:
        raise ValueError("factor oracle needs a univariate polynomial")
    if f.is_zero():
        raise ValueError("factor oracle needs a nonzero polynomial")
    deg = f.degree_in(f.vars[0])
    coeffs = [0] * (deg + 1)
    for (e,), c in f.terms.items():
        if e < 0:
            raise ValueError("factor oracle needs ordinary exponents")
        if not isinstance(c, int):
            raise ValueError("factor oracle needs integer coefficients")
        coeffs[e] = c
    if coeffs[deg] != 1:
        raise ValueError("factor oracle needs a monic polynomial")
    return coeffs


def _poly_from_coeffs(coeffs, var) -> MultiPoly:
    return MultiPoly((var,), {(i,): c for i, c in enumerate(coeffs)})


def _divide_int_poly(num, den):
    """Exact division of ascending int coefficient lists, or None."""
    num = list(num)
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return None
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1 - dn, -1, -1):
        c = num[k + dn]
        if c % den[dn] != 0:
            return None
        q = c // den[dn]
        quot[k] = q
        for i, dc in enumerate(den):
            num[k + i] -= q * dc
    if any(num):
        return None
    return quot


def factor_oracle(f: MultiPoly, max_subset: int | None = None) -> list:
    """Monic integer factorization by root clustering.

    Roots are found to 60 decimal digits; subsets whose elementary
    symmetric functions round to integers within 1e-20 propose factors,
    which are only accepted after exact integer division.  Subset size is
    searched in increasing order, so accepted factors are irreducible.
    """
    import mpmath

    coeffs = _int_coeffs(f)
    var = f.vars[0]
    deg = len(coeffs) - 1
    if deg > FACTOR_ORACLE_MAX_DEGREE:
        raise ValueError(f"degree {deg} exceeds {FACTOR_ORACLE_MAX_DEGREE}")
    if deg == 0:
        return []
    desc = list(reversed(coeffs))
    roots = None
    with mpmath.workdps(FACTOR_ORACLE_PRECISION):
        for extra in (0, 60, 180):
            try:
                roots = mpmath.polyroots([mpmath.mpf(c) for c in desc],
                                         maxsteps=100 + 10 * deg,
                                         extraprec=120 + extra)
                break
            except mpmath.libmp.libhyper.NoConvergence:
                continue
        if roots is None:
            raise ArithmeticError("root finder failed to converge")

        remaining = list(coeffs)
        pool = list(roots)
        factors = []
        size = 1
        while len(pool) > 0:
            if size > len(pool) // 2 or \
                    (max_subset is not None and size > max_subset):
                factors.append(list(remaining))
                break
            found = False
            for subset in combinations(range(len(pool)), size):
                prod = [mpmath.mpc(1)]
                for idx in subset:
                    r = pool[idx]
                    nxt = [mpmath.mpc(0)] * (len(prod) + 1)
                    for i, c in enumerate(prod):
                        nxt[i] -= c * r
                        nxt[i + 1] += c
                    prod = nxt
                cand = []
                good = True
                for c in prod:
                    n = mpmath.nint(c.real)
                    if abs(c.real - n) > FACTOR_ORACLE_WINDOW or \
                            abs(c.imag) > FACTOR_ORACLE_WINDOW:
                        good = False
                        break
                    cand.append(int(n))
                if not good:
                    continue
                quot = _divide_int_poly(remaining, cand)
                if quot is None:
                    continue
                factors.append(cand)
                remaining = quot
                pool = [r for i, r in enumerate(pool) if i not in subset]
                found = True
                break
            if not found:
                size += 1

    polys = [_poly_from_coeffs(c, var) for c in factors]
    product = MultiPoly.const((var,), 1)
    for q in polys:
        product = product * q
    if product != f:
        raise InternalInconsistencyError("factor product mismatch")
    return sorted(polys, key=lambda q: (q.degree_in(var), q.to_text()))


# -- aggregated per-knot reports -----------------------------------------


def structural_reports(knot: TwoBridgeKnot) -> list:
    """Construction-time checks plus the hull and slice claims."""
    reports = []
    try:
        phi = character_polynomial(knot)
        gamma = character_polynomial_even(knot)
        reports.append(VerificationReport(
            "character-structure", knot.label(), STATUS_PASS,
            {"phi": phi.to_text(), "gamma": gamma.to_text(),
             "z_degree": knot.d}))
    except InternalInconsistencyError as err:
        reports.append(VerificationReport(
            "character-structure", knot.label(), STATUS_FAIL,
            {"error": str(err)}))
        return reports
    reports.append(x_zero_profile(knot))
    reports.append(newton_vertex_report(knot))
    return reports
