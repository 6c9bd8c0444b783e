"""Quantum torus arithmetic and the recurrence picture for the unknot.

Elements of the quantum torus generated by L, M over Laurent polynomials
in t, subject to LM = t^2 ML, are kept in the normal form
sum_j a_j(t, M) L^j.  Multiplication twists the right factor by
a(M) L^k . b(M) L^l = a(M) b(t^2k M) L^(k+l).  The module also provides
the sigma involution, the skein-image elements, specialization at t = -1,
the left action on integer-indexed sequences, (1+t)-adic heights in the
localization, and the weak division step used for recurrence ideals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .exactpoly import MultiPoly, exact_div, poly_gcd
from .report import VerificationReport, status_of

VARS_TM = ("t", "M")
LAURENT_TM = (True, True)
VARS_ML = ("M", "L")
LAURENT_ML = (True, True)
VARS_T = ("t",)
LAURENT_T = (True,)

INFINITE = math.inf


def tm_poly(terms: Mapping) -> MultiPoly:
    """Laurent polynomial in (t, M) from {(t_exp, m_exp): coeff}."""
    return MultiPoly(VARS_TM, terms, LAURENT_TM)


def _tm_const(value) -> MultiPoly:
    return MultiPoly.const(VARS_TM, value, LAURENT_TM)


def _coerce_tm(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value.extend_to(VARS_TM, LAURENT_TM)
    return _tm_const(value)


def _eval_t_minus_one(p: MultiPoly) -> MultiPoly:
    """Substitute t = -1; result is a Laurent polynomial in M."""
    terms = {}
    for (et, em), c in p.terms.items():
        key = (em,)
        terms[key] = terms.get(key, 0) + (c if et % 2 == 0 else -c)
    return MultiPoly(("M",), terms, (True,))


class QTElem:
    """Normal-form element sum_j a_j(t, M) L^j of the quantum torus."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for j, coeff in terms.items():
                poly = _coerce_tm(coeff)
                if not poly.is_zero():
                    clean[int(j)] = poly
        self.terms = clean

    @classmethod
    def zero(cls) -> "QTElem":
        return cls()

    @classmethod
    def one(cls) -> "QTElem":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff, t_exp: int = 0, m_exp: int = 0,
             l_exp: int = 0) -> "QTElem":
        """coeff * t^t_exp M^m_exp L^l_exp as a one-term element."""
        return cls({l_exp: tm_poly({(t_exp, m_exp): coeff})})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, l_exp: int) -> MultiPoly:
        return self.terms.get(l_exp, MultiPoly.zero(VARS_TM, LAURENT_TM))

    def l_degree(self):
        return max(self.terms) if self.terms else None

    def l_min_degree(self):
        return min(self.terms) if self.terms else None

    def _coerce(self, other):
        if isinstance(other, QTElem):
            return other
        if isinstance(other, (int, Fraction, MultiPoly)):
            return QTElem({0: other})
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for j, coeff in other.terms.items():
            terms[j] = terms.get(j, 0) + coeff
        return QTElem(terms)

    __radd__ = __add__

    def __neg__(self):
        return QTElem({j: -c for j, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return qt_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = QTElem.one()
        for _ in range(n):
            result = qt_mul(result, self)
        return result

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for j in sorted(self.terms, reverse=True):
            coeff = f"({self.terms[j].to_text()})"
            if j == 0:
                parts.append(coeff)
            elif j == 1:
                parts.append(f"{coeff}*L")
            else:
                parts.append(f"{coeff}*L^{j}")
        return " + ".join(parts)

    def to_json_dict(self) -> dict:
        return {"terms": [{"l": j, "coeff": self.terms[j].to_json_dict()}
                          for j in sorted(self.terms)]}

    def __repr__(self):
        return f"<QTElem {self.to_text()}>"


def _twist(a: MultiPoly, k: int) -> MultiPoly:
    """a(t, M) -> a(t, t^2k M), the conjugation by L^k."""
    if k == 0:
        return a
    return a.substitute("M", tm_poly({(2 * k, 1): 1}))


def qt_mul(p: QTElem, q: QTElem) -> QTElem:
    """Product in normal form via a(M)L^k . b(M)L^l = a b(t^2k M) L^(k+l)."""
    terms: dict = {}
    for k, a in p.terms.items():
        for l, b in q.terms.items():
            j = k + l
            terms[j] = terms.get(j, 0) + a * _twist(b, k)
    return QTElem(terms)


def qt_sigma(p: QTElem) -> QTElem:
    """The involution t^c M^k L^l -> t^c M^-k L^-l, linear over t."""
    terms = {}
    for j, a in p.terms.items():
        flipped = MultiPoly(VARS_TM,
                            {(et, -em): c for (et, em), c in a.terms.items()},
                            LAURENT_TM)
        terms[-j] = flipped
    return QTElem(terms)


def upsilon(k: int, l: int) -> QTElem:
    """Skein image (-1)^(k+l) t^(kl) (M^k L^l + M^-k L^-l); sigma-invariant."""
    if math.gcd(abs(k), abs(l)) != 1:
        raise ValueError(f"(k, l) = ({k}, {l}) is not a primitive pair")
    sign = 1 if (k + l) % 2 == 0 else -1
    return (QTElem.term(sign, t_exp=k * l, m_exp=k, l_exp=l)
            + QTElem.term(sign, t_exp=k * l, m_exp=-k, l_exp=-l))


def epsilon_eval(p: QTElem) -> MultiPoly:
    """Specialize t = -1; the twist dies and the result is a commutative
    Laurent polynomial in (M, L)."""
    terms: dict = {}
    for j, a in p.terms.items():
        for (et, em), c in a.terms.items():
            key = (em, j)
            terms[key] = terms.get(key, 0) + (c if et % 2 == 0 else -c)
    return MultiPoly(VARS_ML, terms, LAURENT_ML)


# -- sequences and the left action ----------------------------------------


@dataclass(frozen=True)
class DiscreteSeq:
    """Integer-indexed sequence of Laurent polynomials in t."""

    evaluator: Callable

    def __call__(self, n: int) -> MultiPoly:
        value = self.evaluator(n)
        if isinstance(value, MultiPoly):
            return value.extend_to(VARS_T, LAURENT_T)
        return MultiPoly.const(VARS_T, value, LAURENT_T)

    @classmethod
    def constant(cls, value) -> "DiscreteSeq":
        return cls(lambda n: value)


def act(p: QTElem, f: DiscreteSeq, n: int) -> MultiPoly:
    """Left action: (a(t, M) L^j f)(n) = a(t, t^2n) f(n + j)."""
    total = MultiPoly.zero(VARS_T, LAURENT_T)
    for j, a in p.terms.items():
        scalar = a.substitute("M", tm_poly({(2 * n, 0): 1})).restrict(VARS_T)
        total = total + scalar * f(n + j)
    return total


def apply_seq(p: QTElem, f: DiscreteSeq) -> DiscreteSeq:
    """The sequence p f, so that ((pq) f)(n) = (p (q f))(n)."""
    return DiscreteSeq(lambda n: act(p, f, n))


def jones_unknot(n: int) -> MultiPoly:
    """[n] = (t^2n - t^-2n) / (t^2 - t^-2), expanded exactly."""
    if n == 0:
        return MultiPoly.zero(VARS_T, LAURENT_T)
    if n < 0:
        return -jones_unknot(-n)
    return MultiPoly(VARS_T,
                     {(2 * k,): 1 for k in range(-(n - 1), n, 2)},
                     LAURENT_T)


JONES_UNKNOT_SEQ = DiscreteSeq(jones_unknot)


def alpha_unknot() -> QTElem:
    """(M^2 - 1) L - (t^2 M^2 - t^-2), the minimal inhomogeneous
    recurrence annihilating [n]."""
    return QTElem({1: tm_poly({(0, 2): 1, (0, 0): -1}),
                   0: tm_poly({(2, 2): -1, (-2, 0): 1})})


def annihilation_check(p: QTElem, f: DiscreteSeq,
                       window=(-20, 20)) -> VerificationReport:
    """Exact check that (p f)(n) = 0 for every n in the closed window."""
    lo, hi = window
    nonzero = [n for n in range(lo, hi + 1)
               if not act(p, f, n).is_zero()]
    return VerificationReport(
        "annihilation-window", f"window={lo}..{hi}",
        status_of(not nonzero),
        {"window": [lo, hi], "nonzero_at": nonzero})


# -- sigma symmetry of a recurrence ---------------------------------------


def _canonical_fraction(num: MultiPoly, den: MultiPoly):
    """Reduce num/den and normalize so den is an integer-coprime ordinary
    polynomial with positive leading coefficient and zero minimum degree."""
    g = poly_gcd(num, den)
    num = exact_div(num, g)
    den = exact_div(den, g)
    for var in den.vars:
        shift = den.min_degree_in(var)
        if shift:
            den = den.mul_var_power(var, -shift)
            num = num.mul_var_power(var, -shift)
    lead = max(den.terms, key=lambda e: (sum(e), e))
    scale = Fraction(den.terms[lead])
    if scale != 1:
        num = num * (Fraction(1) / scale)
        den = den * (Fraction(1) / scale)
    return num, den


@dataclass(frozen=True)
class SigmaFactor:
    """Result of the sigma-symmetry test: p = h * (L^d and sigma(p) in the
    stated ordering), with h in the fraction field of (t, M)."""

    ordering: str
    num: MultiPoly
    den: MultiPoly
    m_only: bool

    def h_text(self) -> str:
        if self.den == 1:
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def as_dict(self) -> dict:
        return {"ordering": self.ordering, "h": self.h_text(),
                "m_only": self.m_only}


def sigma_symmetry_factor(p: QTElem):
    """Find h with p = h sigma(p) L^d (LdRight) or p = h L^d sigma(p)
    (LdLeft), trying the orderings in that order; None when neither is
    proportional."""
    if p.is_zero():
        raise ValueError("zero element has no symmetry factor")
    if p.l_min_degree() != 0:
        raise ValueError("minimal L-exponent must be 0")
    d = p.l_degree()
    sp = qt_sigma(p)
    ld = QTElem({d: 1})
    for ordering, s in (("LdRight", qt_mul(sp, ld)),
                        ("LdLeft", qt_mul(ld, sp))):
        if set(s.terms) != set(p.terms):
            continue
        h_num = p.terms[0]
        h_den = s.terms[0]
        if all(p.terms[i] * h_den == s.terms[i] * h_num for i in p.terms):
            num, den = _canonical_fraction(h_num, h_den)
            m_only = all(poly.degree_in("t") == 0
                         and poly.min_degree_in("t") == 0
                         for poly in (num, den))
            return SigmaFactor(ordering, num, den, m_only)
    return None


# -- the localization at t = -1 and weak division -------------------------


class LocalizedScalar:
    """Fraction f/g of Laurent polynomials in (t, M) with g(-1, M) != 0.

    Stored reduced and canonically normalized, so equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _coerce_tm(num)
        den = _coerce_tm(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = _tm_const(1)
        else:
            num, den = _canonical_fraction(num, den)
        if _eval_t_minus_one(den).is_zero():
            raise ValueError("denominator vanishes at t = -1")
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, LocalizedScalar):
            return other
        if isinstance(other, (int, Fraction, MultiPoly)):
            return LocalizedScalar(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LocalizedScalar(self.num * other.den + other.num * self.den,
                               self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return LocalizedScalar(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LocalizedScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return LocalizedScalar(self.num * other.den, self.den * other.num)

    def twist(self, k: int) -> "LocalizedScalar":
        return LocalizedScalar(_twist(self.num, k), _twist(self.den, k))

    def to_text(self) -> str:
        if self.den == 1:
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def __repr__(self):
        return f"<LocalizedScalar {self.to_text()}>"


def height(value):
    """(1+t)-adic valuation; zero maps to INFINITE.

    Accepts a LocalizedScalar or anything coercible to a (t, M) Laurent
    polynomial; the denominator contributes 0 by the localization
    invariant.
    """
    if isinstance(value, LocalizedScalar):
        if value.is_zero():
            return INFINITE
        return height(value.num)
    p = _coerce_tm(value)
    if p.is_zero():
        return INFINITE
    one_plus_t = tm_poly({(1, 0): 1, (0, 0): 1})
    v = 0
    while _eval_t_minus_one(p).is_zero():
        p = exact_div(p, one_plus_t)
        v += 1
    return v


class WeakDivisionError(ArithmeticError):
    """A weak-division precondition failed; the message names the clause."""


def _localized_terms(p) -> dict:
    if isinstance(p, QTElem):
        return {j: LocalizedScalar(a) for j, a in p.terms.items()}
    out = {}
    for j, a in p.items():
        a = a if isinstance(a, LocalizedScalar) else LocalizedScalar(a)
        if not a.is_zero():
            out[int(j)] = a
    return out


def _localized_mul(p: dict, q: dict) -> dict:
    terms: dict = {}
    for k, a in p.items():
        for l, b in q.items():
            j = k + l
            prod = a * b.twist(k)
            terms[j] = terms.get(j, prod * 0) + prod
    return {j: c for j, c in terms.items() if not c.is_zero()}


def _localized_add(p: dict, q: dict) -> dict:
    terms = dict(p)
    for j, c in q.items():
        terms[j] = terms.get(j, c * 0) + c
    return {j: c for j, c in terms.items() if not c.is_zero()}


def _localized_sub(p: dict, q: dict) -> dict:
    return _localized_add(p, {j: -c for j, c in q.items()})


def weak_divide(f, g):
    """One weak-division step: f = q g + r with q = a L^k, deg r < deg f.

    f and g are QTElem or {L-exponent: LocalizedScalar} maps, polynomial
    in L.  The quotient coefficient is the leading-coefficient ratio in
    the localization at t = -1 (twisted by L^k); the height precondition
    keeps that ratio inside the localization.  The returned pair is
    {L-exponent: LocalizedScalar} maps, and the identity f = q g + r is
    re-verified exactly before returning.
    """
    fl = _localized_terms(f)
    gl = _localized_terms(g)
    if not gl:
        raise WeakDivisionError("precondition failed: g is zero")
    if not fl:
        raise WeakDivisionError("precondition failed: f is zero")
    if min(fl) < 0 or min(gl) < 0:
        raise WeakDivisionError(
            "precondition failed: negative L-exponents present")
    deg_f, deg_g = max(fl), max(gl)
    if deg_f < deg_g:
        raise WeakDivisionError("precondition failed: deg f < deg g")
    if height(fl[deg_f]) < height(gl[deg_g]):
        raise WeakDivisionError(
            "precondition failed: leading height of f below that of g")
    k = deg_f - deg_g
    a = fl[deg_f] / gl[deg_g].twist(k)
    q = {k: a}
    r = _localized_sub(fl, _localized_mul(q, gl))
    if r and max(r) >= deg_f:
        raise WeakDivisionError("degree did not drop after division")
    if _localized_sub(fl, _localized_add(_localized_mul(q, gl), r)):
        raise WeakDivisionError("postcondition failed: f != q g + r")
    return q, r
