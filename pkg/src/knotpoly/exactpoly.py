"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial carries a fixed, ordered tuple of variable names and a sparse
term map from exponent tuples to rational coefficients.  Coefficients are
``int`` or ``fractions.Fraction`` (integral values are stored as ``int``);
zero coefficients are never stored, so equality is plain dict comparison.
Per-variable Laurent flags admit negative exponents.

The module also provides rational functions (always reduced, denominator
normalized), 2x2 matrices over any ring-like entries, primitive-PRS gcd,
Sylvester/Bareiss resultants, Newton polygons via monotone chain, and a
canonical text / JSON serialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Mapping, Sequence

Coeff = "int | Fraction"
Exponent = "tuple[int, ...]"


class AlignmentError(ValueError):
    """Raised when an operation mixes polynomials over different variables."""


class LaurentInputError(ValueError):
    """Raised when an operation does not support negative exponents."""


class UndefinedGcdError(ValueError):
    """Raised for gcd(0, 0)."""


class UndefinedResultantError(ValueError):
    """Raised when a resultant input is zero or degenerate."""


class EmptyPolynomialError(ValueError):
    """Raised when a nonzero polynomial is required."""


class InexactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class EvaluationError(ValueError):
    """Raised when a numeric evaluation point misses a variable."""


def _canon_coeff(c):
    """Normalize a rational coefficient; integral Fractions collapse to int."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return int(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    """Sparse exact polynomial over an ordered variable tuple."""

    __slots__ = ("vars", "laurent", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping | None = None,
                 laurent: Sequence[bool] | None = None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError(f"duplicate variable names in {vars}")
        laurent = tuple(bool(b) for b in laurent) if laurent is not None \
            else (False,) * len(vars)
        if len(laurent) != len(vars):
            raise ValueError("laurent flags must match the variable list")
        tt = {}
        n = len(vars)
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match {vars}")
            c = _canon_coeff(c)
            if c == 0:
                continue
            for e, flag in zip(exp, laurent):
                if e < 0 and not flag:
                    raise LaurentInputError(
                        f"negative exponent {exp} without Laurent flag")
            tt[exp] = tt.get(exp, 0) + c
        self.vars = vars
        self.laurent = laurent
        self.terms = {e: c for e, c in tt.items() if c != 0}

    @classmethod
    def _make(cls, vars, laurent, terms):
        """Fast internal constructor; trusts exponent validity."""
        obj = object.__new__(cls)
        obj.vars = vars
        obj.laurent = laurent
        obj.terms = {e: cc for e, c in terms.items()
                     if (cc := _canon_coeff(c)) != 0}
        return obj

    @classmethod
    def zero(cls, vars, laurent=None):
        return cls(vars, {}, laurent)

    @classmethod
    def const(cls, vars, value, laurent=None):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): value}, laurent)

    @classmethod
    def variable(cls, name, vars, laurent=None):
        vars = tuple(vars)
        exp = tuple(1 if v == name else 0 for v in vars)
        if name not in vars:
            raise ValueError(f"{name!r} not in {vars}")
        return cls(vars, {exp: 1}, laurent)

    # -- predicates and shape helpers ------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self):
        if self.is_zero():
            return 0
        if not self.is_constant():
            raise ValueError(f"{self.to_text()} is not constant")
        return next(iter(self.terms.values()))

    def _index(self, var) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise AlignmentError(f"{var!r} not in {self.vars}") from None

    def degree_in(self, var):
        """Largest exponent of var, or None for the zero polynomial."""
        if not self.terms:
            return None
        i = self._index(var)
        return max(e[i] for e in self.terms)

    def min_degree_in(self, var):
        if not self.terms:
            return None
        i = self._index(var)
        return min(e[i] for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def coeff_in(self, var, k: int) -> "MultiPoly":
        """Coefficient of var**k, on the same variable list (var zeroed)."""
        i = self._index(var)
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == k:
                out[exp[:i] + (0,) + exp[i + 1:]] = c
        return MultiPoly._make(self.vars, self.laurent, out)

    def leading_coeff_in(self, var) -> "MultiPoly":
        d = self.degree_in(var)
        if d is None:
            return MultiPoly.zero(self.vars, self.laurent)
        return self.coeff_in(var, d)

    def as_univariate(self, var) -> dict:
        """Split into {exponent of var: coefficient polynomial}."""
        i = self._index(var)
        buckets: dict[int, dict] = {}
        for exp, c in self.terms.items():
            buckets.setdefault(exp[i], {})[exp[:i] + (0,) + exp[i + 1:]] = c
        return {k: MultiPoly._make(self.vars, self.laurent, t)
                for k, t in sorted(buckets.items())}

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars or other.laurent != self.laurent:
                raise AlignmentError(
                    f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.vars, other, self.laurent)
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other, self.laurent)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                out[e] = v + c
        return MultiPoly._make(self.vars, self.laurent, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._make(self.vars, self.laurent,
                               {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = -c
            else:
                out[e] = v - c
        return MultiPoly._make(self.vars, self.laurent, out)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly.zero(self.vars, self.laurent)
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (ea, ca), = a.items()
            if all(e == 0 for e in ea):
                out = {e: ca * c for e, c in b.items()}
            else:
                out = {tuple(x + y for x, y in zip(ea, e)): ca * c
                       for e, c in b.items()}
            return MultiPoly._make(self.vars, self.laurent, out)
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e)
                if v is None:
                    out[e] = ca * cb
                else:
                    out[e] = v + ca * cb
        return MultiPoly._make(self.vars, self.laurent, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self._monomial_inverse() ** (-n)
        result = MultiPoly.const(self.vars, 1, self.laurent)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _monomial_inverse(self) -> "MultiPoly":
        """Inverse of a single-term unit; requires Laurent room."""
        if len(self.terms) != 1:
            raise InexactDivisionError(
                f"{self.to_text()} is not an invertible monomial")
        (exp, c), = self.terms.items()
        inv_exp = tuple(-e for e in exp)
        for e, flag in zip(inv_exp, self.laurent):
            if e < 0 and not flag:
                raise LaurentInputError(
                    "monomial inverse needs a Laurent variable")
        return MultiPoly._make(self.vars, self.laurent,
                               {inv_exp: Fraction(1, 1) / c})

    def mul_var_power(self, var, k: int) -> "MultiPoly":
        """Multiply by var**k (k may be negative on a Laurent variable)."""
        if k == 0 or not self.terms:
            return self
        i = self._index(var)
        if k < 0 and not self.laurent[i]:
            if self.min_degree_in(var) + k < 0:
                raise LaurentInputError(
                    f"shift by {var}^{k} leaves the polynomial ring")
        out = {e[:i] + (e[i] + k,) + e[i + 1:]: c
               for e, c in self.terms.items()}
        return MultiPoly._make(self.vars, self.laurent, out)

    # -- calculus and substitution ---------------------------------------

    def derivative(self, var) -> "MultiPoly":
        """Formal derivative; rejects negative exponents in var."""
        i = self._index(var)
        out = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e < 0:
                raise LaurentInputError(
                    f"derivative in {var} undefined for exponent {e}")
            if e == 0:
                continue
            out[exp[:i] + (e - 1,) + exp[i + 1:]] = c * e
        return MultiPoly._make(self.vars, self.laurent, out)

    def substitute(self, var, replacement: "MultiPoly") -> "MultiPoly":
        """Replace var by a polynomial (negative powers need a unit monomial)."""
        i = self._index(var)
        if not isinstance(replacement, MultiPoly):
            raise TypeError("replacement must be a MultiPoly")
        merged_vars, merged_laurent = _merge_vars(self, replacement)
        base = self.extend_to(merged_vars, merged_laurent)
        rep = replacement.extend_to(merged_vars, merged_laurent)
        bi = merged_vars.index(var)
        pows: dict[int, MultiPoly] = {0: MultiPoly.const(merged_vars, 1,
                                                         merged_laurent)}

        def power(k: int) -> MultiPoly:
            if k in pows:
                return pows[k]
            if k > 0:
                pows[k] = power(k - 1) * rep
            else:
                inv = rep._monomial_inverse()
                pows[k] = power(k + 1) * inv
            return pows[k]

        total = MultiPoly.zero(merged_vars, merged_laurent)
        for exp, c in base.terms.items():
            k = exp[bi]
            stripped = MultiPoly._make(
                merged_vars, merged_laurent,
                {exp[:bi] + (0,) + exp[bi + 1:]: c})
            total = total + stripped * power(k)
        return total

    def substitute_square(self, var, new_name) -> "MultiPoly":
        """Rewrite even powers var**(2k) as new_name**k."""
        i = self._index(var)
        if new_name in self.vars:
            raise ValueError(f"{new_name!r} already present")
        out = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e % 2 != 0:
                raise ValueError(
                    f"odd exponent of {var} in {self.to_text()}")
            out[exp[:i] + (e // 2,) + exp[i + 1:]] = c
        vars = self.vars[:i] + (new_name,) + self.vars[i + 1:]
        return MultiPoly._make(vars, self.laurent, out)

    def extend_to(self, vars, laurent=None) -> "MultiPoly":
        """Re-express over a superset (or reordering) of the variables."""
        vars = tuple(vars)
        laurent = tuple(laurent) if laurent is not None else \
            tuple(self.laurent[self.vars.index(v)] if v in self.vars else False
                  for v in vars)
        positions = []
        for v in self.vars:
            if v not in vars:
                raise AlignmentError(f"{v!r} missing from target {vars}")
            positions.append(vars.index(v))
        for v, old_flag in zip(self.vars, self.laurent):
            if old_flag and not laurent[vars.index(v)]:
                if self.min_degree_in(v) is not None and \
                        self.min_degree_in(v) < 0:
                    raise LaurentInputError(
                        f"cannot drop Laurent flag on {v!r}")
        n = len(vars)
        out = {}
        for exp, c in self.terms.items():
            new = [0] * n
            for pos, e in zip(positions, exp):
                new[pos] = e
            out[tuple(new)] = c
        return MultiPoly._make(vars, laurent, out)

    def restrict(self, vars) -> "MultiPoly":
        """Drop variables that appear with exponent zero everywhere."""
        vars = tuple(vars)
        keep = []
        for v in self.vars:
            if v in vars:
                keep.append(self.vars.index(v))
            elif any(exp[self.vars.index(v)] != 0 for exp in self.terms):
                raise ValueError(f"{v!r} occurs with nonzero exponent")
        laurent = tuple(self.laurent[self.vars.index(v)] for v in vars)
        out = {}
        for exp, c in self.terms.items():
            out[tuple(exp[self.vars.index(v)] for v in vars)] = c
        return MultiPoly._make(vars, laurent, out)

    # -- numeric evaluation ----------------------------------------------

    def eval_complex(self, point: Mapping[str, complex]) -> complex:
        """Horner-style evaluation at complex arguments."""
        for v in self.vars:
            if v not in point:
                raise EvaluationError(f"no value for {v!r}")
        if not self.terms:
            return 0j

        def rec(items, depth):
            if depth == len(self.vars):
                total = 0j
                for _, c in items:
                    total += complex(float(c) if not isinstance(c, Fraction)
                                     else c.numerator / c.denominator)
                return total
            groups: dict[int, list] = {}
            for exp, c in items:
                groups.setdefault(exp[depth], []).append((exp, c))
            z = complex(point[self.vars[depth]])
            exps = sorted(groups, reverse=True)
            acc = 0j
            prev = None
            for e in exps:
                if prev is not None:
                    acc *= z ** (prev - e)
                acc += rec(groups[e], depth + 1)
                prev = e
            return acc * z ** exps[-1]

        return rec(list(self.terms.items()), 0)

    # -- serialization ---------------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]),
                      reverse=True)

    def to_text(self) -> str:
        """Canonical text form, descending graded-lexicographic order."""
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self._sorted_terms():
            factors = [f"{v}^{e}" if e not in (0, 1) else v
                       for v, e in zip(self.vars, exp) if e != 0]
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        terms = []
        for exp, c in self._sorted_terms():
            f = Fraction(c)
            terms.append({"exp": list(exp), "num": str(f.numerator),
                          "den": str(f.denominator)})
        return {"vars": list(self.vars), "terms": terms}

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "MultiPoly":
        vars = tuple(doc["vars"])
        terms = {}
        mins = [0] * len(vars)
        for t in doc["terms"]:
            exp = tuple(int(e) for e in t["exp"])
            mins = [min(m, e) for m, e in zip(mins, exp)]
            terms[exp] = Fraction(int(t["num"]), int(t["den"]))
        laurent = tuple(m < 0 for m in mins)
        return cls(vars, terms, laurent)

    def __repr__(self):
        return f"<MultiPoly {self.to_text()}>"


def _merge_vars(p: MultiPoly, q: MultiPoly):
    vars = list(p.vars)
    for v in q.vars:
        if v not in vars:
            vars.append(v)
    vars = tuple(vars)
    laurent = []
    for v in vars:
        flag = False
        if v in p.vars and p.laurent[p.vars.index(v)]:
            flag = True
        if v in q.vars and q.laurent[q.vars.index(v)]:
            flag = True
        laurent.append(flag)
    return vars, tuple(laurent)


def align(p: MultiPoly, q: MultiPoly):
    """Bring two polynomials onto a common variable list."""
    vars, laurent = _merge_vars(p, q)
    return p.extend_to(vars, laurent), q.extend_to(vars, laurent)


# -- exact division and gcd ----------------------------------------------


def _laurent_shifts(p: MultiPoly):
    """Per-variable shifts making all exponents nonnegative."""
    shifts = [0] * len(p.vars)
    for exp in p.terms:
        for i, e in enumerate(exp):
            if e < shifts[i]:
                shifts[i] = e
    return tuple(shifts)


def _shift_all(p: MultiPoly, shifts):
    if all(s == 0 for s in shifts):
        return p
    out = {tuple(e - s for e, s in zip(exp, shifts)): c
           for exp, c in p.terms.items()}
    return MultiPoly._make(p.vars, p.laurent, out)


def exact_div(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Exact quotient p/q; raises InexactDivisionError on any remainder."""
    if not isinstance(q, MultiPoly):
        q = MultiPoly.const(p.vars, q, p.laurent)
    if q.vars != p.vars:
        raise AlignmentError(f"variable mismatch: {p.vars} vs {q.vars}")
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    sp, sq = _laurent_shifts(p), _laurent_shifts(q)
    p0, q0 = _shift_all(p, sp), _shift_all(q, sq)
    shift = tuple(a - b for a, b in zip(sp, sq))
    for s, flag in zip(shift, p.laurent):
        if s < 0 and not flag:
            raise InexactDivisionError("quotient leaves the polynomial ring")

    lead_q = max(q0.terms, key=_grlex_key)
    cq = q0.terms[lead_q]
    quot: dict = {}
    rem = dict(p0.terms)
    while rem:
        lead_r = max(rem, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(lead_r, lead_q))
        if any(d < 0 for d in diff):
            raise InexactDivisionError(
                f"{q.to_text()} does not divide {p.to_text()}")
        c = Fraction(rem[lead_r]) / cq
        quot[diff] = quot.get(diff, 0) + c
        for eq, cc in q0.terms.items():
            e = tuple(a + b for a, b in zip(diff, eq))
            v = rem.get(e, 0) - c * cc
            if v == 0:
                rem.pop(e, None)
            else:
                rem[e] = v
    out = {tuple(e + s for e, s in zip(exp, shift)): c
           for exp, c in quot.items()}
    return MultiPoly._make(p.vars, p.laurent, out)


def divides(q: MultiPoly, p: MultiPoly) -> bool:
    try:
        exact_div(p, q)
        return True
    except InexactDivisionError:
        return False


def _scalar_content(p: MultiPoly) -> Fraction:
    num = 0
    den = 1
    for c in p.terms.values():
        f = Fraction(c)
        num = _int_gcd(num, abs(f.numerator))
        den = den * f.denominator // _int_gcd(den, f.denominator)
    return Fraction(num, den)


def rational_normalize(p: MultiPoly) -> MultiPoly:
    """Scale to coprime integer coefficients with positive leading term."""
    if p.is_zero():
        return p
    content = _scalar_content(p)
    lead = max(p.terms, key=_grlex_key)
    if p.terms[lead] < 0:
        content = -content
    return MultiPoly._make(p.vars, p.laurent,
                           {e: Fraction(c) / content
                            for e, c in p.terms.items()})


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Full multivariate gcd, normalized via rational_normalize."""
    if p.vars != q.vars:
        raise AlignmentError(f"variable mismatch: {p.vars} vs {q.vars}")
    if p.is_zero() and q.is_zero():
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    if p.is_zero():
        return rational_normalize(_shift_all(q, _laurent_shifts(q)))
    if q.is_zero():
        return rational_normalize(_shift_all(p, _laurent_shifts(p)))
    p = _shift_all(p, _laurent_shifts(p))
    q = _shift_all(q, _laurent_shifts(q))
    for v in p.vars:
        dp = p.degree_in(v)
        dq = q.degree_in(v)
        if (dp or 0) > 0 or (dq or 0) > 0:
            return _gcd_in_core(p, q, v)
    return MultiPoly.const(p.vars, 1, p.laurent)


def _content_and_primitive(p: MultiPoly, var):
    coeffs = list(p.as_univariate(var).values())
    content = coeffs[0]
    for c in coeffs[1:]:
        content = poly_gcd(content, c)
        if content.is_constant():
            break
    content = rational_normalize(content)
    # normalize to coprime integer coefficients: scalar content is a unit
    # over Q, but leaving it in makes the remainder sequence blow up
    return content, rational_normalize(exact_div(p, content))


def _prem(a: MultiPoly, b: MultiPoly, var) -> MultiPoly:
    """Pseudo-remainder style reduction of a by b in var (up to units)."""
    db = b.degree_in(var)
    lb = b.leading_coeff_in(var)
    r = a
    while not r.is_zero():
        dr = r.degree_in(var)
        if dr < db:
            break
        lr = r.leading_coeff_in(var)
        r = lb * r - (lr * b).mul_var_power(var, dr - db)
    return r


def _gcd_in_core(p: MultiPoly, q: MultiPoly, var) -> MultiPoly:
    cp, pp = _content_and_primitive(p, var)
    cq, qq = _content_and_primitive(q, var)
    cont = poly_gcd(cp, cq)
    a, b = pp, qq
    if (a.degree_in(var) or 0) < (b.degree_in(var) or 0):
        a, b = b, a
    while not b.is_zero():
        if b.degree_in(var) == 0:
            a = MultiPoly.const(p.vars, 1, p.laurent)
            break
        r = _prem(a, b, var)
        if r.is_zero():
            a = b
            break
        a, b = b, _content_and_primitive(r, var)[1]
    return rational_normalize(cont * a)


def gcd_in(p: MultiPoly, q: MultiPoly, var) -> MultiPoly:
    """Gcd computed with var as the main variable (primitive PRS)."""
    if p.vars != q.vars:
        raise AlignmentError(f"variable mismatch: {p.vars} vs {q.vars}")
    if p.is_zero() and q.is_zero():
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    p._index(var)
    if p.is_zero() or q.is_zero():
        return poly_gcd(p, q)
    p = _shift_all(p, _laurent_shifts(p))
    q = _shift_all(q, _laurent_shifts(q))
    return _gcd_in_core(p, q, var)


def is_squarefree_in(p: MultiPoly, var) -> bool:
    """True when gcd(p, dp/dvar) is constant in var."""
    if p.is_zero():
        raise EmptyPolynomialError("square-freeness of 0 is undefined")
    d = p.derivative(var)
    if d.is_zero():
        return p.degree_in(var) == 0
    g = gcd_in(p, d, var)
    return g.degree_in(var) == 0


def squarefree_part_in(p: MultiPoly, var) -> MultiPoly:
    """p with repeated factors in var collapsed (p / gcd(p, p'))."""
    if p.is_zero():
        raise EmptyPolynomialError("square-free part of 0 is undefined")
    d = p.derivative(var)
    if d.is_zero():
        return rational_normalize(p)
    g = gcd_in(p, d, var)
    return rational_normalize(exact_div(p, g))


# -- resultants -----------------------------------------------------------


def resultant_in(p: MultiPoly, q: MultiPoly, var) -> MultiPoly:
    """Sylvester resultant in var; p-coefficient rows first, descending.

    The determinant is evaluated by fraction-free Bareiss elimination, so
    every intermediate division is exact.
    """
    if p.vars != q.vars:
        raise AlignmentError(f"variable mismatch: {p.vars} vs {q.vars}")
    if p.is_zero() or q.is_zero():
        raise UndefinedResultantError("resultant of the zero polynomial")
    i = p._index(var)
    if p.laurent[i] and (p.min_degree_in(var) < 0 or q.min_degree_in(var) < 0):
        raise LaurentInputError("resultant requires ordinary exponents in var")
    m = p.degree_in(var)
    n = q.degree_in(var)
    if m == 0 and n == 0:
        raise UndefinedResultantError("both inputs constant in " + str(var))
    pc = [p.coeff_in(var, m - k) for k in range(m + 1)]
    qc = [q.coeff_in(var, n - k) for k in range(n + 1)]
    size = m + n
    zero = MultiPoly.zero(p.vars, p.laurent)
    mat = []
    for r in range(n):
        row = [zero] * size
        for k, c in enumerate(pc):
            row[r + k] = c
        mat.append(row)
    for r in range(m):
        row = [zero] * size
        for k, c in enumerate(qc):
            row[r + k] = c
        mat.append(row)
    return _bareiss_det(mat)


def _bareiss_det(mat) -> MultiPoly:
    size = len(mat)
    if size == 0:
        raise UndefinedResultantError("empty Sylvester matrix")
    sample = mat[0][0]
    one = MultiPoly.const(sample.vars, 1, sample.laurent)
    sign = 1
    prev = one
    for k in range(size - 1):
        if mat[k][k].is_zero():
            pivot = next((r for r in range(k + 1, size)
                          if not mat[r][k].is_zero()), None)
            if pivot is None:
                return MultiPoly.zero(sample.vars, sample.laurent)
            mat[k], mat[pivot] = mat[pivot], mat[k]
            sign = -sign
        pk = mat[k][k]
        for r in range(k + 1, size):
            for c in range(k + 1, size):
                mat[r][c] = exact_div(pk * mat[r][c] - mat[r][k] * mat[k][c],
                                      prev)
            mat[r][k] = MultiPoly.zero(sample.vars, sample.laurent)
        prev = pk
    det = mat[size - 1][size - 1]
    return det if sign > 0 else -det


# -- Newton polygon -------------------------------------------------------


@dataclass(frozen=True)
class NewtonPolygon:
    """Convex hull of a bivariate support, vertices counterclockwise."""

    vertices: tuple

    def contains(self, pt) -> bool:
        pts = self.vertices
        if len(pts) == 1:
            return tuple(pt) == pts[0]
        if len(pts) == 2:
            (x0, y0), (x1, y1) = pts
            px, py = pt
            if (x1 - x0) * (py - y0) - (y1 - y0) * (px - x0) != 0:
                return False
            dot = (px - x0) * (x1 - x0) + (py - y0) * (y1 - y0)
            return 0 <= dot <= (x1 - x0) ** 2 + (y1 - y0) ** 2
        px, py = pt
        for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1]):
            if (x1 - x0) * (py - y0) - (y1 - y0) * (px - x0) < 0:
                return False
        return True


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(p: MultiPoly) -> NewtonPolygon:
    """Monotone-chain hull of the support; collinear points are dropped."""
    if len(p.vars) != 2:
        raise ValueError("Newton polygon requires exactly two variables")
    if any(p.laurent):
        raise LaurentInputError("Newton polygon requires ordinary exponents")
    if p.is_zero():
        raise EmptyPolynomialError("Newton polygon of 0 is undefined")
    pts = sorted(p.terms)
    if len(pts) == 1:
        return NewtonPolygon((pts[0],))
    lower = []
    for pt in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], pt) <= 0:
            lower.pop()
        lower.append(pt)
    upper = []
    for pt in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], pt) <= 0:
            upper.pop()
        upper.append(pt)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 0:
        hull = [pts[0], pts[-1]]
    elif len(hull) == 1:
        hull = [pts[0], pts[-1]]
    if hull[0] == hull[-1] and len(hull) > 1:
        hull = hull[:-1]
    return NewtonPolygon(tuple(hull))


# -- rational functions ---------------------------------------------------


class RationalFunction:
    """Reduced fraction of polynomials with a normalized denominator.

    The denominator's graded-lex leading coefficient is scaled to 1, so the
    representation is canonical and structural equality is valid.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        if not isinstance(num, MultiPoly) or not isinstance(den, MultiPoly):
            raise TypeError("numerator and denominator must be MultiPoly")
        if num.vars != den.vars:
            raise AlignmentError(
                f"variable mismatch: {num.vars} vs {den.vars}")
        if any(num.laurent):
            raise LaurentInputError("RationalFunction needs ordinary vars")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = MultiPoly.const(num.vars, 1)
        else:
            g = poly_gcd(num, den)
            if not (g.is_constant() and g.constant_value() == 1):
                num = exact_div(num, g)
                den = exact_div(den, g)
        lead = max(den.terms, key=_grlex_key)
        lc = Fraction(den.terms[lead])
        if lc != 1:
            num = MultiPoly._make(num.vars, num.laurent,
                                  {e: Fraction(c) / lc
                                   for e, c in num.terms.items()})
            den = MultiPoly._make(den.vars, den.laurent,
                                  {e: Fraction(c) / lc
                                   for e, c in den.terms.items()})
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "RationalFunction":
        return cls(p, MultiPoly.const(p.vars, 1))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.num.vars != self.num.vars:
                raise AlignmentError("variable mismatch")
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.from_poly(
                MultiPoly.const(self.num.vars, other))
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

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
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

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
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return RationalFunction(self.den, self.num)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.reciprocal() ** (-n)
        result = RationalFunction.from_poly(
            MultiPoly.const(self.num.vars, 1))
        for _ in range(n):
            result = result * self
        return result

    def to_text(self) -> str:
        if self.den == 1:
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def __repr__(self):
        return f"<RationalFunction {self.to_text()}>"


# -- 2x2 matrices ---------------------------------------------------------


def _reciprocal_entry(x):
    if isinstance(x, RationalFunction):
        return x.reciprocal()
    if isinstance(x, MultiPoly):
        if not x.is_constant():
            raise InexactDivisionError(
                "matrix determinant is not an invertible scalar")
        return MultiPoly.const(x.vars, Fraction(1, 1) / x.constant_value(),
                               x.laurent)
    return Fraction(1, 1) / x


@dataclass(frozen=True)
class Matrix2:
    """2x2 matrix over any entries supporting ring arithmetic."""

    a: object
    b: object
    c: object
    d: object

    def __mul__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(self.a * other.a + self.b * other.c,
                       self.a * other.b + self.b * other.d,
                       self.c * other.a + self.d * other.c,
                       self.c * other.b + self.d * other.d)

    def __add__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(self.a + other.a, self.b + other.b,
                       self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(self.a - other.a, self.b - other.b,
                       self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Matrix2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, s):
        return Matrix2(self.a * s, self.b * s, self.c * s, self.d * s)

    def det(self):
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> "Matrix2":
        return Matrix2(self.d, -self.b, -self.c, self.a)

    def inverse(self) -> "Matrix2":
        dt = self.det()
        adj = self.adjugate()
        if dt == 1:
            return adj
        return adj.scale(_reciprocal_entry(dt))

    def identity_like(self) -> "Matrix2":
        one = self.a ** 0
        zero = self.a * 0
        return Matrix2(one, zero, zero, one)

    def __pow__(self, n: int) -> "Matrix2":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.identity_like()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def entries(self):
        return (self.a, self.b, self.c, self.d)
