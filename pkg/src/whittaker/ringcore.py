"""Exact coefficient arithmetic.

Scalars are elements of the fraction field of multivariate Laurent
polynomials over Q.  The variable alphabet is ordered with u first (u^2
plays the role of the residue cardinality q, so half-integral powers of q
are Laurent monomials in u) followed by parameter names in lexicographic
order.  No floating point is used anywhere; coefficients are
fractions.Fraction.

The module also provides truncated power series in t = q^(-s) and Euler
factors (multisets of reciprocal roots), with exact comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .errors import (
    DivisionByZero,
    InsufficientOrder,
    InvalidCharacter,
    PoleAtPoint,
    UnboundVariable,
)

Rational = Union[int, Fraction]

# A monomial is a tuple of (variable, exponent) pairs, sorted by variable
# order, with all exponents nonzero.  The empty tuple is the unit monomial.
Mono = tuple


def _var_key(name: str):
    # u sorts before every parameter name; parameters sort lexicographically
    return (0,) if name == "u" else (1, name)


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            e = ea + eb
            if e:
                out.append((va, e))
            i += 1
            j += 1
        elif _var_key(va) < _var_key(vb):
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_inv(a: Mono) -> Mono:
    return tuple((v, -e) for v, e in a)


def _mono_deg(a: Mono) -> int:
    return sum(e for _, e in a)


def _print_key(mono: Mono, varlist):
    # total degree, then exponent vector; higher exponents on earlier
    # variables print first within a degree
    exps = dict(mono)
    return (_mono_deg(mono), tuple(-exps.get(v, 0) for v in varlist))


def _grlex_key(mono: Mono, varlist):
    exps = dict(mono)
    return (_mono_deg(mono), tuple(exps.get(v, 0) for v in varlist))


class LaurentPoly:
    """Sparse multivariate Laurent polynomial with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = terms

    @staticmethod
    def const(c: Rational) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly({(): c} if c else {})

    @staticmethod
    def variable(name: str) -> "LaurentPoly":
        return LaurentPoly({((name, 1),): Fraction(1)})

    @staticmethod
    def monomial(exps: Mapping[str, int], coeff: Rational = 1) -> "LaurentPoly":
        coeff = Fraction(coeff)
        if not coeff:
            return LaurentPoly({})
        mono = tuple(sorted(((v, e) for v, e in exps.items() if e), key=lambda p: _var_key(p[0])))
        return LaurentPoly({mono: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(()) == 1

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def const_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.terms[()]

    def variables(self):
        seen = set()
        for mono in self.terms:
            for v, _ in mono:
                seen.add(v)
        return sorted(seen, key=_var_key)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.terms, other.terms
        if not a or not b:
            return _P_ZERO
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (ma, ca), = a.items()
            if not ma and ca == 1:
                return LaurentPoly(dict(b))
            return LaurentPoly({_mono_mul(ma, mb): ca * cb for mb, cb in b.items()})
        out: dict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = _mono_mul(ma, mb)
                s = out.get(m)
                if s is None:
                    out[m] = ca * cb
                else:
                    s = s + ca * cb
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return LaurentPoly(out)

    def scale(self, c: Rational) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return _P_ZERO
        if c == 1:
            return self
        return LaurentPoly({m: v * c for m, v in self.terms.items()})

    def mul_mono(self, mono: Mono) -> "LaurentPoly":
        if not mono:
            return self
        return LaurentPoly({_mono_mul(m, mono): c for m, c in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = _P_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def min_exponents(self) -> dict:
        """Per-variable minimum exponent over all terms (absence counts as 0)."""
        mins: dict = {}
        allvars = set()
        for mono in self.terms:
            for v, _ in mono:
                allvars.add(v)
        for v in allvars:
            mins[v] = min(dict(mono).get(v, 0) for mono in self.terms)
        return {v: e for v, e in mins.items() if e}

    def evaluate(self, bindings: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            val = c
            for v, e in mono:
                base = bindings[v]
                if base == 0 and e < 0:
                    raise PoleAtPoint(f"variable {v} is 0 with negative exponent")
                val = val * Fraction(base) ** e
            total += val
        return total

    def __str__(self):
        return _format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({_format_poly(self)!r})"


_P_ZERO = LaurentPoly({})
_P_ONE = LaurentPoly({(): Fraction(1)})


def _format_mono(mono: Mono) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)


def _format_term(c: Fraction, mono: Mono) -> str:
    if not mono:
        return str(c)
    ms = _format_mono(mono)
    if c == 1:
        return ms
    if c == -1:
        return "-" + ms
    return f"{c}*{ms}"


def _format_poly(p: LaurentPoly) -> str:
    if not p.terms:
        return "0"
    varlist = p.variables()
    items = sorted(p.terms.items(), key=lambda mc: _print_key(mc[0], varlist))
    parts = [_format_term(items[0][1], items[0][0])]
    for mono, c in items[1:]:
        if c < 0:
            parts.append(" - " + _format_term(-c, mono))
        else:
            parts.append(" + " + _format_term(c, mono))
    return "".join(parts)


# ---------------------------------------------------------------------------
# ordinary-polynomial division and gcd (used for canonical fraction reduction)
# ---------------------------------------------------------------------------

def _lead(p: LaurentPoly, varlist):
    return max(p.terms, key=lambda m: _grlex_key(m, varlist))


def _exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Exact division of ordinary polynomials; g must divide f."""
    if g.is_zero():
        raise DivisionByZero("polynomial division by zero")
    if f.is_zero():
        return _P_ZERO
    if g.is_const():
        return f.scale(1 / g.const_value())
    varlist = sorted(set(f.variables()) | set(g.variables()), key=_var_key)
    mg = _lead(g, varlist)
    cg = g.terms[mg]
    mg_exp = dict(mg)
    r = dict(f.terms)
    q: dict = {}
    while r:
        rp = LaurentPoly(r)
        mr = _lead(rp, varlist)
        cr = r[mr]
        quot_exp = dict(mr)
        for v, e in mg_exp.items():
            quot_exp[v] = quot_exp.get(v, 0) - e
        if any(e < 0 for e in quot_exp.values()):
            raise ValueError("inexact polynomial division")
        qm = tuple(sorted(((v, e) for v, e in quot_exp.items() if e), key=lambda p: _var_key(p[0])))
        qc = cr / cg
        q[qm] = qc
        r = (rp - LaurentPoly({qm: qc}) * g).terms
    return LaurentPoly(q)


def _deg_in(p: LaurentPoly, x: str) -> int:
    d = 0
    for mono in p.terms:
        d = max(d, dict(mono).get(x, 0))
    return d


def _coeff_of(p: LaurentPoly, x: str, d: int) -> LaurentPoly:
    out = {}
    for mono, c in p.terms.items():
        e = dict(mono)
        if e.pop(x, 0) == d:
            rest = tuple(sorted(e.items(), key=lambda kv: _var_key(kv[0])))
            out[rest] = c
    return LaurentPoly(out)


def _xpow(x: str, d: int) -> LaurentPoly:
    if d == 0:
        return _P_ONE
    return LaurentPoly({((x, d),): Fraction(1)})


def _prem(f: LaurentPoly, g: LaurentPoly, x: str) -> LaurentPoly:
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f reduced modulo g."""
    dg = _deg_in(g, x)
    lg = _coeff_of(g, x, dg)
    delta = _deg_in(f, x) - dg
    r = f
    steps = 0
    while not r.is_zero():
        dr = _deg_in(r, x)
        if dr < dg:
            break
        lr = _coeff_of(r, x, dr)
        r = lg * r - lr * _xpow(x, dr - dg) * g
        steps += 1
    pad = delta + 1 - steps
    if pad > 0 and not r.is_zero():
        r = lg ** pad * r
    return r


def _unit_normalize(p: LaurentPoly) -> LaurentPoly:
    """Scale to integer-primitive form with positive leading coefficient."""
    if p.is_zero():
        return p
    coeffs = list(p.terms.values())
    lden = 1
    for c in coeffs:
        lden = lden * c.denominator // math.gcd(lden, c.denominator)
    gnum = 0
    for c in coeffs:
        gnum = math.gcd(gnum, c.numerator * (lden // c.denominator))
    factor = Fraction(lden, gnum)
    varlist = p.variables()
    if p.terms[_lead(p, varlist)] < 0:
        factor = -factor
    return p.scale(factor)


def _content(p: LaurentPoly, x: str) -> LaurentPoly:
    c = _P_ZERO
    for d in range(_deg_in(p, x) + 1):
        coeff = _coeff_of(p, x, d)
        if not coeff.is_zero():
            c = _poly_gcd(c, coeff)
            if c.is_const():
                break
    return c


def _poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """GCD of ordinary polynomials over Q, via the subresultant remainder sequence."""
    if f.is_zero():
        return _unit_normalize(g)
    if g.is_zero():
        return _unit_normalize(f)
    if f.is_const() or g.is_const():
        return _P_ONE
    varlist = sorted(set(f.variables()) | set(g.variables()), key=_var_key)
    x = varlist[-1]
    fc = _content(f, x)
    gc = _content(g, x)
    cont = _poly_gcd(fc, gc)
    a = _exact_div(f, fc)
    b = _exact_div(g, gc)
    if _deg_in(a, x) < _deg_in(b, x):
        a, b = b, a
    lead_factor = _P_ONE
    power_factor = _P_ONE
    while True:
        if b.is_zero():
            result = a
            break
        if _deg_in(b, x) == 0:
            result = _P_ONE
            break
        delta = _deg_in(a, x) - _deg_in(b, x)
        r = _prem(a, b, x)
        a, b = b, (_P_ZERO if r.is_zero()
                   else _exact_div(r, lead_factor * power_factor ** delta))
        lead_factor = _coeff_of(a, x, _deg_in(a, x))
        if delta == 1:
            power_factor = lead_factor
        elif delta > 1:
            power_factor = _exact_div(lead_factor ** delta, power_factor ** (delta - 1))
    if not result.is_const():
        result = _exact_div(result, _content(result, x))
    return _unit_normalize(cont * result)


# ---------------------------------------------------------------------------
# the fraction field
# ---------------------------------------------------------------------------

def _canonicalize(num: LaurentPoly, den: LaurentPoly):
    """Reduce num/den to canonical form.

    The canonical denominator is an ordinary polynomial (minimum exponent 0
    in each variable, so Laurent monomials never stay below the bar),
    integer-primitive with positive leading coefficient, and coprime to the
    polynomial part of the numerator.
    """
    if den.is_zero():
        raise DivisionByZero("scalar division by zero")
    if num.is_zero():
        return _P_ZERO, _P_ONE
    dshift = den.min_exponents()
    if dshift:
        inv = tuple(sorted(((v, -e) for v, e in dshift.items()), key=lambda p: _var_key(p[0])))
        den = den.mul_mono(inv)
        num = num.mul_mono(inv)
    if den.is_const():
        return num.scale(1 / den.const_value()), _P_ONE
    nshift = num.min_exponents()
    nmono: Mono = ()
    if nshift:
        nmono = tuple(sorted(nshift.items(), key=lambda p: _var_key(p[0])))
        num = num.mul_mono(_mono_inv(nmono))
    g = _poly_gcd(num, den)
    if not g.is_one():
        num = _exact_div(num, g)
        den = _exact_div(den, g)
    if den.is_const():
        num = num.scale(1 / den.const_value()).mul_mono(nmono)
        return num, _P_ONE
    varlist = den.variables()
    lc = den.terms[_lead(den, varlist)]
    lden = 1
    for c in den.terms.values():
        lden = lden * c.denominator // math.gcd(lden, c.denominator)
    gnum = 0
    for c in den.terms.values():
        gnum = math.gcd(gnum, c.numerator * (lden // c.denominator))
    factor = Fraction(lden, gnum)
    if lc < 0:
        factor = -factor
    return num.scale(factor).mul_mono(nmono), den.scale(factor)


class Scalar:
    """Element of the fraction field of Laurent polynomials over Q.

    Immutable; all arithmetic is exact and returns canonical values, so
    instances are safe to share between threads and to use as dict keys.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = _P_ONE if den is None else _coerce_poly(den)
        self.num, self.den = _canonicalize(num, den)
        self._hash = None

    @classmethod
    def _make(cls, num: LaurentPoly, den: LaurentPoly) -> "Scalar":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def of(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._make(LaurentPoly.const(value), _P_ONE)
        if isinstance(value, LaurentPoly):
            return cls._make(*_canonicalize(value, _P_ONE))
        raise TypeError(f"cannot coerce {type(value).__name__} to Scalar")

    @classmethod
    def variable(cls, name: str) -> "Scalar":
        if name in ("t", "q"):
            raise InvalidCharacter(f"'{name}' is reserved and cannot be a scalar variable")
        return cls._make(LaurentPoly.variable(name), _P_ONE)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: Rational = 1) -> "Scalar":
        return cls._make(LaurentPoly.monomial(exps, coeff), _P_ONE)

    @classmethod
    def rational(cls, p: Rational, q: Rational = 1) -> "Scalar":
        return cls._make(LaurentPoly.const(Fraction(p) / Fraction(q)), _P_ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_rational(self) -> bool:
        return self.den.is_one() and self.num.is_const()

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational constant")
        return self.num.const_value()

    def is_variable(self) -> bool:
        if not self.den.is_one() or len(self.num.terms) != 1:
            return False
        (mono, c), = self.num.terms.items()
        return c == 1 and len(mono) == 1 and mono[0][1] == 1

    def variables(self):
        return sorted(set(self.num.variables()) | set(self.den.variables()), key=_var_key)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.terms.items()),
                               frozenset(self.den.terms.items())))
        return self._hash

    def __neg__(self):
        return Scalar._make(-self.num, self.den)

    def __add__(self, other):
        other = Scalar.of(other)
        if self.den.is_one() and other.den.is_one():
            return Scalar._make(self.num + other.num, _P_ONE)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Scalar.of(other))

    def __rsub__(self, other):
        return (-self) + Scalar.of(other)

    def __mul__(self, other):
        other = Scalar.of(other)
        if self.den.is_one() and other.den.is_one():
            return Scalar._make(self.num * other.num, _P_ONE)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar.of(other)
        if other.is_zero():
            raise DivisionByZero("scalar division by zero")
        if other.den.is_one() and len(other.num.terms) == 1:
            (mono, c), = other.num.terms.items()
            inv = LaurentPoly({_mono_inv(mono): 1 / c})
            if self.den.is_one():
                return Scalar._make(self.num * inv, _P_ONE)
            return Scalar(self.num * inv, self.den)
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return Scalar.of(other) / self

    def inverse(self) -> "Scalar":
        return Scalar.of(1) / self

    def __pow__(self, k: int):
        if k == 0:
            return Scalar.of(1)
        if k < 0:
            return self.inverse() ** (-k)
        if self.den.is_one():
            return Scalar._make(self.num ** k, _P_ONE)
        return Scalar(self.num ** k, self.den ** k)

    def substitute(self, bindings: Mapping[str, Rational]) -> Fraction:
        """Evaluate at a rational point (exact); see module-level substitute."""
        frac_bindings = {}
        for v in self.variables():
            if v not in bindings:
                raise UnboundVariable(f"no binding for variable {v}")
            frac_bindings[v] = Fraction(bindings[v])
        dval = self.den.evaluate(frac_bindings)
        if dval == 0:
            raise PoleAtPoint("denominator vanishes at the given point")
        return self.num.evaluate(frac_bindings) / dval

    def _needs_parens(self) -> bool:
        if not self.den.is_one() or len(self.num.terms) > 1:
            return True
        if self.num.is_zero():
            return False
        (_, c), = self.num.terms.items()
        return c < 0

    def __str__(self):
        if self.den.is_one():
            return _format_poly(self.num)
        ns = _format_poly(self.num)
        if len(self.num.terms) > 1:
            ns = f"({ns})"
        return f"{ns}/({_format_poly(self.den)})"

    def __repr__(self):
        return f"Scalar({self!s})"


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Field arithmetic dispatch: op is one of add, sub, mul, div."""
    a, b = Scalar.of(a), Scalar.of(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def substitute(p: Scalar, bindings: Mapping[str, Rational]) -> Fraction:
    """Exact rational value of p at the point given by bindings.

    Every variable of p must be bound (UnboundVariable otherwise); the
    denominator must not vanish at the point (PoleAtPoint otherwise).
    """
    return Scalar.of(p).substitute(bindings)


def u_power(e: int) -> Scalar:
    """The Laurent monomial u^e (u^2 stands for the residue cardinality q)."""
    return Scalar.monomial({"u": e})


# ---------------------------------------------------------------------------
# truncated power series in t = q^(-s)
# ---------------------------------------------------------------------------

class TruncatedSeries:
    """Formal power series in t, stored through a fixed truncation order.

    Exactly order+1 coefficients are stored; arithmetic never reads beyond
    the truncation order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable):
        coeffs = tuple(Scalar.of(c) for c in coeffs)
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(coeffs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    @staticmethod
    def constant(value, order: int) -> "TruncatedSeries":
        return TruncatedSeries(order, [value] + [0] * order)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        d = min(self.order, other.order)
        return TruncatedSeries(d, [self.coeffs[k] + other.coeffs[k] for k in range(d + 1)])

    def __sub__(self, other):
        d = min(self.order, other.order)
        return TruncatedSeries(d, [self.coeffs[k] - other.coeffs[k] for k in range(d + 1)])

    def __mul__(self, other):
        d = min(self.order, other.order)
        out = []
        for k in range(d + 1):
            acc = Scalar.of(0)
            for i in range(k + 1):
                ci = self.coeffs[i]
                cj = other.coeffs[k - i]
                if ci.is_zero() or cj.is_zero():
                    continue
                acc = acc + ci * cj
            out.append(acc)
        return TruncatedSeries(d, out)

    def scale(self, c) -> "TruncatedSeries":
        c = Scalar.of(c)
        return TruncatedSeries(self.order, [ck * c for ck in self.coeffs])

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            cs = str(c)
            if c._needs_parens():
                cs = f"({cs})"
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{cs}*t")
            else:
                parts.append(f"{cs}*t^{k}")
        parts.append(f"O(t^{self.order + 1})")
        return " + ".join(parts)

    def __repr__(self):
        return f"TruncatedSeries({self!s})"


class EulerFactor:
    """Multiset of reciprocal roots c_i, denoting the product of 1/(1 - c_i t)."""

    __slots__ = ("roots",)

    def __init__(self, roots: Iterable):
        roots = tuple(Scalar.of(c) for c in roots)
        for c in roots:
            if c.is_zero():
                raise InvalidCharacter("Euler factor roots must be nonzero")
        self.roots = roots

    def degree(self) -> int:
        return len(self.roots)

    def sorted_roots(self):
        return sorted(self.roots, key=str)

    def __eq__(self, other):
        if not isinstance(other, EulerFactor):
            return NotImplemented
        a = {}
        for c in self.roots:
            a[c] = a.get(c, 0) + 1
        b = {}
        for c in other.roots:
            b[c] = b.get(c, 0) + 1
        return a == b

    def __hash__(self):
        counts = {}
        for c in self.roots:
            counts[c] = counts.get(c, 0) + 1
        return hash(frozenset(counts.items()))

    def __str__(self):
        if not self.roots:
            return "1"
        return " * ".join(f"1/(1 - ({c})*t)" for c in self.sorted_roots())

    def __repr__(self):
        return f"EulerFactor([{', '.join(map(str, self.sorted_roots()))}])"


def euler_expand(factor: EulerFactor, order: int) -> TruncatedSeries:
    """Expand the Euler factor as a power series in t through the given order.

    The coefficient of t^k is the complete homogeneous polynomial h_k of the
    roots (with multiplicity); the constant term is 1.
    """
    if order < 0:
        raise ValueError("expansion order must be nonnegative")
    coeffs = [Scalar.of(1)] + [Scalar.of(0)] * order
    for root in factor.roots:
        for k in range(1, order + 1):
            coeffs[k] = coeffs[k] + root * coeffs[k - 1]
    return TruncatedSeries(order, coeffs)


def series_equal(a: TruncatedSeries, b: TruncatedSeries, order: int) -> Optional[int]:
    """Compare two series exactly through the given order.

    Returns None when all coefficients agree, otherwise the smallest index
    at which they differ.  Both series must carry at least the requested
    order (InsufficientOrder otherwise).  Comparison is exact: any mismatch
    is a genuine inequality, never a rounding artifact.
    """
    if a.order < order or b.order < order:
        raise InsufficientOrder(
            f"need order {order}, have {a.order} and {b.order}")
    for k in range(order + 1):
        if a.coeffs[k] != b.coeffs[k]:
            return k
    return None


def _coerce_poly(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.const(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")
