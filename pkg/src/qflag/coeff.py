"""Exact coefficient arithmetic: Laurent polynomials and rational functions in q.

Every scalar in the symbolic engine is a rational function of the deformation
parameter q with integer coefficients.  Values are kept in a canonical form --
gcd-reduced, with an ordinary-polynomial denominator whose constant term is
nonzero and whose leading coefficient is positive (negative powers of q live
in the numerator) -- so that equality of values is plain structural equality.

All values are immutable after construction and may be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .errors import ArithmeticDomainError, EvaluationError


class QPoly:
    """Laurent polynomial in q with arbitrary-precision integer coefficients.

    Stored sparsely as a map exponent -> coefficient.  Zero coefficients are
    never stored; the zero polynomial has an empty table.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        table = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    table[int(e)] = int(c)
        self.coeffs = table

    @staticmethod
    def const(c: int) -> "QPoly":
        return QPoly({0: c})

    @staticmethod
    def q(exp: int = 1, coeff: int = 1) -> "QPoly":
        """The monomial coeff * q**exp."""
        return QPoly({exp: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self.coeffs.items()})

    def __add__(self, other: "QPoly") -> "QPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = QPoly()
        res.coeffs = out
        return res

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = QPoly()
        res.coeffs = out
        return res

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ArithmeticDomainError("negative power of a QPoly; use QRat")
        out = QPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        return QPoly({e + k: c for e, c in self.coeffs.items()})

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def leading_coeff(self) -> int:
        return self.coeffs[self.max_exp()] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs.values():
            g = _int_gcd(g, abs(c))
        return g

    def eval_fraction(self, q0: Fraction) -> Fraction:
        acc = Fraction(0)
        for e, c in self.coeffs.items():
            acc += c * q0**e
        return acc

    def render(self) -> str:
        """Exponent-descending text form, e.g. ``q^2 - 1`` or ``-q + q^-1``."""
        if not self.coeffs:
            return "0"
        pieces = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QPoly({self.render()})"


P_ZERO = QPoly()
P_ONE = QPoly.const(1)


# -- ordinary-polynomial helpers (dense int lists, constant term first) ------

def _split(p: QPoly):
    """Write a nonzero Laurent polynomial as q**shift * (dense ordinary poly)."""
    v = p.min_exp()
    dense = [0] * (p.max_exp() - v + 1)
    for e, c in p.coeffs.items():
        dense[e - v] = c
    return v, dense


def _join(shift: int, dense) -> QPoly:
    return QPoly({shift + i: c for i, c in enumerate(dense) if c})


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _primitive(a):
    g = 0
    for c in a:
        g = _int_gcd(g, abs(c))
    if g > 1:
        a = [c // g for c in a]
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _pseudo_rem(a, b):
    """Pseudo-remainder of dense integer polynomials (lc(b)^k * a mod b)."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        a = [c * lb for c in a]
        for i in range(db + 1):
            a[da - db + i] -= la * b[i]
        _trim(a)
    return a


def _poly_gcd(a, b):
    """Primitive gcd of dense integer polynomials, positive leading coeff."""
    a = _primitive(_trim(list(a)))
    b = _primitive(_trim(list(b)))
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    return a


def _divexact(a, b):
    """Exact division of dense integer polynomials; b must divide a."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1]
        assert c % lb == 0, "inexact polynomial division"
        c //= lb
        out[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    assert not any(a), "inexact polynomial division"
    return out


class QRat:
    """Rational function in q, canonical numerator/denominator pair.

    The denominator is an ordinary polynomial with nonzero constant term and
    positive leading coefficient; the numerator may carry negative powers of
    q.  The pair has no common polynomial or integer factor, so two QRat
    values are equal exactly when their representations coincide.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = QPoly.const(num)
        if den is None:
            den = P_ONE
        elif isinstance(den, int):
            den = QPoly.const(den)
        if den.is_zero():
            raise ArithmeticDomainError("division by zero polynomial")
        self.num, self.den = _canonical(num, den)

    @staticmethod
    def const(c: int) -> "QRat":
        return QRat(QPoly.const(c))

    @staticmethod
    def q(exp: int = 1, coeff: int = 1) -> "QRat":
        return QRat(QPoly.q(exp, coeff))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == P_ONE and self.den == P_ONE

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QRat.const(other)
        return (
            isinstance(other, QRat)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "QRat":
        r = QRat.__new__(QRat)
        r.num, r.den = -self.num, self.den
        return r

    def __add__(self, other: "QRat") -> "QRat":
        if isinstance(other, int):
            other = QRat.const(other)
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        return QRat(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other: "QRat") -> "QRat":
        if isinstance(other, int):
            other = QRat.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "QRat":
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = QRat.const(other)
        if not isinstance(other, QRat):
            return NotImplemented
        if self.den == P_ONE and other.den == P_ONE:
            r = QRat.__new__(QRat)
            num = self.num * other.num
            # product of Laurent numerators is already canonical over den 1
            r.num, r.den = num, P_ONE
            return r
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QRat":
        if isinstance(other, int):
            other = QRat.const(other)
        if other.is_zero():
            raise ArithmeticDomainError("division by zero")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "QRat":
        if isinstance(other, int):
            other = QRat.const(other)
        return other / self

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ArithmeticDomainError("inverse of zero")
        return QRat(self.den, self.num)

    def __pow__(self, n: int) -> "QRat":
        if n < 0:
            return self.inverse() ** (-n)
        out = QR_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eval_fraction(self, q0: Fraction) -> Fraction:
        d = self.den.eval_fraction(q0)
        if d == 0:
            raise EvaluationError(f"pole at q0 = {q0}")
        return self.num.eval_fraction(q0) / d

    def render(self) -> str:
        if self.den == P_ONE:
            return self.num.render()
        num = self.num.render()
        if len(self.num.coeffs) > 1:
            num = f"({num})"
        den = self.den.render()
        if len(self.den.coeffs) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def render_signed(self):
        """(is_negative, absolute-value text); sign = sign of the top term."""
        if self.num.leading_coeff() < 0:
            return True, (-self).render()
        return False, self.render()

    def needs_parens_in_product(self) -> bool:
        """True when the text form has a top-level + or - (a bare sum)."""
        return self.den == P_ONE and len(self.num.coeffs) > 1

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QRat({self.render()})"


def _canonical(num: QPoly, den: QPoly):
    if num.is_zero():
        return P_ZERO, P_ONE
    vn, ndense = _split(num)
    vd, ddense = _split(den)
    shift = vn - vd
    g = _poly_gcd(ndense, ddense)
    if len(g) > 1:
        ndense = _divexact(ndense, g)
        ddense = _divexact(ddense, g)
    cg = _int_gcd(
        _primitive_content(ndense), _primitive_content(ddense)
    )
    if cg > 1:
        ndense = [c // cg for c in ndense]
        ddense = [c // cg for c in ddense]
    if ddense[-1] < 0:
        ndense = [-c for c in ndense]
        ddense = [-c for c in ddense]
    return _join(shift, ndense), _join(0, ddense)


def _primitive_content(a) -> int:
    g = 0
    for c in a:
        g = _int_gcd(g, abs(c))
    return g


QR_ZERO = QRat.const(0)
QR_ONE = QRat.const(1)


def as_qrat(x) -> QRat:
    """Promote ints and QPoly values to QRat."""
    if isinstance(x, QRat):
        return x
    if isinstance(x, int):
        return QRat.const(x)
    if isinstance(x, QPoly):
        return QRat(x)
    raise TypeError(f"cannot interpret {x!r} as a coefficient")


def qrat_eval(a: QRat, q0) -> float:
    """Evaluate exactly at q0 in (0,1) and round once to float.

    The evaluation point is converted to an exact Fraction, the rational
    function is evaluated in exact arithmetic, and the single final
    float conversion is correctly rounded.
    """
    q0 = Fraction(q0)
    if not 0 < q0 < 1:
        raise EvaluationError(f"evaluation point {q0} outside (0, 1)")
    return float(a.eval_fraction(q0))
