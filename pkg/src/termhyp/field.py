"""Exact scalar fields: the rationals and rational functions in one symbol ``t``.

Rationals are :class:`fractions.Fraction`.  :class:`Polynomial` and
:class:`RatFun` implement Q[t] and Q(t); a ``RatFun`` is always kept with
coprime numerator and denominator and a monic denominator, so two equal
rational functions have identical representations.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC

from ._expr import ParseError, parse_expression

__all__ = [
    "Fraction",
    "Polynomial",
    "RatFun",
    "PoleError",
    "DegreeOverflowError",
    "ParseError",
    "MAX_DEGREE",
    "T",
    "ratfun_normalize",
    "ratfun_limit_at_zero",
    "parse_scalar",
    "format_scalar",
    "is_zero",
]

MAX_DEGREE = 512


class PoleError(ArithmeticError):
    """Limit at ``t = 0`` does not exist; ``order`` is the pole order."""

    def __init__(self, order):
        super().__init__(f"pole of order {order} at t = 0")
        self.order = order


class DegreeOverflowError(ArithmeticError):
    pass


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class Polynomial:
    """Polynomial in ``t`` with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(Fraction(c) for c in _trim(coeffs))

    @classmethod
    def _raw(cls, coeffs):
        # coeffs already Fractions and trimmed
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, _RationalABC):
            return self.coeffs == _trim((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, RatFun) else RatFun(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(tuple(_trim(out)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw(())
        if len(b) == 1:
            c = b[0]
            return Polynomial._raw(tuple(x * c for x in a))
        if len(a) == 1:
            c = a[0]
            return Polynomial._raw(tuple(x * c for x in b))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial._raw((Fraction(1),))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return Polynomial._raw(())
        return Polynomial._raw(tuple(x * c for x in self.coeffs))

    def divmod(self, other):
        """Quotient and remainder of Euclidean division by ``other``."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) <= db:
            return Polynomial._raw(()), self
        inv_lead = 1 / other.lead
        quot = [Fraction(0)] * (len(rem) - db)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            q = rem[i] * inv_lead
            if q:
                quot[i - db] = q
                for j in range(db + 1):
                    rem[i - db + j] -= q * bc[j]
        return Polynomial._raw(tuple(_trim(quot))), Polynomial._raw(tuple(_trim(rem[:db])))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def gcd(self, other):
        """Monic greatest common divisor (Euclid over Q, monic remainders)."""
        a, b = self.monic(), other.monic()
        while b:
            a, b = b, (a % b).monic()
        return a

    def valuation(self):
        """Multiplicity of the root ``t = 0``; the zero polynomial raises."""
        if self.is_zero():
            raise ValueError("valuation of the zero polynomial")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def __repr__(self):
        return f"Polynomial({list(map(str, self.coeffs))})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            neg = c < 0
            mag = -c if neg else c
            if k == 0:
                body = str(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, _RationalABC):
        return Polynomial._raw(tuple(_trim((Fraction(x),))))
    return None


_ONE = Polynomial._raw((Fraction(1),))


def _check_degree(p):
    if p.degree > MAX_DEGREE:
        raise DegreeOverflowError(f"degree {p.degree} exceeds bound {MAX_DEGREE}")


class RatFun:
    """Element of Q(t), stored as ``num/den`` in canonical form.

    Rationals embed as constant functions and compare equal to them.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num) if not isinstance(num, RatFun) else None
        if num is None:
            raise TypeError("RatFun numerator must be a Polynomial or rational")
        den = _as_poly(den)
        if den is None:
            raise TypeError("RatFun denominator must be a Polynomial or rational")
        if den.is_zero():
            raise ZeroDivisionError("RatFun with zero denominator")
        n, d = _canonical(num, den)
        self.num = n
        self.den = d

    @classmethod
    def _raw(cls, num, den):
        _check_degree(num)
        _check_degree(den)
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def _make(cls, num, den):
        return cls._raw(*_canonical(num, den))

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        """The Fraction this function equals, or ``None`` if it depends on ``t``."""
        if self.is_constant():
            return self.num.coeffs[0] if self.num.coeffs else Fraction(0)
        return None

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, _RationalABC):
            c = self.constant_value()
            return c is not None and c == other
        return NotImplemented

    def __hash__(self):
        c = self.constant_value()
        if c is not None:
            return hash(c)
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RatFun._make(a + c, b)
        if d.degree == 0:
            return RatFun._raw(a + c.scale(1 / d.lead) * b, b)
        if b.degree == 0:
            return RatFun._raw(a.scale(1 / b.lead) * d + c, d)
        g = b.gcd(d)
        if g.degree == 0:
            return RatFun._make(a * d + c * b, b * d)
        bg = b // g
        dg = d // g
        return RatFun._make(a * dg + c * bg, bg * d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _RationalABC):
            c = Fraction(other)
            if c == 0:
                return RatFun._raw(Polynomial._raw(()), _ONE)
            return RatFun._raw(self.num.scale(c), self.den)
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RatFun._raw(Polynomial._raw(()), _ONE)
        # cross-cancel so the product is already reduced
        g1 = a.gcd(d) if a.degree > 0 and d.degree > 0 else _ONE
        g2 = c.gcd(b) if c.degree > 0 and b.degree > 0 else _ONE
        if g1.degree > 0:
            a, d = a // g1, d // g1
        if g2.degree > 0:
            c, b = c // g2, b // g2
        num = a * c
        den = b * d
        lc = den.lead
        if lc != 1:
            inv = 1 / lc
            num, den = num.scale(inv), den.scale(inv)
        return RatFun._raw(num, den)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.num.is_zero():
            raise ZeroDivisionError("RatFun division by zero")
        inv = 1 / self.num.lead
        return RatFun._raw(self.den.scale(inv), self.num.scale(inv))

    def __truediv__(self, other):
        if isinstance(other, _RationalABC):
            if other == 0:
                raise ZeroDivisionError("RatFun division by zero")
            return RatFun._raw(self.num.scale(1 / Fraction(other)), self.den)
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, k):
        if not isinstance(k, int):
            if isinstance(k, Fraction) and k.denominator == 1:
                k = int(k)
            else:
                raise ValueError("RatFun powers must be integers")
        if k < 0:
            return self.reciprocal() ** (-k)
        return RatFun._raw(self.num ** k, self.den ** k)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __repr__(self):
        return f"RatFun({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _as_ratfun(x):
    if isinstance(x, RatFun):
        return x
    p = _as_poly(x)
    if p is None:
        return None
    return RatFun._raw(p, _ONE)


def _canonical(num, den):
    if num.is_zero():
        return Polynomial._raw(()), _ONE
    if den.degree > 0 and num.degree > 0:
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
    lc = den.lead
    if lc != 1:
        inv = 1 / lc
        num, den = num.scale(inv), den.scale(inv)
    return num, den


T = RatFun._raw(Polynomial._raw((Fraction(0), Fraction(1))), _ONE)
"""The indeterminate ``t`` as a rational function."""


def ratfun_normalize(f):
    """Canonical form (coprime, monic denominator) of ``f``."""
    return RatFun._make(f.num, f.den)


def ratfun_limit_at_zero(f):
    """Limit of ``f(t)`` as ``t -> 0``.

    Rationals are returned unchanged.  Raises :class:`PoleError` when the
    reduced denominator vanishes at zero.
    """
    if not isinstance(f, RatFun):
        return Fraction(f)
    f = ratfun_normalize(f)
    d0 = f.den.coeffs[0]
    if d0 == 0:
        raise PoleError(f.den.valuation())
    n0 = f.num.coeffs[0] if f.num.coeffs else Fraction(0)
    return n0 / d0


def is_zero(x):
    if isinstance(x, RatFun):
        return x.num.is_zero()
    return x == 0


def _scalar_atom(name):
    if name == "t":
        return T
    raise ParseError(f"unknown symbol {name!r}; only 't' is allowed")


def parse_scalar(text):
    """Parse an exact scalar: ``-3``, ``7/2``, ``3/2 + t - 5*t^2``, ``1/(t+1)``.

    Returns a Fraction when the value does not depend on ``t``.
    """
    value = parse_expression(text, _scalar_atom)
    if isinstance(value, RatFun):
        c = value.constant_value()
        return c if c is not None else value
    return Fraction(value)


def format_scalar(x):
    """Textual form accepted by :func:`parse_scalar`."""
    if isinstance(x, RatFun):
        c = x.constant_value()
        if c is not None:
            return str(c)
        if x.den == _ONE:
            return str(x.num)
        num = str(x.num)
        if len([c for c in x.num.coeffs if c]) > 1 or num.startswith("-"):
            num = f"({num})"
        return f"{num}/({x.den})"
    return str(Fraction(x))
