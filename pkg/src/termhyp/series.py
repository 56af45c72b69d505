"""Pochhammer symbols and exact evaluation of terminating pFq series.

Every function here is generic over the scalar field: arguments may be
Fractions (ints are promoted) or :class:`~termhyp.field.RatFun` values, and a
"zero" always means exactly zero (identically zero for rational functions).
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .field import RatFun, format_scalar, is_zero, parse_scalar

__all__ = [
    "SeriesSpec",
    "PoleAtTerm",
    "NonTerminatingError",
    "ZeroPochhammerError",
    "ZeroArgumentError",
    "pochhammer",
    "pochhammer_reverse_index",
    "termination_index",
    "eval_terminating",
    "partial_sum",
    "reverse",
    "chu_vandermonde_rhs",
    "parse_series",
]


class PoleAtTerm(ZeroDivisionError):
    """A denominator Pochhammer vanishes at term ``k`` of a live summand."""

    def __init__(self, k):
        super().__init__(f"denominator vanishes at term {k}")
        self.k = k


class NonTerminatingError(ValueError):
    pass


class ZeroPochhammerError(ZeroDivisionError):
    pass


class ZeroArgumentError(ZeroDivisionError):
    pass


def _scalar(x):
    if isinstance(x, (Fraction, RatFun)):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Fraction(x)


@dataclass(frozen=True)
class SeriesSpec:
    """Numerator parameters, denominator parameters and argument of a pFq."""

    numerators: tuple
    denominators: tuple
    argument: object

    def __init__(self, numerators, denominators, argument):
        object.__setattr__(self, "numerators", tuple(_scalar(a) for a in numerators))
        object.__setattr__(self, "denominators", tuple(_scalar(b) for b in denominators))
        object.__setattr__(self, "argument", _scalar(argument))

    @property
    def p(self):
        return len(self.numerators)

    @property
    def q(self):
        return len(self.denominators)

    def __str__(self):
        nums = ", ".join(format_scalar(a) for a in self.numerators)
        dens = ", ".join(format_scalar(b) for b in self.denominators)
        return f"{self.p}F{self.q}({nums}; {dens}; {format_scalar(self.argument)})"


def pochhammer(x, k):
    """Rising factorial ``x (x+1) ... (x+k-1)``; 1 when ``k == 0``."""
    if k < 0:
        raise ValueError("pochhammer length must be nonnegative")
    x = _scalar(x)
    acc = Fraction(1)
    for j in range(k):
        acc = acc * (x + j)
    return acc


def pochhammer_reverse_index(a, n, k):
    """``(a)_{n-k}`` computed as ``(-1)^k (a)_n / (1-a-n)_k``."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    a = _scalar(a)
    den = pochhammer(1 - a - n, k)
    if is_zero(den):
        raise ZeroPochhammerError(f"(1-a-n)_k vanishes for a={format_scalar(a)}, n={n}, k={k}")
    sign = -1 if k % 2 else 1
    return sign * pochhammer(a, n) / den


def _nonpositive_integer(x):
    if isinstance(x, RatFun):
        x = x.constant_value()
        if x is None:
            return None
    if x.denominator == 1 and x <= 0:
        return int(-x)
    return None


def termination_index(s):
    """Smallest ``m`` such that ``-m`` is a numerator parameter of ``s``."""
    found = [m for m in map(_nonpositive_integer, s.numerators) if m is not None]
    if not found:
        raise NonTerminatingError(f"{s} has no nonpositive integer numerator")
    return min(found)


def _sum_terms(nums, dens, z, last):
    # term_{k+1} = term_k * prod(a+k) z / ((k+1) prod(b+k)); once a numerator
    # factor kills the summand every later term is zero, whatever the denominators do
    term = Fraction(1)
    total = Fraction(1)
    for k in range(last):
        top = z
        for a in nums:
            top = top * (a + k)
        if is_zero(top):
            break
        bottom = Fraction(k + 1)
        for b in dens:
            bottom = bottom * (b + k)
        if is_zero(bottom):
            raise PoleAtTerm(k + 1)
        term = term * top / bottom
        total = total + term
    return total


def eval_terminating(s):
    """Exact value of the terminating series ``s``."""
    return _sum_terms(s.numerators, s.denominators, s.argument, termination_index(s))


def partial_sum(s, n):
    """Sum of the first ``n + 1`` terms of ``s`` (terminating or not)."""
    if n < 0:
        raise ValueError("partial sum index must be nonnegative")
    return _sum_terms(s.numerators, s.denominators, s.argument, n)


def reverse(s):
    """Reverse the order of summation of a terminating series.

    Returns ``(prefactor, reversed_spec)`` with
    ``prefactor * eval_terminating(reversed_spec) == eval_terminating(s)``.
    """
    n = termination_index(s)
    x = s.argument
    if is_zero(x):
        raise ZeroArgumentError("cannot reverse a series with zero argument")
    rest = list(s.numerators)
    for i, a in enumerate(rest):
        if _nonpositive_integer(a) == n:
            del rest[i]
            break
    prefactor = (-x) ** n
    for a in rest:
        pa = pochhammer(a, n)
        if is_zero(pa):
            raise ZeroPochhammerError(f"({format_scalar(a)})_{n} vanishes")
        prefactor = prefactor * pa
    for b in s.denominators:
        pb = pochhammer(b, n)
        if is_zero(pb):
            raise ZeroPochhammerError(f"({format_scalar(b)})_{n} vanishes")
        prefactor = prefactor / pb
    sign = -1 if (len(rest) + len(s.denominators)) % 2 else 1
    reversed_spec = SeriesSpec(
        [Fraction(-n)] + [1 - b - n for b in s.denominators],
        [1 - a - n for a in rest],
        sign / x,
    )
    return prefactor, reversed_spec


def chu_vandermonde_rhs(n, a, b):
    """Closed form ``(b-a)_n / (b)_n`` of ``2F1(-n, a; b; 1)``."""
    a, b = _scalar(a), _scalar(b)
    den = pochhammer(b, n)
    if is_zero(den):
        raise ZeroPochhammerError(f"({format_scalar(b)})_{n} vanishes")
    return pochhammer(b - a, n) / den


_SERIES = re.compile(r"^\s*(\d+)\s*F\s*(\d+)\s*\((.*)\)\s*$", re.S)


def _split_list(text):
    text = text.strip()
    if not text:
        return []
    return [parse_scalar(part) for part in text.split(",")]


def parse_series(text):
    """Parse ``pFq(a1, ..., ap; b1, ..., bq; z)``."""
    m = _SERIES.match(text)
    if m is None:
        raise ValueError(f"not a series of the form pFq(...; ...; z): {text!r}")
    p, q, body = int(m.group(1)), int(m.group(2)), m.group(3)
    parts = body.split(";")
    if len(parts) != 3:
        raise ValueError(f"expected two ';' separators in {text!r}")
    nums, dens = _split_list(parts[0]), _split_list(parts[1])
    if len(nums) != p or len(dens) != q:
        raise ValueError(f"{p}F{q} needs {p} numerators and {q} denominators, got {len(nums)} and {len(dens)}")
    return SeriesSpec(nums, dens, parse_scalar(parts[2]))
