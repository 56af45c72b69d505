"""Executable catalog of the terminating 4F3 / 3F2 relations with arguments 4 and 1/4.

Each relation is data: a left and a right :class:`Term`, each a product of
prefactors (Pochhammer symbols, factorials, signs, linear factors) and at most
one truncated series, all written with :class:`~termhyp.affine.Affine`
parameter expressions.  Invariance relations are produced by substituting an
:class:`~termhyp.affine.AffineMap` into the defining term of a normalized
function, so the six-fold lists cannot drift from their maps.

Guards are derived mechanically: every Pochhammer symbol or linear factor in a
denominator, and every denominator parameter of a series over its summation
range, must be nonzero at a sample.  Samples failing a guard are *skipped*.
"""

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .affine import Affine, AffineMap
from .field import RatFun, format_scalar, is_zero
from .series import PoleAtTerm, ZeroPochhammerError, pochhammer

__all__ = [
    "Verdict",
    "Length",
    "Term",
    "NamedFunction",
    "IdentityEntry",
    "Family",
    "UnknownIdError",
    "IdenticallyUndefined",
    "NAMED",
    "FAMILIES",
    "CATALOG",
    "PERMUTATIONS3",
    "PERMUTATIONS2",
    "eval_named",
    "check_identity",
    "expand_prop31",
    "list_catalog",
    "get_entry",
    "expand_ids",
]


class UnknownIdError(KeyError):
    pass


class IdenticallyUndefined(ArithmeticError):
    """A guard vanishes identically (as a rational function of ``t``)."""


@dataclass
class Verdict:
    status: str  # "holds" | "fails" | "skipped"
    lhs: Any = None
    rhs: Any = None
    reason: str = ""
    id: str = ""
    n: Any = None
    params: tuple = ()

    @property
    def holds(self):
        return self.status == "holds"

    def to_json(self):
        def fmt(x):
            if x is None:
                return None
            if isinstance(x, (Fraction, RatFun, int)):
                return format_scalar(x)
            return str(x)

        out = {
            "id": self.id,
            "status": self.status,
            "n": self.n,
            "params": [fmt(p) for p in self.params],
        }
        if self.status != "skipped":
            out["lhs"] = fmt(self.lhs)
            out["rhs"] = fmt(self.rhs)
        else:
            out["reason"] = self.reason
        return out


def _compare(lhs, rhs, **info):
    status = "holds" if lhs == rhs else "fails"
    return Verdict(status, lhs, rhs, **info)


# ---------------------------------------------------------------- recipes

_LENGTH = re.compile(r"^\s*(\d*)\s*n\s*(?:([+-])\s*(\d+))?\s*(?://\s*(\d+))?\s*$")


@dataclass(frozen=True)
class Length:
    """Integer length ``(mult*n + add) // div`` of a Pochhammer symbol or sum."""

    mult: int = 1
    add: int = 0
    div: int = 1

    @classmethod
    def parse(cls, text):
        if isinstance(text, Length):
            return text
        m = _LENGTH.match(text)
        if m is None:
            raise ValueError(f"bad length {text!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        add = int(m.group(3) or 0) * (-1 if m.group(2) == "-" else 1)
        div = int(m.group(4) or 1)
        return cls(mult, add, div)

    def __call__(self, n):
        return (self.mult * n + self.add) // self.div

    def __str__(self):
        s = "n" if self.mult == 1 else f"{self.mult}n"
        if self.add:
            s += f"{self.add:+d}"
        if self.div != 1:
            s = f"floor({s}/{self.div})"
        return s


def _aff(x):
    return x if isinstance(x, Affine) else Affine.parse(str(x))


def _paren(expr):
    s = str(expr)
    return s if re.fullmatch(r"-?[\w/]+", s) else f"({s})"


@dataclass(frozen=True)
class Factor:
    """One prefactor: ``kind`` in {"poch", "lin", "sign", "fact"}; ``power`` is +1 or -1."""

    kind: str
    expr: Affine = None
    length: Length = None
    power: int = 1

    def subs(self, mapping):
        if self.expr is None:
            return self
        return Factor(self.kind, self.expr.subs(mapping), self.length, self.power)

    def value(self, vals, n):
        if self.kind == "poch":
            return pochhammer(self.expr(vals), self.length(n))
        if self.kind == "lin":
            return self.expr(vals)
        if self.kind == "sign":
            return Fraction(-1 if n % 2 else 1)
        if self.kind == "fact":
            return Fraction(math.factorial(self.length(n)))
        raise ValueError(self.kind)

    def __str__(self):
        if self.kind == "poch":
            return f"({self.expr})_{{{self.length}}}"
        if self.kind == "lin":
            return _paren(self.expr)
        if self.kind == "sign":
            return "(-1)^n"
        return f"({self.length})!"


def poch(expr, length="n", power=1):
    return Factor("poch", _aff(expr), Length.parse(length), power)


def lin(expr, power=1):
    return Factor("lin", _aff(expr), None, power)


def sign():
    return Factor("sign")


def fact(length, power=1):
    return Factor("fact", None, Length.parse(length), power)


@dataclass(frozen=True)
class SeriesRecipe:
    """Series summed over ``k = 0 .. length(n)`` (``partial`` marks a truncated divergent sum)."""

    numerators: tuple
    denominators: tuple
    argument: Fraction
    length: Length
    partial: bool = False

    def subs(self, mapping):
        return SeriesRecipe(
            tuple(a.subs(mapping) for a in self.numerators),
            tuple(b.subs(mapping) for b in self.denominators),
            self.argument,
            self.length,
            self.partial,
        )

    def value(self, vals, n):
        from .series import _sum_terms

        nums = [a(vals) for a in self.numerators]
        dens = [b(vals) for b in self.denominators]
        return _sum_terms(nums, dens, self.argument, self.length(n))

    def __str__(self):
        p, q = len(self.numerators), len(self.denominators)
        nums = ", ".join(map(str, self.numerators))
        dens = ", ".join(map(str, self.denominators))
        s = f"{p}F{q}({nums}; {dens}; {self.argument})"
        if self.partial or self.length != Length():
            s = f"[{s}]_{{{self.length}}}"
        return s


def series(nums, dens, z, length="n", partial=False):
    return SeriesRecipe(
        tuple(_aff(a) for a in nums), tuple(_aff(b) for b in dens), Fraction(z), Length.parse(length), partial
    )


@dataclass(frozen=True)
class Term:
    """Product of prefactors and an optional series."""

    factors: tuple = ()
    series: SeriesRecipe = None

    def subs(self, mapping):
        return Term(
            tuple(f.subs(mapping) for f in self.factors),
            self.series.subs(mapping) if self.series is not None else None,
        )

    def guards(self):
        out = []
        for f in self.factors:
            if f.power < 0 and f.kind in ("poch", "lin"):
                out.append((f.expr, f.length))
        if self.series is not None:
            for b in self.series.denominators:
                out.append((b, self.series.length))
        return out

    def value(self, vals, n):
        num = Fraction(1)
        den = Fraction(1)
        for f in self.factors:
            v = f.value(vals, n)
            if f.power > 0:
                num = num * v
            else:
                den = den * v
        if self.series is not None:
            num = num * self.series.value(vals, n)
        return num / den if den != 1 else num

    def __str__(self):
        top = [str(f) for f in self.factors if f.power > 0]
        bottom = [str(f) for f in self.factors if f.power < 0]
        pre = " ".join(top) if top else ("1" if bottom else "")
        if bottom:
            pre = f"{pre} / ({' '.join(bottom)})" if len(bottom) > 1 else f"{pre} / {bottom[0]}"
        if self.series is None:
            return pre or "1"
        return f"{pre} * {self.series}" if pre else str(self.series)


def _guard_label(guard):
    expr, length = guard
    return f"({expr})_{{{length}}}" if length is not None else _paren(expr)


def _guard_value(guard, vals, n):
    expr, length = guard
    x = expr(vals)
    return pochhammer(x, length(n)) if length is not None else x


def _dedupe(guards):
    seen = set()
    out = []
    for g in guards:
        key = (g[0], g[1])
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


# ---------------------------------------------------------------- named functions


@dataclass
class NamedFunction:
    name: str
    params: tuple
    term: Term
    base: str = None  # for reparameterized functions
    reparam: AffineMap = None  # symmetric params -> base params

    @property
    def arity(self):
        return len(self.params)


def _named(name, params, term):
    return NamedFunction(name, tuple(params), term)


def _reparam(name, base, params, exprs):
    b = NAMED[base]
    rho = AffineMap.from_exprs(params, exprs, outputs=b.params)
    return NamedFunction(name, tuple(params), b.term.subs(rho.substitution()), base, rho)


NAMED = {}

NAMED["T"] = _named(
    "T", "abc",
    Term((poch("1+a-c"), poch("c")), series(["-n", "a/2", "(a+1)/2", "b"], ["a", "1+a-c", "c"], 4)),
)
NAMED["Ttilde"] = _named(
    "Ttilde", "ac",
    Term((poch("1+a-c"), poch("c")), series(["-n", "a/2", "(a+1)/2"], ["1+a-c", "c"], 4)),
)
NAMED["Q"] = _named(
    "Q", "ac",
    Term((poch("1+a-c"), poch("c")), series(["-n", "a/2", "(a+1)/2"], ["a", "c"], 4)),
)
NAMED["R"] = _named(
    "R", "abc",
    Term((poch("1-a"), poch("b")), series(["-n", "a", "a-c-n", "c"], ["(a-n)/2", "(1+a-n)/2", "b"], Fraction(1, 4))),
)
NAMED["Rtilde"] = _named(
    "Rtilde", "ac",
    Term((poch("1-a"), poch("a")), series(["-n", "a-c-n", "c"], ["(a-n)/2", "(1+a-n)/2"], Fraction(1, 4))),
)
NAMED["M"] = _named(
    "M", "ac",
    Term((poch("1-a"), poch("1+c-a")), series(["-n", "a", "c"], ["(a-n)/2", "(1+a-n)/2"], Fraction(1, 4))),
)
NAMED["U"] = _reparam("U", "T", "xyz", ["x-y-z", "(1+3x-y-z-2n)/2", "(1+x+y-3z)/2"])
NAMED["Utilde"] = _reparam("Utilde", "Ttilde", "xyz", ["(1+2x-y-z-2n)/3", "(2+x+y-2z-n)/3"])
NAMED["W"] = _reparam("W", "Q", "xy", ["x", "(1+x+y+n)/2"])
NAMED["V"] = _reparam("V", "R", "xyz", ["x-y-z", "(2+3x-y-z-n)/2", "(x+y-3z-n)/2"])
NAMED["Vtilde"] = _reparam("Vtilde", "Rtilde", "xyz", ["(2+2x-y-z-n)/3", "(1+x+y-2z-2n)/3"])
NAMED["L"] = _reparam("L", "M", "xy", ["x", "(x+y-n-1)/2"])


# ---------------------------------------------------------------- invariance families


@dataclass
class Family:
    """Invariance maps of one normalized function.

    ``generators`` are the trivial and the nontrivial relation; ``listed`` are
    all group elements in catalog order; ``symmetric`` names the function whose
    argument permutations realize them.
    """

    function: str
    generators: tuple
    listed: tuple
    symmetric: str
    relation_prefix: str
    symmetric_prefix: str


def _maps(params, rows):
    return tuple(AffineMap.from_exprs(params, row) for row in rows)


FAMILIES = {
    "T": Family(
        "T",
        _maps("abc", [["a", "b", "1+a-c"], ["c-b-n", "c-a-n", "c"]]),
        _maps("abc", [
            ["a", "b", "c"],
            ["a", "b", "1+a-c"],
            ["c-b-n", "c-a-n", "c"],
            ["c-b-n", "c-a-n", "1-b-n"],
            ["1+a-b-c-n", "1-c-n", "1+a-c"],
            ["1+a-b-c-n", "1-c-n", "1-b-n"],
        ]),
        "U", "TI", "U-sym",
    ),
    # the nontrivial generator is the relation for Ttilde with c held fixed
    "Ttilde": Family(
        "Ttilde",
        _maps("ac", [["a", "1+a-c"], ["c-a-n", "c"]]),
        _maps("ac", [
            ["a", "c"],
            ["a", "1+a-c"],
            ["c-a-n", "c"],
            ["c-a-n", "1-a-n"],
            ["1-c-n", "1+a-c"],
            ["1-c-n", "1-a-n"],
        ]),
        "Utilde", "TtI", "Ut-sym",
    ),
    "R": Family(
        "R",
        _maps("abc", [["a", "b", "a-c-n"], ["1+c-b", "1+c-a", "c"]]),
        _maps("abc", [
            ["a", "b", "c"],
            ["a", "b", "a-c-n"],
            ["1+c-b", "1+c-a", "c"],
            ["1+c-b", "1+c-a", "1-b-n"],
            ["1+a-b-c-n", "1-c-n", "a-c-n"],
            ["1+a-b-c-n", "1-c-n", "1-b-n"],
        ]),
        "V", "RI", "V-sym",
    ),
    "Rtilde": Family(
        "Rtilde",
        _maps("ac", [["a", "a-c-n"], ["1+c-a", "c"]]),
        _maps("ac", [
            ["a", "c"],
            ["a", "a-c-n"],
            ["1+c-a", "c"],
            ["1+c-a", "1-a-n"],
            ["1-c-n", "a-c-n"],
            ["1-c-n", "1-a-n"],
        ]),
        "Vtilde", "RtI", "Vt-sym",
    ),
    "Q": Family(
        "Q",
        _maps("ac", [["2c-a-n-1", "c"]]),
        _maps("ac", [["a", "c"], ["2c-a-n-1", "c"]]),
        "W", "Q-inv", "W-swap",
    ),
    "M": Family(
        "M",
        _maps("ac", [["1+2c-a+n", "c"]]),
        _maps("ac", [["a", "c"], ["1+2c-a+n", "c"]]),
        "L", "M-inv", "L-swap",
    ),
}

# argument permutations of the symmetric functions, in the order matching ``listed``
PERMUTATIONS3 = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
PERMUTATIONS2 = ((0, 1), (1, 0))


def _perm_label(params, order):
    return "".join(params[i] for i in order)


# ---------------------------------------------------------------- identity entries


@dataclass
class IdentityEntry:
    id: str
    params: tuple
    lhs: Any
    rhs: Any
    description: str
    guards: list = field(default_factory=list)
    kind: str = "relation"

    @property
    def arity(self):
        return len(self.params)

    def guard_description(self):
        if not self.guards:
            return "none"
        return ", ".join(_guard_label(g) for g in self.guards) + " != 0"

    def failed_guard(self, vals, n):
        """Label of the first vanishing guard, or ``None``."""
        for g in self.guards:
            if is_zero(_guard_value(g, vals, n)):
                return _guard_label(g)
        return None


def _entry(id_, params, lhs, rhs, description=None, kind="relation"):
    if description is None:
        description = f"{lhs} = {rhs}"
    guards = _dedupe(lhs.guards() + rhs.guards())
    return IdentityEntry(id_, tuple(params), lhs, rhs, description, guards, kind)


def _call_label(name, params):
    return f"{name}({','.join(params)})"


def _invariance_entry(id_, fn, phi):
    mapping = phi.substitution()
    lhs = fn.term
    rhs = fn.term.subs(mapping)
    args = ", ".join(str(e) for e in phi.exprs())
    description = f"{_call_label(fn.name, fn.params)} = {fn.name}({args})"
    return _entry(id_, fn.params, lhs, rhs, description)


class _ExpansionSide:
    """One side of the expansion of a (p+3)F(q+3) into lower-order series."""

    def __init__(self, p, q, side):
        self.p, self.q, self.side = p, q, side

    def guards(self):
        out = [(Affine.parse(e), Length()) for e in ("a", "1+a-c", "c")]
        out += [(Affine.var(f"b{j + 1}"), Length()) for j in range(self.q)]
        return out

    def value(self, vals, n):
        a, c, x = vals["a"], vals["c"], vals["x"]
        extra_num = [vals[f"a{i + 1}"] for i in range(self.p)]
        extra_den = [vals[f"b{j + 1}"] for j in range(self.q)]
        if self.side == "lhs":
            return _expansion_lhs(a, c, extra_num, extra_den, x, n)
        return _expansion_rhs(a, c, extra_num, extra_den, x, n)

    def __str__(self):
        nums = "".join(f", a{i + 1}" for i in range(self.p))
        dens = "".join(f", b{j + 1}" for j in range(self.q))
        if self.side == "lhs":
            return f"{self.p + 3}F{self.q + 3}(-n, a/2, (a+1)/2{nums}; a, 1+a-c, c{dens}; x)"
        mn = "".join(f" (a{i + 1})_m" for i in range(self.p))
        md = "".join(f" (b{j + 1})_m" for j in range(self.q))
        inner_n = "".join(f", a{i + 1}+m" for i in range(self.p))
        inner_d = "".join(f", b{j + 1}+m" for j in range(self.q))
        return (
            f"sum_m (-n)_m{mn} (x/4)^m / (m! (1+a-c)_m{md})"
            f" * {self.p + 1}F{self.q + 1}(-n+m{inner_n}; c{inner_d}; x/4)"
        )


def _expansion_lhs(a, c, extra_num, extra_den, x, n):
    from .series import _sum_terms

    nums = [Fraction(-n), a / 2, (a + 1) / 2, *extra_num]
    dens = [a, 1 + a - c, c, *extra_den]
    return _sum_terms(nums, dens, x, n)


def _expansion_rhs(a, c, extra_num, extra_den, x, n):
    from .series import _sum_terms

    y = x / 4
    total = Fraction(0)
    coef = Fraction(1)  # (-n)_m prod(a_i)_m y^m / (m! (1+a-c)_m prod(b_j)_m)
    for m in range(n + 1):
        if m > 0:
            top = (m - 1 - n) * y
            for ai in extra_num:
                top = top * (ai + m - 1)
            bottom = m * (a - c + m)
            for bj in extra_den:
                bottom = bottom * (bj + m - 1)
            coef = coef * top / bottom
        inner = _sum_terms(
            [Fraction(m - n)] + [ai + m for ai in extra_num],
            [c] + [bj + m for bj in extra_den],
            y,
            n - m,
        )
        total = total + coef * inner
    return total


def _expansion_entry(p, q):
    params = ("a", "c") + tuple(f"a{i + 1}" for i in range(p)) + tuple(f"b{j + 1}" for j in range(q)) + ("x",)
    lhs, rhs = _ExpansionSide(p, q, "lhs"), _ExpansionSide(p, q, "rhs")
    guards = _dedupe(lhs.guards())
    return IdentityEntry(f"P3.1({p},{q})", params, lhs, rhs, f"{lhs} = {rhs}", guards, "expansion")


def _build_catalog():
    z4, zq = 4, Fraction(1, 4)
    entries = []
    add = entries.append

    for p, q in ((0, 0), (1, 0), (1, 1), (2, 1)):
        add(_expansion_entry(p, q))

    lhs_T = Term((), series(["-n", "a/2", "(a+1)/2", "b"], ["a", "1+a-c", "c"], z4))
    add(_entry("P3.2", "abc", lhs_T, Term(
        (poch("c-b"), poch("c", power=-1)),
        series(["-n", "1-c-n", "b", "1+b-c"], ["1+a-c", "(1+b-c-n)/2", "(2+b-c-n)/2"], zq),
    )))
    add(_entry("P3.3", "abc", lhs_T, Term(
        (sign(), poch("b"), poch("1+a-c", power=-1)),
        series(["-n", "(c-b-n)/2", "(c-b-n+1)/2", "c-a-n"], ["c-b-n", "1-b-n", "c"], z4),
    )))

    def family_entries(name):
        fam = FAMILIES[name]
        fn = NAMED[fam.function]
        sym = NAMED[fam.symmetric]
        if len(fam.listed) == 6:
            for k, phi in enumerate(fam.listed):
                add(_invariance_entry(f"{fam.relation_prefix}{k + 1}", fn, phi))
        else:
            add(_invariance_entry(fam.relation_prefix, fn, fam.listed[1]))

        if sym.arity == 3:
            for order in PERMUTATIONS3:
                sigma = AffineMap.permutation(sym.params, order)
                add(_invariance_entry(f"{fam.symmetric_prefix}({_perm_label(sym.params, order)})", sym, sigma))
        else:
            sigma = AffineMap.permutation(sym.params, PERMUTATIONS2[1])
            add(_invariance_entry(fam.symmetric_prefix, sym, sigma))

    family_entries("T")

    add(_entry("3F2-A", "ac",
        Term((), series(["-n", "a/2", "(a+1)/2"], ["1+a-c", "c"], z4)),
        Term((sign(), poch("a"), poch("1+a-c", power=-1)),
             series(["-n", "(c-a-n)/2", "(c-a-n+1)/2"], ["1-a-n", "c"], z4))))
    family_entries("Ttilde")

    lhs_Q = Term((), series(["-n", "a/2", "(a+1)/2"], ["a", "c"], z4))
    add(_entry("3F2-B", "ac", lhs_Q,
        Term((sign(),), series(["-n", "(2c-a-n-1)/2", "(2c-a-n)/2"], ["2c-a-n-1", "c"], z4))))
    family_entries("Q")
    add(_entry("3F2-C", "ac", lhs_Q,
        Term((sign(), poch("1+a-c"), poch("c", power=-1)),
             series(["-n/2", "(1-n)/2", "1-c-n"], ["c-a-n", "1+a-c"], z4, "n//2"))))
    add(_entry("2F1-C", "c",
        Term((), series(["-n", "1/2"], ["c"], z4)),
        Term((sign(), poch("2-c"), poch("c", power=-1)),
             series(["-n/2", "(1-n)/2", "1-c-n"], ["c-n-1", "2-c"], z4, "n//2"))))

    rhs_PS = series(["-n", "(1+a-b)/2", "(2+a-b)/2", "1"], ["1+a-b", "1-b-n", "1+a+n"], z4)
    add(_entry("PS-A", "ab",
        Term((), series(["a/2", "(a+1)/2", "b"], ["a", "1+a+n"], z4, partial=True)),
        Term((poch("b"), fact("n", power=-1)), rhs_PS), kind="partial-sum"))
    add(_entry("PS-B", "ab",
        Term((), series(["-b/2-n", "(1-b)/2-n", "-a-2n"], ["-b-2n", "1-b-n"], z4, partial=True)),
        Term((sign(), poch("1+a", "2n"), fact("n", power=-1), poch("1+a", power=-1)), rhs_PS),
        kind="partial-sum"))

    add(_entry("P5.1", "abc",
        Term((), series(["-n", "a", "a-c-n", "c"], ["(a-n)/2", "(1+a-n)/2", "b"], zq)),
        Term((poch("1+c-a"), poch("b-c"), poch("1-a", power=-1), poch("b", power=-1)),
             series(["-n", "1+c-b", "1-b-n", "c"], ["(1+c-b-n)/2", "(2+c-b-n)/2", "1+c-a"], zq))))
    family_entries("R")

    add(_entry("3F2-D", "ac",
        Term((), series(["-n", "a-c-n", "c"], ["(a-n)/2", "(1+a-n)/2"], zq)),
        Term((poch("1+c-a"), poch("a-c"), poch("1-a", power=-1), poch("a", power=-1)),
             series(["-n", "1-a-n", "c"], ["(1+c-a-n)/2", "(2+c-a-n)/2"], zq))))
    family_entries("Rtilde")

    lhs_M = Term((), series(["-n", "a", "c"], ["(a-n)/2", "(1+a-n)/2"], zq))
    add(_entry("3F2-E", "ac", lhs_M,
        Term((poch("1+2c-a"), poch("1-a", power=-1)),
             series(["-n", "1+2c-a+n", "c"], ["(1+2c-a)/2", "(2+2c-a)/2"], zq))))
    family_entries("M")

    add(_entry("P5.2-even", "ac",
        Term((), series(["-2n", "a", "c"], ["a/2-n", "(a+1)/2-n"], zq, "2n")),
        Term((sign(), fact("2n"), poch("c"), fact("n", power=-1), poch("1-a", "2n", power=-1)),
             series(["-n", "1+c-a+n", "a-c-n"], ["1/2", "1-c-n"], zq))))
    add(_entry("P5.2-odd", "ac",
        Term((), series(["-2n-1", "a", "c"], ["(a-1)/2-n", "a/2-n"], zq, "2n+1")),
        Term((sign(), lin("1+c-a+n"), fact("2n+1"), poch("c"), fact("n", power=-1),
              poch("1-a", "2n+1", power=-1)),
             series(["-n", "2+c-a+n", "a-c-n"], ["3/2", "1-c-n"], zq))))
    add(_entry("PS-C", "ac",
        Term((), series(["a", "a-c-n", "c"], ["(a-n)/2", "(1+a-n)/2"], zq, partial=True)),
        Term((poch("1+c-a"), poch("1+c"), fact("n", power=-1), poch("1-a", power=-1)),
             series(["-n", "1+c+n", "c", "1"], ["(1+c)/2", "(2+c)/2", "1+c-a"], zq)),
        kind="partial-sum"))
    return {e.id: e for e in entries}


CATALOG = _build_catalog()


def get_entry(id_):
    try:
        return CATALOG[id_]
    except KeyError:
        raise UnknownIdError(id_) from None


def expand_ids(spec):
    """Resolve ``all``, comma lists and ``FIRST..LAST`` ranges (catalog order)."""
    order = list(CATALOG)
    out = []
    for part in (p.strip() for p in spec.split(",")):
        if not part:
            continue
        if part == "all":
            out.extend(order)
        elif ".." in part:
            first, last = (s.strip() for s in part.split("..", 1))
            i, j = order.index(get_entry(first).id), order.index(get_entry(last).id)
            if j < i:
                raise ValueError(f"empty range {part!r}")
            out.extend(order[i : j + 1])
        else:
            out.append(get_entry(part).id)
    seen = set()
    return [x for x in out if not (x in seen or seen.add(x))]


# ---------------------------------------------------------------- operations


def _values(params, names, n):
    if len(params) != len(names):
        raise ValueError(f"expected {len(names)} parameters ({', '.join(names)}), got {len(params)}")
    vals = {name: (p if isinstance(p, (Fraction, RatFun)) else Fraction(p)) for name, p in zip(names, params)}
    vals["n"] = n
    return vals


def eval_named(name, n, params):
    """Exact value of a named normalized function such as ``T_n(a, b, c)``."""
    try:
        fn = NAMED[name]
    except KeyError:
        raise UnknownIdError(name) from None
    vals = _values(params, fn.params, n)
    for g in fn.term.guards():
        if is_zero(_guard_value(g, vals, n)):
            raise ZeroPochhammerError(f"{_guard_label(g)} vanishes")
    return fn.term.value(vals, n)


def _check(entry, n, params, strict=False):
    vals = _values(params, entry.params, n)
    info = dict(id=entry.id, n=n, params=tuple(vals[p] for p in entry.params))
    bad = entry.failed_guard(vals, n)
    if bad is not None:
        if strict:
            raise IdenticallyUndefined(f"{entry.id}: guard {bad} vanishes identically")
        return Verdict("skipped", reason=f"guard {bad} vanishes", **info)
    try:
        lhs = entry.lhs.value(vals, n)
        rhs = entry.rhs.value(vals, n)
    except (PoleAtTerm, ZeroDivisionError) as exc:
        if strict:
            raise IdenticallyUndefined(f"{entry.id}: {exc}") from exc
        return Verdict("skipped", reason=str(exc), **info)
    return _compare(lhs, rhs, **info)


def check_identity(id_, n, params):
    """Evaluate both sides of catalog relation ``id_`` exactly at one sample."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _check(get_entry(id_), n, params)


def expand_prop31(p, q, a, c, extra_num, extra_den, x, n):
    """Compare a (p+3)F(q+3) with its expansion as a sum of (p+1)F(q+1) series."""
    if len(extra_num) != p or len(extra_den) != q:
        raise ValueError("p and q must match the extra parameter lists")
    entry = _expansion_entry(p, q)
    return _check(entry, n, [a, c, *extra_num, *extra_den, x])


def list_catalog():
    """``(id, relation, arity, guards)`` for every entry, in stable order."""
    return [(e.id, e.description, e.arity, e.guard_description()) for e in CATALOG.values()]
