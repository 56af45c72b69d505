"""Affine forms in named parameters with rational coefficients.

``Affine`` represents expressions such as ``(1+3x-y-z-2n)/2``.  The symbol
``n`` is an ordinary variable here, so substitutions stay uniform in ``n``.
"""

import math
from fractions import Fraction
from numbers import Rational

from ._expr import parse_expression


class Affine:
    __slots__ = ("terms", "const")

    def __init__(self, terms=None, const=0):
        terms = terms or {}
        self.terms = tuple(sorted((v, Fraction(c)) for v, c in terms.items() if c != 0))
        self.const = Fraction(const)

    @classmethod
    def var(cls, name):
        return cls({name: 1})

    @classmethod
    def parse(cls, text):
        value = parse_expression(text, cls.var)
        return value if isinstance(value, Affine) else cls(const=value)

    def coeff(self, name):
        for v, c in self.terms:
            if v == name:
                return c
        return Fraction(0)

    @property
    def variables(self):
        return tuple(v for v, _ in self.terms)

    def is_constant(self):
        return not self.terms

    def _dict(self):
        return dict(self.terms)

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = Affine(const=other)
        if not isinstance(other, Affine):
            return NotImplemented
        return self.terms == other.terms and self.const == other.const

    def __hash__(self):
        return hash((self.terms, self.const))

    def __neg__(self):
        return Affine({v: -c for v, c in self.terms}, -self.const)

    def __add__(self, other):
        if isinstance(other, Rational):
            return Affine(self._dict(), self.const + other)
        if not isinstance(other, Affine):
            return NotImplemented
        d = self._dict()
        for v, c in other.terms:
            d[v] = d.get(v, 0) + c
        return Affine(d, self.const + other.const)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Affine):
            if other.is_constant():
                other = other.const
            elif self.is_constant():
                return other * self.const
            else:
                raise ValueError("product of two non-constant affine forms")
        if not isinstance(other, Rational):
            return NotImplemented
        return Affine({v: c * other for v, c in self.terms}, self.const * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Affine):
            if not other.is_constant():
                raise ValueError("division by a non-constant affine form")
            other = other.const
        return self * (1 / Fraction(other))

    def __rtruediv__(self, other):
        if not self.is_constant():
            raise ValueError("division by a non-constant affine form")
        return Affine(const=Fraction(other) / self.const)

    def __pow__(self, k):
        if k == 1:
            return self
        if k == 0:
            return Affine(const=1)
        if self.is_constant():
            return Affine(const=self.const ** k)
        raise ValueError("nonlinear power of an affine form")

    def subs(self, mapping):
        """Substitute affine forms for variables (missing names are kept)."""
        out = Affine(const=self.const)
        for v, c in self.terms:
            out = out + c * (mapping[v] if v in mapping else Affine.var(v))
        return out

    def __call__(self, values):
        """Evaluate with ``values[name]`` scalars (``n`` may be an int)."""
        acc = self.const
        for v, c in self.terms:
            x = values[v]
            acc = acc + (x if c == 1 else -x if c == -1 else c * x)
        return acc

    def __repr__(self):
        return f"Affine({str(self)!r})"

    def __str__(self):
        den = math.lcm(self.const.denominator, *(c.denominator for _, c in self.terms))
        if den > 1:
            inner = self * den
            body = str(inner)
            if len(inner.terms) + bool(inner.const) > 1 or body.startswith("-"):
                body = f"({body})"
            return f"{body}/{den}"
        parts = []
        if self.const:
            parts.append(str(self.const))
        for v, c in self.terms:
            mag = -c if c < 0 else c
            body = v if mag == 1 else f"{mag}{v}"
            if c < 0:
                parts.append("-" + body)
            else:
                parts.append(("+" if parts else "") + body)
        return "".join(parts) if parts else "0"


class AffineMap:
    """Affine substitution of a parameter tuple, uniform in the formal ``n``.

    Output coordinate ``i`` is ``sum_j matrix[i][j] * p_j + const_i + ncoef_i * n``.
    ``offset`` holds the ``(const_i, ncoef_i)`` pairs.
    """

    __slots__ = ("inputs", "outputs", "matrix", "offset")

    def __init__(self, inputs, outputs, matrix, offset):
        self.inputs = tuple(inputs)
        self.outputs = tuple(outputs)
        self.matrix = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        self.offset = tuple((Fraction(c), Fraction(k)) for c, k in offset)
        if len(self.matrix) != len(self.outputs) or any(len(r) != len(self.inputs) for r in self.matrix):
            raise ValueError("matrix shape does not match input/output names")

    @classmethod
    def from_exprs(cls, inputs, exprs, outputs=None):
        """Build from affine expressions (strings or :class:`Affine`) in ``inputs`` and ``n``."""
        inputs = tuple(inputs)
        outputs = tuple(outputs) if outputs is not None else inputs
        forms = [e if isinstance(e, Affine) else Affine.parse(e) for e in exprs]
        for form in forms:
            stray = set(form.variables) - set(inputs) - {"n"}
            if stray:
                raise ValueError(f"unknown variables {sorted(stray)} in {form}")
        matrix = [[f.coeff(v) for v in inputs] for f in forms]
        offset = [(f.const, f.coeff("n")) for f in forms]
        return cls(inputs, outputs, matrix, offset)

    @classmethod
    def identity(cls, names):
        names = tuple(names)
        k = len(names)
        return cls(names, names, [[int(i == j) for j in range(k)] for i in range(k)], [(0, 0)] * k)

    @classmethod
    def permutation(cls, names, order):
        """Map ``(p_0, ..., p_k) -> (p_order[0], ..., p_order[k])``."""
        names = tuple(names)
        k = len(names)
        return cls(names, names, [[int(j == order[i]) for j in range(k)] for i in range(k)], [(0, 0)] * k)

    @property
    def arity(self):
        return len(self.inputs)

    def is_square(self):
        return len(self.inputs) == len(self.outputs)

    def exprs(self):
        """Output coordinates as :class:`Affine` forms in the input names."""
        forms = []
        for row, (c, k) in zip(self.matrix, self.offset):
            terms = dict(zip(self.inputs, row))
            terms["n"] = terms.get("n", 0) + k
            forms.append(Affine(terms, c))
        return forms

    def substitution(self):
        """``{output_name: Affine}`` for rewriting expressions over the outputs."""
        return dict(zip(self.outputs, self.exprs()))

    def __call__(self, params, n):
        out = []
        for row, (c, k) in zip(self.matrix, self.offset):
            acc = c + k * n
            for coef, p in zip(row, params):
                if coef:
                    acc = acc + coef * p
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        return self.matrix == other.matrix and self.offset == other.offset

    def __hash__(self):
        return hash((self.matrix, self.offset))

    def __repr__(self):
        return f"AffineMap({self})"

    def __str__(self):
        return f"({', '.join(self.inputs)}) -> ({', '.join(map(str, self.exprs()))})"


def compose(f, g):
    """The map "apply ``g`` first, then ``f``"."""
    if f.arity != len(g.outputs):
        raise ValueError(f"cannot compose: {f.arity} inputs after {len(g.outputs)} outputs")
    matrix = [
        [sum((f.matrix[i][k] * g.matrix[k][j] for k in range(f.arity)), Fraction(0)) for j in range(g.arity)]
        for i in range(len(f.outputs))
    ]
    offset = []
    for i in range(len(f.outputs)):
        c, m = f.offset[i]
        for k in range(f.arity):
            gc, gm = g.offset[k]
            c += f.matrix[i][k] * gc
            m += f.matrix[i][k] * gm
        offset.append((c, m))
    return AffineMap(g.inputs, f.outputs, matrix, offset)
