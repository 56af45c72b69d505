"""Identities over Q(t) and exact limits toward degenerate parameter values.

A parameter is replaced by ``target + direction * t``; both sides of a
relation are evaluated as rational functions of ``t`` and the limit is read
off after exact cancellation.  No numeric approach sequences are used.
"""

from dataclasses import dataclass
from fractions import Fraction

from .catalog import _check, _values, get_entry
from .field import T, PoleError, RatFun, format_scalar, is_zero, ratfun_limit_at_zero
from .series import SeriesSpec, eval_terminating, pochhammer

__all__ = [
    "Pole",
    "GuardFailure",
    "PerturbedSample",
    "perturb",
    "check_identity_perturbed",
    "ceil_half",
    "omega_chu",
    "omega_chen_chu",
    "prop52_limit",
    "omega_table",
    "format_limit",
]


@dataclass(frozen=True)
class Pole:
    """Divergent limit; ``order`` is the order of the pole in ``t``."""

    order: int

    def __str__(self):
        return f"pole({self.order})"


class GuardFailure(ArithmeticError):
    pass


@dataclass(frozen=True)
class PerturbedSample:
    n: int
    params: tuple


def perturb(n, params, index, direction=1):
    """Sample with ``params[index]`` replaced by ``params[index] + direction*t``."""
    params = [Fraction(p) for p in params]
    if direction == 0:
        raise ValueError("direction must be nonzero")
    params[index] = params[index] + Fraction(direction) * T
    return PerturbedSample(n, tuple(params))


def check_identity_perturbed(id_, sample):
    """Check a catalog relation as an identity of rational functions in ``t``.

    Raises :class:`~termhyp.catalog.IdenticallyUndefined` when a guard vanishes
    identically.
    """
    return _check(get_entry(id_), sample.n, list(sample.params), strict=True)


def ceil_half(n):
    return (n + 1) // 2


def _limit(value):
    try:
        return ratfun_limit_at_zero(value)
    except PoleError as exc:
        return Pole(exc.order)


def _side(id_, side, n, params):
    entry = get_entry(id_)
    vals = _values(params, entry.params, n)
    for guard in entry.guards:
        expr, length = guard
        x = expr(vals)
        g = pochhammer(x, length(n)) if length is not None else x
        if is_zero(g):
            raise GuardFailure(f"{id_}: guard ({expr}) vanishes identically")
    return getattr(entry, side).value(vals, n)


def omega_chu(n, gamma, route="lhs", direction=1):
    """Limit of ``2F1(-n, 1/2; c; 4)`` as ``c -> 1 + gamma + ceil(n/2)``.

    ``route="rhs"`` takes the limit of the transformed 3F2 side instead.
    """
    c = 1 + gamma + ceil_half(n) + Fraction(direction) * T
    if route == "lhs":
        value = eval_terminating(SeriesSpec([-n, Fraction(1, 2)], [c], 4))
    elif route == "rhs":
        value = _side("2F1-C", "rhs", n, [c])
    else:
        raise ValueError(f"unknown route {route!r}")
    return _limit(value)


def omega_chen_chu(n, gamma, a, route="lhs", direction=1):
    """Limit of ``3F2(-n, a/2, (a+1)/2; a, c; 4)`` as ``c -> gamma + a + ceil(n/2)``."""
    a = Fraction(a)
    if is_zero(pochhammer(a, n)):
        raise GuardFailure(f"(a)_n vanishes for a={a}, n={n}")
    c = gamma + a + ceil_half(n) + Fraction(direction) * T
    if route == "lhs":
        value = eval_terminating(SeriesSpec([-n, a / 2, (a + 1) / 2], [a, c], 4))
    elif route == "rhs":
        value = _side("3F2-C", "rhs", n, [a, c])
    else:
        raise ValueError(f"unknown route {route!r}")
    return _limit(value)


def prop52_limit(n, a, c, odd=False, direction=1):
    """Right side of the reduced 3F2(1/4) relation, obtained as a limit.

    Takes the six-fold relation ``R_N(a,b,c) = R_N(1+a-b-c-N, 1-c-N, a-c-N)``
    with ``N = 2n`` (or ``2n+1``), lets ``b -> a-c-N`` over Q(t) and divides by
    the limiting prefactor ``(1-a)_N (a-c-N)_N``.
    """
    a, c = Fraction(a), Fraction(c)
    big_n = 2 * n + (1 if odd else 0)
    norm = pochhammer(1 - a, big_n) * pochhammer(a - c - big_n, big_n)
    if norm == 0:
        raise GuardFailure("(1-a)_N (a-c-N)_N vanishes")
    b = a - c - big_n + Fraction(direction) * T
    value = _side("RI5", "rhs", big_n, [a, b, c])
    limit = _limit(value)
    if isinstance(limit, Pole):
        return limit
    return limit / norm


def omega_table(kind, n_max, gammas, a=None, route="lhs"):
    """Grid of limits: rows ``n = 0..n_max``, columns ``gammas``."""
    rows = []
    for n in range(n_max + 1):
        row = []
        for g in gammas:
            if kind == "chu":
                row.append(omega_chu(n, g, route=route))
            else:
                row.append(omega_chen_chu(n, g, a, route=route))
        rows.append(row)
    return rows


def format_limit(value):
    return str(value) if isinstance(value, Pole) else format_scalar(value)


def is_perturbed(sample):
    return any(isinstance(p, RatFun) for p in sample.params)
