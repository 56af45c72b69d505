"""Shared strategies and a direct-summation oracle."""

import math
from fractions import Fraction

from hypothesis import strategies as st


def rationals(bound=12, dens=(1, 2, 3, 5, 7)):
    return st.builds(Fraction, st.integers(-bound, bound), st.sampled_from(dens))


def nonzero_rationals(bound=12):
    return rationals(bound).filter(lambda x: x != 0)


def rising(x, k):
    """(x)_k as an explicit product, independent of the library."""
    return math.prod((x + j for j in range(k)), start=Fraction(1))


def direct_sum(nums, dens, z, last):
    """Sum of terms k = 0..last, each built from scratch (no term ratios)."""
    total = Fraction(0)
    for k in range(last + 1):
        top = math.prod((rising(Fraction(a), k) for a in nums), start=Fraction(1))
        bottom = math.prod((rising(Fraction(b), k) for b in dens), start=Fraction(1))
        total += top * Fraction(z) ** k / (bottom * math.factorial(k))
    return total


def random_rational(rng, bound=12, dens=(1, 2, 3, 5, 7)):
    return Fraction(rng.randint(-bound, bound), rng.choice(dens))


def random_reversible_spec(rng, n_max=8):
    """Terminating pFq (p, q <= 3) whose reversal is defined: every parameter
    other than -n has a nonvanishing (.)_n."""
    from termhyp.series import SeriesSpec

    while True:
        n = rng.randint(0, n_max)
        p, q = rng.randint(1, 3), rng.randint(0, 3)
        rest = [random_rational(rng) for _ in range(p - 1)]
        dens = [random_rational(rng) for _ in range(q)]
        z = random_rational(rng)
        if z == 0 or any(rising(x, n) == 0 for x in rest + dens):
            continue
        nums = rest[:]
        nums.insert(rng.randint(0, len(rest)), Fraction(-n))
        return SeriesSpec(nums, dens, z)


ACCEPTANCE_LINES = []


def record(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
