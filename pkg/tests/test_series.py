import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from termhyp.field import T
from termhyp.series import (
    NonTerminatingError,
    PoleAtTerm,
    SeriesSpec,
    ZeroArgumentError,
    chu_vandermonde_rhs,
    eval_terminating,
    parse_series,
    partial_sum,
    pochhammer,
    pochhammer_reverse_index,
    reverse,
    termination_index,
)

from conftest import direct_sum, random_reversible_spec, rationals, rising

F = Fraction


class TestPochhammer:
    def test_examples(self):
        assert pochhammer(F(1, 2), 3) == F(15, 8)
        assert pochhammer(F(7, 3), 0) == 1
        assert pochhammer(-3, 5) == 0

    def test_negative_length(self):
        with pytest.raises(ValueError):
            pochhammer(1, -1)

    def test_reverse_index_examples(self):
        assert pochhammer_reverse_index(2, 3, 0) == 24
        assert pochhammer_reverse_index(F(1, 2), 2, 1) == F(1, 2)
        assert pochhammer_reverse_index(1, 2, 2) == 1

    @given(rationals(), st.integers(0, 12), st.data())
    def test_reverse_index(self, a, n, data):
        k = data.draw(st.integers(0, n))
        assume(rising(1 - a - n, k) != 0)
        assert pochhammer_reverse_index(a, n, k) == pochhammer(a, n - k)

    @given(rationals(), st.integers(0, 20))
    def test_doubling(self, a, n):
        assert pochhammer(a, 2 * n) == 4**n * pochhammer(a / 2, n) * pochhammer((a + 1) / 2, n)

    def test_over_rational_functions(self):
        assert pochhammer(T, 2) == T * (T + 1)


class TestTermination:
    def test_examples(self):
        assert termination_index(SeriesSpec([-3, F(1, 2)], [], 1)) == 3
        assert termination_index(SeriesSpec([-5, -2], [], 1)) == 2
        with pytest.raises(NonTerminatingError):
            termination_index(SeriesSpec([F(1, 2), 3], [], 1))

    def test_perturbed_parameter_does_not_terminate(self):
        with pytest.raises(NonTerminatingError):
            termination_index(SeriesSpec([T - 2], [], 1))


class TestEval:
    def test_examples(self):
        assert eval_terminating(SeriesSpec([-1, F(1, 2), 1, 1], [1, 1, 1], 4)) == -1
        assert eval_terminating(SeriesSpec([0, 5], [F(1, 3)], 9)) == 1
        assert eval_terminating(SeriesSpec([-2, F(1, 2)], [3], 1)) == F(35, 48)

    def test_pole_reached(self):
        with pytest.raises(PoleAtTerm) as info:
            eval_terminating(SeriesSpec([-3, 1], [-1], 1))
        assert info.value.k == 2

    def test_pole_annihilated(self):
        # the summand dies at k = 2 before the denominator reaches zero
        assert eval_terminating(SeriesSpec([-1, 1], [-2], 1)) == F(3, 2)
        assert eval_terminating(SeriesSpec([-4, -1], [-2], 1)) == 1 - F(4, 2)

    @given(st.lists(rationals(), max_size=3), st.lists(rationals(), max_size=3), rationals(), st.integers(0, 8))
    def test_matches_direct_sum(self, rest, dens, z, n):
        assume(all(rising(b, n) != 0 for b in dens))
        s = SeriesSpec([-n] + rest, dens, z)
        assume(termination_index(s) == n)
        assert eval_terminating(s) == direct_sum(s.numerators, dens, z, n)


class TestPartialSum:
    def test_examples(self):
        assert partial_sum(SeriesSpec([1, 1], [1], 4), 1) == 5
        assert partial_sum(SeriesSpec([F(2, 3)], [F(1, 5)], 7), 0) == 1
        assert partial_sum(SeriesSpec([F(1, 2), 1, 1], [1, 1], 4), 2) == 9

    @given(st.lists(rationals(), max_size=3), st.lists(rationals(), max_size=3), rationals(), st.integers(0, 8))
    def test_agrees_at_termination_index(self, rest, dens, z, n):
        assume(all(rising(b, n) != 0 for b in dens))
        s = SeriesSpec([-n] + rest, dens, z)
        m = termination_index(s)
        assert partial_sum(s, m) == eval_terminating(s)


class TestReverse:
    def test_example(self):
        s = SeriesSpec([-1, 1], [2], 4)
        prefactor, rev = reverse(s)
        assert prefactor == -2
        assert rev == SeriesSpec([-1, -2], [-1], F(1, 4))
        assert eval_terminating(s) == -1
        assert prefactor * eval_terminating(rev) == -1

    def test_n_zero(self):
        prefactor, rev = reverse(SeriesSpec([0, F(1, 3)], [F(2, 7)], 5))
        assert prefactor == 1
        assert termination_index(rev) == 0
        assert eval_terminating(rev) == 1

    def test_zero_argument(self):
        with pytest.raises(ZeroArgumentError):
            reverse(SeriesSpec([-2], [], 0))

    def test_contract_and_involution(self):
        rng = random.Random(11)
        for _ in range(200):
            s = random_reversible_spec(rng)
            value = eval_terminating(s)
            prefactor, rev = reverse(s)
            assert prefactor * eval_terminating(rev) == value
            prefactor2, back = reverse(rev)
            assert prefactor * prefactor2 * eval_terminating(back) == value
            assert sorted(back.numerators) == sorted(s.numerators)
            assert sorted(back.denominators) == sorted(s.denominators)
            assert back.argument == s.argument


class TestChuVandermonde:
    def test_examples(self):
        assert chu_vandermonde_rhs(2, F(1, 2), 3) == F(35, 48)
        assert chu_vandermonde_rhs(0, F(3, 7), F(-5, 2)) == 1
        assert chu_vandermonde_rhs(1, 1, 2) == F(1, 2)

    @given(st.integers(0, 10), rationals(), rationals())
    def test_against_direct_sum(self, n, a, b):
        assume(rising(b, n) != 0)
        s = SeriesSpec([-n, a], [b], 1)
        expected = direct_sum([-n, a], [b], 1, n)
        assert eval_terminating(s) == expected == chu_vandermonde_rhs(n, a, b)


class TestParse:
    def test_round_trip(self):
        s = parse_series("3F2(-2, 1/2, 1+1/3; 3, -7/2; 1/4)")
        assert s == SeriesSpec([-2, F(1, 2), F(4, 3)], [3, F(-7, 2)], F(1, 4))
        assert parse_series(str(s)) == s

    def test_empty_lists(self):
        s = parse_series("1F0(-3; ; 2)")
        assert s.p == 1 and s.q == 0
        assert eval_terminating(s) == (1 - 2) ** 3

    @pytest.mark.parametrize("bad", ["2F1(1; 2; 3)", "2F1(1, 2, 3)", "hello", "1F1(1; 2; x)"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_series(bad)
