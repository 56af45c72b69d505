import random
from fractions import Fraction

import pytest

from termhyp.affine import AffineMap
from termhyp.catalog import (
    CATALOG,
    NAMED,
    UnknownIdError,
    _invariance_entry,
    _check,
    check_identity,
    eval_named,
    expand_ids,
    expand_prop31,
    list_catalog,
)
from termhyp.series import SeriesSpec, eval_terminating

from conftest import random_rational

F = Fraction


def t1_closed_form(a, b, c):
    # T_1(a,b,c) = (1+a-c)c - (a+1)b by summing the two terms by hand
    return (1 + a - c) * c - (a + 1) * b


def admissible(id_, rng, n_max=8, tries=500):
    entry = CATALOG[id_]
    for _ in range(tries):
        n = rng.randint(0, n_max)
        params = [random_rational(rng) for _ in entry.params]
        verdict = check_identity(id_, n, params)
        if verdict.status != "skipped":
            return n, params, verdict
    raise AssertionError(f"no admissible sample for {id_}")


class TestNamed:
    def test_t1(self):
        assert eval_named("T", 1, [1, 1, 1]) == -1
        a, b, c = F(1, 3), F(1, 5), F(2, 7)
        assert eval_named("T", 1, [a, b, c]) == t1_closed_form(a, b, c)

    def test_t0(self):
        assert eval_named("T", 0, [F(3, 5), F(-7, 2), F(1, 3)]) == 1

    def test_w_is_q_reparameterized(self):
        n, x, y = 2, F(1, 3), F(1, 5)
        assert eval_named("W", n, [x, y]) == eval_named("Q", n, [x, (1 + x + y + n) / 2])

    def test_t_definition(self):
        n, a, b, c = 3, F(2, 3), F(-1, 5), F(7, 2)
        from termhyp.series import pochhammer

        series = eval_terminating(SeriesSpec([-n, a / 2, (a + 1) / 2, b], [a, 1 + a - c, c], 4))
        assert eval_named("T", n, [a, b, c]) == pochhammer(1 + a - c, n) * pochhammer(c, n) * series

    def test_unknown(self):
        with pytest.raises(UnknownIdError):
            eval_named("X", 1, [1])


class TestExamples:
    def test_ti3(self):
        v = check_identity("TI3", 1, [F(1, 3), F(1, 5), F(2, 7)])
        assert v.status == "holds"
        assert v.lhs == t1_closed_form(F(1, 3), F(1, 5), F(2, 7))

    def test_p33_n0(self):
        v = check_identity("P3.3", 0, [F(1, 3), F(2, 5), F(-3, 7)])
        assert v.status == "holds" and v.lhs == v.rhs == 1

    def test_3f2b(self):
        v = check_identity("3F2-B", 1, [F(1, 2), 3])
        assert v.status == "holds"
        # 1 + (-1)(1/4)(3/4)4/((1/2)3) = 1/2
        assert v.lhs == F(1, 2)

    def test_guard_gives_skipped(self):
        # (c)_n vanishes at c = -1, n = 3
        v = check_identity("TI1", 3, [F(1, 2), F(1, 3), -1])
        assert v.status == "skipped"
        assert "vanishes" in v.reason

    def test_negative_n(self):
        with pytest.raises(ValueError):
            check_identity("TI1", -1, [1, 2, 3])


class TestProp31:
    def test_p0_q0(self):
        v = expand_prop31(0, 0, 1, 1, [], [], 4, 1)
        assert v.status == "holds" and v.lhs == -1

    def test_reduces_to_p32_route(self):
        v = expand_prop31(1, 0, 1, F(1, 3), [F(1, 2)], [], 4, 1)
        assert v.status == "holds"
        assert v.lhs == check_identity("P3.2", 1, [1, F(1, 2), F(1, 3)]).lhs

    def test_n0(self):
        v = expand_prop31(2, 1, F(1, 3), F(2, 5), [F(1, 7), 2], [F(5, 3)], F(-2), 0)
        assert v.lhs == v.rhs == 1

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            expand_prop31(1, 0, 1, 1, [], [], 4, 1)

    @pytest.mark.parametrize("p,q", [(0, 0), (1, 0), (1, 1), (2, 1)])
    @pytest.mark.parametrize("x", [F(4), F(1), F(-2), F(1, 3)])
    def test_random(self, p, q, x):
        rng = random.Random(p * 100 + q * 10 + x.numerator)
        done = 0
        while done < 10:
            a, c = random_rational(rng), random_rational(rng)
            nums = [random_rational(rng) for _ in range(p)]
            dens = [random_rational(rng) for _ in range(q)]
            v = expand_prop31(p, q, a, c, nums, dens, x, rng.randint(0, 6))
            if v.status != "skipped":
                assert v.status == "holds", v
                done += 1


class TestListing:
    def test_size_and_ids(self):
        rows = list_catalog()
        ids = [r[0] for r in rows]
        assert len(rows) >= 40
        assert "P5.2-odd" in ids
        assert len(set(ids)) == len(ids)

    def test_every_id_resolves(self):
        rng = random.Random(3)
        for id_ in CATALOG:
            assert admissible(id_, rng)[2].status == "holds"

    def test_expand_ids(self):
        assert expand_ids("TI1..TI3") == ["TI1", "TI2", "TI3"]
        assert expand_ids("Q-inv,W-swap") == ["Q-inv", "W-swap"]
        assert expand_ids("all") == list(CATALOG)
        with pytest.raises(UnknownIdError):
            expand_ids("TI7")

    def test_relation_text_is_readable(self):
        assert dict((r[0], r[1]) for r in list_catalog())["TI3"] == "T(a,b,c) = T(-b+c-n, -a+c-n, c)"


def specialized(id_, full_id, subs, rng, both_sides, tries=40):
    checked = 0
    for _ in range(tries):
        n = rng.randint(0, 8)
        a, c = random_rational(rng), random_rational(rng)
        small = check_identity(id_, n, [a, c])
        big = check_identity(full_id, n, subs(n, a, c))
        if small.status == "skipped" or big.status == "skipped":
            continue
        assert small.lhs == big.lhs
        if both_sides:
            assert small.rhs == big.rhs
        checked += 1
    assert checked >= 10


class TestSpecializations:
    def test_3f2a_is_p33_at_b_equal_a(self):
        specialized("3F2-A", "P3.3", lambda n, a, c: [a, a, c], random.Random(1), True)

    def test_3f2b_is_p33_at_b_equal_1_plus_a_minus_c(self):
        specialized("3F2-B", "P3.3", lambda n, a, c: [a, 1 + a - c, c], random.Random(2), False)

    def test_3f2c_is_p33_at_b_equal_1_plus_a_minus_c(self):
        specialized("3F2-C", "P3.3", lambda n, a, c: [a, 1 + a - c, c], random.Random(3), False)

    def test_3f2d_is_p51_at_b_equal_a(self):
        specialized("3F2-D", "P5.1", lambda n, a, c: [a, a, c], random.Random(4), True)

    def test_3f2e_is_p51_at_b_equal_a_minus_c_minus_n(self):
        specialized("3F2-E", "P5.1", lambda n, a, c: [a, a - c - n, c], random.Random(5), False)


def test_symmetric_values():
    rng = random.Random(9)
    for name in ("U", "Utilde", "V", "Vtilde"):
        checked = 0
        while checked < 10:
            n = rng.randint(0, 6)
            x, y, z = (random_rational(rng) for _ in range(3))
            try:
                values = {eval_named(name, n, list(p)) for p in [(x, y, z), (x, z, y), (y, x, z), (y, z, x), (z, x, y), (z, y, x)]}
            except ZeroDivisionError:
                continue
            assert len(values) == 1
            checked += 1


def test_corrupted_relation_is_caught():
    # T(a,b,c) = T(c-b-n, c-a-n+1, c) is not an invariance
    fn = NAMED["T"]
    wrong = AffineMap.from_exprs("abc", ["c-b-n", "c-a-n+1", "c"])
    entry = _invariance_entry("bad", fn, wrong)
    rng = random.Random(0)
    fails = 0
    for _ in range(50):
        params = [random_rational(rng) for _ in range(3)]
        fails += _check(entry, rng.randint(1, 6), params).status == "fails"
    assert fails > 25
