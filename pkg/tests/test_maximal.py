from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from maxlab import (
    DiscreteMeasure,
    SampleFunction,
    ball_average,
    centered_maximal,
    centered_maximal_measure,
    dirac,
    enumerate_balls,
    gen_function,
    gen_graph_metric,
    gen_measure,
    gen_taxicab,
    gen_ultrametric,
    inf_ball_measure_pair,
    maximal_field,
    noncentered_maximal,
    noncentered_maximal_measure,
    validate_space,
)


@st.composite
def instances(draw):
    kind = draw(st.integers(0, 2))
    n = draw(st.integers(1, 8))
    seed = draw(st.integers(0, 10**6))
    if kind == 0:
        space = gen_ultrametric(n, seed=seed)
    elif kind == 1:
        space = gen_taxicab(n, dim=draw(st.integers(1, 3)), seed=seed)
    else:
        space = gen_graph_metric(n, seed=seed)
    mu = gen_measure(space, seed=draw(st.integers(0, 10**6)), zero_fraction=0.25)
    f = gen_function(space, seed=draw(st.integers(0, 10**6)))
    return space, mu, f


class TestExamples:
    def test_centered_line3(self, line3, uniform3, ind2):
        family = enumerate_balls(line3)
        got = centered_maximal(ind2, uniform3, family, 1)
        assert got.value == Fraction(1, 3)
        assert got.ball.members == (0, 1, 2)

    def test_centered_dominates_point_value(self, line3, uniform3, ind2):
        family = enumerate_balls(line3)
        got = centered_maximal(ind2, uniform3, family, 2)
        assert got.value == 1
        assert got.ball.members == (2,)

    def test_constant_function(self, line3, uniform3):
        ones = SampleFunction((1, 1, 1))
        report = maximal_field(ones, uniform3, line3)
        assert set(report.centered_values().values()) == {Fraction(1)}
        assert set(report.noncentered_values().values()) == {Fraction(1)}

    def test_noncentered_line3(self, line3, uniform3, ind2):
        family = enumerate_balls(line3)
        got = noncentered_maximal(ind2, uniform3, family, 1)
        assert got.value == Fraction(1, 2)
        assert got.ball.members == (1, 2)

    def test_single_point_space(self):
        space = validate_space([[0]])
        mu = DiscreteMeasure((Fraction(3, 2),))
        f = SampleFunction((Fraction(-7, 3),))
        family = enumerate_balls(space)
        assert noncentered_maximal(f, mu, family, 0).value == Fraction(-7, 3)

    def test_noncentered_equilateral(self, eq3, uniform3, ind2):
        family = enumerate_balls(eq3)
        assert noncentered_maximal(ind2, uniform3, family, 0).value == Fraction(1, 3)

    def test_measure_maximal_examples(self, line3, uniform3):
        family = enumerate_balls(line3)
        got = noncentered_maximal_measure(dirac(line3, 0), uniform3, family, 2)
        assert got.value == Fraction(1, 3)
        got = noncentered_maximal_measure(dirac(line3, 2), uniform3, family, 1)
        assert got.value == Fraction(1, 2)
        assert got.ball.members == (1, 2)

    def test_measure_maximal_of_itself(self, line3, uniform3):
        family = enumerate_balls(line3)
        for x in range(3):
            assert centered_maximal_measure(uniform3, uniform3, family, x).value == 1
            assert noncentered_maximal_measure(uniform3, uniform3, family, x).value == 1

    def test_inf_pair_examples(self, line3, uniform3):
        family = enumerate_balls(line3)
        value, ball = inf_ball_measure_pair(uniform3, family, 1, 2)
        assert value == 2 and ball.members == (1, 2)
        value, ball = inf_ball_measure_pair(uniform3, family, 0, 2)
        assert value == 3 and ball.members == (0, 1, 2)
        value, ball = inf_ball_measure_pair(uniform3, family, 1, 1)
        assert value == 1 and ball.members == (1,)

    def test_maximal_field_line3(self, line3, uniform3, ind2):
        report = maximal_field(ind2, uniform3, line3)
        assert report.centered_values() == {0: Fraction(1, 3), 1: Fraction(1, 3), 2: Fraction(1)}
        assert report.noncentered_values() == {
            0: Fraction(1, 3),
            1: Fraction(1, 2),
            2: Fraction(1),
        }

    def test_maximal_field_equilateral(self, eq3, uniform3, ind2):
        report = maximal_field(ind2, uniform3, eq3)
        assert report.centered_values() == report.noncentered_values()
        assert report.centered_values() == {
            0: Fraction(1, 3),
            1: Fraction(1, 3),
            2: Fraction(1),
        }

    def test_off_support_rejected(self, line3, ind2):
        mu = DiscreteMeasure((1, 0, 1))
        family = enumerate_balls(line3)
        with pytest.raises(ValueError, match="support"):
            centered_maximal(ind2, mu, family, 1)
        report = maximal_field(ind2, mu, line3)
        assert [e.point for e in report.points] == [0, 2]
        with pytest.raises(KeyError):
            report.at(1)

    def test_parallel_matches_serial(self, line3, uniform3, ind2):
        serial = maximal_field(ind2, uniform3, line3)
        parallel = maximal_field(ind2, uniform3, line3, parallel=True)
        assert serial == parallel

    def test_tie_break_smallest_ball(self, line3, uniform3):
        # every average of a constant ties; the singleton must win
        ones = SampleFunction((1, 1, 1))
        family = enumerate_balls(line3)
        assert centered_maximal(ones, uniform3, family, 1).ball.members == (1,)
        assert noncentered_maximal(ones, uniform3, family, 1).ball.members == (1,)


class TestProperties:
    @given(instances())
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force(self, inst):
        space, mu, f = inst
        family = enumerate_balls(space)
        for x in mu.support:
            assert centered_maximal(f, mu, family, x).value == oracle.centered_value(
                space, mu, f, x
            )
            assert noncentered_maximal(f, mu, family, x).value == oracle.noncentered_value(
                space, mu, f, x
            )

    @given(instances())
    @settings(max_examples=60, deadline=None)
    def test_domination_and_argmax_reproduction(self, inst):
        space, mu, f = inst
        report = maximal_field(f, mu, space)
        for entry in report.points:
            assert entry.centered.value <= entry.noncentered.value
            assert ball_average(f, mu, entry.centered.ball) == entry.centered.value
            assert ball_average(f, mu, entry.noncentered.ball) == entry.noncentered.value

    @given(instances(), st.integers(1, 9))
    @settings(max_examples=40, deadline=None)
    def test_positive_homogeneity(self, inst, c):
        space, mu, f = inst
        family = enumerate_balls(space)
        for x in mu.support:
            base_c = centered_maximal(f, mu, family, x).value
            base_n = noncentered_maximal(f, mu, family, x).value
            assert centered_maximal(f.scaled(c), mu, family, x).value == c * base_c
            assert noncentered_maximal(f.scaled(c), mu, family, x).value == c * base_n
            assert centered_maximal(f, mu.scaled(c), family, x).value == base_c
            assert noncentered_maximal(f, mu.scaled(c), family, x).value == base_n

    @given(instances(), st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_sublinearity(self, inst, seed):
        space, mu, f = inst
        g = gen_function(space, seed=seed)
        family = enumerate_balls(space)
        for x in mu.support:
            for op in (centered_maximal, noncentered_maximal):
                assert (
                    op(f.plus(g), mu, family, x).value
                    <= op(f, mu, family, x).value + op(g, mu, family, x).value
                )

    @given(instances())
    @settings(max_examples=40, deadline=None)
    def test_inf_pair_matches_brute_force(self, inst):
        space, mu, _ = inst
        family = enumerate_balls(space)
        for x in range(space.n):
            for y in range(space.n):
                value, ball = inf_ball_measure_pair(mu, family, x, y)
                assert value == oracle.inf_pair_measure(space, mu, x, y)
                assert {x, y} <= set(ball.members)

    @given(instances())
    @settings(max_examples=60, deadline=None)
    def test_dirac_identity(self, inst):
        space, mu, _ = inst
        family = enumerate_balls(space)
        support = mu.support
        for x in support:
            delta = dirac(space, x)
            for y in support:
                value = noncentered_maximal_measure(delta, mu, family, y).value
                inf_value, _ = inf_ball_measure_pair(mu, family, x, y)
                assert value * inf_value == 1

    @given(instances(), st.integers(1, 50))
    @settings(max_examples=40, deadline=None)
    def test_measure_continuity(self, inst, k):
        # entrywise perturbation by eps moves both values by at most n*eps/mu_min
        space, mu, _ = inst
        family = enumerate_balls(space)
        eps = Fraction(1, 10 * k)
        nu = mu
        bumped = DiscreteMeasure(tuple(w + eps for w in nu.weights))
        for x in mu.support:
            mu_min = min(
                sum((mu.weights[p] for p in family.balls[i].members), Fraction(0))
                for i in family.containing[x]
            )
            bound = Fraction(space.n) * eps / mu_min
            for op in (centered_maximal_measure, noncentered_maximal_measure):
                before = op(nu, mu, family, x).value
                after = op(bumped, mu, family, x).value
                assert abs(after - before) <= bound
