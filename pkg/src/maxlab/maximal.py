"""Centered and non-centered maximal averages, exactly evaluated over a ball family.

The centered value at x is the maximum of ball averages over balls centered at
x; the non-centered value ranges over every ball containing x. Both are
finite maxima because membership changes only at radii drawn from the distance
matrix. Argmax ties are broken toward the smallest member set (cardinality,
then lexicographic) so reports are reproducible.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .measure import DiscreteMeasure, SampleFunction, integrate, measure_of
from .metric import Ball, BallFamily, FiniteMetricSpace, enumerate_balls

__all__ = [
    "MaximalValue",
    "PointMaximal",
    "MaximalReport",
    "centered_maximal",
    "noncentered_maximal",
    "centered_maximal_measure",
    "noncentered_maximal_measure",
    "inf_ball_measure_pair",
    "maximal_field",
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class MaximalValue:
    """A maximal average together with a ball representative achieving it."""

    value: Fraction
    ball: Ball


@dataclass(frozen=True)
class PointMaximal:
    point: int
    centered: MaximalValue
    noncentered: MaximalValue


@dataclass(frozen=True)
class MaximalReport:
    """Both maximal values at every support point (off-support points are absent)."""

    points: tuple[PointMaximal, ...]

    def at(self, point: int) -> PointMaximal:
        for entry in self.points:
            if entry.point == point:
                return entry
        raise KeyError(f"point {point} is not in the support")

    def centered_values(self) -> dict[int, Fraction]:
        return {e.point: e.centered.value for e in self.points}

    def noncentered_values(self) -> dict[int, Fraction]:
        return {e.point: e.noncentered.value for e in self.points}


def _require_support(mu: DiscreteMeasure, x: int) -> None:
    if not 0 <= x < mu.n:
        raise ValueError(f"point {x} out of range")
    if mu.weights[x] == 0:
        raise ValueError(f"point {x} is outside the support of the measure")


def _check_family(family: BallFamily, mu: DiscreteMeasure) -> None:
    if family.n != mu.n:
        raise ValueError(f"dimension mismatch: family on {family.n} points, measure on {mu.n}")


def _best(
    family: BallFamily, indices: Iterable[int], value_of
) -> MaximalValue:
    best_v: Fraction | None = None
    best_key = None
    best_ball = None
    for idx in indices:
        v = value_of(idx)
        ball = family.balls[idx]
        key = (len(ball.members), ball.members)
        if best_v is None or v > best_v or (v == best_v and key < best_key):
            best_v, best_key, best_ball = v, key, ball
    if best_ball is None:
        raise ValueError("no candidate balls")
    return MaximalValue(value=best_v, ball=best_ball)


def _average_on(f: SampleFunction, mu: DiscreteMeasure, ball: Ball) -> Fraction:
    m = measure_of(mu, ball)
    if m == 0:
        return _ZERO
    return integrate(f, mu, ball) / m


def _ratio_on(nu: DiscreteMeasure, mu: DiscreteMeasure, ball: Ball) -> Fraction:
    m = measure_of(mu, ball)
    if m == 0:
        return _ZERO
    return measure_of(nu, ball) / m


def centered_maximal(
    f: SampleFunction, mu: DiscreteMeasure, family: BallFamily, x: int
) -> MaximalValue:
    """Max ball average of f over balls centered at the support point x."""
    _check_family(family, mu)
    _require_support(mu, x)
    return _best(family, family.centered_at[x], lambda i: _average_on(f, mu, family.balls[i]))


def noncentered_maximal(
    f: SampleFunction, mu: DiscreteMeasure, family: BallFamily, x: int
) -> MaximalValue:
    """Max ball average of f over every ball containing the support point x."""
    _check_family(family, mu)
    _require_support(mu, x)
    return _best(family, family.containing[x], lambda i: _average_on(f, mu, family.balls[i]))


def centered_maximal_measure(
    nu: DiscreteMeasure, mu: DiscreteMeasure, family: BallFamily, x: int
) -> MaximalValue:
    """Max of nu(B)/mu(B) over balls centered at x (ratio 0 where mu(B) = 0)."""
    _check_family(family, mu)
    if nu.n != mu.n:
        raise ValueError("dimension mismatch between the two measures")
    _require_support(mu, x)
    return _best(family, family.centered_at[x], lambda i: _ratio_on(nu, mu, family.balls[i]))


def noncentered_maximal_measure(
    nu: DiscreteMeasure, mu: DiscreteMeasure, family: BallFamily, x: int
) -> MaximalValue:
    """Max of nu(B)/mu(B) over every ball containing x (ratio 0 where mu(B) = 0)."""
    _check_family(family, mu)
    if nu.n != mu.n:
        raise ValueError("dimension mismatch between the two measures")
    _require_support(mu, x)
    return _best(family, family.containing[x], lambda i: _ratio_on(nu, mu, family.balls[i]))


def inf_ball_measure_pair(
    mu: DiscreteMeasure, family: BallFamily, x: int, y: int
) -> tuple[Fraction, Ball]:
    """Minimum of mu over distinct closed balls containing both x and y.

    At least one candidate always exists (any ball of radius >= diameter).
    Argmin ties break toward the smallest member set.
    """
    _check_family(family, mu)
    if not (0 <= x < family.n and 0 <= y < family.n):
        raise ValueError("point index out of range")
    in_y = set(family.containing[y])
    best_m: Fraction | None = None
    best_key = None
    best_ball = None
    for idx in family.containing[x]:
        if idx not in in_y:
            continue
        ball = family.balls[idx]
        m = measure_of(mu, ball)
        key = (len(ball.members), ball.members)
        if best_m is None or m < best_m or (m == best_m and key < best_key):
            best_m, best_key, best_ball = m, key, ball
    if best_ball is None:
        raise AssertionError("ball family is missing a whole-space ball")
    return best_m, best_ball


def maximal_field(
    f: SampleFunction,
    mu: DiscreteMeasure,
    space: FiniteMetricSpace,
    family: BallFamily | None = None,
    parallel: bool = False,
) -> MaximalReport:
    """Both maximal values of f at every support point.

    Ball measures and averages are computed once for the whole family and
    shared across points. `parallel` distributes the per-point selection over
    a thread pool; results are identical either way.
    """
    if family is None:
        family = enumerate_balls(space)
    _check_family(family, mu)
    if f.n != mu.n:
        raise ValueError(f"dimension mismatch: function on {f.n} points, measure on {mu.n}")
    averages: list[Fraction] = []
    for ball in family.balls:
        m = measure_of(mu, ball)
        averages.append(integrate(f, mu, ball) / m if m else _ZERO)

    def entry(x: int) -> PointMaximal:
        centered = _best(family, family.centered_at[x], averages.__getitem__)
        noncentered = _best(family, family.containing[x], averages.__getitem__)
        return PointMaximal(point=x, centered=centered, noncentered=noncentered)

    support = mu.support
    if parallel and len(support) > 1:
        with ThreadPoolExecutor() as pool:
            entries = tuple(pool.map(entry, support))
    else:
        entries = tuple(entry(x) for x in support)
    return MaximalReport(points=entries)
