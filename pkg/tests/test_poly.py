from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coiso.poly import PolyFn, det3, matrix_trace_power, parse_polynomial

N = 3
monos = st.tuples(*[st.integers(0, 3)] * N)
polys = st.dictionaries(monos, st.integers(-5, 5).map(Fraction), max_size=5).map(lambda t: PolyFn(N, t))
points = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=N, max_size=N)


def test_parse_and_evaluate():
    p = parse_polynomial("x1*y1**2 - z1*z2 + 3/2", ["x1", "y1", "z1", "z2"])
    assert p.evaluate([2, 3, 5, 7]) == 2 * 9 - 35 + Fraction(3, 2)
    assert p.degree == 3 and not p.is_homogeneous()


@pytest.mark.parametrize("bad", ["x**y", "x/y", "sin(x)", "w + 1", "x ** -1", "1.5*x", "x +"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_polynomial(bad, ["x", "y"])


def test_zero_polynomial():
    z = PolyFn(2)
    assert z.is_zero() and z.degree == -1
    assert PolyFn.variable(2, 0) - PolyFn.variable(2, 0) == z


def test_mismatched_rings():
    with pytest.raises(ValueError):
        PolyFn.variable(2, 0) + PolyFn.variable(3, 0)


def test_trace_power_and_det3():
    x = PolyFn.variable(1, 0)
    one, zero = PolyFn.constant(1, 1), PolyFn(1)
    mat = [[x, one], [zero, x]]
    assert matrix_trace_power(mat, 3) == 2 * x ** 3
    assert det3([[1, 0, 0], [0, 2, 0], [0, 0, 3]]) == 6


def test_list_round_trip():
    p = parse_polynomial("a**2*b - 2/3*c", ["a", "b", "c"])
    assert PolyFn.from_list(3, p.to_list()) == p


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys, points)
def test_ring_axioms_at_points(p, q, r, pt):
    assert (p * (q + r)).evaluate(pt) == p.evaluate(pt) * (q.evaluate(pt) + r.evaluate(pt))
    assert p * q == q * p
    assert (p - p).is_zero()


@settings(max_examples=80, deadline=None)
@given(polys, polys, points, st.integers(0, N - 1))
def test_leibniz_and_gradient(p, q, pt, i):
    assert (p * q).partial(i) == p.partial(i) * q + p * q.partial(i)
    assert p.gradient_at(pt) == [g.evaluate(pt) for g in p.gradient()]


@settings(max_examples=50, deadline=None)
@given(polys, st.lists(polys, min_size=N, max_size=N), points)
def test_substitute_is_composition(p, images, pt):
    inner = [g.evaluate(pt) for g in images]
    assert p.substitute(images).evaluate(pt) == p.evaluate(inner)
