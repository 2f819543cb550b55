import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.elliptic.algebra import BETA, EllElem, EllipticDouble, WindowOverflow, bracket, c_coeff, default_double
from artifact.elliptic.lattice import (alpha_weight2, det, eps, euler_form, order_key, slope,
                                       triangle_interior_count)
from artifact.scalars import ONE, L, q1, q2, quantum_integer, sqrtL
from oracles import lattice_points_inside

A = default_double()
WINDOW2 = [(r, d) for r in range(-2, 3) for d in range(-2, 3) if (r, d) != (0, 0)]
point2 = st.sampled_from(WINDOW2)


def test_euler_form_examples():
    for n in range(-3, 4):
        assert euler_form(0, (1, 0), (1, n)) == 1 + n
    assert euler_form(0, (1, 0), (1, 3)) == 4
    assert euler_form(1, (2, 1), (3, 5)) == 2 * 5 - 3 * 1


def test_triangle_count_matches_enumeration():
    pts = [(r, d) for r in range(-4, 5) for d in range(-4, 5) if (r, d) != (0, 0)]
    for x, y in itertools.product(pts, repeat=2):
        if det(x, y) != 0:
            assert triangle_interior_count(x, y) == lattice_points_inside(x, y), (x, y)


def test_alpha_weight_is_integral_lattice_vector():
    for x, y in itertools.product(WINDOW2, repeat=2):
        if det(x, y) != 0 and (x[0] + y[0], x[1] + y[1]) != (0, 0):
            a = alpha_weight2(x, y)
            assert a[0] % 2 == 0 and a[1] % 2 == 0


def test_eps_and_slope():
    assert eps((1, 0)) == 1 and eps((-1, 0)) == -1
    assert eps((0, 1)) == 1 and eps((0, -1)) == -1
    assert slope((2, 1)) == Fraction(1, 2)


@pytest.mark.parametrize("i", range(1, 5))
def test_c_coefficient_numeric(i):
    for a, b in [(Fraction(2), Fraction(3)), (Fraction(5, 2), Fraction(1, 3))]:
        root = a * b
        expect = (a ** i - a ** -i) * (b ** i - b ** -i) * (root ** i - root ** -i) / (root - 1 / root) / i
        assert c_coeff(i).evaluate(a, b) == expect


def test_c1_factorises():
    assert c_coeff(1) == (1 - q1) * (1 - q2) / sqrtL


def test_equal_slopes_commute():
    assert A.comm((1, 0), (2, 0)).is_zero()
    assert A.comm((0, 1), (0, 2)).is_zero()
    assert A.comm((1, 1), (-2, -2)).is_zero()


def test_opposite_vertical_pair():
    k, kinv = A.k((0, 2)), A.k((0, -2))
    assert A.comm((0, 1), (0, -1)) == (k - kinv) * (c_coeff(1) / (sqrtL - sqrtL.inverse()))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_heisenberg_action_on_line_bundles(d):
    # [t_(0,d), t_(1,n)] = c_d t_(1,n+d): the triangle is empty and theta of a primitive point is beta t
    for n in (-1, 0, 2):
        assert A.comm((0, d), (1, n)) == A.t((1, n + d)) * c_coeff(d)


def test_normal_form_example():
    expected = A.t((0, 1)) * A.t((1, 0)) - A.t((1, 1)) * c_coeff(1)
    assert A.t((1, 0)) * A.t((0, 1)) == expected


def test_theta_is_exponential():
    # theta_(0,2) = beta t_(0,2) + beta^2 t_(0,1)^2 / 2
    assert A.theta((0, 2)) == A.t((0, 2)) * BETA + A.t((0, 1)) * A.t((0, 1)) * (BETA * BETA / 2)
    divided = EllipticDouble(theta_convention="divided")
    assert divided.theta((0, 2)) == divided.t((0, 2)) * (BETA / quantum_integer(2)) + \
        divided.t((0, 1)) * divided.t((0, 1)) * (BETA * BETA / 2)


def test_window_overflow():
    small = EllipticDouble((2, 2))
    with pytest.raises(WindowOverflow):
        small.t((3, 0))


def test_kappa_exponents_of_half_weights():
    assert A.k((1, 0)) * A.k((1, 0)) == A.k((2, 0))
    assert A.k((1, 0)) * A.k((-1, 0)) == A.one()


def test_antisymmetry_two_engines():
    fresh = EllipticDouble()
    for x, y in itertools.product(WINDOW2, repeat=2):
        assert (A.comm(x, y) + fresh.comm(y, x)).is_zero(), (x, y)


def test_structure_constants_swap_invariant():
    for x, y in itertools.product(WINDOW2, repeat=2):
        for c in A.comm(x, y).coefficients():
            assert c.swap() == c


@settings(max_examples=30, deadline=None)
@given(point2, point2, point2)
def test_jacobi(x, y, z):
    a, b, c = A.t(x), A.t(y), A.t(z)
    assert (bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)).is_zero()


@settings(max_examples=40, deadline=None)
@given(point2, point2, point2)
def test_associativity(x, y, z):
    a, b, c = A.t(x), A.t(y), A.t(z)
    assert (a * b) * c == a * (b * c)


@settings(max_examples=30, deadline=None)
@given(point2, point2, point2)
def test_kappa_central_and_grading(x, y, w):
    a = A.t(x) * A.t(y)
    k = A.k(w)
    assert k * a == a * k
    assert a.degree_set() <= {(x[0] + y[0], x[1] + y[1])}


def test_pbw_words_are_ordered():
    a = A.t((-1, 1)) * A.t((1, -1)) * A.t((0, 1)) * A.t((2, 1))
    for (pts, _), _c in a:
        keys = [order_key(p) for p in pts]
        assert keys == sorted(keys)
