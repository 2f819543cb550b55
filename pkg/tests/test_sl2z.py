import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.elliptic.algebra import bracket, default_double
from artifact.elliptic.sl2z import GammaLift, apply_matrix, sl2z_apply, winding_number

A = default_double()
PTS = [(r, d) for r in range(-2, 3) for d in range(-2, 3) if (r, d) != (0, 0)]
NAMED = [GammaLift.spherical_twist(), GammaLift.rotation(), GammaLift.poincare_transform(), GammaLift.identity()]
lifts = st.sampled_from(NAMED + [GammaLift.deck_shift(), GammaLift(((2, 1), (1, 1))), GammaLift(((1, 0), (1, 1)), 1)])


def test_named_matrices():
    assert GammaLift.rotation().matrix == ((0, 1), (-1, 0))
    assert GammaLift.spherical_twist().matrix == ((1, -1), (0, 1))
    with pytest.raises(ValueError):
        GammaLift(((2, 0), (0, 1)))


def test_column_action():
    assert apply_matrix(GammaLift.spherical_twist().matrix, (1, 0)) == (1, 0)
    assert apply_matrix(GammaLift.spherical_twist().matrix, (0, 1)) == (-1, 1)
    assert apply_matrix(GammaLift.rotation().matrix, (1, 0)) == (0, -1)


def test_rotation_powers():
    rho = GammaLift.rotation()
    assert str(rho * rho) == "[[-1,0],[0,-1]]@-1"
    assert rho * rho * rho * rho == GammaLift.deck_shift(-1)


def test_winding_examples():
    shift = GammaLift.deck_shift()
    assert winding_number(shift, Fraction(0)) == 2
    assert winding_number(GammaLift.identity(), (1, 0)) == 0
    assert winding_number(GammaLift.rotation(), (1, 0)) == -1


def test_winding_depends_only_on_slope():
    for g in NAMED:
        for x in [(1, 0), (1, 2), (2, -1), (0, 1)]:
            assert winding_number(g, x) == winding_number(g, (3 * x[0], 3 * x[1]))
        assert winding_number(g, math.inf) == winding_number(g, (0, 1))
        assert winding_number(g, -math.inf) == winding_number(g, (0, -1))


@settings(max_examples=40, deadline=None)
@given(lifts, lifts)
def test_deck_shift_adds_two(g, h):
    shift = GammaLift.deck_shift()
    for x in [(1, 0), (1, 1), (0, 1), (-1, 2)]:
        assert winding_number(g * shift, x) == winding_number(g, x) + 2
        assert winding_number(shift * g, x) == winding_number(g, x) + 2


@settings(max_examples=30, deadline=None)
@given(lifts, lifts, lifts)
def test_lift_product_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_apply_on_kappa():
    assert sl2z_apply(GammaLift.rotation(), A.k((0, 2))) == A.k((2, 0))


@pytest.mark.parametrize("g", NAMED[:3], ids=["twist", "rotation", "poincare"])
def test_relation_images(g):
    for x, y in itertools.product(PTS, repeat=2):
        assert bracket(sl2z_apply(g, A.t(x)), sl2z_apply(g, A.t(y))) == sl2z_apply(g, A.comm(x, y)), (x, y)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(PTS), st.sampled_from(PTS), st.sampled_from(PTS))
def test_action_is_a_homomorphism(x, y, z):
    g = GammaLift.rotation()
    a, b = A.t(x) + A.t(y), A.t(z) * 3
    assert sl2z_apply(g, a * b) == sl2z_apply(g, a) * sl2z_apply(g, b)


def test_composition_of_actions():
    g, h = GammaLift.spherical_twist(), GammaLift.rotation()
    for x in [(1, 0), (0, 1), (1, 1), (-1, 2)]:
        a = A.t(x)
        assert sl2z_apply(g * h, a) == sl2z_apply(g, sl2z_apply(h, a))
