from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.scalars import (ONE, ZERO, L, Scalar, TruncSeries, gaussian_binomial, q1, q2, quantum_integer, s1, s2,
                              series_exp, series_log, sqrtL, v)
from oracles import GF2k, count_subspaces, scalar_at

small = st.integers(min_value=-3, max_value=3)


@st.composite
def polys(draw):
    out = ZERO
    for i in range(3):
        for j in range(3):
            c = draw(small)
            if c:
                out = out + s1 ** i * s2 ** j * c
    return out


@st.composite
def scalars(draw):
    num = draw(polys())
    den = draw(polys())
    if den.is_zero():
        den = ONE
    return num / den


points = st.tuples(st.integers(2, 7), st.integers(2, 7))


def test_named_generators():
    assert L == q1 * q2
    assert sqrtL * sqrtL == L
    assert v * sqrtL == ONE


def test_canonical_form_is_unique():
    a = (s1 + 1) * (s1 - 1) / (s1 - 1)
    assert a == s1 + 1
    assert hash(a) == hash(s1 + 1)
    assert str((L - 1) / (sqrtL - 1)) == str(sqrtL + 1)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_quantum_integer_example():
    assert quantum_integer(3) == (1 + L + L ** 2) / L
    assert quantum_integer(0) == ZERO
    assert quantum_integer(-2) == -quantum_integer(2)


@pytest.mark.parametrize("d", range(1, 8))
def test_quantum_integer_balanced_form(d):
    assert quantum_integer(d) == (sqrtL ** d - sqrtL ** (-d)) / (sqrtL - sqrtL.inverse())


@pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (3, 2), (2, 0), (2, 2)])
def test_gaussian_binomial_counts_subspaces_over_f4(n, d):
    # s1 = 2, s2 = 1 gives L = 4
    assert scalar_at(gaussian_binomial(n, d)) == count_subspaces(n, d, GF2k(2))


def test_gaussian_binomial_range():
    with pytest.raises(ValueError):
        gaussian_binomial(2, 3)


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    if not a.is_zero():
        assert a * a.inverse() == ONE


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), points)
def test_evaluation_is_a_ring_map(a, b, pt):
    x, y = pt
    try:
        va, vb = a.evaluate(x, y), b.evaluate(x, y)
    except ZeroDivisionError:
        return
    assert (a + b).evaluate(x, y) == va + vb
    assert (a * b).evaluate(x, y) == va * vb


@settings(max_examples=60, deadline=None)
@given(scalars())
def test_swap_is_an_involution(a):
    assert a.swap().swap() == a
    assert (a * q1).swap() == a.swap() * q2


def test_swap_fixes_l():
    assert L.swap() == L
    assert (q1 + q2).swap() == q1 + q2


def test_series_exp_log_inverse():
    f = TruncSeries([ZERO, L, ONE / 2, q1, -sqrtL, ONE])
    g = series_exp(f)
    assert g[0] == ONE
    assert series_log(g) == f


def test_series_exp_of_geometric():
    # exp(sum z^n / n) = 1/(1 - z)
    f = TruncSeries([ZERO] + [Scalar(Fraction(1, n)) for n in range(1, 7)])
    assert all(c == ONE for c in series_exp(f).coeffs)


@settings(max_examples=40, deadline=None)
@given(scalars())
def test_text_round_trip(a):
    from artifact.cli.evaluate import Config, Session

    session = Session(Config(context="motive"))
    assert session.evaluate_text(str(a))[0].value == a
