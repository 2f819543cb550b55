import pytest

from artifact.double import (double_commutator, format_hall_form, hall_coproduct, hall_cross_commutator,
                             hall_pairing, printed_cross_commutator)
from artifact.scalars import ONE, L, quantum_integer, sqrtL

OFF_DIAGONAL = [(m, n) for m in range(-2, 3) for n in range(-2, 3) if m != n]


def test_printed_examples():
    assert printed_cross_commutator(0, 0) == {}
    assert printed_cross_commutator(0, 1) == {("+", 1, 1, 1): ONE / (1 - L)}
    assert printed_cross_commutator(1, 0) == {("-", 1, -1, -1): ONE / (L - 1)}


@pytest.mark.parametrize("m,n", OFF_DIAGONAL)
def test_printed_split_is_the_transposed_bracket(m, n):
    assert printed_cross_commutator(m, n) == hall_cross_commutator(n, m)


@pytest.mark.parametrize("m", range(-2, 3))
def test_diagonal_is_nonzero_in_the_double(m):
    form = hall_cross_commutator(m, m)
    assert form
    assert printed_cross_commutator(m, m) == {}


def test_printed_split_disagrees_with_the_untransposed_bracket():
    agree = [(m, n) for m in range(-2, 3) for n in range(-2, 3)
             if printed_cross_commutator(m, n) == hall_cross_commutator(m, n)]
    assert agree == []


def test_torsion_cross_commutator():
    # [t+_d, t-_d] = ([2d]/d)(c^{-d} - c^d)/(L^{1/2} - L^{-1/2})
    for d in (1, 2):
        form = double_commutator((("t", d), (0, 0)), (("t", d), (0, 0)))
        coeff = quantum_integer(2 * d) / (d * (sqrtL - sqrtL.inverse()))
        assert form == {("0", 0, 0, -2 * d): coeff, ("0", 0, 0, 2 * d): -coeff}


def test_pairing_and_coproduct_basics():
    one = (("one", 0), (0, 0))
    assert hall_pairing(one, one) == 1 / (L - 1)
    assert hall_coproduct(one, 2)


def test_format_hall_form():
    assert format_hall_form({}) == "0"
    assert "thetaT+[1]" in format_hall_form(printed_cross_commutator(0, 1))
