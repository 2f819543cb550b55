import pytest

from artifact.motive import (class_gl, class_grassmannian, coprime_pair_class, log_classes, make_zeta,
                             rationality_check, sym_class)
from artifact.scalars import ONE, L, Scalar, q1, q2
from oracles import (GF2k, count_coprime_forms, count_invertible, effective_divisors, elliptic_points, scalar_at)

F4 = GF2k(2)


@pytest.fixture(scope="module")
def curve_counts():
    """Points of ``y^2 + xy = x^3 + 1`` over ``F_{4^d}``."""
    return {d: elliptic_points(GF2k(2 * d)) for d in (1, 2, 3, 4)}


@pytest.mark.parametrize("n", [0, 1, 2])
def test_class_gl_counts_invertible_matrices(n):
    assert scalar_at(class_gl(n)) == count_invertible(n, F4)


@pytest.mark.parametrize("n", range(7))
def test_grassmannian_identity(n):
    for d in range(n + 1):
        rhs = class_grassmannian(d, n) * class_gl(d) * class_gl(n - d) * L ** (d * (n - d))
        assert class_gl(n) == rhs


@pytest.mark.parametrize("a,b", [(0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2)])
def test_coprime_pairs_count(a, b):
    assert scalar_at(coprime_pair_class(a, b)) == count_coprime_forms(a, b, F4)


def test_p1_symmetric_powers_are_projective_spaces():
    z = make_zeta("p1")
    for n in range(11):
        assert sym_class(z, n) == sum((L ** k for k in range(n + 1)), Scalar(0))


def test_genus_one_numerator_factors():
    z = make_zeta("genus_one", -(q1 + q2))
    assert z.numerator == (ONE, -(q1 + q2), L)
    assert z.numerator[2] == q1 * q2


@pytest.mark.parametrize("d", range(1, 9))
def test_log_classes_genus_one(d):
    z = make_zeta("genus_one", -(q1 + q2))
    assert log_classes(z, d) == 1 + L ** d - q1 ** d - q2 ** d


def test_log_classes_p1():
    z = make_zeta("p1")
    for d in range(1, 6):
        assert log_classes(z, d) == 1 + L ** d


def test_zeta_matches_curve_point_counts(curve_counts):
    # a = N_1 - q - 1 for the numerator 1 + a z + q z^2 over F_4
    z = make_zeta("genus_one", Scalar(curve_counts[1] - 4 - 1))
    for d, count in curve_counts.items():
        assert scalar_at(log_classes(z, d)) == count
    for n in range(5):
        assert scalar_at(sym_class(z, n)) == effective_divisors(curve_counts, n)


def test_from_pic0_and_elliptic_agree():
    pic0 = 1 + L - q1 - q2
    assert make_zeta("from_pic0", pic0=pic0).numerator == make_zeta("elliptic").numerator


def test_rationality():
    assert rationality_check(make_zeta("p1"))
    assert rationality_check(make_zeta("elliptic"))


def test_errors():
    with pytest.raises(ValueError):
        make_zeta("genus_one")
    with pytest.raises(ValueError):
        make_zeta("genus_two")
    with pytest.raises(ValueError):
        log_classes(make_zeta("p1"), 0)
    with pytest.raises(ValueError):
        class_grassmannian(3, 2)
