import pytest

from artifact.elliptic.dim import (QBRACKET_SERRE, RELATION_KINDS, dim_dictionary, dim_relation_check, miki_check,
                                   miki_commutator_test, mode_relations)
from artifact.elliptic.sl2z import GammaLift, sl2z_apply
from artifact.scalars import ONE, L, q1, q2, sqrtL


@pytest.fixture(scope="module")
def D():
    return dim_dictionary()


def test_calibrated_constants(D):
    assert D.q == sqrtL
    assert D.n_E == ONE
    assert D.n_F == -sqrtL / (1 - q1 - q2 + L)
    assert D.n_H[1] == ONE and D.n_H[-1] == -ONE


def test_degrees(D):
    for k in (-2, 0, 2):
        assert D.E(k).degree_set() == {(1, k)}
        assert D.F(k).degree_set() == {(-1, k)}


def test_heisenberg_images_commute(D):
    assert (D.H(1) * D.H(2) - D.H(2) * D.H(1)).is_zero()


def test_rotation_sends_h1_to_e0(D):
    assert sl2z_apply(GammaLift.rotation(), D.H(1)) == D.E(0)


@pytest.mark.parametrize("kind", RELATION_KINDS)
def test_relations_vanish_window_one(D, kind):
    rows = dim_relation_check(1, [kind], D)[kind]
    assert rows
    assert all(r.is_zero() for _, r in rows)


def test_qbracket_serre_form_fails(D):
    rows = dim_relation_check(1, QBRACKET_SERRE, D)
    assert all(not r.is_zero() for kind in QBRACKET_SERRE for _, r in rows[kind])


def test_serre_single_instance(D):
    assert mode_relations(D, "SerreE", (-1, 0, 1)).is_zero()


def test_miki_report(D):
    report = miki_check(D)
    ratios = report["ratios"]
    assert all(report["central_exact"].values())
    assert ratios["E_0"] == ONE and ratios["H_1"] == ONE
    assert ratios["H_-1"] is not None
    # the image of F_0 is a multiple of q^{-c} H_1, not of q^c H_1
    assert ratios["F_0"] is None
    assert report["a_from_F0"] == D.n_F


def test_miki_commutator_forces_inverse_central_factor(D):
    test = miki_commutator_test(D)
    assert test["q^(1c)"] is None
    assert test["q^(-1c)"] == D.n_F
