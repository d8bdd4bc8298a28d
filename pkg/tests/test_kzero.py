import random

import pytest

from a4perfect import kzero
from a4perfect.errors import InvariantViolation
from a4perfect.exactfield import F2, F4
from a4perfect.kzero import (
    K0F2,
    K0F4,
    base_change,
    euler_char,
    f2_homology_criterion,
    finite_free_criterion,
    gr_fp_class,
    gr_fp_class_oracle,
    obstruction_report,
    obstruction_vanishes,
    pr_euler,
)
from a4perfect.perfcx import concentrated, homology, lambda_module, random_complex, zero_complex
from a4perfect.polys import oliver_ideal
from a4perfect.skewalg import GroupTag

from conftest import ideal, realized

V = K0F2(0, 1)
ONE = K0F2(1, 0)
A, A2 = K0F4(0, 1, 0), K0F4(0, 0, 1)
SQUARES = ideal("x1^2", "x2^2")
MAXIMAL = ideal("x1", "x2")


def test_products():
    assert V * V == K0F2(2, 1)
    assert A * A2 == K0F4(1, 0, 0)
    assert ONE * V == V
    assert base_change(V * V) == base_change(V) * base_change(V)


def test_formatting():
    assert str(K0F2(2, -1)) == "2 - V"
    assert str(K0F4(2, 1, 1)) == "2 + a + a^2"
    assert str(K0F2()) == "0"


def test_euler_char_examples():
    assert euler_char(homology(zero_complex())).is_zero()
    assert euler_char(homology(realized(SQUARES))) == K0F2(2, -1)
    assert euler_char(homology(realized(oliver_ideal()))).is_zero()


def test_gr_class():
    assert gr_fp_class(F2) == K0F2(2, 1) == gr_fp_class_oracle(F2)
    assert gr_fp_class(F4) == K0F4(2, 1, 1) == gr_fp_class_oracle(F4)


def test_pr_euler_examples():
    assert pr_euler(concentrated(lambda_module(F2, GroupTag.C3))) == ONE
    assert pr_euler(zero_complex()).is_zero()


def test_pr_identity_on_random_complexes():
    rng = random.Random(9)
    for field in (F2, F4):
        for _ in range(8):
            C = random_complex(field, GroupTag.C3, rng, length=3)
            assert pr_euler(C) * gr_fp_class(field) == euler_char(homology(C))


def test_obstruction_examples():
    assert obstruction_vanishes(realized(oliver_ideal()))
    assert not obstruction_vanishes(realized(SQUARES))
    assert not obstruction_vanishes(realized(MAXIMAL))


def test_finite_free_examples():
    assert finite_free_criterion(oliver_ideal())
    assert not finite_free_criterion(SQUARES)
    assert not finite_free_criterion(MAXIMAL)


def test_f2_criterion_examples():
    assert f2_homology_criterion(realized(oliver_ideal()))
    assert not f2_homology_criterion(realized(SQUARES))
    assert not f2_homology_criterion(realized(MAXIMAL))


def test_report_json():
    rep = obstruction_report(realized(oliver_ideal()))
    assert rep.to_json() == {
        "chi": "0",
        "pr_chi": "0",
        "gr_class": "2 + V",
        "vanishes": True,
        "criterion_iii": True,
        "criterion_iv": True,
        "f2_corollary": True,
    }
    assert obstruction_report(realized(SQUARES)).to_json()["chi"] == "2 - V"


def test_inconsistency_is_hard_error(monkeypatch):
    monkeypatch.setattr(kzero, "even_invariant_parameter", lambda J: True)
    with pytest.raises(InvariantViolation):
        obstruction_report(realized(SQUARES))
    assert not obstruction_report(realized(SQUARES), strict=False).consistent


def test_mixed_rings_rejected():
    with pytest.raises(ValueError):
        V + A
