import itertools
import random

from a4perfect.exactfield import F2, F4
from a4perfect.skewalg import (
    ExtElem,
    GroupTag,
    SkewElem,
    augment,
    conj_q,
    format_skew,
    group_algebra_aug,
    group_algebra_mul,
    lambda_to_group_algebra,
    parse_skew,
    psi,
    skew_mul,
)

ONE, Y1, Y2 = ExtElem.one(), ExtElem.y1(), ExtElem.y2()
Y12 = Y1 * Y2


def all_ext(field=F2):
    for co in itertools.product(field.elements, repeat=4):
        yield ExtElem(field, co)


def test_exterior_relations():
    assert (Y1 * Y1).is_zero() and (Y2 * Y2).is_zero()
    assert Y1 * Y2 == Y2 * Y1
    basis = [ExtElem.basis(F2, k) for k in range(4)]
    for a, b, c in itertools.product(basis, repeat=3):
        assert (a * b) * c == a * (b * c)
    for a in basis:
        assert ONE * a == a == a * ONE


def test_psi_examples():
    assert psi(1, Y1) == Y2
    assert psi(1, Y12) == Y12
    for a in all_ext():
        assert psi(0, a) == a
        assert psi(1, psi(1, psi(1, a))) == a


def test_skew_products():
    q = SkewElem.q(F2)
    lhs = skew_mul(SkewElem.term(Y1, 1), SkewElem.term(Y2, 1))
    assert lhs == SkewElem.term(Y12, 2)
    assert skew_mul(skew_mul(q, q), q) == SkewElem.one()
    e = SkewElem.one()
    for i in range(12):
        x = SkewElem.basis(F2, GroupTag.C3, i)
        assert skew_mul(e, x) == x == skew_mul(x, e)


def test_skew_associative():
    basis = [SkewElem.basis(F4, GroupTag.C3, i) for i in range(12)]
    for a, b, c in itertools.product(basis, repeat=3):
        assert skew_mul(skew_mul(a, b), c) == skew_mul(a, skew_mul(b, c))


def test_augmentation():
    assert augment(SkewElem.one()) == 1
    x = SkewElem.term(Y1, 0) + SkewElem.q(F2)
    assert augment(x) == 1
    rng = random.Random(3)
    for field in (F2, F4):
        for _ in range(50):
            a = SkewElem.from_vector(field, GroupTag.C3, field.vfrom([rng.choice(field.elements) for _ in range(12)]))
            b = SkewElem.from_vector(field, GroupTag.C3, field.vfrom([rng.choice(field.elements) for _ in range(12)]))
            assert augment(skew_mul(a, b)) == field.mul(augment(a), augment(b))


def test_lambda_to_group_algebra():
    # basis e, f1, f2, f1f2; lambda_i = f_i - 1, so lambda1 + lambda1*lambda2 = f2 + f1f2
    lam1, lam2 = (1, 1, 0, 0), (1, 0, 1, 0)
    expected = tuple(a ^ b for a, b in zip(lam1, group_algebra_mul(F2, lam1, lam2)))
    assert lambda_to_group_algebra(Y1) == expected == (0, 0, 1, 1)
    u = lambda_to_group_algebra(Y1)
    assert group_algebra_mul(F2, u, u) == (0, 0, 0, 0)
    for a in all_ext():
        img = lambda_to_group_algebra(a)
        assert lambda_to_group_algebra(psi(1, a)) == conj_q(img)
        assert group_algebra_aug(img) == a.aug()
    for a, b in itertools.product(list(all_ext()), repeat=2):
        assert lambda_to_group_algebra(a * b) == group_algebra_mul(F2, lambda_to_group_algebra(a), lambda_to_group_algebra(b))


def test_format_parse_roundtrip():
    rng = random.Random(5)
    for field in (F2, F4):
        for _ in range(50):
            v = field.vfrom([rng.choice(field.elements) for _ in range(12)])
            x = SkewElem.from_vector(field, GroupTag.C3, v)
            assert parse_skew(format_skew(x), field) == x
