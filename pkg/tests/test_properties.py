"""Randomized property suite; each property runs on at least 100 generated instances.

Run on its own with ``pytest tests/test_properties.py`` or ``python tests/test_properties.py``.
"""

import random

from hypothesis import given, settings, strategies as st

from a4perfect.bgg import beta
from a4perfect.exactfield import F2, F4, Matrix, kernel
from a4perfect.perfcx import hom_space, random_complex, random_combination, random_projective
from a4perfect.polys import Poly, q_act, q_matrix, reynolds, steenrod_sq
from a4perfect.skewalg import GroupTag, SkewElem, skew_mul

N = 100
PROPS = settings(max_examples=N, deadline=None, derandomize=True)
fields = st.sampled_from([F2, F4])
seeds = st.integers(0, 2**32 - 1)
RUNS: dict[str, int] = {}


def tick(name):
    RUNS[name] = RUNS.get(name, 0) + 1


def form(field, d, rng):
    return Poly.homogeneous(field, d, field.vfrom([rng.choice(field.elements) for _ in range(d + 1)]))


@PROPS
@given(field=fields, seed=seeds, length=st.integers(2, 4))
def test_d_squared_zero(field, seed, length):
    tick("d_squared_zero")
    rng = random.Random(seed)
    C = random_complex(field, GroupTag.C3, rng, length=length)
    for i in range(C.lo - 1, C.hi + 1):
        assert (C.diff(i + 1) @ C.diff(i)).is_zero()
    M = beta(C)
    for n in range(C.lo - 1, C.hi + 3):
        assert (M.d_matrix(n + 1) @ M.d_matrix(n)).is_zero()


@PROPS
@given(field=fields, seed=seeds)
def test_module_map_commutation(field, seed):
    tick("module_map_commutation")
    rng = random.Random(seed)
    P = random_projective(field, GroupTag.C3, rng)
    Q = random_projective(field, GroupTag.C3, rng)
    basis = hom_space(P, Q)
    f = random_combination(field, basis, rng, (Q.dim, P.dim))
    for name in ("act_y1", "act_y2", "act_q"):
        assert f @ getattr(P, name) == getattr(Q, name) @ f
    C = random_complex(field, GroupTag.C3, rng, length=2)
    M = beta(C)
    for n in range(C.lo - 1, C.hi + 2):
        assert M.d_matrix(n) @ M.q_matrix(n) == M.q_matrix(n + 1) @ M.d_matrix(n)


@PROPS
@given(field=fields, seed=seeds, d=st.integers(0, 9))
def test_q_cubed_identity(field, seed, d):
    tick("q_cubed_identity")
    rng = random.Random(seed)
    P = random_projective(field, GroupTag.C3, rng, max_summands=3)
    assert (P.act_q ** 3).is_identity()
    Qd = q_matrix(field, d, 1)
    assert (Qd ** 3).is_identity()
    f = form(field, d, rng)
    assert q_act(3, f) == f
    x = SkewElem.from_vector(field, GroupTag.C3, field.vfrom([rng.choice(field.elements) for _ in range(12)]))
    q = SkewElem.q(field)
    assert skew_mul(skew_mul(skew_mul(x, q), q), q) == x


@PROPS
@given(field=fields, seed=seeds, a=st.integers(0, 5), b=st.integers(0, 5), k=st.integers(0, 10))
def test_cartan_formula(field, seed, a, b, k):
    tick("cartan_formula")
    rng = random.Random(seed)
    f, g = form(field, a, rng), form(field, b, rng)
    rhs = Poly.zero(field)
    for i in range(k + 1):
        rhs = rhs + steenrod_sq(i, f) * steenrod_sq(k - i, g)
    assert steenrod_sq(k, f * g) == rhs


@PROPS
@given(field=fields, seed=seeds, d=st.integers(0, 10))
def test_reynolds_idempotent(field, seed, d):
    tick("reynolds_idempotent")
    rng = random.Random(seed)
    f = form(field, d, rng)
    r = reynolds(f)
    assert reynolds(r) == r
    assert q_act(1, r) == r


@PROPS
@given(field=fields, seed=seeds, rows=st.integers(0, 12), cols=st.integers(0, 12))
def test_rank_nullity(field, seed, rows, cols):
    tick("rank_nullity")
    rng = random.Random(seed)
    A = Matrix.random(field, rows, cols, rng)
    K = kernel(A)
    assert A.rank() + K.dim == cols
    assert all(A.apply(v) == field.zero_vec for v in K.basis)
    assert A.rref().rref() == A.rref()


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-v"]))
