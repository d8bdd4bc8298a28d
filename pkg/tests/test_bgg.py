import pytest

from a4perfect.bgg import (
    ClassifyingTriple,
    DgSModule,
    beta,
    classify,
    dg_homology,
    epsilon_tensor,
    koszul_module,
    label_scalar,
    realize,
    same_quasi_iso_class,
)
from a4perfect.errors import DomainError, HomologyBoundError
from a4perfect.exactfield import F2, F4, Matrix, Quotient, Subspace, block_diag
from a4perfect.perfcx import (
    PerfectComplex,
    concentrated,
    decompose_qrep,
    free_module,
    homology,
    lambda_module,
    shift,
    validate,
    zero_complex,
)
from a4perfect.polys import enumerate_parameter_ideals, oliver_ideal, q_matrix
from a4perfect.skewalg import GroupTag

from conftest import ideal, realized

MAXIMAL = ideal("x1", "x2")


def with_contractible_summand(C: PerfectComplex, at: int) -> PerfectComplex:
    """C plus the cone of the identity on a free module, placed in degrees at, at+1."""
    P = free_module(C.field, C.group, 1)
    lo, hi = min(C.lo, at), max(C.hi, at + 1)
    terms, diffs = [], []
    for i in range(lo, hi + 1):
        extra = P if i in (at, at + 1) else None
        T = C.term(i)
        if extra is None:
            terms.append(T)
        else:
            terms.append(
                type(T)(
                    C.field,
                    C.group,
                    T.dim + P.dim,
                    block_diag([T.act_y1, P.act_y1], C.field),
                    block_diag([T.act_y2, P.act_y2], C.field),
                    block_diag([T.act_q, P.act_q], C.field),
                )
            )
    for i in range(lo, hi):
        d = C.diff(i)
        if i == at:
            d = block_diag([d, Matrix.identity(C.field, P.dim)], C.field)
        elif i == at - 1:
            d = block_diag([d, Matrix.zeros(C.field, P.dim, 0)], C.field)
        elif i == at + 1:
            d = block_diag([d, Matrix.zeros(C.field, 0, P.dim)], C.field)
        diffs.append(d)
    return PerfectComplex(C.field, C.group, lo, tuple(terms), tuple(diffs))


def test_beta_of_lambda():
    for group in (GroupTag.TRIVIAL, GroupTag.C3):
        H = dg_homology(beta(concentrated(lambda_module(F2, group))))
        assert H.lowest == 0 and H.stopped
        assert {k: v for k, v in H.dims().items() if v} == {0: 1}
        assert H.ideal == MAXIMAL


def test_beta_of_zero():
    assert beta(zero_complex()).degrees == ()


def test_beta_equivariance():
    M = beta(concentrated(lambda_module(F4, GroupTag.C3)))
    for N in range(-1, 5):
        D = M.d_matrix(N)
        assert D @ M.q_matrix(N) == M.q_matrix(N + 1) @ D
        assert (M.d_matrix(N + 1) @ D).is_zero()


def test_stop_rule_negative_control():
    free = DgSModule(F2, GroupTag.TRIVIAL, (0, 0), {}, Matrix.identity(F2, 2))
    with pytest.raises(HomologyBoundError):
        dg_homology(free)


def test_koszul_module_maximal_ideal():
    H = dg_homology(koszul_module("triv", MAXIMAL))
    assert {k: v for k, v in H.dims().items() if v} == {0: 1}


@pytest.mark.parametrize("L", ["triv", "alpha", "alpha2"])
def test_koszul_homology_is_L_tensor_quotient(L):
    field = F4
    J = oliver_ideal(field)
    K = koszul_module(L, J)
    assert K.degrees == (0, 2, 3, 5)
    H = dg_homology(K, bound=8, stop=False)
    assert H.total_dim() == 12
    ell = label_scalar(L, field)
    for N in range(0, 9):
        SJ = Quotient(Subspace.full(field, N + 1), J.space(N))
        assert H.pieces[N].dim == SJ.dim
        if SJ.dim:
            expected = SJ.induced(q_matrix(field, N, 2)).scale(ell)
            assert decompose_qrep(field, H.q[N]) == decompose_qrep(field, expected)


def test_epsilon_tensor_of_S():
    S = DgSModule(F2, GroupTag.TRIVIAL, (0,), {}, Matrix.identity(F2, 1))
    C = epsilon_tensor(S, truncate=False, bottom=-4)
    assert validate(C).ok
    dims = homology(C).dims()
    assert {k: v for k, v in dims.items() if k > -4 and v} == {0: 1}


def test_epsilon_tensor_dims():
    K = koszul_module("triv", oliver_ideal())
    C = epsilon_tensor(K, truncate=False, bottom=-2)
    for n in C.degrees():
        assert C.dim(n) == sum(4 * (a - n + 1) for a in K.degrees if a >= n)


def test_classify_lambda():
    res = classify(concentrated(lambda_module(F2, GroupTag.C3)))
    assert res.triple == ClassifyingTriple(0, "triv", MAXIMAL)
    assert (res.m, res.n, res.t) == (0, 0, 0)


def test_classify_shift_covariance():
    C = realized(oliver_ideal())
    for k in (-3, 4):
        assert classify(shift(C, k)).triple == ClassifyingTriple(k, "triv", oliver_ideal())


def test_realize_examples():
    assert classify(realized(MAXIMAL)).triple == ClassifyingTriple(0, "triv", MAXIMAL)
    assert homology(realized(oliver_ideal())).dims() == {0: 1, 2: 1, 3: 1, 5: 1}
    T5 = ClassifyingTriple(5, "triv", oliver_ideal())
    assert realize(T5) == shift(realized(oliver_ideal()), 5)


@pytest.mark.parametrize("L", ["triv", "alpha", "alpha2"])
def test_realize_f4_labels(L):
    for J in (ideal("x1", "x2", field=F4), oliver_ideal(F4)):
        T = ClassifyingTriple(2, L, J)
        assert classify(realize(T)).triple == T


def test_realize_trivial_group():
    T = ClassifyingTriple(0, "triv", ideal("x1^3", "x2^4"))
    C = realize(T, GroupTag.TRIVIAL)
    assert classify(C).triple == T


def test_realize_rejects_bad_input():
    with pytest.raises(DomainError):
        realize(ClassifyingTriple(0, "triv", ideal("x1^3", "x2^4")))
    with pytest.raises(DomainError):
        realize(ClassifyingTriple(0, "alpha", MAXIMAL))  # alpha needs GF(4)


def test_same_quasi_iso_class():
    C = realized(oliver_ideal())
    assert same_quasi_iso_class(C, shift(C, 0))
    assert same_quasi_iso_class(C, with_contractible_summand(C, 1))
    J1, J2 = enumerate_parameter_ideals(3, 4)[:2]
    assert not same_quasi_iso_class(realize(ClassifyingTriple(0, "triv", J1), GroupTag.TRIVIAL),
                                    realize(ClassifyingTriple(0, "triv", J2), GroupTag.TRIVIAL))


def test_classify_rejects_wrong_homology():
    C = concentrated(free_module(F2, GroupTag.C3, 1))
    with pytest.raises(DomainError):
        classify(C)


@pytest.mark.parametrize("L", ["triv", "alpha", "alpha2"])
def test_roundtrip_f4_corpus(L):
    from conftest import invariant_corpus

    for J in invariant_corpus(F4, 6):
        T = ClassifyingTriple(-1, L, J)
        assert classify(realize(T)).triple == T, J
