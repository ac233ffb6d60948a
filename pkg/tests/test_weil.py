import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weilpoly.errors import StructuralError
from weilpoly.oracle import weil_oracle
from weilpoly.polynomial import IntPoly
from weilpoly.quadreal import QuadReal
from weilpoly.weil import (
    WeilParams,
    build_f_ftilde,
    check_symmetry,
    chi_from_a,
    companion_poly,
    is_weil,
    r_coefficients,
    real_root_reduction,
    symmetric_v,
)

P2 = WeilParams.from_q(2)
P4 = WeilParams.from_q(4)

T12_PLUS_64 = IntPoly([64] + [0] * 11 + [1])


def test_params_validation():
    assert WeilParams.from_q(8) == WeilParams(2, 3)
    with pytest.raises(StructuralError):
        WeilParams.from_q(6)
    with pytest.raises(StructuralError):
        WeilParams(4, 1)


def test_check_symmetry_examples():
    assert check_symmetry(IntPoly([2, 3, 1]), P2)
    assert not check_symmetry(IntPoly([4, 1, 0, 1, 1]), P2)
    assert check_symmetry(T12_PLUS_64, P2)
    with pytest.raises(StructuralError):
        check_symmetry(IntPoly([1, 1]), P2)  # odd degree


def test_companion_examples():
    assert companion_poly(IntPoly([2, 5, 1]), P2) == IntPoly([5, 1])
    assert companion_poly(IntPoly([4, 0, 3, 0, 1]), P2) == IntPoly([-1, 0, 1])
    h = companion_poly(T12_PLUS_64, P2)
    # verified by resubstitution inside companion_poly; freeze the value
    assert h == IntPoly([-16, 0, 36, 0, -12, 0, 1])


def test_is_weil_examples():
    assert is_weil(IntPoly([2, 0, 1]), P2).is_weil
    assert not is_weil(IntPoly([2, 3, 1]), P2).is_weil
    assert is_weil(IntPoly([4, 0, 3, 0, 1]), P2).is_weil
    assert is_weil(T12_PLUS_64, P2).is_weil
    v = is_weil(IntPoly([4, -4, 1]), P4)  # (t-2)^2
    assert v.is_weil and v.real_roots == ((1, 2),)


def test_degree2_law():
    for q in (2, 3, 4, 5):
        P = WeilParams.from_q(q)
        for a in range(-10, 11):
            assert is_weil(chi_from_a((a,), P), P).is_weil == (a * a <= 4 * q)


def test_symmetric_v_examples():
    assert symmetric_v((0, 0, 0, 0, 0, 0), P2) == (0, -12, 0, 36, 0, -16)
    # v_3 = a_3 - 5 q a_1
    assert symmetric_v((1, 0, 0, 0, 0, 0), WeilParams.from_q(2))[2] == -10
    assert symmetric_v((1, 0, 5, 0, 0, 0), P2)[2] == 5 - 10


def test_r_coefficients_zero_vector():
    r = r_coefficients((0,) * 6, P2)
    q = 2
    rq = QuadReal.sqrt(q)
    assert r[0] == -12 * rq
    assert r[1] == QuadReal(54 * q)
    assert r[2] == -112 * q * rq
    assert r[3] == QuadReal(105 * q * q)
    assert r[4] == -36 * q * q * rq
    assert r[5] == QuadReal(2 * q ** 3)


def test_r1_perfect_square_folds():
    f, _ = build_f_ftilde((1, 0, 0, 0, 0, 0), P4)
    assert f[5] == QuadReal(-25)


def test_tilde_is_sign_flip():
    a = (3, -1, 2, 0, -2, 5)
    flipped = tuple((-1) ** i * ai for i, ai in enumerate(a, start=1))
    assert r_coefficients(a, P2, tilde=True) == r_coefficients(flipped, P2, tilde=False)


@settings(max_examples=80, deadline=None)
@given(
    a=st.tuples(*[st.integers(-6, 6)] * 6),
    q=st.sampled_from([2, 3, 4, 5, 9]),
)
def test_transform_identity(a, q):
    P = WeilParams.from_q(q)
    h = companion_poly(chi_from_a(a, P), P)
    f, ft = build_f_ftilde(a, P)
    hq = h.to_quad(f.q)
    two = QuadReal.sqrt(q) * 2
    assert hq.compose_linear(QuadReal(-1), two) == f
    assert hq.compose_linear(QuadReal(1), -two) == ft


@settings(max_examples=60, deadline=None)
@given(
    a=st.tuples(st.integers(-8, 8), st.integers(-12, 12)),
    q=st.sampled_from([2, 3, 5]),
)
def test_is_weil_agrees_with_factor_oracle(a, q):
    P = WeilParams.from_q(q)
    chi = chi_from_a(a, P)
    assert is_weil(chi, P).is_weil == weil_oracle(chi, P)


def test_is_weil_implies_symmetry():
    # root-inversion invariance: is_weil implies the palindromic shape
    for a in itertools.product(range(-3, 4), repeat=2):
        chi = chi_from_a(a, P2)
        if is_weil(chi, P2).is_weil:
            assert check_symmetry(chi, P2)


def test_real_root_reduction_cases():
    chi = IntPoly([-2, 0, 1]) ** 2 * IntPoly([2, 0, 1]) ** 4
    red = real_root_reduction(chi, P2)
    assert red.kind == "non_square_q"
    assert red.quotient == IntPoly([2, 0, 1]) ** 4
    assert red.quotient.degree == 8

    w10 = chi_from_a((0, 0, 0, 0, 0), P4)
    chi2 = IntPoly([-2, 1]) ** 2 * w10
    red2 = real_root_reduction(chi2, P4)
    assert red2.kind == "square_q"
    assert red2.factor == IntPoly([-2, 1])
    assert red2.quotient == w10 and red2.quotient.degree == 10
    assert is_weil(red2.quotient, P4).is_weil

    assert real_root_reduction(T12_PLUS_64, P2).kind == "no_real_root"


def test_real_root_reduction_preconditions():
    with pytest.raises(StructuralError):
        real_root_reduction(IntPoly([2, 0, 1]), P2)
    with pytest.raises(StructuralError):
        real_root_reduction(IntPoly([1] + [0] * 11 + [1]), P2)
