import itertools

import pytest

from weilpoly.classify7 import classify, multiplicity_options, power_case
from weilpoly.errors import StructuralError
from weilpoly.padic import qp_factor_profile, tate_condition_profile
from weilpoly.polynomial import IntPoly
from weilpoly.weil import WeilParams, chi_from_a, is_weil

P2 = WeilParams.from_q(2)
P128 = WeilParams.from_q(128)


def test_multiplicity_options():
    assert multiplicity_options(7) == {1, 7}
    assert multiplicity_options(5) == {1, 5}
    with pytest.raises(StructuralError):
        multiplicity_options(4)


def test_power_case_instances():
    assert power_case(2, 128, 7, P128)
    assert power_case(-2, 128, 7, P128)  # symmetric in the sign of a
    assert not power_case(0, 128, 7, P128)
    assert not power_case(1, 2, 7, P2)  # 7 does not divide 1
    assert not power_case(2, 64, 7, P128)  # b must be q
    # |a| < 2 sqrt q fails
    assert not power_case(23, 128, 7, P128)


def test_power_case_sign_monotonicity():
    for a in range(-22, 23):
        assert power_case(a, 128, 7, P128) == power_case(-a, 128, 7, P128)


def test_classify_power_cases():
    out = classify(IntPoly([2, 1, 1]) ** 7, P2)
    assert out.verdict == "power_case" and out.tate_ok is False
    out = classify(IntPoly([128, 2, 1]) ** 7, P128)
    assert out.verdict == "power_case" and out.tate_ok is True
    assert out.multiplicity == 7


def test_classify_reducible():
    out = classify(IntPoly([128] + [0] * 13 + [1]), P2)
    assert out.verdict == "reducible"
    assert any("t^2+2" in f for f in out.factors)


def test_classify_rejects_malformed():
    assert classify(IntPoly([1, 1]), P2).verdict == "not_degree_14"
    bad = IntPoly([1] + [0] * 13 + [1])
    assert classify(bad, P2).verdict == "not_symmetric"


def test_classify_not_weil():
    # symmetric degree 14 with huge a_1 cannot be Weil
    chi = chi_from_a((40, 0, 0, 0, 0, 0, 0), P2)
    out = classify(chi, P2)
    assert out.verdict in ("not_weil", "reducible")
    if out.verdict == "not_weil":
        assert not is_weil(chi, P2).is_weil


def test_classify_ordinary_accepted():
    chi = chi_from_a((0, 0, -1, 0, 0, 0, 1), P2)
    if is_weil(chi, P2).is_weil:
        out = classify(chi, P2)
        if out.verdict == "accepted":
            assert out.case_id == 28 or out.tate_ok
    # a concrete ordinary accepted instance found by scan
    chi = chi_from_a((-1, -1, 0, 0, 1, 0, 1), P2)
    out = classify(chi, P2)
    assert out.verdict == "accepted" and out.case_id == 28
    assert out.tate_ok and out.table_ok


def test_accepted_implies_invariant_chain():
    from weilpoly.factorint import is_irreducible_over_z
    from weilpoly.newton import lattice_vertex_check, newton_polygon

    hits = 0
    for a in itertools.product((-1, 0, 1), repeat=4):
        chi = chi_from_a(a + (0, 0, 0), P2)
        out = classify(chi, P2)
        if out.verdict != "accepted":
            continue
        hits += 1
        verdict = is_weil(chi, P2)
        assert verdict.is_weil and not verdict.real_roots
        assert is_irreducible_over_z(chi)
        assert lattice_vertex_check(newton_polygon(chi, 2), 1)
        profile = qp_factor_profile(chi, 2)
        assert tate_condition_profile(profile, 1)
        if hits >= 8:
            break
    assert hits > 0


def test_table_tate_agreement_spot(rng):
    """Random degree-14 Weil instances at q in {2, 4}: no unflagged
    disagreement; flagged cases may disagree only via the flag path."""
    for q in (2, 4):
        P = WeilParams.from_q(q)
        edge_count = 0
        for _ in range(200):
            a = tuple(rng.randint(-2, 2) for _ in range(7))
            chi = chi_from_a(a, P)
            if not is_weil(chi, P).is_weil:
                continue
            out = classify(chi, P)
            assert out.verdict != "table_tate_disagreement", (q, a, out)
            edge_count += out.verdict == "accepted"
        assert edge_count > 0
