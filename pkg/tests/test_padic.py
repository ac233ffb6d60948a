import random
from fractions import Fraction

import pytest

from weilpoly.errors import StructuralError
from weilpoly.factorint import poly_gcd
from weilpoly.fpoly import PrimeField, is_irreducible
from weilpoly.padic import (
    FpPoly,
    count_factors_of_degree,
    fp_factor,
    has_root_of_valuation,
    hensel_lift,
    qp_factor_profile,
    tate_condition,
)
from weilpoly.polynomial import IntPoly
from weilpoly.weil import WeilParams


def records(profile):
    return sorted((r.degree, r.slope, r.const_valuation) for r in profile.factors)


def test_fp_factor_examples():
    f = FpPoly.from_int_poly(IntPoly([1, 1, 1]), 2)
    assert fp_factor(f) == [(f, 1)]
    parts = fp_factor(FpPoly.from_int_poly(IntPoly([1, 0, 1]), 5))
    assert sorted(g.coeffs for g, _ in parts) == [(2, 1), (3, 1)]
    parts = fp_factor(FpPoly.from_int_poly(IntPoly([4, 0, 3, 0, 1]), 2))
    assert sorted((g.coeffs, e) for g, e in parts) == [((0, 1), 2), ((1, 1), 2)]


def test_hensel_exact_split():
    g, h = hensel_lift(
        IntPoly([-1, 0, 1]), FpPoly((2, 1), 3), FpPoly((1, 1), 3), 3, 4
    )
    assert {g, h} == {IntPoly([-1, 1]), IntPoly([1, 1])}


def test_hensel_spec_examples():
    g, h = hensel_lift(
        IntPoly([2, 3, 1]), FpPoly((1, 1), 5), FpPoly((2, 1), 5), 5, 6
    )
    assert {g, h} == {IntPoly([1, 1]), IntPoly([2, 1])}
    g, h = hensel_lift(
        IntPoly([-2, 0, 1]), FpPoly((-3 % 7, 1), 7), FpPoly((3, 1), 7), 7, 3
    )
    root = -g[0] % 343
    assert root * root % 343 == 2
    assert root == 108 or (343 - root) == 108


def test_hensel_non_coprime_seed_rejected():
    with pytest.raises(ValueError):
        hensel_lift(
            IntPoly([1, 2, 1]), FpPoly((1, 1), 3), FpPoly((1, 1), 3), 3, 4
        )


def test_profile_worked_examples():
    for p in (3, 5, 7):
        prof = qp_factor_profile(IntPoly([p, 0, 0, 1]), p)
        assert records(prof) == [(3, Fraction(1, 3), 1)]
        assert prof.fully_certified
    p = 5
    prof = qp_factor_profile(IntPoly([-p, 0, 1]) * IntPoly([-1, 1]), p)
    assert records(prof) == [(1, Fraction(0), 0), (2, Fraction(1, 2), 1)]


def test_profile_t4_corrected_example():
    """t^4+3t^2+4 at p=2: both residuals are (z+1)^2 and both quadratic
    factors split over Q_2 (disc -7 is a 2-adic square), so the true profile
    is four linear factors with slopes 0,0,1,1."""
    prof = qp_factor_profile(IntPoly([4, 0, 3, 0, 1]), 2)
    assert records(prof) == [
        (1, Fraction(0), 0),
        (1, Fraction(0), 0),
        (1, Fraction(1), 1),
        (1, Fraction(1), 1),
    ]
    assert prof.fully_certified
    # independent digit-search oracle: count roots of f mod 2^k that lift
    f = IntPoly([4, 0, 3, 0, 1])
    k = 12
    roots = [c for c in range(2 ** k) if f.evaluate(c) % 2 ** k == 0]
    # four 2-adic roots means 4 residues mod 2^(k-2) at least
    assert len({r % 2 ** (k - 2) for r in roots}) >= 4


def test_profile_invariants(rng):
    from weilpoly.newton import newton_polygon, vp

    done = 0
    while done < 50:
        p = rng.choice([2, 3, 5])
        deg = rng.randint(1, 9)
        f = IntPoly(
            [rng.choice([1, 2, 3, 5]) * p ** rng.randint(0, 3) for _ in range(deg)]
            + [1]
        )
        if f[0] == 0 or poly_gcd(f, f.derivative()).degree > 0:
            continue
        prof = qp_factor_profile(f, p)
        assert sum(r.degree for r in prof.factors) == f.degree
        assert sum(r.const_valuation for r in prof.factors) == vp(f[0], p)
        for r in prof.factors:
            assert r.const_valuation == r.degree * r.slope
            assert r.degree % r.slope.denominator == 0
        assert prof.slope_multiset() == newton_polygon(f, p).valuation_multiset()
        done += 1


def test_composition_oracle(rng):
    """Random pairwise-coprime products of Eisenstein, unramified and linear
    blocks: the profile equals the known union exactly."""
    done = mismatches = 0
    while done < 150:
        p = rng.choice([2, 3, 5])
        f, expected = _random_blocks(p, rng)
        if f.degree < 1 or poly_gcd(f, f.derivative()).degree > 0:
            continue
        prof = qp_factor_profile(f, p)
        assert prof.fully_certified, (p, f)
        got = sorted((r.degree, r.slope) for r in prof.factors)
        assert got == sorted(expected), (p, f)
        done += 1


def _random_blocks(p, rng):
    used = {}
    f = IntPoly([1])
    expected = []
    total = 0
    for _ in range(rng.randint(1, 4)):
        kind = rng.random()
        if kind < 0.4:
            d = rng.randint(1, 5)
            if total + d > 14:
                continue
            sl = Fraction(1, d)
            c = rng.randrange(1, p)
            marker = (-c) % p  # residual root of the Eisenstein segment
            if marker in used.get(sl, set()):
                continue
            used.setdefault(sl, set()).add(marker)
            coeffs = [p * rng.randint(0, 3) for _ in range(d)] + [1]
            coeffs[0] = p * c
            f = f * IntPoly(coeffs)
            expected.append((d, sl))
            total += d
        elif kind < 0.7:
            d = rng.randint(1, 4)
            if total + d > 14:
                continue
            F = PrimeField(p)
            for _ in range(60):
                fb = tuple([rng.randrange(p) for _ in range(d)] + [1])
                if fb[0] == 0 or not is_irreducible(F, list(fb)):
                    continue
                if fb in used.get(Fraction(0), set()):
                    continue
                used.setdefault(Fraction(0), set()).add(fb)
                f = f * IntPoly([c + p * rng.randint(0, 2) for c in fb[:-1]] + [1])
                expected.append((d, Fraction(0)))
                total += d
                break
        else:
            k = rng.randint(1, 3)
            if total + 1 > 14:
                continue
            sl = Fraction(k)
            c = rng.randrange(1, p)
            if c in used.get(sl, set()):
                continue
            used.setdefault(sl, set()).add(c)
            f = f * IntPoly([-(c + p * rng.randint(0, 2)) * p ** k, 1])
            expected.append((1, sl))
            total += 1
    return f, expected


def test_phi_adic_ramified_quartic():
    # g = (t^2+t+1)^2 + 2 is phi-Eisenstein: one ramified quartic over Q_2
    f = IntPoly([3, 2, 3, 2, 1])
    prof = qp_factor_profile(f, 2)
    assert records(prof) == [(4, Fraction(0), 0)]
    assert prof.factors[0].residual_degree == 2
    assert prof.fully_certified


def test_root_of_valuation():
    p = 5
    assert not has_root_of_valuation(IntPoly([-p, 0, 1]), p, Fraction(1, 2), 1)
    f = IntPoly([-p, 1]) * IntPoly([-1, 1])
    assert has_root_of_valuation(f, p, 1, 1)
    g = IntPoly([-p, 0, 1]) * IntPoly([-p, 1])
    assert has_root_of_valuation(g, p, 1, 1)
    assert not has_root_of_valuation(g, p, Fraction(1, 2), 1)


def test_count_factors():
    p = 3
    prof = qp_factor_profile(IntPoly([p, 0, 0, 1]), p)
    assert count_factors_of_degree(prof, 3) == 1
    assert count_factors_of_degree(prof, 1) == 0
    prof = qp_factor_profile(IntPoly([-p, 0, 1]) * IntPoly([-1, 1]), p)
    assert count_factors_of_degree(prof, 2) == 1
    assert count_factors_of_degree(prof, 1) == 1
    prof = qp_factor_profile(IntPoly([4, 0, 3, 0, 1]), 2)
    assert count_factors_of_degree(prof, 1) == 4


def test_tate_condition_examples():
    P2 = WeilParams.from_q(2)
    assert tate_condition(IntPoly([2, 0, 1]), P2)
    assert tate_condition(IntPoly([2, 1, 1]), P2)
    # ordinary with p not dividing a: valuations 0 and 1, both divisible at n=1
    P4 = WeilParams(2, 2)
    assert tate_condition(IntPoly([4, 2, 1]), P4)  # one factor, v = 2 = n
    assert not tate_condition(IntPoly([2, 1, 1]), P4)  # v = 1 not divisible by 2


def test_not_squarefree_rejected():
    f = IntPoly([1, 1]) ** 2
    with pytest.raises(StructuralError, match="squarefree"):
        qp_factor_profile(f, 2)
    with pytest.raises(StructuralError, match="constant term"):
        qp_factor_profile(IntPoly([0, 1, 1]), 2)


def test_eisenstein_law(rng):
    for _ in range(30):
        p = rng.choice([2, 3, 5])
        d = rng.randint(1, 7)
        coeffs = [p * rng.randint(0, 4) for _ in range(d)] + [1]
        coeffs[0] = p * rng.choice([1, 2, 3, 4, 5, 6])
        while coeffs[0] % (p * p) == 0:
            coeffs[0] += p
        prof = qp_factor_profile(IntPoly(coeffs), p)
        assert records(prof) == [(d, Fraction(1, d), 1)]


def test_unit_root_count_matches_digit_search(rng):
    """Independent oracle: certified degree-1 slope-0 records agree with a
    Hensel-liftable residue search mod p^k."""
    from weilpoly.factorint import discriminant
    from weilpoly.newton import vp

    done = 0
    while done < 30:
        p = rng.choice([2, 3])
        deg = rng.randint(2, 6)
        f = IntPoly([rng.randint(-40, 40) for _ in range(deg)] + [1])
        if f[0] == 0 or poly_gcd(f, f.derivative()).degree > 0:
            continue
        disc = discriminant(f)
        vd = vp(int(disc), p) if int(disc) == disc and disc != 0 else 0
        k = max(2 * vd + 3, 6)
        if p ** k > 4_000_000:
            continue
        prof = qp_factor_profile(f, p)
        if not prof.fully_certified:
            continue
        want = sum(
            1
            for r in prof.factors
            if r.degree == 1 and r.slope == 0
        )
        # Newton-certified unit residues: f(r) = 0 mod p^k with unit r and
        # v(f(r)) > 2 v(f'(r)) guarantees a unique Q_p root near r
        roots = set()
        mod = p ** k
        for r in range(mod):
            if r % p == 0:
                continue
            fr = f.evaluate(r) % mod
            if fr != 0:
                continue
            dfr = f.derivative().evaluate(r)
            w = vp(dfr, p) if dfr % mod else k
            if k > 2 * w:
                # distinct roots separate below p^(vd+1), so this dedupe is exact
                roots.add(r % p ** (vd + 1))
        assert len(roots) == want, (p, f, sorted(roots), want)
        done += 1
