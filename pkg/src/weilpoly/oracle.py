"""Independent oracles used to cross-check the main decision paths.

Nothing here shares code with the Sturm-based Weil predicate: real roots are
isolated by Descartes bisection, and the modulus oracle decides the Weil
property factor-by-factor over Z with explicit discriminant case analysis
(plus companion-root isolation for even-degree factors beyond the quartic
cases).  A Durand-Kerner complex root finder with certified disks backs the
sampled numeric modulus check used by the census; it reports None whenever a
disk straddles the circle |z| = sqrt(q), and callers fall back to the exact
oracle.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .factorint import factor_over_integers
from .polynomial import IntPoly, QuadPoly
from .quadreal import QuadReal, is_square
from .weil import WeilParams, check_symmetry, companion_poly


def descartes_variations(coeffs) -> int:
    var = 0
    prev = 0
    for c in coeffs:
        s = c.sign() if isinstance(c, QuadReal) else (c > 0) - (c < 0)
        if s == 0:
            continue
        if prev != 0 and s != prev:
            var += 1
        prev = s
    return var


def _affine(p: QuadPoly, a: Fraction, b: Fraction) -> QuadPoly:
    """p(a*t + b)."""
    return p.compose_linear(QuadReal(a), QuadReal(b))


def _variations_on_interval(p: QuadPoly, lo: Fraction, hi: Fraction) -> int:
    """Descartes bound for roots in (lo, hi): variations of the Moebius image."""
    q = _affine(p, hi - lo, lo)  # roots in (0, 1)
    rev = QuadPoly(list(reversed(q.coeffs)), q=q.q)  # roots inverted to (1, inf)
    shifted = rev.compose_linear(QuadReal(1), QuadReal(1))  # roots to (0, inf)
    return descartes_variations(shifted.coeffs)


def descartes_isolate(p: QuadPoly) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct real roots of squarefree p.

    Independent of the Sturm machinery: pure bisection driven by Descartes'
    rule of signs on Moebius-transformed coefficients.  Exact rational roots
    come back as degenerate intervals.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    from .sturm import root_bound

    m = root_bound(p)
    out: list[tuple[Fraction, Fraction]] = []

    def rec(lo: Fraction, hi: Fraction):
        v = _variations_on_interval(p, lo, hi)
        if v == 0:
            return
        if v == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if p.evaluate(mid).sign() == 0:
            out.append((mid, mid))
            eps = (hi - lo) / 4
            while (
                _variations_on_interval(p, mid - eps, mid + eps) > 1
                or p.evaluate(mid - eps).sign() == 0
                or p.evaluate(mid + eps).sign() == 0
            ):
                eps /= 2
            rec(lo, mid - eps)
            rec(mid + eps, hi)
        else:
            rec(lo, mid)
            rec(mid, hi)

    rec(-m, m)  # Cauchy bound is strict, so +-m are never roots
    out.sort(key=lambda iv: iv[0])
    return out


def count_real_roots_descartes(p: QuadPoly) -> int:
    return len(descartes_isolate(p.squarefree_part()))


# -- exact modulus oracle --------------------------------------------------------


def weil_oracle(chi: IntPoly, params: WeilParams) -> bool:
    """Decide the q-Weil property factor-by-factor over Z.

    Each irreducible factor must have all roots of modulus sqrt(q): linear
    factors force q square with root +-sqrt(q) at even total multiplicity;
    quadratics are either complex with constant q, or t^2 - q (again with
    even multiplicity); higher even-degree factors must be q-palindromic with
    all companion roots real in [-2 sqrt q, 2 sqrt q] (isolated by the
    Descartes oracle); odd-degree irreducibles of degree > 1 are impossible.
    """
    q = params.q
    if chi.is_zero() or not chi.is_monic():
        return False
    if chi.degree % 2:
        return False
    _, factors = factor_over_integers(chi)
    sqrt_mult = {1: 0, -1: 0}
    for g, mult in factors:
        d = g.degree
        if d == 1:
            root = -g[0]
            if root * root != q:
                return False
            sqrt_mult[1 if root > 0 else -1] += mult
        elif d == 2:
            b, c = g[1], g[0]
            if b * b < 4 * c:
                if c != q:
                    return False
            elif b == 0 and c == -q:
                sqrt_mult[1] += mult
                sqrt_mult[-1] += mult
            else:
                return False
        elif d % 2:
            return False
        else:
            if not check_symmetry(g, params):
                return False
            h = companion_poly(g, params)
            hq = h.to_quad(None if is_square(q) else q)
            sf = hq.squarefree_part()
            brackets = descartes_isolate(sf)
            if len(brackets) != sf.degree:
                return False
            two_rq = QuadReal.sqrt(q) * 2
            for lo, hi in brackets:
                # the root is > two_rq iff the polynomial has a sign change
                # beyond two_rq; decide by exact evaluations
                if not _bracket_within(sf, lo, hi, two_rq):
                    return False
    return sqrt_mult[1] % 2 == 0 and sqrt_mult[-1] % 2 == 0


def _bracket_within(sf: QuadPoly, lo: Fraction, hi: Fraction, bound: QuadReal) -> bool:
    """Is the single root of sf in the bracket within [-bound, bound]?"""
    lo_f, hi_f = Fraction(lo), Fraction(hi)
    if lo_f == hi_f:
        v = QuadReal(lo_f)
        return (v + bound).sign() >= 0 and (bound - v).sign() >= 0
    # the bound itself may be the bracketed root
    for signed in (bound, -bound):
        if sf.evaluate(signed).is_zero():
            inside = (signed - QuadReal(lo_f)).sign() > 0 and (
                QuadReal(hi_f) - signed
            ).sign() >= 0
            if inside:
                return True
    blo = (-bound).interval(96)
    bhi = bound.interval(96)
    s_hi = sf.evaluate(hi_f).sign()
    for _ in range(512):
        if lo_f >= blo[1] and hi_f <= bhi[0]:
            return True
        if hi_f < blo[0] or lo_f > bhi[1]:
            return False
        mid = (lo_f + hi_f) / 2
        s = sf.evaluate(mid).sign()
        if s == 0:
            v = QuadReal(mid)
            return (v + bound).sign() >= 0 and (bound - v).sign() >= 0
        if s == s_hi:
            hi_f = mid
        else:
            lo_f = mid
    raise RuntimeError("bracket refinement did not converge")


# -- numeric certified modulus check ---------------------------------------------


def durand_kerner_roots(chi: IntPoly, iterations: int = 200):
    n = chi.degree
    coeffs = [complex(c) for c in chi.coeffs]

    def ev(z):
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    roots = [cmath.rect(1 + abs(chi[0]) ** (1 / max(n, 1)), 2 * cmath.pi * k / n + 0.4) for k in range(n)]
    for _ in range(iterations):
        moved = 0.0
        for i in range(n):
            denom = 1 + 0j
            for j in range(n):
                if i != j:
                    denom *= roots[i] - roots[j]
            if denom == 0:
                denom = 1e-300
            delta = ev(roots[i]) / denom
            roots[i] -= delta
            moved = max(moved, abs(delta))
        if moved < 1e-14:
            break
    return roots


def numeric_modulus_verdict(chi: IntPoly, params: WeilParams) -> bool | None:
    """Certified numeric Weil check; None when nothing can be certified.

    Works on the exact squarefree part (repeated roots ruin Durand-Kerner
    convergence and the disk bounds).  Smith-style certification: the union
    of disks D(z_i, n * |chi(z_i) / prod (z_i - z_j)|) contains all roots,
    one per disk when the disks are pairwise disjoint.
    """
    from .factorint import poly_gcd, _exact_div

    g = poly_gcd(chi, chi.derivative())
    if g.degree > 0:
        chi = _exact_div(chi, g).primitive()[1]
    n = chi.degree
    if n == 0:
        return None
    roots = durand_kerner_roots(chi)
    coeffs = [complex(c) for c in chi.coeffs]

    def ev(z):
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    radii = []
    for i in range(n):
        denom = 1 + 0j
        for j in range(n):
            if i != j:
                denom *= roots[i] - roots[j]
        if denom == 0:
            return None
        radii.append(n * abs(ev(roots[i]) / denom))
    # disjointness makes each disk contain exactly one root
    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= radii[i] + radii[j]:
                return None
    # one-sided semantics: False is certified (a root provably off the
    # circle); True means every disk is consistent with |z| = sqrt(q)
    target = params.q ** 0.5
    for z, r in zip(roots, radii):
        lo, hi = abs(z) - r, abs(z) + r
        if hi < target - 1e-12 or lo > target + 1e-12:
            return False
    return True
