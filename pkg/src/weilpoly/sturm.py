"""Sturm-sequence machinery over Q(sqrt(q)).

Chains are built with pseudo-remainders scaled by the square of the leading
coefficient (always a positive factor), so chains of integer polynomials stay
integral.  Counting uses the half-open convention: sturm_count(p, lo, hi) is
the number of distinct real roots in (lo, hi].  That convention makes the
composition law count(a,b] + count(b,c] = count(a,c] hold exactly, including
when an endpoint is a root: the sign of a vanishing first chain entry at x is
replaced by its sign just right of x (which equals the sign of the second
entry for a squarefree chain).
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import QuadPoly
from .quadreal import QuadReal

INF = object()
NEG_INF = object()


def _content_normalize(p: QuadPoly) -> QuadPoly:
    """Divide by the positive rational content; signs are unchanged."""
    if p.is_zero():
        return p
    from math import gcd

    num = 0
    den = 1
    for c in p.coeffs:
        for part in (c.a, c.b):
            num = gcd(num, abs(part.numerator))
            den = den * part.denominator // gcd(den, part.denominator)
    if num == 0:
        return p
    scale = Fraction(den, num)
    return QuadPoly([c * scale for c in p.coeffs], q=p.q)


def _pseudo_rem_neg(a: QuadPoly, b: QuadPoly) -> QuadPoly:
    """-rem(m * a, b) for the positive multiplier m = lc(b)^(2*delta),
    content-normalized to keep coefficient growth in check."""
    delta = a.degree - b.degree + 1
    m = (b.lc() * b.lc()) ** delta
    _, r = (a * m).divmod(b)
    return _content_normalize(-r)


def sturm_chain(p: QuadPoly) -> list[QuadPoly]:
    """Sturm chain of the squarefree part of p."""
    p = p.squarefree_part()
    chain = [p]
    if p.degree > 0:
        chain.append(p.derivative())
        while chain[-1].degree > 0:
            nxt = _pseudo_rem_neg(chain[-2], chain[-1])
            if nxt.is_zero():
                break
            chain.append(nxt)
    return chain


def _sign_at(p: QuadPoly, x) -> int:
    if x is INF:
        return p.lc().sign() if not p.is_zero() else 0
    if x is NEG_INF:
        if p.is_zero():
            return 0
        s = p.lc().sign()
        return s if p.degree % 2 == 0 else -s
    return p.evaluate(x).sign()


def _variations_right(chain: list[QuadPoly], x) -> int:
    """Sign variations of the chain just right of x."""
    signs = [_sign_at(c, x) for c in chain]
    if signs and signs[0] == 0 and len(signs) > 1:
        signs[0] = signs[1]
    prev = 0
    var = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            var += 1
        prev = s
    return var


def sturm_count(p: QuadPoly, lo=NEG_INF, hi=INF, chain: list[QuadPoly] | None = None) -> int:
    """Distinct real roots of p in (lo, hi]; multiplicities collapsed.

    lo/hi are QuadReal, Fraction, int, or the NEG_INF / INF sentinels.
    """
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    if chain is None:
        chain = sturm_chain(p)
    return _variations_right(chain, lo) - _variations_right(chain, hi)


def count_real_roots(p: QuadPoly) -> int:
    return sturm_count(p)


def all_roots_real_positive(p: QuadPoly) -> bool:
    """True iff every root of p is real and strictly positive."""
    if p.is_zero():
        raise ValueError("zero polynomial rejected")
    if p.degree == 0:
        return True
    if p[0].is_zero():  # root at 0
        return False
    sf = p.squarefree_part()
    chain = sturm_chain(sf)
    n_pos = sturm_count(sf, 0, INF, chain=chain)
    if n_pos != sf.degree:
        return False
    return sturm_count(sf, NEG_INF, 0, chain=chain) == 0


def root_bound(p: QuadPoly) -> Fraction:
    """Cauchy bound: all real roots lie in (-M, M)."""
    if p.degree <= 0:
        return Fraction(1)
    inv = p.lc().inverse()
    m = Fraction(0)
    for c in p.coeffs[:-1]:
        lo, hi = (c * inv).interval(16)
        m = max(m, abs(lo), abs(hi))
    return m + 1


def isolate_real_roots(p: QuadPoly) -> list[tuple[Fraction, Fraction, int]]:
    """Disjoint isolating intervals for the distinct real roots of p.

    Returns [(lo, hi, multiplicity)] sorted increasingly, where each root lies
    in (lo, hi] and the endpoints are rational.  Exact rational roots may come
    back as degenerate intervals with lo == hi.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return []
    sf = p.squarefree_part()
    chain = sturm_chain(sf)
    m = root_bound(sf)
    total = sturm_count(sf, -m, m, chain=chain)
    out: list[tuple[Fraction, Fraction]] = []

    def split(lo: Fraction, hi: Fraction, count: int):
        if count == 0:
            return
        if count == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if sf.evaluate(mid).is_zero():
            out_mid = (mid, mid)
            left = sturm_count(sf, lo, mid, chain=chain) - 1
            right = sturm_count(sf, mid, hi, chain=chain)
            # shrink both halves off the exact root before recursing
            eps = (hi - lo) / 4
            l_hi = mid - eps
            while sturm_count(sf, lo, l_hi, chain=chain) != left:
                eps /= 2
                l_hi = mid - eps
            split(lo, l_hi, left)
            out.append(out_mid)
            r_lo = mid + eps
            while sturm_count(sf, r_lo, hi, chain=chain) != right:
                eps /= 2
                r_lo = mid + eps
            split(r_lo, hi, right)
        else:
            left = sturm_count(sf, lo, mid, chain=chain)
            split(lo, mid, left)
            split(mid, hi, count - left)

    split(-m, m, total)
    out.sort(key=lambda iv: iv[0])
    # multiplicities: deflate by gcd chain
    mults = []
    for lo, hi in out:
        mults.append(_multiplicity(p, sf, lo, hi))
    return [(lo, hi, k) for (lo, hi), k in zip(out, mults)]


def _multiplicity(p: QuadPoly, sf: QuadPoly, lo: Fraction, hi: Fraction) -> int:
    """Multiplicity in p of the single sf-root inside (lo, hi]."""
    if p.degree == sf.degree:
        return 1
    k = 1
    # a root has multiplicity > k in p iff it survives k rounds of
    # g <- gcd(g, g'); count its presence in each round's squarefree part
    g = p
    while True:
        g = g.gcd(g.derivative())
        if g.degree <= 0:
            return k
        gsf = g.squarefree_part()
        if lo == hi:
            present = gsf.evaluate(lo).is_zero()
        else:
            present = sturm_count(gsf, lo, hi) > 0
        if not present:
            return k
        k += 1


def refine_interval(
    p: QuadPoly, lo: Fraction, hi: Fraction, width: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of squarefree p below width."""
    if lo == hi:
        return lo, hi
    s_hi = p.evaluate(hi).sign()
    s_lo = p.evaluate(lo).sign()
    if s_hi == 0:
        # root is exactly hi; keep a tiny bracket for interval evaluation
        return hi, hi
    if s_lo == 0:
        # root strictly inside (lo, hi]; nudge lo upward off the root
        step = (hi - lo) / 2
        while True:
            cand = lo + step
            s = p.evaluate(cand).sign()
            if s == 0:
                return cand, cand
            if s != s_hi:
                lo, s_lo = cand, s
                break
            step /= 2
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = p.evaluate(mid).sign()
        if s == 0:
            return mid, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi
