"""Irreducible factorization in Z[t] by the Zassenhaus method.

Pipeline: content/primitive split, Yun squarefree decomposition over Q,
reduction modulo the smallest odd prime keeping f squarefree (equivalently,
not dividing disc(f)*lc(f)), Cantor-Zassenhaus factorization there, Hensel
lifting past the Mignotte bound, and subset recombination by increasing
cardinality.  Degrees in this package stay <= 14, so recombination scans at
most 2^14 subsets.

Non-monic primitive polynomials are monicized by t -> t/lc scaling and the
factors mapped back, which keeps the Hensel machinery monic-only.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

from .errors import ExactnessError
from .fpoly import PrimeField, factor as fp_factor_raw, fdeg, fgcd, fdiff, ftrim
from .hensel import hensel_lift_multi, _trunc
from .polynomial import IntPoly


def _fraction_gcd_poly(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    """Monic gcd over Q on dense Fraction lists."""

    def trim(h):
        n = len(h)
        while n and h[n - 1] == 0:
            n -= 1
        return h[:n]

    def rem(a, b):
        a = list(a)
        db = len(b) - 1
        inv = 1 / b[-1]
        while len(a) - 1 >= db and a:
            c = a[-1] * inv
            off = len(a) - 1 - db
            for j in range(db + 1):
                a[off + j] -= c * b[j]
            a = trim(a)
            if not a:
                break
        return a

    a, b = trim(list(f)), trim(list(g))
    while b:
        a, b = b, rem(a, b)
    if not a:
        return a
    inv = 1 / a[-1]
    return [c * inv for c in a]


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd in Z[t] (positive leading coefficient)."""
    if f.is_zero():
        return g.primitive()[1] if not g.is_zero() else g
    if g.is_zero():
        return f.primitive()[1]
    h = _fraction_gcd_poly(f.to_fractions(), g.to_fractions())
    den = 1
    for c in h:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPoly([int(c * den) for c in h]).primitive()[1]


def squarefree_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm over Z for primitive f: [(g_i, i)] with f = +-prod g_i^i."""
    if f.degree <= 0:
        return []
    out = []
    g = poly_gcd(f, f.derivative())
    w = _exact_div(f, g)
    c = _exact_div(f.derivative(), g) - w.derivative()
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        if y.degree > 0:
            out.append((y, i))
        w = _exact_div(w, y)
        c = _exact_div(c, y) - w.derivative()
        i += 1
    return out


def _exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """f / g when the division is exact over Q, result in Z[t]."""
    fq = f.to_fractions()
    gq = g.to_fractions()
    if not gq:
        raise ZeroDivisionError
    quot = [Fraction(0)] * (max(len(fq) - len(gq) + 1, 0))
    inv = 1 / gq[-1]
    work = list(fq)
    for i in range(len(work) - 1, len(gq) - 2, -1):
        c = work[i]
        if c == 0:
            continue
        c *= inv
        quot[i - (len(gq) - 1)] = c
        for j in range(len(gq)):
            work[i - (len(gq) - 1) + j] -= c * gq[j]
    if any(w != 0 for w in work):
        raise ExactnessError("division was not exact")
    if any(qc.denominator != 1 for qc in quot):
        raise ExactnessError("exact quotient not integral")
    return IntPoly([int(qc) for qc in quot])


def discriminant(f: IntPoly):
    """disc(f) as a Fraction (exact, via the Euclidean resultant)."""
    n = f.degree
    df = f.derivative()
    res = _resultant(f.to_fractions(), df.to_fractions())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / Fraction(f.lc())


def _resultant(f: list[Fraction], g: list[Fraction]) -> Fraction:
    """Res(f, g) over Q by the remainder-sequence product formula."""

    def trim(h):
        n = len(h)
        while n and h[n - 1] == 0:
            n -= 1
        return h[:n]

    f, g = trim(list(f)), trim(list(g))
    if not f or not g:
        return Fraction(0)
    res = Fraction(1)
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            return res * g[0] ** df
        # f mod g
        r = list(f)
        inv = 1 / g[-1]
        while len(r) - 1 >= dg and r:
            c = r[-1] * inv
            off = len(r) - 1 - dg
            for j in range(dg + 1):
                r[off + j] -= c * g[j]
            r = trim(r)
        if not r:
            return Fraction(0)
        dr = len(r) - 1
        res *= (-1) ** (df * dg) * g[-1] ** (df - dr)
        f, g = g, r


def _mignotte_bound(f: IntPoly) -> int:
    n = f.degree
    norm2 = isqrt(sum(c * c for c in f.coeffs)) + 1
    return (isqrt(n + 1) + 1) * (1 << n) * norm2 * abs(f.lc())


def _choose_prime(f: IntPoly) -> int:
    """Smallest prime not dividing disc(f) * lc(f); keeps f squarefree mod p."""
    p = 2
    lc = abs(f.lc())
    while True:
        p = _next_prime(p)
        if lc % p == 0:
            continue
        F = PrimeField(p)
        fp = ftrim(F, [c % p for c in f.coeffs])
        if fdeg(fp) != f.degree:
            continue
        if fdeg(fgcd(F, fp, fdiff(F, fp))) == 0:
            return p


def _next_prime(n: int) -> int:
    n += 1
    while not _is_prime(n):
        n += 1
    return n


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _zassenhaus_squarefree_monic(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a monic squarefree f over Z."""
    n = f.degree
    if n <= 1:
        return [f]
    p = _choose_prime(f)
    F = PrimeField(p)
    _, modular = fp_factor_raw(F, [c % p for c in f.coeffs])
    factors_mod = [g for g, _ in modular]
    if len(factors_mod) == 1:
        return [f]
    B = 2 * _mignotte_bound(f) + 1
    k = 1
    while p ** k < B:
        k += 1
    lifted = hensel_lift_multi(f, factors_mod, p, k)
    pl = p ** k

    remaining = list(range(len(lifted)))
    out: list[IntPoly] = []
    current = f
    s = 1
    while 2 * s <= len(remaining):
        found = False
        for S in combinations(remaining, s):
            # trial factor: symmetric-residue product of the chosen lifts
            prod = [1]
            for i in S:
                prod = _trunc(_mul_list(prod, list(lifted[i].coeffs)), pl)
            cand = IntPoly(prod)
            if not cand.is_monic():
                continue
            if cand[0] != 0 and current[0] % cand[0] != 0:
                continue
            quot, rem = current.divmod_monic(cand)
            if not rem.is_zero():
                continue
            out.append(cand)
            current = quot
            remaining = [i for i in remaining if i not in S]
            found = True
            break
        if not found:
            s += 1
    if current.degree > 0:
        out.append(current)
    prod = IntPoly.one()
    for g in out:
        prod = prod * g
    if prod != f:
        raise ExactnessError("Zassenhaus recombination failed verification")
    return out


def _mul_list(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _factor_squarefree_primitive(f: IntPoly) -> list[IntPoly]:
    if f.degree <= 0:
        return []
    if f.is_monic():
        return _zassenhaus_squarefree_monic(f)
    # monicize: F(x) = lc^(n-1) f(x/lc) is monic over Z
    b = f.lc()
    n = f.degree
    mon = IntPoly([c * b ** (n - 1 - i) for i, c in enumerate(f.coeffs)])
    parts = _zassenhaus_squarefree_monic(mon)
    out = []
    for g in parts:
        mapped = IntPoly([c * b ** i for i, c in enumerate(g.coeffs)])
        out.append(mapped.primitive()[1])
    return out


def factor_over_integers(f: IntPoly) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Complete factorization over Z.

    Returns (content, [(irreducible primitive factor, multiplicity)]) with
    content carrying the sign, factors sorted by (degree, coefficients), and
    content * prod factor^mult == f exactly (verified before returning).
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    cont, prim = f.primitive()
    out: list[tuple[IntPoly, int]] = []
    for sqf, mult in squarefree_decomposition(prim):
        for irr in _factor_squarefree_primitive(sqf):
            out.append((irr, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    check = IntPoly([cont])
    for g, m in out:
        check = check * g ** m
    if check != f:
        raise ExactnessError("factorization failed to reconstruct the input")
    return cont, out


def is_irreducible_over_z(f: IntPoly) -> bool:
    if f.degree <= 0:
        return False
    _, fac = factor_over_integers(f)
    return len(fac) == 1 and fac[0][1] == 1 and fac[0][0].degree == f.degree
