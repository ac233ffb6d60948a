"""Quadratic Hensel lifting of coprime factorizations in Z[t].

The single step follows the textbook scheme: given f = g*h (mod m) with
Bezout cofactors s*g + t*h = 1 (mod m), it produces the same data mod m^2.
Lifting to p^k iterates the step ceil(log2 k) times; a multifactor lift
splits the factor list in halves on a binary tree.  Every step re-verifies
its congruence, so a bad seed fails loudly rather than corrupting results.
"""

from __future__ import annotations

from .errors import ExactnessError
from .fpoly import PrimeField, fdeg, fgcd, fmul, fdivmod, fmonic, fsub, ftrim
from .polynomial import IntPoly


def _trunc(f: list[int], m: int) -> list[int]:
    """Symmetric residue truncation, coefficients in (-m/2, m/2]."""
    out = []
    for c in f:
        c %= m
        if 2 * c > m:
            c -= m
        out.append(c)
    n = len(out)
    while n and out[n - 1] == 0:
        n -= 1
    return out[:n]


def _mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _add(f, g):
    n = max(len(f), len(g))
    return [
        (f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)
    ]


def _sub(f, g):
    n = max(len(f), len(g))
    return [
        (f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)
    ]


def _divmod_monic(f, g):
    rem = list(f)
    d = len(g) - 1
    if len(rem) - 1 < d:
        return [], rem
    quot = [0] * (len(rem) - d)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quot[i - d] = c
        for j in range(d + 1):
            rem[i - d + j] -= c * g[j]
    return quot, rem


def hensel_step(m: int, f, g, h, s, t):
    """Lift f = g*h (mod m), s*g + t*h = 1 (mod m) to modulus m^2.

    h must be monic.  Returns (G, H, S, T) mod m^2 with H monic.
    """
    M = m * m
    e = _trunc(_sub(f, _mul(g, h)), M)
    q, r = _divmod_monic(_trunc(_mul(s, e), M), h)
    q = _trunc(q, M)
    r = _trunc(r, M)
    u = _add(_mul(t, e), _mul(q, g))
    G = _trunc(_add(g, u), M)
    H = _trunc(_add(h, r), M)
    b = _trunc(_sub(_add(_mul(s, G), _mul(t, H)), [1]), M)
    c, d = _divmod_monic(_trunc(_mul(s, b), M), H)
    c = _trunc(c, M)
    d = _trunc(d, M)
    u = _add(_mul(t, b), _mul(c, G))
    S = _trunc(_sub(s, d), M)
    T = _trunc(_sub(t, u), M)
    return G, H, S, T


def hensel_lift_pair(f: IntPoly, g0: list[int], h0: list[int], p: int, k: int):
    """Lift the coprime split f = g0*h0 (mod p) to modulus p^k.

    g0, h0 are monic F_p coefficient lists with deg g0 + deg h0 = deg f and f
    monic.  Returns (g, h) as IntPoly with coefficients reduced mod p^k.
    Raises ExactnessError if the seed factors are not coprime mod p or the
    lifted product fails to reproduce f.
    """
    F = PrimeField(p)
    g0 = fmonic(F, ftrim(F, [c % p for c in g0]))
    h0 = fmonic(F, ftrim(F, [c % p for c in h0]))
    if fdeg(fgcd(F, g0, h0)) != 0:
        raise ValueError("seed factors are not coprime mod p")
    prod = ftrim(F, [c % p for c in fmul(F, g0, h0)])
    fp = ftrim(F, [c % p for c in f.coeffs])
    if prod != fp:
        raise ValueError("seed factorization does not match f mod p")
    # Bezout cofactors mod p by the extended Euclidean algorithm
    s, t = _gcdex(F, g0, h0)
    g, h = list(g0), list(h0)
    m = p
    fl = list(f.coeffs)
    while m < p ** k:
        g, h, s, t = hensel_step(m, fl, g, h, s, t)
        m = m * m
    mod = p ** k
    g = _trunc(g, mod)
    h = _trunc(h, mod)
    check = _trunc(_sub(fl, _mul(g, h)), mod)
    if check:
        raise ExactnessError("Hensel lift failed verification")
    return IntPoly(g), IntPoly(h)


def _gcdex(F, a, b):
    """(s, t) with s*a + t*b = 1 for coprime monic a, b over F_p."""
    r0, r1 = list(a), list(b)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = fdivmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, fsub(F, s0, fmul(F, q, s1))
        t0, t1 = t1, fsub(F, t0, fmul(F, q, t1))
    # r0 is a nonzero constant; normalize to 1
    inv = F.inv(r0[0])
    s = [F.mul(c, inv) for c in s0]
    t = [F.mul(c, inv) for c in t0]
    return s, t


def hensel_lift_multi(f: IntPoly, factors: list[list[int]], p: int, k: int) -> list[IntPoly]:
    """Lift pairwise-coprime monic factors of monic f mod p to mod p^k.

    Binary-tree strategy: split the list in half, lift the two products as a
    pair, recurse into each half.
    """
    if len(factors) == 1:
        return [IntPoly(_trunc(list(f.coeffs), p ** k))]
    F = PrimeField(p)
    half = len(factors) // 2
    g0 = [F.one]
    for fac in factors[:half]:
        g0 = fmul(F, g0, fac)
    h0 = [F.one]
    for fac in factors[half:]:
        h0 = fmul(F, h0, fac)
    g, h = hensel_lift_pair(f, g0, h0, p, k)
    return hensel_lift_multi(g, factors[:half], p, k) + hensel_lift_multi(
        h, factors[half:], p, k
    )
