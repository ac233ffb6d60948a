"""Rational-endpoint interval arithmetic.

Endpoints are Fractions, so all operations are exact; "precision" only
enters when converting irrational QuadReal values to an enclosure.  This is
the evaluation backend for certified comparisons of algebraic quantities.
"""

from __future__ import annotations

from fractions import Fraction

from .quadreal import QuadReal


class RInt:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError("inverted interval")
        self.lo = lo
        self.hi = hi

    @staticmethod
    def of_quadreal(x: QuadReal, bits: int) -> "RInt":
        lo, hi = x.interval(bits)
        return RInt(lo, hi)

    def __add__(self, other: "RInt") -> "RInt":
        return RInt(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RInt") -> "RInt":
        return RInt(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "RInt":
        return RInt(-self.hi, -self.lo)

    def __mul__(self, other: "RInt") -> "RInt":
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RInt(min(cands), max(cands))

    def width(self) -> Fraction:
        return self.hi - self.lo

    def sign(self) -> int | None:
        """Certain sign, or None if the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == 0 and self.hi == 0:
            return 0
        return None

    def __repr__(self):
        return f"RInt({self.lo}, {self.hi})"


def eval_poly_interval(coeffs: list[RInt], x: RInt) -> RInt:
    """Interval Horner evaluation."""
    acc = RInt(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
