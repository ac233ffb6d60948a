"""Dense univariate polynomials over Z and over Q(sqrt(q)).

Coefficients are stored constant term first, trimmed so the leading
coefficient is nonzero (the zero polynomial has an empty tuple).  IntPoly is
the workhorse for everything the classifiers consume; QuadPoly carries
QuadReal coefficients sharing one radicand and is a field-coefficient
polynomial (exact division, gcd, Sturm chains).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainMismatchError, StructuralError
from .quadreal import QuadReal


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n > 0 and _is_zero(coeffs[n - 1]):
        n -= 1
    return tuple(coeffs[:n])


def _is_zero(c) -> bool:
    if isinstance(c, QuadReal):
        return c.is_zero()
    return c == 0


class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        coeffs = [int(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, *_):
        raise AttributeError("IntPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly([])

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly([1])

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly([0, 1])

    @staticmethod
    def monomial(c: int, k: int) -> "IntPoly":
        return IntPoly([0] * k + [c])

    # -- structure ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.lc() == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.degree else 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c:+d}")
            else:
                t = "t" if i == 1 else f"t^{i}"
                if c == 1:
                    parts.append(f"+{t}")
                elif c == -1:
                    parts.append(f"-{t}")
                else:
                    parts.append(f"{c:+d}*{t}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        out = IntPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def evaluate(self, x):
        """Horner evaluation; x may be int, Fraction or QuadReal."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, alpha: int, beta: int) -> "IntPoly":
        """p(alpha*t + beta), exact over Z."""
        acc = IntPoly.zero()
        lin = IntPoly([beta, alpha])
        for c in reversed(self.coeffs):
            acc = acc * lin + IntPoly([c])
        return acc

    def shift(self, k: int) -> "IntPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return IntPoly([0] * k + list(self.coeffs))

    def reverse(self) -> "IntPoly":
        """t^deg * p(1/t)."""
        return IntPoly(list(reversed(self.coeffs)))

    def divmod_monic(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Quotient and remainder for a monic divisor; exact over Z."""
        if not other.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = other.degree
        if len(rem) - 1 < d:
            return IntPoly.zero(), self
        quot = [0] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            quot[i - d] = c
            for j in range(d + 1):
                rem[i - d + j] -= c * other.coeffs[j]
        return IntPoly(quot), IntPoly(rem)

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def primitive(self) -> tuple[int, "IntPoly"]:
        """(content with the sign of lc, primitive part)."""
        if self.is_zero():
            return 0, self
        g = self.content()
        if self.lc() < 0:
            g = -g
        return g, IntPoly([c // g for c in self.coeffs])

    def max_norm(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def to_quad(self, q: int | None = None) -> "QuadPoly":
        return QuadPoly([QuadReal(c) for c in self.coeffs], q=q)

    def to_fractions(self) -> list[Fraction]:
        return [Fraction(c) for c in self.coeffs]


class QuadPoly:
    """Polynomial with QuadReal coefficients sharing one radicand."""

    __slots__ = ("coeffs", "q")

    def __init__(self, coeffs: Sequence, q: int | None = None):
        vals = []
        for c in coeffs:
            if not isinstance(c, QuadReal):
                c = QuadReal(c)
            vals.append(c)
        for c in vals:
            if c.q is not None:
                if q is not None and q != c.q:
                    raise DomainMismatchError(f"coefficient radicand {c.q} != {q}")
                q = c.q
        object.__setattr__(self, "coeffs", _trim(vals))
        object.__setattr__(self, "q", q)

    def __setattr__(self, *_):
        raise AttributeError("QuadPoly is immutable")

    @staticmethod
    def zero(q: int | None = None) -> "QuadPoly":
        return QuadPoly([], q=q)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> QuadReal:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.lc() == QuadReal(1)

    def __getitem__(self, i: int) -> QuadReal:
        return self.coeffs[i] if 0 <= i <= self.degree else QuadReal(0)

    def __eq__(self, other):
        return (
            isinstance(other, QuadPoly)
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QuadPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def _join(self, other: "QuadPoly") -> int | None:
        if self.q is None:
            return other.q
        if other.q is None or other.q == self.q:
            return self.q
        raise DomainMismatchError(f"mixed radicands {self.q} and {other.q}")

    def __add__(self, other: "QuadPoly") -> "QuadPoly":
        q = self._join(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QuadPoly([self[i] + other[i] for i in range(n)], q=q)

    def __sub__(self, other: "QuadPoly") -> "QuadPoly":
        q = self._join(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QuadPoly([self[i] - other[i] for i in range(n)], q=q)

    def __neg__(self) -> "QuadPoly":
        return QuadPoly([-c for c in self.coeffs], q=self.q)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadReal)):
            return QuadPoly([c * other for c in self.coeffs], q=self.q)
        if not isinstance(other, QuadPoly):
            return NotImplemented
        q = self._join(other)
        if self.is_zero() or other.is_zero():
            return QuadPoly.zero(q)
        out = [QuadReal(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return QuadPoly(out, q=q)

    __rmul__ = __mul__

    def derivative(self) -> "QuadPoly":
        return QuadPoly(
            [self.coeffs[i] * i for i in range(1, len(self.coeffs))], q=self.q
        )

    def evaluate(self, x) -> QuadReal:
        if isinstance(x, QuadReal) and x.b == 0:
            x = x.a
        if not isinstance(x, QuadReal):
            # rational point: run the two Fraction Horner chains directly,
            # avoiding per-step QuadReal boxing (hot path for Sturm counts)
            xf = Fraction(x)
            a_acc = Fraction(0)
            b_acc = Fraction(0)
            for c in reversed(self.coeffs):
                a_acc = a_acc * xf + c.a
                b_acc = b_acc * xf + c.b
            return QuadReal(a_acc, b_acc, self.q)
        acc = QuadReal(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, alpha, beta) -> "QuadPoly":
        """p(alpha*t + beta)."""
        q = self.q
        lin = QuadPoly([beta, alpha], q=q)
        acc = QuadPoly.zero(q)
        for c in reversed(self.coeffs):
            acc = acc * lin + QuadPoly([c], q=q)
        return acc

    def divmod(self, other: "QuadPoly") -> tuple["QuadPoly", "QuadPoly"]:
        """Exact field division with remainder."""
        q = self._join(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        inv = other.lc().inverse()
        if len(rem) - 1 < d:
            return QuadPoly.zero(q), self
        quot = [QuadReal(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            f = c * inv
            quot[i - d] = f
            for j in range(d + 1):
                rem[i - d + j] = rem[i - d + j] - f * other.coeffs[j]
        return QuadPoly(quot, q=q), QuadPoly(rem, q=q)

    def monic(self) -> "QuadPoly":
        if self.is_zero():
            return self
        inv = self.lc().inverse()
        return QuadPoly([c * inv for c in self.coeffs], q=self.q)

    def gcd(self, other: "QuadPoly") -> "QuadPoly":
        """Monic gcd by the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def squarefree_part(self) -> "QuadPoly":
        if self.degree <= 0:
            return self.monic() if not self.is_zero() else self
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return self.divmod(g)[0].monic()


def poly_from_string(text: str) -> IntPoly:
    """Parse a comma-separated coefficient list, constant term first.

    Raises StructuralError with a character position on malformed input.
    """
    coeffs = []
    pos = 0
    for chunk in text.split(","):
        stripped = chunk.strip()
        if not stripped:
            raise StructuralError(f"empty coefficient at position {pos}")
        try:
            coeffs.append(int(stripped))
        except ValueError:
            raise StructuralError(
                f"bad integer {stripped!r} at position {pos}"
            ) from None
        pos += len(chunk) + 1
    return IntPoly(coeffs)


def poly_to_string(p: IntPoly) -> str:
    """Inverse of poly_from_string (round-trips)."""
    if p.is_zero():
        return "0"
    return ",".join(str(c) for c in p.coeffs)
