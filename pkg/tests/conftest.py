import random
from fractions import Fraction

import pytest

from weilpoly.polynomial import IntPoly


def expand_from_roots(roots):
    """Monic polynomial with the given roots, exact coefficient arithmetic."""
    coeffs = [Fraction(1)]
    for r in roots:
        r = Fraction(r)
        coeffs = [Fraction(0)] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= r * coeffs[i + 1]
    return coeffs  # constant term first


def r_vector_from_roots(roots):
    """r_1..r_6 of the monic sextic with the given roots (leading term dropped)."""
    coeffs = expand_from_roots(roots)
    return list(reversed(coeffs))[1:]


def weil_product(q, xs):
    """prod (t^2 + x t + q) as an IntPoly."""
    chi = IntPoly([1])
    for x in xs:
        chi = chi * IntPoly([q, x, 1])
    return chi


@pytest.fixture
def rng():
    return random.Random(20240814)
