"""Frozen reference data shared by the test modules.

Polynomials are stored as upper-half coefficient tuples (a_0, ..., a_g);
they are the classification polynomials for the small sporadic surgeries,
entered by hand with the two misprinted tails symmetrized.
"""

from lenssurg.alex import SymmetricPoly

TREFOIL = SymmetricPoly((-1, 1))

# genus 4, the L(8,1) / L(7,2)-with-d=2 polynomial
DELTA_K2 = SymmetricPoly((-1, 1, 0, -1, 1))

DELTA_K3_D0 = TREFOIL
DELTA_K3_D2 = DELTA_K2

# L(11,3)
DELTA_K4_D0 = SymmetricPoly((1, -1, 1))
DELTA_K4_D2 = SymmetricPoly((1, -1, 1, 0, 0, -1, 1))

# L(13,3)
DELTA_K5_D0 = SymmetricPoly((1, 0, -1, 1))
DELTA_K5_D2 = SymmetricPoly((1, 0, -1, 1, 0, 0, -1, 1))

# genus 11, the L(22,3) polynomial
DELTA_K6 = SymmetricPoly((-1, 0, 1, 0, 0, -1, 1, 0, 0, 0, -1, 1))


def delta_k1(p: int) -> SymmetricPoly:
    """The L(p,1), h=1, d=2 polynomial for odd p: 1 - t^{+-(p-1)/2} + t^{+-(p+1)/2}."""
    if p % 2 == 0:
        raise ValueError("p must be odd")
    g = (p + 1) // 2
    coeffs = [0] * (g + 1)
    coeffs[0] = 1
    coeffs[g - 1] = -1
    coeffs[g] = 1
    return SymmetricPoly(tuple(coeffs))
