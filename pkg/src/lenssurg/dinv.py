"""Correction terms d(L(p,q), i) of lens spaces and the Spin^c relabeling Q.

L(p,q) is the p/q-surgery on the unknot with the orientation for which
d(L(p,1), i) = ((2i - p)^2 - p) / (4p).  General (p,q) values come from the
Euclidean recursion

    d(p, q, i) = ((2i + 1 - p - q)^2 - pq) / (4pq) - d(q, p mod q, i mod q)

with base case d(1, 0, 0) = 0, indices always reduced into [0, modulus).
The labeling convention is pinned by the certification anchors; see the
certify module tests.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = ["d_lens_p1", "d_lens", "d_vector", "spin_c_c", "spin_c_Q"]


def d_lens_p1(p: int, i: int) -> Fraction:
    """Closed form d(L(p,1), i) = ((2i - p)^2 - p) / (4p) for 0 <= i < p."""
    if not 0 <= i < p:
        raise ValueError(f"index {i} out of range for modulus {p}")
    return Fraction((2 * i - p) ** 2 - p, 4 * p)


@lru_cache(maxsize=256)
def d_vector(p: int, q: int) -> tuple:
    """All p correction terms of L(p,q), indexed by i in Z/p.

    Built level by level along the Euclidean descent, so the cost is
    O(p + q + ...) Fraction operations and the cache stays small.
    """
    if p == 1 and q == 0:
        return (Fraction(0),)
    if not 0 < q < p or gcd(p, q) != 1:
        raise ValueError(f"bad lens parameters ({p}, {q})")
    lower = d_vector(q, p % q)
    den = 4 * p * q
    return tuple(
        Fraction((2 * i + 1 - p - q) ** 2 - p * q, den) - lower[i % q]
        for i in range(p)
    )


def d_lens(p: int, q: int, i: int) -> Fraction:
    """d(L(p,q), i) with gcd(p,q) = 1, 0 < q < p, 0 <= i < p.

    For q = 1 this agrees with d_lens_p1 exactly.
    """
    if not 0 < q < p:
        raise ValueError(f"need 0 < q < p, got ({p}, {q})")
    if not 0 <= i < p:
        raise ValueError(f"index {i} out of range for modulus {p}")
    return d_vector(p, q)[i]


def spin_c_c(h: int, p: int) -> int:
    """The shift c = [(h+1+p)(h-1)/2]_p in the relabeling Q(i) = hi + c."""
    if gcd(h, p) != 1:
        raise ValueError(f"gcd({h}, {p}) != 1")
    prod = (h + 1 + p) * (h - 1)
    # (h+1+p)(h-1) is even whenever gcd(h,p)=1: h odd makes h-1 even,
    # h even forces p odd and h+1+p even.
    if prod % 2 != 0:
        raise ValueError(f"ill-formed Spin^c shift for (h, p) = ({h}, {p})")
    return (prod // 2) % p


def spin_c_Q(h: int, p: int, i: int) -> int:
    """Q(i) = [h*i + c]_p; a bijection of Z/p since h is invertible."""
    return (h * i + spin_c_c(h, p)) % p
