"""Alexander-polynomial calculus for lens-surgery knots.

Covers the combinatorial count Phi, the reduced coefficients a~_i indexed by
Z/p, recovery of the symmetric polynomial from its reduction (unreduce), the
alternating-coefficient normal form, Turaev torsions, and the degree-shift
relation linking the d=0 and d=2 polynomials over the same lens space.

Conventions: polynomials are normalized (Delta(1) = 1) and symmetrized
(a_i = a_{-i}); m in the reduced-coefficient formula is (h*h' - 1)/p with
h, h' the canonical representatives of h and h^{-1} in [1, p).
"""

from dataclasses import dataclass
from math import gcd

from .arith import mod_inverse

__all__ = [
    "SymmetricPoly",
    "ReducedVector",
    "UnreduceError",
    "phi",
    "reduced_coeffs",
    "os_form_check",
    "genus_from_reduced",
    "unreduce",
    "torsion_from_poly",
    "reduced_torsions",
    "dd1",
    "delta_relation_check",
    "delta_lift",
]


class UnreduceError(ValueError):
    """The reduced vector does not come from a valid symmetric polynomial."""


@dataclass(frozen=True)
class SymmetricPoly:
    """Integer symmetric Laurent polynomial, stored as coefficients a_0..a_g.

    a_{-i} = a_i is implicit.  degree() is the top index with a nonzero
    coefficient (0 for the constant polynomial).
    """

    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        if not c:
            raise ValueError("empty coefficient list")
        if len(c) > 1 and c[-1] == 0:
            raise ValueError("top coefficient must be nonzero")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeff_map(cls, items) -> "SymmetricPoly":
        """Build from {exponent: coefficient}; negative exponents must mirror."""
        d = dict(items)
        g = max((abs(i) for i, a in d.items() if a), default=0)
        coeffs = []
        for i in range(g + 1):
            a = d.get(i, 0)
            if d.get(-i, a) != a:
                raise ValueError(f"coefficients at +-{i} differ")
            coeffs.append(a)
        return cls(tuple(coeffs))

    def coeff(self, i: int) -> int:
        i = abs(i)
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval_at_one(self) -> int:
        return self.coeffs[0] + 2 * sum(self.coeffs[1:])

    def __str__(self):
        terms = []
        for i in range(-self.degree(), self.degree() + 1):
            a = self.coeff(i)
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                t = "t" if i == 1 else f"t^{i}"
                body = t if mag == 1 else f"{mag}*{t}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ONE = SymmetricPoly((1,))


@dataclass(frozen=True)
class ReducedVector:
    """Coefficient sums over residue classes mod p: entry i is sum of a_j, j = i (p)."""

    p: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.p:
            raise ValueError("entry count must equal the modulus")
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    def is_symmetric(self) -> bool:
        return all(self.entries[(-i) % self.p] == self.entries[i] for i in range(self.p))

    def total(self) -> int:
        return sum(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i % self.p]


def phi(p: int, q: int, h: int, k: int) -> int:
    """#{j in [1, h'] : [qj - k]_p in [1, h]} with h = [h]_p, h' = [h^{-1}]_p.

    Direct iteration; reduced_coeffs uses an equivalent O(p + h') sweep and
    is cross-checked against this in the tests.
    """
    h = h % p
    hp = mod_inverse(h, p)
    if gcd(q, p) != 1:
        raise ValueError(f"gcd({q}, {p}) != 1")
    count = 0
    for j in range(1, hp + 1):
        if 1 <= (q * j - k) % p <= h:
            count += 1
    return count


def reduced_coeffs(p: int, q: int, h: int) -> ReducedVector:
    """Reduced Alexander coefficients a~_i = -m + Phi^{hi+c}_{p,q}(h) for i in Z/p.

    Computed for all residues at once: Phi^k, as a function of k, is the
    coverage depth of h' circular intervals of length h, accumulated with a
    difference array.  Always sums to 1.
    """
    h = h % p
    hp = mod_inverse(h, p)
    if gcd(q, p) != 1:
        raise ValueError(f"gcd({q}, {p}) != 1")
    m = (h * hp - 1) // p
    # j contributes to Phi^k exactly for k in the circular window [qj-h, qj-1].
    diff = [0] * (p + 1)
    for j in range(1, hp + 1):
        hi = (q * j) % p          # window is [hi - h, hi - 1] mod p
        lo = (hi - h) % p
        if lo < hi:
            diff[lo] += 1
            diff[hi] -= 1
        else:                      # wraps around 0
            diff[0] += 1
            diff[hi] -= 1
            diff[lo] += 1
    depth = 0
    cover = [0] * p
    for k in range(p):
        depth += diff[k]
        cover[k] = depth
    c = ((h + 1 + p) * (h - 1) // 2) % p
    return ReducedVector(p, tuple(cover[(h * i + c) % p] - m for i in range(p)))


def os_form_check(poly: SymmetricPoly):
    """Decompose Delta = (-1)^k + sum_j (-1)^{k-j} (t^{n_j} + t^{-n_j}).

    Returns (k, (n_1, ..., n_k)) when the nonzero coefficients, read from the
    top degree down to the constant term, are exactly +1, -1, +1, ... with the
    constant term included; returns None otherwise.
    """
    support = [i for i in range(poly.degree(), -1, -1) if poly.coeff(i) != 0]
    if not support or support[-1] != 0:
        return None
    want = 1
    for i in support:
        if poly.coeff(i) != want:
            return None
        want = -want
    ns = tuple(sorted(i for i in support if i > 0))
    return len(ns), ns


def genus_from_reduced(v: ReducedVector) -> int:
    """Largest index in {0, ..., floor(p/2)} carrying a nonzero entry."""
    return max(i for i in range(v.p // 2 + 1) if v[i] != 0)


def unreduce(v: ReducedVector, g: int) -> SymmetricPoly:
    """Recover the degree-g symmetric polynomial whose mod-p reduction is v.

    Index collisions are resolved by the alternating normal form:
      2g < p   -- classes are disjoint, plain readback;
      2g = p   -- classes +-g coincide, the entry must split evenly;
      2g = p+1 -- class of g collides with -(g-1); top coefficient is +1.
    Raises UnreduceError when no valid polynomial exists.
    """
    p = v.p
    if 2 * g > p + 1:
        raise UnreduceError(f"genus {g} too large for modulus {p}")
    if not v.is_symmetric():
        raise UnreduceError("reduced vector is not symmetric")
    if 2 * g == p + 1:
        coeffs = [v[i] for i in range(g - 1)]
        coeffs.append(v[g - 1] - 1)  # class of g-1 also carries a_{-g} = 1
        coeffs.append(1)
    elif 2 * g == p:
        if v[g] % 2 != 0:
            raise UnreduceError("middle class entry must be even when 2g = p")
        coeffs = [v[i] for i in range(g)]
        coeffs.append(v[g] // 2)
    else:
        coeffs = [v[i] for i in range(g + 1)]
    if coeffs[-1] == 0:
        raise UnreduceError("reconstructed top coefficient vanishes")
    poly = SymmetricPoly(tuple(coeffs))
    if poly.eval_at_one() != 1:
        raise UnreduceError("reconstructed polynomial does not evaluate to 1 at t=1")
    if reduce_poly(poly, p) != v:
        raise UnreduceError("reconstruction does not reduce back to the input")
    if os_form_check(poly) is None:
        raise UnreduceError("reconstructed polynomial is not in alternating form")
    return poly


def reduce_poly(poly: SymmetricPoly, p: int) -> ReducedVector:
    """Sum coefficients over residue classes mod p (inverse of unreduce)."""
    entries = [0] * p
    for i in range(-poly.degree(), poly.degree() + 1):
        entries[i % p] += poly.coeff(i)
    return ReducedVector(p, tuple(entries))


def torsion_from_poly(poly: SymmetricPoly) -> tuple:
    """Turaev torsions t_i = sum_{j>=1} j * a_{i+j} for i = 0..degree-1.

    t_i vanishes for i >= degree; the full two-sided sequence is t_{-i} = t_i.
    Computed with suffix sums in O(degree).
    """
    g = poly.degree()
    if poly.eval_at_one() != 1:
        raise ValueError("polynomial is not normalized: Delta(1) != 1")
    ts = []
    s1 = 0  # sum of a_j for j > i
    s2 = 0  # sum of j*a_j for j > i
    for i in range(g - 1, -1, -1):
        a = poly.coeff(i + 1)
        s1 += a
        s2 += (i + 1) * a
        ts.append(s2 - i * s1)
    ts.reverse()
    return tuple(ts)


def reduced_torsions(torsions: tuple, p: int) -> tuple:
    """Class sums t~_i = sum_{j = i mod p} t_j over the two-sided sequence."""
    out = [0] * p
    n = len(torsions)
    for j in range(-n + 1, n):
        out[j % p] += torsions[abs(j)]
    return tuple(out)


def dd1(poly: SymmetricPoly) -> int:
    """Second derivative at t=1: sum_i i^2 a_i = 2 sum_{i>=1} i^2 a_i."""
    return 2 * sum(i * i * poly.coeff(i) for i in range(1, poly.degree() + 1))


def delta_relation_check(delta_s3: SymmetricPoly, delta_y: SymmetricPoly, p: int) -> bool:
    """True iff delta_y = delta_s3 - (t^{(p-1)/2} + c.c.) + (t^{(p+1)/2} + c.c.)."""
    if p % 2 == 0:
        raise ValueError("the degree-shift relation needs odd p")
    try:
        return delta_y == delta_lift(delta_s3, p)
    except ValueError:
        return False


def delta_lift(poly: SymmetricPoly, p: int) -> SymmetricPoly:
    """Apply the degree shift: subtract t^{+-(p-1)/2}, add t^{+-(p+1)/2}."""
    if p % 2 == 0:
        raise ValueError("the degree-shift relation needs odd p")
    top = (p + 1) // 2
    if poly.degree() >= top:
        raise ValueError(f"degree {poly.degree()} too large for the shift at p={p}")
    coeffs = [poly.coeff(i) for i in range(top + 1)]
    coeffs[top - 1] -= 1
    coeffs[top] += 1
    if coeffs[top] == 0:
        raise ValueError("degree shift cancels the top coefficient")
    return SymmetricPoly(tuple(coeffs))
