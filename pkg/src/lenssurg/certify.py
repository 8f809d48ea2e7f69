"""Certification pipeline for lens-surgery data (p, q, h).

Given a slope p, lens parameter q and dual-knot class h, the pipeline
derives the correction term d of the source homology sphere that the
surgery formula forces, validates every obstruction (quadratic-residue
test, alternating form of the Alexander polynomial, torsion positivity,
integrality and evenness of d, the surgery formula at every Spin^c
structure, the genus-slope bounds, and the Euler identity), and emits
either a Certificate with a full audit trail or a typed Rejection.

Internal convention: the reduced-coefficient formula and the correction
terms are evaluated with the square representative q* = [h^2]_p.  The
input q must agree with q* up to the q <-> q^{-1} homeomorphism; the
stored datum carries the canonical (minimal) q and h.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import alex
from .alex import (
    ReducedVector,
    SymmetricPoly,
    UnreduceError,
    dd1,
    genus_from_reduced,
    os_form_check,
    reduced_coeffs,
    reduced_torsions,
    torsion_from_poly,
    unreduce,
)
from .arith import is_square_mod, mod_inverse
from .casson import lambda_rustamov
from .dinv import d_lens_p1, d_vector, spin_c_Q

__all__ = [
    "SurgeryDatum",
    "Certificate",
    "Rejection",
    "REJECTION_STAGES",
    "canonical_q",
    "canonical_h",
    "square_rep",
    "derive_d",
    "bounds_check",
    "certify",
    "lift_to_d2",
    "certificate_to_json",
    "certificate_from_json",
]

REJECTION_STAGES = (
    "coprimality",
    "square-test",
    "os-form",
    "negative-torsion",
    "non-integral-d",
    "odd-d",
    "correction-mismatch",
    "bound-violation",
)


@dataclass(frozen=True)
class SurgeryDatum:
    p: int
    q: int          # canonical: min([q]_p, [q^{-1}]_p)
    h: int          # canonical: minimal element of {+-h^{+-1}} in [1, p)
    d: int
    g: int


@dataclass(frozen=True)
class Certificate:
    datum: SurgeryDatum
    q_square: int                   # representative with q_square = h^2 mod p
    reduced: ReducedVector
    poly: SymmetricPoly
    torsions: tuple                 # t_0 .. t_{g-1}
    lambda_pq: Fraction
    lambda_p1: Fraction
    checks: tuple                   # ((name, True), ...)
    boundary_genus: bool = False    # 2g - 1 = p (only via lift_to_d2)

    @property
    def p(self):
        return self.datum.p

    @property
    def d(self):
        return self.datum.d

    @property
    def g(self):
        return self.datum.g


@dataclass(frozen=True)
class Rejection:
    p: int
    q: int
    h: int
    stage: str
    detail: str = ""
    derived_d: object = None        # set when the pipeline got far enough

    def __post_init__(self):
        if self.stage not in REJECTION_STAGES:
            raise ValueError(f"unknown rejection stage {self.stage!r}")


def canonical_q(p: int, q: int) -> int:
    """min([q]_p, [q^{-1}]_p); the two describe homeomorphic lens spaces."""
    q = q % p
    return min(q, mod_inverse(q, p))


def canonical_h(p: int, h: int) -> int:
    """Minimal representative of the class set {+-h^{+-1}} in [1, p)."""
    h = h % p
    hp = mod_inverse(h, p)
    return min(h, (-h) % p, hp, (-hp) % p)


def square_rep(p: int, h: int) -> int:
    """The lens parameter [h^2]_p forced by the dual class h."""
    return (h * h) % p


def _compatible(p: int, q: int, h: int) -> bool:
    """The input q names the same lens space as [h^2]_p."""
    qs = square_rep(p, h)
    q = q % p
    return qs == q or qs == mod_inverse(q, p)


def derive_d(p: int, q: int, h: int) -> Fraction:
    """Correction term forced by the surgery formula at i = 0.

    d = 2*t~_0 + d(L(p,q*), Q(0)) - d(L(p,1), 0) with q* = [h^2]_p and t~
    the mod-p reduced Turaev torsions of the reconstructed polynomial.
    Raises UnreduceError when the reduced coefficients admit no polynomial.
    """
    if gcd(p, q) != 1 or gcd(p, h) != 1:
        raise ValueError(f"({p}, {q}, {h}) is not pairwise admissible")
    if not _compatible(p, q, h):
        raise ValueError(f"q = {q} is not the square class of h = {h} mod {p}")
    qs = square_rep(p, h)
    v = reduced_coeffs(p, qs, h)
    g = genus_from_reduced(v)
    poly = unreduce(v, g)
    tred = reduced_torsions(torsion_from_poly(poly), p)
    return 2 * tred[0] + _d_of(p, qs, spin_c_Q(h, p, 0)) - d_lens_p1(p, 0)


def _d_of(p: int, q: int, i: int) -> Fraction:
    if q == 1:
        return d_lens_p1(p, i)
    return d_vector(p, q)[i]


def bounds_check(g: int, d: int, p: int) -> bool:
    """2g - 1 <= p and p < 4g(g+1)/(g+2d), as exact rational comparisons.

    Requires g >= 1 and g + 2d > 0; a violation of the latter is reported
    separately by the pipeline.
    """
    if g < 1:
        raise ValueError("bounds apply to nontrivial knots (g >= 1)")
    if g + 2 * d <= 0:
        raise ValueError("g + 2d must be positive")
    return 2 * g - 1 <= p and p < Fraction(4 * g * (g + 1), g + 2 * d)


def certify(p: int, q: int, h: int, require_even_d: bool = True):
    """Run the full obstruction pipeline; Certificate or first-stage Rejection."""
    if p < 2:
        raise ValueError("slope p must be at least 2")
    q = q % p
    h = h % p
    if gcd(p, q) != 1 or gcd(p, h) != 1:
        return Rejection(p, q, h, "coprimality", f"gcd with {p} is not 1")
    if not is_square_mod(q, p):
        return Rejection(p, q, h, "square-test", f"{q} is not a square mod {p}")
    if not _compatible(p, q, h):
        return Rejection(
            p, q, h, "square-test",
            f"[h^2]_p = {square_rep(p, h)} names neither {q} nor its inverse",
        )
    # Work with the canonical class representative so that all four
    # equivalent h inputs produce an identical certificate.
    return _certify_class(p, canonical_h(p, h), q_input=q,
                          require_even_d=require_even_d)


def _certify_class(p, h, q_input=None, require_even_d=True, q_override=None):
    """Pipeline body; q_override forces a reduction parameter (tests only)."""
    qs = square_rep(p, h) if q_override is None else q_override
    q_canon = canonical_q(p, qs if q_input is None else q_input)
    h_canon = canonical_h(p, h)

    v = reduced_coeffs(p, qs, h)
    if v[0] not in (-1, 1) or not v.is_symmetric():
        return Rejection(p, q_canon, h_canon, "os-form",
                         "reduced coefficients cannot reduce an alternating polynomial")
    g = genus_from_reduced(v)
    try:
        poly = unreduce(v, g)
    except UnreduceError as err:
        return Rejection(p, q_canon, h_canon, "os-form", str(err))
    os_form = os_form_check(poly)
    if os_form is None:
        return Rejection(p, q_canon, h_canon, "os-form", "not an alternating polynomial")

    torsions = torsion_from_poly(poly)
    if any(t < 0 for t in torsions):
        return Rejection(p, q_canon, h_canon, "negative-torsion",
                         f"t = {torsions}")

    tred = reduced_torsions(torsions, p)
    d0 = d_lens_p1(p, 0)
    dq = [_d_of(p, qs, spin_c_Q(h, p, i)) for i in range(p)]
    d_frac = 2 * tred[0] + dq[0] - d0
    if d_frac.denominator != 1:
        return Rejection(p, q_canon, h_canon, "non-integral-d",
                         f"derived d = {d_frac}", derived_d=d_frac)
    d = int(d_frac)
    if require_even_d and d % 2 != 0:
        return Rejection(p, q_canon, h_canon, "odd-d",
                         f"derived d = {d}", derived_d=d)

    for i in range(p):
        if d - dq[i] + d_lens_p1(p, i) != 2 * tred[i]:
            return Rejection(p, q_canon, h_canon, "correction-mismatch",
                             f"surgery formula fails at i = {i}", derived_d=d)

    if g >= 1:
        if g + 2 * d <= 0:
            return Rejection(p, q_canon, h_canon, "bound-violation",
                             f"g + 2d = {g + 2 * d} <= 0", derived_d=d)
        if not bounds_check(g, d, p):
            return Rejection(p, q_canon, h_canon, "bound-violation",
                             f"(g, d, p) = ({g}, {d}, {p})", derived_d=d)

    lam_pq = lambda_rustamov(p, qs)
    lam_p1 = lambda_rustamov(p, 1)
    euler_ok = p * (Fraction(d) + 2 * lam_pq - 2 * lam_p1) == dd1(poly)
    if not euler_ok:
        # implied by the per-i surgery formula; kept as an independent guard
        return Rejection(p, q_canon, h_canon, "correction-mismatch",
                         "Euler identity fails", derived_d=d)

    checks = (
        ("square-test", True),
        ("os-form", True),
        ("torsion-positivity", True),
        ("d-integral", True),
        ("d-even", d % 2 == 0),
        ("correction-all-i", True),
        ("bounds", True),
        ("euler", True),
    )
    datum = SurgeryDatum(p=p, q=q_canon, h=h_canon, d=d, g=g)
    return Certificate(
        datum=datum,
        q_square=qs,
        reduced=v,
        poly=poly,
        torsions=torsions,
        lambda_pq=lam_pq,
        lambda_p1=lam_p1,
        checks=checks,
    )


def lift_to_d2(cert: Certificate) -> Certificate:
    """Partner certificate with d raised by 2 via the degree-shift relation.

    Valid when p is odd and the shifted polynomial (genus (p+1)/2, so
    2g - 1 = p exactly) still has alternating form; every surgery-formula
    equation continues to hold because all reduced torsions grow by 1.
    """
    p = cert.p
    if p % 2 == 0:
        raise ValueError("degree-shift lift needs odd p")
    poly = alex.delta_lift(cert.poly, p)
    if os_form_check(poly) is None:
        raise ValueError("lifted polynomial is not alternating")
    g = (p + 1) // 2
    torsions = torsion_from_poly(poly)
    if any(t < 0 for t in torsions):
        raise ValueError("lifted torsions go negative")
    tred = reduced_torsions(torsions, p)
    d = cert.d + 2
    h = cert.datum.h
    qs = cert.q_square
    for i in range(p):
        lhs = d - _d_of(p, qs, spin_c_Q(h, p, i)) + d_lens_p1(p, i)
        if lhs != 2 * tred[i]:
            raise ValueError(f"lifted surgery formula fails at i = {i}")
    euler_ok = p * (Fraction(d) + 2 * cert.lambda_pq - 2 * cert.lambda_p1) == dd1(poly)
    if not euler_ok:
        raise ValueError("lifted Euler identity fails")
    if not bounds_check(g, d, p):
        raise ValueError("lifted datum violates the genus-slope bounds")
    checks = tuple((name, ok) for name, ok in cert.checks if name != "bounds")
    checks += (("bounds", True), ("lifted-by-degree-shift", True))
    datum = SurgeryDatum(p=p, q=cert.datum.q, h=h, d=d, g=g)
    return Certificate(
        datum=datum,
        q_square=qs,
        reduced=cert.reduced,
        poly=poly,
        torsions=torsions,
        lambda_pq=cert.lambda_pq,
        lambda_p1=cert.lambda_p1,
        checks=checks,
        boundary_genus=True,
    )


def certificate_to_json(cert: Certificate) -> dict:
    """Stable dict form: ints, lists and num/den pairs only."""
    return {
        "p": cert.p,
        "q": cert.datum.q,
        "h": cert.datum.h,
        "d": cert.d,
        "g": cert.g,
        "q_square": cert.q_square,
        "coefficients": list(cert.poly.coeffs),
        "reduced": list(cert.reduced.entries),
        "torsions": list(cert.torsions),
        "lambda_pq": [cert.lambda_pq.numerator, cert.lambda_pq.denominator],
        "lambda_p1": [cert.lambda_p1.numerator, cert.lambda_p1.denominator],
        "checks": [{"name": name, "pass": bool(ok)} for name, ok in cert.checks],
        "boundary_genus": cert.boundary_genus,
    }


def certificate_from_json(doc: dict) -> Certificate:
    datum = SurgeryDatum(p=doc["p"], q=doc["q"], h=doc["h"], d=doc["d"], g=doc["g"])
    return Certificate(
        datum=datum,
        q_square=doc["q_square"],
        reduced=ReducedVector(doc["p"], tuple(doc["reduced"])),
        poly=SymmetricPoly(tuple(doc["coefficients"])),
        torsions=tuple(doc["torsions"]),
        lambda_pq=Fraction(*doc["lambda_pq"]),
        lambda_p1=Fraction(*doc["lambda_p1"]),
        checks=tuple((c["name"], c["pass"]) for c in doc["checks"]),
        boundary_genus=doc["boundary_genus"],
    )
