"""Enumeration engine over slopes p: tables, families, nonexistence search.

For each slope p the candidate space is the set of dual-class orbits
H = {+-h^{+-1}} with a nontrivial minimal representative; the lens
parameter is forced to the square q = [h^2]_p (exhaustive mode accounts
for the remaining coprime (q, h) pairs in bulk, since any pair whose q is
not the square class of h is rejected by the quadratic-residue stage).

A candidate first passes a coverage-depth screen (integer-exact, numpy):
the reduced coefficients -m + Phi^k can only support an alternating
polynomial if every value lies in [-1, 2].  Survivors go through the full
exact certification pipeline.  The screen is validated against the plain
pipeline on small slopes in the test suite.
"""

from collections import Counter
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .arith import mod_inverse
from .certify import Certificate, Rejection, _certify_class, canonical_h, canonical_q

__all__ = [
    "SearchReport",
    "FamilySpec",
    "FamilyInstance",
    "FAMILY_SPECS",
    "SPORADIC_FAMILY",
    "h_class_set",
    "enumerate_search",
    "families",
    "conjecture_check",
    "plotdata",
    "report_csv",
    "plotdata_csv",
    "report_json",
]


def h_class_set(p: int, h: int) -> set:
    """{[h], [-h], [h^{-1}], [-h^{-1}]} as integers in {1, ..., p-1}."""
    if gcd(h, p) != 1:
        raise ValueError(f"gcd({h}, {p}) != 1")
    h = h % p
    hp = mod_inverse(h, p)
    return {h, p - h, hp, p - hp}


@dataclass
class SearchReport:
    p_min: int
    p_max: int
    mode: str
    certificates: list = field(default_factory=list)
    rejections: Counter = field(default_factory=Counter)
    d_histogram: Counter = field(default_factory=Counter)
    trivial_pairs: int = 0

    def certs_with_d(self, d):
        return [c for c in self.certificates if c.d == d]


def _class_reps(p):
    """Minimal representatives of nontrivial dual-class orbits, with weights.

    Yields (h_min, inverse_of_hmin, orbit_size, q_multiplicity); h_min runs
    over class minima in [2, p/2].
    """
    for h in range(2, p // 2 + 1):
        if gcd(h, p) != 1:
            continue
        hp = pow(h, -1, p)
        if min(hp, p - hp) < h:
            continue  # not the orbit minimum
        orbit = len({h, p - h, hp, p - hp})
        qmult = 1 if (h * h) % p == (hp * hp) % p else 2
        yield h, hp, orbit, qmult


def _screen(p, h, hp):
    """Necessary condition: all reduced coefficients lie in [-1, 2].

    Works with the orbit member whose inverse is smallest (the reduced
    coefficient vector is an orbit invariant), building the coverage depth
    of h' circular windows of length h with integer numpy ops.
    """
    # swap to the representative with the cheaper window count
    if hp > h:
        h, hp = hp, h
    q = (h * h) % p
    m = (h * hp - 1) // p
    starts = (q * np.arange(1, hp + 1, dtype=np.int64)) % p
    lo = (starts - h) % p
    diff = np.bincount(lo, minlength=p) - np.bincount(starts, minlength=p)
    depth = np.cumsum(diff)
    depth += int(np.count_nonzero(lo > starts))  # windows wrapping past 0
    return m - 1 <= int(depth.min()) and int(depth.max()) <= m + 2


def _search_one_p(p, mode):
    """Process all candidates at a single slope; returns partial report data."""
    certs = []
    rejections = Counter()
    d_hist = Counter()
    trivial = 0
    compat_pairs = 0

    for h, hp, orbit, qmult in _class_reps(p):
        weight = orbit * qmult if mode == "exhaustive" else 1
        compat_pairs += orbit * qmult
        if not _screen(p, h, hp):
            rejections["os-form"] += weight
            continue
        result = _certify_class(p, h, require_even_d=False)
        if isinstance(result, Certificate):
            certs.append(result)
            d_hist[result.d] += 1
        else:
            rejections[result.stage] += weight
            if result.derived_d is not None and result.stage == "bound-violation":
                d_hist[result.derived_d] += 1

    if mode == "exhaustive":
        units = [x for x in range(1, p) if gcd(x, p) == 1]
        squares = {x * x % p for x in units}
        nu = len(units)
        # q not a quadratic residue: rejected for every h
        rejections["square-test"] += (nu - len(squares)) * nu
        # q a residue but not the square class of h
        sq_pairs = len(squares) * nu
        triv_mult = 2 if p > 2 else 1  # pairs (1, 1) and (1, p-1)
        rejections["square-test"] += sq_pairs - compat_pairs - triv_mult
        trivial = triv_mult

    return certs, rejections, d_hist, trivial


def _p_range(p_min, p_max):
    return range(max(p_min, 2), p_max + 1)


def enumerate_search(p_min: int, p_max: int, mode: str = "square",
                     threads: int = 1) -> SearchReport:
    """Search all slopes in [p_min, p_max]; deterministic for any thread count."""
    if mode not in ("square", "exhaustive"):
        raise ValueError(f"unknown mode {mode!r}")
    if not 2 <= p_min <= p_max:
        raise ValueError(f"bad range [{p_min}, {p_max}]")
    report = SearchReport(p_min=p_min, p_max=p_max, mode=mode)
    results = _map_over_p(_p_range(p_min, p_max), mode, threads)
    for certs, rejections, d_hist, trivial in results:
        certs.sort(key=lambda c: (c.p, c.datum.q, c.datum.h))
        report.certificates.extend(certs)
        report.rejections.update(rejections)
        report.d_histogram.update(d_hist)
        report.trivial_pairs += trivial
    return report


def _worker(args):
    p, mode = args
    return p, _search_one_p(p, mode)


def _map_over_p(ps, mode, threads):
    ps = list(ps)
    if threads > 1 and len(ps) > 1:
        import multiprocessing as mp

        try:
            with mp.get_context("fork").Pool(threads) as pool:
                keyed = pool.map(_worker, [(p, mode) for p in ps], chunksize=32)
            keyed.sort(key=lambda kv: kv[0])
            return [kv[1] for kv in keyed]
        except (OSError, ValueError):
            pass  # e.g. sandboxed environments without fork support
    return [_search_one_p(p, mode) for p in ps]


# -- parametric families ----------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    label: str
    p_poly: tuple      # (a, b, c) -> a*l^2 + b*l + c
    h_poly: tuple      # (u, v)    -> u*l + v
    genus_rule: str    # key into _GENUS_RULES


_GENUS_RULES = {
    "p+1-|l|": lambda p, l: p + 1 - abs(l),
    "p+1-2|l|": lambda p, l: p + 1 - 2 * abs(l),
    "p+1-|2l+1|": lambda p, l: p + 1 - abs(2 * l + 1),
}

FAMILY_SPECS = (
    FamilySpec("a", (14, 7, 1), (7, 2), "p+1-|l|"),
    FamilySpec("b", (20, 15, 3), (5, 2), "p+1-|l|"),
    FamilySpec("c", (30, 9, 1), (6, 1), "p+1-|l|"),
    FamilySpec("d", (42, 23, 3), (7, 2), "p+1-|l|"),
    FamilySpec("d'", (42, 47, 13), (7, 4), "p+1-|l|"),
    FamilySpec("e", (52, 15, 1), (13, 2), "p+1-|l|"),
    FamilySpec("e'", (52, 63, 19), (13, 8), "p+1-|l|"),
    FamilySpec("f", (54, 15, 1), (27, 4), "p+1-|l|"),
    FamilySpec("f'", (54, 39, 7), (27, 10), "p+1-|l|"),
    FamilySpec("g", (69, 17, 1), (23, 3), "p+1-2|l|"),
    FamilySpec("g'", (69, 29, 3), (23, 5), "p+1-2|l|"),
    FamilySpec("h", (85, 19, 1), (17, 2), "p+1-2|l|"),
    FamilySpec("h'", (85, 49, 7), (17, 5), "p+1-2|l|"),
    FamilySpec("i", (99, 35, 3), (11, 2), "p+1-2|l|"),
    FamilySpec("i'", (99, 53, 7), (11, 3), "p+1-2|l|"),
    FamilySpec("j", (120, 16, 1), (12, 1), "p+1-2|l|"),
    FamilySpec("k", (120, 20, 1), (20, 2), "p+1-2|l|"),
    FamilySpec("l", (120, 36, 3), (12, 2), "p+1-2|l|"),
    FamilySpec("m", (120, 104, 22), (12, 5), "p+1-|2l+1|"),
)

SPORADIC_FAMILY = ("n", 191, 34, 15, 95)  # label, p, q, h, g

# families(-FULL_COVERAGE_LRANGE, FULL_COVERAGE_LRANGE) generates every
# certified row with p <= 2007; the binding constraint is the family with
# the smallest quadratic coefficient (14 l^2 + 7 l + 1 reaches 1933 at
# l = -12).
FULL_COVERAGE_LRANGE = 12


@dataclass(frozen=True)
class FamilyInstance:
    label: str
    ell: object          # int, or None for the sporadic entry
    p: int
    result: object       # Certificate or Rejection
    genus_ok: bool

    @property
    def ok(self):
        return isinstance(self.result, Certificate) and self.genus_ok


def families(l_min: int, l_max: int) -> list:
    """Instantiate every family at every nonzero l in [l_min, l_max].

    Each instance is canonicalized and certified; the certified genus is
    compared against the family's genus rule.  The sporadic entry is always
    included.  Output is sorted by (p, q, h, label).
    """
    out = []
    for spec in FAMILY_SPECS:
        a, b, c = spec.p_poly
        u, v = spec.h_poly
        rule = _GENUS_RULES[spec.genus_rule]
        for ell in range(l_min, l_max + 1):
            if ell == 0:
                continue
            p = a * ell * ell + b * ell + c
            if p < 2 or gcd(u * ell + v, p) != 1:
                out.append(FamilyInstance(spec.label, ell, p,
                                          Rejection(p, 0, (u * ell + v) % p,
                                                    "coprimality"), False))
                continue
            h = canonical_h(p, u * ell + v)
            result = _certify_class(p, h)
            genus_ok = (isinstance(result, Certificate)
                        and 2 * result.g == rule(p, ell))
            out.append(FamilyInstance(spec.label, ell, p, result, genus_ok))
    label, p, q, h, g = SPORADIC_FAMILY
    result = _certify_class(p, canonical_h(p, h))
    genus_ok = (isinstance(result, Certificate)
                and result.g == g and result.datum.q == q)
    out.append(FamilyInstance(label, None, p, result, genus_ok))
    out.sort(key=lambda inst: (inst.p, _inst_q(inst), _inst_h(inst), inst.label))
    return out


def _inst_q(inst):
    r = inst.result
    return r.datum.q if isinstance(r, Certificate) else r.q


def _inst_h(inst):
    r = inst.result
    return r.datum.h if isinstance(r, Certificate) else r.h


# -- conjectured patterns ----------------------------------------------------

_CONJECTURE_QUADRATICS = (
    (1, (54, 15, 1), (27, 21, 3)),
    (2, (54, 39, 7), (27, 33, 9)),
    (3, (69, 17, 1), (46, 19, 2)),
    (4, (69, 29, 3), (46, 27, 4)),
)

_CONJECTURE_BANDS = ((5, (321, 100), (361, 100)), (6, (115, 100), (128, 100)))


def _integer_roots(a, b, c):
    """Integer solutions of a*x^2 + b*x + c = 0."""
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    roots = []
    for num in (-b + r, -b - r):
        if num % (2 * a) == 0:
            roots.append(num // (2 * a))
    return sorted(set(roots))


def conjecture_check(cert: Certificate):
    """First matching conjectured pattern (1..6) for a d = 2 certificate.

    Patterns 1-4 are explicit quadratic (p, q) families; 5 and 6 are exact
    rational bands for h0^2 / p over the class set.  Returns None when no
    pattern matches (small slopes do fall outside all six).
    """
    if cert.d != 2:
        raise ValueError("pattern check applies to d = 2 certificates")
    p, q = cert.p, cert.datum.q
    for pattern, pc, qc in _CONJECTURE_QUADRATICS:
        for ell in _integer_roots(pc[0], pc[1], pc[2] - p):
            if ell == 0:
                continue
            q_ell = (qc[0] * ell * ell + qc[1] * ell + qc[2]) % p
            if gcd(q_ell, p) == 1 and canonical_q(p, q_ell) == q:
                return pattern
    for pattern, (lo_n, lo_d), (hi_n, hi_d) in _CONJECTURE_BANDS:
        for h0 in sorted(h_class_set(p, cert.datum.h)):
            if lo_n * p <= h0 * h0 * lo_d and h0 * h0 * hi_d <= hi_n * p:
                return pattern
    return None


# -- output formats ----------------------------------------------------------

def plotdata(report: SearchReport, d: int) -> list:
    """Points (h_min, p), one per certificate with the given d, sorted by p."""
    pts = [(c.datum.h, c.p) for c in report.certificates if c.d == d]
    pts.sort(key=lambda t: (t[1], t[0]))
    return pts


def report_csv(report: SearchReport, d=None) -> str:
    """Certificate rows as `p,q,h,g` CSV (sorted, trailing newline)."""
    lines = ["p,q,h,g"]
    for c in report.certificates:
        if d is not None and c.d != d:
            continue
        lines.append(f"{c.p},{c.datum.q},{c.datum.h},{c.g}")
    return "\n".join(lines) + "\n"


def plotdata_csv(points) -> str:
    lines = ["h,p"]
    lines.extend(f"{h},{p}" for h, p in points)
    return "\n".join(lines) + "\n"


def report_json(report: SearchReport) -> dict:
    return {
        "p_min": report.p_min,
        "p_max": report.p_max,
        "mode": report.mode,
        "certificate_count": len(report.certificates),
        "rejections": {k: report.rejections[k] for k in sorted(report.rejections)},
        "d_histogram": {str(k): report.d_histogram[k]
                        for k in sorted(report.d_histogram)},
        "trivial_pairs": report.trivial_pairs,
    }
