from math import gcd
from random import Random

import pytest

from lenssurg.alex import (
    ReducedVector,
    SymmetricPoly,
    UnreduceError,
    dd1,
    delta_lift,
    delta_relation_check,
    genus_from_reduced,
    os_form_check,
    phi,
    reduce_poly,
    reduced_coeffs,
    torsion_from_poly,
    unreduce,
)
from golden import DELTA_K2, DELTA_K6, TREFOIL, delta_k1

ONE = SymmetricPoly((1,))


@pytest.mark.parametrize("p,q,h,k,expected", [
    (8, 1, 3, 4, 0),
    (8, 1, 3, 7, 2),
    (8, 1, 3, 0, 3),
])
def test_phi_examples(p, q, h, k, expected):
    assert phi(p, q, h, k) == expected


def test_phi_total_mass():
    # summing over all residues k, each j contributes h hits
    for p, q, h in [(8, 1, 3), (22, 3, 5), (13, 9, 3), (11, 4, 2)]:
        hp = pow(h, -1, p)
        assert sum(phi(p, q, h, k) for k in range(p)) == h * hp


def test_reduced_coeffs_anchor():
    assert reduced_coeffs(8, 1, 3).entries == (-1, 1, 0, -1, 2, -1, 0, 1)


def test_reduced_coeffs_unknot():
    for p in (2, 3, 8, 23):
        assert reduced_coeffs(p, 1, 1).entries == (1,) + (0,) * (p - 1)


def test_reduced_coeffs_is_reduction_of_golden_polynomials():
    assert reduced_coeffs(22, 3, 5) == reduce_poly(DELTA_K6, 22)
    assert reduced_coeffs(8, 1, 3) == reduce_poly(DELTA_K2, 8)


def test_reduced_coeffs_matches_direct_count():
    # the sweep implementation against the definitional per-residue count
    for p in range(2, 36):
        for h in range(1, p):
            if gcd(h, p) != 1:
                continue
            q = h * h % p
            v = reduced_coeffs(p, q, h)
            hp = pow(h, -1, p)
            m = (h * hp - 1) // p
            c = ((h + 1 + p) * (h - 1) // 2) % p
            direct = tuple(-m + phi(p, q, h, (h * i + c) % p) for i in range(p))
            assert v.entries == direct, (p, q, h)


def test_reduced_coeffs_sum_is_one_for_any_coprime_triple():
    for p in range(2, 30):
        for q in range(1, p):
            if gcd(q, p) != 1:
                continue
            for h in range(1, p):
                if gcd(h, p) != 1:
                    continue
                assert reduced_coeffs(p, q, h).total() == 1


def test_reduced_coeffs_symmetric_on_square_compatible_data():
    for p in range(2, 60):
        for h in range(1, p):
            if gcd(h, p) != 1:
                continue
            assert reduced_coeffs(p, h * h % p, h).is_symmetric(), (p, h)


def test_reduced_coeffs_orbit_invariance():
    # all four class representatives produce the same reduced vector
    for p, h in [(22, 5), (38, 7), (13, 4), (31, 12)]:
        base = reduced_coeffs(p, h * h % p, h)
        for r in (p - h, pow(h, -1, p), p - pow(h, -1, p)):
            assert reduced_coeffs(p, r * r % p, r) == base, (p, h, r)


def test_os_form_check():
    assert os_form_check(DELTA_K2) == (3, (1, 3, 4))
    assert os_form_check(ONE) == (0, ())
    assert os_form_check(SymmetricPoly((1, 1))) is None      # t^-1 + 1 + t
    assert os_form_check(SymmetricPoly((0, 1))) is None      # no constant term
    assert os_form_check(DELTA_K6) == (5, (2, 5, 6, 10, 11))


def test_genus_from_reduced():
    assert genus_from_reduced(reduced_coeffs(8, 1, 3)) == 4
    assert genus_from_reduced(reduced_coeffs(22, 3, 5)) == 11
    assert genus_from_reduced(reduced_coeffs(17, 1, 1)) == 0


def test_unreduce_golden():
    assert unreduce(reduced_coeffs(8, 1, 3), 4) == DELTA_K2
    assert unreduce(reduced_coeffs(22, 3, 5), 11) == DELTA_K6
    assert unreduce(ReducedVector(9, (1,) + (0,) * 8), 0) == ONE


def test_unreduce_top_collision():
    # 2g = p + 1: the K_{1,p} shape reduces to the unknot vector
    for p in (5, 9, 11, 15):
        v = ReducedVector(p, (1,) + (0,) * (p - 1))
        g = (p + 1) // 2
        assert unreduce(v, g) == delta_k1(p)


def test_unreduce_failures():
    v = ReducedVector(6, (1, 1, 0, -1, 0, 0))  # not symmetric
    with pytest.raises(UnreduceError):
        unreduce(v, 2)
    with pytest.raises(UnreduceError):
        unreduce(reduced_coeffs(8, 1, 3), 10)  # genus too large for modulus
    # middle entry odd when 2g = p
    v = ReducedVector(4, (1, 1, 1, 1))
    with pytest.raises(UnreduceError):
        unreduce(v, 2)


def test_unreduce_roundtrip():
    for p, q, h in [(8, 1, 3), (22, 3, 5), (38, 11, 7), (7, 4, 2)]:
        v = reduced_coeffs(p, q, h)
        g = genus_from_reduced(v)
        assert reduce_poly(unreduce(v, g), p) == v


def test_torsions():
    assert torsion_from_poly(DELTA_K2) == (2, 1, 1, 1)
    assert torsion_from_poly(ONE) == ()
    assert torsion_from_poly(TREFOIL) == (1,)


def _random_os_poly(rng):
    k = rng.randint(0, 6)
    ns = sorted(rng.sample(range(1, 20), k))
    coeffs = [0] * ((ns[-1] if ns else 0) + 1)
    coeffs[0] = (-1) ** k
    for j, n in enumerate(ns, start=1):
        coeffs[n] = (-1) ** (k - j)
    return SymmetricPoly(tuple(coeffs))


def test_torsion_second_difference_duality():
    # a_i = t_{i-1} - 2 t_i + t_{i+1} for i >= 1 (the symmetric-extension
    # convention forced by the surgery formula), and 2 * sum_Z t_i = dd1
    rng = Random(20240)
    for _ in range(200):
        poly = _random_os_poly(rng)
        assert os_form_check(poly) is not None
        assert poly.eval_at_one() == 1
        ts = torsion_from_poly(poly)

        def t(i):
            i = abs(i)
            return ts[i] if i < len(ts) else 0

        for i in range(1, poly.degree() + 2):
            assert poly.coeff(i) == t(i - 1) - 2 * t(i) + t(i + 1)
        total = t(0) + 2 * sum(ts[1:])
        assert 2 * total == dd1(poly)


def test_dd1_examples():
    assert dd1(DELTA_K2) == 16
    assert dd1(ONE) == 0
    assert dd1(TREFOIL) == 2


def test_delta_relation():
    for p in (5, 9, 11, 15):
        assert delta_relation_check(ONE, delta_k1(p), p)
    assert not delta_relation_check(DELTA_K2, DELTA_K2, 9)
    # the L(7,2) pair: trefoil vs the genus-4 polynomial
    assert delta_relation_check(TREFOIL, DELTA_K2, 7)
    assert delta_lift(TREFOIL, 7) == DELTA_K2
    with pytest.raises(ValueError):
        delta_relation_check(ONE, delta_k1(5), 4)
