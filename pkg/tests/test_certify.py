from fractions import Fraction
from math import gcd

import pytest

from lenssurg.alex import dd1, os_form_check, reduce_poly
from lenssurg.arith import is_square_mod
from lenssurg.certify import (
    Certificate,
    Rejection,
    _certify_class,
    bounds_check,
    canonical_h,
    canonical_q,
    certificate_from_json,
    certificate_to_json,
    certify,
    derive_d,
    lift_to_d2,
)
from lenssurg.search import h_class_set
from golden import (
    DELTA_K2,
    DELTA_K3_D2,
    DELTA_K4_D0,
    DELTA_K4_D2,
    DELTA_K5_D0,
    DELTA_K5_D2,
    DELTA_K6,
    TREFOIL,
    delta_k1,
)


def test_canonicalization():
    assert canonical_q(38, 11) == 7
    assert canonical_q(43, 144) == 15
    assert canonical_h(22, 9) == 5
    assert canonical_h(8, 5) == 3
    assert canonical_h(11, 5) == 2


@pytest.mark.parametrize("p,q,h,expected", [
    (8, 1, 3, 2),
    (22, 3, 5, 2),
    (17, 1, 1, 0),
    (7, 2, 2, 0),
])
def test_derive_d(p, q, h, expected):
    assert derive_d(p, q, h) == Fraction(expected)


def test_certify_anchor_8_1_3():
    cert = certify(8, 1, 3)
    assert isinstance(cert, Certificate)
    assert (cert.p, cert.datum.q, cert.datum.h, cert.d, cert.g) == (8, 1, 3, 2, 4)
    assert cert.poly == DELTA_K2
    assert cert.torsions == (2, 1, 1, 1)
    assert cert.q_square == 1
    assert all(ok for _, ok in cert.checks)


def test_certify_22_3_5():
    cert = certify(22, 3, 5)
    assert cert.poly == DELTA_K6
    assert (cert.d, cert.g) == (2, 11)


def test_certify_trefoil_surgery():
    cert = certify(7, 2, 2)
    assert (cert.d, cert.g) == (0, 1)
    assert cert.poly == TREFOIL


def test_certify_unknot_rows():
    for p in range(2, 101):
        cert = certify(p, 1, 1)
        assert isinstance(cert, Certificate), p
        assert (cert.d, cert.g) == (0, 0)
        assert cert.poly.coeffs == (1,)


def test_certify_rejections():
    r = certify(9, 2, 4)
    assert isinstance(r, Rejection)
    assert r.stage == "square-test"
    r = certify(12, 3, 5)
    assert r.stage == "coprimality"
    # q a residue but not the square class of h
    assert is_square_mod(1, 7)
    r = certify(7, 1, 2)
    assert r.stage == "square-test"


def test_certify_symmetry_over_class_reps():
    base = certify(22, 3, 5)
    for h in h_class_set(22, 5):
        for q in (3, 15):  # 15 = 3^{-1} mod 22
            cert = certify(22, q, h)
            assert cert.datum == base.datum, (q, h)
            assert cert.poly == base.poly
            assert cert.reduced == base.reduced
    base = certify(38, 7, 7)
    assert certify(38, 11, 7).datum == base.datum
    assert certify(38, 11, 31).datum == base.datum


def test_certificate_invariants():
    for p, q, h in [(8, 1, 3), (22, 3, 5), (38, 7, 7), (40, 9, 7), (7, 2, 2)]:
        cert = certify(p, q, h)
        ts = cert.torsions

        def t(i):
            i = abs(i)
            return ts[i] if i < len(ts) else 0

        for i in range(1, cert.g + 2):
            assert cert.poly.coeff(i) == t(i - 1) - 2 * t(i) + t(i + 1)
        assert 2 * (t(0) + 2 * sum(ts[1:])) == dd1(cert.poly)
        # q is the square of some class representative, up to inversion
        squares = {h0 * h0 % p for h0 in h_class_set(p, cert.datum.h)}
        assert any(canonical_q(p, s) == cert.datum.q for s in squares)
        assert cert.q_square == cert.datum.h ** 2 % p
        assert reduce_poly(cert.poly, p) == cert.reduced


def test_incompatible_pairs_never_certify():
    # running the raw reduction with a lens parameter that is a residue but
    # not the square class of h always fails; justifies the fast rejection
    for p in range(2, 31):
        for h in range(1, p):
            if gcd(h, p) != 1:
                continue
            compat = {h * h % p, pow(h * h % p, -1, p)}
            for q in range(1, p):
                if gcd(q, p) != 1 or q in compat:
                    continue
                if not is_square_mod(q, p):
                    continue
                result = _certify_class(p, h, q_input=q, q_override=q,
                                        require_even_d=False)
                assert isinstance(result, Rejection), (p, q, h)


def test_bounds_check():
    assert bounds_check(4, 2, 8)      # 7 <= 8 < 10
    assert bounds_check(11, 2, 22)    # 21 <= 22 < 528/15
    assert bounds_check(1, 0, 5)      # 1 <= 5 < 8
    assert not bounds_check(4, 2, 10)  # 10 = 4*4*5/8 is not strict
    with pytest.raises(ValueError):
        bounds_check(1, -1, 5)         # g + 2d <= 0
    with pytest.raises(ValueError):
        bounds_check(0, 2, 5)


def test_lift_to_d2_pairs():
    lift = lift_to_d2(certify(7, 2, 2))
    assert (lift.d, lift.g) == (2, 4)
    assert lift.poly == DELTA_K3_D2
    assert lift.boundary_genus

    assert certify(11, 3, 5).poly == DELTA_K4_D0
    assert lift_to_d2(certify(11, 3, 5)).poly == DELTA_K4_D2

    assert certify(13, 3, 4).poly == DELTA_K5_D0
    assert lift_to_d2(certify(13, 3, 4)).poly == DELTA_K5_D2

    for p in (5, 9, 11, 15):
        lifted = lift_to_d2(certify(p, 1, 1))
        assert lifted.poly == delta_k1(p)
        assert lifted.d == 2 and lifted.g == (p + 1) // 2


def test_even_d_flag_is_default():
    # no odd derived d occurs on certified data; the flag only opens the gate
    cert = certify(22, 3, 5, require_even_d=False)
    assert isinstance(cert, Certificate)
    assert cert.datum == certify(22, 3, 5).datum


def test_json_roundtrip():
    cert = certify(38, 7, 7)
    doc = certificate_to_json(cert)
    assert doc["p"] == 38 and doc["q"] == 7 and doc["q_square"] == 11
    back = certificate_from_json(doc)
    assert back == cert


def test_os_form_of_every_certificate():
    for p, q, h in [(8, 1, 3), (22, 3, 5), (38, 7, 7), (7, 2, 2)]:
        cert = certify(p, q, h)
        assert os_form_check(cert.poly) is not None
