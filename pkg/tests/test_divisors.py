import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL, sig_and_divisors, signatures
from toledo.divisors import (
    LengthMismatch,
    SignatureMismatch,
    VerticalDivisor,
    a_value,
    add,
    canonical_divisor,
    cohomology_dims,
    divisible_by_three,
    from_lattice,
    has_twisted_one_form,
    lattice_coordinate,
    negate,
    normalize,
    parse_divisor,
    scale,
    star_certificate,
    star_certificate_floorform,
    twisted_one_form_h0,
    zero,
)
from toledo.seifert import validate_signature


def D(sig, a, res):
    return VerticalDivisor(sig, a, tuple(res))


@pytest.mark.parametrize("a, raw, expect", [
    (0, [2, 0, 0], (1, [0, 0, 0])),
    (-1, [0, 0, 12], (0, [0, 0, 1])),
    (0, [-1, 0, 0], (-1, [1, 0, 0])),
])
def test_normalize_examples(sig2311, a, raw, expect):
    assert normalize(sig2311, a, raw) == D(sig2311, *expect)


def test_normalize_length(sig2311):
    with pytest.raises(LengthMismatch):
        normalize(sig2311, 0, [1, 2])


def test_group_examples(sig2311):
    s = sig2311
    # (-3; 2,3,11) carries three times: the zero class, matching tau = 0
    assert D(s, -1, [1, 1, 1]) + D(s, -2, [1, 2, 10]) == D(s, 0, [0, 0, 0])
    assert -D(s, 0, [0, 1, 0]) == D(s, -1, [0, 2, 0])
    three = scale(3, D(s, -1, [0, 2, 4]))
    # (-3; 0,6,12) -> (0; 0,0,1), value 1/11
    assert three == D(s, 0, [0, 0, 1])
    assert a_value(three) == 3 * a_value(D(s, -1, [0, 2, 4])) == Fraction(1, 11)


def test_signature_mismatch(sig2311):
    other = validate_signature([2, 3, 7])
    with pytest.raises(SignatureMismatch):
        add(zero(sig2311), zero(other))


@pytest.mark.parametrize("a, res, val", [
    (-2, [1, 2, 10], Fraction(5, 66)),
    (0, [0, 0, 0], Fraction(0)),
    (-1, [0, 1, 7], Fraction(-1, 33)),
])
def test_a_value_examples(sig2311, a, res, val):
    assert a_value(D(sig2311, a, res)) == val


@given(st.data())
def test_normalize_idempotent_and_value_preserving(data):
    sig = data.draw(signatures())
    a = data.draw(st.integers(-50, 50))
    raw = [data.draw(st.integers(-40, 40)) for _ in sig.m]
    d = normalize(sig, a, raw)
    assert all(0 <= r < mk for r, mk in zip(d.residues, sig.m))
    assert normalize(sig, d.f_coeff, d.residues) == d
    assert a_value(d) == a + sum(Fraction(r, mk) for r, mk in zip(raw, sig.m))


@given(sig_and_divisors(3))
def test_group_laws(args):
    sig, x, y, z = args
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x + zero(sig) == x
    assert x + (-x) == zero(sig)
    assert -(-x) == x
    assert a_value(x + y) == a_value(x) + a_value(y)
    assert a_value(negate(x)) == -a_value(x)
    assert scale(3, x) == x + x + x


@given(sig_and_divisors(2))
def test_value_map_injective(args):
    _, x, y = args
    assert (a_value(x) == a_value(y)) == (x == y)


@pytest.mark.parametrize("m", SMALL)
def test_value_map_injective_exhaustive(m):
    sig = validate_signature(m)
    seen = {}
    for a in range(-3, 4):
        for res in itertools.product(*(range(mk) for mk in m)):
            d = D(sig, a, res)
            v = a_value(d)
            assert v not in seen, (d, seen.get(v))
            seen[v] = d
            assert sig.M % v.denominator == 0


@given(sig_and_divisors(1))
def test_lattice_roundtrip(args):
    sig, x = args
    z = lattice_coordinate(x)
    assert from_lattice(sig, z) == x
    assert Fraction(z, sig.M) == a_value(x)


@pytest.mark.parametrize("a, h0, h1", [(2, 3, 2), (-1, 0, 0), (-3, 0, 2), (0, 1, 0)])
def test_cohomology_examples(sig2311, a, h0, h1):
    assert cohomology_dims(D(sig2311, a, [1, 2, 3])) == (h0, h1)


def test_canonical(sig2311):
    assert canonical_divisor(sig2311) == D(sig2311, -1, [1, 2, 10])
    s7 = validate_signature([2, 3, 7])
    assert canonical_divisor(s7) == D(s7, -1, [1, 2, 6])


@pytest.mark.parametrize("b, dim, exists", [(-2, 0, True), (-4, 2, True), (0, 0, False),
                                            (-1, 0, False)])
def test_twisted_one_forms(sig2311, b, dim, exists):
    d = D(sig2311, b, [0, 0, 0])
    assert twisted_one_form_h0(d) == dim
    assert has_twisted_one_form(d) is exists


def test_star_examples(sig2311):
    s = sig2311
    c = star_certificate(s, -3, [2, 3, 12])
    assert (c.y, c.y_res, c.s) == (-1, (0, 2, 4), (-1, 1, 0))
    assert c.verify(s, -3, [2, 3, 12])
    assert star_certificate(s, 0, [0, 1, 0]) is None
    c = star_certificate(s, -3, [1, 3, 17])
    assert (c.y, c.y_res, c.s) == (-1, (1, 1, 2), (1, 0, -1))
    assert star_certificate_floorform(s, -3, [2, 3, 12]) == (-1, (0, 2, 4))
    assert star_certificate_floorform(s, 0, [0, 1, 0]) is None
    assert star_certificate_floorform(s, 0, [0, 0, 0]) == (0, (0, 0, 0))


def _floor_check(sig, total, sums, cert):
    # the floor form is stated on the normalized class
    d = normalize(sig, total, sums)
    y, ys = cert
    ok = 3 * y + sum(3 * yk // mk for yk, mk in zip(ys, sig.m)) == d.f_coeff
    return ok and all(3 * yk - (3 * yk // mk) * mk == tk
                      for yk, mk, tk in zip(ys, sig.m, d.residues))


@given(st.data())
def test_star_forms_agree(data):
    sig = data.draw(signatures())
    total = data.draw(st.integers(-12, 12))
    sums = [data.draw(st.integers(-3 * mk, 3 * mk)) for mk in sig.m]
    c = star_certificate(sig, total, sums)
    f = star_certificate_floorform(sig, total, sums)
    div = divisible_by_three(sig, total, sums)
    assert (c is not None) == div == (f is not None)
    if c is not None:
        assert c.verify(sig, total, sums)
        assert _floor_check(sig, total, sums, f)
        # the certificate's (y; y_k) is a class whose triple is the input class
        third = normalize(sig, c.y, c.y_res)
        assert scale(3, third) == normalize(sig, total, sums)


def test_parse_divisor(sig2311):
    assert parse_divisor(sig2311, "-2:1,2,10") == D(sig2311, -2, [1, 2, 10])
    assert parse_divisor(sig2311, "0:2,0,0") == D(sig2311, 1, [0, 0, 0])
    for bad in ["-2", "x:1,2,3", "1:1,a,3"]:
        with pytest.raises(ValueError):
            parse_divisor(sig2311, bad)
    with pytest.raises(LengthMismatch):
        parse_divisor(sig2311, "1:1,2")
