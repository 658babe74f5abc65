import random
from fractions import Fraction

import pytest

from braidrep.laurent import LaurentRing, ParseError, rational_str

R5 = LaurentRing.for_strands(5)


def random_poly(ring, rng, max_terms=4, max_exp=3, max_coeff=9):
    p = ring.zero()
    for _ in range(rng.randint(0, max_terms)):
        vec = tuple(rng.randint(-max_exp, max_exp) for _ in range(ring.nvars))
        p = p + ring.monomial(rng.randint(-max_coeff, max_coeff), vec)
    return p


def test_additive_inverse():
    t1 = R5.var("t1")
    assert (t1 + (-t1)).is_zero()


def test_addition_cancels_across_terms():
    one = R5.one()
    t1 = R5.var("t1")
    assert (t1 + one) + (one - t1) == R5.constant(2)


def test_like_terms_merge():
    m = R5.var("t1") * R5.var("s2", -1)
    assert m + m == 2 * m
    assert str(m + m) == "2*t1*s2^-1"


def test_unit_inverse_multiplication():
    t1 = R5.var("t1")
    assert (t1 * R5.var("t1", -1)).is_one()


def test_product_expansion_by_hand():
    # (1 - t1)(1 - t1^-1) expands to 2 - t1 - t1^-1
    one = R5.one()
    t1 = R5.var("t1")
    lhs = (one - t1) * (one - R5.var("t1", -1))
    expected = R5.constant(2) - t1 - R5.var("t1", -1)
    assert lhs == expected


def test_zero_absorbs():
    rng = random.Random(7)
    for _ in range(20):
        p = random_poly(R5, rng)
        assert (R5.zero() * p).is_zero()


def test_eval_single_variable():
    assign = {name: 1 for name in R5.names}
    assign["t1"] = -1
    assert R5.var("t1").eval(assign) == -1


def test_eval_direct_substitution():
    assign = {name: 1 for name in R5.names}
    assign["t1"] = -1
    assert (R5.one() - R5.var("t1")).eval(assign) == 2


def test_eval_negative_exponent():
    assign = {name: 1 for name in R5.names}
    assign["t3"] = 2
    assert R5.var("t3", -1).eval(assign) == Fraction(1, 2)


def test_eval_rejects_zero_assignment():
    assign = {name: 1 for name in R5.names}
    assign["s4"] = 0
    with pytest.raises(ValueError, match="zero"):
        R5.var("t1").eval(assign)


def test_eval_rejects_missing_assignment():
    assign = {name: 1 for name in R5.names}
    del assign["s5"]
    with pytest.raises(ValueError, match="missing"):
        R5.var("t1").eval(assign)


def test_parse_two_term_polynomial():
    p = R5.parse("t1*s2^-1 + 2")
    assert len(p.terms) == 2
    assert p == R5.var("t1") * R5.var("s2", -1) + 2


def test_parse_zero():
    assert R5.parse("0").is_zero()


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        R5.parse("t1 +")
    with pytest.raises(ParseError, match="out of range"):
        R5.parse("t9")
    with pytest.raises(ParseError, match="unknown variable"):
        R5.parse("u1")
    with pytest.raises(ParseError):
        R5.parse("2 t1")
    err = None
    try:
        R5.parse("t1*s2^x")
    except ParseError as exc:
        err = exc
    assert err is not None and err.position >= 0


def test_parse_format_round_trip_randomised():
    rng = random.Random(2024)
    for _ in range(200):
        p = random_poly(R5, rng)
        assert R5.parse(str(p)) == p


def test_canonical_form_is_deterministic():
    # same polynomial assembled in two different orders
    a = R5.var("t1") + R5.constant(3) + R5.var("s5", -2)
    b = R5.var("s5", -2) + R5.var("t1") + R5.constant(3)
    assert str(a) == str(b)
    assert str(a) == "t1 + 3 + s5^-2"


def test_negative_coefficient_folding():
    p = R5.constant(-2) - R5.var("t1")
    assert str(p) == "-t1 + -2"
    assert R5.parse(str(p)) == p


def test_ring_axioms_randomised():
    rng = random.Random(99)
    for _ in range(60):
        a = random_poly(R5, rng)
        b = random_poly(R5, rng)
        c = random_poly(R5, rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + R5.zero() == a
        assert a * R5.one() == a


def test_eval_is_a_ring_homomorphism():
    rng = random.Random(5)
    for _ in range(40):
        a = random_poly(R5, rng)
        b = random_poly(R5, rng)
        assign = {
            name: Fraction(rng.randint(1, 6), rng.randint(1, 6)) * rng.choice([1, -1])
            for name in R5.names
        }
        assert (a + b).eval(assign) == a.eval(assign) + b.eval(assign)
        assert (a * b).eval(assign) == a.eval(assign) * b.eval(assign)


def test_ring_mismatch_is_an_error():
    other = LaurentRing.for_strands(4)
    with pytest.raises(ValueError, match="different rings"):
        R5.var("t1") + other.var("t1")
    with pytest.raises(ValueError, match="different rings"):
        R5.var("t1") * other.var("t1")


def test_monomial_inverse():
    m = R5.var("t2") * R5.var("s1", -3)
    assert (m * m.monomial_inverse()).is_one()
    neg = -m
    assert (neg * neg.monomial_inverse()).is_one()
    with pytest.raises(ValueError):
        (R5.one() + R5.var("t1")).monomial_inverse()
    with pytest.raises(ValueError):
        (2 * m).monomial_inverse()


def test_burau_ring_is_single_variable():
    ring = LaurentRing.burau()
    t = ring.var("t")
    assert str(t.monomial_inverse()) == "t^-1"
    assert ring.parse("t^-1 + 1") == t.monomial_inverse() + 1


def test_power_operator():
    t1 = R5.var("t1")
    assert t1 ** 0 == R5.one()
    assert t1 ** 3 == t1 * t1 * t1
    with pytest.raises(ValueError):
        t1 ** -1


def test_rational_str():
    assert rational_str(Fraction(-399)) == "-399"
    assert rational_str(Fraction(1, 2)) == "1/2"
