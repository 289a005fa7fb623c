"""Places of Q: valuations, log-magnitudes, and the desk-scale product formula."""

import math
import random
from fractions import Fraction

import pytest

from cantordiv import Place, factor_trial, is_prime, log_abs, rational_support, val_p
from cantordiv.places import _log_int

ARCH = Place.archimedean()


def test_is_prime_spot_checks():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(561)  # Carmichael
    assert not is_prime(1)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)


def test_val_p():
    assert val_p(256, 2) == 8
    assert val_p(Fraction(1, 9), 3) == -2
    assert val_p(Fraction(-12, 5), 2) == 2
    with pytest.raises(ValueError):
        val_p(0, 2)


def test_log_abs_anchors():
    assert abs(log_abs(256, ARCH) - 8 * math.log(2)) < 1e-12
    assert log_abs(256, Place.p_adic(2)) == -8 * math.log(2)
    assert log_abs(1, ARCH) == 0.0
    assert log_abs(1, Place.p_adic(7)) == 0.0
    assert log_abs(Fraction(-3, 4), ARCH) == pytest.approx(math.log(0.75), rel=1e-12)
    with pytest.raises(ValueError):
        log_abs(0, ARCH)


def test_log_int_bitlength_method_vs_math_log():
    # math.log accepts big ints exactly; it is the oracle for the
    # bit-length-plus-mantissa method used internally.
    rng = random.Random(31)
    samples = [3**500, 7**123 + 1, 2**5000 - 1]
    samples += [rng.getrandbits(rng.randint(65, 4000)) | 1 for _ in range(20)]
    for n in samples:
        assert abs(_log_int(n) - math.log(n)) <= 1e-12 * math.log(n)


def test_log_abs_multiplicative_archimedean():
    rng = random.Random(32)
    for _ in range(50):
        q = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6)) * rng.choice((1, -1))
        r = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6))
        lhs = log_abs(q * r, ARCH)
        rhs = log_abs(q, ARCH) + log_abs(r, ARCH)
        assert abs(lhs - rhs) < 1e-10


def test_log_abs_multiplicative_p_adic_exact():
    # exactness is carried by the integer valuations; the float sum can be
    # off by an ulp from distributivity, so it gets a 1e-12 allowance
    place = Place.p_adic(3)
    pairs = [
        (Fraction(9, 2), Fraction(5, 27)),
        (Fraction(-81), Fraction(1, 3)),
        (Fraction(7, 4), Fraction(2, 7)),
    ]
    for q, r in pairs:
        assert val_p(q * r, 3) == val_p(q, 3) + val_p(r, 3)
        assert abs(log_abs(q * r, place) - (log_abs(q, place) + log_abs(r, place))) < 1e-12


def test_product_formula_desk_scale():
    rng = random.Random(33)
    primes = (2, 3, 5, 7, 11, 13)
    for _ in range(30):
        q = Fraction(rng.choice((1, -1)))
        for p in primes:
            q *= Fraction(p) ** rng.randint(-6, 6)
        total = log_abs(q, ARCH)
        for p in rational_support(q):
            total += log_abs(q, Place.p_adic(p))
        assert abs(total) < 1e-10


def test_place_validation_and_parse():
    with pytest.raises(ValueError):
        Place.p_adic(4)
    with pytest.raises(ValueError):
        Place("padic", 1)
    with pytest.raises(ValueError):
        Place("weird")
    with pytest.raises(ValueError):
        Place("arch", 5)
    assert Place.parse("arch") == ARCH
    assert Place.parse("p:11") == Place.p_adic(11)
    assert str(Place.p_adic(11)) == "p:11"
    with pytest.raises(ValueError):
        Place.parse("q:11")


def test_factor_trial():
    assert factor_trial(2**10 * 3**5 * 97) == {2: 10, 3: 5, 97: 1}
    assert factor_trial(1) == {}
    # large prime cofactor is fine; a composite one beyond the bound is not
    assert factor_trial(2 * (2**89 - 1)) == {2: 1, 2**89 - 1: 1}
    with pytest.raises(ValueError):
        factor_trial(10000019 * 10000079, bound=1000)


def test_rational_support():
    assert rational_support(Fraction(40, 9)) == [2, 3, 5]
    assert rational_support(Fraction(-1)) == []
