import cmath
import math
import random

import pytest

from gfharmonic.cyclo import (CycloScalar, ScalarAccumulator,
                              cyclotomic_polynomial, embed_float, get_ring,
                              ring_order)
from gfharmonic.errors import BackendMismatch, DivisionByZero


def test_cyclotomic_polynomials_known_values():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(20) == (1, 0, -1, 0, 1, 0, -1, 0, 1)


def test_ring_order_covers_required_roots():
    assert ring_order(3, 2) == 12
    assert ring_order(3, 3) == 12
    assert ring_order(5, 2) == 20
    assert ring_order(7, 1) == 28
    # characteristic 2 needs the eighth root of unity for sqrt(2)
    assert ring_order(2, 1) % 8 == 0
    assert ring_order(2, 3) % 8 == 0


@pytest.fixture(scope="module")
def ring3():
    return get_ring(12, 3)


def test_character_sum_vanishes(ring3):
    w = ring3.omega(1)
    assert w + w * w + 1 == ring3.zero


def test_imaginary_unit_squares_to_minus_one(ring3):
    i = ring3.imag_unit()
    assert i * i == ring3.from_int(-1)


def test_norm_of_one_plus_two_omega(ring3):
    x = ring3.from_int(1) + 2 * ring3.omega(1)
    assert x * x.conj() == 3


def test_embeddings(ring3):
    w = ring3.omega(1)
    assert cmath.isclose(embed_float(w), cmath.exp(2j * cmath.pi / 3),
                         abs_tol=1e-12)
    x = ring3.from_int(1) + 2 * ring3.omega(1)
    assert cmath.isclose(embed_float(x), 1j * math.sqrt(3), abs_tol=1e-12)
    third = ring3.scalar([1, 0, 0, 0], scale_exp=2)
    assert cmath.isclose(embed_float(third), 1 / 3, abs_tol=1e-15)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_sqrt_char_squares_to_char(p):
    ring = get_ring(ring_order(p, 1), p)
    s = ring.sqrt_char()
    assert s * s == p
    assert cmath.isclose(embed_float(s), math.sqrt(p), abs_tol=1e-12)


def test_half_scale_arithmetic(ring3):
    inv_sqrt = ring3.scalar([1, 0, 0, 0], scale_exp=1)
    assert inv_sqrt * inv_sqrt == ring3.rational(1, 3)
    assert ring3.sqrt_char() * inv_sqrt == ring3.one
    # adding scalars of mixed scale parity stays exact
    mixed = ring3.one + inv_sqrt
    assert mixed - inv_sqrt == ring3.one


def test_canonical_form_is_unique(ring3):
    # all p factors live in the scale exponent, none in the denominator
    assert ring3.rational(1, 3) == ring3.scalar([1, 0, 0, 0], 2, 1)
    assert ring3.scalar([3, 0, 0, 0], 2, 1) == ring3.scalar([1, 0, 0, 0], 0, 1)
    assert ring3.scalar([2, 0, 0, 0], 0, 6) == ring3.rational(1, 3)
    assert ring3.scalar([0, 0, 0, 0], 5, 7) == ring3.zero
    assert ring3.zero.scale_exp == 0 and ring3.zero.denom == 1


def test_conjugation_is_involution_and_ring_map(ring3):
    rng = random.Random(7)
    for _ in range(50):
        a = ring3.scalar([rng.randint(-3, 3) for _ in range(4)],
                         rng.randint(0, 2), rng.randint(1, 4))
        b = ring3.scalar([rng.randint(-3, 3) for _ in range(4)],
                         rng.randint(0, 2), rng.randint(1, 4))
        assert a.conj().conj() == a
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()


def test_embedding_is_ring_homomorphism():
    # spec-level invariant: 10^3 random pairs at 1e-12
    for order, p in ((12, 3), (20, 5)):
        ring = get_ring(order, p)
        rng = random.Random(order)
        for _ in range(500):
            a = ring.scalar([rng.randint(-2, 2) for _ in range(ring.degree)],
                            rng.randint(0, 2), rng.randint(1, 3))
            b = ring.scalar([rng.randint(-2, 2) for _ in range(ring.degree)],
                            rng.randint(0, 2), rng.randint(1, 3))
            assert abs(embed_float(a * b) - embed_float(a) * embed_float(b)) < 1e-12
            assert abs(embed_float(a + b) - (embed_float(a) + embed_float(b))) < 1e-12


def test_exact_inverse(ring3):
    rng = random.Random(11)
    for _ in range(30):
        vec = [rng.randint(-3, 3) for _ in range(4)]
        if not any(vec):
            vec[0] = 1
        x = ring3.scalar(vec, rng.randint(0, 2), rng.randint(1, 3))
        assert x * x.inverse() == ring3.one
    with pytest.raises(DivisionByZero):
        ring3.zero.inverse()


def test_power_and_division(ring3):
    w = ring3.omega(1)
    assert w ** 3 == ring3.one
    assert w ** 0 == ring3.one
    x = ring3.from_int(2) + w
    assert (x ** 3) == x * x * x
    assert x / x == ring3.one
    assert w ** -1 == w.conj()


def test_sum_of_roots(ring3):
    # omega + omega^2 + 1 over exponent list
    step = 12 // 3
    val = ring3.sum_of_roots([0, step, 2 * step])
    assert val == ring3.zero
    val = ring3.sum_of_roots([0, 0, step], scale_exp=2)
    assert val == (ring3.from_int(2) + ring3.omega(1)) * ring3.rational(1, 3)


def test_accumulator_matches_naive_sum(ring3):
    rng = random.Random(13)
    xs = [ring3.scalar([rng.randint(-2, 2) for _ in range(4)],
                       rng.randint(0, 3), rng.randint(1, 4)) for _ in range(25)]
    acc = ScalarAccumulator(ring3)
    total = ring3.zero
    for x in xs:
        acc.add(x)
        total = total + x
    assert acc.value() == total


def test_rings_do_not_mix():
    a = get_ring(12, 3).one
    b = get_ring(20, 5).one
    with pytest.raises(BackendMismatch):
        a + b


def test_scalar_hash_consistency(ring3):
    a = ring3.rational(1, 3)
    b = ring3.scalar([1, 0, 0, 0], 2, 1)
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
