"""Finite-field construction, arithmetic, and reduction-homomorphism tests."""

from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starcox.field import FieldElem, build_field
from starcox.ring import (
    EvenPrimeError,
    GoldenInt,
    PrimeClass,
    classify_prime,
    golden_legendre,
    primes_up_to_norm,
)

ints = st.integers(min_value=-10**4, max_value=10**4)
golden = st.builds(GoldenInt, ints, ints)

PRIMES_50 = primes_up_to_norm(50)


def ctx_of(a, b):
    return build_field(classify_prime(GoldenInt(a, b)))


def test_build_field_examples():
    f5 = ctx_of(-1, 2)
    assert (f5.char, f5.degree, f5.q, f5.tau_code) == (5, 1, 5, 3)
    f4 = ctx_of(2, 0)
    assert (f4.char, f4.degree, f4.q) == (2, 2, 4)
    f11 = ctx_of(3, 1)
    assert (f11.char, f11.degree, f11.q, f11.tau_code) == (11, 1, 11, 8)
    assert (8 * 8 - 8 - 1) % 11 == 0
    f9 = ctx_of(3, 0)
    assert (f9.char, f9.degree, f9.q) == (3, 2, 9)


def test_tau_image_satisfies_defining_relation():
    for p in primes_up_to_norm(60):
        ctx = build_field(p)
        t = ctx.tau_code
        assert ctx.sub(ctx.mul(t, t), ctx.add(t, ctx.one)) == 0
        assert ctx.reduce(GoldenInt(0, 1)) == t
        assert ctx.reduce(p.value) == 0


def test_reduce_examples():
    f5 = ctx_of(-1, 2)
    assert f5.reduce(GoldenInt(0, 0)) == 0
    assert f5.reduce(GoldenInt(-1, 2)) == 0
    for ab in ((1, 1), (7, -3), (0, 1)):
        z = GoldenInt(*ab)
        assert f5.reduce(z * z) == f5.mul(f5.reduce(z), f5.reduce(z))


@given(golden, golden)
def test_reduce_is_homomorphism(z, w):
    for p in PRIMES_50:
        ctx = build_field(p)
        assert ctx.reduce(z + w) == ctx.add(ctx.reduce(z), ctx.reduce(w))
        assert ctx.reduce(z * w) == ctx.mul(ctx.reduce(z), ctx.reduce(w))


def test_field_axioms_and_inverse():
    for p in primes_up_to_norm(60):
        ctx = build_field(p)
        rng = random.Random(p.q)
        codes = [rng.randrange(ctx.q) for _ in range(40)]
        for u in codes:
            assert ctx.add(u, ctx.neg(u)) == 0
            assert ctx.mul(u, ctx.one) == u
            if u:
                assert ctx.mul(u, ctx.inv(u)) == ctx.one
                assert ctx.pow_(u, ctx.q - 1) == ctx.one
        with pytest.raises(ZeroDivisionError):
            ctx.inv(0)


def test_inv_tau_image():
    for p in primes_up_to_norm(60):
        ctx = build_field(p)
        assert ctx.inv(ctx.tau_code) == ctx.sub(ctx.tau_code, ctx.one)


def test_is_square_examples():
    for p in primes_up_to_norm(60):
        ctx = build_field(p)
        if ctx.q % 2 == 0:
            with pytest.raises(EvenPrimeError):
                ctx.is_square(1)
            continue
        assert ctx.is_square(ctx.reduce(GoldenInt(4, 0)))
        with pytest.raises(ValueError):
            ctx.is_square(0)
    f5 = ctx_of(-1, 2)
    assert not f5.is_square(f5.reduce(GoldenInt(3, 0)))


def test_is_square_matches_golden_legendre():
    rng = random.Random(7)
    for p in PRIMES_50:
        if p.klass is PrimeClass.EVEN:
            continue
        ctx = build_field(p)
        for _ in range(120):
            w = GoldenInt(rng.randrange(-300, 300), rng.randrange(-300, 300))
            code = ctx.reduce(w)
            sym = golden_legendre(w, p)
            if code == 0:
                assert sym == 0
            else:
                assert ctx.is_square(code) == (sym == 1)


def test_field_elem_wrapper():
    ctx = ctx_of(3, 0)
    t = FieldElem(ctx, ctx.tau_code)
    one = FieldElem(ctx, ctx.one)
    assert t * t == t + one
    assert (t / t) == one
    assert (-t) + t == FieldElem(ctx, 0)
    assert t**8 == one
    assert (t.x, t.y) == (0, 1)
