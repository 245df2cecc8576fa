"""Matrix-group engine tests: arithmetic kernels, BFS enumeration, BSGS chains."""

from __future__ import annotations

import numpy as np
import pytest

from starcox.builder import StarParams, reduced_generators
from starcox.field import build_field
from starcox.matgroup import (
    OverCapError,
    SingularMatrixError,
    bsgs_group,
    element_order,
    enumerate_group,
    identity,
    is_identity,
    mat_det,
    mat_from_rows,
    mat_inv,
    mat_mul,
    mat_vec,
)
from starcox.ring import GoldenInt, classify_prime

RNG = np.random.default_rng(20231117)


def ctx_of(a, b):
    return build_field(classify_prime(GoldenInt(a, b)))


def gens_of(k, a, b):
    ctx, gens, _ = reduced_generators(StarParams(k=k, prime=classify_prime(GoldenInt(a, b))))
    return ctx, gens


def random_mats(ctx, n):
    return RNG.integers(0, ctx.q, size=(n, 4, 4), dtype=np.int64)


# ---------------------------------------------------------------------------
# scalar kernels


def slow_mat_mul(ctx, a, b):
    out = np.zeros((4, 4), dtype=np.int64)
    for i in range(4):
        for j in range(4):
            acc = 0
            for l in range(4):
                acc = ctx.add(acc, ctx.mul(int(a[i, l]), int(b[l, j])))
            out[i, j] = acc
    return out


def test_mat_mul_matches_scalar_reference():
    for ctx in (ctx_of(-1, 2), ctx_of(3, 0), ctx_of(3, 1), ctx_of(2, 0)):
        for a, b in zip(random_mats(ctx, 8), random_mats(ctx, 8)):
            assert np.array_equal(mat_mul(ctx, a, b), slow_mat_mul(ctx, a, b))


def test_mat_vec_matches_column_action():
    ctx = ctx_of(3, 1)
    for m in random_mats(ctx, 8):
        v = RNG.integers(0, ctx.q, size=4, dtype=np.int64)
        via_mul = mat_mul(ctx, m, v.reshape(4, 1)).reshape(4)
        assert np.array_equal(mat_vec(ctx, m, v), via_mul)


def test_mat_mul_batched_broadcast():
    ctx = ctx_of(-1, 2)
    a = random_mats(ctx, 6)
    b = random_mats(ctx, 6)
    batched = mat_mul(ctx, a, b)
    assert batched.shape == (6, 4, 4)
    for i in range(6):
        assert np.array_equal(batched[i], mat_mul(ctx, a[i], b[i]))


def test_identity_and_inverse():
    for prime in ((-1, 2), (3, 0), (2, 0), (3, 1)):
        ctx, gens = gens_of(4, *prime)
        m = mat_mul(ctx, mat_mul(ctx, gens[0], gens[1]), gens[2])
        mi = mat_inv(ctx, m)
        assert is_identity(ctx, mat_mul(ctx, m, mi))
        assert is_identity(ctx, mat_mul(ctx, mi, m))


def test_mat_inv_singular_raises():
    ctx = ctx_of(3, 1)
    m = identity(ctx)
    m[2] = 0
    with pytest.raises(SingularMatrixError):
        mat_inv(ctx, m)


def test_mat_det_multiplicative():
    for ctx in (ctx_of(-1, 2), ctx_of(3, 0), ctx_of(2, 0)):
        assert mat_det(ctx, identity(ctx)) == ctx.one
        for a, b in zip(random_mats(ctx, 6), random_mats(ctx, 6)):
            da, db = mat_det(ctx, a), mat_det(ctx, b)
            assert mat_det(ctx, mat_mul(ctx, a, b)) == ctx.mul(da, db)


def test_element_order_basics():
    ctx, gens = gens_of(5, -1, 2)
    assert element_order(ctx, identity(ctx)) == 1
    for r in gens:
        assert element_order(ctx, r) == 2
    r0r1 = mat_mul(ctx, gens[0], gens[1])
    assert element_order(ctx, r0r1) == 5


# ---------------------------------------------------------------------------
# BFS enumeration


def test_enumerate_dihedral_subgroups():
    ctx, gens = gens_of(4, -1, 2)
    d5 = enumerate_group(ctx, gens[[0, 1]])
    assert d5.order == 10
    d4 = enumerate_group(ctx, gens[[1, 3]])
    assert d4.order == 8
    d3 = enumerate_group(ctx, gens[[1, 2]])
    assert d3.order == 6
    d2 = enumerate_group(ctx, gens[[0, 2]])
    assert d2.order == 4


def test_enumerate_closure_and_lagrange():
    ctx, gens = gens_of(3, 2, 0)
    g = enumerate_group(ctx, gens)
    assert g.order == 960
    elems = g.elements
    sample = elems[RNG.choice(g.order, size=40)]
    other = elems[RNG.choice(g.order, size=40)]
    prods = mat_mul(ctx, sample, other)
    assert g.contains_batch(prods).all()
    for sub in (gens[[0, 1]], gens[[1, 2]], gens[[0, 1, 2]]):
        assert g.order % enumerate_group(ctx, sub).order == 0


def test_enumerate_respects_cap():
    ctx, gens = gens_of(3, -1, 2)
    with pytest.raises(OverCapError):
        enumerate_group(ctx, gens, cap=100)


def test_enumerate_deduplicates_generators():
    ctx, gens = gens_of(4, -1, 2)
    doubled = np.concatenate([gens[[0, 1]], gens[[0, 1]], gens[[0]]])
    assert enumerate_group(ctx, doubled).order == 10


# ---------------------------------------------------------------------------
# BSGS


@pytest.mark.parametrize(
    "k,prime,expected",
    [
        (3, (2, 0), 960),
        (4, (-1, 2), 28_800),
        (5, (-1, 2), 15_000),
        (6, (3, 0), 174_960),
    ],
)
def test_bsgs_order_matches_enumeration(k, prime, expected):
    ctx, gens = gens_of(k, *prime)
    bfs = enumerate_group(ctx, gens)
    chain = bsgs_group(ctx, gens)
    assert bfs.order == chain.order == expected


def test_bsgs_membership_agrees_with_enumeration():
    ctx, gens = gens_of(6, 3, 0)
    bfs = enumerate_group(ctx, gens[[0, 1, 3]])
    chain = bsgs_group(ctx, gens[[0, 1, 3]])
    assert chain.order == bfs.order == 1620
    elems = bfs.elements
    inside = elems[RNG.choice(bfs.order, size=60)]
    assert chain.contains_batch(inside).all()
    full = enumerate_group(ctx, gens)
    outside = []
    for m in full.elements[RNG.choice(full.order, size=400)]:
        if not bfs.contains(m):
            outside.append(m)
        if len(outside) == 40:
            break
    outside = np.array(outside)
    assert not chain.contains_batch(outside).any()
    singular = identity(ctx)
    singular[0] = 0
    assert not chain.contains(singular)
    assert not bfs.contains(singular)


def test_bsgs_elements_unavailable():
    ctx, gens = gens_of(4, -1, 2)
    chain = bsgs_group(ctx, gens)
    with pytest.raises(ValueError):
        _ = chain.elements


# ---------------------------------------------------------------------------
# intersections and equality


def test_intersect_dihedral():
    ctx, gens = gens_of(4, -1, 2)
    g0 = enumerate_group(ctx, gens[[1, 2, 3]])
    g3 = enumerate_group(ctx, gens[[0, 1, 2]])
    meet = g0.intersect(g3)
    assert meet.order == 6
    assert meet.same_group(enumerate_group(ctx, gens[[1, 2]]))


def test_intersect_with_bsgs_side():
    ctx, gens = gens_of(6, 3, 0)
    g0 = enumerate_group(ctx, gens[[1, 2, 3]])
    g2 = bsgs_group(ctx, gens[[0, 1, 3]])
    meet = g0.intersect(g2)
    assert meet.same_group(enumerate_group(ctx, gens[[1, 3]]))


def test_same_group_detects_difference():
    ctx, gens = gens_of(4, -1, 2)
    a = enumerate_group(ctx, gens[[0, 1]])
    b = enumerate_group(ctx, gens[[1, 2]])
    assert not a.same_group(b)
    assert a.same_group(enumerate_group(ctx, gens[[1, 0]]))
