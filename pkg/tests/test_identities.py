"""The four quadratic ring identities behind every construction.

Each is checked symbolically over random Gaussian-integer tensors with
exact arithmetic: both sides must be equal entry for entry.
"""
from __future__ import annotations

import numpy as np
from hypothesis import given, settings

from golaykit.tensor import Tensor, add, convolve, involute, negate

from .oracles import tensor_pairs_same_shape, tensors


def star(t):
    return involute(t)


def mul(a, b):
    return convolve(a, b)


def norm_sum(*ts):
    out = mul(ts[0], star(ts[0]))
    for t in ts[1:]:
        out = add(out, mul(t, star(t)))
    return out


def random_tensor(rng, shape, max_component=2):
    n = int(np.prod(shape))
    re = rng.integers(-max_component, max_component + 1, size=n)
    im = rng.integers(-max_component, max_component + 1, size=n)
    return Tensor.from_entries(shape, list(zip(map(int, re), map(int, im))))


def two_square_product(a, b, c, d):
    """Left and right sides of the two-term product identity."""
    e = add(mul(a, c), mul(b, d))
    f = add(mul(star(b), c), negate(mul(star(a), d)))
    return norm_sum(e, f), mul(norm_sum(a, b), norm_sum(c, d))


def four_square_product(a, b, c, d, e, f, g, h):
    """Left and right sides of the four-term product identity."""
    p = add(add(mul(a, star(f)), negate(mul(star(b), e))),
            add(mul(c, g), mul(d, h)))
    q = add(add(mul(star(a), e), mul(b, star(f))),
            add(negate(mul(c, star(h))), mul(d, star(g))))
    r = add(add(mul(star(c), e), negate(mul(d, f))),
            add(mul(a, star(h)), mul(b, g)))
    s = add(add(negate(mul(c, f)), negate(mul(star(d), e))),
            add(mul(a, star(g)), negate(mul(b, h))))
    return norm_sum(p, q, r, s), mul(norm_sum(a, b, c, d),
                                     norm_sum(e, f, g, h))


def grid_product(avec, bvec):
    """Left and right sides of the all-products identity."""
    lhs = None
    for a in avec:
        for b in bvec:
            c = mul(a, b)
            term = mul(c, star(c))
            lhs = term if lhs is None else add(lhs, term)
    return lhs, mul(norm_sum(*avec), norm_sum(*bvec))


def paired_grid_product(avec, bvec):
    """Left and right sides of the paired two-term grid identity.

    Both input lists must have even length.
    """
    lhs = None
    for i in range(len(avec) // 2):
        for j in range(len(bvec) // 2):
            a1, a2 = avec[2 * i], avec[2 * i + 1]
            b1, b2 = bvec[2 * j], bvec[2 * j + 1]
            c = add(mul(a1, b1), mul(a2, b2))
            d = add(mul(a1, star(b2)), negate(mul(a2, star(b1))))
            term = add(mul(c, star(c)), mul(d, star(d)))
            lhs = term if lhs is None else add(lhs, term)
    return lhs, mul(norm_sum(*avec), norm_sum(*bvec))


class TestTwoSquare:
    @given(tensor_pairs_same_shape(max_rank=2, max_dim=3),
           tensor_pairs_same_shape(max_rank=2, max_dim=3))
    @settings(max_examples=50)
    def test_identity(self, ab, cd):
        a, b = ab
        c, d = cd
        if a.rank != c.rank:
            return
        lhs, rhs = two_square_product(a, b, c, d)
        assert lhs == rhs

    def test_fixed_rng_sample(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            lhs, rhs = two_square_product(
                *(random_tensor(rng, (3,)) for _ in range(2)),
                *(random_tensor(rng, (4,)) for _ in range(2)),
            )
            assert lhs == rhs


class TestFourSquare:
    @given(tensor_pairs_same_shape(max_rank=1, max_dim=3),
           tensor_pairs_same_shape(max_rank=1, max_dim=3),
           tensor_pairs_same_shape(max_rank=1, max_dim=3),
           tensor_pairs_same_shape(max_rank=1, max_dim=3))
    @settings(max_examples=30)
    def test_identity(self, ab, cd, ef, gh):
        a, b = ab
        c, d = cd
        e, f = ef
        g, h = gh
        if not (a.shape == c.shape and e.shape == g.shape):
            return
        lhs, rhs = four_square_product(a, b, c, d, e, f, g, h)
        assert lhs == rhs

    def test_fixed_rng_sample(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            abcd = [random_tensor(rng, (2, 2)) for _ in range(4)]
            efgh = [random_tensor(rng, (3, 2)) for _ in range(4)]
            lhs, rhs = four_square_product(*abcd, *efgh)
            assert lhs == rhs


class TestGridProducts:
    def test_all_products(self):
        rng = np.random.default_rng(13)
        for m, n in [(1, 1), (2, 3), (3, 2)]:
            avec = [random_tensor(rng, (3,)) for _ in range(m)]
            bvec = [random_tensor(rng, (2,)) for _ in range(n)]
            lhs, rhs = grid_product(avec, bvec)
            assert lhs == rhs

    def test_paired_products(self):
        rng = np.random.default_rng(17)
        for m, n in [(2, 2), (2, 4), (4, 2)]:
            avec = [random_tensor(rng, (3,)) for _ in range(m)]
            bvec = [random_tensor(rng, (2,)) for _ in range(n)]
            lhs, rhs = paired_grid_product(avec, bvec)
            assert lhs == rhs

    @given(tensors(max_rank=2, max_dim=2), tensors(max_rank=2, max_dim=2),
           tensors(max_rank=2, max_dim=2), tensors(max_rank=2, max_dim=2))
    @settings(max_examples=20)
    def test_paired_identity_property(self, a1, a2, b1, b2):
        if not (a1.shape == a2.shape and b1.shape == b2.shape
                and a1.rank == b1.rank):
            return
        lhs, rhs = paired_grid_product([a1, a2], [b1, b2])
        assert lhs == rhs
