"""The wreath product law, checked against per-strand 3x3 Heisenberg matrices."""

import random

import pytest

from skein_hecke import BraidContext, CtxMismatch, Permutation, WreathElement, WreathSum, wreath_mul

T2 = BraidContext.of("torus", 2)
SWAP = Permutation((2, 1))
ID2 = Permutation((1, 2))


def test_semidirect_example():
    g = WreathElement(((1, 0), (0, 0)), SWAP, 0)
    assert g * g == WreathElement(((1, 0), (1, 0)), ID2, 0)
    u = WreathSum.of(T2, g)
    assert wreath_mul(u, u) == WreathSum.of(T2, WreathElement(((1, 0), (1, 0)), ID2, 0))


def test_unit_and_inverse():
    g = WreathElement(((2, -1), (0, 3)), SWAP, 5)
    e = WreathElement.identity(T2)
    assert e * g == g and g * e == g
    assert (g * g.inverse()).is_identity()
    assert (g.inverse() * g).is_identity()
    v = WreathSum.of(T2, g, 3)
    assert wreath_mul(WreathSum.one(T2), v) == v


def test_ctx_mismatch():
    with pytest.raises(CtxMismatch):
        WreathSum.one(T2) * WreathSum.one(BraidContext.of("torus", 3))
    with pytest.raises(CtxMismatch):
        WreathSum.one(T2) + WreathSum.one(BraidContext.of("cylinder", 2))


def test_json():
    g = WreathElement(((1, 2), (0, -1)), SWAP, -2)
    assert WreathElement.from_json(g.to_json()) == g
    doc = WreathSum.of(T2, g, 4).to_json()
    assert doc["terms"] == [{"n": 4, "vectors": [[1, 2], [0, -1]], "perm": [2, 1], "c_exp": -2}]


# -- Heisenberg matrix oracle --------------------------------------------

def matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def heis(x, y):
    # a^x b^y as an upper unitriangular matrix
    return [[1, x, x * y], [0, 1, y], [0, 0, 1]]


def to_matrices(g):
    return [heis(x, y) for x, y in g.vectors], g.perm, g.c_exp


def from_matrices(mats, perm, c):
    # the central matrix z = [[1,0,1],[0,1,0],[0,0,1]] is c^-2
    vecs = []
    for M in mats:
        x, y, z = M[0][1], M[1][2], M[0][2]
        c -= 2 * (z - x * y)
        vecs.append((x, y))
    return WreathElement(tuple(vecs), perm, c)


def oracle_mul(g, h):
    A, s, j = to_matrices(g)
    B, t, k = to_matrices(h)
    inv = s.inverse()
    mats = [matmul(A[m], B[inv(m + 1) - 1]) for m in range(len(A))]
    return from_matrices(mats, s * t, j + k)


def random_perm(rng, k):
    img = list(range(1, k + 1))
    rng.shuffle(img)
    return Permutation(tuple(img))


def random_elt(rng, k):
    return WreathElement(tuple((rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(k)),
                         random_perm(rng, k), rng.randint(-4, 4))


def test_single_strand_commutation():
    a = WreathElement(((1, 0),), Permutation((1,)), 0)
    b = WreathElement(((0, 1),), Permutation((1,)), 0)
    assert b * a == WreathElement(((1, 1),), Permutation((1,)), 2)
    assert oracle_mul(b, a) == b * a


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_law_matches_matrices(k):
    rng = random.Random(k)
    for _ in range(2000):
        g, h = random_elt(rng, k), random_elt(rng, k)
        assert g * h == oracle_mul(g, h)


def test_group_axioms():
    rng = random.Random(8)
    for _ in range(1000):
        f, g, h = (random_elt(rng, 3) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert (g * g.inverse()).is_identity()


def test_abelian_loops_do_not_twist():
    rng = random.Random(1)
    for _ in range(300):
        g = WreathElement(tuple((rng.randint(-3, 3),) for _ in range(3)), random_perm(rng, 3), 1)
        h = WreathElement(tuple((rng.randint(-3, 3),) for _ in range(3)), random_perm(rng, 3), 2)
        assert (g * h).c_exp == 3


def test_sum_bilinear():
    rng = random.Random(3)
    for _ in range(200):
        u = WreathSum(T2, {random_elt(rng, 2): rng.randint(-2, 2) for _ in range(3)})
        v = WreathSum(T2, {random_elt(rng, 2): rng.randint(-2, 2) for _ in range(3)})
        w = WreathSum(T2, {random_elt(rng, 2): rng.randint(-2, 2) for _ in range(3)})
        assert u * (v + w) == u * v + u * w
        assert (u * v) * w == u * (v * w)
