import random

import pytest

from skein_hecke import IndexInput, fredholm_index, graded_index, hbar_degree, matching_maslov


def test_fredholm_examples():
    assert fredholm_index(IndexInput(n=2, chi=1, kappa=1, m=2, mu=0)) == -2
    assert fredholm_index(IndexInput(n=3, chi=1, kappa=1, m=1, mu=0)) == -1
    for chi in range(-5, 6):
        assert fredholm_index(IndexInput(n=2, chi=chi, kappa=3, m=2, mu=4)) == \
            fredholm_index(IndexInput(n=2, chi=0, kappa=3, m=2, mu=4))


def test_graded_examples():
    assert graded_index(IndexInput(n=2, chi=2, kappa=2, m=2, degrees=(0, 0, 0))) == 0
    assert graded_index(IndexInput(n=2, chi=1, kappa=2, m=2, degrees=(0, 0, 0))) == 0
    assert graded_index(IndexInput(n=3, chi=1, kappa=1, m=1, degrees=(1, 0))) == 0


def test_hbar_degree():
    assert hbar_degree(2) == 0
    assert hbar_degree(3) == -1
    for k in range(-4, 5):
        assert hbar_degree(2 - k) == k


def test_validation():
    with pytest.raises(ValueError):
        IndexInput(n=2, chi=0, kappa=1, m=0)
    with pytest.raises(ValueError):
        IndexInput(n=2, chi=0, kappa=0, m=1)
    with pytest.raises(ValueError):
        IndexInput(n=2, chi=0, kappa=1, m=2, degrees=(0, 0))
    with pytest.raises(ValueError):
        fredholm_index(IndexInput(n=2, chi=0, kappa=1, m=1))
    with pytest.raises(ValueError):
        graded_index(IndexInput(n=2, chi=0, kappa=1, m=1, mu=0))


def test_consistency_identity():
    rng = random.Random(17)
    for _ in range(2000):
        m = rng.randint(1, 6)
        inp = IndexInput(n=rng.randint(-5, 8), chi=rng.randint(-10, 4), kappa=rng.randint(1, 6), m=m,
                         degrees=tuple(rng.randint(-20, 20) for _ in range(m + 1)))
        mu = matching_maslov(inp)
        with_mu = IndexInput(inp.n, inp.chi, inp.kappa, inp.m, mu, inp.degrees)
        assert graded_index(inp) == fredholm_index(with_mu)


def test_surface_case_ignores_genus():
    rng = random.Random(2)
    for _ in range(500):
        m = rng.randint(1, 4)
        degs = tuple(rng.randint(-5, 5) for _ in range(m + 1))
        k = rng.randint(1, 4)
        vals = {graded_index(IndexInput(2, chi, k, m, degrees=degs)) for chi in range(-6, 3)}
        assert len(vals) == 1
