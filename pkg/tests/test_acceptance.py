"""
Acceptance gate: one test per criterion, each at its stated time limit.

Every test builds fresh instances (cold reduction caches) and times its own
body.  A summary with one PASS/FAIL line per criterion is printed at the end
of the pytest run.

    pytest tests/test_acceptance.py -v
"""

import random
import time

import pytest

from skein_hecke import (AlgebraElement, BraidContext, Coefficient, IllegalGenerator, IndexInput, Ring,
                         Word, WordSyntaxError, build_instance, confluence_check, degenerate,
                         enumerate_hecke_basis, find_ambiguities, fredholm_index, graded_index,
                         hbar_degree, hecke_mul, matching_maslov, parse_word, print_word, to_bsk,
                         wreath_mul)
from skein_hecke.braids import random_word

SURFACES = ("disk", "cylinder", "torus")
SMALL = [(s, k) for s in SURFACES for k in (1, 2, 3)]
SHIPPED = [("disk", k) for k in range(1, 6)] + [("cylinder", k) for k in range(1, 5)] + \
          [("torus", k) for k in range(1, 4)]
HBAR = Coefficient.hbar()
ONE = Coefficient.one()


def fresh(surface, k):
    return build_instance(BraidContext.of(surface, k))


def word_elem(w, coef=ONE):
    return AlgebraElement.from_word(w, coef)


class Clock:
    def __init__(self, node, limit):
        self.node, self.limit = node, limit
        self.t0 = time.perf_counter()

    def stop(self):
        elapsed = time.perf_counter() - self.t0
        self.node.user_properties.append(("elapsed", elapsed))
        assert elapsed < self.limit, f"took {elapsed:.2f}s, limit {self.limit}s"
        return elapsed


@pytest.fixture
def clock(request):
    limit = request.node.get_closest_marker("acceptance").kwargs["limit"]
    return Clock(request.node, limit)


@pytest.mark.acceptance(1, "skein relation s_i - s_i^-1 - hbar reduces to 0", limit=1)
def test_skein_relation(clock):
    checked = 0
    for surface, k in SMALL:
        H = fresh(surface, k)
        for i in range(1, k):
            s = Word.parse(f"s{i}")
            rel = word_elem(s) - word_elem(s.inverse()) - AlgebraElement.scalar(HBAR)
            assert H.reduce(rel).is_zero(), (surface, k, i)
            checked += 1
    assert checked == 9  # three surfaces, kappa = 1, 2, 3
    clock.stop()


@pytest.mark.acceptance(2, "quadratic relation s_i^2 = hbar s_i + 1, and 1 at hbar=0", limit=1)
def test_quadratic_relation(clock):
    for surface, k in SMALL:
        H = fresh(surface, k)
        at_zero = H.specialized(hbar_to_zero=True)
        for i in range(1, k):
            s = Word.parse(f"s{i}")
            assert H.reduce(word_elem(Word.parse(f"s{i}^2"))) == word_elem(s, HBAR) + AlgebraElement.one()
            assert at_zero.reduce(word_elem(Word.parse(f"s{i}^2"))) == AlgebraElement.one()
            sq = hecke_mul(word_elem(s), word_elem(s), H)
            assert degenerate(sq, H) == degenerate(AlgebraElement.one(), H)
    clock.stop()


@pytest.mark.acceptance(3, "finite Hecke basis has 2, 6, 24 words for kappa = 2, 3, 4", limit=10)
def test_finite_basis_counts(clock):
    counts = [len(enumerate_hecke_basis(fresh("disk", k))) for k in (2, 3, 4)]
    assert counts == [2, 6, 24]
    clock.stop()


@pytest.mark.acceptance(4, "degenerate is a homomorphism onto the wreath oracle (10^3 pairs/instance)",
                        limit=60)
@pytest.mark.parametrize("surface,k", SMALL)
def test_degeneration_homomorphism(surface, k, request):
    # x and y are reduced random words of length <= 4, so xy has length <= 8
    H = fresh(surface, k)
    rng = random.Random(f"deg-{surface}-{k}")
    t0 = time.perf_counter()
    for _ in range(1000):
        x = H.reduce(word_elem(random_word(rng, H.ctx, 4, max_exp=3)))
        y = H.reduce(word_elem(random_word(rng, H.ctx, 4, max_exp=3)))
        lhs = degenerate(hecke_mul(x, y, H), H)
        rhs = wreath_mul(degenerate(x, H), degenerate(y, H))
        assert lhs == rhs, (x, y)
    elapsed = time.perf_counter() - t0
    request.node.user_properties.append(("elapsed", elapsed))
    assert elapsed < 60, f"{surface} kappa={k} took {elapsed:.1f}s, limit 60s per instance"


@pytest.mark.acceptance(5, "marked-point loop reduces to c^2", limit=1)
def test_marked_point_relation(clock):
    for k in (1, 2, 3):
        H = fresh("torus", k)
        assert H.reduce(word_elem(H.star_loop())) == AlgebraElement.scalar(Coefficient.c(2))
    clock.stop()


@pytest.mark.acceptance(6, "c is central (10^3 random x per c-bearing instance)", limit=10)
def test_c_centrality(clock):
    for k in (1, 2, 3):
        H = fresh("torus", k)
        assert H.ctx.surface.marked_point
        c = word_elem(H.word("c"))
        rng = random.Random(f"central-{k}")
        for _ in range(1000):
            x = H.reduce(word_elem(random_word(rng, H.ctx, 8)))
            assert H.reduce(c * x - x * c).is_zero()
            assert hecke_mul(c, x, H) == hecke_mul(x, c, H)
    clock.stop()


@pytest.mark.acceptance(7, "confluence up to length 8: disk k<=4, cylinder k<=3, torus k<=2", limit=300)
def test_confluence_reports(clock):
    for surface, top in (("disk", 4), ("cylinder", 3), ("torus", 2)):
        for k in range(1, top + 1):
            H = fresh(surface, k)
            amb = find_ambiguities(H.system, 8)
            report = confluence_check(H.system, 8)
            assert report.checked == len(amb)
            assert report.failures == [], (surface, k, report.to_json())
    clock.stop()


@pytest.mark.acceptance(8, "leftmost and rightmost reduction agree (10^4 words/instance)",
                        limit=60)
@pytest.mark.parametrize("surface,k", SHIPPED)
def test_strategy_independence(surface, k, request):
    H = fresh(surface, k)
    rng = random.Random(f"strategy-{surface}-{k}")
    t0 = time.perf_counter()
    for _ in range(10_000):
        x = word_elem(random_word(rng, H.ctx, 8))
        assert H.reduce(x, "leftmost") == H.reduce(x, "rightmost"), x
    elapsed = time.perf_counter() - t0
    request.node.user_properties.append(("elapsed", elapsed))
    assert elapsed < 60, f"{surface} kappa={k} took {elapsed:.1f}s, limit 60s per instance"


@pytest.mark.acceptance(9, "to_bsk is an algebra map and sends the skein relation to its s-form", limit=30)
def test_change_of_variables(clock):
    s = Coefficient.s()
    s_inv = Coefficient.s(-1)
    for surface, k in (("disk", 3), ("cylinder", 2), ("torus", 2)):
        H = fresh(surface, k)
        rng = random.Random(f"bsk-{surface}")
        for _ in range(1000):
            x = H.reduce(word_elem(random_word(rng, H.ctx, 4), _coef(rng)))
            y = H.reduce(word_elem(random_word(rng, H.ctx, 4), _coef(rng)))
            assert to_bsk(hecke_mul(x, y, H)) == H.s_system.reduce(to_bsk(x) * to_bsk(y))
        s1 = H.word("s1")
        skein = word_elem(s1) - word_elem(s1.inverse()) - AlgebraElement.scalar(HBAR)
        s_form = AlgebraElement.from_word(s1, Coefficient.one(Ring.S_C)) \
            - AlgebraElement.from_word(s1.inverse(), Coefficient.one(Ring.S_C)) \
            - AlgebraElement.scalar(s - s_inv)
        assert to_bsk(skein) == s_form
        assert H.s_system.reduce(s_form).is_zero()
    clock.stop()


def _coef(rng):
    return Coefficient(Ring.HBAR_C, {(rng.randint(0, 2), rng.randint(-2, 2)): rng.choice((-2, -1, 1, 3))})


@pytest.mark.acceptance(10, "index formulas agree at the matching mu; |hbar| = 0 for n = 2", limit=1)
def test_index_formulas(clock):
    rng = random.Random("index")
    for _ in range(10_000):
        m = rng.randint(1, 8)
        inp = IndexInput(n=rng.randint(-10, 10), chi=rng.randint(-20, 5), kappa=rng.randint(1, 8), m=m,
                         degrees=tuple(rng.randint(-50, 50) for _ in range(m + 1)))
        mu = matching_maslov(inp)
        assert graded_index(inp) == fredholm_index(IndexInput(inp.n, inp.chi, inp.kappa, inp.m, mu, inp.degrees))
    assert hbar_degree(2) == 0
    clock.stop()


# hand-written inputs: (text, surface, kappa, canonical print or the error type)
CORPUS = [
    ("", "disk", 1, ""),
    ("s1", "disk", 2, "s1"),
    ("s1^1", "disk", 2, "s1"),
    ("  s1   s2  ", "disk", 3, "s1 s2"),
    ("s1 s1 s1^-1", "disk", 2, "s1"),
    ("s1^0 s2", "disk", 3, "s2"),
    ("s1^-1 a1^2 c^2 s2", "torus", 3, "c^2 s1^-1 a1^2 s2"),
    ("a1 a1^2 a1^-1", "cylinder", 1, "a1^2"),
    ("c c^-1", "torus", 1, ""),
    ("b1 c a1 c", "torus", 1, "c^2 b1 a1"),
    ("a2^-3 s1 a2^3", "cylinder", 2, "a2^-3 s1 a2^3"),
    ("b2\ta1\n s1", "torus", 2, "b2 a1 s1"),
    ("x1", "disk", 2, WordSyntaxError),
    ("s", "disk", 2, WordSyntaxError),
    ("s0", "disk", 2, WordSyntaxError),
    ("c1", "torus", 1, WordSyntaxError),
    ("s1^", "disk", 2, WordSyntaxError),
    ("s1^x", "disk", 2, WordSyntaxError),
    ("s1^2.5", "disk", 2, WordSyntaxError),
    ("s1 ^2", "disk", 2, WordSyntaxError),
    ("s1*s2", "disk", 3, WordSyntaxError),
    ("S1", "disk", 2, WordSyntaxError),
    ("s-1", "disk", 2, WordSyntaxError),
    ("s3", "disk", 3, IllegalGenerator),
    ("s1", "disk", 1, IllegalGenerator),
    ("a1", "disk", 2, IllegalGenerator),
    ("b2", "cylinder", 3, IllegalGenerator),
    ("a3", "torus", 2, IllegalGenerator),
    ("c", "disk", 2, IllegalGenerator),
    ("c^2 a1", "cylinder", 1, IllegalGenerator),
]


@pytest.mark.acceptance(11, "parse/print round trip on 10^4 random words and the hand corpus", limit=5)
def test_parser_round_trip(clock):
    rng = random.Random("parser")
    contexts = [BraidContext.of(s, k) for s in SURFACES for k in (1, 2, 3, 4)]
    for _ in range(10_000):
        ctx = rng.choice(contexts)
        w = random_word(rng, ctx, rng.randint(0, 12), max_exp=rng.randint(1, 5))
        text = print_word(w)
        assert parse_word(text, ctx) == w
        assert print_word(parse_word(text, ctx)) == text
    for text, surface, k, expect in CORPUS:
        ctx = BraidContext.of(surface, k)
        if isinstance(expect, str):
            w = parse_word(text, ctx)
            assert print_word(w) == expect, text
            assert print_word(parse_word(print_word(w), ctx)) == expect
        else:
            with pytest.raises(expect):
                parse_word(text, ctx)
    clock.stop()
