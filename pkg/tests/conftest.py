import random
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from skein_hecke import AlgebraElement, BraidContext, Coefficient, Ring, Word, build_instance
from skein_hecke.braids import random_word

SHIPPED = [("disk", k) for k in (1, 2, 3, 4)] + [("cylinder", k) for k in (1, 2, 3)] + \
          [("torus", k) for k in (1, 2, 3)]


@lru_cache(maxsize=None)
def instance(surface, kappa):
    return build_instance(BraidContext.of(surface, kappa))


def elem(w, coef=1, ring=Ring.HBAR_C):
    if isinstance(w, str):
        w = Word.parse(w)
    if isinstance(coef, int):
        coef = Coefficient.integer(coef, ring)
    return AlgebraElement.from_word(w, coef)


def random_elem(rng, ctx, length=8, terms=1):
    out = AlgebraElement.zero()
    for _ in range(terms):
        coef = Coefficient(Ring.HBAR_C, {(rng.randint(0, 2), rng.randint(-2, 2)): rng.randint(-3, 3) or 1})
        out = out + AlgebraElement.from_word(random_word(rng, ctx, length), coef)
    return out


def coefficients(ring=Ring.HBAR_C, max_terms=4):
    lo = 0 if ring is Ring.HBAR_C else -4
    if ring is Ring.INT:
        return st.integers(-50, 50).map(lambda n: Coefficient.integer(n, Ring.INT))
    mono = st.tuples(st.tuples(st.integers(lo, 4), st.integers(-4, 4)), st.integers(-9, 9))
    return st.lists(mono, max_size=max_terms).map(lambda ts: Coefficient(ring, ts))


@pytest.fixture
def rng():
    return random.Random(20261015)


# -- acceptance summary -----------------------------------------------------

_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or (rep.when != "call" and rep.passed):
        return
    num, title = marker.args
    entry = _ACCEPTANCE.setdefault(num, {"title": title, "limit": marker.kwargs["limit"],
                                         "ok": True, "runs": 0, "elapsed": []})
    entry["ok"] &= rep.passed
    entry["runs"] += 1
    elapsed = dict(rep.user_properties).get("elapsed")
    if elapsed is not None:
        entry["elapsed"].append(elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        e = _ACCEPTANCE[num]
        if not e["elapsed"]:
            took = "no timing"
        elif e["runs"] > 1:
            took = f"{e['runs']} instances, slowest {max(e['elapsed']):.2f}s"
        else:
            took = f"{e['elapsed'][0]:.2f}s"
        tr.write_line(f"[{'PASS' if e['ok'] else 'FAIL'}] criterion {num:>2}: {e['title']} "
                      f"({took}; limit {e['limit']}s)")
