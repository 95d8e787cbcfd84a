"""
Defining relations per surface, and the presentation file format.

A presentation file is JSON::

    {
      "context": {"surface": "torus", "kappa": 2, "marked_point": true},
      "ring": "hbar_c",
      "order": {"precedence": ["a1", "a1^-1", ...],
                "classes": [[...], [...]], "inversions": [[...], [...]]},
      "relations": [{"lhs": "<word>", "rhs": [{"coeff": <coeff json>, "word": "<word>"}]}],
      "source": "free text"
    }

Each entry of ``relations`` reads ``lhs = rhs``.  On load every relation is
oriented by the order (so a file may list them either way round).  The shipped
files under ``data/`` list completed rule sets, produced from
:func:`defining_relations` by :func:`skein_hecke.rewrite.complete`.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .braids import BraidContext
from .coeff import Coefficient, Ring
from .errors import FixtureError
from .rewrite import MonomialOrder, RewriteRule, RewriteSystem, orient
from .words import AlgebraElement, Word, atom, atom_name

__all__ = [
    "FIXTURE_ENV",
    "fixture_dir",
    "fixture_path",
    "monomial_order",
    "defining_relations",
    "load_presentation",
    "dump_presentation",
    "parse_atom_name",
]

FIXTURE_ENV = "SKEIN_HECKE_FIXTURES"


def fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_ENV)
    if env:
        return Path(env)
    return Path(__file__).with_name("data")


def fixture_path(surface: str, kappa: int) -> Path:
    return fixture_dir() / f"{surface}_k{kappa}.json"


def _letters(kind: str, n: int) -> list[int]:
    out = []
    for i in range(1, n + 1):
        out += [atom(kind, i), -atom(kind, i)]
    return out


def monomial_order(ctx: BraidContext) -> MonomialOrder:
    """Order whose reduced words are ``a-block . crossings . b-block``.

    Disk and cylinder use degree-lex with a < s.  The torus counts a- and
    b-letters first and then the number of (b before a) pairs, because the
    cross relations trade ``b a`` for longer words ``a s.. b``.
    """
    k = ctx.kappa
    crossings = [atom("s", i) for i in range(1, k)] + [-atom("s", i) for i in range(1, k)]
    a_letters = _letters("a", k) if "a" in ctx.surface.loop_kinds else []
    b_letters = _letters("b", k) if "b" in ctx.surface.loop_kinds else []
    precedence = a_letters + crossings + b_letters
    if ctx.surface.kind == "torus":
        return MonomialOrder(precedence, classes=(a_letters, b_letters),
                             inversion_pair=(b_letters, a_letters))
    return MonomialOrder(precedence)


def _w(*atoms: int) -> AlgebraElement:
    return AlgebraElement.from_word(Word(atoms), Coefficient.one())


def defining_relations(ctx: BraidContext) -> list[AlgebraElement]:
    """Relations (each ``== 0``) presenting the surface Hecke algebra of ``ctx``."""
    k = ctx.kappa
    hbar = Coefficient.hbar()
    one = AlgebraElement.one()
    s = lambda i: atom("s", i)
    rels: list[AlgebraElement] = []
    for i in range(1, k):
        # skein: s - s^-1 = hbar
        rels.append(_w(s(i)) - _w(-s(i)) - one.scale(hbar))
        rels.append(_w(s(i), s(i)) - _w(s(i)).scale(hbar) - one)
    for i in range(1, k - 1):
        rels.append(_w(s(i), s(i + 1), s(i)) - _w(s(i + 1), s(i), s(i + 1)))
    for i in range(1, k):
        for j in range(i + 2, k):
            rels.append(_w(s(j), s(i)) - _w(s(i), s(j)))
    if "a" in ctx.surface.loop_kinds:
        a = lambda i: atom("a", i)
        for i in range(1, k):
            rels.append(_w(a(i + 1)) - _w(s(i), a(i), s(i)))
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                rels.append(_w(a(j), a(i)) - _w(a(i), a(j)))
            for j in range(1, k):
                if i not in (j, j + 1):
                    rels.append(_w(s(j), a(i)) - _w(a(i), s(j)))
    if "b" in ctx.surface.loop_kinds:
        b = lambda i: atom("b", i)
        for i in range(1, k):
            rels.append(_w(b(i + 1)) - _w(-s(i), b(i), -s(i)))
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                rels.append(_w(b(j), b(i)) - _w(b(i), b(j)))
            for j in range(1, k):
                if i not in (j, j + 1):
                    rels.append(_w(s(j), b(i)) - _w(b(i), s(j)))
        a_all = [atom("a", i) for i in range(1, k + 1)]
        # strand 1 around every basepoint and the marked point
        rels.append(_w(b(1), *a_all) - _w(*a_all, b(1)).scale(Coefficient.c(2)))
        if k >= 2:
            rels.append(_w(-atom("a", 1), b(2), atom("a", 1), -b(2)) - _w(s(1), s(1)))
    return rels


def parse_atom_name(name: str) -> int:
    base, _, exp = name.partition("^")
    w = Word.parse(base)
    if len(w.atoms) != 1:
        raise FixtureError(f"bad letter name {name!r}")
    return -w.atoms[0] if exp == "-1" else w.atoms[0]


def _order_from_json(doc) -> MonomialOrder:
    prec = [parse_atom_name(n) for n in doc["precedence"]]
    classes = [[parse_atom_name(n) for n in c] for c in doc.get("classes", [])]
    inv = doc.get("inversions")
    pair = None
    if inv:
        pair = tuple([parse_atom_name(n) for n in part] for part in inv)
    return MonomialOrder(prec, classes, pair)


def load_presentation(path, ctx: BraidContext | None = None, step_cap: int | None = None) -> RewriteSystem:
    """Read a presentation file and orient its relations into a :class:`RewriteSystem`."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FixtureError(f"cannot read presentation {path}: {exc}") from exc
    file_ctx = BraidContext.from_json(doc["context"]) if "context" in doc else None
    if ctx is not None and file_ctx is not None and (
            file_ctx.surface.kind != ctx.surface.kind or file_ctx.kappa != ctx.kappa):
        raise FixtureError(f"{path} is for {file_ctx.to_json()}, not {ctx.to_json()}")
    ctx = ctx or file_ctx
    ring = Ring(doc.get("ring", "hbar_c"))
    order = _order_from_json(doc["order"]) if "order" in doc else monomial_order(ctx)
    rules = []
    for n, rel in enumerate(doc["relations"]):
        lhs = Word.parse(rel["lhs"])
        rhs = AlgebraElement(ring, [(Word.parse(t["word"]), Coefficient.from_json(t["coeff"]))
                                    for t in rel["rhs"]])
        rule = orient(AlgebraElement(ring, [(lhs, 1)]) - rhs, order)
        if rule is None:
            raise FixtureError(f"relation {n} in {path} is trivial")
        rules.append(rule)
    alphabet = ctx.alphabet if ctx is not None else None
    kwargs = {} if step_cap is None else {"step_cap": step_cap}
    name = f"{ctx.surface.kind}_k{ctx.kappa}" if ctx else path.stem
    return RewriteSystem(rules, order, ring, alphabet, name=name, **kwargs)


def dump_presentation(R: RewriteSystem, ctx: BraidContext, source: str = "") -> dict:
    return {
        "context": ctx.to_json(),
        "ring": R.ring.value,
        "order": R.order.to_json(),
        "source": source,
        "relations": [
            {"lhs": r.lhs.to_text(),
             "rhs": [{"coeff": c.to_json(), "word": w.to_text()}
                     for w, c in r.rhs.sorted_terms(R.order.key)]}
            for r in R.rules
        ],
    }


def letter_names(R: RewriteSystem) -> list[str]:
    return [atom_name(x) for x in R.order.precedence]
