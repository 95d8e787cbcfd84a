"""
The hbar=0 oracle: group algebra of (per-strand loop groups) x| S_kappa.

An element of the group is ``(vectors, perm, c_exp)``: one lattice vector per
strand (length 0, 1, 2 on disk, cylinder, torus), the permutation of strands,
and the power of the central c.  On the torus each strand's loop group is the
Heisenberg group ``<a, b, c | b a = c^2 a b>``, written ``c^j a^x b^y``, so the
product picks up ``c^(2 y x')`` per strand; elsewhere the loop groups are
abelian and the c-exponent just adds.

Nothing here touches the rewrite engine.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .braids import BraidContext, Permutation
from .errors import CtxMismatch

__all__ = ["WreathElement", "WreathSum", "wreath_mul"]

Vectors = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class WreathElement:
    vectors: Vectors
    perm: Permutation
    c_exp: int = 0

    @classmethod
    def identity(cls, ctx: BraidContext) -> WreathElement:
        dim = ctx.surface.loop_dim
        return cls(tuple((0,) * dim for _ in range(ctx.kappa)), Permutation.identity(ctx.kappa), 0)

    def _act(self, vectors: Vectors) -> Vectors:
        # (sigma . B)[m] = B[sigma^-1(m)]
        inv = self.perm.inverse()
        return tuple(vectors[inv(m) - 1] for m in range(1, len(vectors) + 1))

    def __mul__(self, other: WreathElement) -> WreathElement:
        moved = self._act(other.vectors)
        vecs = tuple(tuple(p + q for p, q in zip(u, v)) for u, v in zip(self.vectors, moved))
        twist = 0
        if self.vectors and len(self.vectors[0]) == 2:
            twist = 2 * sum(u[1] * v[0] for u, v in zip(self.vectors, moved))
        return WreathElement(vecs, self.perm * other.perm, self.c_exp + other.c_exp + twist)

    def inverse(self) -> WreathElement:
        pinv = self.perm.inverse()
        neg = WreathElement(tuple(tuple(-t for t in v) for v in self.vectors), pinv, 0)
        vecs = neg._act(neg.vectors)
        # solve for the c-exponent that makes self * inv trivial
        trial = WreathElement(vecs, pinv, 0)
        prod = self * trial
        return WreathElement(vecs, pinv, -prod.c_exp)

    def is_identity(self) -> bool:
        return self.c_exp == 0 and self.perm.is_identity() and all(not any(v) for v in self.vectors)

    def to_json(self) -> dict:
        return {"vectors": [list(v) for v in self.vectors],
                "perm": list(self.perm.images), "c_exp": self.c_exp}

    @classmethod
    def from_json(cls, doc) -> WreathElement:
        return cls(tuple(tuple(v) for v in doc["vectors"]), Permutation(tuple(doc["perm"])),
                   doc["c_exp"])

    def __str__(self):
        vec = ",".join("(" + ",".join(map(str, v)) + ")" for v in self.vectors)
        return f"[{vec}; {list(self.perm.images)}; c^{self.c_exp}]"


class WreathSum:
    """Integer combination of :class:`WreathElement`; zero terms are dropped."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: BraidContext, terms: Mapping[WreathElement, int] | None = None):
        self.ctx = ctx
        self.terms = {g: n for g, n in (terms or {}).items() if n}

    @classmethod
    def of(cls, ctx: BraidContext, g: WreathElement, n: int = 1) -> WreathSum:
        return cls(ctx, {g: n})

    @classmethod
    def one(cls, ctx: BraidContext) -> WreathSum:
        return cls.of(ctx, WreathElement.identity(ctx))

    def _check(self, other: WreathSum) -> None:
        if self.ctx != other.ctx:
            raise CtxMismatch(f"{self.ctx.to_json()} vs {other.ctx.to_json()}")

    def __add__(self, other: WreathSum) -> WreathSum:
        self._check(other)
        out = dict(self.terms)
        for g, n in other.terms.items():
            out[g] = out.get(g, 0) + n
        return WreathSum(self.ctx, out)

    def __mul__(self, other: WreathSum) -> WreathSum:
        self._check(other)
        out: dict[WreathElement, int] = {}
        for g, m in self.terms.items():
            for h, n in other.terms.items():
                gh = g * h
                out[gh] = out.get(gh, 0) + m * n
        return WreathSum(self.ctx, out)

    def __eq__(self, other):
        if not isinstance(other, WreathSum):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: (kv[0].perm.images, kv[0].vectors, kv[0].c_exp))
        return {"context": self.ctx.to_json(),
                "terms": [{"n": n, **g.to_json()} for g, n in items]}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{n}*{g}" for g, n in self.terms.items())


def wreath_mul(u: WreathSum, v: WreathSum) -> WreathSum:
    return u * v
