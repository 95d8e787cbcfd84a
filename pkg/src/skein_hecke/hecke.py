"""
Concrete surface Hecke algebras.

==========  =========  ===========================
surface     variant    algebra
==========  =========  ===========================
disk        finite     finite Hecke algebra of S_k
cylinder    affine     affine Hecke algebra of gl_k
torus       daha       DAHA of gl_k (with c)
==========  =========  ===========================

An instance wraps a :class:`~skein_hecke.rewrite.RewriteSystem` loaded from a
presentation file.  Reduced words have the shape
``a-letters . crossings . b-letters`` (c-powers live in the coefficients).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .braids import BraidContext, parse_word, underlying_permutation, winding_vector
from .coeff import Coefficient, Ring, specialize, subst_hbar
from .errors import FixtureError, TagMismatch, VariantSurfaceMismatch
from .presentation import defining_relations, fixture_path, load_presentation, monomial_order
from .rewrite import RewriteSystem, complete, enumerate_basis
from .words import AlgebraElement, Word, atom
from .wreath import WreathElement, WreathSum

__all__ = [
    "VARIANTS",
    "HeckeInstance",
    "build_instance",
    "hecke_mul",
    "degenerate",
    "to_bsk",
    "enumerate_hecke_basis",
]

log = logging.getLogger(__name__)

VARIANTS = {"finite": "disk", "affine": "cylinder", "daha": "torus"}
DEFAULT_VARIANT = {v: k for k, v in VARIANTS.items()}


@dataclass(frozen=True)
class HeckeInstance:
    ctx: BraidContext
    variant: str
    system: RewriteSystem
    fixture: str | None = None
    verified: bool = True
    ring: Ring = field(default=Ring.HBAR_C)

    @property
    def kappa(self) -> int:
        return self.ctx.kappa

    def word(self, text: str) -> Word:
        return parse_word(text, self.ctx)

    def element(self, text: str, coef: Coefficient | int = 1) -> AlgebraElement:
        if isinstance(coef, int):
            coef = Coefficient.integer(coef, self.system.ring)
        return AlgebraElement.from_word(self.word(text), coef)

    def reduce(self, x: AlgebraElement, strategy: str = "leftmost") -> AlgebraElement:
        return self.system.reduce(x, strategy)

    def normalize(self, text: str) -> AlgebraElement:
        return self.reduce(self.element(text))

    def skein_relation(self, i: int) -> AlgebraElement:
        """``s_i - s_i^-1 - hbar``, zero in the algebra."""
        s = atom("s", i)
        one = Coefficient.one()
        return (AlgebraElement.from_word(Word((s,)), one)
                - AlgebraElement.from_word(Word((-s,)), one)
                - AlgebraElement.scalar(Coefficient.hbar()))

    def star_loop(self) -> Word:
        """Strand 1 once around the marked point: ``b1 A b1^-1 A^-1`` with ``A = a1...ak``."""
        if self.ctx.surface.kind != "torus":
            raise VariantSurfaceMismatch("only the torus instance has a marked-point loop")
        a_all = [atom("a", i) for i in range(1, self.kappa + 1)]
        b1 = atom("b", 1)
        return Word([b1, *a_all, -b1, *[-x for x in reversed(a_all)]])

    @cached_property
    def s_system(self) -> RewriteSystem:
        """Same rules with hbar replaced by s - s^-1 (the braid skein form)."""
        return self.system.map_coefficients(subst_hbar, Ring.S_C, self.system.name + "_s")

    def specialized(self, hbar_to_zero: bool = True, c_to_one: bool = False) -> RewriteSystem:
        ring = Ring.INT if (hbar_to_zero and c_to_one) else Ring.HBAR_C
        tag = ("_hbar0" if hbar_to_zero else "") + ("_c1" if c_to_one else "")
        return self.system.map_coefficients(
            lambda p: specialize(p, hbar_to_zero, c_to_one), ring, self.system.name + tag)

    def sort_key(self, w: Word):
        return self.system.order.key(w)

    def to_json(self) -> dict:
        return {"context": self.ctx.to_json(), "variant": self.variant,
                "fixture": self.fixture, "verified": self.verified,
                "rules": len(self.system.rules)}


def build_instance(ctx: BraidContext, variant: str | None = None, fixture=None,
                   step_cap: int | None = None) -> HeckeInstance:
    """Load (or, for unshipped kappa, complete on the fly) the instance for ``ctx``."""
    surface = ctx.surface.kind
    if variant is None:
        variant = DEFAULT_VARIANT[surface]
    variant = variant.lower()
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {sorted(VARIANTS)}")
    if VARIANTS[variant] != surface:
        raise VariantSurfaceMismatch(f"{variant} Hecke algebra lives on the {VARIANTS[variant]}, not the {surface}")
    verified = True
    if fixture is not None:
        path = Path(fixture)
        system = load_presentation(path, ctx, step_cap)
        verified = False
    else:
        path = fixture_path(surface, ctx.kappa)
        if path.exists():
            system = load_presentation(path, ctx, step_cap)
        else:
            log.warning("no shipped presentation for %s kappa=%d; completing relations now",
                        surface, ctx.kappa)
            order = monomial_order(ctx)
            rules = complete(defining_relations(ctx), order, Ring.HBAR_C, ctx.alphabet,
                             max_len=max(6, 2 * ctx.kappa))
            system = RewriteSystem(rules, order, Ring.HBAR_C, ctx.alphabet,
                                   name=f"{surface}_k{ctx.kappa}")
            path = None
            verified = False
        if step_cap is not None:
            system = system.with_step_cap(step_cap)
    inst = HeckeInstance(ctx, variant, system, str(path) if path else None, verified)
    for i in range(1, ctx.kappa):
        if not system.reduce(inst.skein_relation(i)).is_zero():
            raise FixtureError(f"presentation for {surface} kappa={ctx.kappa} lacks the skein relation at s{i}")
    return inst


def hecke_mul(x: AlgebraElement, y: AlgebraElement, H: HeckeInstance) -> AlgebraElement:
    """Reduced product; ``y`` is multiplied onto the reduced ``x`` letter by letter."""
    R = H.system
    return R.multiply(R.reduce(x), y)


def degenerate(x: AlgebraElement, H: HeckeInstance | BraidContext,
               c_to_one: bool = False) -> WreathSum:
    """Set hbar=0 and send each word to its wreath-product group element."""
    ctx = H.ctx if isinstance(H, HeckeInstance) else H
    if x.ring is not Ring.HBAR_C:
        raise TagMismatch("degenerate expects an element over Z[hbar, c^{+-1}]")
    out: dict[WreathElement, int] = {}
    for w, coef in x.terms.items():
        vectors, cw = winding_vector(w, ctx)
        perm = underlying_permutation(w, ctx)
        for (e, f), n in coef.terms.items():
            if e:
                continue
            g = WreathElement(vectors, perm, 0 if c_to_one else cw + f)
            out[g] = out.get(g, 0) + n
    return WreathSum(ctx, out)


def to_bsk(x: AlgebraElement) -> AlgebraElement:
    """Coefficientwise hbar -> s - s^-1."""
    if x.ring is not Ring.HBAR_C:
        raise TagMismatch("to_bsk expects an element over Z[hbar, c^{+-1}]")
    return x.map_coefficients(subst_hbar, Ring.S_C)


def enumerate_hecke_basis(H: HeckeInstance, degree_bound: int | None = None) -> list[Word]:
    """Reduced words of length <= ``degree_bound``.

    For the finite algebra the default bound is the length of the longest
    permutation, which already gives all k! basis words.
    """
    if degree_bound is None:
        if H.variant != "finite":
            raise ValueError("the affine and double affine bases are infinite; give a degree bound")
        degree_bound = H.kappa * (H.kappa - 1) // 2
    return enumerate_basis(H.system, degree_bound)
