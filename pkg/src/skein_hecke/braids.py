"""
Surfaces, braid alphabets, the word parser, and the group-level projections.

Conventions (fixed once, used everywhere):

* ``s_i`` exchanges the strands in slots i and i+1; ``s_i`` is the positive
  crossing of the skein relation ``s_i - s_i^-1 = hbar``.
* ``a_i`` / ``b_i`` carry the strand currently in slot i once around the
  first / second 1-cycle of the surface (only ``a`` on the cylinder).
* ``c`` is central.  On the torus the two loops of one strand satisfy
  ``b a = c^2 a b``: commuting ``b`` past ``a`` sweeps the strand once around
  the marked point, which costs ``c^2``.

The projections below read a word left to right, tracking which strand
(labelled by its starting slot) sits in each slot.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import IllegalGenerator
from .words import Word, atom, atom_index, atom_kind

__all__ = [
    "SURFACES",
    "Surface",
    "BraidContext",
    "Permutation",
    "parse_word",
    "print_word",
    "underlying_permutation",
    "winding_vector",
]

SURFACES = ("disk", "cylinder", "torus")
LOOP_DIM = {"disk": 0, "cylinder": 1, "torus": 2}
LOOP_KINDS = {"disk": (), "cylinder": ("a",), "torus": ("a", "b")}


@dataclass(frozen=True)
class Surface:
    kind: str
    marked_point: bool = False

    def __post_init__(self):
        if self.kind not in SURFACES:
            raise ValueError(f"unknown surface {self.kind!r}; expected one of {SURFACES}")

    @classmethod
    def named(cls, kind: str, marked_point: bool | None = None) -> Surface:
        if marked_point is None:
            marked_point = kind == "torus"
        return cls(kind, marked_point)

    @property
    def loop_dim(self) -> int:
        return LOOP_DIM[self.kind]

    @property
    def loop_kinds(self) -> tuple[str, ...]:
        return LOOP_KINDS[self.kind]


@dataclass(frozen=True)
class BraidContext:
    surface: Surface
    kappa: int

    def __post_init__(self):
        if self.kappa < 1:
            raise ValueError("kappa must be at least 1")

    @classmethod
    def of(cls, surface: str, kappa: int, marked_point: bool | None = None) -> BraidContext:
        return cls(Surface.named(surface, marked_point), kappa)

    @property
    def alphabet(self) -> frozenset[int]:
        """Signed atoms legal in this context (c is handled separately)."""
        out = set()
        for i in range(1, self.kappa):
            out.update((atom("s", i), -atom("s", i)))
        for kind in self.surface.loop_kinds:
            for i in range(1, self.kappa + 1):
                out.update((atom(kind, i), -atom(kind, i)))
        return frozenset(out)

    def check(self, w: Word) -> None:
        if w.c and not self.surface.marked_point:
            raise IllegalGenerator(f"c needs a marked point; {self.surface.kind} has none here")
        for x in w.atoms:
            kind, i = atom_kind(x), atom_index(x)
            if kind == "s":
                if i >= self.kappa:
                    raise IllegalGenerator(f"s{i} needs kappa > {i} (kappa is {self.kappa})")
            elif kind not in self.surface.loop_kinds:
                raise IllegalGenerator(f"{kind}{i} is not a loop of the {self.surface.kind}")
            elif i > self.kappa:
                raise IllegalGenerator(f"{kind}{i} needs kappa >= {i} (kappa is {self.kappa})")

    def to_json(self) -> dict:
        return {"surface": self.surface.kind, "kappa": self.kappa,
                "marked_point": self.surface.marked_point}

    @classmethod
    def from_json(cls, doc) -> BraidContext:
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(Surface(doc["surface"], bool(doc.get("marked_point", doc["surface"] == "torus"))),
                   int(doc["kappa"]))


@dataclass(frozen=True)
class Permutation:
    """``images[j-1]`` is the image of j; composition is ``(p * q)(j) = p(q(j))``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = img[j - 1], img[i - 1]
        return cls(tuple(img))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for j, k in enumerate(self.images, 1):
            inv[k - 1] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, len(self.images) + 1))

    def __len__(self):
        return len(self.images)


def parse_word(text: str, ctx: BraidContext) -> Word:
    """Parse ``text`` and check every letter against ``ctx``.

    >>> ctx = BraidContext.of("torus", 3)
    >>> print_word(parse_word("s1^-1 a1^2 c^2 s2", ctx))
    'c^2 s1^-1 a1^2 s2'
    """
    w = Word.parse(text)
    ctx.check(w)
    return w


def print_word(w: Word) -> str:
    return w.to_text()


def underlying_permutation(w: Word, ctx: BraidContext) -> Permutation:
    """Image in S_kappa: slot j ends up holding the strand that started in ``images[j-1]``."""
    occ = list(range(1, ctx.kappa + 1))
    for x in w.atoms:
        if x > -1000 and x < 1000:
            i = abs(x)
            occ[i - 1], occ[i] = occ[i], occ[i - 1]
    return Permutation(tuple(occ))


def winding_vector(w: Word, ctx: BraidContext) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Per-strand loop classes and the c-exponent, read off letter by letter.

    On the torus each strand's class is kept in the normal form ``a^x b^y``;
    an ``a``-letter arriving after ``b``-letters on the same strand is moved
    left past them, which picks up ``c^(2 * y)`` per ``a``.  On the disk and
    cylinder that correction never fires and the c-exponent is just the count
    of ``c`` letters.
    """
    dim = ctx.surface.loop_dim
    vec = [[0] * dim for _ in range(ctx.kappa)]
    occ = list(range(ctx.kappa))
    cexp = w.c
    for x in w.atoms:
        kind, i = atom_kind(x), atom_index(x)
        sign = 1 if x > 0 else -1
        if kind == "s":
            occ[i - 1], occ[i] = occ[i], occ[i - 1]
        elif kind == "a":
            v = vec[occ[i - 1]]
            if dim == 2:
                cexp += 2 * v[1] * sign
            v[0] += sign
        else:
            vec[occ[i - 1]][1] += sign
    return tuple(tuple(v) for v in vec), cexp


def random_word(rng, ctx: BraidContext, length: int, max_exp: int = 3,
                with_c: bool = True) -> Word:
    """A random legal word of at most ``length`` letters.

    Letters come in runs ``x^e`` with ``1 <= |e| <= max_exp``, and neighbouring
    runs use different generators, so nothing merges or cancels.  With a
    single generator the word is one run.
    """
    gens: list[tuple[str, int]] = [("s", i) for i in range(1, ctx.kappa)]
    for kind in ctx.surface.loop_kinds:
        gens.extend((kind, i) for i in range(1, ctx.kappa + 1))
    atoms: list[int] = []
    prev = None
    while gens and len(atoms) < length:
        if prev is not None and len(gens) == 1:
            break
        kind, i = gens[rng.randrange(len(gens))]
        if (kind, i) == prev:
            continue
        prev = (kind, i)
        e = min(rng.randint(1, max_exp), length - len(atoms)) * rng.choice((1, -1))
        a = atom(kind, i)
        atoms.extend([a if e > 0 else -a] * abs(e))
    c = rng.randint(-max_exp, max_exp) if (with_c and ctx.surface.marked_point) else 0
    return Word(atoms, c)


def letters_of(ctx: BraidContext) -> Sequence[str]:
    out = [f"s{i}" for i in range(1, ctx.kappa)]
    for kind in ctx.surface.loop_kinds:
        out.extend(f"{kind}{i}" for i in range(1, ctx.kappa + 1))
    if ctx.surface.marked_point:
        out.append("c")
    return out
