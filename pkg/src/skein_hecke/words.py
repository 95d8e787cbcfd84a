"""
Words in the free group on the braid alphabet and formal sums of them.

Letters are stored as signed integer *atoms*:

    s_i  ->  i          (crossing between slots i and i+1)
    a_i  ->  1000 + i   (slot i travels once along the first 1-cycle)
    b_i  ->  2000 + i   (slot i travels once along the second 1-cycle)

and the inverse letter is the negated atom, so free reduction is a check for
``x == -y`` at the junction of a concatenation.  The central letter ``c`` is
not an atom: a :class:`Word` keeps its c-exponent in a separate field (it is
"sorted to the front").  Inside an :class:`AlgebraElement` the c-power is moved
into the coefficient, since c is a scalar of every coefficient ring.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from typing import NamedTuple

from .coeff import Coefficient, Ring
from .errors import AlphabetMismatch, TagMismatch, WordSyntaxError

__all__ = [
    "Generator",
    "atom",
    "atom_kind",
    "atom_index",
    "atom_name",
    "Word",
    "AlgebraElement",
    "word_concat",
    "elem_mul",
    "elem_add",
]

KIND_BASE = {"s": 0, "a": 1000, "b": 2000}
MAX_INDEX = 999


class Generator(NamedTuple):
    kind: str  # "s", "a", "b" or "c"
    index: int = 0

    def __str__(self):
        return "c" if self.kind == "c" else f"{self.kind}{self.index}"


def atom(kind: str, index: int, sign: int = 1) -> int:
    if kind not in KIND_BASE:
        raise ValueError(f"no atom for generator kind {kind!r}")
    if not 1 <= index <= MAX_INDEX:
        raise ValueError(f"generator index {index} out of range")
    return sign * (KIND_BASE[kind] + index)


def atom_kind(x: int) -> str:
    m = abs(x)
    return "s" if m < 1000 else ("a" if m < 2000 else "b")


def atom_index(x: int) -> int:
    return abs(x) % 1000


def atom_name(x: int) -> str:
    name = f"{atom_kind(x)}{atom_index(x)}"
    return name if x > 0 else name + "^-1"


def _free_reduce(atoms: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in atoms:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


_TOKEN = re.compile(r"([sabc])(\d*)(?:\^(-?\d+))?$")


class Word:
    """A freely reduced word ``c^k x_1 ... x_n``; immutable and hashable."""

    __slots__ = ("c", "atoms", "_hash")

    def __init__(self, atoms: Iterable[int] = (), c: int = 0):
        self.atoms = _free_reduce(atoms)
        self.c = int(c)
        self._hash = None

    @classmethod
    def _raw(cls, atoms: tuple[int, ...], c: int = 0) -> Word:
        obj = cls.__new__(cls)
        obj.atoms = atoms
        obj.c = c
        obj._hash = None
        return obj

    @classmethod
    def empty(cls) -> Word:
        return _EMPTY

    @classmethod
    def from_letters(cls, letters: Iterable[tuple[Generator, int]]) -> Word:
        """Build from ``(Generator, exponent)`` pairs, e.g. ``[(Generator('s', 1), -1)]``."""
        atoms: list[int] = []
        c = 0
        for gen, exp in letters:
            if gen.kind == "c":
                c += exp
                continue
            a = atom(gen.kind, gen.index)
            atoms.extend([a if exp > 0 else -a] * abs(exp))
        return cls(atoms, c)

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse whitespace-separated tokens ``s<i>``, ``a<i>``, ``b<i>``, ``c``
        with optional ``^<int>``.  No alphabet checking happens here."""
        atoms: list[int] = []
        c = 0
        for m in re.finditer(r"\S+", text):
            tok = m.group(0)
            t = _TOKEN.match(tok)
            if t is None:
                raise WordSyntaxError(f"bad token {tok!r}", m.start())
            kind, idx, exp = t.group(1), t.group(2), t.group(3)
            exp = 1 if exp is None else int(exp)
            if kind == "c":
                if idx:
                    raise WordSyntaxError(f"central letter takes no index: {tok!r}", m.start())
                c += exp
                continue
            if not idx:
                raise WordSyntaxError(f"missing index in {tok!r}", m.start())
            i = int(idx)
            if not 1 <= i <= MAX_INDEX:
                raise WordSyntaxError(f"index out of range in {tok!r}", m.start())
            a = atom(kind, i)
            atoms.extend([a if exp > 0 else -a] * abs(exp))
        return cls(atoms, c)

    @property
    def letters(self) -> list[tuple[Generator, int]]:
        """Run-length form, c first: ``[(Generator, exponent), ...]``."""
        out: list[tuple[Generator, int]] = []
        if self.c:
            out.append((Generator("c"), self.c))
        prev = None
        for x in self.atoms:
            gen = Generator(atom_kind(x), atom_index(x))
            step = 1 if x > 0 else -1
            if prev is not None and prev[0] == gen and (prev[1] > 0) == (step > 0):
                prev = (gen, prev[1] + step)
                out[-1] = prev
            else:
                prev = (gen, step)
                out.append(prev)
        return out

    def __len__(self):
        return len(self.atoms)

    def __bool__(self):
        return bool(self.atoms) or bool(self.c)

    def inverse(self) -> Word:
        return Word._raw(tuple(-x for x in reversed(self.atoms)), -self.c)

    def __mul__(self, other: Word) -> Word:
        return word_concat(self, other)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.c == other.c and self.atoms == other.atoms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.c, self.atoms))
        return self._hash

    def to_text(self) -> str:
        parts = []
        for gen, exp in self.letters:
            parts.append(str(gen) if exp == 1 else f"{gen}^{exp}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"Word({self.to_text()!r})"


_EMPTY = Word._raw((), 0)


def _check_alphabet(w: Word, alphabet) -> None:
    if alphabet is not None:
        bad = [x for x in w.atoms if x not in alphabet]
        if bad:
            raise AlphabetMismatch(f"letter {atom_name(bad[0])} is outside the alphabet")


def word_concat(u: Word, v: Word, alphabet=None) -> Word:
    """Concatenate, cancelling ``x x^-1`` at the junction and merging c-powers.

    ``alphabet``, if given, is a set of atoms both words must draw from.
    """
    if alphabet is not None:
        _check_alphabet(u, alphabet)
        _check_alphabet(v, alphabet)
    a, b = u.atoms, v.atoms
    i, j = len(a), 0
    while i and j < len(b) and a[i - 1] == -b[j]:
        i -= 1
        j += 1
    return Word._raw(a[:i] + b[j:], u.c + v.c)


class AlgebraElement:
    """A finite sum ``sum coeff * word`` with all c-powers held in the coefficients.

    Terms are kept in a dict ``Word -> Coefficient`` with no zero coefficients.
    Treat instances as immutable.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring = Ring.HBAR_C, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Coefficient] = {}
        for w, coef in items:
            if isinstance(coef, int):
                coef = Coefficient.integer(coef, ring)
            if coef.ring is not ring:
                raise TagMismatch(f"coefficient in {coef.ring.value}, element in {ring.value}")
            if w.c:
                coef = coef * Coefficient.c(w.c, ring)
                w = Word._raw(w.atoms, 0)
            _accumulate(acc, w, coef)
        self.ring = ring
        self.terms = acc

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> AlgebraElement:
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, ring: Ring = Ring.HBAR_C) -> AlgebraElement:
        return cls._raw(ring, {})

    @classmethod
    def one(cls, ring: Ring = Ring.HBAR_C) -> AlgebraElement:
        return cls._raw(ring, {_EMPTY: Coefficient.one(ring)})

    @classmethod
    def from_word(cls, w: Word | str, coef: Coefficient | int = 1,
                  ring: Ring = Ring.HBAR_C) -> AlgebraElement:
        if isinstance(w, str):
            w = Word.parse(w)
        if isinstance(coef, Coefficient):
            ring = coef.ring
        return cls(ring, [(w, coef)])

    @classmethod
    def scalar(cls, coef: Coefficient) -> AlgebraElement:
        return cls(coef.ring, [(_EMPTY, coef)])

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Word]:
        return list(self.terms)

    def coefficient(self, w: Word | str) -> Coefficient:
        if isinstance(w, str):
            w = Word.parse(w)
        if w.c:
            return self.coefficient(Word._raw(w.atoms)) * Coefficient.c(-w.c, self.ring)
        return self.terms.get(w, Coefficient.zero(self.ring))

    def map_coefficients(self, fn, ring: Ring | None = None) -> AlgebraElement:
        out: dict[Word, Coefficient] = {}
        target = ring
        for w, coef in self.terms.items():
            new = fn(coef)
            target = new.ring
            if not new.is_zero():
                out[w] = new
        return AlgebraElement._raw(target if target is not None else self.ring, out)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            if other.ring is not self.ring:
                raise TagMismatch(f"cannot combine {self.ring.value} with {other.ring.value}")
            return other
        if isinstance(other, (int, Coefficient)):
            if isinstance(other, int):
                other = Coefficient.integer(other, self.ring)
            return AlgebraElement.scalar(other) if not other.is_zero() else AlgebraElement.zero(self.ring)
        if isinstance(other, Word):
            return AlgebraElement(self.ring, [(other, 1)])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, coef in other.terms.items():
            _accumulate(out, w, coef)
        return AlgebraElement._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw(self.ring, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, coef: Coefficient | int) -> AlgebraElement:
        if isinstance(coef, int):
            coef = Coefficient.integer(coef, self.ring)
        if coef.ring is not self.ring:
            raise TagMismatch("scalar from a different ring")
        if coef.is_zero():
            return AlgebraElement.zero(self.ring)
        return AlgebraElement._raw(self.ring, {w: c * coef for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Word, Coefficient] = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                _accumulate(out, word_concat(u, v), cu * cv)
        return AlgebraElement._raw(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __eq__(self, other):
        if isinstance(other, (int, Coefficient, Word)):
            other = self._coerce(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- rendering --------------------------------------------------------
    def sorted_terms(self, key=None) -> list[tuple[Word, Coefficient]]:
        """Terms largest-first; default key is degree then letter codes."""
        if key is None:
            key = lambda w: (len(w.atoms), tuple(abs(x) * 2 + (x < 0) for x in w.atoms))
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    def to_text(self, key=None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, coef in self.sorted_terms(key):
            if not w.atoms:
                parts.append(str(coef) if len(coef.terms) == 1 and coef.terms.get((0, 0)) else f"({coef})")
            elif coef.is_one():
                parts.append(w.to_text())
            else:
                parts.append(f"({coef})*{w.to_text()}")
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"AlgebraElement({self.to_text()!r})"

    def to_json(self, key=None) -> dict:
        return {
            "ring": self.ring.value,
            "terms": [{"coeff": coef.to_json(), "word": w.to_text()}
                      for w, coef in self.sorted_terms(key)],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> AlgebraElement:
        ring = Ring(doc["ring"])
        return cls(ring, [(Word.parse(t["word"]), Coefficient.from_json(t["coeff"]))
                          for t in doc["terms"]])


def _accumulate(acc: dict, w: Word, coef: Coefficient) -> None:
    old = acc.get(w)
    if old is None:
        if coef.terms:
            acc[w] = coef
        return
    new = old + coef
    if new.terms:
        acc[w] = new
    else:
        del acc[w]


def elem_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.ring is not y.ring:
        raise TagMismatch(f"cannot add {x.ring.value} and {y.ring.value}")
    return x + y


def elem_mul(x: AlgebraElement, y: AlgebraElement, alphabet=None) -> AlgebraElement:
    if x.ring is not y.ring:
        raise TagMismatch(f"cannot multiply {x.ring.value} and {y.ring.value}")
    if alphabet is not None:
        for w in (*x.terms, *y.terms):
            _check_alphabet(w, alphabet)
    return x * y
