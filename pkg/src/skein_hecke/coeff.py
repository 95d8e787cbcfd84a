"""
Exact coefficient rings.

Three rings are in play:

* ``Ring.HBAR_C`` -- Z[hbar, c^{+-1}], the ring over which the surface Hecke
  algebra is defined (hbar polynomial, c Laurent);
* ``Ring.S_C`` -- Z[s^{+-1}, c^{+-1}], the braid skein coefficients;
* ``Ring.INT`` -- Z, what is left after setting hbar=0 and c=1.

A :class:`Coefficient` is a sparse map ``(e_primary, e_c) -> n`` with no zero
entries, so structural equality is ring equality.  The "primary" variable is
hbar or s depending on the ring.

>>> h = Coefficient.hbar()
>>> (h + Coefficient.one()) * h
hbar^2 + hbar
>>> subst_hbar(h * h)
s^2 - 2 + s^-2
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping

from .errors import TagMismatch

__all__ = [
    "Ring",
    "Coefficient",
    "coeff_add",
    "coeff_mul",
    "subst_hbar",
    "specialize",
]


class Ring(enum.Enum):
    HBAR_C = "hbar_c"
    S_C = "s_c"
    INT = "int"

    @property
    def primary(self) -> str:
        return {"hbar_c": "hbar", "s_c": "s", "int": ""}[self.value]


class Coefficient:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean: dict[tuple[int, int], int] = {}
        for (e, f), n in items:
            if n:
                key = (int(e), int(f))
                clean[key] = clean.get(key, 0) + int(n)
        clean = {k: v for k, v in clean.items() if v}
        if ring is Ring.HBAR_C:
            if any(e < 0 for e, _ in clean):
                raise ValueError("hbar must appear with non-negative exponent")
        elif ring is Ring.INT:
            if any(k != (0, 0) for k in clean):
                raise ValueError("integer coefficients carry no variables")
        self.ring = ring
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, ring, terms):
        # terms already canonical
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ring: Ring = Ring.HBAR_C) -> Coefficient:
        return cls._raw(ring, {})

    @classmethod
    def one(cls, ring: Ring = Ring.HBAR_C) -> Coefficient:
        return cls._raw(ring, {(0, 0): 1})

    @classmethod
    def integer(cls, n: int, ring: Ring = Ring.HBAR_C) -> Coefficient:
        return cls(ring, {(0, 0): n})

    @classmethod
    def monomial(cls, ring: Ring, e_primary: int = 0, e_c: int = 0, n: int = 1) -> Coefficient:
        return cls(ring, {(e_primary, e_c): n})

    @classmethod
    def hbar(cls, power: int = 1) -> Coefficient:
        return cls.monomial(Ring.HBAR_C, power, 0)

    @classmethod
    def s(cls, power: int = 1) -> Coefficient:
        return cls.monomial(Ring.S_C, power, 0)

    @classmethod
    def c(cls, power: int = 1, ring: Ring = Ring.HBAR_C) -> Coefficient:
        if ring is Ring.INT:
            return cls.one(Ring.INT)
        return cls.monomial(ring, 0, power)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): 1}

    def is_unit(self) -> bool:
        """Units of all three rings are +-c^k (just +-1 for Z and hbar-free)."""
        if len(self.terms) != 1:
            return False
        ((e, f), n), = self.terms.items()
        if n not in (1, -1):
            return False
        if self.ring is Ring.S_C:
            return True
        return e == 0

    def inverse(self) -> Coefficient:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit")
        ((e, f), n), = self.terms.items()
        return Coefficient._raw(self.ring, {(-e, -f): n})

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: Coefficient) -> None:
        if self.ring is not other.ring:
            raise TagMismatch(f"cannot combine {self.ring.value} with {other.ring.value}")

    def _coerce(self, other) -> Coefficient:
        if isinstance(other, Coefficient):
            self._check(other)
            return other
        if isinstance(other, int):
            return Coefficient.integer(other, self.ring)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                del out[k]
        return Coefficient._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient._raw(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return Coefficient._raw(self.ring, {})
        if len(b) == 1:
            ((e2, f2), n2), = b.items()
            return Coefficient._raw(
                self.ring, {(e + e2, f + f2): n * n2 for (e, f), n in a.items()})
        out: dict[tuple[int, int], int] = {}
        for (e1, f1), n1 in a.items():
            for (e2, f2), n2 in b.items():
                k = (e1 + e2, f1 + f2)
                w = out.get(k, 0) + n1 * n2
                if w:
                    out[k] = w
                else:
                    del out[k]
        return Coefficient._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Coefficient:
        if n < 0:
            return self.inverse() ** (-n)
        out = Coefficient.one(self.ring)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Coefficient.integer(other, self.ring)
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- rendering --------------------------------------------------------
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        var = self.ring.primary
        pieces = []
        for (e, f), n in sorted(self.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            mono = []
            if e:
                mono.append(var if e == 1 else f"{var}^{e}")
            if f:
                mono.append("c" if f == 1 else f"c^{f}")
            body = "*".join(mono)
            mag = abs(n)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            pieces.append((n < 0, text))
        neg, first = pieces[0]
        out = ("-" if neg else "") + first
        for neg, text in pieces[1:]:
            out += (" - " if neg else " + ") + text
        return out

    __str__ = to_text

    def __repr__(self):
        return self.to_text()

    def to_json(self) -> dict:
        return {
            "ring": self.ring.value,
            "terms": [{"e": [e, f], "n": n} for (e, f), n in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> Coefficient:
        ring = Ring(doc["ring"])
        return cls(ring, [((t["e"][0], t["e"][1]), t["n"]) for t in doc["terms"]])


def coeff_add(a: Coefficient, b: Coefficient) -> Coefficient:
    a._check(b)
    return a + b


def coeff_mul(a: Coefficient, b: Coefficient) -> Coefficient:
    a._check(b)
    return a * b


def _binomial_row(n: int) -> list[int]:
    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return row


def subst_hbar(p: Coefficient) -> Coefficient:
    """Image of ``p`` under hbar -> s - s^{-1}, c -> c."""
    if p.ring is not Ring.HBAR_C:
        raise TagMismatch("subst_hbar needs a Z[hbar, c^{+-1}] coefficient")
    out: dict[tuple[int, int], int] = {}
    for (e, f), n in p.terms.items():
        # (s - s^-1)^e = sum_k binom(e, k) (-1)^k s^(e - 2k)
        for k, b in enumerate(_binomial_row(e)):
            key = (e - 2 * k, f)
            w = out.get(key, 0) + (-b if k % 2 else b) * n
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return Coefficient._raw(Ring.S_C, out)


def specialize(p: Coefficient, hbar_to_zero: bool = True, c_to_one: bool = False) -> Coefficient:
    """Set hbar=0 and/or c=1.  Both flags together land in ``Ring.INT``."""
    if p.ring is not Ring.HBAR_C:
        raise TagMismatch("specialize needs a Z[hbar, c^{+-1}] coefficient")
    out: dict[tuple[int, int], int] = {}
    for (e, f), n in p.terms.items():
        if hbar_to_zero and e:
            continue
        key = (e, 0 if c_to_one else f)
        out[key] = out.get(key, 0) + n
    out = {k: v for k, v in out.items() if v}
    ring = Ring.INT if (hbar_to_zero and c_to_one) else Ring.HBAR_C
    return Coefficient._raw(ring, out)
