"""
Oriented rewriting of algebra elements, plus diamond-lemma bookkeeping.

A :class:`RewriteSystem` is a list of rules ``lhs -> rhs`` (``lhs`` a word,
``rhs`` an element whose support lies strictly below ``lhs`` in a fixed
:class:`MonomialOrder`).  :func:`reduce` rewrites until no term contains a
left-hand side.  Words live in the free group, so for every letter whose
inverse is in the alphabet the system also carries the cancellation rules
``x x^-1 -> 1``; words are always stored freely reduced, so these only ever
matter when ambiguities are enumerated.

:func:`complete` is an offline helper that turns a list of relations into a
rule list by Buchberger/Knuth-Bendix style completion.  It is how the shipped
presentation files were produced; nothing calls it during reduction.
"""

from __future__ import annotations

import itertools
import sys
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .coeff import Coefficient, Ring
from .errors import AlphabetMismatch, OrderViolation, StepCapExceeded, TagMismatch
from .words import AlgebraElement, Word, atom_name, word_concat

__all__ = [
    "MonomialOrder",
    "RewriteRule",
    "RewriteSystem",
    "Ambiguity",
    "ConfluenceFailure",
    "ConfluenceReport",
    "reduce",
    "find_ambiguities",
    "confluence_check",
    "enumerate_basis",
    "orient",
    "complete",
]

DEFAULT_STEP_CAP = 10**6
STRATEGIES = ("leftmost", "rightmost")


class MonomialOrder:
    """Total order on words.

    Words are compared by the tuple

        (count of letters in classes[0], ..., count in classes[-1],
         inversions, length, ranks of the letters in order)

    where ``inversions`` counts position pairs ``i < j`` with ``w[i]`` in
    ``inversion_pair[0]`` and ``w[j]`` in ``inversion_pair[1]``.  With no
    classes this is plain degree-lexicographic order.  The inversion count is
    only compatible with multiplication when both halves of the pair are
    unions of the counted classes; the constructor enforces that.
    """

    def __init__(self, precedence: Sequence[int], classes: Sequence[Iterable[int]] = (),
                 inversion_pair: tuple[Iterable[int], Iterable[int]] | None = None):
        self.precedence = tuple(precedence)
        if len(set(self.precedence)) != len(self.precedence):
            raise ValueError("precedence lists a letter twice")
        self.rank = {x: i for i, x in enumerate(self.precedence)}
        self.classes = tuple(frozenset(c) for c in classes)
        if inversion_pair is not None:
            left, right = (frozenset(p) for p in inversion_pair)
            for part in (left, right):
                if not any(part == frozenset().union(*combo)
                           for r in range(1, len(self.classes) + 1)
                           for combo in itertools.combinations(self.classes, r)):
                    raise ValueError("inversion sets must be unions of counted classes")
            self.inversion_pair = (left, right)
        else:
            self.inversion_pair = None
        self._cache: dict[tuple[int, ...], tuple[int, ...]] = {}

    def key(self, w: Word | tuple[int, ...]) -> tuple[int, ...]:
        atoms = w.atoms if isinstance(w, Word) else w
        k = self._cache.get(atoms)
        if k is not None:
            return k
        try:
            ranks = [self.rank[x] for x in atoms]
        except KeyError as exc:
            raise AlphabetMismatch(f"letter {atom_name(exc.args[0])} has no precedence") from None
        head = [sum(1 for x in atoms if x in cls) for cls in self.classes]
        if self.inversion_pair is not None:
            left, right = self.inversion_pair
            seen = inv = 0
            for x in atoms:
                if x in right:
                    inv += seen
                if x in left:
                    seen += 1
            head.append(inv)
        else:
            head.append(0)
        head.append(len(atoms))
        k = tuple(head) + tuple(ranks)
        if len(self._cache) > 500_000:
            self._cache.clear()
        self._cache[atoms] = k
        return k

    def less(self, u: Word, v: Word) -> bool:
        return self.key(u) < self.key(v)

    def leading(self, x: AlgebraElement) -> Word:
        return max(x.terms, key=self.key)

    def to_json(self) -> dict:
        doc = {"precedence": [atom_name(x) for x in self.precedence]}
        if self.classes:
            doc["classes"] = [sorted(atom_name(x) for x in c) for c in self.classes]
        if self.inversion_pair:
            doc["inversions"] = [sorted(atom_name(x) for x in p) for p in self.inversion_pair]
        return doc


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: AlgebraElement

    def relation(self) -> AlgebraElement:
        """``lhs - rhs``, which is zero in the quotient."""
        return AlgebraElement.from_word(self.lhs, Coefficient.one(self.rhs.ring)) - self.rhs

    def __str__(self):
        return f"{self.lhs} -> {self.rhs}"


class RewriteSystem:
    """Immutable rule set over a fixed alphabet, ring and monomial order."""

    def __init__(self, rules: Iterable[RewriteRule], order: MonomialOrder,
                 ring: Ring = Ring.HBAR_C, alphabet: Iterable[int] | None = None,
                 step_cap: int = DEFAULT_STEP_CAP, name: str = ""):
        self.rules = tuple(rules)
        self.order = order
        self.ring = ring
        self.step_cap = int(step_cap)
        if self.step_cap <= 0:
            raise ValueError("step_cap must be positive")
        self.name = name
        if alphabet is None:
            alphabet = {x for r in self.rules for w in (r.lhs, *r.rhs.terms) for x in w.atoms}
        self.alphabet = frozenset(alphabet)
        for i, rule in enumerate(self.rules):
            if rule.lhs.c or not rule.lhs.atoms:
                raise OrderViolation(f"rule {i} has an empty or c-bearing left side")
            if rule.rhs.ring is not ring:
                raise TagMismatch(f"rule {i} has coefficients in {rule.rhs.ring.value}")
            top = order.key(rule.lhs)
            for w in rule.rhs.terms:
                if not order.key(w) < top:
                    raise OrderViolation(f"rule {i}: {w} is not below {rule.lhs}")
        free = []
        one = AlgebraElement.one(ring)
        for x in sorted(self.alphabet, key=lambda x: (abs(x), x < 0)):
            if -x in self.alphabet:
                free.append(RewriteRule(Word._raw((x, -x)), one))
        self.free_rules = tuple(free)
        self.table: dict[tuple[int, ...], AlgebraElement] = {}
        for rule in self.rules:
            self.table.setdefault(rule.lhs.atoms, rule.rhs)
        self.lengths = tuple(sorted({len(k) for k in self.table}))
        self._one = Coefficient.one(ring)
        # (reduced word, letter) -> reduced form of their product, per strategy
        self._append_cache: dict[tuple[tuple[int, ...], int], dict] = {}
        self._prepend_cache: dict[tuple[int, tuple[int, ...]], dict] = {}
        self._nf_cache: dict[tuple[str, tuple[int, ...]], dict] = {}

    @property
    def all_rules(self) -> tuple[RewriteRule, ...]:
        """User rules followed by the implicit cancellation rules."""
        return self.rules + self.free_rules

    @property
    def max_lhs(self) -> int:
        return max((len(r.lhs) for r in self.all_rules), default=0)

    def map_coefficients(self, fn, ring: Ring, name: str | None = None) -> RewriteSystem:
        """Push every right-hand side through a coefficient homomorphism."""
        rules = [RewriteRule(r.lhs, r.rhs.map_coefficients(fn, ring)) for r in self.rules]
        return RewriteSystem(rules, self.order, ring, self.alphabet, self.step_cap,
                             name if name is not None else self.name)

    def with_step_cap(self, step_cap: int) -> RewriteSystem:
        return RewriteSystem(self.rules, self.order, self.ring, self.alphabet, step_cap, self.name)

    def is_reduced_word(self, w: Word) -> bool:
        atoms = w.atoms
        for L in self.lengths:
            for i in range(len(atoms) - L + 1):
                if atoms[i:i + L] in self.table:
                    return False
        return True

    # -- reduction --------------------------------------------------------
    # Leftmost-innermost reduction of a word is the same as multiplying its
    # letters onto the empty word one at a time: once a prefix is reduced, the
    # leftmost-innermost redex is the shortest suffix of (prefix + next letter)
    # that is a left side.  Rightmost-innermost mirrors this from the right.
    # Both are memoised on (reduced word, letter).

    def _append(self, u: tuple[int, ...], x: int, budget: _Budget) -> dict:
        key = (u, x)
        hit = self._append_cache.get(key)
        if hit is not None:
            return hit
        if u and u[-1] == -x:
            out = {u[:-1]: self._one}
        else:
            w = u + (x,)
            out = None
            for L in self.lengths:
                if L > len(w):
                    break
                rhs = self.table.get(w[-L:])
                if rhs is not None:
                    budget.tick(w)
                    p = w[:-L]
                    out = {}
                    for r, c in rhs.terms.items():
                        _merge(out, self._fold_right({p: c}, r.atoms, budget))
                    break
            if out is None:
                out = {w: self._one}
        if len(self._append_cache) > 2_000_000:
            self._append_cache.clear()
        self._append_cache[key] = out
        return out

    def _prepend(self, x: int, u: tuple[int, ...], budget: _Budget) -> dict:
        key = (x, u)
        hit = self._prepend_cache.get(key)
        if hit is not None:
            return hit
        if u and u[0] == -x:
            out = {u[1:]: self._one}
        else:
            w = (x,) + u
            out = None
            for L in self.lengths:
                if L > len(w):
                    break
                rhs = self.table.get(w[:L])
                if rhs is not None:
                    budget.tick(w)
                    p = w[L:]
                    out = {}
                    for r, c in rhs.terms.items():
                        _merge(out, self._fold_left({p: c}, r.atoms, budget))
                    break
            if out is None:
                out = {w: self._one}
        if len(self._prepend_cache) > 2_000_000:
            self._prepend_cache.clear()
        self._prepend_cache[key] = out
        return out

    def _fold_right(self, E: dict, atoms: tuple[int, ...], budget: _Budget) -> dict:
        one = self._one
        for x in atoms:
            new: dict = {}
            for u, c in E.items():
                for v, d in self._append(u, x, budget).items():
                    _acc(new, v, c if d is one else c * d)
            E = new
        return E

    def _fold_left(self, E: dict, atoms: tuple[int, ...], budget: _Budget) -> dict:
        one = self._one
        for x in reversed(atoms):
            new: dict = {}
            for u, c in E.items():
                for v, d in self._prepend(x, u, budget).items():
                    _acc(new, v, c if d is one else c * d)
            E = new
        return E

    def _nf_atoms(self, atoms: tuple[int, ...], strategy: str, budget: _Budget) -> dict:
        key = (strategy, atoms)
        hit = self._nf_cache.get(key)
        if hit is not None:
            return hit
        if strategy == "leftmost":
            out = self._fold_right({(): self._one}, atoms, budget)
        elif strategy == "rightmost":
            out = self._fold_left({(): self._one}, atoms, budget)
        else:
            raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
        if len(self._nf_cache) > 500_000:
            self._nf_cache.clear()
        self._nf_cache[key] = out
        return out

    def _check_input(self, x: AlgebraElement) -> None:
        if x.ring is not self.ring:
            raise TagMismatch(f"element over {x.ring.value}, system over {self.ring.value}")
        for w in x.terms:
            for a in w.atoms:
                if a not in self.alphabet:
                    raise AlphabetMismatch(f"letter {atom_name(a)} is not in the alphabet of {self.name or 'the system'}")

    def _finish(self, acc: dict) -> AlgebraElement:
        return AlgebraElement._raw(self.ring, {Word._raw(k): c for k, c in acc.items()})

    def normal_form(self, w: Word, strategy: str = "leftmost") -> AlgebraElement:
        """Reduced form of a single word."""
        with _Budget(self) as budget:
            out = self._finish(self._nf_atoms(w.atoms, strategy, budget))
        if w.c:
            out = out.scale(Coefficient.c(w.c, self.ring))
        return out

    def reduce(self, x: AlgebraElement, strategy: str = "leftmost") -> AlgebraElement:
        self._check_input(x)
        acc: dict = {}
        with _Budget(self) as budget:
            for w, coef in x.terms.items():
                nf = self._nf_atoms(w.atoms, strategy, budget)
                for v, d in nf.items():
                    _acc(acc, v, coef * d)
        return self._finish(acc)

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """Reduced form of ``x * y`` when ``x`` is already reduced."""
        self._check_input(x)
        self._check_input(y)
        acc: dict = {}
        with _Budget(self) as budget:
            for v, cv in y.terms.items():
                start = {}
                for u, cu in x.terms.items():
                    _acc(start, u.atoms, cu * cv)
                _merge(acc, self._fold_right(start, v.atoms, budget))
        return self._finish(acc)

    def __repr__(self):
        return f"RewriteSystem({self.name or 'anonymous'}, {len(self.rules)} rules)"


class _Budget:
    """Counts rule applications in one top-level call."""

    RECURSION = 50_000

    def __init__(self, R: RewriteSystem):
        self.cap = R.step_cap
        self.name = R.name
        self.steps = 0

    def __enter__(self):
        self._old = sys.getrecursionlimit()
        if self._old < self.RECURSION:
            sys.setrecursionlimit(self.RECURSION)
        return self

    def __exit__(self, *exc):
        sys.setrecursionlimit(self._old)
        if exc[0] is RecursionError:
            raise StepCapExceeded(self.cap, None, f"{self.name}: rewrite chain too deep") from exc[1]
        return False

    def tick(self, w: tuple[int, ...]) -> None:
        self.steps += 1
        if self.steps > self.cap:
            raise StepCapExceeded(self.cap, " ".join(atom_name(x) for x in w), self.name)


def _acc(acc: dict, k, coef: Coefficient) -> None:
    old = acc.get(k)
    if old is None:
        if coef.terms:
            acc[k] = coef
        return
    new = old + coef
    if new.terms:
        acc[k] = new
    else:
        del acc[k]


def _merge(acc: dict, other: dict) -> None:
    for k, c in other.items():
        _acc(acc, k, c)


def reduce(x: AlgebraElement, R: RewriteSystem, strategy: str = "leftmost") -> AlgebraElement:
    """Normal form of ``x``; raises :class:`StepCapExceeded` rather than truncating."""
    return R.reduce(x, strategy)


# -- ambiguities ----------------------------------------------------------

@dataclass(frozen=True)
class Ambiguity:
    word: Word           # superposition, stored without free reduction
    first: int           # rule index applied at ``first_pos``
    second: int
    first_pos: int
    second_pos: int
    kind: str            # "overlap" or "inclusion"

    def as_tuple(self) -> tuple[Word, int, int]:
        return (self.word, self.first, self.second)


def _ambiguities(R: RewriteSystem, max_len: int) -> list[Ambiguity]:
    rules = R.all_rules
    lhs = [r.lhs.atoms for r in rules]
    out: list[Ambiguity] = []
    for i, li in enumerate(lhs):
        for j, lj in enumerate(lhs):
            # overlaps: proper suffix of li == proper prefix of lj
            for k in range(1, min(len(li), len(lj))):
                if li[-k:] == lj[:k]:
                    sup = li + lj[k:]
                    if len(sup) <= max_len:
                        out.append(Ambiguity(Word._raw(sup), i, j, 0, len(li) - k, "overlap"))
            # inclusions: lj sits inside li
            if i == j or len(lj) > len(li) or len(li) > max_len:
                continue
            if li == lj and j < i:
                continue
            for p in range(len(li) - len(lj) + 1):
                if li[p:p + len(lj)] == lj:
                    out.append(Ambiguity(Word._raw(li), i, j, 0, p, "inclusion"))
    out.sort(key=lambda a: (len(a.word.atoms), a.word.atoms, a.first, a.second, a.second_pos))
    return out


def find_ambiguities(R: RewriteSystem, max_len: int) -> list[tuple[Word, int, int]]:
    """Overlap and inclusion ambiguities with superposition length <= ``max_len``.

    Rule indices refer to ``R.all_rules``.
    """
    if max_len < R.max_lhs:
        raise ValueError(f"max_len {max_len} is shorter than the longest left side ({R.max_lhs})")
    return [a.as_tuple() for a in _ambiguities(R, max_len)]


@dataclass
class ConfluenceFailure:
    ambiguity: Ambiguity
    left: AlgebraElement
    right: AlgebraElement

    def to_json(self) -> dict:
        a = self.ambiguity
        return {
            "word": " ".join(atom_name(x) for x in a.word.atoms),
            "rules": [a.first, a.second],
            "kind": a.kind,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }


@dataclass
class ConfluenceReport:
    system: str
    max_len: int
    checked: int
    failures: list[ConfluenceFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __len__(self):
        return len(self.failures)

    def __iter__(self):
        return iter(self.failures)

    def to_json(self) -> dict:
        return {
            "system": self.system,
            "max_len": self.max_len,
            "ambiguities_checked": self.checked,
            "confluent": self.ok,
            "failures": [f.to_json() for f in self.failures],
        }


def _resolve(R: RewriteSystem, sup: tuple[int, ...], rule: RewriteRule, pos: int) -> AlgebraElement:
    pre = AlgebraElement.from_word(Word(sup[:pos]), Coefficient.one(R.ring))
    post = AlgebraElement.from_word(Word(sup[pos + len(rule.lhs.atoms):]), Coefficient.one(R.ring))
    return pre * rule.rhs * post


def confluence_check(R: RewriteSystem, max_len: int) -> ConfluenceReport:
    """Resolve every ambiguity both ways; the report lists those that disagree."""
    rules = R.all_rules
    amb = _ambiguities(R, max_len)
    report = ConfluenceReport(R.name, max_len, len(amb))
    for a in amb:
        sup = a.word.atoms
        try:
            left = R.reduce(_resolve(R, sup, rules[a.first], a.first_pos))
            right = R.reduce(_resolve(R, sup, rules[a.second], a.second_pos))
        except StepCapExceeded as exc:
            raise StepCapExceeded(exc.step_cap, exc.word,
                                  f"confluence check of {R.name}, ambiguity {a.word.atoms}") from exc
        if left != right:
            report.failures.append(ConfluenceFailure(a, left, right))
    return report


def enumerate_basis(R: RewriteSystem, max_len: int | None, limit: int = 10**6) -> list[Word]:
    """Reduced words of length <= ``max_len``, sorted by the system's order.

    ``max_len=None`` keeps going until a length produces no new word; ``limit``
    guards against infinite normal-form sets.
    """
    letters = sorted(R.alphabet, key=lambda x: R.order.rank.get(x, 0))
    lhs_by_len = {L: {k for k in R.table if len(k) == L} for L in R.lengths}
    level = [()]
    found = [()]
    length = 0
    while level and (max_len is None or length < max_len):
        length += 1
        nxt = []
        for w in level:
            for x in letters:
                if w and w[-1] == -x:
                    continue
                cand = w + (x,)
                if any(len(cand) >= L and cand[-L:] in keys for L, keys in lhs_by_len.items()):
                    continue
                nxt.append(cand)
        found.extend(nxt)
        if len(found) > limit:
            raise OverflowError(f"more than {limit} reduced words; pass a finite max_len")
        level = nxt
    found.sort(key=R.order.key)
    return [Word._raw(w) for w in found]


# -- completion (offline) -------------------------------------------------

def orient(relation: AlgebraElement, order: MonomialOrder) -> RewriteRule | None:
    """Turn ``relation == 0`` into a rule headed by its leading word.

    The leading coefficient must be a unit; otherwise the relation cannot be
    oriented and :class:`OrderViolation` is raised.
    """
    if relation.is_zero():
        return None
    lead = order.leading(relation)
    coef = relation.terms[lead]
    if not coef.is_unit():
        raise OrderViolation(f"leading coefficient {coef} of {lead} is not a unit")
    inv = coef.inverse()
    rest = relation - AlgebraElement._raw(relation.ring, {lead: coef})
    return RewriteRule(lead, rest.scale(-inv))


def complete(relations: Iterable[AlgebraElement], order: MonomialOrder, ring: Ring,
             alphabet: Iterable[int], max_len: int = 8, max_rules: int = 2000,
             max_rounds: int = 50, step_cap: int = DEFAULT_STEP_CAP,
             verbose: bool = False) -> list[RewriteRule]:
    """Complete ``relations`` (each meaning ``rel == 0``) into a rewrite rule list.

    Critical pairs are only formed up to superposition length ``max_len``, so
    the output is confluent up to that length at best; run
    :func:`confluence_check` on the result.
    """
    alphabet = frozenset(alphabet)
    rules: dict[tuple[int, ...], AlgebraElement] = {}
    queue = list(relations)
    done: set = set()

    def system():
        rs = [RewriteRule(Word._raw(k), v) for k, v in rules.items()]
        return RewriteSystem(rs, order, ring, alphabet, step_cap)

    stuck: list[AlgebraElement] = []
    for rnd in range(max_rounds):
        R = system()
        queue.extend(stuck)
        stuck = []
        while queue:
            rel = R.reduce(queue.pop(0))
            try:
                rule = orient(rel, order)
            except OrderViolation:
                # may become orientable once later rules exist
                stuck.append(rel)
                continue
            if rule is None:
                continue
            new = rule.lhs.atoms
            for k in list(rules):
                if len(k) >= len(new) and any(k[p:p + len(new)] == new
                                              for p in range(len(k) - len(new) + 1)):
                    queue.append(AlgebraElement.from_word(Word._raw(k), Coefficient.one(ring)) - rules.pop(k))
            rules[new] = rule.rhs
            if len(rules) > max_rules:
                raise OverflowError(f"completion exceeded {max_rules} rules")
            R = system()
        # interreduce right-hand sides
        for k in list(rules):
            rules[k] = R.reduce(rules[k])
        R = system()
        found = False
        for a in _ambiguities(R, max_len):
            rs = R.all_rules
            tag = (rs[a.first].lhs.atoms, rs[a.second].lhs.atoms, a.word.atoms, a.second_pos)
            if tag in done:
                continue
            done.add(tag)
            left = R.reduce(_resolve(R, a.word.atoms, rs[a.first], a.first_pos))
            right = R.reduce(_resolve(R, a.word.atoms, rs[a.second], a.second_pos))
            if left != right:
                queue.append(left - right)
                found = True
        stuck = [x for x in (R.reduce(y) for y in stuck) if not x.is_zero()]
        if verbose:
            print(f"round {rnd}: {len(rules)} rules, {len(queue)} pending, {len(stuck)} stuck")
        if not queue and not found:
            if stuck:
                raise OrderViolation(f"cannot orient {len(stuck)} relation(s), e.g. {stuck[0]}")
            break
    else:
        raise RuntimeError(f"completion did not settle in {max_rounds} rounds")
    R = system()
    out = [RewriteRule(Word._raw(k), R.reduce(v)) for k, v in rules.items()]
    out.sort(key=lambda r: order.key(r.lhs))
    return out
