"""
Rewrite systems, ambiguities and completion
===========================================

The Hecke instances are rewrite systems.  Here one is built by hand from
the braid and skein relations, its ambiguities are listed, and completion
fills in the missing rules.
"""

from skein_hecke import (AlgebraElement, BraidContext, Coefficient, MonomialOrder, Ring, RewriteRule,
                         RewriteSystem, Word, confluence_check, enumerate_basis, find_ambiguities)
from skein_hecke.rewrite import complete
from skein_hecke.words import atom

s1, s2 = atom("s", 1), atom("s", 2)
order = MonomialOrder([s2, s1])  # degree-lex, s2 < s1
one = AlgebraElement.one()
hbar = Coefficient.hbar()
W = Word.parse

rules = [
    RewriteRule(W("s1 s2 s1"), AlgebraElement.from_word(W("s2 s1 s2"))),
    RewriteRule(W("s1 s1"), AlgebraElement.from_word(W("s1"), hbar) + one),
]
R = RewriteSystem(rules, order, name="by hand")
for w, i, j in find_ambiguities(R, 5):
    print(f"  ambiguity {w.to_text():<16} rules {i}, {j}")

report = confluence_check(R, 6)
print(f"{len(report.failures)} of {report.checked} ambiguities fail to resolve, e.g.")
f = report.failures[0]
print("   ", f.left, "  vs  ", f.right)

# Completion adds the rules needed to resolve them.
relations = [r.relation() for r in rules]
relations.append(AlgebraElement.from_word(W("s2 s2")) - AlgebraElement.from_word(W("s2"), hbar) - one)
done = complete(relations, order, Ring.HBAR_C, BraidContext.of("disk", 3).alphabet - {-s1, -s2}, max_len=6)
C = RewriteSystem(done, order, name="completed")
print(len(C.rules), "rules after completion;", "confluent:", confluence_check(C, 8).ok)
print("basis:", [w.to_text() or "1" for w in enumerate_basis(C, None)])
