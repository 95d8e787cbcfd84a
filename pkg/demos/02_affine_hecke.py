"""
The affine Hecke algebra of the cylinder
========================================

One loop generator a_i per strand.  Reduced words put the loops first and
the crossings after them.
"""

from skein_hecke import BraidContext, build_instance, enumerate_hecke_basis

H = build_instance(BraidContext.of("cylinder", 2))
print(H.system)

# conjugating a loop by a crossing moves it to the neighbouring strand
print("s1 a1 s1      =", H.normalize("s1 a1 s1"))
# pushing a loop through a crossing costs an hbar correction
print("s1 a1         =", H.normalize("s1 a1"))
print("s1 a2         =", H.normalize("s1 a2"))
# loops on different strands commute
print("a2 a1 - a1 a2 =", H.reduce(H.element("a2 a1") - H.element("a1 a2")))

words = enumerate_hecke_basis(H, 2)
print(len(words), "reduced words of length <= 2:")
print("  ", ", ".join(w.to_text() or "1" for w in words))

# The rules themselves, as loaded from the shipped presentation
for rule in H.system.rules[:6]:
    print("  ", rule)
