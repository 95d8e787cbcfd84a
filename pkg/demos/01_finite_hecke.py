"""
The finite Hecke algebra of the disk
====================================

Braids on the disk modulo the skein relation s_i - s_i^-1 = hbar.
"""

from skein_hecke import BraidContext, build_instance, enumerate_hecke_basis, hecke_mul

H = build_instance(BraidContext.of("disk", 3))
print(H.system, "loaded from", H.fixture)

# The skein relation forces the quadratic relation ...
print("s1 s1      =", H.normalize("s1 s1"))
# ... and lets every negative crossing be traded for a positive one.
print("s1^-1      =", H.normalize("s1^-1"))
print("s1 s2 s1   =", H.normalize("s2 s1 s2"))

# Reduced words are reduced expressions, one per permutation of S_3.
basis = enumerate_hecke_basis(H)
print(len(basis), "basis words:", [w.to_text() or "1" for w in basis])

x = H.normalize("s1 s2")
y = H.normalize("s2 s1^-1")
print("(s1 s2)(s2 s1^-1) =", hecke_mul(x, y, H))

# At hbar = 0 the crossings square to 1: the group algebra of S_3.
G = H.specialized(hbar_to_zero=True, c_to_one=True)
for w in basis:
    sq = G.reduce(G.normal_form(w) * G.normal_form(w))
    print(f"  ({w.to_text() or '1'})^2 at hbar=0: {sq}")
