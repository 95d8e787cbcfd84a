"""
From hbar to the skein variable s
=================================

Writing hbar = s - s^-1 turns the Hecke presentation into the braid skein
one.  The substitution is a ring map, so it can be applied before or after
multiplying.
"""

from skein_hecke import BraidContext, Coefficient, build_instance, hecke_mul, subst_hbar, to_bsk

print("hbar^3 ->", subst_hbar(Coefficient.hbar(3)))

H = build_instance(BraidContext.of("disk", 3))
x = H.normalize("s1 s2^-1")
y = H.normalize("s2^-1 s1")
print("x         =", x)
print("to_bsk(x) =", to_bsk(x))

before = to_bsk(hecke_mul(x, y, H))
after = H.s_system.reduce(to_bsk(x) * to_bsk(y))
print("to_bsk(xy)           =", before)
print("to_bsk(x) to_bsk(y)  =", after)
print("equal:", before == after)
