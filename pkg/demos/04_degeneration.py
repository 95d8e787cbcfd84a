"""
Setting hbar = 0
================

At hbar = 0 a reduced word is determined by where each strand's loops go and
by the permutation of the strands.  This script multiplies in the Hecke
algebra, degenerates, and compares with the wreath-product group law, which
is computed without the rewrite engine.
"""

import random

from skein_hecke import AlgebraElement, BraidContext, Coefficient, build_instance, degenerate, hecke_mul, wreath_mul
from skein_hecke.braids import random_word

H = build_instance(BraidContext.of("torus", 2))
rng = random.Random(0)

x = H.reduce(AlgebraElement.from_word(random_word(rng, H.ctx, 4), Coefficient.one()))
y = H.reduce(AlgebraElement.from_word(random_word(rng, H.ctx, 4), Coefficient.one()))
print("x  =", x)
print("y  =", y)
xy = hecke_mul(x, y, H)
print("xy =", xy)
print()
print("degenerate(xy)                =", degenerate(xy, H))
print("degenerate(x) * degenerate(y) =", wreath_mul(degenerate(x, H), degenerate(y, H)))

agree = 0
for _ in range(500):
    x = H.reduce(AlgebraElement.from_word(random_word(rng, H.ctx, 4), Coefficient.one()))
    y = H.reduce(AlgebraElement.from_word(random_word(rng, H.ctx, 4), Coefficient.one()))
    agree += degenerate(hecke_mul(x, y, H), H) == wreath_mul(degenerate(x, H), degenerate(y, H))
print(f"{agree}/500 random products agree with the oracle")
