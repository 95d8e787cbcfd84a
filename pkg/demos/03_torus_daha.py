"""
The torus and the double affine Hecke algebra
=============================================

Two loops a_i, b_i per strand and a central c.  A strand carried once
around the marked point equals c^2.
"""

from skein_hecke import BraidContext, build_instance

for k in (1, 2):
    H = build_instance(BraidContext.of("torus", k))
    print(f"kappa={k}:", H.system)
    print("  b1 a1        =", H.normalize("b1 a1"))
    star = H.star_loop()
    print(f"  star loop {star} reduces to", H.reduce(H.element(star.to_text())))

H = build_instance(BraidContext.of("torus", 2))
# Normal forms have the shape c^k (a-letters)(crossings)(b-letters).
for text in ("b2 a1", "b1 s1 a1", "b2^-1 a2 s1^-1", "a1^-1 b2 a1 b2^-1"):
    print(f"{text:>20} = {H.normalize(text)}")
