"""
Index and grading arithmetic
============================
"""

from skein_hecke import IndexInput, fredholm_index, graded_index, hbar_degree, matching_maslov

inp = IndexInput(n=3, chi=1, kappa=1, m=1, mu=0, degrees=(1, 0))
print("Fredholm index:", fredholm_index(inp))
print("graded index:  ", graded_index(inp))

# the two formulas agree once mu is the value read off from the gradings
mu = matching_maslov(inp)
print("matching mu:", mu, "->", fredholm_index(IndexInput(3, 1, 1, 1, mu, (1, 0))))

for n in (1, 2, 3, 4):
    print(f"|hbar| for n={n}: {hbar_degree(n)}")

# for n = 2 the Euler characteristic drops out
print([graded_index(IndexInput(2, chi, 2, 2, degrees=(0, 1, -1))) for chi in range(-3, 3)])
