"""The braid group on three strands and its map onto SL(2,Z).

sigma sends a to A and b to B.  Its kernel is generated by (aba)^4, so two
braids are equal exactly when their sigma-images agree and their exponent
sums agree.
"""

from modular_braid import BraidWord, FULL_TWIST, braid_equal, braid_of_matrix, exp_sum, sigma
from modular_braid import Mat2Z, is_central_power

u = BraidWord.parse("a b a")
v = BraidWord.parse("b a b")
print(f"{u} == {v}?", braid_equal(u, v))

x4 = BraidWord.parse("a b a") ** 4
print(f"\nsigma({x4}) = {sigma(x4)}, exponent sum {exp_sum(x4)}")
print("so (aba)^4 is not the trivial braid:", not braid_equal(x4, BraidWord.identity()))
print("it is the square of the full twist:", is_central_power(x4))

# The full twist (ab)^3 is central: it commutes with every braid.
w = BraidWord.parse("a^2 b^-1 a b^3")
print(f"\nfull twist commutes with {w}:", braid_equal(w * FULL_TWIST, FULL_TWIST * w))

# Every matrix lifts to a braid.
m = Mat2Z(-7, 2, 3, -1)
lift = braid_of_matrix(m)
print(f"\nlift of {m}: {lift}")
print("sigma of the lift:", sigma(lift))
