"""The commutator subgroup of SL(2,Z) is free on g1 = f_-2 and g2 = f_-1.

The side pairings f_n all lie in it.  Any member factors uniquely as a reduced
word in g1 and g2, and non-members are detected by their class in Z/12.
"""

from modular_braid import (
    A, B, FreeWord, MembershipError, Mat2Z, commutator, derived_member, eval_free, f_in_free_gens, f_matrix,
    factor_derived,
)

for n in range(-3, 4):
    print(f"f_{n} = {f_matrix(n)}   as a free word: {f_in_free_gens(n)}")

w = FreeWord.parse("g1 g2^-1 g1^2 g2")
m = eval_free(w)
print(f"\n{w} evaluates to {m}")
print("factor it back:", factor_derived(m))

# A commutator is a member; the quarter turn X is not.
c = commutator(A, B ** 2)
print(f"\n[A, B^2] = {c} in the derived subgroup?", derived_member(c))
print("as a free word:", factor_derived(c))
try:
    factor_derived(Mat2Z(0, -1, 1, 0))
except MembershipError as exc:
    print("X:", exc)
