"""Exact arithmetic in SL(2,Z): generators, relations and the word problem.

Every matrix of SL(2,Z) is a word in A = [[1,-1],[0,1]] and B = [[1,0],[1,1]].
This script checks the defining relations, writes a matrix as a word and
reads off its class in the abelianization Z/12.
"""

from modular_braid import GenWord, Mat2Z, A, B, X, MINUS_I, abelianize, eval_word, word_of_matrix

print("A B A =", A * B * A, "  B A B =", B * A * B, "  X =", X)
print("X^2 =", X * X, "(that is -I)")
print("(A B)^3 =", (A * B) ** 3)

m = Mat2Z(17, 5, 10, 3)
w = word_of_matrix(m)
print(f"\n{m} is the word {w}")
print("evaluating it again gives", eval_word(w))

# The exponent sum of any word for m is well defined mod 12.
print("\nclass of m in Z/12:", abelianize(m))
print("class of -I:       ", abelianize(MINUS_I))
print("in Z/6 for PSL:    ", abelianize(MINUS_I, projective=True))

# Words round-trip through their text form.
print("\nparsed:", GenWord.parse("A^-3 B A^2 B^-1"))
