"""
The three-strand braid group B3 = <a, b | aba = bab>.

The homomorphism sigma(a) = A, sigma(b) = B onto SL(2,Z) has kernel
generated by x^4, where x = aba; x^4 is central and has exponent sum 12.
Two braids are therefore equal exactly when they have the same sigma-image
and the same exponent sum, which gives a complete word-problem solution
without any normal form.
"""

from __future__ import annotations

from .sl2 import IDENTITY, MINUS_I, Mat2Z, A, B, word_of_matrix
from .words import BraidWord

SIGMA = {"a": A, "b": B}

# x = aba, its square generates the centre of B3
HALF_TWIST = BraidWord([("a", 1), ("b", 1), ("a", 1)])
FULL_TWIST = BraidWord([("a", 1), ("b", 1), ("a", 1), ("b", 1), ("a", 1), ("b", 1)])


def sigma(w: BraidWord) -> Mat2Z:
    m = IDENTITY
    for g, e in w.letters:
        m = m * SIGMA[g] ** e
    return m


def exp_sum(w: BraidWord) -> int:
    return w.exponent_sum()


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    return exp_sum(u) == exp_sum(v) and sigma(u) == sigma(v)


def is_central_power(w: BraidWord) -> int | None:
    """Return k if w = (ababab)^k in B3, else None."""
    total = exp_sum(w)
    if total % 6:
        return None
    k = total // 6
    return k if sigma(w) == (MINUS_I if k % 2 else IDENTITY) else None


def braid_of_matrix(m: Mat2Z) -> BraidWord:
    """A braid word whose sigma-image is exactly ``m``.

    Transliterate a word for m in A, B; should its image be -m, multiply by
    the central element ababab, whose image is -I.
    """
    w = BraidWord([(g.lower(), e) for g, e in word_of_matrix(m).letters])
    if sigma(w) == -m:
        w = FULL_TWIST * w
    return w
