"""
The derived subgroup SL(2,Z)' and its free basis.

SL(2,Z)' is the kernel of the abelianization onto Z/12 and is free on

    g1 = f_{-2} = B A^-1 = [[1, 1], [1, 2]],
    g2 = f_{-1} = A^-1 B = [[2, 1], [1, 1]].

Every side pairing f_n is a word in g1, g2 through the recurrence
f_{n+1} f_{n-1} = f_n.  Factoring an arbitrary member goes through
Reidemeister-Schreier rewriting: with transversal {A^k : 0 <= k < 12} the
Schreier generators are A^k B A^-(k+1) = f_{-k-2} (k = 0..10), A^11 B and
A^12, and each of these has a known expression in g1, g2.
"""

from __future__ import annotations

import threading

from .errors import MembershipError
from .sl2 import IDENTITY, Mat2Z, abelianize, f_matrix, word_of_matrix
from .words import FreeWord, _reduce

G1 = Mat2Z(1, 1, 1, 2)
G2 = Mat2Z(2, 1, 1, 1)
FREE_GENERATORS = {"g1": G1, "g2": G2}

_g1 = FreeWord.gen("g1")
_g2 = FreeWord.gen("g2")

_lock = threading.Lock()
_f_table: dict[int, FreeWord] = {-2: _g1, -1: _g2}


def eval_free(w: FreeWord) -> Mat2Z:
    m = IDENTITY
    for g, e in w.letters:
        m = m * FREE_GENERATORS[g] ** e
    return m


def f_in_free_gens(n: int) -> FreeWord:
    """f_n as a reduced word in g1, g2.

    Built outward from f_{-2}, f_{-1}:  f_{k+1} = f_k f_{k-1}^-1 going up,
    f_{k-1} = f_{k+1}^-1 f_k going down.  Results are memoized.
    """
    with _lock:
        if n in _f_table:
            return _f_table[n]
        hi = max(_f_table)
        while hi < n:
            _f_table[hi + 1] = _f_table[hi] * _f_table[hi - 1].inverse()
            hi += 1
        lo = min(_f_table)
        while lo > n:
            _f_table[lo - 1] = _f_table[lo + 1].inverse() * _f_table[lo]
            lo -= 1
        return _f_table[n]


def derived_member(m: Mat2Z) -> bool:
    return abelianize(m).value == 0


def _schreier_words():
    # A^12 = (A^-6 X^2)^-2 and A^-6 X^2 = f_{-2} f_{-5}
    a12 = (f_in_free_gens(-2) * f_in_free_gens(-5)) ** -2
    h = [f_in_free_gens(-k - 2) for k in range(11)]
    h.append(f_in_free_gens(-13) * a12)  # A^11 B = f_{-13} A^12
    return [w.letters for w in h], [w.inverse().letters for w in h], a12


_SCHREIER = None


def _schreier():
    global _SCHREIER
    if _SCHREIER is None:
        _SCHREIER = _schreier_words()
    return _SCHREIER


def factor_derived(m: Mat2Z) -> FreeWord:
    """The unique reduced word in g1, g2 evaluating exactly to ``m``.

    Raises :class:`MembershipError` if ``m`` is not in SL(2,Z)'.
    """
    word = word_of_matrix(m)
    coset = word.exponent_sum() % 12
    if coset:
        raise MembershipError(
            f"matrix {m} has abelianization {coset} (mod 12), so it is not in the derived subgroup")
    h, h_inv, a12 = _schreier()
    parts: list = []
    k = 0  # current coset, represented by A^k
    for g, e in word.letters:
        if g == "A":
            q, k = divmod(k + e, 12)
            if q:
                parts.extend((a12 ** q).letters)
        elif e > 0:
            for _ in range(e):
                parts.extend(h[k])
                k = (k + 1) % 12
        else:
            for _ in range(-e):
                k = (k - 1) % 12
                parts.extend(h_inv[k])
    return FreeWord._trusted(_reduce(parts))

