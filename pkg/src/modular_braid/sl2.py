"""
Exact arithmetic in SL(2,Z) and PSL(2,Z).

Entries are Python integers, so products of arbitrarily long words are exact.
The parabolic generators are::

    A = [[1, -1],      B = [[1, 0],      X = ABA = BAB = [[0, -1],
         [0,  1]]           [1, 1]]                       [1,  0]]

with X^2 = -I and X^4 = I.  Words in A, B are :class:`~.words.GenWord`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .errors import DeterminantError, ParseError
from .words import GenWord


@dataclass(frozen=True, slots=True)
class Mat2Z:
    """The matrix [[a, b], [c, d]] with integer entries and determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"entry {name} must be an int, got {type(v).__name__}")
        if self.a * self.d - self.b * self.c != 1:
            raise DeterminantError(
                f"determinant of [[{self.a}, {self.b}], [{self.c}, {self.d}]] is "
                f"{self.a * self.d - self.b * self.c}, expected 1")

    @classmethod
    def _unchecked(cls, a, b, c, d):
        m = object.__new__(cls)
        object.__setattr__(m, "a", a)
        object.__setattr__(m, "b", b)
        object.__setattr__(m, "c", c)
        object.__setattr__(m, "d", d)
        return m

    def __mul__(self, other: Mat2Z) -> Mat2Z:
        if not isinstance(other, Mat2Z):
            return NotImplemented
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return Mat2Z._unchecked(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __neg__(self) -> Mat2Z:
        return Mat2Z._unchecked(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k: int) -> Mat2Z:
        if k == 1:
            return self
        if k == -1:
            return self.inverse()
        if k == 0:
            return IDENTITY
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = IDENTITY
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Mat2Z:
        return Mat2Z._unchecked(self.d, -self.b, -self.c, self.a)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_scalar(self) -> bool:
        """True for +I and -I."""
        return self.b == 0 and self.c == 0 and self.a == self.d

    def __str__(self):
        return f"{self.a} {self.b} {self.c} {self.d}"

    @classmethod
    def parse(cls, text: str) -> Mat2Z:
        """Parse four whitespace-separated integers ``a b c d`` (row-major)."""
        toks = text.split()
        if len(toks) != 4:
            bad = toks[4] if len(toks) > 4 else None
            raise ParseError(f"a matrix needs exactly 4 integers, got {len(toks)}",
                             bad, 4 if bad is not None else None)
        vals = []
        for pos, tok in enumerate(toks):
            try:
                vals.append(int(tok))
            except ValueError:
                raise ParseError("not an integer", tok, pos) from None
        return cls(*vals)

    def to_json(self) -> dict:
        return {"m": list(self.entries())}

    @classmethod
    def from_json(cls, obj) -> Mat2Z:
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", obj, exc.pos) from None
        try:
            vals = obj["m"]
        except (TypeError, KeyError):
            raise ParseError('expected an object with key "m"') from None
        if not isinstance(vals, list) or len(vals) != 4:
            raise ParseError('"m" must be a list of 4 integers')
        for pos, v in enumerate(vals):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError("not an integer", json.dumps(v), pos)
        return cls(*vals)


IDENTITY = Mat2Z(1, 0, 0, 1)
MINUS_I = Mat2Z(-1, 0, 0, -1)
A = Mat2Z(1, -1, 0, 1)
B = Mat2Z(1, 0, 1, 1)
X = Mat2Z(0, -1, 1, 0)

GENERATORS = {"A": A, "B": B}


def mat_mul(m: Mat2Z, n: Mat2Z) -> Mat2Z:
    return m * n


def mat_inv(m: Mat2Z) -> Mat2Z:
    return m.inverse()


def mat_prod(ms: Iterable[Mat2Z]) -> Mat2Z:
    return reduce(Mat2Z.__mul__, ms, IDENTITY)


class ProjMat:
    """An element of PSL(2,Z): a matrix up to sign.

    The stored representative has its first nonzero entry (in the order
    a, b, c, d) positive, so equality and hashing compare representatives.
    """

    __slots__ = ("rep",)

    def __init__(self, m: Mat2Z):
        for v in m.entries():
            if v:
                self.rep = m if v > 0 else -m
                break

    def __mul__(self, other: ProjMat) -> ProjMat:
        return ProjMat(self.rep * other.rep)

    def inverse(self) -> ProjMat:
        return ProjMat(self.rep.inverse())

    def is_identity(self) -> bool:
        return self.rep == IDENTITY

    def __eq__(self, other):
        return isinstance(other, ProjMat) and self.rep == other.rep

    def __hash__(self):
        return hash(("PSL", self.rep))

    def __repr__(self):
        return f"ProjMat({self.rep})"


def eval_word(w: GenWord) -> Mat2Z:
    """Multiply out a word in A, B left to right."""
    m = IDENTITY
    for g, e in w.letters:
        m = m * GENERATORS[g] ** e
    return m


# -I = X^2 = (ABA)(BAB) = ABABAB
MINUS_I_WORD = GenWord([("A", 1), ("B", 1), ("A", 1), ("B", 1), ("A", 1), ("B", 1)])


def word_of_matrix(m: Mat2Z) -> GenWord:
    """A word in A, B evaluating exactly to ``m``.

    Euclid's algorithm on the first column: left multiplication by A^k sends
    a -> a - k c, by B^k sends c -> c + k a.  Once c = 0 the matrix is
    +-A^j; a leading -I is written as ABABAB.  The output is correct but not
    canonical.
    """
    a, b, c, d = m.a, m.b, m.c, m.d
    applied: list[tuple[str, int]] = []
    while c != 0:
        if a != 0 and abs(c) >= abs(a):
            k = -(c // a)
            applied.append(("B", k))
            c, d = c + k * a, d + k * b
        else:
            # a == 0 forces c = +-1; one A-step makes |a| = 1 again
            k = -c if a == 0 else a // c
            applied.append(("A", k))
            a, b = a - k * c, b - k * d
    # now m' = L m = [[s, b], [0, s]] with s = +-1, i.e. m' = s * A^(-s*b)
    s = a
    tail = [("A", -s * b)]
    # m = L^-1 m' and L^-1 = (last applied)^-1 ... reversed
    letters = [(g, -k) for g, k in applied] + tail
    w = GenWord(letters)
    if s == -1:
        w = MINUS_I_WORD * w
    return w


@dataclass(frozen=True)
class AbClass:
    """Image in the abelianization: Z/12 for SL(2,Z), Z/6 for PSL(2,Z)."""

    value: int
    modulus: int = 12

    def __post_init__(self):
        if self.modulus not in (6, 12):
            raise ValueError("modulus must be 12 (SL) or 6 (PSL)")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __add__(self, other: AbClass) -> AbClass:
        if self.modulus != other.modulus:
            raise ValueError("cannot add classes of different groups")
        return AbClass((self.value + other.value) % self.modulus, self.modulus)

    def projective(self) -> AbClass:
        return AbClass(self.value % 6, 6)

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"

    @classmethod
    def parse(cls, text: str) -> AbClass:
        toks = text.replace("(", " ").replace(")", " ").split()
        if len(toks) != 3 or toks[1] != "mod":
            raise ParseError("expected '<value> (mod <modulus>)'", text, 0)
        try:
            value, modulus = int(toks[0]), int(toks[2])
        except ValueError:
            raise ParseError("expected integers", text, 0) from None
        return cls(value, modulus)

    def to_json(self) -> dict:
        return {"value": self.value, "modulus": self.modulus}


def abelianize(m: Mat2Z, projective: bool = False) -> AbClass:
    """Exponent sum of any word for ``m``, mod 12 (or mod 6 for PSL).

    A and B both map to the generator 1, X to 3, -I to 6.
    """
    cls = AbClass(word_of_matrix(m).exponent_sum(), 12)
    return cls.projective() if projective else cls


def f_matrix(n: int) -> Mat2Z:
    """The side pairing f_n = A^-(n+3) X A^n, multiplied out."""
    return Mat2Z._unchecked(n + 3, -1 - n * (n + 3), 1, -n)


def commutator(u: Mat2Z, v: Mat2Z) -> Mat2Z:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()
