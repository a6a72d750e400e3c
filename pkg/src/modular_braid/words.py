"""
Run-length words over a two-letter alphabet.

A word is stored as a tuple of syllables ``(generator, exponent)`` with
nonzero exponents and no two adjacent syllables on the same generator.
Constructing a word from arbitrary syllables merges and cancels as needed,
so every instance is freely reduced.

Three concrete alphabets are used:

- :class:`GenWord`   over ``A``, ``B`` (parabolic generators of SL(2,Z))
- :class:`BraidWord` over ``a``, ``b`` (Artin generators of B3)
- :class:`FreeWord`  over ``g1``, ``g2`` (free basis of the derived subgroup)

Text form: whitespace-separated tokens ``name`` or ``name^k`` with ``k`` a
signed decimal integer, e.g. ``A^-3 B A^2``.  The empty string is the
identity.  JSON form: ``{"word": [["A", -3], ["B", 1]]}``.
"""

from __future__ import annotations

import json
import re
from typing import ClassVar, Iterable, Sequence

from .errors import ParseError

Syllable = tuple[str, int]

_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9]*)(?:\^([+-]?\d+))?$")


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    out: list[Syllable] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


class Word:
    """Freely reduced word; subclasses fix the alphabet."""

    alphabet: ClassVar[tuple[str, str]] = ()

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Sequence] = ()):
        syl = []
        for item in letters:
            gen, exp = item
            if gen not in self.alphabet:
                raise ValueError(f"{gen!r} is not a generator of {type(self).__name__}")
            syl.append((gen, int(exp)))
        self.letters = _reduce(syl)

    @classmethod
    def _trusted(cls, letters: tuple[Syllable, ...]):
        w = cls.__new__(cls)
        w.letters = letters
        return w

    @classmethod
    def identity(cls):
        return cls._trusted(())

    @classmethod
    def gen(cls, name: str, exp: int = 1):
        return cls([(name, exp)])

    def __mul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        x, y = self.letters, other.letters
        # cancel at the junction only; both halves are already reduced
        i = 0
        while i < len(x) and i < len(y) and x[-1 - i][0] == y[i][0] and x[-1 - i][1] == -y[i][1]:
            i += 1
        left = x[: len(x) - i]
        right = y[i:]
        if left and right and left[-1][0] == right[0][0]:
            merged = left[-1][1] + right[0][1]
            return self._trusted(left[:-1] + ((left[-1][0], merged),) + right[1:])
        return self._trusted(left + right)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        return self._trusted(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self):
        """Letter length: the sum of absolute exponents."""
        return sum(abs(e) for _, e in self.letters)

    def syllables(self) -> int:
        return len(self.letters)

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def expand(self) -> list[Syllable]:
        """Unit-exponent letters, e.g. ``A^2 B^-1`` -> ``[(A,1),(A,1),(B,-1)]``."""
        out = []
        for g, e in self.letters:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def __eq__(self, other):
        return type(other) is type(self) and self.letters == other.letters

    def __hash__(self):
        return hash((type(self).__name__, self.letters))

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.letters)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    @classmethod
    def parse(cls, text: str):
        syl = []
        for pos, tok in enumerate(text.split()):
            m = _TOKEN.match(tok)
            if not m:
                raise ParseError("malformed word token", tok, pos)
            name, exp = m.group(1), m.group(2)
            if name not in cls.alphabet:
                raise ParseError(
                    f"unknown generator (expected one of {', '.join(cls.alphabet)})", tok, pos)
            syl.append((name, 1 if exp is None else int(exp)))
        return cls(syl)

    def to_json(self) -> dict:
        return {"word": [[g, e] for g, e in self.letters]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", obj, exc.pos) from None
        try:
            items = obj["word"]
        except (TypeError, KeyError):
            raise ParseError('expected an object with key "word"') from None
        syl = []
        for pos, item in enumerate(items):
            if (not isinstance(item, list) or len(item) != 2 or item[0] not in cls.alphabet
                    or not isinstance(item[1], int) or isinstance(item[1], bool)):
                raise ParseError("bad syllable", json.dumps(item), pos)
            syl.append((item[0], item[1]))
        return cls(syl)


class GenWord(Word):
    """Word in the parabolic generators ``A`` and ``B`` of SL(2,Z)."""

    alphabet = ("A", "B")
    __slots__ = ()


class BraidWord(Word):
    """Word in the Artin generators ``a`` and ``b`` of the braid group B3."""

    alphabet = ("a", "b")
    __slots__ = ()


class FreeWord(Word):
    """Word in ``g1 = f_{-2}`` and ``g2 = f_{-1}``, a free basis of SL(2,Z)'."""

    alphabet = ("g1", "g2")
    __slots__ = ()


def reduced_free_words(max_length: int):
    """Yield every reduced FreeWord of letter length at most ``max_length``.

    Depth-first, shortest prefix first.  There are ``1 + 2(3^L - 1)`` of them.
    """
    letters = [("g1", 1), ("g1", -1), ("g2", 1), ("g2", -1)]

    def extend(prefix, last, remaining):
        yield FreeWord(prefix)
        if remaining == 0:
            return
        for letter in letters:
            if last is not None and letter[0] == last[0] and letter[1] == -last[1]:
                continue
            yield from extend(prefix + [letter], letter, remaining - 1)

    yield from extend([], None, max_length)
