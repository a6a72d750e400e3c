"""Seeded random words and the randomized consistency checks built on them."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .braid3 import braid_equal, braid_of_matrix, sigma
from .derived import eval_free, factor_derived
from .sl2 import IDENTITY, MINUS_I, A, B, X, abelianize, eval_word, word_of_matrix
from .words import BraidWord, FreeWord, GenWord

# aba (bab)^-1
BRAID_RELATOR = BraidWord.parse("a b a b^-1 a^-1 b^-1")


def random_letters(rng: random.Random, alphabet, length: int, free: bool = False):
    """``length`` unit letters; with ``free=True`` no letter is followed by its inverse."""
    out = []
    while len(out) < length:
        letter = (rng.choice(alphabet), rng.choice((1, -1)))
        if free and out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            continue
        out.append(letter)
    return out


def random_gen_word(rng: random.Random, max_length: int = 20) -> GenWord:
    return GenWord(random_letters(rng, GenWord.alphabet, rng.randint(0, max_length)))


def random_braid_word(rng: random.Random, max_length: int = 20) -> BraidWord:
    return BraidWord(random_letters(rng, BraidWord.alphabet, rng.randint(0, max_length)))


def random_free_word(rng: random.Random, max_length: int = 10) -> FreeWord:
    return FreeWord(random_letters(rng, FreeWord.alphabet, rng.randint(0, max_length), free=True))


def insert_relators(rng: random.Random, w: BraidWord, count: int = 3) -> BraidWord:
    """Splice conjugates of aba(bab)^-1 and its inverse into ``w`` at random places.

    Works on unit letters so the result is syntactically different from ``w``
    while denoting the same braid.
    """
    letters = w.expand()
    for _ in range(count):
        pos = rng.randint(0, len(letters))
        conj = random_braid_word(rng, 4)
        r = BRAID_RELATOR if rng.random() < 0.5 else BRAID_RELATOR.inverse()
        piece = conj.expand() + r.expand() + conj.inverse().expand()
        letters[pos:pos] = piece
    return BraidWord(letters)


@dataclass
class CheckResult:
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def __str__(self):
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.passed}/{self.total}"


def verify_presentation(samples: int = 1000, seed: int = 0, max_length: int = 20) -> list[CheckResult]:
    """Randomized checks of the relations, the word problem and the isomorphism."""
    rng = random.Random(seed)
    results = []

    rel = [A * B * A == X, B * A * B == X, X * X == MINUS_I, X ** 4 == IDENTITY,
           eval_word(GenWord.parse("A B A B A B")) == MINUS_I,
           eval_word(GenWord.parse("A B A B A B") ** 2) == IDENTITY]
    results.append(CheckResult("relations ABA = BAB = X, X^2 = -I, X^4 = I", sum(rel), len(rel)))

    ok = 0
    for _ in range(samples):
        m = eval_word(random_gen_word(rng, max_length))
        ok += eval_word(word_of_matrix(m)) == m
    results.append(CheckResult("word_of_matrix round trip", ok, samples))

    ok = 0
    for _ in range(samples):
        u, v = random_gen_word(rng, max_length), random_gen_word(rng, max_length)
        mu, mv = eval_word(u), eval_word(v)
        ok += (abelianize(mu * mv) == abelianize(mu) + abelianize(mv)
               and abelianize(mu).value == u.exponent_sum() % 12)
    results.append(CheckResult("abelianization is a homomorphism onto Z/12", ok, samples))

    ok = 0
    for _ in range(samples):
        u = random_braid_word(rng, max_length)
        ok += braid_equal(u, insert_relators(rng, u))
    results.append(CheckResult("braid_equal under relator insertion", ok, samples))

    ok = 0
    for _ in range(samples):
        m = eval_word(random_gen_word(rng, 30))
        ok += sigma(braid_of_matrix(m)) == m
    results.append(CheckResult("sigma is onto (lift of word_of_matrix)", ok, samples))

    ok = 0
    for _ in range(samples):
        w = random_free_word(rng, 10)
        ok += factor_derived(eval_free(w)) == w
    results.append(CheckResult("derived subgroup factorization round trip", ok, samples))
    return results
