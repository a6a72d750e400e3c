import pytest
from hypothesis import given

from conftest import free_words, gen_words
from modular_braid.derived import (
    G1, G2, derived_member, eval_free, f_in_free_gens, factor_derived,
)
from modular_braid.errors import MembershipError
from modular_braid.sl2 import (
    IDENTITY, MINUS_I, A, B, Mat2Z, X, abelianize, eval_word, f_matrix,
)
from modular_braid.words import FreeWord, reduced_free_words


def test_free_generators():
    assert G1 == f_matrix(-2) == Mat2Z(1, 1, 1, 2)
    assert G2 == f_matrix(-1) == Mat2Z(2, 1, 1, 1)


@pytest.mark.parametrize("n, text", [
    (-2, "g1"),
    (-1, "g2"),
    (0, "g2 g1^-1"),     # f_0 = f_{-1} f_{-2}^-1
    (-3, "g2^-1 g1"),    # f_{-3} = f_{-1}^-1 f_{-2}
])
def test_f_in_free_gens_examples(n, text):
    assert f_in_free_gens(n) == FreeWord.parse(text)


@pytest.mark.parametrize("n", range(-30, 31))
def test_f_in_free_gens_evaluates_to_f_matrix(n):
    assert eval_free(f_in_free_gens(n)) == f_matrix(n)


def test_f_word_length_grows_linearly():
    # f_{n+6} is a conjugate of f_n by the translation A^-6 X^2
    assert len(f_in_free_gens(30)) < 60
    assert len(f_in_free_gens(-30)) < 60


def test_derived_member_examples():
    assert derived_member(IDENTITY)
    assert not derived_member(MINUS_I)
    assert derived_member(Mat2Z(1, 1, 1, 2))
    assert not derived_member(A)
    assert not derived_member(X)


@pytest.mark.parametrize("n", range(-10, 11))
def test_side_pairings_are_in_the_derived_subgroup(n):
    assert derived_member(f_matrix(n))


@given(gen_words)
def test_derived_member_agrees_with_exponent_sum(w):
    assert derived_member(eval_word(w)) == (w.exponent_sum() % 12 == 0)


def test_factor_derived_examples():
    assert factor_derived(IDENTITY) == FreeWord.identity()
    assert factor_derived(Mat2Z(2, 1, 1, 1)) == FreeWord.parse("g2")
    w = FreeWord.parse("g2 g1^-1 g2^-1 g1")
    m = eval_free(w)
    # f_0 f_{-3} = A^-6 X^2
    assert m == f_matrix(0) * f_matrix(-3) == A ** -6 * X ** 2 == Mat2Z(-1, -6, 0, -1)
    assert w == f_in_free_gens(0) * f_in_free_gens(-3)
    assert factor_derived(m) == w


def test_factor_derived_rejects_non_members():
    for m in (MINUS_I, A, B, X):
        with pytest.raises(MembershipError):
            factor_derived(m)


@given(free_words)
def test_factor_round_trip(w):
    assert factor_derived(eval_free(w)) == w


@given(gen_words, gen_words)
def test_factor_commutators(u, v):
    mu, mv = eval_word(u), eval_word(v)
    c = mu * mv * mu.inverse() * mv.inverse()
    assert eval_free(factor_derived(c)) == c


def test_freeness_up_to_length_eight():
    # the full length-10 sweep lives in the acceptance suite
    seen = {}
    for w in reduced_free_words(8):
        m = eval_free(w)
        if not w.is_identity():
            assert m != IDENTITY and m != MINUS_I
        assert m not in seen
        seen[m] = w


def test_minus_identity_is_not_in_the_derived_subgroup():
    assert abelianize(MINUS_I).value == 6
