from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidmon.braid import (BraidError, BraidWord, Permutation, conjugate, equal, exponent_sum,
                            full_twist, half_twist, multiply, normal_form, permutation_of, product,
                            sigma)


# -- independent oracle: Artin's faithful action on the free group F_n ------------

def _reduce(word):
    out = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def _inv(word):
    return tuple(-g for g in reversed(word))


def artin_action(b: BraidWord) -> tuple:
    """Images of the free generators x_1..x_n under the right action of ``b``."""
    n = b.strand_count
    images = {g: (g,) for g in range(1, n + 1)}

    def subst(word, table):
        out = []
        for g in word:
            out.extend(table[g] if g > 0 else _inv(table[-g]))
        return _reduce(out)

    for i, s in b.letters:
        table = {g: (g,) for g in range(1, n + 1)}
        if s > 0:
            table[i] = (i, i + 1, -i)
            table[i + 1] = (i,)
        else:
            table[i] = (i + 1,)
            table[i + 1] = (-(i + 1), i, i + 1)
        images = {g: subst(w, table) for g, w in images.items()}
    return tuple(images[g] for g in range(1, n + 1))


def words(n: int, max_len: int = 10):
    letter = st.tuples(st.integers(1, n - 1), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_len).map(lambda ls: BraidWord(n, tuple(ls)))


strands = st.integers(2, 5)


@st.composite
def word_pairs(draw, max_len=8):
    n = draw(strands)
    return draw(words(n, max_len)), draw(words(n, max_len))


# -- examples ---------------------------------------------------------------------

def test_multiply_cancels_and_concatenates():
    s1 = sigma(3, 1)
    assert multiply(s1, s1.inverse()).letters == ()
    assert multiply(BraidWord.parse(3, "s1 s2"), s1).to_text() == "s1 s2 s1"


def test_conjugate_example():
    c = conjugate(BraidWord.parse(3, "s2"), BraidWord.parse(3, "s1^2"))
    assert c.to_text() == "s1^-2 s2 s1^2"
    assert c.to_unicode() == "σ₁⁻²σ₂σ₁²"


def test_parse_accepts_unicode_rendering():
    assert BraidWord.parse(3, "σ₁⁻²σ₂σ₁²") == BraidWord.parse(3, "s1^-2 s2 s1^2")


def test_parse_rejects_garbage():
    with pytest.raises(BraidError):
        BraidWord.parse(3, "s1 t2")
    with pytest.raises(BraidError):
        BraidWord.parse(3, "s3")


def test_braid_relation_normal_form():
    assert equal(BraidWord.parse(3, "s1 s2 s1"), BraidWord.parse(3, "s2 s1 s2"))
    assert not equal(BraidWord.parse(3, "s1 s2"), BraidWord.parse(3, "s2 s1"))


def test_permutation_of():
    assert permutation_of(BraidWord.parse(3, "s1^3")) == Permutation((2, 1, 3))
    assert permutation_of(full_twist(4)).is_identity()
    assert permutation_of(half_twist(4)) == Permutation((4, 3, 2, 1))


@pytest.mark.parametrize("n, expected", [(2, 2), (3, 6), (4, 12)])
def test_full_twist_exponent_sum(n, expected):
    assert exponent_sum(full_twist(n)) == expected
    assert equal(full_twist(n), half_twist(n) ** 2)


def test_full_twist_normal_form_is_delta_squared():
    nf = normal_form(full_twist(4))
    assert nf.infimum == 2 and nf.factors == ()
    assert nf.to_text() == "D^2"


def test_cycle_type_descending():
    assert permutation_of(BraidWord.parse(4, "s1 s2")).cycle_type() == (3, 1)


def test_json_round_trip():
    w = BraidWord.parse(4, "s1^-2 s3 s2^2")
    assert BraidWord.from_json(4, json.dumps(w.to_json())) == w


def test_product_and_strand_mismatch():
    assert product([sigma(3, 1), sigma(3, 2)], 3).to_text() == "s1 s2"
    with pytest.raises(BraidError):
        sigma(3, 1) * sigma(4, 1)


def test_artin_oracle_sanity():
    # sanity of the oracle itself on a braid relation and a non-relation
    a, b = BraidWord.parse(3, "s1 s2 s1"), BraidWord.parse(3, "s2 s1 s2")
    assert artin_action(a) == artin_action(b)
    assert artin_action(sigma(3, 1)) != artin_action(sigma(3, 2))


# -- properties -------------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(word_pairs())
def test_normal_form_decides_equality_like_artin_action(pair):
    a, b = pair
    assert equal(a, b) == (artin_action(a) == artin_action(b))


@settings(max_examples=150, deadline=None)
@given(strands.flatmap(lambda n: words(n, 12)))
def test_normal_form_word_is_same_braid(w):
    assert artin_action(normal_form(w).to_word()) == artin_action(w)


@settings(max_examples=100, deadline=None)
@given(strands.flatmap(lambda n: words(n, 12)))
def test_free_reduction_preserves_normal_form(w):
    padded = BraidWord(w.strand_count, ((1, 1), (1, -1)) + w.letters)
    assert padded.normal_form == w.normal_form
    assert w.free_reduce().normal_form == w.normal_form


@settings(max_examples=100, deadline=None)
@given(word_pairs())
def test_exponent_sum_is_conjugation_invariant(pair):
    a, b = pair
    assert exponent_sum(conjugate(a, b)) == exponent_sum(a)


@settings(max_examples=100, deadline=None)
@given(word_pairs())
def test_permutation_is_a_homomorphism(pair):
    a, b = pair
    assert permutation_of(a * b) == permutation_of(a) * permutation_of(b)


@settings(max_examples=100, deadline=None)
@given(strands.flatmap(lambda n: words(n, 10)))
def test_full_twist_is_central(w):
    d2 = full_twist(w.strand_count)
    assert equal(d2 * w, w * d2)


@settings(max_examples=100, deadline=None)
@given(strands.flatmap(lambda n: words(n, 10)))
def test_inverse_gives_identity(w):
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).normal_form == BraidWord.identity(w.strand_count).normal_form


@settings(max_examples=100, deadline=None)
@given(strands.flatmap(lambda n: words(n, 10)))
def test_json_round_trip_is_idempotent(w):
    again = BraidWord.from_json(w.strand_count, json.dumps(w.to_json()))
    assert again == w and again.normal_form == w.normal_form
