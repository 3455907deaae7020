from itertools import permutations

import pytest
from hypothesis import given, settings as hsettings

from shifted_balanced.combinat.typeb import (
    VEXILLARY_PATTERNS,
    ReflectionOrder,
    Root,
    SignedPermutation,
    Word,
    all_signed_permutations,
    apply,
    compose,
    count_reduced_words,
    enumerate_reduced_words,
    inverse,
    inversion_set,
    is_reduced,
    is_valid_reflection_order,
    is_vexillary,
    length,
    pattern_embeds,
    positive_roots,
    reflection_order,
    reflection_order_to_word,
    simple_reflection,
    word_to_perm,
)
from shifted_balanced.errors import (
    CapExceededError,
    InvalidReflectionOrderError,
    NotReducedError,
    ParseError,
)

from .conftest import reduced_word_strategy, signed_permutation_strategy


def perm(*window: int) -> SignedPermutation:
    return SignedPermutation(window)


def test_signed_permutation_validation():
    with pytest.raises(ParseError):
        perm(1, 1)
    with pytest.raises(ParseError):
        perm(1, 3)


def test_apply_and_negative_indices():
    w = perm(4, 5, -1, -2, -3)
    assert w(1) == 4
    assert w(3) == -1
    assert w(-3) == 1
    assert apply(w, 2) == 5
    assert apply(w, -5) == 3


def test_simple_reflections():
    assert simple_reflection(3, 0) == perm(-1, 2, 3)
    assert simple_reflection(3, 2) == perm(1, 3, 2)
    with pytest.raises(ParseError):
        simple_reflection(3, 3)


def test_word_to_perm_is_right_multiplication():
    assert word_to_perm(Word((1, 0), 2)) == perm(-2, 1)
    assert word_to_perm(Word((0, 1), 2)) == perm(2, -1)


def test_longest_element_b2():
    w0 = perm(-1, -2)
    assert length(w0) == 4
    assert inversion_set(w0) == set(positive_roots(2))
    assert count_reduced_words(w0) == 2
    assert [str(a) for a in enumerate_reduced_words(w0)] == ["0101", "1010"]


def test_inversion_set_example():
    w = perm(4, 5, -1, -2, -3)
    assert length(w) == 15
    inversions = inversion_set(w)
    assert Root.parse("e5+e3") in inversions
    assert Root.parse("e4+e1") in inversions
    assert Root.parse("e2-e1") in inversions
    assert Root.parse("e5+e4") not in inversions
    assert Root.parse("e5-e4") not in inversions


def test_inversion_set_small():
    assert inversion_set(perm(1, -3, 4, 2)) == {
        Root.parse(text) for text in ("e3", "e3-e1", "e3+e1", "e3-e2", "e4-e2")
    }


@given(signed_permutation_strategy())
@hsettings(max_examples=100, deadline=None)
def test_length_properties(w):
    assert length(w) == length(inverse(w))
    assert compose(w, inverse(w)) == SignedPermutation.identity(w.n)
    for a in range(w.n):
        assert abs(length(compose(w, simple_reflection(w.n, a))) - length(w)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reduced_word_counts_match_enumeration(n):
    for w in all_signed_permutations(n):
        words = list(enumerate_reduced_words(w))
        assert len(words) == count_reduced_words(w)
        assert len(set(words)) == len(words)
        assert words == sorted(words, key=lambda a: a.letters)
        for word in words:
            assert is_reduced(word)
            assert word_to_perm(word) == w


@pytest.mark.parametrize(
    "window, expected", [((-1, -2), 2), ((3, -1, -2), 5), ((-1, -2, -3), 42)]
)
def test_reduced_word_counts(window, expected):
    assert count_reduced_words(SignedPermutation(window)) == expected


def test_not_reduced():
    assert not is_reduced(Word((0, 0), 2))
    assert not is_reduced(Word((1, 0, 1, 0, 1), 2))
    with pytest.raises(NotReducedError):
        reflection_order(Word((1, 1), 2))


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_reduced_words(perm(-1, -2, -3), cap=5))


def test_short_b4_word():
    word = Word.parse("21031", 4)
    assert is_reduced(word)
    assert word_to_perm(word) == perm(1, -3, 4, 2)
    order = reflection_order(word)
    assert str(order) == "e3-e2, e3-e1, e3, e4-e2, e3+e1"
    assert order == ReflectionOrder.parse("e3-e2, e3-e1, e3, e4-e2, e3+e1")
    assert reflection_order_to_word(order, 4) == word


def test_reflection_order_parse():
    assert ReflectionOrder.parse("e2-e1,e2 ,").roots == (Root.minus(2, 1), Root.short(2))
    assert len(ReflectionOrder.parse("")) == 0
    with pytest.raises(InvalidReflectionOrderError):
        ReflectionOrder.parse("e1, e1")
    with pytest.raises(ParseError):
        ReflectionOrder.parse("e1-e2")


def test_reflection_order_of_worked_example():
    order = reflection_order(Word.parse("101213014201324", 5))
    assert str(order).split(", ")[:4] == ["e2-e1", "e2", "e2+e1", "e3+e2"]
    assert str(order).split(", ")[-1] == "e3-e2"


@given(reduced_word_strategy())
@hsettings(max_examples=100, deadline=None)
def test_reflection_order_inverts(word):
    order = reflection_order(word)
    assert set(order) == inversion_set(word_to_perm(word))
    assert reflection_order_to_word(order, word.n) == word


def test_reflection_order_to_word_rejects_bad_orders():
    with pytest.raises(InvalidReflectionOrderError):
        reflection_order_to_word(ReflectionOrder((Root.parse("e2"),)), 2)
    with pytest.raises(InvalidReflectionOrderError):
        ReflectionOrder((Root.parse("e1"), Root.parse("e1")))


@pytest.mark.parametrize("w", list(all_signed_permutations(2)))
def test_valid_orders_are_exactly_reflection_orders(w):
    inversions = sorted(inversion_set(w))
    expected = {reflection_order(a).roots for a in enumerate_reduced_words(w)}
    valid = {
        ordering for ordering in permutations(inversions)
        if is_valid_reflection_order(ordering, w)
    }
    assert valid == expected


def test_two_valid_orders_for_longest_b2():
    w0 = perm(-1, -2)
    valid = [o for o in permutations(sorted(inversion_set(w0))) if is_valid_reflection_order(o, w0)]
    assert len(valid) == 2


def test_valid_orders_b3_sample():
    w = perm(2, -3, 1)
    inversions = sorted(inversion_set(w))
    expected = {reflection_order(a).roots for a in enumerate_reduced_words(w)}
    valid = {o for o in permutations(inversions) if is_valid_reflection_order(o, w)}
    assert valid == expected


@pytest.mark.slow
@pytest.mark.parametrize("w", list(all_signed_permutations(3)), ids=str)
def test_valid_orders_b3_exhaustive(w):
    inversions = sorted(inversion_set(w))
    expected = {reflection_order(a).roots for a in enumerate_reduced_words(w)}
    valid = {o for o in permutations(inversions) if is_valid_reflection_order(o, w)}
    assert valid == expected


@pytest.mark.parametrize("w", list(all_signed_permutations(3)), ids=str)
def test_reflection_order_round_trip_on_b3(w):
    for word in enumerate_reduced_words(w):
        order = reflection_order(word)
        assert len(set(order)) == len(order)
        assert set(order) == inversion_set(w)
        assert reflection_order_to_word(order, 3) == word


def test_valid_order_needs_inversion_set():
    with pytest.raises(InvalidReflectionOrderError):
        is_valid_reflection_order((Root.parse("e1"),), perm(-1, -2))


def test_root_parsing():
    assert Root.parse("e3-e1") == Root.minus(3, 1)
    assert Root.parse("e_3+e_2") == Root.plus(3, 2)
    assert Root.parse("2e2") == Root.doubled(2)
    assert str(Root.parse("e4")) == "e4"
    with pytest.raises(ParseError):
        Root.parse("e1-e3")


def test_pattern_embedding():
    assert pattern_embeds(perm(4, 3, 2, 1), perm(3, 2, 1))
    assert not pattern_embeds(perm(1, 2, 3), perm(3, 2, 1))
    assert pattern_embeds(perm(-3, 1, 2), perm(-2, 1))
    assert not pattern_embeds(perm(3, 1, 2), perm(-2, 1))


def test_vexillary_patterns_are_not_vexillary():
    assert len(VEXILLARY_PATTERNS) == 18
    for pattern in VEXILLARY_PATTERNS:
        assert not is_vexillary(pattern)
    assert is_vexillary(perm(1, 2, 3))
    assert is_vexillary(perm(-1, -2))
