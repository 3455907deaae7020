import pytest
from hypothesis import strategies as st

from shifted_balanced.combinat.shapes import ShiftedTableau, StrictPartition
from shifted_balanced.combinat.typeb import SignedPermutation, Word, enumerate_reduced_words


@st.composite
def strict_partition_strategy(draw, max_size=8):
    parts = draw(st.sets(st.integers(min_value=1, max_value=max_size), min_size=1, max_size=4))
    parts = sorted(parts, reverse=True)
    while sum(parts) > max_size:
        parts.pop(0)
    if not parts:
        parts = [1]
    return StrictPartition(tuple(parts))


@st.composite
def signed_permutation_strategy(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    values = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(tuple(s * v for s, v in zip(signs, values)))


@st.composite
def reduced_word_strategy(draw, max_n=3):
    w = draw(signed_permutation_strategy(max_n=max_n))
    words = list(enumerate_reduced_words(w, cap=16))
    return draw(st.sampled_from(words))


@pytest.fixture
def shape_621() -> StrictPartition:
    return StrictPartition((6, 2, 1))


@pytest.fixture
def example_bs() -> ShiftedTableau:
    return ShiftedTableau.from_rows([[6, 3, 4, 1, 5, 9], [7, 8], [2]])


@pytest.fixture
def example_syt() -> ShiftedTableau:
    return ShiftedTableau.from_rows([[1, 2, 3, 5, 6, 9], [4, 7], [8]])


@pytest.fixture
def example_word() -> Word:
    return Word.parse("201012103412312", 5)
