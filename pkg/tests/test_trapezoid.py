from itertools import permutations

import pytest

from shifted_balanced.combinat.kraskiewicz import kraskiewicz_insert
from shifted_balanced.combinat.shapes import Cell, ShiftedTableau, StrictPartition, is_balanced
from shifted_balanced.combinat.trapezoid import (
    check_strongly_balanced,
    extended_root_label,
    min_trapezoid,
    p_tableau_trapezoid,
    root_label,
    trapezoid,
    trapezoid_labeling,
    trapezoid_parameters,
    w_dr,
)
from shifted_balanced.combinat.typeb import Root, count_reduced_words, enumerate_reduced_words, inversion_set
from shifted_balanced.errors import CellOutOfShapeError, InvalidShapeError


def test_trapezoid_shapes():
    assert trapezoid(3, 2).parts == (7, 5, 3)
    assert trapezoid(2, 0).parts == (3, 1)
    assert trapezoid(1, 0).parts == (1,)
    with pytest.raises(InvalidShapeError):
        trapezoid(0, 1)


def test_trapezoid_parameters():
    assert trapezoid_parameters(StrictPartition((7, 5, 3))) == (3, 2)
    assert trapezoid_parameters(StrictPartition((6, 2, 1))) is None


@pytest.mark.parametrize(
    "parts, expected", [((6, 2, 1), (3, 1)), ((7, 5, 3), (3, 2)), ((2, 1), (2, 0)), ((1,), (1, 0)), ((5,), (1, 4))]
)
def test_min_trapezoid(parts, expected):
    assert min_trapezoid(StrictPartition(parts)) == expected


def test_root_labels_of_z32():
    assert root_label(3, 2, Cell(1, -2)) == Root.plus(3, 2)
    assert root_label(3, 2, Cell(1, 0)) == Root.short(3)
    assert root_label(3, 2, Cell(1, 1)) == Root.plus(4, 3)
    assert root_label(3, 2, Cell(1, 2)) == Root.plus(5, 3)
    assert root_label(3, 2, Cell(1, 4)) == Root.minus(3, 2)
    assert root_label(3, 2, Cell(3, 2)) == Root.plus(5, 1)
    assert extended_root_label(3, 2, Cell(1, -3)) == Root.doubled(3)
    with pytest.raises(CellOutOfShapeError):
        root_label(3, 2, Cell(3, 3))


@pytest.mark.parametrize("d, r", [(d, r) for d in range(1, 6) for r in range(0, 6) if d + r <= 6])
def test_labeling_is_the_inversion_set(d, r):
    labels = trapezoid_labeling(d, r)
    assert len(set(labels.values())) == len(labels)
    assert set(labels.values()) == inversion_set(w_dr(d, r))


def test_w_dr():
    assert w_dr(3, 2).window == (4, 5, -1, -2, -3)
    assert w_dr(2, 0).window == (-1, -2)


@pytest.mark.parametrize("d, r", [(2, 0), (2, 1), (1, 2), (3, 0)])
def test_reduced_words_count_standard_tableaux_of_trapezoid(d, r):
    from shifted_balanced.combinat.shapes import hook_length_formula_count

    assert count_reduced_words(w_dr(d, r)) == hook_length_formula_count(trapezoid(d, r))


def test_p_tableau_trapezoid():
    assert p_tableau_trapezoid(3, 2).rows == ((4, 3, 0, 1, 2, 3, 4), (3, 0, 1, 2, 3), (0, 1, 2))


@pytest.mark.parametrize("d, r", [(2, 0), (2, 1), (1, 3), (3, 0)])
def test_every_reduced_word_inserts_to_the_same_tableau(d, r):
    expected = p_tableau_trapezoid(d, r)
    for word in enumerate_reduced_words(w_dr(d, r)):
        assert kraskiewicz_insert(word).P == expected


def _fillings(shape: StrictPartition):
    for values in permutations(range(1, shape.size + 1)):
        rows, start = [], 0
        for part in shape.parts:
            rows.append(values[start:start + part])
            start += part
        yield ShiftedTableau.from_rows(rows)


@pytest.mark.parametrize("d, r", [(2, 0), (2, 1)])
def test_strongly_balanced_matches_balanced(d, r):
    for tableau in _fillings(trapezoid(d, r)):
        assert is_balanced(tableau) == check_strongly_balanced(tableau, d, r)


def test_strongly_balanced_example():
    tableau = ShiftedTableau.from_rows([[4, 8, 7, 10, 13, 5, 15], [3, 2, 6, 9, 1], [11, 12, 14]])
    assert check_strongly_balanced(tableau)
    swapped = ShiftedTableau.from_rows([[4, 8, 7, 10, 13, 5, 15], [3, 1, 6, 9, 2], [11, 12, 14]])
    assert not check_strongly_balanced(swapped)
    assert not is_balanced(swapped)


def test_strongly_balanced_rejects_other_shapes(example_bs):
    with pytest.raises(InvalidShapeError):
        check_strongly_balanced(example_bs)
