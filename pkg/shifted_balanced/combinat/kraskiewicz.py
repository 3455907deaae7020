"""Kraśkiewicz insertion of reduced words of type B into shifted tableaux.

The insertion tableau ``P`` has unimodal rows (strictly decreasing, then
strictly increasing) and its reading word, rows read bottom to top, is a
reduced word of the same element. The recording tableau ``Q`` is standard.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cache
from typing import Iterator, Sequence

from shifted_balanced.combinat.shapes import (
    ShiftedTableau,
    StrictPartition,
    hook_length_formula_count,
    is_standard,
)
from shifted_balanced.combinat.typeb import (
    SignedPermutation,
    Word,
    enumerate_reduced_words,
    is_reduced,
    word_to_perm,
)
from shifted_balanced.errors import (
    InsertionError,
    InternalInvariantError,
    InvalidShapeError,
    NotReducedError,
    NotStandardError,
    ParseError,
)

logger = logging.getLogger(__name__)

Row = tuple[int, ...]


def is_unimodal(seq: Sequence[int]) -> bool:
    if not seq:
        return True
    k = list(seq).index(min(seq))
    down, up = seq[: k + 1], seq[k:]
    return all(x > y for x, y in zip(down, down[1:])) and all(x < y for x, y in zip(up, up[1:]))


@dataclass(frozen=True)
class UnimodalRow:
    letters: Row

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not is_unimodal(self.letters):
            raise InsertionError(f"row {list(self.letters)} is not unimodal")

    @property
    def pivot(self) -> int:
        return self.letters.index(min(self.letters))

    @property
    def down(self) -> Row:
        """The decreasing part, minimum included."""
        return self.letters[: self.pivot + 1]

    @property
    def up(self) -> Row:
        return self.letters[self.pivot + 1:]


def _contains_101(row: Row) -> bool:
    letters = iter(row)
    return all(any(x == t for x in letters) for t in (1, 0, 1))


def row_insert(row: Row, a: int) -> tuple[Row, int | None]:
    """Insert ``a`` into one row; return the new row and the bumped letter, if any."""
    row = tuple(row)
    if not row or is_unimodal(row + (a,)):
        return row + (a,), None
    if a == 0 and _contains_101(row):
        return row, 0
    unimodal = UnimodalRow(row)
    down, up = list(unimodal.down), list(unimodal.up)
    larger = [x for x in up if x >= a]
    if not larger:
        raise InsertionError(f"cannot insert {a} into row {list(row)}: the word is not reduced")
    b = larger[0]
    if b != a:
        up[up.index(b)] = a
        c = b
    else:
        c = a + 1
    d = max(x for x in down if x <= c)
    if d != c:
        down[down.index(d)] = c
        bumped = d
    else:
        bumped = c - 1
    return tuple(down + up), bumped


def reading_word(tableau: ShiftedTableau, n: int | None = None) -> Word:
    letters = tuple(x for row in reversed(tableau.rows) for x in row)
    if n is None:
        n = max(letters, default=0) + 1
    return Word(letters, n)


@dataclass(frozen=True)
class InsertionPair:
    P: ShiftedTableau
    Q: ShiftedTableau
    n: int

    def __post_init__(self) -> None:
        if self.P.shape != self.Q.shape:
            raise InvalidShapeError(f"P has shape {self.P.shape} but Q has shape {self.Q.shape}")

    @classmethod
    def empty(cls, n: int) -> InsertionPair:
        return cls(ShiftedTableau.empty(), ShiftedTableau.empty(), n)

    @property
    def shape(self) -> StrictPartition:
        return self.P.shape


def insert_letter(state: InsertionPair, a: int, stamp: int) -> InsertionPair:
    if not 0 <= a < state.n:
        raise ParseError(f"letter {a} is outside 0..{state.n - 1}")
    p_rows = [tuple(row) for row in state.P.rows]
    q_rows = [tuple(row) for row in state.Q.rows]
    letter = a
    for k in range(len(p_rows) + 1):
        if k == len(p_rows):
            p_rows.append((letter,))
            q_rows.append((stamp,))
            break
        p_rows[k], bumped = row_insert(p_rows[k], letter)
        if bumped is None:
            q_rows[k] = q_rows[k] + (stamp,)
            break
        letter = bumped
    try:
        return InsertionPair(ShiftedTableau.from_rows(p_rows), ShiftedTableau.from_rows(q_rows), state.n)
    except InvalidShapeError as exc:
        raise InsertionError(f"inserting {a} broke the shifted shape: {exc}") from exc


def insertion_history(word: Word) -> list[InsertionPair]:
    """The pair after each letter; the last entry is the full insertion."""
    if not is_reduced(word):
        raise NotReducedError(f"word {word} is not reduced")
    state = InsertionPair.empty(word.n)
    history = []
    for stamp, a in enumerate(word, 1):
        state = insert_letter(state, a, stamp)
        history.append(state)
    return history


def kraskiewicz_insert(word: Word) -> InsertionPair:
    history = insertion_history(word)
    pair = history[-1] if history else InsertionPair.empty(word.n)
    if not all(is_unimodal(row) for row in pair.P.rows):
        raise InternalInvariantError(f"insertion of {word} produced a non-unimodal row")
    return pair


def longest_unimodal_subsequence(seq: Sequence[int]) -> int:
    m = len(seq)
    dec = [1] * m
    for k in range(m):
        for j in range(k):
            if seq[j] > seq[k]:
                dec[k] = max(dec[k], dec[j] + 1)
    uni = list(dec)
    for k in range(m):
        for j in range(k):
            if seq[j] < seq[k]:
                uni[k] = max(uni[k], uni[j] + 1)
    return max(uni, default=0)


def _rows_are_maximal(rows: Sequence[Row]) -> bool:
    """Row i is a longest unimodal subsequence of rows d, d-1, ..., i read in order."""
    suffix: list[int] = []
    for row in reversed(rows):
        suffix.extend(row)
        if longest_unimodal_subsequence(suffix) != len(row):
            return False
    return True


def is_sdt(tableau: ShiftedTableau, w: SignedPermutation) -> bool:
    """Shifted decomposition tableau of ``w``."""
    if any(not 0 <= x < w.n for x in tableau.values()):
        return False
    if not all(is_unimodal(row) for row in tableau.rows):
        return False
    word = reading_word(tableau, w.n)
    if len(word) != w.length or word_to_perm(word) != w:
        return False
    return _rows_are_maximal(tableau.rows)


@cache
def _row_preimages(row: Row, emitted: int, n: int) -> tuple[tuple[Row, int], ...]:
    """Every (previous row, inserted letter) that row-inserts to ``row`` bumping ``emitted``."""
    found: set[tuple[Row, int]] = set()

    def consider(candidate: Row, letter: int) -> None:
        if not 0 <= letter < n or any(not 0 <= x < n for x in candidate):
            return
        if not is_unimodal(candidate):
            return
        try:
            if row_insert(candidate, letter) == (row, emitted):
                found.add((candidate, letter))
        except InsertionError:
            return

    def replaced(changes: dict[int, int]) -> Row:
        return tuple(changes.get(k, x) for k, x in enumerate(row))

    # unchanged row: the 0-into-101 case and the double-match case
    consider(row, emitted)
    for q in range(len(row)):
        # the inserted letter overwrote emitted + 1, the decreasing part kept its match
        consider(replaced({q: emitted + 1}), row[q])
        # the inserted letter matched, its successor overwrote emitted
        consider(replaced({q: emitted}), row[q] - 1)
        for p in range(len(row)):
            if p != q:
                # both parts overwritten
                consider(replaced({p: emitted, q: row[p]}), row[q])
    return tuple(sorted(found))


def _unwind(rows: list[Row], k: int, emitted: int, n: int) -> Iterator[tuple[tuple[Row, ...], int]]:
    if k < 0:
        yield tuple(rows), emitted
        return
    for previous, letter in _row_preimages(rows[k], emitted, n):
        yield from _unwind(rows[:k] + [previous] + rows[k + 1:], k - 1, letter, n)


def reverse_insert(state: InsertionPair) -> tuple[InsertionPair, int]:
    """Undo the insertion of the letter recorded by the largest entry of Q."""
    size = state.Q.size
    if size == 0:
        raise InsertionError("cannot reverse-insert from an empty pair")
    if not is_standard(state.Q):
        raise NotStandardError("the recording tableau is not standard")
    if not all(is_unimodal(row) for row in state.P.rows):
        raise InsertionError("the insertion tableau has a row that is not unimodal")

    x = next(k for k, row in enumerate(state.Q.rows) if row[-1] == size)
    popped = state.P.rows[x][-1]
    p_rows = [tuple(row) for row in state.P.rows]
    q_rows = [tuple(row) for row in state.Q.rows]
    p_rows[x] = p_rows[x][:-1]
    q_rows[x] = q_rows[x][:-1]
    shorter_q = ShiftedTableau.from_rows(q_rows)

    survivors = []
    for rows, letter in _unwind(p_rows, x - 1, popped, state.n):
        try:
            candidate = InsertionPair(ShiftedTableau.from_rows(rows), shorter_q, state.n)
        except InvalidShapeError:
            continue
        word = Word(reading_word(candidate.P, state.n).letters + (letter,), state.n)
        if not is_reduced(word):
            continue
        try:
            if insert_letter(candidate, letter, size) != state:
                continue
        except InsertionError:
            continue
        survivors.append((candidate, letter))

    if len(survivors) > 1:
        survivors = [(c, a) for c, a in survivors if _rows_are_maximal(c.P.rows)]
    if not survivors:
        raise InsertionError("no reduced pair inserts to the given pair")
    if len(survivors) > 1:
        raise InternalInvariantError(
            f"reverse insertion is ambiguous: {len(survivors)} pre-images of {state.P.rows}"
        )
    return survivors[0]


def insertion_tableaux(w: SignedPermutation, cap: int | None = None) -> set[ShiftedTableau]:
    """SDT(w), read off as the insertion tableaux of Red(w)."""
    return {kraskiewicz_insert(word).P for word in enumerate_reduced_words(w, cap)}


def count_by_insertion(w: SignedPermutation, cap: int | None = None) -> int:
    """|Red(w)| as a sum of f^{shape} over SDT(w)."""
    return sum(hook_length_formula_count(P.shape) for P in insertion_tableaux(w, cap))
