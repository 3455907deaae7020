"""Strict partitions, shifted diagrams, hooks and ranks, standard and balanced tableaux.

Cells use the signed column coordinates of the shifted diagram: row ``i``
(1-based, top to bottom) of a shape with ``d`` rows covers the columns
``i - d .. λ_i + i - d - 1``, so column 0 is the staircase boundary and the
columns to its left are negative.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cache, cached_property
from math import factorial, prod
from typing import Iterator, Mapping, NamedTuple, Sequence

from shifted_balanced.config import settings
from shifted_balanced.errors import (
    CapExceededError,
    CellOutOfShapeError,
    InternalInvariantError,
    InvalidShapeError,
    ParseError,
)

logger = logging.getLogger(__name__)


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class StrictPartition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise InvalidShapeError(f"parts must be positive, got {list(parts)}")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise InvalidShapeError(f"parts must be strictly decreasing, got {list(parts)}")

    @classmethod
    def parse(cls, text: str) -> StrictPartition:
        """Parse ``"6,2,1"`` (commas or blanks). The empty shape is rejected."""
        tokens = text.replace(",", " ").split()
        if not tokens:
            raise InvalidShapeError("empty shape")
        try:
            return cls(tuple(int(t) for t in tokens))
        except ValueError as exc:
            raise ParseError(f"cannot parse shape {text!r}") from exc

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def part(self, i: int) -> int:
        """λ_i for a 1-based row index; 0 past the last row."""
        return self.parts[i - 1] if 1 <= i <= self.d else 0

    def row_columns(self, i: int) -> range:
        return range(i - self.d, self.part(i) + i - self.d)

    def __contains__(self, cell: object) -> bool:
        if not isinstance(cell, tuple) or len(cell) != 2:
            return False
        i, j = cell
        return 1 <= i <= self.d and i - self.d <= j < self.part(i) + i - self.d

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(Cell(i, j) for i in range(1, self.d + 1) for j in self.row_columns(i))

    def column_rows(self, j: int) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.d + 1) if Cell(i, j) in self)


@dataclass(frozen=True)
class ShiftedTableau:
    """A filling of a shifted diagram, stored as dense rows.

    Row ``i`` holds the values of columns ``i - d, i - d + 1, ...`` in order.
    """

    shape: StrictPartition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(row) for row in rows) != self.shape.parts:
            raise InvalidShapeError(
                f"row lengths {[len(r) for r in rows]} do not match shape {list(self.shape.parts)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> ShiftedTableau:
        rows = [tuple(row) for row in rows]
        while rows and not rows[-1]:
            rows.pop()
        return cls(StrictPartition(tuple(len(row) for row in rows)), tuple(rows))

    @classmethod
    def from_entries(cls, shape: StrictPartition, entries: Mapping[Cell, int]) -> ShiftedTableau:
        extra = set(entries) - set(shape.cells)
        if extra:
            raise InvalidShapeError(f"cells {sorted(extra)} are outside shape {shape}")
        try:
            rows = tuple(
                tuple(entries[Cell(i, j)] for j in shape.row_columns(i))
                for i in range(1, shape.d + 1)
            )
        except KeyError as exc:
            raise InvalidShapeError(f"cell {exc.args[0]} of shape {shape} is not filled") from exc
        return cls(shape, rows)

    @classmethod
    def empty(cls) -> ShiftedTableau:
        return cls(StrictPartition(()), ())

    def __getitem__(self, cell: tuple[int, int]) -> int:
        if cell not in self.shape:
            raise CellOutOfShapeError(f"cell {tuple(cell)} is not in shape {self.shape}")
        i, j = cell
        return self.rows[i - 1][j - (i - self.shape.d)]

    @property
    def size(self) -> int:
        return self.shape.size

    def items(self) -> Iterator[tuple[Cell, int]]:
        for cell in self.shape.cells:
            yield cell, self[cell]

    def entries(self) -> dict[Cell, int]:
        return dict(self.items())

    def values(self) -> list[int]:
        return [v for row in self.rows for v in row]

    def is_bijective(self) -> bool:
        return sorted(self.values()) == list(range(1, self.size + 1))

    def position_of(self, value: int) -> Cell:
        for cell, v in self.items():
            if v == value:
                return cell
        raise KeyError(value)


def strict_partitions(size: int) -> Iterator[StrictPartition]:
    """All strict partitions of ``size``, largest first part first."""

    def build(remaining: int, bound: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, bound), 0, -1):
            for rest in build(remaining - part, part - 1):
                yield (part, *rest)

    for parts in build(size, size):
        if parts:
            yield StrictPartition(parts)


def cells(shape: StrictPartition) -> list[Cell]:
    return list(shape.cells)


def extra_cell(shape: StrictPartition, i: int) -> Cell:
    """The box ``(i, -(d + 1 - i))`` added to row ``i`` by the extended shape."""
    return Cell(i, -(shape.d + 1 - i))


def extended_cells(shape: StrictPartition) -> list[Cell]:
    extras = [extra_cell(shape, i) for i in range(1, shape.d + 1)]
    return sorted([*shape.cells, *extras])


def extended_filling(tableau: ShiftedTableau) -> dict[Cell, int]:
    filling = tableau.entries()
    for i in range(1, tableau.shape.d + 1):
        filling[extra_cell(tableau.shape, i)] = tableau[Cell(i, 0)]
    return filling


def _require_cell(shape: StrictPartition, cell: tuple[int, int]) -> Cell:
    if cell not in shape:
        raise CellOutOfShapeError(f"cell {tuple(cell)} is not in shape {shape}")
    return Cell(*cell)


def hook(shape: StrictPartition, cell: tuple[int, int]) -> frozenset[Cell]:
    i, j = _require_cell(shape, cell)
    members = {Cell(i, j)}
    members.update(Cell(i, c) for c in shape.row_columns(i) if c > j)
    members.update(Cell(k, j) for k in range(i + 1, shape.d + 1) if Cell(k, j) in shape)
    if j < 0:
        mirror = shape.d + j + 1
        members.update(Cell(mirror, c) for c in shape.row_columns(mirror))
    return frozenset(members)


def hook_length(shape: StrictPartition, cell: tuple[int, int]) -> int:
    return len(hook(shape, cell))


def extended_hook(shape: StrictPartition, cell: tuple[int, int]) -> frozenset[Cell]:
    members = hook(shape, cell)
    if cell[1] < 0:
        members = members | {extra_cell(shape, shape.d + cell[1] + 1)}
    return members


def extended_hook_length(shape: StrictPartition, cell: tuple[int, int]) -> int:
    return len(extended_hook(shape, cell))


def rank(shape: StrictPartition, cell: tuple[int, int]) -> int:
    i, j = _require_cell(shape, cell)
    lam, d = shape.parts, shape.d
    if j >= 0:
        return lam[i - 1] - d + i - j
    return lam[i - 1] - d + i + lam[d + j] + j + 1


def rank_by_count(shape: StrictPartition, cell: tuple[int, int]) -> int:
    """The rank counted off the hook instead of taken from the closed formula."""
    members = hook(shape, cell)
    i, j = cell
    if j >= 0:
        return sum(1 for c in members if c.row == i)
    return 2 + sum(1 for c in members if c.col > 0)


def hook_length_formula_count(shape: StrictPartition) -> int:
    denominator = prod(hook_length(shape, c) for c in shape.cells)
    count, remainder = divmod(factorial(shape.size), denominator)
    if remainder:
        raise InternalInvariantError(
            f"hook product {denominator} does not divide {shape.size}! for shape {shape}"
        )
    return count


def is_standard(tableau: ShiftedTableau) -> bool:
    if not tableau.is_bijective():
        return False
    for cell, value in tableau.items():
        right = Cell(cell.row, cell.col + 1)
        below = Cell(cell.row + 1, cell.col)
        if right in tableau.shape and tableau[right] <= value:
            return False
        if below in tableau.shape and tableau[below] <= value:
            return False
    return True


def enumerate_syt(shape: StrictPartition, cap: int | None = None) -> Iterator[ShiftedTableau]:
    """Yield SYT(λ) ordered lexicographically by the cells holding 1, 2, ..., N."""
    cap = settings.syt_cap if cap is None else cap
    if shape.size > cap:
        raise CapExceededError("SYT enumeration", shape.size, cap)

    d, lam, total = shape.d, shape.parts, shape.size
    filled = [0] * d
    placed: dict[Cell, int] = {}
    count = 0

    def grow(value: int) -> Iterator[ShiftedTableau]:
        nonlocal count
        if value > total:
            count += 1
            yield ShiftedTableau.from_entries(shape, placed)
            return
        for k in range(d):
            # the box above the next box of row k+1 must already be filled
            if filled[k] < lam[k] and (k == 0 or filled[k - 1] >= filled[k] + 2):
                cell = Cell(k + 1, k + 1 - d + filled[k])
                placed[cell] = value
                filled[k] += 1
                yield from grow(value + 1)
                filled[k] -= 1
                del placed[cell]

    yield from grow(1)
    logger.debug("enumerated %d standard tableaux of shape %s", count, shape)


@cache
def _balance_plan(shape: StrictPartition) -> tuple[tuple[Cell, int, tuple[Cell, ...]], ...]:
    """Per cell: its rank and the cells whose values fill the rest of its extended hook.

    Extra cells are replaced by the column-0 cell they copy, so a cell may
    appear twice.
    """
    plan = []
    for cell in shape.cells:
        sources = [c for c in hook(shape, cell) if c != cell]
        if cell.col < 0:
            sources.append(Cell(shape.d + cell.col + 1, 0))
        plan.append((cell, rank(shape, cell), tuple(sorted(sources))))
    return tuple(plan)


def is_balanced(tableau: ShiftedTableau) -> bool:
    """Every entry is the rank-th largest of its extended hook, counting repeats."""
    if not tableau.is_bijective():
        return False
    for cell, rk, sources in _balance_plan(tableau.shape):
        value = tableau[cell]
        if 1 + sum(1 for s in sources if tableau[s] > value) != rk:
            return False
    return True


def _place_descending(
    shape: StrictPartition,
    plan: Sequence[tuple[Cell, int, tuple[Cell, ...]]],
) -> Iterator[ShiftedTableau]:
    # Values go in from N down to 1, so the cells already placed are exactly the
    # larger entries: the count in a hook is final the moment a cell is filled.
    placed: dict[Cell, int] = {}

    def place(value: int) -> Iterator[ShiftedTableau]:
        if value == 0:
            yield ShiftedTableau.from_entries(shape, placed)
            return
        for cell, rk, sources in plan:
            if cell in placed:
                continue
            if sum(1 for s in sources if s in placed) == rk - 1:
                placed[cell] = value
                yield from place(value - 1)
                del placed[cell]

    yield from place(shape.size)


def enumerate_bs_bruteforce(shape: StrictPartition, cap: int | None = None) -> Iterator[ShiftedTableau]:
    """Oracle enumeration of BS(λ) by placing N, N-1, ..., 1 with exact pruning."""
    cap = settings.bs_cap if cap is None else cap
    if shape.size > cap:
        raise CapExceededError("balanced brute-force search", shape.size, cap)
    count = 0
    for tableau in _place_descending(shape, _balance_plan(shape)):
        if not is_balanced(tableau):
            raise InternalInvariantError(f"pruned search produced an unbalanced tableau {tableau.rows}")
        count += 1
        yield tableau
    logger.debug("brute force found %d balanced tableaux of shape %s", count, shape)


def adjacent_column_order_holds(tableau: ShiftedTableau) -> bool:
    """For j >= 0 and columns j, j+1 of equal length, rows increase from j to j+1."""
    shape = tableau.shape
    max_col = max((c.col for c in shape.cells), default=-1)
    for j in range(0, max_col):
        rows = shape.column_rows(j)
        if rows != shape.column_rows(j + 1):
            continue
        if any(tableau[Cell(i, j)] >= tableau[Cell(i, j + 1)] for i in rows):
            return False
    return True


# Naive rank: arm length + 1 over the plain hook, as for straight shapes.
# Its counts differ from f^λ in general; no contract.


@cache
def _naive_plan(shape: StrictPartition) -> tuple[tuple[Cell, int, tuple[Cell, ...]], ...]:
    plan = []
    for cell in shape.cells:
        arm = sum(1 for c in shape.row_columns(cell.row) if c > cell.col)
        sources = tuple(sorted(c for c in hook(shape, cell) if c != cell))
        plan.append((cell, arm + 1, sources))
    return tuple(plan)


def is_naively_balanced(tableau: ShiftedTableau) -> bool:
    if not tableau.is_bijective():
        return False
    for cell, rk, sources in _naive_plan(tableau.shape):
        value = tableau[cell]
        if 1 + sum(1 for s in sources if tableau[s] > value) != rk:
            return False
    return True


def count_naively_balanced(shape: StrictPartition, cap: int | None = None) -> int:
    cap = settings.bs_cap if cap is None else cap
    if shape.size > cap:
        raise CapExceededError("naive balanced search", shape.size, cap)
    return sum(1 for _ in _place_descending(shape, _naive_plan(shape)))
