"""Trapezoids Z(d, r), their root labeling and the element w^(d,r)."""

from __future__ import annotations

import logging
from functools import cache

from shifted_balanced.combinat.shapes import (
    Cell,
    ShiftedTableau,
    StrictPartition,
    extra_cell,
)
from shifted_balanced.combinat.typeb import Root, SignedPermutation, signed_difference
from shifted_balanced.errors import CellOutOfShapeError, InternalInvariantError, InvalidShapeError

logger = logging.getLogger(__name__)


def trapezoid(d: int, r: int) -> StrictPartition:
    if d < 1 or r < 0:
        raise InvalidShapeError(f"Z(d, r) needs d >= 1 and r >= 0, got d={d}, r={r}")
    return StrictPartition(tuple(r + 2 * (d - i) + 1 for i in range(1, d + 1)))


def trapezoid_parameters(shape: StrictPartition) -> tuple[int, int] | None:
    """``(d, r)`` if the shape is a trapezoid."""
    if not shape.parts:
        return None
    d, r = shape.d, shape.parts[-1] - 1
    return (d, r) if trapezoid(d, r) == shape else None


def min_trapezoid(shape: StrictPartition) -> tuple[int, int]:
    d = shape.d
    if d == 0:
        raise InvalidShapeError("the empty shape has no trapezoid")
    r = max(0, max(shape.parts[i - 1] - 2 * (d - i) - 1 for i in range(1, d + 1)))
    return d, r


def root_label(d: int, r: int, cell: tuple[int, int]) -> Root:
    if cell not in trapezoid(d, r):
        raise CellOutOfShapeError(f"cell {tuple(cell)} is not in Z({d}, {r})")
    i, j = cell
    top = d + 1 - i
    if j <= 0:
        found = signed_difference(top, j)
    elif j <= r:
        found = signed_difference(top, -(j + d))
    else:
        found = signed_difference(top, j - r)
    if found is None or found[1] < 0:
        raise InternalInvariantError(f"cell {tuple(cell)} of Z({d}, {r}) has no positive label")
    return found[0]


def extended_root_label(d: int, r: int, cell: tuple[int, int]) -> Root:
    i = cell[0]
    if 1 <= i <= d and cell[1] == -(d + 1 - i):
        return Root.doubled(d + 1 - i)
    return root_label(d, r, cell)


@cache
def trapezoid_labeling(d: int, r: int) -> dict[Cell, Root]:
    return {cell: root_label(d, r, cell) for cell in trapezoid(d, r).cells}


def w_dr(d: int, r: int) -> SignedPermutation:
    """``[d+1, ..., d+r, -1, ..., -d]``."""
    trapezoid(d, r)
    return SignedPermutation(tuple(range(d + 1, d + r + 1)) + tuple(-k for k in range(1, d + 1)))


def p_tableau_trapezoid(d: int, r: int) -> ShiftedTableau:
    """P(w^(d,r)): ``r - j`` left of column 0, ``j`` from column 0 on."""
    shape = trapezoid(d, r)
    return ShiftedTableau.from_entries(
        shape, {cell: (r - cell.col if cell.col < 0 else cell.col) for cell in shape.cells}
    )


def check_strongly_balanced(tableau: ShiftedTableau, d: int | None = None, r: int | None = None) -> bool:
    """The local ordering conditions that characterise balanced fillings of a trapezoid.

    Each condition compares the entries whose labels are the roots named;
    ``between`` is strict.
    """
    params = trapezoid_parameters(tableau.shape)
    if params is None or (d is not None and d != params[0]) or (r is not None and r != params[1]):
        raise InvalidShapeError(f"shape {tableau.shape} is not the trapezoid Z({d}, {r})")
    d, r = params
    n = d + r
    value: dict[Root, int] = {}
    for cell, root in trapezoid_labeling(d, r).items():
        value[root] = tableau[cell]
    for i in range(1, d + 1):
        value[extended_root_label(d, r, extra_cell(tableau.shape, d + 1 - i))] = value[Root.short(i)]

    def at(x: int, y: int) -> int:
        found = signed_difference(x, y)
        if found is None or found[1] < 0 or found[0] not in value:
            raise InternalInvariantError(f"e{x} - e{y} does not label a cell of Z({d}, {r})")
        return value[found[0]]

    def between(v: int, u: int, w: int) -> bool:
        return min(u, w) < v < max(u, w)

    outer = range(d + 1, n + 1)
    for i in range(1, d + 1):
        alpha = at(i, 0)
        if any(alpha > at(i, -q) for q in outer):
            return False
        if any(not between(alpha, at(i, k), at(k, 0)) for k in range(1, i)):
            return False
        for p in outer:
            alpha = at(i, -p)
            if any(alpha > at(i, -q) for q in range(p + 1, n + 1)):
                return False
            if any(not between(alpha, at(i, k), at(k, -p)) for k in range(1, i)):
                return False
        for j in range(1, i):
            alpha = at(i, j)
            if any(not between(alpha, at(i, k), at(k, j)) for k in range(j + 1, i)):
                return False
            alpha = at(i, -j)
            if any(alpha > at(i, -q) or alpha > at(j, -q) for q in outer):
                return False
            if any(not between(alpha, at(i, k), at(j, -k)) for k in range(-j + 1, i)):
                return False
    return True
