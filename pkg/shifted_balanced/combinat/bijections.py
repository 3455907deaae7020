"""The bijection between standard and balanced shifted tableaux of one shape.

Both directions pass through a trapezoid Z(d, r) containing λ:

    SYT(λ) --pad--> SYT(Z)|_λ --reverse insertion--> Red(w^(d,r)) ending in a^λ
           --reflection order--> BS(Z)|_λ --unpad--> BS(λ)

and back the same way.
"""

from __future__ import annotations

import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from shifted_balanced.combinat.kraskiewicz import (
    InsertionPair,
    kraskiewicz_insert,
    reverse_insert,
)
from shifted_balanced.combinat.shapes import (
    Cell,
    ShiftedTableau,
    StrictPartition,
    is_balanced,
    is_standard,
)
from shifted_balanced.combinat.trapezoid import (
    min_trapezoid,
    p_tableau_trapezoid,
    trapezoid,
    trapezoid_labeling,
    trapezoid_parameters,
    w_dr,
)
from shifted_balanced.combinat.typeb import (
    ReflectionOrder,
    SignedPermutation,
    Word,
    compose,
    is_reduced,
    reflection_order,
    reflection_order_to_word,
    simple_reflection,
    word_to_perm,
)
from shifted_balanced.errors import (
    InternalInvariantError,
    InvalidShapeError,
    NotBalancedError,
    NotReducedError,
    NotRestrictedError,
    NotStandardError,
    ShiftedBalancedError,
    StageError,
    WrongElementError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrapezoidContext:
    shape: StrictPartition
    d: int
    r: int

    def __post_init__(self) -> None:
        if not self.shape.parts:
            raise InvalidShapeError("the empty shape has no trapezoid")
        if self.d != self.shape.d:
            raise InvalidShapeError(f"shape {self.shape} has {self.shape.d} rows, not d={self.d}")
        if self.r < 0:
            raise InvalidShapeError(f"r must be non-negative, got {self.r}")
        z = trapezoid(self.d, self.r).parts
        if any(part > bound for part, bound in zip(self.shape.parts, z)):
            raise InvalidShapeError(f"shape {self.shape} does not fit in Z({self.d}, {self.r})")

    @classmethod
    def build(cls, shape: StrictPartition, d: int | None = None, r: int | None = None) -> TrapezoidContext:
        if not shape.parts:
            raise InvalidShapeError("the empty shape has no trapezoid")
        _, r_min = min_trapezoid(shape)
        return cls(shape, shape.d if d is None else d, r_min if r is None else r)

    @property
    def n(self) -> int:
        return self.d + self.r

    @property
    def size(self) -> int:
        return self.shape.size

    @cached_property
    def ambient(self) -> StrictPartition:
        return trapezoid(self.d, self.r)

    @property
    def ell(self) -> int:
        return self.ambient.size

    @cached_property
    def mu(self) -> tuple[int, ...]:
        return tuple(z - lam for z, lam in zip(self.ambient.parts, self.shape.parts))

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        """Partial sums σ_0 = 0, σ_i = μ_1 + ... + μ_i."""
        sums = [0]
        for m in self.mu:
            sums.append(sums[-1] + m)
        return tuple(sums)

    @cached_property
    def nu(self) -> tuple[int, ...]:
        """ν_i = min(μ_i, ..., μ_d)."""
        return tuple(min(self.mu[i:]) for i in range(self.d))

    @cached_property
    def complement_cells(self) -> tuple[Cell, ...]:
        return tuple(cell for cell in self.ambient.cells if cell not in self.shape)


def a_lambda(ctx: TrapezoidContext) -> Word:
    letters: list[int] = []
    top = ctx.d + ctx.r
    for i, m in enumerate(ctx.mu, 1):
        high = top - i
        letters.extend(range(high - m + 1, high + 1))
    return Word(tuple(letters), ctx.n)


def w_lambda(ctx: TrapezoidContext) -> SignedPermutation:
    w = w_dr(ctx.d, ctx.r)
    for a in reversed(a_lambda(ctx).letters):
        w = compose(w, simple_reflection(ctx.n, a))
    return w


def p_lambda(ctx: TrapezoidContext) -> ShiftedTableau:
    entries = {}
    for cell in ctx.shape.cells:
        i, j = cell
        entries[cell] = ctx.r - j - ctx.nu[ctx.d + j] if j < 0 else j
    return ShiftedTableau.from_entries(ctx.shape, entries)


def dyck_path(ctx: TrapezoidContext) -> str:
    """The border of λ inside the triangle over Z(d, r), as a Dyck word in U and D.

    The k-th up step follows ``0`` down steps for ``k <= r`` and
    ``k - 1 - μ_i`` down steps with ``i = d + r + 1 - k`` after that.
    """
    top = ctx.d + ctx.r
    steps: list[str] = []
    downs = 0
    for k in range(1, top + 1):
        before = 0 if k <= ctx.r else k - 1 - ctx.mu[top - k]
        steps.extend("D" * (before - downs))
        steps.append("U")
        downs = before
    steps.extend("D" * (top - downs))
    return "".join(steps)


def w_lambda_via_path(ctx: TrapezoidContext) -> SignedPermutation:
    """Read w^λ off the Dyck path: each D step takes the label of the U step it closes."""
    top = ctx.d + ctx.r
    labels = list(range(top, ctx.d, -1)) + [-k for k in range(1, ctx.d + 1)]
    pending: list[int] = []
    window: list[int] = []
    up_steps = iter(labels)
    for step in dyck_path(ctx):
        if step == "U":
            pending.append(next(up_steps))
        else:
            if not pending:
                raise InternalInvariantError(f"unbalanced path {dyck_path(ctx)}")
            window.append(pending.pop())
    if pending or len(window) != top:
        raise InternalInvariantError(f"unbalanced path {dyck_path(ctx)}")
    return SignedPermutation(tuple(window))


def _require_shape(tableau: ShiftedTableau, shape: StrictPartition) -> None:
    if tableau.shape != shape:
        raise InvalidShapeError(f"expected a tableau of shape {shape}, got shape {tableau.shape}")


def pad_syt(tableau: ShiftedTableau, ctx: TrapezoidContext) -> ShiftedTableau:
    """Fill Z \\ λ with N+1, ..., |Z| in row-major order."""
    _require_shape(tableau, ctx.shape)
    if not is_standard(tableau):
        raise NotStandardError("the tableau is not standard")
    entries = tableau.entries()
    for value, cell in enumerate(ctx.complement_cells, ctx.size + 1):
        entries[cell] = value
    padded = ShiftedTableau.from_entries(ctx.ambient, entries)
    if not is_standard(padded):
        raise InternalInvariantError(f"padding {tableau.rows} did not give a standard tableau")
    return padded


def is_restricted_syt(padded: ShiftedTableau, ctx: TrapezoidContext) -> bool:
    return all(padded[cell] == value for value, cell in enumerate(ctx.complement_cells, ctx.size + 1))


def unpad_syt(padded: ShiftedTableau, ctx: TrapezoidContext) -> ShiftedTableau:
    _require_shape(padded, ctx.ambient)
    if not is_standard(padded):
        raise NotStandardError("the padded tableau is not standard")
    if not is_restricted_syt(padded, ctx):
        raise NotRestrictedError(f"entries above {ctx.size} are not in the canonical complement of {ctx.shape}")
    return ShiftedTableau.from_entries(
        ctx.shape, {cell: v for cell, v in padded.items() if cell in ctx.shape}
    )


def swap_add(tableau: ShiftedTableau, i: int) -> ShiftedTableau:
    """Swap columns j, j+1 in the rows above i, then put N+1 in the new box (i, j)."""
    shape = tableau.shape
    d = shape.d
    if not 1 <= i <= d:
        raise InvalidShapeError(f"row {i} is outside 1..{d}")
    parts = list(shape.parts)
    if i > 1 and parts[i - 2] < parts[i - 1] + 3:
        raise InvalidShapeError(f"row {i - 1} must be at least 3 longer than row {i}")
    j = parts[i - 1] + i - d
    entries = tableau.entries()
    for a in range(1, i):
        left, right = Cell(a, j), Cell(a, j + 1)
        entries[left], entries[right] = entries[right], entries[left]
    parts[i - 1] += 1
    entries[Cell(i, j)] = tableau.size + 1
    return ShiftedTableau.from_entries(StrictPartition(tuple(parts)), entries)


def remove_swap(tableau: ShiftedTableau, i: int) -> ShiftedTableau:
    """Inverse of ``swap_add``: the largest entry must end row i."""
    shape = tableau.shape
    d = shape.d
    if not 1 <= i <= d:
        raise InvalidShapeError(f"row {i} is outside 1..{d}")
    parts = list(shape.parts)
    if parts[i - 1] <= 1:
        raise InvalidShapeError(f"row {i} cannot lose its last box")
    j = parts[i - 1] + i - d - 1
    if tableau[Cell(i, j)] != tableau.size:
        raise NotRestrictedError(f"the largest entry {tableau.size} does not end row {i}")
    parts[i - 1] -= 1
    if i > 1 and parts[i - 2] < parts[i - 1] + 3:
        raise InvalidShapeError(f"row {i - 1} must be at least 3 longer than row {i} after removal")
    entries = tableau.entries()
    del entries[Cell(i, j)]
    for a in range(1, i):
        left, right = Cell(a, j), Cell(a, j + 1)
        entries[left], entries[right] = entries[right], entries[left]
    return ShiftedTableau.from_entries(StrictPartition(tuple(parts)), entries)


def pad_bs(tableau: ShiftedTableau, ctx: TrapezoidContext) -> ShiftedTableau:
    _require_shape(tableau, ctx.shape)
    if not is_balanced(tableau):
        raise NotBalancedError("the tableau is not balanced")
    current = tableau
    for i, m in enumerate(ctx.mu, 1):
        for _ in range(m):
            current = swap_add(current, i)
    if not is_balanced(current):
        raise InternalInvariantError(f"padding {tableau.rows} lost balance")
    return current


def restricted_bs_rows_ok(padded: ShiftedTableau, ctx: TrapezoidContext) -> bool:
    """N + σ_{i-1} + 1, ..., N + σ_i all sit in row i."""
    for i in range(1, ctx.d + 1):
        for value in range(ctx.size + ctx.sigma[i - 1] + 1, ctx.size + ctx.sigma[i] + 1):
            if padded.position_of(value).row != i:
                return False
    return True


def unpad_bs(padded: ShiftedTableau, ctx: TrapezoidContext) -> ShiftedTableau:
    _require_shape(padded, ctx.ambient)
    if not is_balanced(padded):
        raise NotBalancedError("the padded tableau is not balanced")
    if not restricted_bs_rows_ok(padded, ctx):
        raise NotRestrictedError(f"entries above {ctx.size} are not in the rows required by {ctx.shape}")
    current = padded
    for i in range(ctx.d, 0, -1):
        for _ in range(ctx.mu[i - 1]):
            current = remove_swap(current, i)
    if not is_balanced(current):
        raise InternalInvariantError(f"unpadding {padded.rows} lost balance")
    return current


def bs_to_reduced_word(tableau: ShiftedTableau) -> Word:
    """Read the labels of a balanced trapezoid filling in value order."""
    params = trapezoid_parameters(tableau.shape)
    if params is None:
        raise InvalidShapeError(f"shape {tableau.shape} is not a trapezoid")
    if not is_balanced(tableau):
        raise NotBalancedError("the tableau is not balanced")
    d, r = params
    order = sorted(trapezoid_labeling(d, r).items(), key=lambda item: tableau[item[0]])
    return reflection_order_to_word(ReflectionOrder(tuple(root for _, root in order)), n=d + r)


def _infer_trapezoid(w: SignedPermutation) -> tuple[int, int]:
    r = 0
    while r < w.n and w.window[r] > 0:
        r += 1
    d = w.n - r
    if d < 1 or w != w_dr(d, r):
        raise WrongElementError(f"{w} is not w^(d,r) for any trapezoid")
    return d, r


def reduced_word_to_bs(word: Word, d: int | None = None, r: int | None = None) -> ShiftedTableau:
    if not is_reduced(word):
        raise NotReducedError(f"word {word} is not reduced")
    w = word_to_perm(word)
    if d is None or r is None:
        d, r = _infer_trapezoid(w)
    elif word.n != d + r or w != w_dr(d, r):
        raise WrongElementError(f"word {word} is not a reduced word of w^({d},{r})")
    position = {root: k for k, root in enumerate(reflection_order(word), 1)}
    labels = trapezoid_labeling(d, r)
    tableau = ShiftedTableau.from_entries(trapezoid(d, r), {cell: position[root] for cell, root in labels.items()})
    if not is_balanced(tableau):
        raise InternalInvariantError(f"reduced word {word} gave an unbalanced filling")
    return tableau


def ends_with_a_lambda(word: Word, ctx: TrapezoidContext) -> bool:
    tail = a_lambda(ctx).letters
    return len(word) >= len(tail) and word.suffix(len(tail)) == tail


def recover_word(padded: ShiftedTableau, ctx: TrapezoidContext) -> Word:
    """Reverse-insert (P(w^(d,r)), padded) down to the empty pair."""
    state = InsertionPair(p_tableau_trapezoid(ctx.d, ctx.r), padded, ctx.n)
    letters = []
    for _ in range(ctx.ell):
        state, a = reverse_insert(state)
        letters.append(a)
    return Word(tuple(reversed(letters)), ctx.n)


@dataclass
class BijectionTrace:
    direction: str
    ctx: TrapezoidContext
    source: ShiftedTableau
    padded_syt: ShiftedTableau | None = None
    word: Word | None = None
    reflection_order: ReflectionOrder | None = None
    insertion_tableau: ShiftedTableau | None = None
    padded_bs: ShiftedTableau | None = None
    image: ShiftedTableau | None = None
    stages: list[str] = field(default_factory=list)


@contextmanager
def _stage(trace: BijectionTrace, name: str) -> Iterator[None]:
    try:
        yield
    except StageError:
        raise
    except (ShiftedBalancedError, InternalInvariantError) as exc:
        logger.debug("stage %s failed: %s", name, exc)
        raise StageError(name, exc) from exc
    trace.stages.append(name)


def _context(shape: StrictPartition, d: int | None, r: int | None) -> TrapezoidContext:
    try:
        return TrapezoidContext.build(shape, d, r)
    except ShiftedBalancedError as exc:
        raise StageError("context", exc) from exc


def syt_to_bs_traced(
    shape: StrictPartition, tableau: ShiftedTableau, d: int | None = None, r: int | None = None
) -> BijectionTrace:
    ctx = _context(shape, d, r)
    trace = BijectionTrace("syt-to-bs", ctx, tableau)
    with _stage(trace, "pad_syt"):
        trace.padded_syt = pad_syt(tableau, ctx)
    with _stage(trace, "reverse_insert"):
        trace.word = recover_word(trace.padded_syt, ctx)
    with _stage(trace, "a_lambda"):
        if not ends_with_a_lambda(trace.word, ctx):
            raise InternalInvariantError(f"recovered word {trace.word} does not end in {a_lambda(ctx)}")
        trace.reflection_order = reflection_order(trace.word)
    with _stage(trace, "reduced_word_to_bs"):
        trace.padded_bs = reduced_word_to_bs(trace.word, ctx.d, ctx.r)
    with _stage(trace, "unpad_bs"):
        trace.image = unpad_bs(trace.padded_bs, ctx)
    logger.debug("syt-to-bs %s -> %s", tableau.rows, trace.image.rows)
    return trace


def bs_to_syt_traced(
    shape: StrictPartition, tableau: ShiftedTableau, d: int | None = None, r: int | None = None
) -> BijectionTrace:
    ctx = _context(shape, d, r)
    trace = BijectionTrace("bs-to-syt", ctx, tableau)
    with _stage(trace, "pad_bs"):
        trace.padded_bs = pad_bs(tableau, ctx)
    with _stage(trace, "bs_to_reduced_word"):
        trace.word = bs_to_reduced_word(trace.padded_bs)
        trace.reflection_order = reflection_order(trace.word)
    with _stage(trace, "a_lambda"):
        if not ends_with_a_lambda(trace.word, ctx):
            raise InternalInvariantError(f"word {trace.word} does not end in {a_lambda(ctx)}")
    with _stage(trace, "insert"):
        pair = kraskiewicz_insert(trace.word)
        if pair.P != p_tableau_trapezoid(ctx.d, ctx.r):
            raise InternalInvariantError(f"insertion tableau of {trace.word} is not P(w^({ctx.d},{ctx.r}))")
        trace.insertion_tableau = pair.P
        trace.padded_syt = pair.Q
    with _stage(trace, "unpad_syt"):
        trace.image = unpad_syt(trace.padded_syt, ctx)
    logger.debug("bs-to-syt %s -> %s", tableau.rows, trace.image.rows)
    return trace


def syt_to_bs(shape: StrictPartition, tableau: ShiftedTableau, d: int | None = None, r: int | None = None) -> ShiftedTableau:
    return syt_to_bs_traced(shape, tableau, d, r).image


def bs_to_syt(shape: StrictPartition, tableau: ShiftedTableau, d: int | None = None, r: int | None = None) -> ShiftedTableau:
    return bs_to_syt_traced(shape, tableau, d, r).image
