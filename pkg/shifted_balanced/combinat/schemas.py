from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from shifted_balanced.combinat.bijections import (
    BijectionTrace,
    TrapezoidContext,
    a_lambda,
    p_lambda,
    w_lambda,
)
from shifted_balanced.combinat.kraskiewicz import InsertionPair
from shifted_balanced.combinat.shapes import ShiftedTableau, StrictPartition

Direction = Literal["syt-to-bs", "bs-to-syt"]
TableauKind = Literal["syt", "bs"]


class TableauModel(BaseModel):
    shape: list[int]
    rows: list[list[int]]

    @model_validator(mode="after")
    def _rows_fit_shape(self) -> "TableauModel":
        if [len(row) for row in self.rows] != self.shape:
            raise ValueError(f"row lengths {[len(r) for r in self.rows]} do not match shape {self.shape}")
        return self

    @classmethod
    def from_domain(cls, tableau: ShiftedTableau) -> "TableauModel":
        return cls(shape=list(tableau.shape.parts), rows=[list(row) for row in tableau.rows])

    def to_domain(self) -> ShiftedTableau:
        return ShiftedTableau(StrictPartition(tuple(self.shape)), tuple(tuple(row) for row in self.rows))


class InsertionPairModel(BaseModel):
    shape: list[int]
    P: list[list[int]]
    Q: list[list[int]]
    n: Optional[int] = Field(default=None, ge=1)

    @classmethod
    def from_domain(cls, pair: InsertionPair) -> "InsertionPairModel":
        return cls(
            shape=list(pair.shape.parts),
            P=[list(row) for row in pair.P.rows],
            Q=[list(row) for row in pair.Q.rows],
            n=pair.n,
        )

    def to_domain(self) -> InsertionPair:
        shape = StrictPartition(tuple(self.shape))
        P = ShiftedTableau(shape, tuple(tuple(row) for row in self.P))
        Q = ShiftedTableau(shape, tuple(tuple(row) for row in self.Q))
        n = self.n if self.n is not None else max(P.values(), default=0) + 1
        return InsertionPair(P, Q, n)


class TrapezoidContextModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    d: int = Field(ge=1)
    r: int = Field(ge=0)
    lambda_: list[int] = Field(alias="lambda")
    a_lambda: list[int]
    w_lambda: list[int]
    p_lambda: list[list[int]]

    @classmethod
    def from_domain(cls, ctx: TrapezoidContext) -> "TrapezoidContextModel":
        return cls(
            d=ctx.d,
            r=ctx.r,
            lambda_=list(ctx.shape.parts),
            a_lambda=list(a_lambda(ctx).letters),
            w_lambda=list(w_lambda(ctx).window),
            p_lambda=[list(row) for row in p_lambda(ctx).rows],
        )

    def to_domain(self) -> TrapezoidContext:
        return TrapezoidContext(StrictPartition(tuple(self.lambda_)), self.d, self.r)


def _rows(tableau: Optional[ShiftedTableau]) -> Optional[list[list[int]]]:
    return None if tableau is None else [list(row) for row in tableau.rows]


class BijectionTraceModel(BaseModel):
    direction: Direction
    d: int
    r: int
    shape: list[int]
    source: list[list[int]]
    padded_syt: Optional[list[list[int]]] = None
    word: Optional[list[int]] = None
    reflection_order: Optional[list[str]] = None
    insertion_tableau: Optional[list[list[int]]] = None
    padded_bs: Optional[list[list[int]]] = None
    image: Optional[list[list[int]]] = None

    @classmethod
    def from_domain(cls, trace: BijectionTrace) -> "BijectionTraceModel":
        return cls(
            direction=trace.direction,
            d=trace.ctx.d,
            r=trace.ctx.r,
            shape=list(trace.ctx.shape.parts),
            source=_rows(trace.source),
            padded_syt=_rows(trace.padded_syt),
            word=None if trace.word is None else list(trace.word.letters),
            reflection_order=None if trace.reflection_order is None else [str(g) for g in trace.reflection_order],
            insertion_tableau=_rows(trace.insertion_tableau),
            padded_bs=_rows(trace.padded_bs),
            image=_rows(trace.image),
        )


class CountReport(BaseModel):
    kind: TableauKind
    shape: list[int]
    count: int = Field(ge=0)
    method: Literal["hook-formula", "enumeration", "bijection", "oracle"]


class VerificationReport(BaseModel):
    shape: list[int]
    d: int
    r: int
    syt_count: int = Field(ge=0)
    hook_count: int = Field(ge=0)
    bs_count: int = Field(ge=0)
    all_balanced: bool
    distinct: bool
    round_trip: bool
    oracle_count: Optional[int] = None
    oracle_match: Optional[bool] = None
    failures: list[str] = Field(default_factory=list)
    passed: bool


class TrapezoidComparison(BaseModel):
    shape: list[int]
    r_min: int
    r_alt: int
    total: int
    agreeing: int
