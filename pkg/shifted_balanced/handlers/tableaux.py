import argparse
import json
import logging

from shifted_balanced.cli import EXIT_MATH, EXIT_OK, CommandRouter, shape_arg
from shifted_balanced.combinat.bijections import (
    BijectionTrace,
    TrapezoidContext,
    a_lambda,
    bs_to_syt_traced,
    p_lambda,
    syt_to_bs_traced,
    w_lambda,
)
from shifted_balanced.combinat.schemas import BijectionTraceModel, TableauModel, TrapezoidContextModel
from shifted_balanced.combinat.shapes import ShiftedTableau, is_balanced, is_standard
from shifted_balanced.combinat.textio import format_tableau, read_tableau
from shifted_balanced.combinat.trapezoid import check_strongly_balanced
from shifted_balanced.errors import InvalidShapeError

logger = logging.getLogger(__name__)

router = CommandRouter(name="tableaux")


def _check_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("kind", choices=("balanced", "standard", "strongly-balanced"))
    parser.add_argument("tableau", help="file, - for stdin, or inline rows like 2,3/1")


@router.command("check", help="test a tableau for a property", configure=_check_options)
async def cmd_check(args: argparse.Namespace) -> int:
    tableau = read_tableau(args.tableau)
    if args.kind == "balanced":
        verdict = is_balanced(tableau)
    elif args.kind == "standard":
        verdict = is_standard(tableau)
    else:
        verdict = tableau.is_bijective() and check_strongly_balanced(tableau, args.d, args.r)
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "valid": verdict}))
    else:
        print(f"{args.kind}: {'yes' if verdict else 'no'}")
    return EXIT_OK if verdict else EXIT_MATH


def _print_trace(trace: BijectionTrace) -> None:
    print(f"Z({trace.ctx.d}, {trace.ctx.r}), a_lambda = {a_lambda(trace.ctx)}")
    first, second = ("T+", trace.padded_syt), ("B+", trace.padded_bs)
    if trace.direction == "bs-to-syt":
        first, second = second, first
    print(f"{first[0]}:\n{format_tableau(first[1])}")
    print(f"word: {trace.word}")
    print(f"reflection order: {trace.reflection_order}")
    if trace.insertion_tableau is not None:
        print(f"P:\n{format_tableau(trace.insertion_tableau)}")
    print(f"{second[0]}:\n{format_tableau(second[1])}")
    print()


def _bijection_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("direction", choices=("syt-to-bs", "bs-to-syt"))
    parser.add_argument("shape", type=shape_arg)
    parser.add_argument("tableau", help="file, - for stdin, or inline rows like 1,2/3")


@router.command("bijection", help="apply the bijection SYT(λ) <-> BS(λ)", configure=_bijection_options)
async def cmd_bijection(args: argparse.Namespace) -> int:
    tableau = read_tableau(args.tableau)
    if tableau.shape != args.shape:
        raise InvalidShapeError(f"tableau has shape {tableau.shape}, expected {args.shape}")
    traced = syt_to_bs_traced if args.direction == "syt-to-bs" else bs_to_syt_traced
    trace = traced(args.shape, tableau, args.d, args.r)
    if args.format == "json":
        model = BijectionTraceModel.from_domain(trace) if args.trace else TableauModel.from_domain(trace.image)
        print(model.model_dump_json())
        return EXIT_OK
    if args.trace:
        _print_trace(trace)
    print(format_tableau(trace.image))
    return EXIT_OK


def _wlambda_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("shape", type=shape_arg)


@router.command("wlambda", help="a^λ, w^λ and P(w^λ) for a shape", configure=_wlambda_options)
async def cmd_wlambda(args: argparse.Namespace) -> int:
    ctx = TrapezoidContext.build(args.shape, args.d, args.r)
    if args.format == "json":
        print(TrapezoidContextModel.from_domain(ctx).model_dump_json(by_alias=True))
        return EXIT_OK
    print(f"Z({ctx.d}, {ctx.r})")
    print(f"a_lambda {a_lambda(ctx)}")
    print(f"w_lambda {w_lambda(ctx)}")
    print("p_lambda")
    print(format_tableau(p_lambda(ctx)))
    return EXIT_OK


# A worked example on λ = (6,2,1) inside Z(3, 2), every stage spelled out.
DEMO_BS = ShiftedTableau.from_rows([[6, 3, 4, 1, 5, 9], [7, 8], [2]])
DEMO_GOLDEN = {
    "B+": ShiftedTableau.from_rows([[6, 3, 4, 9, 10, 5, 1], [7, 8, 12, 13, 11], [2, 14, 15]]),
    "word": "201012103412312",
    "P": ShiftedTableau.from_rows([[4, 3, 0, 1, 2, 3, 4], [3, 0, 1, 2, 3], [0, 1, 2]]),
    "Q": ShiftedTableau.from_rows([[1, 2, 3, 5, 6, 9, 10], [4, 7, 11, 12, 13], [8, 14, 15]]),
    "T": ShiftedTableau.from_rows([[1, 2, 3, 5, 6, 9], [4, 7], [8]]),
}


def _demo_stage(label: str, actual: str, expected: str) -> bool:
    print(f"{label}:")
    print(actual)
    if actual != expected:
        print(f"MISMATCH at {label}, expected:")
        print(expected)
        return False
    return True


@router.command("demo", help="run the (6,2,1) worked example end to end")
async def cmd_demo(args: argparse.Namespace) -> int:
    shape = DEMO_BS.shape
    forward = bs_to_syt_traced(shape, DEMO_BS, 3, 2)
    print("B:")
    print(format_tableau(DEMO_BS))
    checks = [
        _demo_stage("B+", format_tableau(forward.padded_bs), format_tableau(DEMO_GOLDEN["B+"])),
        _demo_stage("word", str(forward.word), DEMO_GOLDEN["word"]),
        _demo_stage("P", format_tableau(forward.insertion_tableau), format_tableau(DEMO_GOLDEN["P"])),
        _demo_stage("Q", format_tableau(forward.padded_syt), format_tableau(DEMO_GOLDEN["Q"])),
        _demo_stage("T", format_tableau(forward.image), format_tableau(DEMO_GOLDEN["T"])),
    ]
    backward = syt_to_bs_traced(shape, forward.image, 3, 2)
    checks.append(_demo_stage("back to B", format_tableau(backward.image), format_tableau(DEMO_BS)))
    if all(checks):
        print("demo: all intermediates match")
        return EXIT_OK
    return EXIT_MATH
