import argparse
import asyncio
import logging

from shifted_balanced.cli import EXIT_MATH, EXIT_OK, CommandRouter, shape_arg
from shifted_balanced.combinat.bijections import TrapezoidContext, syt_to_bs
from shifted_balanced.combinat.schemas import CountReport, TableauModel
from shifted_balanced.combinat.shapes import (
    enumerate_bs_bruteforce,
    enumerate_syt,
    hook_length_formula_count,
)
from shifted_balanced.combinat.textio import format_tableau
from shifted_balanced.combinat.verification import compare_trapezoid_choices, verify_shape

logger = logging.getLogger(__name__)

router = CommandRouter(name="counting")


def _kind_and_shape(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("kind", choices=("syt", "bs"))
    parser.add_argument("shape", type=shape_arg)


def _balanced_images(args: argparse.Namespace):
    """BS(λ) as the images of SYT(λ), or by brute force with --oracle."""
    if args.oracle:
        yield from enumerate_bs_bruteforce(args.shape, args.max)
        return
    ctx = TrapezoidContext.build(args.shape, args.d, args.r)
    for tableau in enumerate_syt(args.shape, args.max):
        yield syt_to_bs(args.shape, tableau, ctx.d, ctx.r)


@router.command("count", help="count SYT(λ) or BS(λ)", configure=_kind_and_shape)
async def cmd_count(args: argparse.Namespace) -> int:
    if args.kind == "syt":
        if args.oracle:
            count, method = sum(1 for _ in enumerate_syt(args.shape, args.max)), "enumeration"
        else:
            count, method = hook_length_formula_count(args.shape), "hook-formula"
    else:
        count = await asyncio.to_thread(lambda: sum(1 for _ in _balanced_images(args)))
        method = "oracle" if args.oracle else "bijection"

    if args.format == "json":
        print(CountReport(kind=args.kind, shape=list(args.shape.parts), count=count, method=method).model_dump_json())
    else:
        print(count)
    return EXIT_OK


@router.command("enum", help="list SYT(λ) or BS(λ)", configure=_kind_and_shape)
async def cmd_enum(args: argparse.Namespace) -> int:
    tableaux = enumerate_syt(args.shape, args.max) if args.kind == "syt" else _balanced_images(args)
    first = True
    for tableau in tableaux:
        if args.format == "json":
            print(TableauModel.from_domain(tableau).model_dump_json())
        else:
            if not first:
                print()
            print(format_tableau(tableau))
        first = False
    return EXIT_OK


def _verify_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("shape", type=shape_arg)
    parser.add_argument("--no-oracle", action="store_true", help="skip the brute-force comparison")
    parser.add_argument("--compare-r", action="store_true", help="also compare images at r and r + 1")


@router.command("verify", help="check the bijection on every SYT of one shape", configure=_verify_options)
async def cmd_verify(args: argparse.Namespace) -> int:
    report = await asyncio.to_thread(
        verify_shape, args.shape, args.d, args.r, not args.no_oracle, args.max
    )
    comparison = None
    if args.compare_r:
        comparison = await asyncio.to_thread(compare_trapezoid_choices, args.shape, args.max)

    if args.format == "json":
        print(report.model_dump_json())
        if comparison is not None:
            print(comparison.model_dump_json())
    else:
        print(f"shape {args.shape} in Z({report.d}, {report.r})")
        oracle = "" if report.oracle_count is None else f" oracle={report.oracle_count}"
        print(f"hook={report.hook_count}{oracle} balanced={report.all_balanced} "
              f"distinct={report.distinct} roundtrip={report.round_trip}")
        for failure in report.failures:
            print(f"failure: {failure}")
        if comparison is not None:
            print(f"r={comparison.r_min} vs r={comparison.r_alt}: "
                  f"{comparison.agreeing}/{comparison.total} images agree")
        print(f"SYT={report.syt_count} BS={report.bs_count} {'PASS' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_MATH
