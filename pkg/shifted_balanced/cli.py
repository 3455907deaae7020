import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Awaitable, Callable, Optional

from pydantic import ValidationError

from .combinat.shapes import StrictPartition
from .errors import (
    InternalInvariantError,
    ShiftedBalancedError,
    StageError,
    UsageError,
)

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], Awaitable[int]]
Configure = Callable[[argparse.ArgumentParser], None]

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


@dataclass
class Command:
    name: str
    help: str
    handler: Handler
    configure: Optional[Configure] = None


@dataclass
class CommandRouter:
    """Collects the commands of one handler module."""

    name: str
    commands: list[Command] = field(default_factory=list)

    def command(self, name: str, *, help: str, configure: Optional[Configure] = None):
        def decorator(handler: Handler) -> Handler:
            self.commands.append(Command(name, help, handler, configure))
            return handler

        return decorator


def shape_arg(text: str) -> StrictPartition:
    return StrictPartition.parse(text)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max", type=int, default=None, help="enumeration cap for this run")
    common.add_argument("--trace", action="store_true", help="print every intermediate stage")
    common.add_argument("--d", type=int, default=None, help="rows of the ambient trapezoid")
    common.add_argument("--r", type=int, default=None, help="width parameter of the ambient trapezoid")
    common.add_argument("--oracle", action="store_true", help="use brute force where available")
    return common


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, StageError):
        return exit_code_for(exc.cause)
    if isinstance(exc, (UsageError, ValidationError)):
        return EXIT_USAGE
    return EXIT_MATH


class Dispatcher:
    def __init__(self) -> None:
        self.parser = argparse.ArgumentParser(
            prog="shifted_balanced",
            description="Standard and balanced shifted tableaux, type B reduced words and the bijection between them.",
        )
        self._subparsers = self.parser.add_subparsers(dest="command", required=True)
        self._common = _common_options()

    def include_router(self, router: CommandRouter) -> None:
        for command in router.commands:
            sub = self._subparsers.add_parser(command.name, help=command.help, parents=[self._common])
            if command.configure is not None:
                command.configure(sub)
            sub.set_defaults(handler=command.handler)
        logger.debug("registered %d commands from router %s", len(router.commands), router.name)

    async def feed(self, argv: list[str]) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

        try:
            return await args.handler(args)
        except InternalInvariantError as exc:
            logger.error("internal invariant failed: %s", exc, exc_info=True)
            print(f"internal error: {exc}", file=sys.stderr)
            return EXIT_MATH
        except StageError as exc:
            if isinstance(exc.cause, InternalInvariantError):
                logger.error("internal invariant failed in stage %s", exc.stage, exc_info=True)
            print(f"error: {exc}", file=sys.stderr)
            return exit_code_for(exc)
        except (ShiftedBalancedError, ValidationError) as exc:
            stage = "input" if isinstance(exc, (UsageError, ValidationError)) else "check"
            print(f"error: [{args.command}:{stage}] {exc}", file=sys.stderr)
            return exit_code_for(exc)


def create_dispatcher() -> Dispatcher:
    return Dispatcher()
