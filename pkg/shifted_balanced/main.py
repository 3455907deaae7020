import asyncio
import logging
import sys
from typing import Optional, Sequence

from .cli import create_dispatcher
from .config import settings
from .handlers import counting, tableaux, words

logging.basicConfig(
    level=logging.DEBUG if settings.debug else logging.INFO,
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)


async def main(argv: Optional[Sequence[str]] = None) -> int:
    dp = create_dispatcher()

    # register command routers
    dp.include_router(counting.router)
    dp.include_router(tableaux.router)
    dp.include_router(words.router)

    argv = list(sys.argv[1:] if argv is None else argv)
    logger.debug("dispatching %s", argv)
    return await dp.feed(argv)


def run(argv: Optional[Sequence[str]] = None) -> int:
    return asyncio.run(main(argv))


if __name__ == "__main__":
    raise SystemExit(run())
