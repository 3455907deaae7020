import argparse
import json
import logging

from shifted_balanced.cli import EXIT_OK, CommandRouter
from shifted_balanced.combinat.kraskiewicz import insertion_history, kraskiewicz_insert, reverse_insert
from shifted_balanced.combinat.schemas import InsertionPairModel
from shifted_balanced.combinat.textio import format_pair, format_tableau, read_pair
from shifted_balanced.combinat.typeb import (
    SignedPermutation,
    Word,
    enumerate_reduced_words,
    reflection_order,
)

logger = logging.getLogger(__name__)

router = CommandRouter(name="words")


def _word_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("word")
    parser.add_argument("-n", "--rank", type=int, required=True, help="rank n of B_n")


@router.command("insert", help="Kraśkiewicz insertion of a reduced word", configure=_word_options)
async def cmd_insert(args: argparse.Namespace) -> int:
    word = Word.parse(args.word, args.rank)
    if args.trace and args.format == "text":
        for stamp, state in enumerate(insertion_history(word), 1):
            print(f"insert {word.letters[stamp - 1]}:")
            print(format_tableau(state.P))
        print()
    pair = kraskiewicz_insert(word)
    if args.format == "json":
        print(InsertionPairModel.from_domain(pair).model_dump_json())
    else:
        print(format_pair(pair))
    return EXIT_OK


def _reverse_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("pair", help="insertion pair JSON file, or - for stdin")
    parser.add_argument("--steps", type=int, default=1, help="letters to pop; 0 pops all")


@router.command("reverse", help="undo insertion steps of a (P, Q) pair", configure=_reverse_options)
async def cmd_reverse(args: argparse.Namespace) -> int:
    state = read_pair(args.pair)
    steps = state.Q.size if args.steps <= 0 else min(args.steps, state.Q.size)
    letters = []
    for _ in range(steps):
        state, letter = reverse_insert(state)
        letters.append(letter)
        if args.format == "text":
            print(f"popped {letter}")
            print(format_tableau(state.P) or "(empty)")
    if args.format == "json":
        print(json.dumps({
            "letters": letters,
            "pair": InsertionPairModel.from_domain(state).model_dump(),
        }))
    else:
        print(f"letters: {' '.join(str(a) for a in letters)}")
        print(format_pair(state))
    return EXIT_OK


def _window_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("window", help='signed permutation, e.g. "-2 -1 4 -3 5"')


@router.command("redwords", help="all reduced words of a signed permutation", configure=_window_options)
async def cmd_redwords(args: argparse.Namespace) -> int:
    w = SignedPermutation.parse(args.window)
    words = enumerate_reduced_words(w, args.max)
    if args.format == "json":
        print(json.dumps([list(word.letters) for word in words]))
    else:
        for word in words:
            print(word)
    return EXIT_OK


@router.command("ro", help="reflection order of a reduced word", configure=_word_options)
async def cmd_ro(args: argparse.Namespace) -> int:
    order = reflection_order(Word.parse(args.word, args.rank))
    if args.format == "json":
        print(json.dumps([str(root) for root in order]))
    else:
        print(order)
    return EXIT_OK
