"""Plain-text forms of tableaux, words, signed permutations and roots.

A tableau prints one row per line with ``.`` marking the shift::

    6 3 4 1 5 9
    . 7 8
    . . 2

The dots are optional on input. The inline form used on the command line
separates rows with ``/`` and entries with commas: ``6,3,4,1,5,9/7,8/2``.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from pydantic import ValidationError

from shifted_balanced.combinat.kraskiewicz import InsertionPair
from shifted_balanced.combinat.schemas import InsertionPairModel, TableauModel
from shifted_balanced.combinat.shapes import ShiftedTableau
from shifted_balanced.errors import ParseError


def format_tableau(tableau: ShiftedTableau) -> str:
    if not tableau.rows:
        return ""
    width = max(len(str(v)) for v in tableau.values())
    lines = []
    for offset, row in enumerate(tableau.rows):
        tokens = ["."] * offset + [str(v) for v in row]
        lines.append(" ".join(t.rjust(width) for t in tokens))
    return "\n".join(lines)


def _int_rows(lines: list[list[str]], source: str) -> ShiftedTableau:
    try:
        rows = [[int(t) for t in tokens if t != "."] for tokens in lines]
    except ValueError as exc:
        raise ParseError(f"cannot parse tableau {source!r}") from exc
    return ShiftedTableau.from_rows(rows)


def parse_tableau_text(text: str) -> ShiftedTableau:
    return _int_rows([line.split() for line in text.splitlines() if line.strip()], text)


def parse_tableau_inline(text: str) -> ShiftedTableau:
    rows = [chunk for chunk in text.strip().split("/") if chunk.strip()]
    return _int_rows([chunk.replace(",", " ").split() for chunk in rows], text)


def parse_tableau(text: str) -> ShiftedTableau:
    """JSON (``{"shape": ..., "rows": ...}`` or a bare list of rows) or the text form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return TableauModel.model_validate_json(stripped).to_domain()
        except ValidationError as exc:
            raise ParseError(f"invalid tableau JSON: {exc.errors()[0]['msg']}") from exc
    if stripped.startswith("["):
        try:
            return ShiftedTableau.from_rows(json.loads(stripped))
        except (ValueError, TypeError) as exc:
            raise ParseError(f"invalid tableau JSON: {exc}") from exc
    if "/" in stripped or ("\n" not in stripped and "," in stripped):
        return parse_tableau_inline(stripped)
    return parse_tableau_text(stripped)


def read_source(source: str) -> str:
    """``-`` reads stdin, an existing path reads the file, anything else is the text itself."""
    if source == "-":
        return sys.stdin.read()
    try:
        path = Path(source)
        if path.is_file():
            return path.read_text(encoding="utf-8")
    except OSError:
        pass
    return source


def read_tableau(source: str) -> ShiftedTableau:
    return parse_tableau(read_source(source))


def read_pair(source: str) -> InsertionPair:
    text = read_source(source)
    try:
        return InsertionPairModel.model_validate_json(text).to_domain()
    except ValidationError as exc:
        raise ParseError(f"invalid insertion pair JSON: {exc.errors()[0]['msg']}") from exc


def format_pair(pair: InsertionPair) -> str:
    if not pair.P.rows:
        return "P: (empty)\nQ: (empty)"
    p_lines = format_tableau(pair.P).splitlines()
    q_lines = format_tableau(pair.Q).splitlines()
    width = max(len(line) for line in p_lines)
    return "\n".join(f"{p.ljust(width)}   |   {q}" for p, q in zip(p_lines, q_lines))
