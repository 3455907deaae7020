import json

import pytest
from pydantic import ValidationError

from shifted_balanced.combinat.bijections import TrapezoidContext, syt_to_bs_traced
from shifted_balanced.combinat.kraskiewicz import InsertionPair, kraskiewicz_insert
from shifted_balanced.combinat.schemas import (
    BijectionTraceModel,
    InsertionPairModel,
    TableauModel,
    TrapezoidContextModel,
)
from shifted_balanced.combinat.shapes import ShiftedTableau
from shifted_balanced.combinat.textio import (
    format_pair,
    format_tableau,
    parse_tableau,
    parse_tableau_inline,
    read_pair,
    read_tableau,
)
from shifted_balanced.combinat.typeb import Word
from shifted_balanced.errors import InvalidShapeError, ParseError


def test_format_tableau(example_bs):
    assert format_tableau(example_bs) == "6 3 4 1 5 9\n. 7 8\n. . 2"
    wide = ShiftedTableau.from_rows([[1, 10], [2]])
    assert format_tableau(wide) == " 1 10\n .  2"
    assert format_tableau(ShiftedTableau.empty()) == ""


@pytest.mark.parametrize(
    "text",
    [
        "6 3 4 1 5 9\n. 7 8\n. . 2",
        "6 3 4 1 5 9\n7 8\n2\n",
        "6,3,4,1,5,9/7,8/2",
        "[[6, 3, 4, 1, 5, 9], [7, 8], [2]]",
        '{"shape": [6, 2, 1], "rows": [[6, 3, 4, 1, 5, 9], [7, 8], [2]]}',
    ],
)
def test_parse_tableau_forms(text, example_bs):
    assert parse_tableau(text) == example_bs


def test_printed_tableau_parses_back(example_bs):
    assert parse_tableau(format_tableau(example_bs)) == example_bs
    dumped = TableauModel.from_domain(example_bs).model_dump_json()
    assert parse_tableau(dumped) == example_bs


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_tableau_inline("1,x/2")
    with pytest.raises(ParseError):
        parse_tableau('{"shape": [2, 1], "rows": [[1, 2, 3]]}')
    with pytest.raises(ParseError):
        parse_tableau("[[1, 2], ")
    with pytest.raises(InvalidShapeError):
        parse_tableau("1,2/3,4")


def test_tableau_model_checks_row_lengths():
    with pytest.raises(ValidationError):
        TableauModel(shape=[2, 1], rows=[[1], [2, 3]])


def test_read_tableau_from_file_and_stdin(tmp_path, monkeypatch, example_bs):
    path = tmp_path / "b.txt"
    path.write_text(format_tableau(example_bs), encoding="utf-8")
    assert read_tableau(str(path)) == example_bs

    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("6,3,4,1,5,9/7,8/2"))
    assert read_tableau("-") == example_bs


def test_pair_json_reads_back(tmp_path):
    pair = kraskiewicz_insert(Word.parse("010121012342312", 5))
    path = tmp_path / "pair.json"
    path.write_text(InsertionPairModel.from_domain(pair).model_dump_json(), encoding="utf-8")
    assert read_pair(str(path)) == pair


def test_pair_rank_defaults_to_largest_letter():
    text = json.dumps({"shape": [2, 1], "P": [[1, 0], [0]], "Q": [[1, 2], [3]]})
    assert read_pair(text).n == 2


def test_read_pair_rejects_bad_json():
    with pytest.raises(ParseError):
        read_pair('{"shape": [2, 1], "P": [[1, 0], [0]]}')


def test_format_pair():
    pair = kraskiewicz_insert(Word.parse("01", 2))
    assert format_pair(pair) == "0 1   |   1 2"
    assert format_pair(InsertionPair.empty(2)) == "P: (empty)\nQ: (empty)"


def test_context_model_uses_lambda_alias(shape_621):
    ctx = TrapezoidContext.build(shape_621, 3, 2)
    model = TrapezoidContextModel.from_domain(ctx)
    dumped = model.model_dump_json(by_alias=True)
    assert dumped == (
        '{"d":3,"r":2,"lambda":[6,2,1],"a_lambda":[4,1,2,3,1,2],'
        '"w_lambda":[-2,-1,4,-3,5],"p_lambda":[[2,1,0,1,2,3],[1,0],[0]]}'
    )
    assert TrapezoidContextModel.model_validate_json(dumped).to_domain() == ctx


def test_trace_model(shape_621, example_syt):
    model = BijectionTraceModel.from_domain(syt_to_bs_traced(shape_621, example_syt, 3, 2))
    assert model.direction == "syt-to-bs"
    assert model.word == [int(c) for c in "201012103412312"]
    assert model.reflection_order[0] == "e3-e2"
    assert model.image == [[6, 3, 4, 1, 5, 9], [7, 8], [2]]
    assert model.insertion_tableau is None
