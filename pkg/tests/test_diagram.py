import json
from pathlib import Path

import pytest
from hypothesis import given, settings

from conftest import words
from tiealg.diagram import (
    Row,
    RowKind,
    StrandMismatch,
    TiedBraidDiagram,
    render,
    stack,
    to_diagram,
    to_word,
)
from tiealg.words import IndexOutOfRange, parse_word

GOLDEN = Path(__file__).parent / "golden"
CASES = [("T1 E2 T1^-1", 3), ("1", 3), ("E1 T2 T3^-1 E3", 4), ("T1 T1^-1 E1", 2)]


def golden_name(word, n, ext):
    slug = word.replace("^-1", "i").replace(" ", "_")
    return GOLDEN / f"n{n}_{slug}.{ext}"


def test_ascii_example():
    d = to_diagram(parse_word("T1 E2 T1^-1", 3), 3)
    assert render(d, "ascii") == (
        " \\ /    |\n"
        " / \\    |\n"
        "|   :- -:\n"
        " \\-/    |\n"
        " / \\    |\n"
    )


def test_identity_row():
    assert render(to_diagram((), 3), "ascii") == "|   |   |\n"
    assert to_word(to_diagram((), 3)) == ()


@settings(max_examples=1000)
@given(words(4, max_len=8))
def test_round_trip(w):
    d = to_diagram(w, 4)
    assert to_word(d) == w
    assert TiedBraidDiagram.from_json(json.loads(d.dumps())) == d


@given(words(3), words(3))
def test_stack_is_concatenation(a, b):
    da, db = to_diagram(a, 3), to_diagram(b, 3)
    assert to_word(stack(da, db)) == a + b


def test_stack_mismatch():
    with pytest.raises(StrandMismatch):
        stack(to_diagram((), 3), to_diagram((), 4))


def test_row_validation():
    with pytest.raises(IndexOutOfRange):
        Row.tie(3, 3)
    with pytest.raises(ValueError):
        Row(3, RowKind.CROSSING, 1, 0)
    with pytest.raises(IndexOutOfRange):
        to_diagram(parse_word("T2", 3), 2)


def test_json_shape():
    d = to_diagram(parse_word("T1 E1 T1^-1", 2), 2)
    assert d.to_json() == {"n": 2, "rows": [
        {"kind": "crossing", "i": 1, "sign": "+"},
        {"kind": "tie", "i": 1},
        {"kind": "crossing", "i": 1, "sign": "-"},
    ]}


def test_svg_marks_ties():
    svg = render(to_diagram(parse_word("E1 T1", 2), 2), "svg")
    assert svg.count('class="tie"') == 1
    assert svg.startswith("<?xml") and svg.rstrip().endswith("</svg>")


def test_unknown_format():
    with pytest.raises(ValueError):
        render(to_diagram((), 2), "png")


@pytest.mark.parametrize("word,n", CASES)
@pytest.mark.parametrize("fmt,ext", [("ascii", "txt"), ("svg", "svg")])
def test_golden(word, n, fmt, ext):
    d = to_diagram(parse_word(word, n), n)
    first = render(d, fmt)
    assert render(d, fmt) == first
    assert golden_name(word, n, ext).read_text(encoding="utf-8") == first
