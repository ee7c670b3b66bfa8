"""Tied braid diagrams: one row per letter, read top to bottom.

ASCII uses a 4-column strand pitch. A positive crossing is the block
``\\ /`` over ``/ \\``, a negative one ``\\-/`` over ``/ \\``, and a tie is
the dashed rung ``:- -:`` between adjacent strands.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable

from .words import IndexOutOfRange, Kind, Word, letter, letter_index, letter_kind

__all__ = [
    "Row",
    "RowKind",
    "StrandMismatch",
    "TiedBraidDiagram",
    "render",
    "stack",
    "to_diagram",
    "to_word",
]

PITCH = 4


class StrandMismatch(ValueError):
    pass


class RowKind(enum.Enum):
    IDENTITY = "identity"
    CROSSING = "crossing"
    TIE = "tie"


@dataclass(frozen=True)
class Row:
    n: int
    kind: RowKind
    i: int = 0
    sign: int = 0  # +1 or -1 for crossings

    def __post_init__(self):
        if self.kind is not RowKind.IDENTITY and not 1 <= self.i <= self.n - 1:
            raise IndexOutOfRange(f"row index {self.i} out of range for n={self.n}")
        if self.kind is RowKind.CROSSING and self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")

    @classmethod
    def identity(cls, n: int) -> "Row":
        return cls(n, RowKind.IDENTITY)

    @classmethod
    def crossing(cls, i: int, n: int, sign: int = 1) -> "Row":
        return cls(n, RowKind.CROSSING, i, sign)

    @classmethod
    def tie(cls, i: int, n: int) -> "Row":
        return cls(n, RowKind.TIE, i)

    def to_json(self) -> dict:
        if self.kind is RowKind.IDENTITY:
            return {"kind": "identity"}
        if self.kind is RowKind.TIE:
            return {"kind": "tie", "i": self.i}
        return {"kind": "crossing", "i": self.i, "sign": "+" if self.sign > 0 else "-"}


@dataclass(frozen=True)
class TiedBraidDiagram:
    n: int
    rows: tuple

    def __post_init__(self):
        if any(r.n != self.n for r in self.rows):
            raise StrandMismatch("rows with different strand counts")

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [r.to_json() for r in self.rows]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "TiedBraidDiagram":
        n = data["n"]
        rows = []
        for r in data["rows"]:
            if r["kind"] == "identity":
                rows.append(Row.identity(n))
            elif r["kind"] == "tie":
                rows.append(Row.tie(r["i"], n))
            elif r["kind"] == "crossing":
                rows.append(Row.crossing(r["i"], n, 1 if r["sign"] == "+" else -1))
            else:
                raise ValueError(f"unknown row kind {r['kind']!r}")
        return cls(n, tuple(rows))


def to_diagram(word: Word, n: int) -> TiedBraidDiagram:
    rows = []
    for c in word:
        i = letter_index(c)
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(f"generator index {i} out of range for n={n}")
        kind = letter_kind(c)
        if kind is Kind.E:
            rows.append(Row.tie(i, n))
        else:
            rows.append(Row.crossing(i, n, 1 if kind is Kind.T else -1))
    if not rows:
        rows.append(Row.identity(n))
    return TiedBraidDiagram(n, tuple(rows))


def to_word(d: TiedBraidDiagram) -> Word:
    out = []
    for r in d.rows:
        if r.kind is RowKind.TIE:
            out.append(letter(Kind.E, r.i))
        elif r.kind is RowKind.CROSSING:
            out.append(letter(Kind.T if r.sign > 0 else Kind.TInv, r.i))
    return tuple(out)


def stack(a: TiedBraidDiagram, b: TiedBraidDiagram) -> TiedBraidDiagram:
    """``b`` placed below ``a``."""
    if a.n != b.n:
        raise StrandMismatch(f"cannot stack n={a.n} on n={b.n}")
    return TiedBraidDiagram(a.n, a.rows + b.rows)


# -- rendering -------------------------------------------------------------------


def _strand_line(n: int) -> list[str]:
    line = [" "] * (PITCH * (n - 1) + 1)
    for k in range(n):
        line[PITCH * k] = "|"
    return line


def _ascii_rows(row: Row) -> Iterable[str]:
    n = row.n
    if row.kind is RowKind.IDENTITY:
        yield "".join(_strand_line(n))
        return
    c = PITCH * (row.i - 1)
    if row.kind is RowKind.TIE:
        line = _strand_line(n)
        line[c:c + PITCH + 1] = list(":- -:")
        yield "".join(line)
        return
    top = _strand_line(n)
    bottom = _strand_line(n)
    top[c:c + PITCH + 1] = list(" \\ / " if row.sign > 0 else " \\-/ ")
    bottom[c:c + PITCH + 1] = list(" / \\ ")
    yield "".join(top)
    yield "".join(bottom)


def render_ascii(d: TiedBraidDiagram) -> str:
    lines = [line.rstrip() for row in d.rows for line in _ascii_rows(row)]
    return "\n".join(lines) + "\n"


_ROW_H = 40
_MARGIN = 20


def _x(k: int) -> int:
    return _MARGIN + PITCH * 10 * (k - 1)


def render_svg(d: TiedBraidDiagram) -> str:
    width = 2 * _MARGIN + PITCH * 10 * (d.n - 1)
    height = 2 * _MARGIN + _ROW_H * len(d.rows)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}"'
        f' viewBox="0 0 {width} {height}">',
        '<g stroke="black" stroke-width="2" fill="none">',
    ]
    for r, row in enumerate(d.rows):
        y0 = _MARGIN + _ROW_H * r
        y1 = y0 + _ROW_H
        busy = set()
        if row.kind is RowKind.CROSSING:
            busy = {row.i, row.i + 1}
            xa, xb = _x(row.i), _x(row.i + 1)
            ym = (y0 + y1) // 2
            # the over strand is drawn whole, the under strand with a gap
            if row.sign > 0:
                over = (xb, y0, xa, y1)
                under = (xa, y0, xb, y1)
            else:
                over = (xa, y0, xb, y1)
                under = (xb, y0, xa, y1)
            out.append(f'<line x1="{over[0]}" y1="{over[1]}" x2="{over[2]}" y2="{over[3]}"/>')
            ux0, uy0, ux1, uy1 = under
            mx = (ux0 + ux1) // 2
            gap = 6
            dx = gap if ux1 > ux0 else -gap
            out.append(f'<line x1="{ux0}" y1="{uy0}" x2="{mx - dx}" y2="{ym - gap}"/>')
            out.append(f'<line x1="{mx + dx}" y1="{ym + gap}" x2="{ux1}" y2="{uy1}"/>')
        for k in range(1, d.n + 1):
            if k not in busy:
                out.append(f'<line x1="{_x(k)}" y1="{y0}" x2="{_x(k)}" y2="{y1}"/>')
        if row.kind is RowKind.TIE:
            ym = (y0 + y1) // 2
            out.append(f'<line x1="{_x(row.i)}" y1="{ym}" x2="{_x(row.i + 1)}" y2="{ym}"'
                       ' stroke-dasharray="4 3" class="tie"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(d: TiedBraidDiagram, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(d)
    if fmt == "svg":
        return render_svg(d)
    raise ValueError(f"unknown format {fmt!r}")
