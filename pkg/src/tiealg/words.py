"""Generator words in T_i, T_i^-1, E_i and formal Q(u)-linear combinations.

A word is stored as a tuple of integer letter codes. The code of a letter
with index i (1-based) and kind k is ``3*(i-1) + k`` with T=0, T^-1=1, E=2,
so integer order on codes is the printing order T1 < T1^-1 < E1 < T2 < ...
"""
from __future__ import annotations

import re
from enum import IntEnum
from typing import Iterable, Iterator, Mapping, NamedTuple

from .scalars import (
    ONE,
    ZERO,
    RationalFunction,
    RationalSyntaxError,
    as_rf,
    parse_rational_function,
)

__all__ = [
    "AmbientMismatch",
    "Element",
    "ElementSyntaxError",
    "Generator",
    "IndexOutOfRange",
    "Kind",
    "Word",
    "format_word",
    "letter",
    "parse_element",
    "parse_word",
    "word_key",
]

Word = tuple  # tuple[int, ...]


class Kind(IntEnum):
    T = 0
    TInv = 1
    E = 2


class Generator(NamedTuple):
    kind: Kind
    index: int

    @property
    def code(self) -> int:
        return letter(self.kind, self.index)

    @classmethod
    def from_code(cls, code: int) -> "Generator":
        return cls(Kind(code % 3), code // 3 + 1)

    def __str__(self) -> str:
        return _LETTER_NAMES[self.kind].format(self.index)


_LETTER_NAMES = {Kind.T: "T{}", Kind.TInv: "T{}^-1", Kind.E: "E{}"}


class ElementSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class IndexOutOfRange(ValueError):
    pass


class AmbientMismatch(ValueError):
    pass


def letter(kind: Kind, index: int) -> int:
    return 3 * (index - 1) + int(kind)


def letter_kind(code: int) -> Kind:
    return Kind(code % 3)


def letter_index(code: int) -> int:
    return code // 3 + 1


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(str(Generator.from_code(c)) for c in word)


def word_key(word: Word) -> tuple:
    """Length-lexicographic sort key used for deterministic printing."""
    return (len(word), word)


def check_word(word: Word, n: int) -> None:
    for c in word:
        if c < 0 or letter_index(c) > n - 1:
            raise IndexOutOfRange(
                f"{Generator.from_code(c) if c >= 0 else c} needs index in 1..{n - 1} for n={n}"
            )


class Element:
    """A finite Q(u)-linear combination of words on ``n`` strands.

    Zero coefficients are never stored. Elements are immutable; arithmetic
    returns new instances.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Word, object] | Iterable = ()):
        if n < 1:
            raise ValueError("strand count must be positive")
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Word, RationalFunction] = {}
        for word, coeff in items:
            word = tuple(word)
            check_word(word, n)
            c = out.get(word, ZERO) + as_rf(coeff)
            if c:
                out[word] = c
            else:
                out.pop(word, None)
        self._terms = out
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Element":
        e = object.__new__(cls)
        e.n = n
        e._terms = terms
        e._hash = None
        return e

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "Element":
        return cls._raw(n, {(): ONE})

    @classmethod
    def from_word(cls, word: Iterable[int], n: int, coeff=1) -> "Element":
        return cls(n, [(tuple(word), coeff)])

    @classmethod
    def parse(cls, text: str, n: int) -> "Element":
        return parse_element(text, n)

    # -- mapping view ------------------------------------------------------
    @property
    def terms(self) -> Mapping[Word, RationalFunction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Word]:
        return sorted(self._terms, key=word_key)

    def coefficient(self, word: Iterable[int]) -> RationalFunction:
        return self._terms.get(tuple(word), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.support())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_single_word(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())).is_one()

    # -- arithmetic --------------------------------------------------------
    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.n != self.n:
            raise AmbientMismatch(f"ambient strand counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                del out[w]
        return Element._raw(self.n, out)

    def __neg__(self) -> "Element":
        return Element._raw(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        c = as_rf(c)
        if not c:
            return Element.zero(self.n)
        return Element._raw(self.n, {w: c * x for w, x in self._terms.items()})

    def __rmul__(self, c) -> "Element":
        return self.scale(c)

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return free_mul(self, other)
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def map_coefficients(self, f) -> "Element":
        return Element(self.n, [(w, f(c)) for w, c in self._terms.items()])

    # -- text ----------------------------------------------------------------
    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({str(self)!r}, n={self.n})"


def free_mul(a: Element, b: Element) -> Element:
    """Bilinear concatenation product, with no reduction."""
    a._check(b)
    out: dict[Word, RationalFunction] = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            w = wa + wb
            s = out.get(w, ZERO) + ca * cb
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return Element._raw(a.n, out)


def _coeff_str(c: RationalFunction) -> tuple[str, str]:
    """Return (sign, magnitude text) for a coefficient in front of a word."""
    s = str(c)
    neg = s.startswith("-") and re.fullmatch(r"-[^-+]*", s) is not None
    if neg:
        s = str(-c)
    if re.fullmatch(r"\d+", s):
        body = s
    elif re.fullmatch(r"u(\^\d+)?", s):
        body = s
    else:
        body = f"({s})"
    return ("-" if neg else "+"), body


def format_element(e: Element) -> str:
    if not e._terms:
        return "0"
    parts = []
    for w in e.support():
        c = e._terms[w]
        sign, body = _coeff_str(c)
        if not w:
            text = body
        elif body == "1":
            text = format_word(w)
        else:
            text = f"{body}*{format_word(w)}"
        parts.append((sign, text))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


# -- element parser ------------------------------------------------------------

_GEN = re.compile(r"([TE])(\d+)(\^-1)?")
_NUMBER = re.compile(r"\d+")


def parse_word(text: str, n: int) -> Word:
    """Parse a bare word such as ``T1 E2 T1^-1`` or ``1``."""
    e = parse_element(text, n)
    if not e.is_single_word():
        raise ElementSyntaxError("expected a single word", 0)
    return next(iter(e._terms))


class _ElementParser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str) -> ElementSyntaxError:
        return ElementSyntaxError(message, self.pos)

    def parse(self) -> Element:
        if self.at_end():
            raise self.error("empty element")
        terms: list[tuple[Word, RationalFunction]] = []
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        while True:
            word, coeff = self.term()
            terms.append((word, coeff if sign > 0 else -coeff))
            if self.at_end():
                break
            ch = self.peek()
            if ch not in "+-":
                raise self.error(f"unexpected {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return Element(self.n, terms)

    def coefficient(self) -> RationalFunction | None:
        """Parse a parenthesised or literal coefficient, if one starts here."""
        ch = self.peek()
        start = self.pos
        if ch == "(":
            depth = 0
            i = self.pos
            while i < len(self.text):
                if self.text[i] == "(":
                    depth += 1
                elif self.text[i] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                i += 1
            if depth != 0:
                raise self.error("unbalanced parenthesis")
            try:
                value = parse_rational_function(self.text[start + 1:i], start + 1)
            except RationalSyntaxError as exc:
                raise ElementSyntaxError(str(exc).rsplit(" at position", 1)[0], exc.position) from None
            self.pos = i + 1
            return value
        m = re.compile(r"\d+(?:/\d+)?|u(?:\^-?\d+)?").match(self.text, self.pos)
        if m:
            lit = m.group(0)
            after = self.text[m.end():m.end() + 1]
            # "1" followed by nothing word-like is the identity word, handled by term()
            if after and (after.isalnum()):
                raise self.error(f"malformed literal {lit + after!r}")
            self.pos = m.end()
            return parse_rational_function(lit)
        return None

    def word(self) -> Word:
        letters: list[int] = []
        while True:
            self.skip_ws()
            m = _GEN.match(self.text, self.pos)
            if not m:
                break
            end = m.end()
            if end < len(self.text) and (self.text[end].isalnum() or self.text[end] == "^"):
                raise self.error(f"malformed generator {self.text[self.pos:end + 1]!r}")
            kind = Kind.E if m.group(1) == "E" else (Kind.TInv if m.group(3) else Kind.T)
            if m.group(1) == "E" and m.group(3):
                raise self.error("E generators have no inverse")
            index = int(m.group(2))
            if not 1 <= index <= self.n - 1:
                raise IndexOutOfRange(
                    f"{m.group(0)} at position {self.pos}: index must be in 1..{self.n - 1} for n={self.n}"
                )
            letters.append(letter(kind, index))
            self.pos = end
        return tuple(letters)

    def term(self) -> tuple[Word, RationalFunction]:
        ch = self.peek()
        if ch in ("T", "E"):
            w = self.word()
            if not w:
                raise self.error("expected generator")
            return w, ONE
        start = self.pos
        coeff = self.coefficient()
        if coeff is None:
            raise self.error(f"unexpected {ch!r}" if ch else "unexpected end of input")
        if self.peek() == "*":
            self.pos += 1
            if self.peek() in ("T", "E"):
                return self.word(), coeff
            if self.text.startswith("1", self.pos):
                self.pos += 1
                return (), coeff
            raise self.error("expected word after '*'")
        if self.peek() in ("T", "E"):
            raise ElementSyntaxError("missing '*' between coefficient and word", start)
        return (), coeff


def parse_element(text: str, n: int) -> Element:
    """Parse an element such as ``(u-1)*E1 T1 + 1`` on ``n`` strands.

    >>> str(parse_element("T1 E2 T1", 3))
    'T1 E2 T1'
    """
    return _ElementParser(text, n).parse()
