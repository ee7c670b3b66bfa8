"""Normal forms, structure constants and dimensions for E_n(u), n <= 4.

Reduction runs on a completed rewriting system (see :mod:`tiealg.completion`).
Its irreducible words are tower-form words; for n = 3 the coordinates are
then re-expressed in the 30-word spanning list ``L, L E1, L E2, L E1 E2,
L E2 T1`` through an exact change of basis over Q(u).

Multiplication of a reduced word by a single generator on the right is
memoised, so reducing a word of length k costs k sparse vector-by-table
products.
"""
from __future__ import annotations

import enum
import json
import os
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from . import linalg
from .completion import (
    E,
    RewriteBudgetExceeded,
    RewritingSystem,
    T,
    complete,
    inverse_expansion,
    normal_words,
)
from .scalars import ONE, ZERO, RationalFunction
from .words import Element, Kind, Word, format_word, letter_index, letter_kind

__all__ = [
    "Certificate",
    "RewriteBudgetExceeded",
    "SpanBasis",
    "StructureConstants",
    "Unsupported",
    "check_identity",
    "dimension",
    "engine",
    "mul_reduced",
    "normal_form",
    "span_basis",
    "structure_constants",
]

DEFAULT_BUDGET = 10**6
MAX_STRANDS = 4


class Unsupported(ValueError):
    pass


class Certificate(enum.Enum):
    ExactBasis = "exact"
    LowerBound = "lower-bound"


def step_budget() -> int:
    raw = os.environ.get("TIEALG_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _check_n(n: int) -> None:
    if not 2 <= n <= MAX_STRANDS:
        raise Unsupported(f"n={n} is not supported (2 <= n <= {MAX_STRANDS})")


# -- spanning sets ---------------------------------------------------------------


def tower_sets(n: int) -> list[list[Word]]:
    """U_1, ..., U_{n-1} with U_i = {1} + T_i U_{i-1} + E_i U_{i-1} + T_i E_i U_{i-1}."""
    sets = []
    prev: list[Word] = [()]
    for i in range(1, n):
        cur: list[Word] = [()]
        for head in ((T(i),), (E(i),), (T(i), E(i))):
            cur.extend(head + w for w in prev)
        sets.append(cur)
        prev = cur
    return sets


def tower_products(n: int) -> list[Word]:
    words: list[Word] = [()]
    for us in tower_sets(n):
        words = [w + x for w in words for x in us]
    seen = set()
    out = []
    for w in words:
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


def _corollary_list() -> list[Word]:
    t1, t2, e1, e2 = T(1), T(2), E(1), E(2)
    heads = [(), (t1,), (t2,), (t1, t2), (t2, t1), (t1, t2, t1)]
    tails = [(), (e1,), (e2,), (e1, e2), (e2, t1)]
    return [h + t for t in tails for h in heads]


@dataclass(frozen=True)
class SpanBasis:
    n: int
    words: tuple
    redundant: bool = False
    index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {w: i for i, w in enumerate(self.words)})

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word) -> bool:
        return tuple(word) in self.index

    def labels(self) -> list[str]:
        return [format_word(w) for w in self.words]


@lru_cache(maxsize=None)
def span_basis(n: int) -> SpanBasis:
    """The spanning list onto which :func:`normal_form` reduces.

    n = 2 and n = 3 give certified bases; n = 4 gives the tower-product list,
    which is redundant.
    """
    _check_n(n)
    if n == 2:
        return SpanBasis(2, tuple(tower_products(2)))
    if n == 3:
        return SpanBasis(3, tuple(_corollary_list()))
    return SpanBasis(4, tuple(tower_products(4)), redundant=True)


def tower_product_count(n: int) -> int:
    count = 1
    size = 1
    for _ in range(1, n):
        size = 1 + 3 * size
        count *= size
    return count


# -- the engine -----------------------------------------------------------------


class Engine:
    """Completed rewriting system plus memoised right action on normal words."""

    def __init__(self, n: int, budget: int | None = None):
        _check_n(n)
        self.n = n
        self.budget = budget if budget is not None else step_budget()
        self.system: RewritingSystem = complete(n, budget=self.budget)
        letters = sorted([T(i) for i in range(1, n)] + [E(i) for i in range(1, n)])
        self.normal_words: list[Word] = sorted(normal_words(self.system, letters),
                                               key=lambda w: (len(w), w))
        self.normal_index = {w: i for i, w in enumerate(self.normal_words)}
        self._action: dict[tuple[int, int], dict[int, RationalFunction]] = {}
        self._word_cache: dict[Word, dict[int, RationalFunction]] = {(): {0: ONE}}
        self._lock = threading.Lock()
        self.span = span_basis(n)
        self._to_span = self._change_of_basis()

    # right action of one letter on one normal word
    def _act(self, b: int, g: int) -> dict[int, RationalFunction]:
        key = (b, g)
        hit = self._action.get(key)
        if hit is not None:
            return hit
        word = self.normal_words[b]
        if letter_kind(g) is Kind.TInv:
            i = letter_index(g)
            poly = {word + w: c for w, c in inverse_expansion(i).items()}
        else:
            poly = {word + (g,): ONE}
        self.system.steps = 0
        reduced = self.system.reduce(poly)
        vec = {self.normal_index[w]: c for w, c in reduced.items()}
        with self._lock:
            self._action[key] = vec
        return vec

    def reduce_word(self, word: Word) -> dict[int, RationalFunction]:
        """Coordinates of a word in the normal-word basis."""
        hit = self._word_cache.get(word)
        if hit is not None:
            return hit
        vec = self.reduce_word(word[:-1])
        g = word[-1]
        out: dict[int, RationalFunction] = {}
        for b, c in vec.items():
            for k, x in self._act(b, g).items():
                s = out.get(k, ZERO) + c * x
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        with self._lock:
            self._word_cache[word] = out
        return out

    def reduce(self, a: Element) -> dict[int, RationalFunction]:
        out: dict[int, RationalFunction] = {}
        for w, c in a.items():
            for k, x in self.reduce_word(w).items():
                s = out.get(k, ZERO) + c * x
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    # conversion from normal-word coordinates to the span basis
    def _change_of_basis(self):
        span = self.span
        if all(w in span for w in self.normal_words):
            return None
        if len(span) != len(self.normal_words):
            raise Unsupported("span list and normal words differ in size")
        matrix = []
        for w in span.words:
            vec = self.reduce_word(w)
            matrix.append([vec.get(k, ZERO) for k in range(len(self.normal_words))])
        # rows: span words in normal coordinates; invert to go back
        inv = linalg.inverse(matrix)
        return [{j: x for j, x in enumerate(row) if x} for row in inv]

    def to_span(self, vec: dict[int, RationalFunction]) -> Element:
        if self._to_span is None:
            return Element._raw(self.n, {self.normal_words[k]: c for k, c in vec.items()})
        out: dict[int, RationalFunction] = {}
        for k, c in vec.items():
            for j, x in self._to_span[k].items():
                s = out.get(j, ZERO) + c * x
                if s:
                    out[j] = s
                else:
                    out.pop(j, None)
        return Element._raw(self.n, {self.span.words[j]: c for j, c in out.items()})

    @property
    def generic_basis_certified(self) -> bool:
        """True when the span list is a basis over Q(u) (change of basis invertible)."""
        return len(self.span) == len(self.normal_words)


@lru_cache(maxsize=None)
def _engine(n: int, budget: int) -> Engine:
    return Engine(n, budget)


def engine(n: int) -> Engine:
    return _engine(n, step_budget())


# -- public operations -------------------------------------------------------------


def normal_form(a: Element) -> Element:
    """Reduce ``a`` onto the span basis of its strand count."""
    eng = engine(a.n)
    return eng.to_span(eng.reduce(a))


def mul_reduced(a: Element, b: Element) -> Element:
    return normal_form(a * b)


def check_identity(lhs: Element, rhs: Element) -> bool:
    """True iff ``lhs == rhs`` in E_n(u)."""
    return not engine(lhs.n).reduce(lhs - rhs)


@dataclass(frozen=True)
class StructureConstants:
    n: int
    basis: SpanBasis
    table: tuple  # table[i][j] = Element supported on basis

    def to_json(self) -> dict:
        return {
            "schema": "tiealg/1",
            "n": self.n,
            "basis": self.basis.labels(),
            "table": [
                [
                    [{"word": format_word(w), "coeff": str(entry.coefficient(w))}
                     for w in entry.support()]
                    for entry in row
                ]
                for row in self.table
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    def product(self, a: Element, b: Element) -> Element:
        """Multiply two reduced elements by table lookup and bilinearity."""
        idx = self.basis.index
        out = Element.zero(self.n)
        for wa, ca in a.items():
            for wb, cb in b.items():
                out = out + self.table[idx[wa]][idx[wb]].scale(ca * cb)
        return out


@lru_cache(maxsize=None)
def structure_constants(n: int) -> StructureConstants:
    if n not in (2, 3):
        raise Unsupported("structure constants are tabulated for n in {2, 3}")
    basis = span_basis(n)
    words = [Element.from_word(w, n) for w in basis.words]
    table = tuple(tuple(normal_form(x * y) for y in words) for x in words)
    return StructureConstants(n, basis, table)


def dimension(n: int) -> tuple[int, Certificate]:
    """Dimension of E_n(u) with the strength of its certificate.

    n = 2, 3: exact (span closure plus a full-rank image at u = 1).
    n = 4: the exact rank of the image under phi_0 + phi_1 + psi at u = 1,
    reported as a lower bound.
    """
    _check_n(n)
    from . import hyperoct

    if n == 2:
        r = hyperoct.image_rank(span_basis(2).words, 2, ("phi0", "phi1", "psi"))
        if r != 4:
            raise RuntimeError(f"n=2 image rank {r} != 4")
        return 4, Certificate.ExactBasis
    if n == 3:
        cert = hyperoct.semisimplicity_certificate()
        if cert.rank != len(span_basis(3)):
            raise RuntimeError(f"n=3 certificate rank {cert.rank} != 30")
        return cert.rank, Certificate.ExactBasis
    words = engine(4).normal_words
    return hyperoct.image_rank(words, 4, ("phi0", "phi1", "psi")), Certificate.LowerBound


def reduced_words_upper_bound(n: int) -> int:
    """Number of irreducible words of the completed system, an upper bound on the dimension."""
    return len(engine(n).normal_words)


def iter_basis_elements(n: int) -> Iterable[Element]:
    for w in span_basis(n).words:
        yield Element.from_word(w, n)
