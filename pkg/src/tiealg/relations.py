"""A corpus of identities in E_n(u), checked by normal forms.

Suites:
  relations  the defining relations, every index instance
  derived    consequences: inverse substitutions, conjugated ties, braid-tie moves,
             and the tie-slide identities
  skein      the quadratic relation rewritten in skein form
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .rewrite import check_identity
from .words import Element

__all__ = ["Identity", "SUITES", "check_suite", "identities", "tie_slide_as_printed"]

SUITES = ("relations", "derived", "skein", "all")


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: str
    rhs: str
    n: int

    def elements(self) -> tuple[Element, Element]:
        return Element.parse(self.lhs, self.n), Element.parse(self.rhs, self.n)

    def holds(self) -> bool:
        lhs, rhs = self.elements()
        return check_identity(lhs, rhs)

    def __str__(self) -> str:
        return f"{self.name}: {self.lhs} = {self.rhs}"


def _pairs(n: int, near: bool | None):
    for i in range(1, n):
        for j in range(1, n):
            if i == j:
                continue
            d = abs(i - j)
            if near is None or (near and d == 1) or (not near and d > 1):
                yield i, j


def _invert(text: str, indices) -> str:
    out = []
    for tok in text.split():
        if tok[0] == "T" and int(tok[1:]) in indices:
            tok += "^-1"
        out.append(tok)
    return " ".join(out)


def defining(n: int) -> Iterator[Identity]:
    for i, j in _pairs(n, False):
        yield Identity(f"braid-far {i},{j}", f"T{i} T{j}", f"T{j} T{i}", n)
    for i, j in _pairs(n, True):
        yield Identity(f"braid {i},{j}", f"T{i} T{j} T{i}", f"T{j} T{i} T{j}", n)
    for i in range(1, n):
        yield Identity(f"tie-idempotent {i}", f"E{i} E{i}", f"E{i}", n)
    for i, j in itertools.product(range(1, n), repeat=2):
        yield Identity(f"ties-commute {i},{j}", f"E{i} E{j}", f"E{j} E{i}", n)
    for i in range(1, n):
        yield Identity(f"tie-braid-same {i}", f"E{i} T{i}", f"T{i} E{i}", n)
    for i, j in _pairs(n, False):
        yield Identity(f"tie-braid-far {i},{j}", f"E{i} T{j}", f"T{j} E{i}", n)
    for i, j in _pairs(n, True):
        yield Identity(f"tie-transport {i},{j}", f"E{j} T{i} T{j}", f"T{i} T{j} E{i}", n)
    for i, j in _pairs(n, True):
        yield Identity(f"tie-pair-a {i},{j}", f"E{i} E{j} T{j}", f"E{i} T{j} E{i}", n)
        yield Identity(f"tie-pair-b {i},{j}", f"E{i} T{j} E{i}", f"T{j} E{i} E{j}", n)
    for i in range(1, n):
        yield Identity(f"quadratic {i}", f"T{i} T{i}",
                       f"1 + ((1-u)/u)*E{i} - ((1-u)/u)*E{i} T{i}", n)


_SUBSTITUTABLE = (
    ("tie-braid-same", "E{i} T{i}", "T{i} E{i}", False),
    ("tie-transport", "E{j} T{i} T{j}", "T{i} T{j} E{i}", True),
    ("tie-pair-a", "E{i} E{j} T{j}", "E{i} T{j} E{i}", True),
    ("tie-pair-b", "E{i} T{j} E{i}", "T{j} E{i} E{j}", True),
)


def derived(n: int) -> Iterator[Identity]:
    # inverse substitution, every subset of the T letters involved
    for name, lhs, rhs, two in _SUBSTITUTABLE:
        pairs = _pairs(n, True) if two else ((i, i) for i in range(1, n))
        for i, j in pairs:
            idx = sorted({i, j})
            for k in range(1, len(idx) + 1):
                for inv in itertools.combinations(idx, k):
                    tag = ",".join(f"T{x}^-1" for x in inv)
                    yield Identity(f"inverted {name} {i},{j} [{tag}]",
                                   _invert(lhs.format(i=i, j=j), inv),
                                   _invert(rhs.format(i=i, j=j), inv), n)
    for i, j in _pairs(n, False):
        yield Identity(f"inverted tie-braid-far {i},{j}", f"E{i} T{j}^-1", f"T{j}^-1 E{i}", n)
    for i, j in _pairs(n, True):
        yield Identity(f"conjugated-tie {i},{j}", f"T{i}^-1 E{j} T{i}", f"T{j} E{i} T{j}^-1", n)
        yield Identity(f"conjugated-tie-swap {i},{j}", f"T{i}^-1 E{j} T{i}", f"T{j}^-1 E{i} T{j}", n)
        yield Identity(f"conjugated-tie-mirror {i},{j}", f"T{i}^-1 E{j} T{i}", f"T{i} E{j} T{i}^-1", n)
        yield Identity(f"conjugated-tie-polynomial {i},{j}",
                       f"u*T{i} E{j} T{i} - u*T{j} E{i} T{j}",
                       f"(u-1)*E{j} T{i} E{j} - (u-1)*E{i} T{j} E{i}", n)
        yield Identity(f"braid-tie-braid {i},{j}", f"T{i} T{j} E{j} T{i}", f"T{j} T{i} E{i} T{j}", n)
        c = "(u^-1-1)"
        yield Identity(f"tie-slide {i},{j}", f"E{j} T{i}",
                       f"T{i} T{j} E{i} T{j} + {c}*T{i} T{j} E{i} E{j} - {c}*T{i} E{i} E{j}", n)
        yield Identity(f"tie-slide-braided {i},{j}", f"T{j} E{j} T{i}",
                       f"T{i} T{j} T{i} E{i} T{j} + {c}*T{i} T{j} T{i} E{i} E{j}"
                       f" - {c}*T{j} T{i} E{i} E{j}", n)


def tie_slide_as_printed(n: int) -> Iterator[Identity]:
    """The tie-slide identities with coefficient (u-1) and both correction terms added.

    These are not identities of the algebra; they are kept so the discrepancy
    stays visible. The true forms are in :func:`derived`.
    """
    for i, j in _pairs(n, True):
        yield Identity(f"tie-slide as printed {i},{j}", f"E{j} T{i}",
                       f"T{i} T{j} E{i} T{j} + (u-1)*T{i} T{j} E{i} E{j} + (u-1)*T{i} E{i} E{j}", n)
        yield Identity(f"tie-slide-braided as printed {i},{j}", f"T{j} E{j} T{i}",
                       f"T{i} T{j} T{i} E{i} T{j} + (u-1)*T{i} T{j} T{i} E{i} E{j}"
                       f" + (u-1)*T{j} T{i} E{i} E{j}", n)


def skein(n: int) -> Iterator[Identity]:
    for i in range(1, n):
        yield Identity(f"inverse-expansion {i}", f"T{i}^-1",
                       f"T{i} + (u-1)*E{i} T{i} + (1-u)*E{i}", n)
        yield Identity(f"inverse {i}", f"T{i} T{i}^-1", "1", n)
        yield Identity(f"skein-tie {i}", f"u*E{i} T{i} - E{i} T{i}^-1", f"(u-1)*E{i}", n)
        yield Identity(f"skein-difference {i}", f"E{i} T{i} - E{i} T{i}^-1", f"T{i} - T{i}^-1", n)


def identities(n: int, suite: str) -> list[Identity]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    groups = {"relations": defining, "derived": derived, "skein": skein}
    names = list(groups) if suite == "all" else [suite]
    return [x for name in names for x in groups[name](n)]


def check_suite(n: int, suite: str) -> list[tuple[Identity, bool]]:
    return [(x, x.holds()) for x in identities(n, suite)]
