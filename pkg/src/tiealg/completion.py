"""Noncommutative Buchberger completion for the defining ideal of E_n(u).

The two-sided ideal lives in the free algebra over Q(u) on the letters
T_i, E_i (inverse letters are substituted before reduction). Words are
ordered by a wreath-type monomial order: a word is compared first by its
projection onto the highest-index letters (number of T letters, then
length, then lexicographic with T before E), then by
the sequence of lower-level interstitial words read from the right,
recursively. Under this
order the normal words of E_n(u) are tower-form words.

The completed system certifies itself: every overlap between rule left-hand
sides resolves, so the irreducible words form a basis of the quotient.
"""
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .scalars import ONE, ZERO, RationalFunction, U, as_rf

log = logging.getLogger(__name__)

Poly = dict  # dict[tuple[int, ...], RationalFunction]


class RewriteBudgetExceeded(RuntimeError):
    """The step budget ran out before a computation finished."""


def T(i: int) -> int:
    return 3 * (i - 1)


def E(i: int) -> int:
    return 3 * (i - 1) + 2


def TI(i: int) -> int:
    return 3 * (i - 1) + 1


@lru_cache(maxsize=None)
def _wreath_key(word: tuple, level: int) -> tuple:
    if level == 0 or not word:
        return ()
    lo = 3 * (level - 1)
    proj = []
    parts = []
    cur: list[int] = []
    for c in word:
        if c >= lo:
            proj.append(c)
            parts.append(tuple(cur))
            cur = []
        else:
            cur.append(c)
    parts.append(tuple(cur))
    if not proj:
        return ((0, 0, ()), (_wreath_key(word, level - 1),))
    t_count = sum(1 for c in proj if c % 3 == 0)
    # interstitials compared right to left: lower letters drift leftwards
    return ((t_count, len(proj), tuple(proj)),
            tuple(_wreath_key(p, level - 1) for p in reversed(parts)))


def order_key(word: tuple, n: int) -> tuple:
    """Sort key realising the wreath monomial order on words for n strands."""
    return _wreath_key(word, n - 1)


def defining_relations(n: int) -> list[Poly]:
    """The nine families of defining relations as polynomials equal to zero."""
    rels: list[Poly] = []
    idx = range(1, n)
    uinv_minus_1 = U.inv() - ONE

    def rel(*terms):
        p: Poly = {}
        for coeff, word in terms:
            c = p.get(word, ZERO) + as_rf(coeff)
            if c:
                p[word] = c
            else:
                p.pop(word, None)
        if p:
            rels.append(p)

    for i in idx:
        for j in idx:
            if abs(i - j) > 1 and i < j:
                rel((1, (T(i), T(j))), (-1, (T(j), T(i))))          # (1)
            if abs(i - j) == 1 and i < j:
                rel((1, (T(i), T(j), T(i))), (-1, (T(j), T(i), T(j))))  # (2)
            if i < j:
                rel((1, (E(i), E(j))), (-1, (E(j), E(i))))          # (4)
            if abs(i - j) > 1:
                rel((1, (E(i), T(j))), (-1, (T(j), E(i))))          # (6)
            if abs(i - j) == 1:
                rel((1, (E(j), T(i), T(j))), (-1, (T(i), T(j), E(i))))  # (7)
                rel((1, (E(i), E(j), T(j))), (-1, (E(i), T(j), E(i))))  # (8)
                rel((1, (E(i), T(j), E(i))), (-1, (T(j), E(i), E(j))))
        rel((1, (E(i), E(i))), (-1, (E(i),)))                        # (3)
        rel((1, (E(i), T(i))), (-1, (T(i), E(i))))                  # (5)
        rel((1, (T(i), T(i))), (-1, ()), (-uinv_minus_1, (E(i),)),  # (9)
            (uinv_minus_1, (E(i), T(i))))
    return rels


def inverse_expansion(i: int) -> Poly:
    """T_i^-1 = T_i + (u-1) E_i T_i + (1-u) E_i."""
    return {(T(i),): ONE, (E(i), T(i)): U - ONE, (E(i),): ONE - U}


def _poly_add_scaled(target: Poly, source: Poly, coeff: RationalFunction,
                     prefix: tuple = (), suffix: tuple = ()) -> None:
    for w, c in source.items():
        word = prefix + w + suffix
        s = target.get(word, ZERO) + coeff * c
        if s:
            target[word] = s
        else:
            target.pop(word, None)


@dataclass
class RewritingSystem:
    """A (possibly partial) Gröbner basis: rules lhs -> rhs with rhs < lhs."""

    n: int
    rules: dict = field(default_factory=dict)
    budget: int = 10**6
    steps: int = 0

    def __post_init__(self):
        self._lengths: list[int] = []

    def _refresh_lengths(self) -> None:
        self._lengths = sorted({len(k) for k in self.rules})

    def key(self, word: tuple) -> tuple:
        return _wreath_key(word, self.n - 1)

    def find(self, word: tuple) -> tuple[int, tuple] | None:
        """Leftmost (then shortest) occurrence of a rule left-hand side."""
        rules = self.rules
        lengths = self._lengths
        for pos in range(len(word)):
            for ln in lengths:
                end = pos + ln
                if end > len(word):
                    break
                sub = word[pos:end]
                if sub in rules:
                    return pos, sub
        return None

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise RewriteBudgetExceeded(
                f"rewrite budget of {self.budget} rule applications exhausted (n={self.n})"
            )

    def reduce(self, poly: Poly) -> Poly:
        """Fully reduce a polynomial with the current rules."""
        poly = dict(poly)
        out: Poly = {}
        while poly:
            # largest word first keeps each word visited once
            word = max(poly, key=self.key)
            coeff = poly.pop(word)
            hit = self.find(word)
            if hit is None:
                out[word] = coeff
                continue
            self._tick()
            pos, lhs = hit
            _poly_add_scaled(poly, self.rules[lhs], coeff, word[:pos], word[pos + len(lhs):])
        return out

    def leading(self, poly: Poly) -> tuple:
        return max(poly, key=self.key)


def complete(n: int, budget: int = 10**6) -> RewritingSystem:
    """Run Buchberger completion on the defining relations of E_n(u)."""
    system = RewritingSystem(n, budget=budget)
    key = system.key
    counter = 0
    pending: list = []

    def push(poly: Poly) -> None:
        nonlocal counter
        if poly:
            heapq.heappush(pending, (key(max(poly, key=key)), counter, "poly", poly))
            counter += 1

    def push_pair(a: tuple, b: tuple, k: int) -> None:
        nonlocal counter
        word = a + b[k:]
        heapq.heappush(pending, (key(word), counter, "pair", (a, b, k)))
        counter += 1

    for r in defining_relations(n):
        push(r)

    while pending:
        _, _, kind, payload = heapq.heappop(pending)
        if kind == "pair":
            a, b, k = payload
            if a not in system.rules or b not in system.rules:
                continue
            # a = x c, b = c y with |c| = k; S = rhs(a) y - x rhs(b)
            x = a[: len(a) - k]
            y = b[k:]
            spoly: Poly = {}
            _poly_add_scaled(spoly, system.rules[a], ONE, (), y)
            _poly_add_scaled(spoly, system.rules[b], -ONE, x, ())
            poly = spoly
        else:
            poly = payload
        poly = system.reduce(poly)
        if not poly:
            continue
        lead = system.leading(poly)
        inv = poly[lead].inv()
        rhs = {w: -(c * inv) for w, c in poly.items() if w != lead}
        # rules whose lhs contains the new lead are no longer minimal
        for old in [k for k in system.rules if _contains(k, lead)]:
            old_rhs = system.rules.pop(old)
            p = dict(old_rhs)
            p = {w: -c for w, c in p.items()}
            p[old] = ONE
            push(p)
        system.rules[lead] = rhs
        system._refresh_lengths()
        for other in list(system.rules):
            for a, b in ((lead, other), (other, lead)):
                for k in range(1, min(len(a), len(b))):
                    if a[len(a) - k:] == b[:k]:
                        push_pair(a, b, k)
            if other == lead:
                continue
    # interreduce right-hand sides
    for lhs in list(system.rules):
        system.rules[lhs] = system.reduce(system.rules[lhs])
    log.info("completion n=%d: %d rules, %d steps", n, len(system.rules), system.steps)
    return system


def _contains(word: tuple, sub: tuple) -> bool:
    ls = len(sub)
    return any(word[i:i + ls] == sub for i in range(len(word) - ls + 1))


def normal_words(system: RewritingSystem, letters: list[int], max_len: int = 64) -> list[tuple]:
    """Enumerate the irreducible words (finite when the quotient is)."""
    out = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for c in letters:
                v = w + (c,)
                if system.find(v) is None:
                    nxt.append(v)
        if nxt and len(nxt[0]) > max_len:
            raise RewriteBudgetExceeded("normal words do not terminate")
        out.extend(nxt)
        frontier = nxt
    return out
