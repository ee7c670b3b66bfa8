"""Irreducible representations of S_n over Q in Young's seminormal form."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from . import linalg
from .symgroup import Permutation

__all__ = [
    "MatrixRep",
    "Partition",
    "commutant_dim",
    "direct_sum",
    "partitions",
    "rep_dim",
    "specht_rep",
    "standard_tableaux",
    "tensor_with_sign_character",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive parts; ``Partition(())`` is the empty partition."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts) or any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"{list(parts)} is not a partition")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]" if self else "phi"

    __str__ = __repr__

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("phi", "[]", ""):
            return cls(())
        return cls(json.loads(text))


def partitions(n: int) -> list[Partition]:
    """Partitions of n in reverse lexicographic order ([n] first)."""
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(Partition(acc))
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(n, n, [])
    return out


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple:
    """Standard tableaux as tuples of rows, sorted by their row reading word."""
    n = shape.size
    found = []

    def fill(k, rows):
        if k > n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i, length in enumerate(shape):
            row = rows[i]
            if len(row) < length and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(k)
                fill(k + 1, rows)
                row.pop()

    fill(1, [[] for _ in shape])
    return tuple(sorted(found, key=lambda t: tuple(itertools.chain(*t))))


def _hook_length_count(shape: Partition) -> int:
    conj = shape.conjugate()
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(shape.size) // prod


def rep_dim(shape: Partition) -> int:
    """Number of standard tableaux; checked against the hook length formula."""
    count = len(standard_tableaux(shape))
    hook = _hook_length_count(shape)
    if count != hook:
        raise AssertionError(f"tableau count {count} != hook formula {hook} for {shape}")
    return count


@dataclass(frozen=True)
class MatrixRep:
    n: int
    dim: int
    generator_matrices: tuple  # one dim x dim matrix per s_i, i = 1..n-1

    def matrix(self, i: int):
        return self.generator_matrices[i - 1]

    def of_permutation(self, p: Permutation):
        """Matrix of an arbitrary permutation through a reduced word."""
        out = linalg.identity(self.dim)
        for i in reduced_word(p):
            out = linalg.matmul(out, self.matrix(i))
        return out

    def check_coxeter(self) -> bool:
        eye = linalg.identity(self.dim)
        mats = self.generator_matrices
        for i, m in enumerate(mats):
            if linalg.matmul(m, m) != eye:
                return False
            for j in range(i + 1, len(mats)):
                p = mats[j]
                if j == i + 1:
                    if linalg.matmul(linalg.matmul(m, p), m) != linalg.matmul(linalg.matmul(p, m), p):
                        return False
                elif linalg.matmul(m, p) != linalg.matmul(p, m):
                    return False
        return True

    def to_json(self) -> dict:
        return {"n": self.n, "dim": self.dim,
                "s": [[[str(x) for x in row] for row in m] for m in self.generator_matrices]}


def reduced_word(p: Permutation) -> list[int]:
    """Indices i_1..i_k with p = s_{i_1} * ... * s_{i_k} and k = length(p)."""
    from .symgroup import coxeter_gen

    word = []
    n = len(p)
    while not p.is_identity():
        pos = {v: k for k, v in enumerate(p)}
        i = next(i for i in range(1, n) if pos[i + 1] < pos[i])
        # p * s_i swaps the values i and i+1 in one-line notation
        p = p * coxeter_gen(i, n)
        word.append(i)
    return word[::-1]


def _content(tab, k: int) -> int:
    for r, row in enumerate(tab):
        if k in row:
            return row.index(k) - r
    raise KeyError(k)


def _swap(tab, k: int):
    return tuple(tuple(k + 1 if x == k else k if x == k + 1 else x for x in row) for row in tab)


@lru_cache(maxsize=None)
def specht_rep(shape: Partition) -> MatrixRep:
    n = shape.size
    tabs = standard_tableaux(shape)
    index = {t: i for i, t in enumerate(tabs)}
    d = len(tabs)
    mats = []
    for k in range(1, n):
        m = [[Fraction(0)] * d for _ in range(d)]
        for t, col in index.items():
            rho = _content(t, k + 1) - _content(t, k)
            m[col][col] = Fraction(1, rho)
            other = index.get(_swap(t, k))
            if other is not None:
                # column of t: image of v_t
                m[other][col] = Fraction(1) if rho > 0 else 1 - Fraction(1, rho * rho)
        mats.append(tuple(tuple(r) for r in m))
    return MatrixRep(n, d, tuple(mats))


def commutant_dim(matrices: Sequence) -> int:
    """Dimension of {X : X M = M X for every M}, by exact elimination."""
    matrices = list(matrices)
    if not matrices:
        raise ValueError("need at least one matrix")
    d = len(matrices[0])
    rows = []
    for m in matrices:
        # (X M - M X)[i][j] = sum_k X[i][k] M[k][j] - M[i][k] X[k][j]
        for i in range(d):
            for j in range(d):
                row = {}
                for k in range(d):
                    if m[k][j]:
                        row[i * d + k] = row.get(i * d + k, 0) + m[k][j]
                    if m[i][k]:
                        row[k * d + j] = row.get(k * d + j, 0) - m[i][k]
                row = {c: Fraction(x) for c, x in row.items() if x}
                if row:
                    rows.append(row)
    return d * d - linalg.rank(rows) if rows else d * d


@dataclass(frozen=True)
class SignedTensorRep:
    """alpha (x) eps.beta as a representation of W_(a,b) = W_a x W_b.

    The S-part acts by alpha(p1) (x) beta(p2); the sign datum says that t_r
    acts by +1 for r <= a and by -1 for r > a.
    """

    alpha: MatrixRep | None
    beta: MatrixRep | None
    a: int
    b: int

    @property
    def dim(self) -> int:
        return (self.alpha.dim if self.alpha else 1) * (self.beta.dim if self.beta else 1)

    def t_sign(self, r: int) -> int:
        return 1 if r <= self.a else -1

    def of_parts(self, p1: Permutation | None, p2: Permutation | None, sign_count: int):
        left = self.alpha.of_permutation(p1) if p1 is not None else [[Fraction(1)]]
        right = self.beta.of_permutation(p2) if p2 is not None else [[Fraction(1)]]
        m = linalg.kron(left, right)
        if sign_count % 2:
            m = [[-x for x in row] for row in m]
        return m


def tensor_with_sign_character(rep_alpha: MatrixRep | None, rep_beta: MatrixRep | None,
                               a: int, b: int) -> SignedTensorRep:
    return SignedTensorRep(rep_alpha, rep_beta, a, b)


def direct_sum(*reps: MatrixRep) -> MatrixRep:
    n = reps[0].n
    mats = tuple(tuple(tuple(r) for r in linalg.block_diag(*(rep.matrix(i) for rep in reps)))
                 for i in range(1, n))
    return MatrixRep(n, sum(r.dim for r in reps), mats)
