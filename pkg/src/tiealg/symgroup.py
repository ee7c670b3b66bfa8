"""Symmetric group combinatorics: Coxeter generators, w_{a,b}, coset representatives.

Composition convention: ``p * q`` applies ``p`` first, then ``q``, so
``(p * q)(k) = q(p(k))``. The identities for w_{a,b} (inverse, conjugation
of generators, the parabolic and coset identities) are checked against this
convention in the test suite.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Union

from .words import IndexOutOfRange

__all__ = [
    "CaseViolation",
    "CosetSystem",
    "InX",
    "Permutation",
    "Reflected",
    "coset_reps",
    "coxeter_gen",
    "deodhar_case",
    "parabolic_generators",
    "parabolic_subgroup",
    "s_ij",
    "split_Y",
    "w_ab",
]


class CaseViolation(RuntimeError):
    pass


class Permutation(tuple):
    """A permutation of {1..n} in one-line notation: ``p[k-1]`` is the image of k."""

    def __new__(cls, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self, then other
        return Permutation(other[x - 1] for x in self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self, 1):
            inv[x - 1] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        out = Permutation.identity(len(self))
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def length(self) -> int:
        """Coxeter length = number of inversions."""
        return sum(1 for i, j in itertools.combinations(range(len(self)), 2) if self[i] > self[j])

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self, 1))

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    __str__ = __repr__


def coxeter_gen(i: int, n: int) -> Permutation:
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"s_{i} does not exist in S_{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(images)


def s_ij(i: int, j: int, n: int) -> Permutation:
    """s_{i,i} = 1; s_{i,j} = s_i s_{i+1,j} if i < j; s_{i,j+1} s_j if i > j."""
    if i == j:
        return Permutation.identity(n)
    if i < j:
        return coxeter_gen(i, n) * s_ij(i + 1, j, n)
    return s_ij(i, j + 1, n) * coxeter_gen(j, n)


def w_ab(a: int, b: int) -> Permutation:
    n = a + b
    if n < 1 or a < 0 or b < 0:
        raise ValueError("need a, b >= 0 with a + b >= 1")
    if a == 0 or b == 0:
        return Permutation.identity(n)
    return s_ij(n, 1, n) ** b


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def parabolic_generators(a: int, b: int) -> list[int]:
    """Indices i with s_i in S_{(a,b)} = S_a x S_b."""
    return [i for i in range(1, a + b) if i != a]


@lru_cache(maxsize=None)
def parabolic_subgroup(a: int, b: int) -> frozenset:
    n = a + b
    return frozenset(p for p in all_permutations(n)
                     if all(p(k) <= a for k in range(1, a + 1)))


@dataclass(frozen=True)
class CosetSystem:
    a: int
    b: int
    reps: tuple
    w: Permutation

    @property
    def n(self) -> int:
        return self.a + self.b

    def index_of(self, x: Permutation) -> int:
        return self.reps.index(x)


def _is_distinguished(x: Permutation, gens: list[int]) -> bool:
    n = len(x)
    lx = x.length()
    return all((coxeter_gen(i, n) * x).length() > lx for i in gens)


@lru_cache(maxsize=None)
def coset_reps(a: int, b: int) -> CosetSystem:
    """Minimal-length representatives of the right cosets S_{(a,b)} x, BFS order."""
    n = a + b
    gens = parabolic_generators(a, b)
    start = Permutation.identity(n)
    reps = [start]
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(1, n):
                y = x * coxeter_gen(i, n)
                if y not in seen and y.length() > x.length() and _is_distinguished(y, gens):
                    seen.add(y)
                    reps.append(y)
                    nxt.append(y)
        frontier = nxt
    return CosetSystem(a, b, tuple(reps), w_ab(a, b))


class InX(NamedTuple):
    xs: Permutation


class Reflected(NamedTuple):
    generator: int  # index i of s' = s_i in S_{(a,b)}


DeodharCase = Union[InX, Reflected]


def deodhar_case(system: CosetSystem, x: Permutation, i: int) -> DeodharCase:
    """Either x s_i is again a representative, or x s_i = s' x with s' in S_{(a,b)}."""
    n = system.n
    if x not in system.reps:
        raise ValueError(f"{x} is not a distinguished representative")
    s = coxeter_gen(i, n)
    xs = x * s
    in_x = xs in system.reps
    conj = xs * x.inverse()  # s' with s' x = x s
    gens = parabolic_generators(system.a, system.b)
    reflected = [j for j in gens if coxeter_gen(j, n) == conj]
    if in_x and not reflected:
        return InX(xs)
    if reflected and not in_x:
        return Reflected(reflected[0])
    raise CaseViolation(f"x={x}, s_{i}: in X={in_x}, reflected={reflected}")


def split_Y(m: int) -> list[Permutation]:
    """Y with X_{(m,m)} = Y + w Y (disjoint): keep x when x is lexicographically below w x."""
    system = coset_reps(m, m)
    w = system.w
    ys = [x for x in system.reps if tuple(x) < tuple(w * x)]
    return ys
