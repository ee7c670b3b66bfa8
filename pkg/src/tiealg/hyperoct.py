"""The hyperoctahedral group W_n and the representation theory of E_n(1).

W_n = C_2 wr S_n is modelled by signed permutations: ``WElement(perm, signs)``
sends k to perm(k) and carries the bit signs[k-1]. Products follow the
symmetric-group convention (``g * h`` applies g first), so t_{i+1} = s_i t_i s_i.

Induced modules V_(alpha,beta) are built on Dirac bases: the generator g
sends delta_{x,v} to rho(h^-1) v placed at delta_{x'}, where x g^-1 = h x'
with x' a distinguished coset representative.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from . import linalg
from .scalars import RationalFunction
from .specht import (
    MatrixRep,
    Partition,
    SignedTensorRep,
    commutant_dim,
    partitions,
    specht_rep,
    tensor_with_sign_character,
)
from .symgroup import Permutation, all_permutations, coset_reps, coxeter_gen, split_Y
from .words import Element, Kind, Word, letter_index, letter_kind

__all__ = [
    "Bipartition",
    "ERep",
    "GroupAlgebraElement",
    "InducedRep",
    "IntertwinerFailure",
    "NotInvariant",
    "RankDeficient",
    "RelationViolation",
    "WElement",
    "e_element",
    "find_intertwiner",
    "image_rank",
    "induced_rep",
    "irreps_E2",
    "irreps_E3",
    "phi0_rep",
    "phi1_rep",
    "plus_minus_split",
    "psi",
    "semisimplicity_certificate",
    "swap_intertwiner",
    "t_element",
    "to_erep",
    "w_mul",
]


class RelationViolation(RuntimeError):
    pass


class IntertwinerFailure(RuntimeError):
    pass


class NotInvariant(RuntimeError):
    pass


class RankDeficient(RuntimeError):
    pass


# -- the group ----------------------------------------------------------------------


class WElement(NamedTuple):
    perm: Permutation
    signs: tuple

    @classmethod
    def identity(cls, n: int) -> "WElement":
        return cls(Permutation.identity(n), (0,) * n)

    @classmethod
    def from_perm(cls, p: Permutation) -> "WElement":
        return cls(p, (0,) * len(p))

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "WElement") -> "WElement":
        return w_mul(self, other)

    def inverse(self) -> "WElement":
        signs = [0] * self.n
        for k, s in enumerate(self.signs):
            signs[self.perm[k] - 1] = s
        return WElement(self.perm.inverse(), tuple(signs))

    def sort_key(self):
        return (tuple(self.perm), self.signs)

    def __str__(self) -> str:
        ts = "".join(f"t{k}" for k, s in enumerate(self.signs, 1) if s)
        return f"{self.perm}{ts}"


def w_mul(g: WElement, h: WElement) -> WElement:
    if g.n != h.n:
        raise ValueError("elements of different W_n")
    signs = tuple(g.signs[k] ^ h.signs[g.perm[k] - 1] for k in range(g.n))
    return WElement(g.perm * h.perm, signs)


def t_element(r: int, n: int) -> WElement:
    return WElement(Permutation.identity(n), tuple(int(k == r) for k in range(1, n + 1)))


def s_element(i: int, n: int) -> WElement:
    return WElement.from_perm(coxeter_gen(i, n))


@lru_cache(maxsize=None)
def group_elements(n: int) -> tuple:
    """All 2^n n! elements, sorted by (permutation, sign vector)."""
    return tuple(WElement(p, s) for p in sorted(all_permutations(n))
                 for s in itertools.product((0, 1), repeat=n))


# -- group algebra ------------------------------------------------------------------


@dataclass(frozen=True)
class GroupAlgebraElement:
    n: int
    terms: dict = field(default_factory=dict)

    @classmethod
    def basis(cls, g: WElement) -> "GroupAlgebraElement":
        return cls(g.n, {g: Fraction(1)})

    @classmethod
    def one(cls, n: int) -> "GroupAlgebraElement":
        return cls.basis(WElement.identity(n))

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {})

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        out = dict(self.terms)
        for g, c in other.terms.items():
            s = out.get(g, 0) + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return GroupAlgebraElement(self.n, out)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        if not c:
            return GroupAlgebraElement(self.n, {})
        return GroupAlgebraElement(self.n, {g: x * c for g, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        out: dict = {}
        for g, c in self.terms.items():
            for h, d in other.terms.items():
                k = w_mul(g, h)
                s = out.get(k, 0) + c * d
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return GroupAlgebraElement(self.n, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAlgebraElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def coefficient(self, g: WElement) -> Fraction:
        return self.terms.get(g, Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{g}" for g, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key()))


def e_element(r: int, n: int) -> GroupAlgebraElement:
    """e_r = (1 + t_r t_{r+1}) / 2."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"e_{r} does not exist for n={n}")
    tt = w_mul(t_element(r, n), t_element(r + 1, n))
    half = Fraction(1, 2)
    return GroupAlgebraElement(n, {WElement.identity(n): half, tt: half})


def _letter_image(code: int, n: int) -> GroupAlgebraElement:
    i = letter_index(code)
    if letter_kind(code) is Kind.E:
        return e_element(i, n)
    # s_i is an involution, so T_i and T_i^-1 both go to s_i
    return GroupAlgebraElement.basis(s_element(i, n))


def psi_word(word: Word, n: int) -> GroupAlgebraElement:
    out = GroupAlgebraElement.one(n)
    for c in word:
        out = out * _letter_image(c, n)
    return out


def psi(a: Element, n: int | None = None) -> GroupAlgebraElement:
    """T_i -> s_i, E_i -> e_i, coefficients specialised at u = 1 (PoleAtPoint on a pole)."""
    n = a.n if n is None else n
    out = GroupAlgebraElement.zero(n)
    for w, c in a.items():
        out = out + psi_word(w, n).scale(c.eval_at(1))
    return out


def _symmetric_image(word: Word, n: int, tie: int) -> dict:
    """phi_0 (tie = 0) or phi_1 (tie = 1) of a word, as {Permutation: coefficient}."""
    if tie == 0 and any(letter_kind(c) is Kind.E for c in word):
        return {}
    p = Permutation.identity(n)
    for c in word:
        if letter_kind(c) is not Kind.E:
            p = p * coxeter_gen(letter_index(c), n)
    return {p: Fraction(1)}


# -- images and ranks -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _columns(n: int, kind: str) -> dict:
    if kind == "psi":
        return {g: k for k, g in enumerate(group_elements(n))}
    return {p: k for k, p in enumerate(sorted(all_permutations(n)))}


def image_matrix(words: Sequence[Word], n: int, maps: Sequence[str]) -> tuple[list[dict], int]:
    """Rows: images of the words under the chosen maps, as sparse rows over Q."""
    offsets = {}
    width = 0
    for m in maps:
        if m not in ("phi0", "phi1", "psi"):
            raise ValueError(f"unknown map {m!r}")
        offsets[m] = width
        width += len(_columns(n, m))
    rows = []
    for w in words:
        row = {}
        for m in maps:
            cols = _columns(n, m)
            off = offsets[m]
            if m == "psi":
                img = psi_word(tuple(w), n).terms
            else:
                img = _symmetric_image(tuple(w), n, 0 if m == "phi0" else 1)
            for g, c in img.items():
                row[off + cols[g]] = c
        rows.append(row)
    return rows, width


def image_rank(words: Iterable[Word], n: int, maps: Sequence[str]) -> int:
    rows, width = image_matrix(list(words), n, maps)
    return linalg.rational_rank(rows, width)


@dataclass(frozen=True)
class Certificate:
    rank: int
    witness_columns: tuple
    psi_only_rank: int
    phi0_rank: int
    column_labels: tuple

    def to_json(self) -> dict:
        return {
            "schema": "tiealg/1",
            "rank": self.rank,
            "psi_only_rank": self.psi_only_rank,
            "phi0_rank": self.phi0_rank,
            "witness_columns": list(self.witness_columns),
            "witness_labels": [self.column_labels[c] for c in self.witness_columns],
        }


@lru_cache(maxsize=None)
def semisimplicity_certificate() -> Certificate:
    """Rank of the 30 x (6 + 48) matrix of (phi_0 + psi)-images of the n = 3 span words."""
    from .rewrite import span_basis

    words = span_basis(3).words
    rows, width = image_matrix(words, 3, ("phi0", "psi"))
    labels = tuple([f"phi0:{p}" for p in sorted(all_permutations(3))]
                   + [f"psi:{g}" for g in group_elements(3)])
    # witness: independent columns = independent rows of the transpose
    cols = [dict() for _ in range(width)]
    for i, row in enumerate(rows):
        for j, x in row.items():
            cols[j][i] = x
    witness = tuple(linalg.independent_rows(cols))
    r = linalg.rational_rank(rows, width)
    if r != len(witness):
        raise RankDeficient(f"kernel rank {r} disagrees with witness size {len(witness)}")
    psi_rows, psi_width = image_matrix(words, 3, ("psi",))
    phi_rows, phi_width = image_matrix(words, 3, ("phi0",))
    return Certificate(
        rank=r,
        witness_columns=tuple(sorted(witness)),
        psi_only_rank=linalg.rational_rank(psi_rows, psi_width),
        phi0_rank=linalg.rational_rank(phi_rows, phi_width),
        column_labels=labels,
    )


# -- representations of E_n(1) ------------------------------------------------------------


def _mat(m) -> tuple:
    return tuple(tuple(Fraction(x) for x in row) for row in m)


@dataclass(frozen=True)
class ERep:
    n: int
    T: tuple
    E: tuple
    label: str

    @property
    def dim(self) -> int:
        return len(self.T[0]) if self.T else (len(self.E[0]) if self.E else 1)

    def letter_matrix(self, code: int):
        i = letter_index(code)
        return self.E[i - 1] if letter_kind(code) is Kind.E else self.T[i - 1]

    def word_matrix(self, word: Word):
        out = linalg.identity(self.dim)
        for c in word:
            out = linalg.matmul(out, self.letter_matrix(c))
        return out

    def element_matrix(self, a: Element):
        d = self.dim
        out = [[Fraction(0)] * d for _ in range(d)]
        for w, c in a.items():
            x = c.eval_at(1)
            m = self.word_matrix(w)
            for i in range(d):
                for j in range(d):
                    out[i][j] += x * m[i][j]
        return out

    def character(self, words: Sequence[Word]) -> tuple:
        return tuple(linalg.trace(self.word_matrix(w)) for w in words)

    def generators(self) -> list:
        return list(self.T) + list(self.E)

    def relation_failures(self) -> list[str]:
        """Names of the relations (1)-(9) at u = 1 that fail."""
        mm = linalg.matmul
        eye = linalg.identity(self.dim)
        T, E = self.T, self.E
        bad = []
        r = range(len(T))
        for i in r:
            if _mat(mm(E[i], E[i])) != _mat(E[i]):
                bad.append(f"(3) i={i + 1}")
            if _mat(mm(E[i], T[i])) != _mat(mm(T[i], E[i])):
                bad.append(f"(5) i={i + 1}")
            if _mat(mm(T[i], T[i])) != _mat(eye):
                bad.append(f"(9) i={i + 1}")
            for j in r:
                far = abs(i - j) > 1
                near = abs(i - j) == 1
                if far and _mat(mm(T[i], T[j])) != _mat(mm(T[j], T[i])):
                    bad.append(f"(1) {i + 1},{j + 1}")
                if near and _mat(mm(mm(T[i], T[j]), T[i])) != _mat(mm(mm(T[j], T[i]), T[j])):
                    bad.append(f"(2) {i + 1},{j + 1}")
                if _mat(mm(E[i], E[j])) != _mat(mm(E[j], E[i])):
                    bad.append(f"(4) {i + 1},{j + 1}")
                if far and _mat(mm(E[i], T[j])) != _mat(mm(T[j], E[i])):
                    bad.append(f"(6) {i + 1},{j + 1}")
                if near:
                    if _mat(mm(mm(E[j], T[i]), T[j])) != _mat(mm(mm(T[i], T[j]), E[i])):
                        bad.append(f"(7) {i + 1},{j + 1}")
                    a = _mat(mm(mm(E[i], E[j]), T[j]))
                    b = _mat(mm(mm(E[i], T[j]), E[i]))
                    c = _mat(mm(mm(T[j], E[i]), E[j]))
                    if not a == b == c:
                        bad.append(f"(8) {i + 1},{j + 1}")
        return bad

    def check_relations(self) -> None:
        bad = self.relation_failures()
        if bad:
            raise RelationViolation(f"{self.label}: relations fail: {', '.join(bad)}")

    def commutant_dim(self) -> int:
        return commutant_dim(self.generators())

    def to_json(self) -> dict:
        def enc(m):
            return [[str(x) for x in row] for row in m]

        return {"label": self.label, "dim": self.dim,
                "T": [enc(m) for m in self.T], "E": [enc(m) for m in self.E]}


def direct_sum(*reps: ERep, label: str = "") -> ERep:
    n = reps[0].n
    T = tuple(_mat(linalg.block_diag(*(r.T[i] for r in reps))) for i in range(n - 1))
    E = tuple(_mat(linalg.block_diag(*(r.E[i] for r in reps))) for i in range(n - 1))
    return ERep(n, T, E, label or " + ".join(r.label for r in reps))


class Bipartition(NamedTuple):
    alpha: Partition
    beta: Partition

    @property
    def a(self) -> int:
        return self.alpha.size

    @property
    def b(self) -> int:
        return self.beta.size

    @property
    def n(self) -> int:
        return self.a + self.b

    def label(self) -> str:
        return f"({self.alpha},{self.beta})"

    @classmethod
    def parse(cls, text: str) -> "Bipartition":
        """Parse ``"[2],[1]"`` or ``"[2,1],phi"``."""
        depth = 0
        for k, ch in enumerate(text):
            depth += ch == "["
            depth -= ch == "]"
            if ch == "," and depth == 0:
                return cls(Partition.parse(text[:k]), Partition.parse(text[k + 1:]))
        raise ValueError(f"cannot parse bipartition {text!r}")


@dataclass(frozen=True)
class InducedRep:
    bipartition: Bipartition
    dirac_index: tuple  # (x, (i, j)) pairs, x in X_(a,b) BFS order
    s_matrices: tuple
    t_matrices: tuple

    @property
    def n(self) -> int:
        return self.bipartition.n

    @property
    def dim(self) -> int:
        return len(self.dirac_index)

    def check_group_relations(self) -> bool:
        mm = linalg.matmul
        eye = _mat(linalg.identity(self.dim))
        s, t = self.s_matrices, self.t_matrices
        for m in s + t:
            if _mat(mm(m, m)) != eye:
                return False
        for i in range(len(s)):
            for j in range(i + 1, len(s)):
                lhs = mm(mm(s[i], s[j]), s[i]) if j == i + 1 else mm(s[i], s[j])
                rhs = mm(mm(s[j], s[i]), s[j]) if j == i + 1 else mm(s[j], s[i])
                if _mat(lhs) != _mat(rhs):
                    return False
        if s:
            ts = mm(t[0], s[0])
            if _mat(mm(mm(ts, ts), mm(ts, ts))) != eye:
                return False
            for j in range(1, len(s)):
                if _mat(mm(t[0], s[j])) != _mat(mm(s[j], t[0])):
                    return False
        return True


def _split_perm(p: Permutation, a: int):
    n = len(p)
    p1 = Permutation(p[:a]) if a else None
    p2 = Permutation(x - a for x in p[a:]) if a < n else None
    return p1, p2


def _rho(rep: SignedTensorRep, h: WElement):
    """(alpha (x) eps beta)(h) for h in W_(a,b)."""
    a = rep.a
    if any(h.perm(k) > a for k in range(1, a + 1)):
        raise ValueError(f"{h} is not in W_({rep.a},{rep.b})")
    p1, p2 = _split_perm(h.perm, a)
    return rep.of_parts(p1, p2, sum(h.signs[a:]))


def _decompose(y: WElement, reps: tuple, a: int):
    """y = h * x with x a representative and h in W_(a,b); returns (h, x)."""
    for x in reps:
        h = w_mul(y, WElement.from_perm(x).inverse())
        if all(h.perm(k) <= a for k in range(1, a + 1)):
            return h, x
    raise ValueError(f"{y} has no coset representative")


def _generator_matrix(g: WElement, system, rho: SignedTensorRep, block: int):
    reps = system.reps
    pos = {x: k for k, x in enumerate(reps)}
    size = len(reps) * block
    m = [[Fraction(0)] * size for _ in range(size)]
    ginv = g.inverse()
    for k, x in enumerate(reps):
        h, x2 = _decompose(w_mul(WElement.from_perm(x), ginv), reps, system.a)
        r = _rho(rho, h.inverse())
        k2 = pos[x2]
        for i in range(block):
            for j in range(block):
                if r[j][i]:
                    m[k2 * block + j][k * block + i] = Fraction(r[j][i])
    return _mat(m)


@lru_cache(maxsize=None)
def induced_rep(bp: Bipartition) -> InducedRep:
    a, b = bp.a, bp.b
    n = a + b
    system = coset_reps(a, b)
    rho = tensor_with_sign_character(specht_rep(bp.alpha), specht_rep(bp.beta), a, b)
    da = specht_rep(bp.alpha).dim
    db = specht_rep(bp.beta).dim
    block = da * db
    index = tuple((x, (i, j)) for x in system.reps for i in range(da) for j in range(db))
    s_mats = tuple(_generator_matrix(s_element(k, n), system, rho, block) for k in range(1, n))
    t_mats = tuple(_generator_matrix(t_element(r, n), system, rho, block) for r in range(1, n + 1))
    return InducedRep(bp, index, s_mats, t_mats)


def to_erep(r: InducedRep, label: str | None = None) -> ERep:
    n = r.n
    d = r.dim
    eye = linalg.identity(d)
    E = []
    for k in range(n - 1):
        tt = linalg.matmul(r.t_matrices[k], r.t_matrices[k + 1])
        E.append(_mat([[(eye[i][j] + tt[i][j]) / 2 for j in range(d)] for i in range(d)]))
    rep = ERep(n, tuple(r.s_matrices), tuple(E), label or r.bipartition.label())
    rep.check_relations()
    return rep


def _word_perm_matrix(perm_index: dict, d: int) -> list:
    m = [[Fraction(0)] * d for _ in range(d)]
    for src, dst in perm_index.items():
        m[dst][src] = Fraction(1)
    return m


def swap_intertwiner(bp: Bipartition):
    """Phi: delta_{x,(i,j)} -> delta_{w^-1 x,(j,i)} from V_(alpha,beta) to V_(beta,alpha)."""
    src = induced_rep(bp)
    dst = induced_rep(Bipartition(bp.beta, bp.alpha))
    w = coset_reps(bp.a, bp.b).w
    winv = w.inverse()
    target = {key: k for k, key in enumerate(dst.dirac_index)}
    mapping = {}
    for k, (x, (i, j)) in enumerate(src.dirac_index):
        mapping[k] = target[(winv * x, (j, i))]
    phi = _mat(_word_perm_matrix(mapping, src.dim))
    a_rep = to_erep(src)
    b_rep = to_erep(dst)
    if not intertwines(phi, a_rep, b_rep):
        raise IntertwinerFailure(f"swap map is not an intertwiner for {bp.label()}")
    return phi


def intertwines(phi, a: ERep, b: ERep) -> bool:
    """phi * M_a = M_b * phi for every generator."""
    mm = linalg.matmul
    return all(_mat(mm(phi, ma)) == _mat(mm(mb, phi))
               for ma, mb in zip(a.generators(), b.generators()))


def find_intertwiner(a: ERep, b: ERep):
    """An invertible X with X M_a = M_b X for all generators, or IntertwinerFailure."""
    if a.dim != b.dim or a.n != b.n:
        raise IntertwinerFailure("dimensions differ")
    d = a.dim
    rows = []
    for ma, mb in zip(a.generators(), b.generators()):
        for i in range(d):
            for j in range(d):
                row = {}
                for k in range(d):
                    if ma[k][j]:
                        row[i * d + k] = row.get(i * d + k, 0) + ma[k][j]
                    if mb[i][k]:
                        row[k * d + j] = row.get(k * d + j, 0) - mb[i][k]
                row = [row.get(c, 0) for c in range(d * d)]
                if any(row):
                    rows.append(row)
    basis = linalg.nullspace(rows, d * d) if rows else [
        [Fraction(int(c == k)) for c in range(d * d)] for k in range(d * d)]
    # deterministic search for an invertible combination
    candidates = [list(v) for v in basis]
    candidates.append([sum((Fraction(k + 1) * v[c] for k, v in enumerate(basis)), Fraction(0))
                       for c in range(d * d)])
    for vec in candidates:
        x = [[vec[i * d + j] for j in range(d)] for i in range(d)]
        if linalg.rank(x) == d:
            x = _mat(x)
            if not intertwines(x, a, b):
                raise IntertwinerFailure("solver returned a non-intertwiner")
            return x
    raise IntertwinerFailure(f"no invertible intertwiner between {a.label} and {b.label}")


def plus_minus_split(alpha: Partition) -> tuple[ERep, ERep]:
    """V_(alpha,alpha) = V^+ + V^- on vectors delta_{x,(i,j)} +- delta_{w x,(j,i)}, x in Y."""
    m = alpha.size
    bp = Bipartition(alpha, alpha)
    ind = induced_rep(bp)
    rep = to_erep(ind)
    w = coset_reps(m, m).w
    pos = {key: k for k, key in enumerate(ind.dirac_index)}
    ys = split_Y(m)
    da = specht_rep(alpha).dim
    out = []
    for sign, tag in ((1, "+"), (-1, "-")):
        basis = []
        for y in ys:
            for i in range(da):
                for j in range(da):
                    v = [Fraction(0)] * ind.dim
                    v[pos[(y, (i, j))]] += 1
                    v[pos[(w * y, (j, i))]] += sign
                    basis.append(v)
        lead = [pos[(y, (i, j))] for y in ys for i in range(da) for j in range(da)]

        def restrict(mat):
            cols = []
            for v in basis:
                img = [sum((mat[r][c] * v[c] for c in range(ind.dim) if v[c]), Fraction(0))
                       for r in range(ind.dim)]
                coords = [img[k] for k in lead]
                back = [sum((coords[q] * basis[q][r] for q in range(len(basis))), Fraction(0))
                        for r in range(ind.dim)]
                if back != img:
                    raise NotInvariant(f"({alpha},{tag}) is not invariant")
                cols.append(coords)
            size = len(basis)
            return _mat([[cols[c][r] for c in range(size)] for r in range(size)])

        sub = ERep(2 * m, tuple(restrict(x) for x in rep.T), tuple(restrict(x) for x in rep.E),
                   f"({alpha},{tag})")
        sub.check_relations()
        out.append(sub)
    return out[0], out[1]


def _phi_rep(alpha: Partition, tie: int) -> ERep:
    sp = specht_rep(alpha)
    n = alpha.size
    d = sp.dim
    fill = linalg.identity(d) if tie else [[Fraction(0)] * d for _ in range(d)]
    rep = ERep(n, tuple(_mat(m) for m in sp.generator_matrices),
               tuple(_mat(fill) for _ in range(n - 1)), f"({alpha},{tie})")
    rep.check_relations()
    return rep


def phi0_rep(alpha: Partition) -> ERep:
    return _phi_rep(alpha, 0)


def phi1_rep(alpha: Partition) -> ERep:
    return _phi_rep(alpha, 1)


def cor_e_holds(bp: Bipartition) -> bool:
    """Whether e_r acts as 1 for r != a and as 0 for r = a on every Dirac vector."""
    rep = to_erep(induced_rep(bp))
    d = rep.dim
    eye = _mat(linalg.identity(d))
    zero = _mat([[0] * d for _ in range(d)])
    return all(rep.E[r - 1] == (zero if r == bp.a else eye) for r in range(1, bp.n))


@lru_cache(maxsize=None)
def irreps_E2() -> tuple:
    plus, minus = plus_minus_split(Partition([1]))
    return (
        to_erep(induced_rep(Bipartition(Partition([2]), Partition()))),
        to_erep(induced_rep(Bipartition(Partition([1, 1]), Partition()))),
        plus,
        minus,
    )


@lru_cache(maxsize=None)
def irreps_E3() -> tuple:
    """The 8 irreducible E_3(1)-modules: (alpha,phi), (alpha,0), ([2],[1]), ([1,1],[1])."""
    parts = partitions(3)  # [3], [2,1], [1,1,1]
    order = [parts[0], parts[2], parts[1]]
    reps = [to_erep(induced_rep(Bipartition(p, Partition()))) for p in order]
    reps += [phi0_rep(p) for p in order]
    reps.append(to_erep(induced_rep(Bipartition(Partition([2]), Partition([1])))))
    reps.append(to_erep(induced_rep(Bipartition(Partition([1, 1]), Partition([1])))))
    return tuple(reps)


def conjugate_signs(a: int, b: int, signs: Sequence[int]) -> tuple:
    """Sign vector of w^-1 diag(signs) w, w = w_{a,b}."""
    from .symgroup import w_ab

    n = a + b
    w = WElement.from_perm(w_ab(a, b))
    d = WElement(Permutation.identity(n), tuple(signs))
    out = w_mul(w_mul(w.inverse(), d), w)
    if not out.perm.is_identity():
        raise AssertionError("conjugate of a diagonal element is not diagonal")
    return out.signs


def ereps_json(reps: Iterable[ERep]) -> str:
    return json.dumps({"schema": "tiealg/1", "reps": [r.to_json() for r in reps]})
