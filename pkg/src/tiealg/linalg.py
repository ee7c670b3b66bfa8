"""Exact linear algebra over a field: Fraction or RationalFunction entries.

Rows are sparse dicts ``{column: value}``. Nothing here ever touches floats.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

SparseRow = dict


def to_sparse(rows: Sequence[Sequence]) -> list[SparseRow]:
    return [{j: x for j, x in enumerate(row) if x} for row in rows]


def _row_echelon(rows: list[SparseRow]) -> tuple[list[SparseRow], list[int], list[int]]:
    """Gaussian elimination returning (echelon rows, pivot columns, pivot row ids).

    Each echelon row is normalised to 1 at its pivot. The pivot row ids name
    the input rows that were used, which gives a witness set of independent
    rows.
    """
    pivots: dict[int, SparseRow] = {}
    order: list[int] = []
    row_ids: list[int] = []
    for rid, row in enumerate(rows):
        r = dict(row)
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / r[col] if isinstance(r[col], (int, Fraction)) else r[col].inv()
                r = {j: x * inv for j, x in r.items()}
                pivots[col] = r
                order.append(col)
                row_ids.append(rid)
                break
            f = r[col]
            for j, x in piv.items():
                y = r.get(j)
                y = -(f * x) if y is None else y - f * x
                if y:
                    r[j] = y
                else:
                    r.pop(j, None)
    return [pivots[c] for c in order], order, row_ids


def rank(rows: Sequence[Sequence] | list[SparseRow]) -> int:
    rows = rows if rows and isinstance(rows[0], dict) else to_sparse(rows)
    return len(_row_echelon(list(rows))[0])


def independent_rows(rows: list[SparseRow]) -> list[int]:
    return _row_echelon(rows)[2]


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of {x : A x = 0} for a dense matrix ``rows`` with ``ncols`` columns."""
    sparse = to_sparse(rows)
    echelon, pivcols, _ = _row_echelon(sparse)
    # back-substitute to reduced echelon form
    reduced: dict[int, SparseRow] = {}
    for col, row in sorted(zip(pivcols, echelon), key=lambda t: -t[0]):
        r = dict(row)
        for j in [j for j in r if j != col and j in reduced]:
            f = r.pop(j)
            for k, x in reduced[j].items():
                if k == j:
                    continue
                y = r.get(k)
                y = -(f * x) if y is None else y - f * x
                if y:
                    r[k] = y
                else:
                    r.pop(k, None)
        reduced[col] = r
    free = [j for j in range(ncols) if j not in reduced]
    basis = []
    zero = Fraction(0)
    for fcol in free:
        vec = [zero] * ncols
        vec[fcol] = Fraction(1)
        for col, r in reduced.items():
            x = r.get(fcol)
            if x:
                vec[col] = -x
        basis.append(vec)
    return basis


def inverse(matrix: Sequence[Sequence]):
    """Inverse of a square matrix by Gauss-Jordan; raises ZeroDivisionError if singular."""
    size = len(matrix)
    rows = []
    for i, row in enumerate(matrix):
        r = {j: x for j, x in enumerate(row) if x}
        r[size + i] = Fraction(1)
        rows.append(r)
    echelon, pivcols, _ = _row_echelon(rows)
    by_col = dict(zip(pivcols, echelon))
    if any(c not in by_col for c in range(size)):
        raise ZeroDivisionError("matrix is singular")
    reduced: dict[int, SparseRow] = {}
    for col in range(size - 1, -1, -1):
        r = dict(by_col[col])
        for j in [j for j in r if j != col and j < size]:
            f = r.pop(j)
            for k, x in reduced[j].items():
                if k == j:
                    continue
                y = r.get(k)
                y = -(f * x) if y is None else y - f * x
                if y:
                    r[k] = y
                else:
                    r.pop(k, None)
        reduced[col] = r
    return [[reduced[i].get(size + j, 0) for j in range(size)] for i in range(size)]


def matmul(a, b):
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner) if a[i][k] and b[k][j]), Fraction(0))
             for j in range(cols)] for i in range(len(a))]


def identity(size: int):
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def is_identity(m) -> bool:
    return all(m[i][j] == (1 if i == j else 0) for i in range(len(m)) for j in range(len(m)))


def is_zero(m) -> bool:
    return all(not x for row in m for x in row)


def kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def block_diag(*blocks):
    size = sum(len(b) for b in blocks)
    out = [[Fraction(0)] * size for _ in range(size)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = Fraction(x)
        off += len(b)
    return out


def trace(m):
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def integer_rows(rows: list[SparseRow]) -> list[SparseRow]:
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for r in rows:
        d = 1
        for x in r.values():
            d = lcm(d, Fraction(x).denominator)
        out.append({j: int(Fraction(x) * d) for j, x in r.items()})
    return out


def rational_rank(rows: list[SparseRow], ncols: int) -> int:
    """Exact rank of a matrix with rational entries.

    Rows are cleared to integers first so elimination runs fraction-free.
    """
    return integer_rank(integer_rows(rows), ncols)


def integer_rank(rows: list[dict], ncols: int) -> int:
    """Exact rank over Q of an integer matrix given as sparse rows.

    Fraction-free elimination: each new row is combined with the stored
    pivot rows by cross multiplication and divided by its content, so all
    arithmetic stays in the integers.
    """
    pivots: dict[int, dict] = {}
    for row in rows:
        r = {j: x for j, x in row.items() if x}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = _primitive(r)
                break
            a = piv[col]
            b = r[col]
            g = gcd(a, b)
            a //= g
            b //= g
            new = {}
            for j, x in r.items():
                y = a * x - b * piv.get(j, 0)
                if y:
                    new[j] = y
            for j, x in piv.items():
                if j not in r:
                    new[j] = -b * x
            r = _primitive(new) if new else new
    return len(pivots)


def _primitive(r: dict) -> dict:
    g = 0
    for x in r.values():
        g = gcd(g, x)
        if g == 1:
            return r
    return {j: x // g for j, x in r.items()}
