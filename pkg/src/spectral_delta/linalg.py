"""Exact linear algebra over the integers and over fields.

Matrices hold arbitrary-precision Python ints; nothing here ever rounds.
The Smith reduction uses minimum-absolute-value pivoting with explicit
remainder handling, tracking unimodular row and column transforms when
requested.  Rational ranks come from fraction-free (Bareiss) elimination,
prime-field ranks from ordinary modular elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class IntMatrix:
    """Dense row-major integer matrix."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[0] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError("data shape does not match dimensions")
            self.data = [list(r) for r in data]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        m = len(rows)
        n = len(rows[0]) if rows else 0
        return cls(m, n, rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        out = cls(n, n)
        for i in range(n):
            out.data[i][i] = 1
        return out

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        ot = list(zip(*other.data)) if other.data else []
        out = IntMatrix(self.rows, other.cols)
        for i, row in enumerate(self.data):
            out.data[i] = [sum(a * b for a, b in zip(row, col)) for col in ot]
        return out

    def transpose(self) -> "IntMatrix":
        flipped = [[self.data[r][c] for r in range(self.rows)]
                   for c in range(self.cols)]
        return IntMatrix(self.cols, self.rows, flipped)

    def diagonal(self) -> list[int]:
        return [self.data[i][i] for i in range(min(self.rows, self.cols))]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        return _bareiss_det([row[:] for row in self.data])

    def to_text(self) -> str:
        """Row-major debug rendering, one space-separated line per row."""
        if self.rows == 0 or self.cols == 0:
            return f"({self.rows}x{self.cols} empty)"
        return "\n".join(" ".join(str(x) for x in row) for row in self.data)

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class SnfResult:
    """Smith decomposition U @ A @ V == D with U, V unimodular and the
    diagonal of D nonnegative with each entry dividing the next."""
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.D.diagonal() if d != 0]


def _bareiss_det(M: list[list[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        piv = M[k][k]
        for i in range(k + 1, n):
            Mi, Mk = M[i], M[k]
            t = Mi[k]
            for j in range(k + 1, n):
                Mi[j] = (piv * Mi[j] - t * Mk[j]) // prev
            Mi[k] = 0
        prev = piv
    return sign * M[n - 1][n - 1]


def _snf_core(M: list[list[int]], m: int, n: int, U=None, V=None) -> list[int]:
    """Reduce M in place to Smith form; return the nonzero diagonal.

    When U / V are given (as identity matrices' row lists) every row and
    column operation is mirrored so that U @ A @ V == M holds throughout.
    """

    def row_sub(i, k, q, start=None):
        # row i -= q * row k; columns before `start` (default: k, right
        # for clearing calls where k is the stage) are known zeros
        if not q:
            return
        Mi, Mk = M[i], M[k]
        for j in range(k if start is None else start, n):
            Mi[j] -= q * Mk[j]
        if U is not None:
            Ui, Uk = U[i], U[k]
            for j in range(m):
                Ui[j] -= q * Uk[j]

    def col_sub(j, k, q):
        if not q:
            return
        for i in range(k, m):
            Mi = M[i]
            Mi[j] -= q * Mi[k]
        if V is not None:
            for row in V:
                row[j] -= q * row[k]

    def row_swap(i, k):
        M[i], M[k] = M[k], M[i]
        if U is not None:
            U[i], U[k] = U[k], U[i]

    def col_swap(j, k):
        for row in M:
            row[j], row[k] = row[k], row[j]
        if V is not None:
            for row in V:
                row[j], row[k] = row[k], row[j]

    def row_negate(k):
        M[k] = [-x for x in M[k]]
        if U is not None:
            U[k] = [-x for x in U[k]]

    # Each round re-selects the globally smallest nonzero entry as the
    # pivot and clears with nearest-integer quotients, so every residue
    # has magnitude at most half the pivot.  A round that leaves any
    # residue (or folds a non-divisible row) therefore at least halves
    # the next pivot; entry growth stays polynomial in practice where
    # mid-pass remainder promotion made entries square each pass.
    diag: list[int] = []
    k = 0
    limit = min(m, n)
    while k < limit:
        best = None
        bi = bj = -1
        for i in range(k, m):
            Mi = M[i]
            for j in range(k, n):
                v = Mi[j]
                if v:
                    a = v if v > 0 else -v
                    if best is None or a < best:
                        best, bi, bj = a, i, j
                        if a == 1:
                            break
            if best == 1:
                break
        if best is None:
            break
        if bi != k:
            row_swap(bi, k)
        if bj != k:
            col_swap(bj, k)
        if M[k][k] < 0:
            row_negate(k)
        a = M[k][k]
        half = a // 2

        dirty = False
        for i in range(k + 1, m):
            x = M[i][k]
            if x:
                row_sub(i, k, (x + half) // a)
                dirty = dirty or M[i][k] != 0
        if dirty:
            continue
        for j in range(k + 1, n):
            x = M[k][j]
            if x:
                col_sub(j, k, (x + half) // a)
                dirty = dirty or M[k][j] != 0
        if dirty:
            continue

        # pivot must divide the rest of the submatrix; fold an offending
        # row into the pivot row and reduce, leaving a residue <= a/2
        bad = None
        for i in range(k + 1, m):
            Mi = M[i]
            for j in range(k + 1, n):
                if Mi[j] % a:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_sub(k, bad, -1, start=k)
            for j in range(k + 1, n):
                x = M[k][j]
                if x:
                    col_sub(j, k, (x + half) // a)
            continue
        diag.append(a)
        k += 1
    return diag


def smith_normal_form(A: IntMatrix) -> SnfResult:
    """Full Smith decomposition of an integer matrix.

    Returns U, D, V with U @ A @ V == D, both transforms unimodular
    (determinant +-1), D diagonal with nonnegative entries forming a
    divisibility chain d1 | d2 | ... followed by zeros.
    """
    m, n = A.rows, A.cols
    M = [row[:] for row in A.data]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    _snf_core(M, m, n, U, V)
    return SnfResult(IntMatrix(m, m, U), IntMatrix(m, n, M), IntMatrix(n, n, V))


def snf_diagonal(data: Sequence[Sequence[int]], m: int, n: int) -> list[int]:
    """Nonzero invariant factors of an integer matrix given as row lists."""
    M = [list(r) for r in data]
    return _snf_core(M, m, n)


def rational_rank(data: Sequence[Sequence[int]], m: int, n: int) -> int:
    """Rank over the rationals via fraction-free Bareiss elimination."""
    M = [list(r) for r in data]
    prev = 1
    rank = 0
    row = 0
    for col in range(n):
        if row == m:
            break
        p = next((i for i in range(row, m) if M[i][col]), None)
        if p is None:
            continue
        if p != row:
            M[row], M[p] = M[p], M[row]
        piv = M[row][col]
        Mr = M[row]
        for i in range(row + 1, m):
            Mi = M[i]
            t = Mi[col]
            for j in range(col + 1, n):
                Mi[j] = (piv * Mi[j] - t * Mr[j]) // prev
            Mi[col] = 0
        prev = piv
        rank += 1
        row += 1
    return rank


def mod_p_rank(data: Sequence[Sequence[int]], m: int, n: int, p: int) -> int:
    """Rank over the field with p elements (p prime)."""
    M = [[x % p for x in r] for r in data]
    rank = 0
    row = 0
    for col in range(n):
        if row == m:
            break
        piv = next((i for i in range(row, m) if M[i][col]), None)
        if piv is None:
            continue
        if piv != row:
            M[row], M[piv] = M[piv], M[row]
        inv = pow(M[row][col], -1, p)
        Mr = M[row]
        for j in range(col, n):
            Mr[j] = Mr[j] * inv % p
        for i in range(row + 1, m):
            t = M[i][col]
            if t:
                Mi = M[i]
                for j in range(col, n):
                    Mi[j] = (Mi[j] - t * Mr[j]) % p
        rank += 1
        row += 1
    return rank
