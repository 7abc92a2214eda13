"""Exact dense linear algebra over a prime field F_p.

Everything downstream (algebras, modules, resolutions) reduces to the three
operations here: row reduction, solving, and nullspaces.  All arithmetic is
integer arithmetic mod p on int64 numpy arrays; there is no floating point
anywhere.  Pivoting is deterministic (leftmost pivot column, topmost row,
free variables set to zero) so every derived invariant is bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

__all__ = [
    "PrimeField",
    "PrimeMatrix",
    "rref",
    "solve",
    "nullspace",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field Z/pZ for a prime p.  Acts as a factory for matrices."""

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("no inverse of 0")
        return pow(a, self.p - 2, self.p)

    def matrix(self, rows) -> "PrimeMatrix":
        a = np.array(rows, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("matrix needs a 2-d list of entries")
        return PrimeMatrix(self, a % self.p)

    def zeros(self, rows: int, cols: int) -> "PrimeMatrix":
        return PrimeMatrix(self, np.zeros((rows, cols), dtype=np.int64))

    def identity(self, n: int) -> "PrimeMatrix":
        return PrimeMatrix(self, np.eye(n, dtype=np.int64))


@dataclass(frozen=True)
class PrimeMatrix:
    """Dense matrix over a PrimeField; entries int64, reduced mod p.

    Immutable by convention: no method mutates `a`, and user code must not.
    """

    field: PrimeField
    a: np.ndarray

    def __post_init__(self):
        if self.a.dtype != np.int64:
            object.__setattr__(self, "a", self.a.astype(np.int64))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrimeMatrix)
            and self.field == other.field
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __matmul__(self, other: "PrimeMatrix") -> "PrimeMatrix":
        self._samefield(other)
        return PrimeMatrix(self.field, (self.a @ other.a) % self.field.p)

    def __add__(self, other: "PrimeMatrix") -> "PrimeMatrix":
        self._samefield(other)
        return PrimeMatrix(self.field, (self.a + other.a) % self.field.p)

    def __sub__(self, other: "PrimeMatrix") -> "PrimeMatrix":
        self._samefield(other)
        return PrimeMatrix(self.field, (self.a - other.a) % self.field.p)

    def __neg__(self) -> "PrimeMatrix":
        return PrimeMatrix(self.field, (-self.a) % self.field.p)

    def scale(self, c: int) -> "PrimeMatrix":
        return PrimeMatrix(self.field, (self.a * (int(c) % self.field.p)) % self.field.p)

    def transpose(self) -> "PrimeMatrix":
        return PrimeMatrix(self.field, self.a.T.copy())

    def kron(self, other: "PrimeMatrix") -> "PrimeMatrix":
        self._samefield(other)
        return PrimeMatrix(self.field, np.kron(self.a, other.a) % self.field.p)

    def hstack(self, other: "PrimeMatrix") -> "PrimeMatrix":
        self._samefield(other)
        return PrimeMatrix(self.field, np.hstack([self.a, other.a]))

    def vstack(self, other: "PrimeMatrix") -> "PrimeMatrix":
        self._samefield(other)
        return PrimeMatrix(self.field, np.vstack([self.a, other.a]))

    def col(self, j: int) -> np.ndarray:
        return self.a[:, j].copy()

    def take_cols(self, idx) -> "PrimeMatrix":
        return PrimeMatrix(self.field, self.a[:, list(idx)].copy())

    def is_zero(self) -> bool:
        return not self.a.any()

    def rank(self) -> int:
        return matrix_rank(self.a, self.field.p)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "PrimeMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        x = solve(self, self.field.identity(self.rows))
        if x is None:
            raise ZeroDivisionError("matrix is singular")
        return x

    def tobytes(self) -> bytes:
        return self.a.shape[0].to_bytes(8, "little") + self.a.shape[1].to_bytes(8, "little") + self.a.tobytes()

    def _samefield(self, other: "PrimeMatrix"):
        if self.field != other.field:
            raise ValueError("matrices over different fields")

    def __repr__(self) -> str:
        return f"PrimeMatrix(p={self.field.p}, {self.a.tolist()})"


def rref(m: PrimeMatrix) -> tuple[PrimeMatrix, int, list[int]]:
    """Reduced row-echelon form; returns (rref, rank, pivot column list).

    Updates touch only rows with a nonzero entry in the pivot column and
    only columns from the pivot rightward (everything to the left of the
    pivot is already zero in the rows involved).
    """
    p = m.field.p
    a = m.a.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r, c:] = (a[r, c:] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c]
        touched = np.nonzero(col)[0]
        touched = touched[touched != r]
        if touched.size:
            a[np.ix_(touched, range(c, cols))] = (
                a[np.ix_(touched, range(c, cols))] - np.outer(col[touched], a[r, c:])
            ) % p
        pivots.append(c)
        r += 1
    return PrimeMatrix(m.field, a), len(pivots), pivots


def matrix_rank(a: np.ndarray, p: int) -> int:
    """Rank by forward elimination only (cheaper than full rref)."""
    a = (np.asarray(a, dtype=np.int64) % p).copy()
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r, c:] = (a[r, c:] * pow(int(a[r, c]), p - 2, p)) % p
        below = r + 1 + np.nonzero(a[r + 1 :, c])[0]
        if below.size:
            a[np.ix_(below, range(c, cols))] = (
                a[np.ix_(below, range(c, cols))] - np.outer(a[below, c], a[r, c:])
            ) % p
        r += 1
    return r


def solve(a: PrimeMatrix, b: PrimeMatrix) -> Optional[PrimeMatrix]:
    """One solution X of aX = b, or None when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if a.field != b.field:
        raise ValueError("matrices over different fields")
    if a.rows != b.rows:
        raise ValueError("row counts differ")
    n = a.cols
    red, rank, pivots = rref(a.hstack(b))
    if any(c >= n for c in pivots):
        return None
    x = np.zeros((n, b.cols), dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = red.a[i, n:]
    return PrimeMatrix(a.field, x)


def nullspace(m: PrimeMatrix) -> PrimeMatrix:
    """Matrix whose columns are a basis of {v : mv = 0}.

    The basis follows the standard free-variable construction: for each
    non-pivot column f (in increasing order) the vector has a 1 in slot f.
    """
    p = m.field.p
    red, rank, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = np.zeros((m.cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, c in enumerate(pivots):
            basis[c, k] = (-red.a[i, f]) % p
    return PrimeMatrix(m.field, basis)
