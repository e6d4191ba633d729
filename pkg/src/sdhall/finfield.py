"""Dense linear algebra over prime fields F_p.

Matrices are numpy ``int64`` arrays holding residues in ``[0, p)``. The
primes in use are tiny, so products of two residues never overflow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

SUPPORTED_PRIMES = (2, 3, 5, 7)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True, eq=False)
class FpMatrix:
    """A ``rows x cols`` matrix over F_p, stored row-major."""

    p: int
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("FpMatrix entries must be two-dimensional")
        object.__setattr__(self, "entries", a % self.p)

    @classmethod
    def from_rows(cls, rows, p: int, cols: int | None = None) -> FpMatrix:
        rows = [list(r) for r in rows]
        if not rows:
            return cls(p, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(p, np.array(rows, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> FpMatrix:
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, n: int, p: int) -> FpMatrix:
        return cls(p, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self) -> int:
        return hash((self.p, self.entries.shape, self.entries.tobytes()))

    def __matmul__(self, other: FpMatrix) -> FpMatrix:
        return FpMatrix(self.p, self.entries @ other.entries)

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, {self.tolist()})"


# raw-array kernels ------------------------------------------------------------


@lru_cache(maxsize=None)
def _inverses(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def rref_array(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of ``a`` mod p and its pivot columns."""
    r = np.array(a, dtype=np.int64) % p
    m, n = r.shape
    inv = _inverses(p)
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        k = row + nz[0]
        if k != row:
            r[[row, k]] = r[[k, row]]
        if r[row, col] != 1:
            r[row] = (r[row] * inv[r[row, col]]) % p
        col_vals = r[:, col].copy()
        col_vals[row] = 0
        nzr = np.nonzero(col_vals)[0]
        if nzr.size:
            r[nzr] = (r[nzr] - np.outer(col_vals[nzr], r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank_array(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref_array(a, p)[1])


def kernel_array(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of the null space of ``a`` as the rows of a ``k x cols`` array."""
    m, n = a.shape
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if m == 0:
        return np.eye(n, dtype=np.int64)
    r, pivots = rref_array(a, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for j, pc in enumerate(pivots):
            basis[i, pc] = (-r[j, f]) % p
    return basis


def row_space_array(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical (RREF) basis of the row space."""
    if a.size == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    r, pivots = rref_array(a, p)
    return r[: len(pivots)]


def inverse_array(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return a.copy()
    r, pivots = rref_array(np.hstack([a % p, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix over F_p")
    return r[:, n:]


def complement_columns(basis: np.ndarray, n: int, p: int) -> list[int]:
    """Standard basis indices completing the row space of ``basis`` to F_p^n."""
    if basis.shape[0] == 0:
        return list(range(n))
    _, pivots = rref_array(basis, p)
    pivset = set(pivots)
    return [c for c in range(n) if c not in pivset]


def batch_invertible(mats: np.ndarray, p: int) -> np.ndarray:
    """Boolean mask: which of the stacked square matrices are invertible.

    ``mats`` has shape ``(B, n, n)``. Elimination is vectorised over the
    batch axis.
    """
    b, n, _ = mats.shape
    if n == 0:
        return np.ones(b, dtype=bool)
    r = mats % p
    inv = _inverses(p)
    ok = np.ones(b, dtype=bool)
    idx = np.arange(b)
    for col in range(n):
        sub = r[:, col:, col]
        has = sub.any(axis=1)
        ok &= has
        k = col + np.argmax(sub != 0, axis=1)
        rows_k = r[idx, k].copy()
        r[idx, k] = r[:, col]
        r[:, col] = rows_k
        piv = r[:, col, col]
        r[:, col] = (r[:, col] * inv[piv][:, None]) % p
        factors = r[:, :, col].copy()
        factors[:, col] = 0
        r = (r - factors[:, :, None] * r[:, col][:, None, :]) % p
    return ok


# public operations --------------------------------------------------------------


def rref(m: FpMatrix) -> tuple[FpMatrix, int]:
    r, pivots = rref_array(m.entries, m.p)
    return FpMatrix(m.p, r), len(pivots)


def rank(m: FpMatrix) -> int:
    return rank_array(m.entries, m.p)


def solve_kernel(m: FpMatrix) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in row) for row in kernel_array(m.entries, m.p)]


def gl_order(n: int, p: int) -> int:
    """Order of GL_n(F_p)."""
    out = 1
    for i in range(n):
        out *= p**n - p**i
    return out


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n, by the product formula."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    return num // den


@lru_cache(maxsize=None)
def _subspaces(n: int, k: int, p: int) -> tuple[np.ndarray, ...]:
    out = []
    for pivots in itertools.combinations(range(n), k):
        # free entries: row i, column c > pivots[i] with c not a pivot
        free = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            b = np.zeros((k, n), dtype=np.int64)
            for i, pc in enumerate(pivots):
                b[i, pc] = 1
            for (i, c), x in zip(free, values):
                b[i, c] = x
            b.setflags(write=False)
            out.append(b)
    return tuple(out)


def enumerate_subspaces(n: int, k: int, p: int) -> list[np.ndarray]:
    """All k-dimensional subspaces of F_p^n, each as its RREF basis (k x n)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return list(_subspaces(n, k, p))


def enumerate_matrices(rows: int, cols: int, p: int):
    """Every ``rows x cols`` matrix over F_p (use only for tiny shapes)."""
    for values in itertools.product(range(p), repeat=rows * cols):
        yield np.array(values, dtype=np.int64).reshape(rows, cols)
