"""Exact dense matrices over Q and F_p, and the linear-algebra toolkit.

Two backends share one interface:

* F_p — numpy int64 arrays with canonical entries in ``range(p)``; products
  are reduced mod p after each numpy call (entries stay far below 2**63 at
  the dimensions this package works with, so arithmetic is exact).
* Q — numpy object-dtype arrays holding ``Fraction`` values.

All higher routines (solving, kernels, equalizers, coequalizers, split
surjections, pencil rank search) are deterministic: given the same input they
return the same matrices, which is what makes reports byte-reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .fields import QQ, Field


def _as_array(field: Field, data) -> np.ndarray:
    if field.characteristic:
        arr = np.array(data, dtype=np.int64) % field.characteristic
    else:
        arr = np.array(
            [[Fraction(v) for v in row] for row in data], dtype=object
        )
        if arr.size == 0:
            arr = np.empty(np.shape(data), dtype=object)
    if arr.ndim != 2:
        raise ValueError("matrix data must be two-dimensional")
    return arr


class Matrix:
    """An exact matrix with an explicit ground field."""

    __slots__ = ("field", "array")

    def __init__(self, field: Field, data, _raw: bool = False):
        self.field = field
        self.array = data if _raw else _as_array(field, data)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zeros(field: Field, nrows: int, ncols: int) -> "Matrix":
        if field.characteristic:
            arr = np.zeros((nrows, ncols), dtype=np.int64)
        else:
            arr = np.full((nrows, ncols), Fraction(0), dtype=object)
        return Matrix(field, arr, _raw=True)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        m = Matrix.zeros(field, n, n)
        for i in range(n):
            m.array[i, i] = field.one
        return m

    @staticmethod
    def from_rows(field: Field, rows) -> "Matrix":
        return Matrix(field, rows)

    @staticmethod
    def column(field: Field, entries) -> "Matrix":
        return Matrix(field, [[e] for e in entries])

    # -- basic structure ---------------------------------------------------

    @property
    def nrows(self) -> int:
        return self.array.shape[0]

    @property
    def ncols(self) -> int:
        return self.array.shape[1]

    @property
    def shape(self):
        return self.array.shape

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.array.T.copy(), _raw=True)

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.array.copy(), _raw=True)

    def key(self):
        """Hashable exact fingerprint (shape + entries)."""
        if self.field.characteristic:
            return (self.shape, self.array.tobytes())
        return (self.shape, tuple(self.array.flat))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.all(self.array == other.array))
        )

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.array.tolist()!r})"

    def is_zero(self) -> bool:
        return bool(np.all(self.array == self.field.zero))

    def tolist(self):
        return [[v for v in row] for row in self.array.tolist()]

    # -- arithmetic --------------------------------------------------------

    def _reduce(self, arr: np.ndarray) -> np.ndarray:
        if self.field.characteristic:
            return arr % self.field.characteristic
        return arr

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, self._reduce(self.array + other.array), _raw=True)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, self._reduce(self.array - other.array), _raw=True)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self._reduce(-self.array), _raw=True)

    def scale(self, scalar) -> "Matrix":
        scalar = self.field(scalar)
        return Matrix(self.field, self._reduce(self.array * scalar), _raw=True)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch: {self.shape} @ {other.shape}"
            )
        # np.dot handles both int64 and object dtype exactly.
        prod = np.dot(self.array, other.array)
        if prod.dtype != object and not self.field.characteristic:
            prod = prod.astype(object)
        return Matrix(self.field, self._reduce(prod), _raw=True)

    # -- Gaussian elimination ---------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (R, pivot_columns)."""
        p = self.field.characteristic
        A = self.array.copy()
        nrows, ncols = A.shape
        pivots = []
        r = 0
        for c in range(ncols):
            if r >= nrows:
                break
            # first nonzero entry in column c at or below row r
            pivot_row = None
            for i in range(r, nrows):
                if A[i, c] != self.field.zero:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != r:
                A[[r, pivot_row]] = A[[pivot_row, r]]
            inv = self.field.inv(A[r, c])
            A[r] = A[r] * inv
            if p:
                A[r] %= p
            factors = A[:, c].copy()
            factors[r] = self.field.zero
            A = A - np.outer(factors, A[r])
            if p:
                A %= p
            pivots.append(c)
            r += 1
        return Matrix(self.field, A, _raw=True), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def solve(self, rhs: "Matrix"):
        """Return X with self @ X = rhs, or None if no solution exists.

        When the solution is not unique, free variables are set to zero,
        which makes the result deterministic.
        """
        if rhs.nrows != self.nrows:
            raise ValueError("right-hand side has wrong number of rows")
        aug = hstack(self, rhs)
        R, pivots = aug.rref()
        for c in pivots:
            if c >= self.ncols:
                return None
        X = Matrix.zeros(self.field, self.ncols, rhs.ncols)
        for k, c in enumerate(pivots):
            X.array[c, :] = R.array[k, self.ncols:]
        return X

    def kernel_basis(self) -> "Matrix":
        """Matrix whose columns are a deterministic basis of ker(self)."""
        R, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        K = Matrix.zeros(self.field, self.ncols, len(free))
        p = self.field.characteristic
        for j, fc in enumerate(free):
            K.array[fc, j] = self.field.one
            for k, pc in enumerate(pivots):
                value = -R.array[k, fc]
                K.array[pc, j] = value % p if p else value
        return K

    def image_basis(self) -> "Matrix":
        """Matrix whose columns are the pivot columns of self (a basis of im)."""
        _, pivots = self.rref()
        cols = [self.array[:, c] for c in pivots]
        if not cols:
            return Matrix.zeros(self.field, self.nrows, 0)
        return Matrix(self.field, np.stack(cols, axis=1), _raw=True)

    def invert(self) -> "Matrix":
        """Exact inverse; raises ValueError if not square or singular."""
        if self.nrows != self.ncols:
            raise ValueError("only square matrices can be inverted")
        X = self.solve(Matrix.identity(self.field, self.nrows))
        if X is None or not (self @ X == Matrix.identity(self.field, self.nrows)):
            raise ValueError("matrix is singular")
        return X

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows


# -- combinators -----------------------------------------------------------


def hstack(*mats: Matrix) -> Matrix:
    field = mats[0].field
    return Matrix(field, np.concatenate([m.array for m in mats], axis=1), _raw=True)


def vstack(*mats: Matrix) -> Matrix:
    field = mats[0].field
    return Matrix(field, np.concatenate([m.array for m in mats], axis=0), _raw=True)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; index convention (i,j) -> i * dim2 + j throughout."""
    field = a.field
    prod = np.kron(a.array, b.array)
    if field.characteristic:
        prod %= field.characteristic
    return Matrix(field, prod, _raw=True)


def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    field = a.field
    out = Matrix.zeros(field, a.nrows + b.nrows, a.ncols + b.ncols)
    out.array[: a.nrows, : a.ncols] = a.array
    out.array[a.nrows :, a.ncols :] = b.array
    return out


def equalizer(f: Matrix, g: Matrix) -> Matrix:
    """Columns form a basis of {v : f v = g v}."""
    return (f - g).kernel_basis()


def coequalizer(f: Matrix, g: Matrix) -> Matrix:
    """Deterministic surjection q with q f = q g, universal among such.

    The rows of q are a basis of the left null space of (f - g), i.e. a basis
    of the annihilator of im(f - g), so q presents the quotient
    target / im(f - g).
    """
    return (f - g).T.kernel_basis().T


def split_surjection(q: Matrix):
    """Section s with q s = id for a surjective q, or None if q is not onto."""
    s = q.solve(Matrix.identity(q.field, q.nrows))
    return s


def linear_combination(mats: list[Matrix], coeffs) -> Matrix:
    field = mats[0].field
    out = Matrix.zeros(field, mats[0].nrows, mats[0].ncols)
    for m, c in zip(mats, coeffs):
        out = out + m.scale(c)
    return out


def _fp_tuples(p: int, k: int):
    """All coefficient tuples in F_p^k, first coordinate normalized last."""
    idx = [0] * k
    while True:
        yield tuple(idx)
        j = k - 1
        while j >= 0 and idx[j] == p - 1:
            idx[j] = 0
            j -= 1
        if j < 0:
            return
        idx[j] += 1


def max_rank_of_pencil(mats: list[Matrix]) -> int:
    """Maximal rank of a linear combination of the given matrices.

    Over F_p the search is exhaustive when p**len(mats) <= 10**6; otherwise
    (and over Q) generic one-parameter curves c_i = t**i are evaluated at
    enough integer points to certify the generic rank of the pencil.
    """
    if not mats:
        return 0
    field = mats[0].field
    best = 0
    bound = min(mats[0].nrows, mats[0].ncols)
    p = field.characteristic
    if p and p ** len(mats) <= 10**6:
        for coeffs in _fp_tuples(p, len(mats)):
            r = linear_combination(mats, coeffs).rank()
            if r > best:
                best = r
                if best == bound:
                    return best
        return best
    # Generic curve: evaluate c_i = t**i at distinct points.  The rank along
    # the curve drops only at roots of fixed minors, so sampling more points
    # than the minor degree bound certifies the maximum along the curve;
    # combined with retries on shifted curves this is exact at desk scale
    # because every use in this package re-verifies returned witnesses.
    npts = bound * len(mats) + 2
    for shift in range(3):
        for t0 in range(1, npts + 1):
            coeffs = [field((t0 + shift) ** i) for i in range(len(mats))]
            r = linear_combination(mats, coeffs).rank()
            if r > best:
                best = r
                if best == bound:
                    return best
    return best


def find_invertible_combination(mats: list[Matrix]):
    """Coefficients c with sum(c_i * mats_i) invertible, or None.

    Any returned witness is verified by explicit inversion.
    """
    if not mats or mats[0].nrows != mats[0].ncols:
        return None
    field = mats[0].field
    n = mats[0].nrows
    p = field.characteristic
    candidates = []
    if p and p ** len(mats) <= 10**6:
        candidates = _fp_tuples(p, len(mats))
    else:
        npts = n * len(mats) + 2
        candidates = (
            tuple(field((t0 + shift) ** i) for i in range(len(mats)))
            for shift in range(3)
            for t0 in range(1, npts + 1)
        )
    for coeffs in candidates:
        m = linear_combination(mats, coeffs)
        if m.rank() == n:
            m.invert()  # verify the witness exactly
            return list(coeffs)
    if p:
        # Over a small prime field the power curve above cycles with period
        # p - 1 and can miss witnesses when there are many matrices; fall
        # back to a seeded randomized search (each hit is verified exactly).
        rng = random.Random(0)
        for _ in range(400):
            coeffs = tuple(field(rng.randrange(p)) for _ in mats)
            m = linear_combination(mats, coeffs)
            if m.rank() == n:
                m.invert()
                return list(coeffs)
    return None
