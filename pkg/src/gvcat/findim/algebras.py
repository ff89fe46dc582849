"""Finite-dimensional associative algebras with exact structure constants.

An :class:`Algebra` stores a basis-free presentation: the coordinates of the
unit and the structure tensor C with e_i * e_j = sum_k C[i,j,k] e_k.  All
validation (associativity, unitality) is done by exact matrix identities.
"""

from __future__ import annotations

import numpy as np

from ..linalg.fields import Field
from ..linalg.matrices import Matrix


class Algebra:
    """A finite-dimensional associative unital algebra over an exact field."""

    def __init__(self, field: Field, unit, structure, check: bool = True):
        self.field = field
        self.dim = len(unit)
        if field.characteristic:
            self.unit = np.array([field(u) for u in unit], dtype=np.int64)
            self.structure = (
                np.array(structure, dtype=np.int64) % field.characteristic
            )
        else:
            self.unit = np.array([field(u) for u in unit], dtype=object)
            self.structure = np.array(
                [[[field(v) for v in row] for row in plane] for plane in structure],
                dtype=object,
            )
        if self.structure.shape != (self.dim, self.dim, self.dim):
            raise ValueError("structure tensor has wrong shape")
        # L_i = left multiplication by e_i, R_i = right multiplication by e_i
        self.left_mults = [
            Matrix(field, self.structure[i].T.copy(), _raw=True)
            for i in range(self.dim)
        ]
        self.right_mults = [
            Matrix(field, self.structure[:, j, :].T.copy(), _raw=True)
            for j in range(self.dim)
        ]
        if check:
            self.check()

    # -- basic operations --------------------------------------------------

    def vector(self, coords) -> Matrix:
        return Matrix.column(self.field, [self.field(c) for c in coords])

    @property
    def unit_vector(self) -> Matrix:
        return Matrix.column(self.field, list(self.unit))

    def left_mult(self, vec: Matrix) -> Matrix:
        """Matrix of a * (-) for a with coordinate column vec."""
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for i in range(self.dim):
            out = out + self.left_mults[i].scale(vec.array[i, 0])
        return out

    def right_mult(self, vec: Matrix) -> Matrix:
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for j in range(self.dim):
            out = out + self.right_mults[j].scale(vec.array[j, 0])
        return out

    def multiply(self, a: Matrix, b: Matrix) -> Matrix:
        return self.left_mult(a) @ b

    def multiplication_matrix(self) -> Matrix:
        """The map A (x) A -> A, columns indexed by (i,j) -> i*dim + j."""
        n = self.dim
        cols = Matrix.zeros(self.field, n, n * n)
        for i in range(n):
            for j in range(n):
                cols.array[:, i * n + j] = self.structure[i, j]
        return cols

    def is_commutative(self) -> bool:
        return bool(np.all(self.structure == self.structure.transpose(1, 0, 2)))

    def key(self):
        if self.field.characteristic:
            return (self.field, self.structure.tobytes(), self.unit.tobytes())
        return (self.field, tuple(self.structure.flat), tuple(self.unit.flat))

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field!r})"

    # -- validation --------------------------------------------------------

    def check(self):
        """Verify associativity and two-sided unitality exactly."""
        ident = Matrix.identity(self.field, self.dim)
        u = self.unit_vector
        if not (self.left_mult(u) == ident and self.right_mult(u) == ident):
            raise ValueError("unit axiom fails")
        for i in range(self.dim):
            for j in range(self.dim):
                prod = self.vector(self.structure[i, j])
                if not (self.left_mult(prod) == self.left_mults[i] @ self.left_mults[j]):
                    raise ValueError(f"associativity fails at basis pair ({i},{j})")
        return True


# -- constructors ----------------------------------------------------------


def trivial_algebra(field: Field) -> Algebra:
    """The ground field as a one-dimensional algebra."""
    return Algebra(field, [1], [[[1]]])


def polynomial_quotient(field: Field, rel: list) -> Algebra:
    """F[x]/(f) for the monic polynomial f = x^d - sum_i rel[i] x^i.

    ``rel`` lists the coordinates of x^d in the basis 1, x, ..., x^{d-1}.
    """
    d = len(rel)
    rel = [field(c) for c in rel]
    # powers[k] = coordinates of x^k for k = 0..2d-2
    powers = []
    for k in range(2 * d - 1):
        if k < d:
            v = [field(0)] * d
            v[k] = field.one
        else:
            prev = powers[k - 1]
            # multiply by x: shift, reduce the overflow via rel
            v = [field(0)] + prev[:-1]
            top = prev[-1]
            v = [field(v[i] + top * rel[i]) for i in range(d)]
        powers.append(v)
    structure = [[powers[i + j] for j in range(d)] for i in range(d)]
    unit = [field.one] + [field(0)] * (d - 1)
    return Algebra(field, unit, structure)


def dual_numbers(field: Field) -> Algebra:
    """F[x]/(x^2)."""
    return polynomial_quotient(field, [0, 0])


def cyclic_group_algebra(field: Field, n: int) -> Algebra:
    """The group algebra F[Z/n], basis indexed by group elements."""
    structure = [
        [
            [field.one if k == (i + j) % n else field(0) for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    unit = [field.one] + [field(0)] * (n - 1)
    return Algebra(field, unit, structure)


def upper_triangular(field: Field, n: int = 2) -> Algebra:
    """Upper-triangular n x n matrices; basis E_{rs} for r <= s, ordered
    lexicographically."""
    basis = [(r, s) for r in range(n) for s in range(r, n)]
    index = {b: k for k, b in enumerate(basis)}
    d = len(basis)
    structure = [[[field(0)] * d for _ in range(d)] for _ in range(d)]
    for i, (r1, s1) in enumerate(basis):
        for j, (r2, s2) in enumerate(basis):
            if s1 == r2:
                structure[i][j][index[(r1, s2)]] = field.one
    unit = [field(0)] * d
    for r in range(n):
        unit[index[(r, r)]] = field.one
    return Algebra(field, unit, structure)


def algebra_from_mul_table(field: Field, dim: int, unit, entries) -> Algebra:
    """Build an algebra from sparse multiplication data.

    ``entries`` is an iterable of (i, j, coeffs) with e_i e_j = sum coeffs.
    Pairs not listed multiply to zero.
    """
    structure = [[[field(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, coeffs in entries:
        for k, c in enumerate(coeffs):
            structure[i][j][k] = field(c) if not isinstance(c, str) else field.parse(c)
    return Algebra(field, [field(u) if not isinstance(u, str) else field.parse(u) for u in unit], structure)
