"""Modules and bimodules over finite-dimensional algebras.

Conventions
-----------
* A :class:`RightModule` over B stores action matrices rho_j for each basis
  element e_j of B, with rho(e_j) rho(e_i) ... following the right-module law
  rho(e_i e_j) = rho(e_j) @ rho(e_i).
* A :class:`Bimodule` over A stores left actions lam_i (an algebra map) and
  right actions rho_j (satisfying the right-module law), commuting with each
  other.
* Tensor products over A are presented by an explicit surjection
  (the coequalizer of the two middle actions on the plain tensor product)
  together with a chosen linear section.
* The flat tensor index convention is (i, j) -> i * dim2 + j everywhere.
"""

from __future__ import annotations

import numpy as np

from ..linalg.matrices import (
    Matrix,
    find_invertible_combination,
    hstack,
    kron,
    linear_combination,
    split_surjection,
    vstack,
)
from .algebras import Algebra


class RightModule:
    """A finite-dimensional right module over an algebra."""

    def __init__(self, algebra: Algebra, rho: list[Matrix], check: bool = True):
        self.algebra = algebra
        self.field = algebra.field
        self.rho = list(rho)
        self.dim = rho[0].nrows if rho else 0
        if check:
            self.check()

    def rho_of(self, vec: Matrix) -> Matrix:
        return linear_combination(self.rho, [vec.array[j, 0] for j in range(len(self.rho))])

    def key(self):
        return ("right", self.algebra.key(), tuple(r.key() for r in self.rho))

    def check(self):
        A = self.algebra
        ident = Matrix.identity(self.field, self.dim)
        if not self.rho_of(A.unit_vector) == ident:
            raise ValueError("right module: unit acts nontrivially")
        for i in range(A.dim):
            for j in range(A.dim):
                prod = A.vector(A.structure[i, j])
                if not self.rho_of(prod) == self.rho[j] @ self.rho[i]:
                    raise ValueError(f"right module law fails at ({i},{j})")
        return True

    def __repr__(self):
        return f"RightModule(dim={self.dim} over dim-{self.algebra.dim} algebra)"


class Bimodule:
    """A finite-dimensional bimodule over a single algebra A."""

    def __init__(
        self,
        algebra: Algebra,
        lam: list[Matrix],
        rho: list[Matrix],
        check: bool = True,
    ):
        self.algebra = algebra
        self.field = algebra.field
        self.lam = list(lam)
        self.rho = list(rho)
        self.dim = lam[0].nrows if lam else 0
        if check:
            self.check()

    def lam_of(self, vec: Matrix) -> Matrix:
        return linear_combination(self.lam, [vec.array[i, 0] for i in range(len(self.lam))])

    def rho_of(self, vec: Matrix) -> Matrix:
        return linear_combination(self.rho, [vec.array[j, 0] for j in range(len(self.rho))])

    def key(self):
        return (
            "bimod",
            self.algebra.key(),
            tuple(m.key() for m in self.lam),
            tuple(m.key() for m in self.rho),
        )

    def is_symmetric(self) -> bool:
        """True when the left and right actions literally coincide."""
        return all(l == r for l, r in zip(self.lam, self.rho))

    def check(self):
        A = self.algebra
        ident = Matrix.identity(self.field, self.dim)
        if not (self.lam_of(A.unit_vector) == ident and self.rho_of(A.unit_vector) == ident):
            raise ValueError("bimodule: unit acts nontrivially")
        for i in range(A.dim):
            for j in range(A.dim):
                prod = A.vector(A.structure[i, j])
                if not self.lam_of(prod) == self.lam[i] @ self.lam[j]:
                    raise ValueError(f"left module law fails at ({i},{j})")
                if not self.rho_of(prod) == self.rho[j] @ self.rho[i]:
                    raise ValueError(f"right module law fails at ({i},{j})")
                if not self.lam[i] @ self.rho[j] == self.rho[j] @ self.lam[i]:
                    raise ValueError(f"actions do not commute at ({i},{j})")
        return True

    def __repr__(self):
        return f"Bimodule(dim={self.dim} over dim-{self.algebra.dim} algebra)"


# -- constructors ----------------------------------------------------------


def regular_bimodule(A: Algebra) -> Bimodule:
    return Bimodule(A, A.left_mults, A.right_mults)


def linear_dual(m: Bimodule) -> Bimodule:
    """The dual bimodule on the same coordinate space: (a f b)(v) = f(b v a).

    With the standard-basis pairing this is lam'(a) = rho(a)^T and
    rho'(b) = lam(b)^T, which makes dualization a strict involution.
    """
    return Bimodule(
        m.algebra,
        [r.T for r in m.rho],
        [l.T for l in m.lam],
        check=False,
    )


def symmetric_bimodule(A: Algebra, rho: list[Matrix]) -> Bimodule:
    """A module over a commutative algebra, viewed with equal left and right
    actions."""
    if not A.is_commutative():
        raise ValueError("symmetric bimodules require a commutative algebra")
    return Bimodule(A, list(rho), list(rho))


def free_right_module(B: Algebra, k: int) -> RightModule:
    """B^k with componentwise right multiplication; coordinates (i, b) with
    flat index i * dim(B) + b."""
    rho = [
        kron(Matrix.identity(B.field, k), r) for r in B.right_mults
    ]
    return RightModule(B, rho, check=False)


# -- hom spaces ------------------------------------------------------------


def intertwiner_space(
    field, dim_src: int, dim_tgt: int, pairs: list[tuple[Matrix, Matrix]]
) -> list[Matrix]:
    """Basis of {f : f X = Y f for all (X, Y) in pairs}.

    Uses row-major vectorization vec(f)[r * dim_src + c] = f[r, c]; the
    constraint f X - Y f = 0 becomes (I (x) X^T - Y (x) I) vec(f) = 0.
    """
    ident_t = Matrix.identity(field, dim_tgt)
    ident_s = Matrix.identity(field, dim_src)
    blocks = [
        kron(ident_t, X.T) - kron(Y, ident_s) for (X, Y) in pairs
    ]
    if blocks:
        big = vstack(*blocks)
    else:
        big = Matrix.zeros(field, 0, dim_tgt * dim_src)
    K = big.kernel_basis()
    out = []
    for j in range(K.ncols):
        out.append(
            Matrix(field, K.array[:, j].reshape(dim_tgt, dim_src).copy(), _raw=True)
        )
    return out


def hom_space(m, n) -> list[Matrix]:
    """Basis of module homomorphisms m -> n (right modules or bimodules)."""
    if isinstance(m, Bimodule):
        pairs = list(zip(m.lam, n.lam)) + list(zip(m.rho, n.rho))
    else:
        pairs = list(zip(m.rho, n.rho))
    return intertwiner_space(m.field, m.dim, n.dim, pairs)


def iso_search(m, n):
    """A verified isomorphism m -> n, or None."""
    if m.dim != n.dim:
        return None
    basis = hom_space(m, n)
    coeffs = find_invertible_combination(basis)
    if coeffs is None:
        return None
    iso = linear_combination(basis, coeffs)
    iso.invert()  # verify
    return iso


# -- tensor products over A ------------------------------------------------


def tensor_over_A(x: Bimodule, y: Bimodule):
    """x (x)_A y with its bimodule structure, projection and section.

    Returns (tensor, proj, sect) where proj: x (x)_k y -> x (x)_A y is the
    coequalizer of the middle actions and sect is a chosen linear section.
    """
    A = x.algebra
    field = x.field
    ix = Matrix.identity(field, x.dim)
    iy = Matrix.identity(field, y.dim)
    diffs = [
        kron(x.rho[j], iy) - kron(ix, y.lam[j]) for j in range(A.dim)
    ]
    if diffs:
        rel = hstack(*diffs)
    else:
        rel = Matrix.zeros(field, x.dim * y.dim, 0)
    proj = rel.T.kernel_basis().T
    sect = split_surjection(proj)
    lam = [proj @ kron(x.lam[i], iy) @ sect for i in range(A.dim)]
    rho = [proj @ kron(ix, y.rho[j]) @ sect for j in range(A.dim)]
    tensor = Bimodule(A, lam, rho, check=False)
    return tensor, proj, sect


def direct_sum_modules(m, n):
    """Direct sum of two right modules or two bimodules."""
    from ..linalg.matrices import direct_sum

    if isinstance(m, Bimodule):
        return Bimodule(
            m.algebra,
            [direct_sum(a, b) for a, b in zip(m.lam, n.lam)],
            [direct_sum(a, b) for a, b in zip(m.rho, n.rho)],
            check=False,
        )
    return RightModule(
        m.algebra,
        [direct_sum(a, b) for a, b in zip(m.rho, n.rho)],
        check=False,
    )


# -- projectivity ----------------------------------------------------------


def free_cover(m: RightModule):
    """The canonical surjection B^{dim m} -> m, (i, b) -> basis_i * b."""
    B = m.algebra
    F = free_right_module(B, m.dim)
    p = Matrix.zeros(m.field, m.dim, m.dim * B.dim)
    for i in range(m.dim):
        for k in range(B.dim):
            p.array[:, i * B.dim + k] = m.rho[k].array[:, i]
    return F, p


def is_projective(m: RightModule) -> bool:
    """True iff the canonical free cover splits B-linearly."""
    if m.dim == 0:
        return True
    F, p = free_cover(m)
    sections = hom_space(m, F)
    if not sections:
        return False
    # solve sum_t x_t (p @ H_t) = id in the coefficients x_t
    cols = [
        Matrix.column(m.field, list((p @ H).array.reshape(-1)))
        for H in sections
    ]
    rhs = Matrix.column(
        m.field, list(Matrix.identity(m.field, m.dim).array.reshape(-1))
    )
    sol = hstack(*cols).solve(rhs)
    return sol is not None


def bimodule_as_right_module(m: Bimodule) -> RightModule:
    return RightModule(m.algebra, m.rho, check=False)


# -- radicals and simple quotients -----------------------------------------


def _trace(mat: Matrix):
    return sum(mat.array[i, i] for i in range(mat.nrows))


def radical_basis(A: Algebra) -> Matrix:
    """Columns span the radical of the trace form of the regular
    representation (= the Jacobson radical for the fields used here, where
    char k = 0 or char k > dim A).  Nilpotency is verified."""
    field = A.field
    gram = Matrix.zeros(field, A.dim, A.dim)
    traces = [_trace(L) for L in A.left_mults]
    for i in range(A.dim):
        for j in range(A.dim):
            val = sum(
                A.structure[i, j, k] * traces[k] for k in range(A.dim)
            )
            gram.array[j, i] = field(val)
    rad = gram.kernel_basis()
    # verify nilpotency: iterate J^{k+1} = J * J^k until it vanishes
    if rad.ncols:
        mults = [
            A.left_mult(Matrix.column(field, list(rad.array[:, j])))
            for j in range(rad.ncols)
        ]
        power = rad
        for _ in range(A.dim + 1):
            if power.ncols == 0:
                break
            power = hstack(*[L @ power for L in mults]).image_basis()
        if power.ncols != 0:
            raise ValueError("trace-form radical is not nilpotent")
    return rad


def quotient_algebra(A: Algebra, subspace: Matrix):
    """A / (ideal spanned by subspace columns); returns (Abar, proj, sect)."""
    field = A.field
    proj = subspace.T.kernel_basis().T
    sect = split_surjection(proj)
    d = proj.nrows
    structure = np.empty((d, d, d), dtype=object)
    for i in range(d):
        for j in range(d):
            a = Matrix(field, sect.array[:, i : i + 1].copy(), _raw=True)
            b = Matrix(field, sect.array[:, j : j + 1].copy(), _raw=True)
            prod = proj @ A.multiply(a, b)
            structure[i, j, :] = [prod.array[k, 0] for k in range(d)]
    unit = proj @ A.unit_vector
    Abar = Algebra(field, [unit.array[k, 0] for k in range(d)], structure.tolist())
    return Abar, proj, sect


def semisimple_quotient(A: Algebra):
    """(Abar, proj, sect) for Abar = A / rad(A); semisimplicity is verified."""
    rad = radical_basis(A)
    Abar, proj, sect = quotient_algebra(A, rad)
    if radical_basis(Abar).ncols != 0:
        raise ValueError("quotient by trace-form radical is not semisimple")
    return Abar, proj, sect


def _cyclic_submodule(m: RightModule, v: Matrix) -> Matrix:
    """Image basis of the submodule generated by column v."""
    span = v
    while True:
        new = hstack(span, *[r @ span for r in m.rho])
        basis = new.image_basis()
        if basis.ncols == span.ncols:
            return basis
        span = basis


def simple_right_modules(A: Algebra) -> list[RightModule]:
    """The simple right A-modules, up to isomorphism.

    Found as minimal cyclic submodules of the regular representation of the
    semisimple quotient; requires an exhaustive vector search, so the ground
    field must be finite with p**dim(A) manageable.
    """
    field = A.field
    p = field.characteristic
    Abar, proj, sect = semisimple_quotient(A)
    if not p or p**Abar.dim > 10**6:
        raise NotImplementedError("simple-module search needs a small finite field")
    reg = RightModule(Abar, Abar.right_mults, check=False)
    found: list[RightModule] = []
    from ..linalg.matrices import _fp_tuples

    submods = {}
    for coords in _fp_tuples(p, Abar.dim):
        if all(c == 0 for c in coords):
            continue
        v = Matrix.column(field, list(coords))
        basis = _cyclic_submodule(reg, v)
        submods.setdefault(basis.ncols, []).append(basis)
    if not submods:
        return []
    # minimal cyclic submodules are simple in a semisimple algebra
    for dim_s in sorted(submods):
        for basis in submods[dim_s]:
            # restrict the action to the submodule
            sec = split_surjection(basis.T).T  # retraction r with r basis = id
            rho = [sec @ r @ basis for r in reg.rho]
            cand = RightModule(Abar, rho, check=False)
            # simple iff every nonzero vector generates everything
            simple = all(
                _cyclic_submodule(cand, Matrix.column(field, list(c))).ncols == cand.dim
                for c in _fp_tuples(p, cand.dim)
                if any(x != 0 for x in c)
            )
            if simple and not any(iso_search(cand, s) for s in found):
                found.append(cand)
    # pull the Abar-action back to an A-action
    out = []
    for s in found:
        rho = [
            s.rho_of(proj @ Matrix.column(field, [1 if t == i else 0 for t in range(A.dim)]))
            for i in range(A.dim)
        ]
        out.append(RightModule(A, rho, check=False))
    return out


def simple_quotients(m: RightModule) -> list[tuple[RightModule, int]]:
    """Simple quotients of m with multiplicities (supports generator tests)."""
    A = m.algebra
    field = m.field
    rad = radical_basis(A)
    # m * rad(A)
    images = [
        m.rho_of(Matrix.column(field, list(rad.array[:, j])))
        for j in range(rad.ncols)
    ]
    if images:
        mrad = hstack(*images).image_basis()
    else:
        mrad = Matrix.zeros(field, m.dim, 0)
    proj = mrad.T.kernel_basis().T
    sect = split_surjection(proj)
    head = RightModule(A, [proj @ r @ sect for r in m.rho], check=False)
    out = []
    for s in simple_right_modules(A):
        homs = hom_space(head, s)
        ends = hom_space(s, s)
        if homs:
            out.append((s, len(homs) // len(ends)))
    return out
