"""Bimodule categories Bimod(A) and their commutative restriction ModComm(A).

Objects are A-bimodule presentations; the tensor product is the relative
tensor over A presented by an explicit coequalizer projection; the unit is
the regular bimodule; the dualizing object is its linear dual.  The duality
functor keeps the coordinate space and swap-transposes the actions, which
makes it a strict involution on presentations.
"""

from __future__ import annotations

import numpy as np

from ..findim.algebras import Algebra
from ..findim.modules import (
    Bimodule,
    RightModule,
    hom_space,
    linear_dual,
    regular_bimodule,
    symmetric_bimodule,
    tensor_over_A,
)
from ..linalg.matrices import Matrix, kron
from .base import GVCategory, Mor, Obj


class BimodCategory(GVCategory):
    """Bimod(A) for a finite-dimensional algebra A."""

    def __init__(self, algebra: Algebra):
        super().__init__(algebra.field)
        self.algebra = algebra

    # -- payload plumbing --------------------------------------------------

    def _payload_key(self, m: Bimodule):
        return m.key()

    def _payload_dim(self, m: Bimodule) -> int:
        return m.dim

    def _unit_payload(self):
        return regular_bimodule(self.algebra)

    def _hom_basis(self, x: Obj, y: Obj):
        return hom_space(x.payload, y.payload)

    # -- tensor product ----------------------------------------------------

    def _tensor_data(self, x: Obj, y: Obj):
        cached = self._cached("tdata", x.key, y.key)
        if cached is None:
            cached = self._store("tdata", x.key, y.key, tensor_over_A(x.payload, y.payload))
        return cached

    def _tensor_payload(self, x: Obj, y: Obj):
        return self._tensor_data(x, y)[0]

    def _tensor_proj_mat(self, x: Obj, y: Obj) -> Matrix:
        return self._tensor_data(x, y)[1]

    def _tensor_sect_mat(self, x: Obj, y: Obj) -> Matrix:
        return self._tensor_data(x, y)[2]

    def _associator_mat(self, x: Obj, y: Obj, z: Obj) -> Matrix:
        """Induced by the flat associativity of the plain tensor index."""
        xy = self.tensor(x, y)
        yz = self.tensor(y, z)
        ix = Matrix.identity(self.field, x.dim)
        iz = Matrix.identity(self.field, z.dim)
        return (
            self.tensor_proj(x, yz)
            @ kron(ix, self.tensor_proj(y, z))
            @ kron(self.tensor_sect(x, y), iz)
            @ self.tensor_sect(xy, z)
        )

    def _associator_inv_mat(self, x: Obj, y: Obj, z: Obj) -> Matrix:
        """The same flat reassociation read in the other direction."""
        xy = self.tensor(x, y)
        yz = self.tensor(y, z)
        ix = Matrix.identity(self.field, x.dim)
        iz = Matrix.identity(self.field, z.dim)
        return (
            self.tensor_proj(xy, z)
            @ kron(self.tensor_proj(x, y), iz)
            @ kron(ix, self.tensor_sect(y, z))
            @ self.tensor_sect(x, yz)
        )

    def _unitor_l_mat(self, x: Obj) -> Matrix:
        m = x.payload
        dA = self.algebra.dim
        # action map A (x)_k x -> x, column (j, w) -> lam_j[:, w]
        stacked = np.stack([l.array for l in m.lam], axis=1)  # (v, j, w)
        act = Matrix(self.field, stacked.reshape(m.dim, dA * m.dim).copy(), _raw=True)
        return act @ self.tensor_sect(self.unit(), x)

    def _unitor_r_mat(self, x: Obj) -> Matrix:
        m = x.payload
        dA = self.algebra.dim
        # action map x (x)_k A -> x, column (w, j) -> rho_j[:, w]
        stacked = np.stack([r.array for r in m.rho], axis=2)  # (v, w, j)
        act = Matrix(self.field, stacked.reshape(m.dim, m.dim * dA).copy(), _raw=True)
        return act @ self.tensor_sect(x, self.unit())

    # -- duality -----------------------------------------------------------

    def _G_payload(self, x: Obj):
        return linear_dual(x.payload)

    def _G_mat(self, f: Mor) -> Matrix:
        return f.mat.T

    def _pi_mat(self, x: Obj, y: Obj, phi: Matrix) -> Matrix:
        """pi(phi)(xi)(v) = phi(xi (x) v)(1_A) under the standard pairing."""
        u1 = self.algebra.unit_vector
        row = (u1.T @ phi @ self.tensor_proj(x, y)).array  # 1 x (dx*dy)
        return Matrix(
            self.field, row.reshape(x.dim, y.dim).T.copy(), _raw=True
        )

    def _pi_inv_mat(self, x: Obj, y: Obj, F: Matrix) -> Matrix:
        """pi_inv(F)(xi (x) v)(a) = <F xi, rho_y(a) v>."""
        m_y = y.payload
        rows = [
            (F.T @ m_y.rho[j]).array.reshape(-1)
            for j in range(self.algebra.dim)
        ]
        phi_k = Matrix(self.field, np.stack(rows, axis=0).copy(), _raw=True)
        return phi_k @ self.tensor_sect(x, y)

    # -- object constructors ----------------------------------------------

    def bimodule_obj(self, m: Bimodule) -> Obj:
        if m.algebra is not self.algebra and m.algebra.key() != self.algebra.key():
            raise ValueError("bimodule lives over a different algebra")
        return self.obj(m)


class ModCommCategory(BimodCategory):
    """ModComm(A): modules over a commutative algebra, realized as the full
    subcategory of symmetric bimodules (equal left and right actions).

    The tensor product, duality and pi of Bimod(A) all preserve symmetry, so
    the entire derived layer restricts without change; object constructors
    enforce symmetry.
    """

    def __init__(self, algebra: Algebra):
        if not algebra.is_commutative():
            raise ValueError("ModComm requires a commutative algebra")
        super().__init__(algebra)

    def module_obj(self, m) -> Obj:
        if isinstance(m, RightModule):
            m = symmetric_bimodule(self.algebra, m.rho)
        if not m.is_symmetric():
            raise ValueError("ModComm objects must have symmetric actions")
        return self.obj(m)
