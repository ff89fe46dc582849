"""mod-B as a module category over modules of a commutative algebra.

Given the base category of modules over a commutative algebra A and a
finite-dimensional algebra B together with a unital embedding iota: A -> Z(B)
into its center, the category of right B-modules is a left module category
over the base: every B-module restricts along iota to an A-module, the action
c |> m is the relative tensor product over A with B acting on the second
factor, and its right adjoint H_c(n) carries the B-action transported through
the right distributor.  The internal Hom iHom(m, n) is the space of B-module
maps m -> n with A acting by post-composition.
"""

from __future__ import annotations

from ..findim.algebras import Algebra
from ..findim.modules import (
    RightModule,
    free_right_module,
    intertwiner_space,
    is_projective,
    symmetric_bimodule,
)
from ..core.base import Mor, Obj
from ..core.bimod import ModCommCategory
from ..linalg.matrices import Matrix, hstack, linear_combination
from .base import ModuleCategory


class BModPayload:
    """A right B-module presented on the carrier of its underlying base
    object, together with the list of B-action matrices."""

    __slots__ = ("cobj", "rho")

    def __init__(self, cobj: Obj, rho: list[Matrix]):
        self.cobj = cobj
        self.rho = list(rho)


class ModB(ModuleCategory):
    """Right B-modules as a left module category over ModComm(A)."""

    def __init__(self, cat: ModCommCategory, B: Algebra, iota: Matrix):
        super().__init__(cat)
        A = cat.algebra
        if B.field is not A.field and B.field.key() != A.field.key():
            raise ValueError("B must live over the same field as A")
        if iota.shape != (B.dim, A.dim):
            raise ValueError("iota must be a matrix A -> B")
        self.B = B
        self.iota = iota
        self._iota_vecs = [
            Matrix(self.field, iota.array[:, i : i + 1].copy(), _raw=True)
            for i in range(A.dim)
        ]
        self._check_embedding(A)
        # B itself as an object of the base category, acting by (central)
        # multiplication with iota(a)
        self.b_cobj = cat.module_obj(
            symmetric_bimodule(A, [B.right_mult(v) for v in self._iota_vecs])
        )

    def _check_embedding(self, A: Algebra):
        B = self.B
        if not self.iota @ A.unit_vector == B.unit_vector:
            raise ValueError("iota does not preserve the unit")
        for i in range(A.dim):
            vi = self._iota_vecs[i]
            if not B.left_mult(vi) == B.right_mult(vi):
                raise ValueError("the image of iota is not central in B")
            for j in range(A.dim):
                prod = self.iota @ A.vector(A.structure[i, j])
                if not B.multiply(vi, self._iota_vecs[j]) == prod:
                    raise ValueError("iota is not multiplicative")

    # -- object constructors ----------------------------------------------

    def module_obj(self, rho: list[Matrix]) -> Obj:
        """The module object of a right B-module given by action matrices."""
        rm = RightModule(self.B, rho)  # validates the module law
        rest = [rm.rho_of(v) for v in self._iota_vecs]
        cobj = self.cat.module_obj(symmetric_bimodule(self.cat.algebra, rest))
        return self.mobj(BModPayload(cobj, rho))

    def module_from_right(self, rm: RightModule) -> Obj:
        return self.module_obj(rm.rho)

    def b_object(self) -> Obj:
        """B as a right module over itself."""
        return self.module_obj(self.B.right_mults)

    def free_object(self, k: int) -> Obj:
        return self.module_from_right(free_right_module(self.B, k))

    def right_module(self, m: Obj) -> RightModule:
        return RightModule(self.B, m.payload.rho, check=False)

    # -- payload plumbing --------------------------------------------------

    def _mpayload_key(self, payload: BModPayload):
        return ("bm", payload.cobj.key, tuple(r.key() for r in payload.rho))

    def _mpayload_dim(self, payload: BModPayload) -> int:
        return payload.cobj.dim

    def underlying(self, m: Obj) -> Obj:
        return m.payload.cobj

    def _mhom_basis(self, m: Obj, n: Obj) -> list[Matrix]:
        return intertwiner_space(
            self.field, m.dim, n.dim, list(zip(m.payload.rho, n.payload.rho))
        )

    # -- actions -----------------------------------------------------------

    def _act_payload(self, c: Obj, m: Obj):
        C = self.cat
        um = self.underlying(m)
        t = C.tensor(c, um)
        proj = C.tensor_proj(c, um)
        sect = C.tensor_sect(c, um)
        ic = Matrix.identity(self.field, c.dim)
        from ..linalg.matrices import kron

        rho = [proj @ kron(ic, r) @ sect for r in m.payload.rho]
        return BModPayload(t, rho)

    def _action_cmor(self, m: Obj) -> Mor:
        """The B-action as a base morphism U(m) (x) B -> U(m)."""
        cached = self._cached("actC", m.key)
        if cached is not None:
            return cached
        C = self.cat
        um = self.underlying(m)
        bo = self.b_cobj
        d_b = self.B.dim
        flat = Matrix.zeros(self.field, um.dim, um.dim * d_b)
        for v in range(um.dim):
            for j in range(d_b):
                flat.array[:, v * d_b + j] = m.payload.rho[j].array[:, v]
        out = C.mor(C.tensor(um, bo), um, flat @ C.tensor_sect(um, bo))
        return self._store("actC", m.key, out)

    def _H_payload(self, c: Obj, n: Obj):
        C = self.cat
        un = self.underlying(n)
        gc = C.G(c)
        w = C.cotensor(gc, un)
        bo = self.b_cobj
        # transport the action through the right distributor:
        # (Gc (#) n) (x) B -> Gc (#) (n (x) B) -> Gc (#) n
        full = (
            C.cotensor_mor(C.id(gc), self._action_cmor(n)) @ C.dist_r(gc, un, bo)
        ).mat @ C.tensor_proj(w, bo)
        d_b = self.B.dim
        rho = []
        for j in range(d_b):
            ins = Matrix.zeros(self.field, w.dim * d_b, w.dim)
            for i in range(w.dim):
                ins.array[i * d_b + j, i] = self.field.one
            rho.append(full @ ins)
        return BModPayload(w, rho)

    # -- internal Hom ------------------------------------------------------

    def _ihom_data(self, m: Obj, n: Obj):
        cached = self._cached("ihd", m.key, n.key)
        if cached is not None:
            return cached
        A = self.cat.algebra
        basis = self.mhom_basis(m, n)
        if basis:
            stack = hstack(
                *[
                    Matrix(
                        self.field, h.array.reshape(-1, 1).copy(), _raw=True
                    )
                    for h in basis
                ]
            )
        else:
            stack = Matrix.zeros(self.field, n.dim * m.dim, 0)
        rest = []
        for v in self._iota_vecs:
            post = linear_combination(n.payload.rho, [v.array[j, 0] for j in range(self.B.dim)])
            rhs = (
                hstack(
                    *[
                        Matrix(
                            self.field,
                            (post @ h).array.reshape(-1, 1).copy(),
                            _raw=True,
                        )
                        for h in basis
                    ]
                )
                if basis
                else Matrix.zeros(self.field, n.dim * m.dim, 0)
            )
            sol = stack.solve(rhs)
            if sol is None:
                raise ValueError("internal Hom is not closed under the A-action")
            rest.append(sol)
        cobj = self.cat.module_obj(symmetric_bimodule(A, rest))
        return self._store("ihd", m.key, n.key, (basis, stack, cobj))

    def _iHom_obj(self, m: Obj, n: Obj) -> Obj:
        return self._ihom_data(m, n)[2]

    def hom_coords(self, m: Obj, n: Obj, mat: Matrix) -> Matrix:
        """Coordinates of a B-module map m -> n in the internal-Hom basis."""
        basis, stack, _ = self._ihom_data(m, n)
        sol = stack.solve(Matrix(self.field, mat.array.reshape(-1, 1).copy(), _raw=True))
        if sol is None:
            raise ValueError("matrix is not a B-module map")
        return sol

    def hom_matrix(self, m: Obj, n: Obj, coords: Matrix) -> Matrix:
        basis, _, _ = self._ihom_data(m, n)
        return linear_combination(basis, [coords.array[t, 0] for t in range(len(basis))])

    def _iHom_adj(self, c: Obj, m: Obj, n: Obj, f: Mor) -> Mor:
        C = self.cat
        basis, stack, cobj = self._ihom_data(m, n)
        um = self.underlying(m)
        flat = f.mat @ C.tensor_proj(c, um)
        cols = []
        for v in range(c.dim):
            block = flat.array[:, v * um.dim : (v + 1) * um.dim]
            cols.append(Matrix(self.field, block.reshape(-1, 1).copy(), _raw=True))
        rhs = hstack(*cols) if cols else Matrix.zeros(self.field, n.dim * um.dim, 0)
        sol = stack.solve(rhs)
        if sol is None:
            raise ValueError("morphism is not B-linear in the module argument")
        return C.mor(c, cobj, sol)

    def _iHom_adj_inv(self, c: Obj, m: Obj, n: Obj, g: Mor) -> Mor:
        C = self.cat
        basis, _, _ = self._ihom_data(m, n)
        um = self.underlying(m)
        flat = Matrix.zeros(self.field, n.dim, c.dim * um.dim)
        for v in range(c.dim):
            mv = linear_combination(
                basis, [g.mat.array[t, v] for t in range(len(basis))]
            ) if basis else Matrix.zeros(self.field, n.dim, um.dim)
            flat.array[:, v * um.dim : (v + 1) * um.dim] = mv.array
        return self.mor(self.act(c, m), n, flat @ C.tensor_sect(c, um))

    # -- admissibility -----------------------------------------------------

    def is_admissible(self, m: Obj) -> bool:
        """Admissible module objects of mod-B are the projective B-modules."""
        return is_projective(self.right_module(m))
