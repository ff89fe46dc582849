"""The regular module: the base category acting on itself.

Module objects wrap base objects one-to-one.  The right-exact action is the
first tensor product, its right adjoint is H_c(n) = G(c) (#) n, and the
internal Hom is iHom(c, d) = d (#) G(c) with the first side adjunction as its
defining bijection.
"""

from __future__ import annotations

from ..core.base import Mor, Obj
from ..linalg.matrices import Matrix
from .base import ModuleCategory


class RegularModule(ModuleCategory):
    """The base category as a left module category over itself."""

    # -- payload plumbing: payloads are base objects -----------------------

    def _mpayload_key(self, payload: Obj):
        return ("reg", payload.key)

    def _mpayload_dim(self, payload: Obj) -> int:
        return payload.dim

    def underlying(self, m: Obj) -> Obj:
        return m.payload

    def wrap(self, c: Obj) -> Obj:
        """The module object carried by the base object c."""
        return self.mobj(c)

    def wrap_mor(self, f: Mor) -> Mor:
        return self.mor(self.wrap(f.src), self.wrap(f.dst), f.mat)

    def unwrap_mor(self, g: Mor) -> Mor:
        return self.cat.mor(self.underlying(g.src), self.underlying(g.dst), g.mat)

    # -- primitives --------------------------------------------------------

    def _mhom_basis(self, m: Obj, n: Obj) -> list[Matrix]:
        return self.cat.hom_basis(self.underlying(m), self.underlying(n))

    def _act_payload(self, c: Obj, m: Obj):
        return self.cat.tensor(c, self.underlying(m))

    def _H_payload(self, c: Obj, n: Obj):
        return self.cat.cotensor(self.cat.G(c), self.underlying(n))

    def _iHom_obj(self, m: Obj, n: Obj) -> Obj:
        return self.cat.cotensor(self.underlying(n), self.cat.G(self.underlying(m)))

    def _iHom_adj(self, c: Obj, m: Obj, n: Obj, f: Mor) -> Mor:
        C = self.cat
        um, un = self.underlying(m), self.underlying(n)
        out = C.adj1(c, um, un, C.mor(C.tensor(c, um), un, f.mat))
        return C.mor(c, self.iHom(m, n), out.mat)

    def _iHom_adj_inv(self, c: Obj, m: Obj, n: Obj, g: Mor) -> Mor:
        C = self.cat
        um, un = self.underlying(m), self.underlying(n)
        out = C.adj1_inv(c, um, un, C.mor(c, C.cotensor(un, C.G(um)), g.mat))
        return self.mor(self.act(c, m), n, out.mat)

    def is_admissible(self, m: Obj) -> bool:
        from .admissible import is_admissible_otimes

        return is_admissible_otimes(self.cat, self.underlying(m))
