"""Left module categories over a category with a dualizing object.

A module category M over the base category C carries two actions:

* the right-exact action c |> m ("act"), whose underlying space is always the
  plain tensor carrier C.tensor(c, U(m)) of the base category, where U(m) is
  the underlying C-object of the module object m;
* the left-exact action c |>> m := H_{Gc}(m) ("act_l"), defined through the
  chosen right adjoint H_c of c |> -, with underlying carrier G(c) (#) U(m).

Fixing these carriers once and for all makes every structural comparison an
exact matrix equality: the action constraints are the associator/unitor of
the base category, and the adjunction

    Hom_M(c |> m, n)  ~  Hom_M(m, H_c(n))

is computed by the second side adjunction of the base category, restricted to
module morphisms.  The derived layer below produces, uniformly for every
instance, the evaluation/coevaluation of that adjunction, the two module
distributors, the internal Hom and coHom with their adjunctions, and the
algebra/coalgebra structure they carry.

Notation in docstrings: |> is the right-exact action, |>> the left-exact one,
(x) and (#) the two tensor products of the base category, K the dualizing
object, U the underlying-object map.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

from ..core.base import Mor, Obj
from ..linalg.matrices import Matrix, kron


class ModuleCategory(ABC):
    """Base class for concrete left module categories over a GVCategory.

    Module objects are interned :class:`Obj` instances whose ``cat`` is the
    module category; module morphisms are :class:`Mor` between them.  The
    underlying C-object of a module object is exposed by :meth:`underlying`.
    """

    def __init__(self, cat):
        self.cat = cat
        self.field = cat.field
        self._objects: dict = {}
        self._memo: dict = {}

    # ---------------------------------------------------------------- utils

    def mobj(self, payload) -> Obj:
        key = self._mpayload_key(payload)
        cached = self._objects.get(key)
        if cached is None:
            cached = Obj(self, payload, key, self._mpayload_dim(payload))
            self._objects[key] = cached
        return cached

    def _cached(self, tag, *keys):
        return self._memo.get((tag,) + keys)

    def _store(self, tag, *keys_and_value):
        *keys, value = keys_and_value
        self._memo[(tag,) + tuple(keys)] = value
        return value

    def id(self, m: Obj) -> Mor:
        return Mor(self, m, m, Matrix.identity(self.field, m.dim))

    def mor(self, src: Obj, dst: Obj, mat: Matrix) -> Mor:
        return Mor(self, src, dst, mat)

    # ------------------------------------------------------- primitives

    @abstractmethod
    def _mpayload_key(self, payload):
        ...

    @abstractmethod
    def _mpayload_dim(self, payload) -> int:
        ...

    @abstractmethod
    def underlying(self, m: Obj) -> Obj:
        """The underlying C-object of a module object."""

    @abstractmethod
    def _mhom_basis(self, m: Obj, n: Obj) -> list[Matrix]:
        ...

    @abstractmethod
    def _act_payload(self, c: Obj, m: Obj):
        """Payload of c |> m; its carrier must be C.tensor(c, U(m))."""

    @abstractmethod
    def _H_payload(self, c: Obj, n: Obj):
        """Payload of H_c(n); its carrier must be C.cotensor(G c, U(n))."""

    @abstractmethod
    def _iHom_obj(self, m: Obj, n: Obj) -> Obj:
        """The internal-Hom object iHom(m, n) of the base category."""

    @abstractmethod
    def _iHom_adj(self, c: Obj, m: Obj, n: Obj, f: Mor) -> Mor:
        """Hom_M(c |> m, n) -> Hom_C(c, iHom(m, n)); f is a module morphism."""

    @abstractmethod
    def _iHom_adj_inv(self, c: Obj, m: Obj, n: Obj, g: Mor) -> Mor:
        ...

    @abstractmethod
    def is_admissible(self, m: Obj) -> bool:
        """Whether iHom(m, -) is a strong module functor with a right adjoint."""

    # ------------------------------------------------------------ hom spaces

    def mhom_basis(self, m: Obj, n: Obj) -> list[Matrix]:
        cached = self._cached("mhom", m.key, n.key)
        if cached is None:
            cached = self._store("mhom", m.key, n.key, self._mhom_basis(m, n))
        return cached

    # --------------------------------------------------- the right-exact action

    def act(self, c: Obj, m: Obj) -> Obj:
        cached = self._cached("act", c.key, m.key)
        if cached is None:
            cached = self._store("act", c.key, m.key, self.mobj(self._act_payload(c, m)))
        return cached

    def act_mor(self, f: Mor, g: Mor) -> Mor:
        """f |> g for a base morphism f and a module morphism g."""
        C = self.cat
        src = self.act(f.src, g.src)
        dst = self.act(f.dst, g.dst)
        mat = (
            C.tensor_proj(f.dst, self.underlying(g.dst))
            @ kron(f.mat, g.mat)
            @ C.tensor_sect(f.src, self.underlying(g.src))
        )
        return Mor(self, src, dst, mat)

    def act_assoc(self, c: Obj, d: Obj, m: Obj) -> Mor:
        """(c (x) d) |> m -> c |> (d |> m); the base associator on carriers."""
        C = self.cat
        src = self.act(C.tensor(c, d), m)
        dst = self.act(c, self.act(d, m))
        return Mor(self, src, dst, C.associator(c, d, self.underlying(m)).mat)

    def act_assoc_inv(self, c: Obj, d: Obj, m: Obj) -> Mor:
        C = self.cat
        src = self.act(c, self.act(d, m))
        dst = self.act(C.tensor(c, d), m)
        return Mor(self, src, dst, C.associator_inv(c, d, self.underlying(m)).mat)

    def act_unitor(self, m: Obj) -> Mor:
        """1 |> m -> m; the base left unitor on carriers."""
        src = self.act(self.cat.unit(), m)
        return Mor(self, src, m, self.cat.unitor_l(self.underlying(m)).mat)

    # ------------------------------------- the adjoint (left-exact) action

    def H(self, c: Obj, n: Obj) -> Obj:
        """The chosen right adjoint value H_c(n)."""
        cached = self._cached("H", c.key, n.key)
        if cached is None:
            cached = self._store("H", c.key, n.key, self.mobj(self._H_payload(c, n)))
        return cached

    def act_l(self, c: Obj, m: Obj) -> Obj:
        """c |>> m := H_{Gc}(m)."""
        return self.H(self.cat.G(c), m)

    def adjH(self, c: Obj, m: Obj, n: Obj, f: Mor) -> Mor:
        """Hom_M(c |> m, n) -> Hom_M(m, H_c(n)), via the base side adjunction."""
        C = self.cat
        um, un = self.underlying(m), self.underlying(n)
        base = C.adj2(c, um, un, C.mor(C.tensor(c, um), un, f.mat))
        return Mor(self, m, self.H(c, n), base.mat)

    def adjH_inv(self, c: Obj, m: Obj, n: Obj, g: Mor) -> Mor:
        C = self.cat
        um, un = self.underlying(m), self.underlying(n)
        base = C.adj2_inv(
            c, um, un, C.mor(um, C.cotensor(C.G(c), un), g.mat)
        )
        return Mor(self, self.act(c, m), n, base.mat)

    def counit_H(self, c: Obj, n: Obj) -> Mor:
        """c |> H_c(n) -> n, the counit of the action adjunction."""
        cached = self._cached("cuH", c.key, n.key)
        if cached is None:
            h = self.H(c, n)
            cached = self._store("cuH", c.key, n.key, self.adjH_inv(c, h, n, self.id(h)))
        return cached

    def unit_H(self, c: Obj, m: Obj) -> Mor:
        """m -> H_c(c |> m), the unit of the action adjunction."""
        cached = self._cached("unH", c.key, m.key)
        if cached is None:
            cm = self.act(c, m)
            cached = self._store("unH", c.key, m.key, self.adjH(c, m, cm, self.id(cm)))
        return cached

    def H_mor(self, c: Obj, g: Mor) -> Mor:
        """H_c(g): H_c(n) -> H_c(n') for a module morphism g: n -> n'."""
        return self.adjH(c, self.H(c, g.src), g.dst, g @ self.counit_H(c, g.src))

    def H_cmor(self, phi: Mor, n: Obj) -> Mor:
        """H is contravariant in the subscript: phi: c -> d gives
        H_d(n) -> H_c(n)."""
        c, d = phi.src, phi.dst
        hd = self.H(d, n)
        return self.adjH(c, hd, n, self.counit_H(d, n) @ self.act_mor(phi, self.id(hd)))

    def act_l_mor(self, c: Obj, g: Mor) -> Mor:
        """c |>> g."""
        return self.H_mor(self.cat.G(c), g)

    def act_l_cmor(self, phi: Mor, m: Obj) -> Mor:
        """phi |>> m: c |>> m -> d |>> m for a base morphism phi: c -> d."""
        return self.H_cmor(self.cat.G_mor(phi), m)

    def ev_cm(self, c: Obj, m: Obj) -> Mor:
        """Gc |> (c |>> m) -> m."""
        return self.counit_H(self.cat.G(c), m)

    def coev_cm(self, c: Obj, m: Obj) -> Mor:
        """m -> c |>> (Gc |> m)."""
        return self.unit_H(self.cat.G(c), m)

    def act_l_assoc(self, c: Obj, d: Obj, m: Obj) -> Mor:
        """(c (#) d) |>> m -> c |>> (d |>> m), from composing the adjoints."""
        cached = self._cached("alA", c.key, d.key, m.key)
        if cached is not None:
            return cached
        C = self.cat
        cd = C.cotensor(c, d)
        gd, gc = C.G(d), C.G(c)
        src = self.act_l(cd, m)
        # counit at G(c (#) d) = Gd (x) Gc, reassociated to two |> steps
        g1 = self.counit_H(C.G(cd), m) @ self.act_assoc_inv(gd, gc, src)
        h1 = self.adjH(gd, self.act(gc, src), m, g1)
        out = self.adjH(gc, src, self.H(gd, m), h1)
        return self._store("alA", c.key, d.key, m.key, out)

    def act_l_assoc_inv(self, c: Obj, d: Obj, m: Obj) -> Mor:
        cached = self._cached("alAi", c.key, d.key, m.key)
        if cached is None:
            cached = self._store("alAi", c.key, d.key, m.key, self.act_l_assoc(c, d, m).inv())
        return cached

    def act_l_unitor(self, m: Obj) -> Mor:
        """K |>> m -> m; inverse of the unit of the adjunction at c = 1."""
        cached = self._cached("alU", m.key)
        if cached is None:
            one = self.cat.unit()
            to_h = self.adjH(one, m, m, self.act_unitor(m))  # m -> H_1(m) = K |>> m
            cached = self._store("alU", m.key, to_h.inv())
        return cached

    # ---------------------------------------------------------- distributors

    def mdist_r(self, x: Obj, y: Obj, m: Obj) -> Mor:
        """(x (#) y) |> m -> x |>> (y |> m), the right module distributor.

        This is the adjoint transcription of the conjugated oplax structure
        of the strong module functor c -> c |> m.
        """
        cached = self._cached("mdR", x.key, y.key, m.key)
        if cached is not None:
            return cached
        C = self.cat
        xy = C.cotensor(x, y)
        e = C.counit_e(x, y)  # Gx (x) (x (#) y) -> y in the base category
        src = self.act(xy, m)
        g = self.act_mor(e, self.id(m)) @ self.act_assoc_inv(C.G(x), xy, m)
        out = self.adjH(C.G(x), src, self.act(y, m), g)
        return self._store("mdR", x.key, y.key, m.key, out)

    def mdist_l(self, x: Obj, y: Obj, m: Obj) -> Mor:
        """x |> (y |>> m) -> (x (x) y) |>> m, the left module distributor.

        Computed as the conjugate of the strong structure of c -> c |>> m:
        insert the coevaluation at Gx, pass through the composition
        constraint of the adjoint action, and evaluate at Gx.
        """
        cached = self._cached("mdL", x.key, y.key, m.key)
        if cached is not None:
            return cached
        C = self.cat
        gx = C.G(x)
        xy = C.tensor(x, y)
        ym = self.act_l(y, m)
        # coevaluation of the regular module of the base category at (Gx, y):
        # y -> Gx (#) (x (x) y), i.e. the unit of the base side adjunction
        coev = C.adj2(x, y, xy, C.id(xy))
        s1 = self.act_mor(C.id(x), self.act_l_cmor(coev, m))
        s2 = self.act_mor(C.id(x), self.act_l_assoc(gx, xy, m))
        s3 = self.ev_cm(gx, self.act_l(xy, m))
        out = s3 @ s2 @ s1
        return self._store("mdL", x.key, y.key, m.key, out)

    # ------------------------------------------------------- internal Hom

    def iHom(self, m: Obj, n: Obj) -> Obj:
        cached = self._cached("iH", m.key, n.key)
        if cached is None:
            cached = self._store("iH", m.key, n.key, self._iHom_obj(m, n))
        return cached

    def iHom_adj(self, c: Obj, m: Obj, n: Obj, f: Mor) -> Mor:
        """Hom_M(c |> m, n) -> Hom_C(c, iHom(m, n))."""
        return self._iHom_adj(c, m, n, f)

    def iHom_adj_inv(self, c: Obj, m: Obj, n: Obj, g: Mor) -> Mor:
        """Hom_C(c, iHom(m, n)) -> Hom_M(c |> m, n)."""
        return self._iHom_adj_inv(c, m, n, g)

    def ev_i(self, m: Obj, n: Obj) -> Mor:
        """iHom(m, n) |> m -> n, the evaluation of the internal Hom."""
        cached = self._cached("evI", m.key, n.key)
        if cached is None:
            h = self.iHom(m, n)
            cached = self._store(
                "evI", m.key, n.key, self.iHom_adj_inv(h, m, n, self.cat.id(h))
            )
        return cached

    def unit_i(self, m: Obj) -> Mor:
        """1 -> iHom(m, m), the unit of the internal endomorphism algebra."""
        return self.iHom_adj(self.cat.unit(), m, m, self.act_unitor(m))

    def mu_i(self, m: Obj, n: Obj, l: Obj) -> Mor:
        """iHom(n, l) (x) iHom(m, n) -> iHom(m, l), internal composition."""
        C = self.cat
        c1 = self.iHom(n, l)
        c2 = self.iHom(m, n)
        f = (
            self.ev_i(n, l)
            @ self.act_mor(C.id(c1), self.ev_i(m, n))
            @ self.act_assoc(c1, c2, m)
        )
        return self.iHom_adj(C.tensor(c1, c2), m, l, f)

    def iHom_mor(self, m: Obj, g: Mor) -> Mor:
        """iHom(m, g): iHom(m, n) -> iHom(m, n') for a module morphism g."""
        h = self.iHom(m, g.src)
        return self.iHom_adj(h, m, g.dst, g @ self.ev_i(m, g.src))

    def iHom_cmor(self, phi: Mor, n: Obj) -> Mor:
        """iHom(phi, n): iHom(m', n) -> iHom(m, n) for phi: m -> m'."""
        h = self.iHom(phi.dst, n)
        return self.iHom_adj(
            h, phi.src, n, self.ev_i(phi.dst, n) @ self.act_mor(self.cat.id(h), phi)
        )

    # ------------------------------------------------------- internal coHom

    def icoHom(self, m: Obj, n: Obj) -> Obj:
        """icoHom(m, n) = G(iHom(n, m)), representing Hom_M(n, - |>> m)."""
        return self.cat.G(self.iHom(n, m))

    def icoHom_adj(self, c: Obj, m: Obj, mp: Obj, f: Mor) -> Mor:
        """Hom_M(mp, c |>> m) -> Hom_C(icoHom(m, mp), c)."""
        C = self.cat
        g = self.adjH_inv(C.G(c), mp, m, f)
        h = self.iHom_adj(C.G(c), mp, m, g)
        return C.G_mor(h)

    def icoHom_adj_inv(self, c: Obj, m: Obj, mp: Obj, g: Mor) -> Mor:
        """Hom_C(icoHom(m, mp), c) -> Hom_M(mp, c |>> m)."""
        C = self.cat
        h = C.G_mor(g)
        f = self.iHom_adj_inv(C.G(c), mp, m, h)
        return self.adjH(C.G(c), mp, m, f)

    def coev_i(self, m: Obj, n: Obj) -> Mor:
        """n -> icoHom(m, n) |>> m, the coevaluation of the internal coHom."""
        cached = self._cached("cvI", m.key, n.key)
        if cached is None:
            h = self.icoHom(m, n)
            cached = self._store(
                "cvI", m.key, n.key, self.icoHom_adj_inv(h, m, n, self.cat.id(h))
            )
        return cached

    def counit_i(self, m: Obj) -> Mor:
        """icoHom(m, m) -> K, the counit of the internal coendomorphism
        coalgebra."""
        C = self.cat
        to_h = self.adjH(C.unit(), m, m, self.act_unitor(m))  # m -> K |>> m
        return self.icoHom_adj(C.K(), m, m, to_h)

    def delta_i(self, m: Obj, n: Obj, l: Obj) -> Mor:
        """icoHom(l, m) -> icoHom(n, m) (#) icoHom(l, n), internal
        cocomposition."""
        C = self.cat
        c1 = self.icoHom(n, m)
        c2 = self.icoHom(l, n)
        f = (
            self.act_l_assoc_inv(c1, c2, l)
            @ self.act_l_mor(c1, self.coev_i(l, n))
            @ self.coev_i(n, m)
        )
        return self.icoHom_adj(C.cotensor(c1, c2), l, m, f)

    # ------------------------------------------------------------ shift iso

    def iHom_shift(self, b: Obj, c: Obj, m: Obj, mp: Obj) -> Mor:
        """The iso iHom(b |> m, c |>> m') -> c (#) iHom(m, m') (#) G b.

        Obtained by chasing the identity through the chain of adjunction
        bijections that shift b and c out of the internal Hom.
        """
        C = self.cat
        src = self.iHom(self.act(b, m), self.act_l(c, mp))
        gc = C.G(c)
        ih = self.iHom(m, mp)
        f1 = self.iHom_adj_inv(src, self.act(b, m), self.act_l(c, mp), C.id(src))
        f2 = f1 @ self.act_assoc(src, b, m)
        f3 = self.adjH_inv(gc, self.act(C.tensor(src, b), m), mp, f2)
        f4 = f3 @ self.act_assoc(gc, C.tensor(src, b), m)
        f5 = self.iHom_adj(C.tensor(gc, C.tensor(src, b)), m, mp, f4)
        f6 = C.adj2(gc, C.tensor(src, b), ih, f5)
        f7 = C.adj1(src, b, C.cotensor(c, ih), f6)
        dst = C.cotensor(C.cotensor(c, ih), C.G(b))
        return C.mor(src, dst, f7.mat)
