"""Module functors between module categories and their conjugated structures.

A functor F between two module categories over the same base can carry a lax
structure for the right-exact action (morphisms c |> F(m) -> F(c |> m)) and
an oplax structure for the adjoint action (morphisms F(c |>> m) -> c |>> F(m)).
The two determine each other by conjugation through the evaluation and
coevaluation of the action adjunction; the conversions are implemented here
together with the four pentagon relations that a conjugated pair satisfies
and the round-trip identities of the conversion.
"""

from __future__ import annotations

from ..core.base import Mor, Obj
from .base import ModuleCategory


class GVModuleFunctor:
    """A functor between module categories over the same base category.

    ``obj``/``mor`` give the underlying functor; ``lax(c, m)`` is the lax
    structure c |> F(m) -> F(c |> m) and ``oplax(c, m)`` the oplax structure
    F(c |>> m) -> c |>> F(m).  Either structure may be supplied; the missing
    one can be filled in by conjugation.
    """

    def __init__(self, src: ModuleCategory, tgt: ModuleCategory, obj, mor, lax=None, oplax=None):
        if src.cat is not tgt.cat:
            raise ValueError("module functors require a common base category")
        self.src = src
        self.tgt = tgt
        self.obj = obj
        self.mor = mor
        self.lax = lax
        self.oplax = oplax


def conjugate_lax_to_oplax(F: GVModuleFunctor):
    """The oplax structure conjugated from a lax structure.

    F(c |>> m) -> c |>> (Gc |> F(c |>> m)) -> c |>> F(Gc |> (c |>> m))
    -> c |>> F(m).
    """
    M, N, C = F.src, F.tgt, F.src.cat

    def oplax(c: Obj, m: Obj) -> Mor:
        clm = M.act_l(c, m)
        s1 = N.coev_cm(c, F.obj(clm))
        s2 = N.act_l_mor(c, F.lax(C.G(c), clm))
        s3 = N.act_l_mor(c, F.mor(M.ev_cm(c, m)))
        return s3 @ s2 @ s1

    return oplax


def conjugate_oplax_to_lax(F: GVModuleFunctor):
    """The lax structure conjugated from an oplax structure.

    c |> F(m) -> c |> F(Gc |>> (c |> m)) -> c |> (Gc |>> F(c |> m))
    -> F(c |> m).
    """
    M, N, C = F.src, F.tgt, F.src.cat

    def lax(c: Obj, m: Obj) -> Mor:
        gc = C.G(c)
        cm = M.act(c, m)
        s1 = N.act_mor(C.id(c), F.mor(M.coev_cm(gc, m)))
        s2 = N.act_mor(C.id(c), F.oplax(gc, cm))
        s3 = N.ev_cm(gc, F.obj(cm))
        return s3 @ s2 @ s1

    return lax


def with_conjugates(F: GVModuleFunctor) -> GVModuleFunctor:
    """Fill in whichever of the two structures is missing by conjugation."""
    lax = F.lax if F.lax is not None else conjugate_oplax_to_lax(F)
    oplax = F.oplax if F.oplax is not None else conjugate_lax_to_oplax(F)
    return GVModuleFunctor(F.src, F.tgt, F.obj, F.mor, lax=lax, oplax=oplax)


# -- coherence checks -------------------------------------------------------


def lax_pentagon(F: GVModuleFunctor, x: Obj, y: Obj, m: Obj) -> bool:
    """x |> (y |> F(m)) -> F(x |> (y |> m)), two routes."""
    M, N, C = F.src, F.tgt, F.src.cat
    fm = F.obj(m)
    r1 = F.lax(x, M.act(y, m)) @ N.act_mor(C.id(x), F.lax(y, m))
    r2 = (
        F.mor(M.act_assoc(x, y, m))
        @ F.lax(C.tensor(x, y), m)
        @ N.act_assoc_inv(x, y, fm)
    )
    return r1 == r2


def oplax_pentagon(F: GVModuleFunctor, x: Obj, y: Obj, m: Obj) -> bool:
    """F(x |>> (y |>> m)) -> x |>> (y |>> F(m)), two routes."""
    M, N, C = F.src, F.tgt, F.src.cat
    fm = F.obj(m)
    r1 = N.act_l_mor(x, F.oplax(y, m)) @ F.oplax(x, M.act_l(y, m))
    r2 = (
        N.act_l_assoc(x, y, fm)
        @ F.oplax(C.cotensor(x, y), m)
        @ F.mor(M.act_l_assoc_inv(x, y, m))
    )
    return r1 == r2


def mixed_pentagon_1(F: GVModuleFunctor, x: Obj, y: Obj, m: Obj) -> bool:
    """x |> F(y |>> m) -> (x (x) y) |>> F(m), two routes."""
    M, N, C = F.src, F.tgt, F.src.cat
    fm = F.obj(m)
    r1 = (
        F.oplax(C.tensor(x, y), m)
        @ F.mor(M.mdist_l(x, y, m))
        @ F.lax(x, M.act_l(y, m))
    )
    r2 = N.mdist_l(x, y, fm) @ N.act_mor(C.id(x), F.oplax(y, m))
    return r1 == r2


def mixed_pentagon_2(F: GVModuleFunctor, x: Obj, y: Obj, m: Obj) -> bool:
    """(x (#) y) |> F(m) -> x |>> F(y |> m), two routes."""
    M, N, C = F.src, F.tgt, F.src.cat
    fm = F.obj(m)
    r1 = (
        N.act_l_mor(x, F.lax(y, m))
        @ N.mdist_r(x, y, fm)
    )
    r2 = (
        F.oplax(x, M.act(y, m))
        @ F.mor(M.mdist_r(x, y, m))
        @ F.lax(C.cotensor(x, y), m)
    )
    return r1 == r2


def functor_pentagons(F: GVModuleFunctor, x: Obj, y: Obj, m: Obj) -> dict[str, bool]:
    """The four pentagon relations for a conjugated pair of structures."""
    return {
        "lax": lax_pentagon(F, x, y, m),
        "oplax": oplax_pentagon(F, x, y, m),
        "mixed1": mixed_pentagon_1(F, x, y, m),
        "mixed2": mixed_pentagon_2(F, x, y, m),
    }


# -- distinguished functors -------------------------------------------------


def action_functor_r(M: ModuleCategory, reg, m: Obj) -> GVModuleFunctor:
    """c -> c |> m from the regular module to M, with its strong lax
    structure; its conjugated oplax structure is the right module
    distributor."""

    def obj(rc: Obj) -> Obj:
        return M.act(reg.underlying(rc), m)

    def mor(g: Mor) -> Mor:
        return M.act_mor(reg.unwrap_mor(g), M.id(m))

    def lax(x: Obj, rc: Obj) -> Mor:
        return M.act_assoc_inv(x, reg.underlying(rc), m)

    def oplax(x: Obj, rc: Obj) -> Mor:
        return M.mdist_r(x, reg.underlying(rc), m)

    return GVModuleFunctor(reg, M, obj, mor, lax=lax, oplax=oplax)


def action_functor_l(M: ModuleCategory, reg, m: Obj) -> GVModuleFunctor:
    """c -> c |>> m from the regular module to M, with its strong oplax
    structure; its conjugated lax structure is the left module distributor."""

    def obj(rc: Obj) -> Obj:
        return M.act_l(reg.underlying(rc), m)

    def mor(g: Mor) -> Mor:
        return M.act_l_cmor(reg.unwrap_mor(g), m)

    def lax(x: Obj, rc: Obj) -> Mor:
        return M.mdist_l(x, reg.underlying(rc), m)

    def oplax(x: Obj, rc: Obj) -> Mor:
        return M.act_l_assoc(x, reg.underlying(rc), m)

    return GVModuleFunctor(reg, M, obj, mor, lax=lax, oplax=oplax)


def identity_functor(M: ModuleCategory) -> GVModuleFunctor:
    def lax(c: Obj, m: Obj) -> Mor:
        return M.id(M.act(c, m))

    def oplax(c: Obj, m: Obj) -> Mor:
        return M.id(M.act_l(c, m))

    return GVModuleFunctor(M, M, lambda m: m, lambda g: g, lax=lax, oplax=oplax)


def ihom_functor(M: ModuleCategory, reg, m0: Obj) -> GVModuleFunctor:
    """iHom(m0, -): M -> regular module, with its canonical lax structure
    c (x) iHom(m0, n) -> iHom(m0, c |> n)."""
    C = M.cat

    def obj(n: Obj) -> Obj:
        return reg.wrap(M.iHom(m0, n))

    def mor(g: Mor) -> Mor:
        return reg.wrap_mor(M.iHom_mor(m0, g))

    def lax(c: Obj, n: Obj) -> Mor:
        h = M.iHom(m0, n)
        f = (
            M.act_mor(C.id(c), M.ev_i(m0, n))
            @ M.act_assoc(c, h, m0)
        )
        out = M.iHom_adj(C.tensor(c, h), m0, M.act(c, n), f)
        return reg.wrap_mor(out)

    return GVModuleFunctor(M, reg, obj, mor, lax=lax)
