"""Generators and reconstruction of a module category from one object.

Given an admissible generator m0 of a module category M, the internal
endomorphism object A0 = iHom(m0, m0) is an associative unital algebra in
the base category, and iHom(m0, -) identifies M with right A0-modules
internal to the base.  This module certifies the generator property, builds
A0 with its multiplication, and verifies the comparison functor on a corpus:
hom-spaces map bijectively onto A0-linear hom-spaces, and the image of an
action object c |> m0 is the induced module c (x) A0.
"""

from __future__ import annotations

from ..core.base import Mor, Obj
from ..linalg.matrices import Matrix, hstack, max_rank_of_pencil
from .base import ModuleCategory


def generates(M: ModuleCategory, m0: Obj, m: Obj, candidates: list[Obj]):
    """A base object c with an epimorphism c |> m0 -> m, or None.

    For each candidate c the hom-space Hom_M(c |> m0, m) is searched for a
    surjection by maximizing the rank of the pencil it spans.
    """
    for c in candidates:
        basis = M.mhom_basis(M.act(c, m0), m)
        if basis and max_rank_of_pencil(basis) == m.dim:
            return c
    return None


def is_generator(M: ModuleCategory, m0: Obj, corpus: list[Obj], candidates: list[Obj]) -> bool:
    """True iff every corpus object receives an epimorphism from some
    candidate action object c |> m0."""
    return all(generates(M, m0, m, candidates) is not None for m in corpus)


def ihom_lax(M: ModuleCategory, c: Obj, n: Obj, m0: Obj) -> Mor:
    """The canonical comparison c (x) iHom(m0, n) -> iHom(m0, c |> n)."""
    C = M.cat
    h = M.iHom(m0, n)
    f = M.act_mor(C.id(c), M.ev_i(m0, n)) @ M.act_assoc(c, h, m0)
    return M.iHom_adj(C.tensor(c, h), m0, M.act(c, n), f)


def _vec(field, mat: Matrix) -> Matrix:
    return Matrix(field, mat.array.reshape(-1, 1).copy(), _raw=True)


def internal_hom_space(M: ModuleCategory, m0: Obj, m1: Obj, m2: Obj) -> list[Matrix]:
    """A basis of the A0-linear maps iHom(m0, m1) -> iHom(m0, m2) in the
    base category, where A0 = iHom(m0, m0) acts through composition."""
    C = M.cat
    f1, f2 = M.iHom(m0, m1), M.iHom(m0, m2)
    a1 = M.mu_i(m0, m0, m1)  # f1 (x) A0 -> f1
    a2 = M.mu_i(m0, m0, m2)
    a0 = M.iHom(m0, m0)
    basis = C.hom_basis(f1, f2)
    if not basis:
        return []
    cols = []
    for b in basis:
        h = C.mor(f1, f2, b)
        lhs = a2 @ C.tensor_mor(h, C.id(a0)) - h @ a1
        cols.append(_vec(C.field, lhs.mat))
    ker = hstack(*cols).kernel_basis()
    out = []
    for s in range(ker.ncols):
        mat = Matrix.zeros(C.field, f2.dim, f1.dim)
        for t, b in enumerate(basis):
            mat = mat + b.scale(ker.array[t, s])
        out.append(mat)
    return out


def reconstruction(M: ModuleCategory, m0: Obj, corpus: list[Obj], candidates: list[Obj]) -> dict:
    """Reconstruction report for the internal endomorphism algebra of m0.

    Checks the two hypotheses (admissibility and the generator property);
    when they fail the report names the failure instead of proceeding.
    Otherwise verifies that A0 = iHom(m0, m0) is an associative unital
    algebra, that hom-spaces of M map bijectively onto A0-linear hom-spaces,
    and that iHom(m0, c |> m0) is the induced module c (x) A0.
    """
    C = M.cat
    report: dict = {"failed_hypotheses": []}
    if not M.is_admissible(m0):
        report["failed_hypotheses"].append("m0 is not admissible")
    if not is_generator(M, m0, corpus, candidates):
        report["failed_hypotheses"].append("m0 is not a generator")
    if report["failed_hypotheses"]:
        report["ok"] = False
        return report

    a0 = M.iHom(m0, m0)
    mu = M.mu_i(m0, m0, m0)
    unit = M.unit_i(m0)
    report["algebra_object"] = a0
    report["associative"] = mu @ C.tensor_mor(mu, C.id(a0)) == mu @ C.tensor_mor(
        C.id(a0), mu
    ) @ C.associator(a0, a0, a0)
    report["unital"] = (
        mu @ C.tensor_mor(unit, C.id(a0)) == C.unitor_l(a0)
        and mu @ C.tensor_mor(C.id(a0), unit) == C.unitor_r(a0)
    )

    # hom-space comparison: Hom_M(m1, m2) -> Hom_{A0}(iHom(m0,m1), iHom(m0,m2))
    hom_ok = True
    for m1 in corpus:
        for m2 in corpus:
            src_basis = M.mhom_basis(m1, m2)
            tgt = internal_hom_space(M, m0, m1, m2)
            if len(src_basis) != len(tgt):
                hom_ok = False
                continue
            if not src_basis:
                continue
            images = [
                _vec(C.field, M.iHom_mor(m0, M.mor(m1, m2, b)).mat)
                for b in src_basis
            ]
            stacked = hstack(*images)
            if stacked.rank() != len(src_basis):
                hom_ok = False
    report["hom_bijective"] = hom_ok

    # induction comparison: iHom(m0, c |> m0) ~= c (x) A0 as A0-modules
    ind_ok = True
    for c in candidates:
        lax = ihom_lax(M, c, m0, m0)
        if not lax.is_iso():
            ind_ok = False
            continue
        cm = M.act(c, m0)
        act_f = M.mu_i(m0, m0, cm)
        act_ind = C.tensor_mor(C.id(c), mu) @ C.associator(c, a0, a0)
        if not lax @ act_ind == act_f @ C.tensor_mor(lax, C.id(a0)):
            ind_ok = False
    report["induction_iso"] = ind_ok

    report["ok"] = (
        report["associative"] and report["unital"] and hom_ok and ind_ok
    )
    return report


def modb_algebra_iso(M) -> Mor:
    """The canonical algebra isomorphism from B (as a base object) onto
    iHom(B, B) in mod-B, sending b to left multiplication by b."""
    C = M.cat
    b = M.b_object()
    a0 = M.iHom(b, b)
    B = M.B
    cols = []
    for j in range(B.dim):
        lm = B.left_mults[j]
        cols.append(M.hom_coords(b, b, lm))
    return C.mor(M.b_cobj, a0, hstack(*cols))
