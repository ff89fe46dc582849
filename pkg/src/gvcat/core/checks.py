"""Equational checks for categories with a dualizing object.

Each check returns True/False after computing both sides of the relevant
identity exactly; they are used both by the test suite and by the CLI check
runner.  All composites are written with explicit associators and unitors —
nothing is silently identified.
"""

from __future__ import annotations

from .base import GVCategory, Mor, Obj


# -- monoidal coherence ----------------------------------------------------


def pentagon_otimes(cat: GVCategory, x: Obj, y: Obj, z: Obj, w: Obj) -> bool:
    lhs = (
        cat.tensor_mor(cat.id(x), cat.associator(y, z, w))
        @ cat.associator(x, cat.tensor(y, z), w)
        @ cat.tensor_mor(cat.associator(x, y, z), cat.id(w))
    )
    rhs = cat.associator(x, y, cat.tensor(z, w)) @ cat.associator(cat.tensor(x, y), z, w)
    return lhs == rhs


def triangle(cat: GVCategory, x: Obj, y: Obj) -> bool:
    lhs = cat.tensor_mor(cat.id(x), cat.unitor_l(y)) @ cat.associator(x, cat.unit(), y)
    rhs = cat.tensor_mor(cat.unitor_r(x), cat.id(y))
    return lhs == rhs


def tensor_functorial(cat: GVCategory, f1: Mor, f2: Mor, g1: Mor, g2: Mor) -> bool:
    """(f1 o f2) (x) (g1 o g2) = (f1 (x) g1) o (f2 (x) g2)."""
    return cat.tensor_mor(f1 @ f2, g1 @ g2) == cat.tensor_mor(f1, g1) @ cat.tensor_mor(f2, g2)


# -- the defining isomorphism pi ------------------------------------------


def pi_bijective(cat: GVCategory, x: Obj, y: Obj) -> bool:
    xy = cat.tensor(x, y)
    K = cat.K()
    gy = cat.G(y)
    for mat in cat.hom_basis(xy, K):
        phi = cat.mor(xy, K, mat)
        if cat.pi_inv(x, y, cat.pi(x, y, phi)) != phi:
            return False
    for mat in cat.hom_basis(x, gy):
        f = cat.mor(x, gy, mat)
        if cat.pi(x, y, cat.pi_inv(x, y, f)) != f:
            return False
    # dimension count makes the two hom spaces exactly bijective
    return len(cat.hom_basis(xy, K)) == len(cat.hom_basis(x, gy))


def pi_natural(cat: GVCategory, x: Obj, y: Obj, xp: Obj, yp: Obj) -> bool:
    """Naturality of pi in both arguments against full hom-space bases."""
    xy = cat.tensor(x, y)
    K = cat.K()
    phis = [cat.mor(xy, K, m) for m in cat.hom_basis(xy, K)]
    for fmat in cat.hom_basis(xp, x):
        f = cat.mor(xp, x, fmat)
        for phi in phis:
            lhs = cat.pi(xp, y, phi @ cat.tensor_mor(f, cat.id(y)))
            if lhs != cat.pi(x, y, phi) @ f:
                return False
    for gmat in cat.hom_basis(yp, y):
        g = cat.mor(yp, y, gmat)
        for phi in phis:
            lhs = cat.pi(x, yp, phi @ cat.tensor_mor(cat.id(x), g))
            if lhs != cat.G_mor(g) @ cat.pi(x, y, phi):
                return False
    return True


def g_strict_involution(cat: GVCategory, x: Obj, y: Obj) -> bool:
    """G(G(x)) is literally x; G is contravariant; G(1) = K."""
    if cat.G(cat.G(x)) != x:
        return False
    if cat.G(cat.unit()) != cat.K() or cat.G(cat.K()) != cat.unit():
        return False
    for fmat in cat.hom_basis(x, y):
        f = cat.mor(x, y, fmat)
        if cat.G_mor(cat.G_mor(f)) != f:
            return False
    return True


# -- snake identities ------------------------------------------------------


def snake_identities(cat: GVCategory, c: Obj) -> bool:
    gc = cat.G(c)
    # c -> 1 (x) c -> (c (#) Gc) (x) c -> c (#) (Gc (x) c) -> c (#) K -> c
    s1 = (
        cat.counitor_r(c)
        @ cat.cotensor_mor(cat.id(c), cat.ev_r(c))
        @ cat.dist_r(c, gc, c)
        @ cat.tensor_mor(cat.coev_r(c), cat.id(c))
        @ cat.unitor_l(c).inv()
    )
    if s1 != cat.id(c):
        return False
    # Gc -> Gc (x) 1 -> Gc (x) (c (#) Gc) -> (Gc (x) c) (#) Gc -> K (#) Gc -> Gc
    s2 = (
        cat.counitor_l(gc)
        @ cat.cotensor_mor(cat.ev_r(c), cat.id(gc))
        @ cat.dist_l(gc, c, gc)
        @ cat.tensor_mor(cat.id(gc), cat.coev_r(c))
        @ cat.unitor_r(gc).inv()
    )
    return s2 == cat.id(gc)


# -- adjunction round trips ------------------------------------------------


def adjunction_round_trips(cat: GVCategory, x: Obj, y: Obj, z: Obj) -> bool:
    xy = cat.tensor(x, y)
    for fmat in cat.hom_basis(xy, z):
        f = cat.mor(xy, z, fmat)
        if cat.adj1_inv(x, y, z, cat.adj1(x, y, z, f)) != f:
            return False
        if cat.adj2_inv(x, y, z, cat.adj2(x, y, z, f)) != f:
            return False
    tgt1 = cat.cotensor(z, cat.G(y))
    for gmat in cat.hom_basis(x, tgt1):
        g = cat.mor(x, tgt1, gmat)
        if cat.adj1(x, y, z, cat.adj1_inv(x, y, z, g)) != g:
            return False
    tgt2 = cat.cotensor(cat.G(x), z)
    for gmat in cat.hom_basis(y, tgt2):
        g = cat.mor(y, tgt2, gmat)
        if cat.adj2(x, y, z, cat.adj2_inv(x, y, z, g)) != g:
            return False
    return True


# -- duality interchanges --------------------------------------------------


def g_of_distributors(cat: GVCategory, x: Obj, y: Obj, z: Obj) -> bool:
    """G carries each distributor to the distributor in the G-images.

    With the strict-involution presentation both sides live between literally
    identical presentations, so this is a matrix identity.
    """
    gx, gy, gz = cat.G(x), cat.G(y), cat.G(z)
    if cat.G_mor(cat.dist_r(x, y, z)) != cat.dist_r(gz, gy, gx):
        return False
    return cat.G_mor(cat.dist_l(x, y, z)) == cat.dist_l(gz, gy, gx)


def rules_adj(cat: GVCategory, x: Obj, y: Obj) -> bool:
    """The three expansion rules: pi_inv through ev, pi through coev and the
    distributor, and G on morphisms through both."""
    xy = cat.tensor(x, y)
    K = cat.K()
    gy, gx = cat.G(y), cat.G(x)
    # rule 1: pi_inv(f) = ev_r(y) o (f (x) id_y)
    for fmat in cat.hom_basis(x, gy):
        f = cat.mor(x, gy, fmat)
        if cat.pi_inv(x, y, f) != cat.ev_r(y) @ cat.tensor_mor(f, cat.id(y)):
            return False
    # rule 2: pi(xi) = counitor o (xi (#) id) o dist_l o (id (x) coev_r(y)) o r^{-1}
    for ximat in cat.hom_basis(xy, K):
        xi = cat.mor(xy, K, ximat)
        rhs = (
            cat.counitor_l(gy)
            @ cat.cotensor_mor(xi, cat.id(gy))
            @ cat.dist_l(x, y, gy)
            @ cat.tensor_mor(cat.id(x), cat.coev_r(y))
            @ cat.unitor_r(x).inv()
        )
        if cat.pi(x, y, xi) != rhs:
            return False
    # rule 3: G(f) through evaluation/coevaluation and dist_l
    for fmat in cat.hom_basis(x, y):
        f = cat.mor(x, y, fmat)
        rhs = (
            cat.counitor_l(gx)
            @ cat.cotensor_mor(cat.ev_r(y) @ cat.tensor_mor(cat.id(gy), f), cat.id(gx))
            @ cat.dist_l(gy, x, gx)
            @ cat.tensor_mor(cat.id(gy), cat.coev_r(x))
            @ cat.unitor_r(gy).inv()
        )
        if cat.G_mor(f) != rhs:
            return False
    return True


def coev_of_tensor(cat: GVCategory, x: Obj, y: Obj) -> bool:
    """Expansion of coev_r(x (x) y) through coev_r(x), coev_r(y)."""
    xy = cat.tensor(x, y)
    gx = cat.G(x)
    lhs = cat.coev_r(xy)
    inner = cat.tensor_mor(cat.id(x), cat.coev_r(y)) @ cat.unitor_r(x).inv()
    rhs = (
        cat.cotensor_mor(cat.id(xy), cat.gamma(x, y).inv())
        @ cat.coassociator(xy, cat.G(y), gx)
        @ cat.cotensor_mor(cat.dist_l(x, y, cat.G(y)), cat.id(gx))
        @ cat.cotensor_mor(inner, cat.id(gx))
        @ cat.coev_r(x)
    )
    return lhs == rhs


def g2_monoidal_coherence(cat: GVCategory, x: Obj, y: Obj, z: Obj) -> bool:
    """The canonical comparison of G^2 is monoidal w.r.t. the associator."""
    mu_xy = cat.G2_monoidal(x, y)
    mu_yz = cat.G2_monoidal(y, z)
    alpha = cat.associator(x, y, z)
    lhs = (
        cat.G2_monoidal(x, cat.tensor(y, z))
        @ cat.tensor_mor(cat.id(x), mu_yz)
        @ alpha
    )
    rhs = (
        cat.G_mor(cat.G_mor(alpha))
        @ cat.G2_monoidal(cat.tensor(x, y), z)
        @ cat.tensor_mor(mu_xy, cat.id(z))
    )
    return lhs == rhs


def g2_monoidal_unit(cat: GVCategory, x: Obj) -> bool:
    one = cat.unit()
    lhs = cat.G_mor(cat.G_mor(cat.unitor_l(x))) @ cat.G2_monoidal(one, x)
    if lhs != cat.unitor_l(x):
        return False
    rhs = cat.G_mor(cat.G_mor(cat.unitor_r(x))) @ cat.G2_monoidal(x, one)
    return rhs == cat.unitor_r(x)


def gamma_iso(cat: GVCategory, x: Obj, y: Obj) -> bool:
    return cat.gamma(x, y).is_iso()


# -- changing the dualizing object -----------------------------------------


def change_dualizing(cat: GVCategory, g: Obj, test_objects: list[Obj]):
    """Move the dualizing object along a (x)-invertible object g.

    Returns a report with the new dualizing object K' = g (x) K, the new
    duality G'(y) = g (x) G(y) on the test objects, and for each test object
    a produced, verified isomorphism G'(G'(y)) = g (x) (G^2(y) (x) g_inv)
    where g_inv = 1 (#) Gg.  Raises ValueError if g is not invertible.
    """
    one = cat.unit()
    ginv = cat.cotensor(one, cat.G(g))
    # candidate evaluation (g_inv (x) g -> 1) must be an isomorphism
    ev_cand = cat.counit_e_prime(g, one)
    if not ev_cand.is_iso():
        raise ValueError("object is not tensor-invertible")
    new_k = cat.tensor(g, cat.K())

    def g_new(y: Obj) -> Obj:
        return cat.tensor(g, cat.G(y))

    report = {"K_new": new_k, "G_new": g_new, "isos": {}}
    for y in test_objects:
        lhs_obj = g_new(g_new(y))  # g (x) G(g (x) Gy)
        # comparison: id_g (x) [gamma_{g,Gy} : G(g (x) Gy) -> y (#) Gg]
        step1 = cat.tensor_mor(cat.id(g), cat.gamma(g, cat.G(y)))
        # y (#) Gg <- (y (x) 1) (#) Gg <- y (x) (1 (#) Gg) via dist_l
        dl = cat.dist_l(y, one, cat.G(g))
        if not dl.is_iso():
            raise ValueError("distributor with the invertible object is not invertible")
        # y (x) ginv -> (y (x) 1) (#) Gg -> y (#) Gg
        to_prod = cat.cotensor_mor(cat.unitor_r(y), cat.id(cat.G(g))) @ dl
        # full iso: g (x) G(g (x) Gy) -> g (x) (y (x) ginv)
        iso = cat.tensor_mor(cat.id(g), to_prod.inv() @ cat.gamma(g, cat.G(y)))
        rhs_obj = cat.tensor(g, cat.tensor(y, ginv))
        if iso.src != lhs_obj or iso.dst != rhs_obj or not iso.is_iso():
            raise ValueError("double-dual comparison failed to be an isomorphism")
        report["isos"][y.key] = iso
    return report
