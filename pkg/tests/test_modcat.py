"""Module categories: actions, adjunctions, distributors, internal Homs,
admissibility, generators, and reconstruction."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gvcat.linalg.fields import GF
from gvcat.linalg.matrices import Matrix, linear_combination
from gvcat.findim.algebras import polynomial_quotient
from gvcat.findim.modules import free_right_module
from gvcat.modcat import (
    ModB,
    RegularModule,
    action_functor_l,
    action_functor_r,
    bimod_projectivity_test,
    conjugate_lax_to_oplax,
    conjugate_oplax_to_lax,
    criterion_adm,
    functor_pentagons,
    generates,
    identity_functor,
    ihom_functor,
    is_admissible_negtimes,
    is_admissible_otimes,
    is_generator,
    modb_algebra_iso,
    reconstruction,
    rigid_dual_data,
    with_conjugates,
)
from gvcat.modcat.admissible import candidate_dual, candidate_ev, snake_1, snake_2

F5 = GF(5)


# -- fixtures ---------------------------------------------------------------


@pytest.fixture(scope="module")
def regulars(modcomm5, bimod7, graded_z2_cocycle):
    """Regular modules over three structurally different bases."""
    out = []
    for inst in (modcomm5, bimod7, graded_z2_cocycle):
        out.append((inst.name, inst.cat, RegularModule(inst.cat), inst.gens))
    return out


@pytest.fixture(scope="module")
def modb(modcomm5):
    """mod-B for B = F5[y]/(y^4) over the base A = F5[x]/(x^2), x -> y^2."""
    C = modcomm5.cat
    B = polynomial_quotient(F5, [0, 0, 0, 0])
    iota = Matrix(F5, [[1, 0], [0, 0], [0, 1], [0, 0]])
    M = ModB(C, B, iota)
    bB = M.b_object()
    S = M.module_obj([Matrix(F5, [[1]]), Matrix(F5, [[0]]), Matrix(F5, [[0]]), Matrix(F5, [[0]])])
    corpus = [bB, M.free_object(1), S]
    return C, M, bB, S, corpus, modcomm5.gens


def _module_corpora(regulars, modb):
    """(name, base, module category, base generators, module corpus) tuples."""
    out = []
    for name, C, M, gens in regulars:
        out.append((name, C, M, gens, [M.wrap(c) for c in gens]))
    C, M, bB, S, corpus, gens = modb
    out.append(("modB", C, M, gens, corpus))
    return out


# -- action adjunction ------------------------------------------------------


def test_triangle_identities(regulars, modb):
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        for c in gens:
            for m in corpus:
                gc = C.G(c)
                t1 = M.ev_cm(c, M.act(gc, m)) @ M.act_mor(C.id(gc), M.coev_cm(c, m))
                assert t1 == M.id(M.act(gc, m)), name
                t2 = M.act_l_mor(c, M.ev_cm(c, m)) @ M.coev_cm(c, M.act_l(c, m))
                assert t2 == M.id(M.act_l(c, m)), name


def test_action_adjunction_bijective(regulars, modb):
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        for c in gens[:2]:
            for m, n in itertools.product(corpus[:2], repeat=2):
                src = M.mhom_basis(M.act(c, m), n)
                tgt = M.mhom_basis(m, M.H(c, n))
                assert len(src) == len(tgt), name
                for b in src:
                    f = M.mor(M.act(c, m), n, b)
                    assert M.adjH_inv(c, m, n, M.adjH(c, m, n, f)) == f, name
                for b in tgt:
                    g = M.mor(m, M.H(c, n), b)
                    assert M.adjH(c, m, n, M.adjH_inv(c, m, n, g)) == g, name


def test_unitors_of_actions(regulars, modb):
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        for m in corpus:
            assert M.act_unitor(m).is_iso(), name
            assert M.act_l_unitor(m).is_iso(), name


# -- distributors and the six pentagon relations ----------------------------


def test_regular_distributors_match_base(regulars):
    for name, C, M, gens in regulars:
        for x, y, c in itertools.product(gens, repeat=3):
            m = M.wrap(c)
            assert M.mdist_r(x, y, m).mat == C.dist_r(x, y, c).mat, name
            assert M.mdist_l(x, y, m).mat == C.dist_l(x, y, c).mat, name
            assert M.act_l_assoc(x, y, m).mat == C.coassociator(x, y, c).mat, name


def test_six_pentagons(regulars, modb):
    """The six coherence relations of the module distributors, packaged as
    the four pentagon relations of the two action functors c |-> c |> m and
    c |-> c |>> m."""
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        reg = M if isinstance(M, RegularModule) else RegularModule(C)
        pairs = list(itertools.product(gens, repeat=2))[:4]
        for m in corpus[:2]:
            FR = action_functor_r(M, reg, m)
            FL = action_functor_l(M, reg, m)
            for x, y in pairs:
                for F, tag in ((FR, "|>"), (FL, "|>>")):
                    res = functor_pentagons(F, x, y, reg.wrap(gens[0]))
                    assert all(res.values()), (name, tag, res)


def test_conjugation_recovers_distributors(regulars, modb):
    """The module distributors are exactly the conjugates of the strong
    structures of the action functors."""
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        reg = M if isinstance(M, RegularModule) else RegularModule(C)
        for m in corpus[:2]:
            FR = action_functor_r(M, reg, m)
            FL = action_functor_l(M, reg, m)
            oplax = conjugate_lax_to_oplax(FR)
            lax = conjugate_oplax_to_lax(FL)
            for c in gens:
                w = reg.wrap(c)
                assert oplax(gens[1], w) == FR.oplax(gens[1], w), name
                assert lax(gens[1], w) == FL.lax(gens[1], w), name


def test_conjugation_round_trip(regulars, modb):
    """Converting lax -> oplax -> lax is the identity on structure families."""
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        reg = M if isinstance(M, RegularModule) else RegularModule(C)
        m0 = corpus[0]
        Y = ihom_functor(M, reg, m0)
        Y2 = with_conjugates(Y)
        back = conjugate_oplax_to_lax(Y2)
        for c in gens[:2]:
            for n in corpus[:2]:
                assert back(c, n) == Y.lax(c, n), name


def test_identity_functor_trivial_conjugates(regulars):
    for name, C, M, gens in regulars:
        F = identity_functor(M)
        oplax = conjugate_lax_to_oplax(F)
        lax = conjugate_oplax_to_lax(F)
        for c in gens[:2]:
            m = M.wrap(gens[1])
            assert oplax(c, m) == F.oplax(c, m), name
            assert lax(c, m) == F.lax(c, m), name


def test_ihom_functor_pentagons(regulars, modb):
    """The four pentagon relations for iHom(m0, -) with its conjugated
    oplax structure."""
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        reg = M if isinstance(M, RegularModule) else RegularModule(C)
        Y = with_conjugates(ihom_functor(M, reg, corpus[0]))
        pairs = list(itertools.product(gens[:2], repeat=2))[:3]
        for x, y in pairs:
            res = functor_pentagons(Y, x, y, corpus[1])
            assert all(res.values()), (name, res)


@settings(max_examples=12, deadline=None)
@given(data=st.data())
def test_mdist_r_natural_in_module(modcomm5, data):
    """Naturality of the right distributor in a random module morphism."""
    C = modcomm5.cat
    M = RegularModule(C)
    gens = modcomm5.gens
    x = data.draw(st.sampled_from(gens))
    y = data.draw(st.sampled_from(gens))
    m = M.wrap(data.draw(st.sampled_from(gens)))
    n = M.wrap(data.draw(st.sampled_from(gens)))
    basis = M.mhom_basis(m, n)
    if not basis:
        return
    coeffs = data.draw(
        st.lists(st.integers(0, 4), min_size=len(basis), max_size=len(basis))
    )
    g = M.mor(m, n, linear_combination(basis, coeffs))
    xy = C.cotensor(x, y)
    lhs = M.mdist_r(x, y, n) @ M.act_mor(C.id(xy), g)
    rhs = M.act_l_mor(x, M.act_mor(C.id(y), g)) @ M.mdist_r(x, y, m)
    assert lhs == rhs


# -- internal Hom and coHom -------------------------------------------------


def test_ihom_adjunction_bijective(regulars, modb):
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        for c in gens[:2]:
            for m, n in itertools.product(corpus[:2], repeat=2):
                src = M.mhom_basis(M.act(c, m), n)
                tgt = C.hom_basis(c, M.iHom(m, n))
                assert len(src) == len(tgt), name
                for b in src:
                    f = M.mor(M.act(c, m), n, b)
                    g = M.iHom_adj(c, m, n, f)
                    assert M.iHom_adj_inv(c, m, n, g) == f, name
                for b in tgt:
                    g = C.mor(c, M.iHom(m, n), b)
                    back = M.iHom_adj(c, m, n, M.iHom_adj_inv(c, m, n, g))
                    assert back == g, name


def test_icohom_adjunction_bijective(regulars, modb):
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        for c in gens[:2]:
            for m, mp in itertools.product(corpus[:2], repeat=2):
                src = M.mhom_basis(mp, M.act_l(c, m))
                tgt = C.hom_basis(M.icoHom(m, mp), c)
                assert len(src) == len(tgt), name
                for b in src:
                    f = M.mor(mp, M.act_l(c, m), b)
                    g = M.icoHom_adj(c, m, mp, f)
                    assert M.icoHom_adj_inv(c, m, mp, g) == f, name


def test_internal_end_is_algebra(regulars, modb):
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        for m in corpus:
            a0 = M.iHom(m, m)
            mu = M.mu_i(m, m, m)
            unit = M.unit_i(m)
            assert mu @ C.tensor_mor(mu, C.id(a0)) == mu @ C.tensor_mor(
                C.id(a0), mu
            ) @ C.associator(a0, a0, a0), name
            assert mu @ C.tensor_mor(unit, C.id(a0)) == C.unitor_l(a0), name
            assert mu @ C.tensor_mor(C.id(a0), unit) == C.unitor_r(a0), name


def test_internal_coend_is_coalgebra(regulars, modb):
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        for m in corpus:
            ic = M.icoHom(m, m)
            de = M.delta_i(m, m, m)
            cu = M.counit_i(m)
            assert C.coassociator(ic, ic, ic) @ C.cotensor_mor(
                de, C.id(ic)
            ) @ de == C.cotensor_mor(C.id(ic), de) @ de, name
            assert C.cotensor_mor(cu, C.id(ic)) @ de == C.counitor_l(ic).inv(), name
            assert C.cotensor_mor(C.id(ic), cu) @ de == C.counitor_r(ic).inv(), name


def test_ihom_at_unit_is_identity(regulars):
    """iHom(1, m) ~= m on the regular module, iso built from the adjunction."""
    for name, C, M, gens in regulars:
        one = M.wrap(C.unit())
        for c in gens:
            m = M.wrap(c)
            f = M.mor(M.act(c, one), m, C.unitor_r(c).mat)
            iso = M.iHom_adj(c, one, m, f)
            assert iso.src == c and iso.dst == M.iHom(one, m), name
            assert iso.is_iso(), name


def test_icohom_at_dualizing_is_identity(regulars):
    """icoHom(K, m) ~= m on the regular module."""
    for name, C, M, gens in regulars:
        kw = M.wrap(C.K())
        for c in gens:
            m = M.wrap(c)
            f = M.mor(m, M.act_l(c, kw), C.counitor_r(c).inv().mat)
            iso = M.icoHom_adj(c, kw, m, f)
            assert iso.src == M.icoHom(kw, m) and iso.dst == c, name
            assert iso.is_iso(), name


def test_ihom_shift_iso(regulars, modb):
    for name, C, M, gens, corpus in _module_corpora(regulars, modb):
        for b, c in list(itertools.product(gens[:2], repeat=2))[:3]:
            sh = M.iHom_shift(b, c, corpus[0], corpus[1])
            assert sh.is_iso(), name
            assert sh.dst == C.cotensor(
                C.cotensor(c, M.iHom(corpus[0], corpus[1])), C.G(b)
            ), name


def test_regular_coev_and_ev_special_values(regulars):
    """On the regular module, coev at m = 1 is the second-product
    coevaluation and ev at m = K is the second-product evaluation, up to
    the unitor on the inner factor."""
    for name, C, M, gens in regulars:
        one = M.wrap(C.unit())
        kw = M.wrap(C.K())
        for c in gens:
            gc = C.G(c)
            lhs = M.coev_cm(c, one).mat
            rhs = (C.cotensor_mor(C.id(c), C.unitor_r(gc).inv()) @ C.coev_r(c)).mat
            assert lhs == rhs, name
            lhs = M.ev_cm(c, kw).mat
            rhs = (C.ev_r(c) @ C.tensor_mor(C.id(gc), C.counitor_r(c))).mat
            assert lhs == rhs, name


# -- admissibility ----------------------------------------------------------


def test_admissibility_cross_check(bimod_instances):
    """Rigid-dual snake test vs right-projectivity on every bimodule corpus
    object; they must agree everywhere."""
    for inst in bimod_instances:
        C = inst.cat
        for c in inst.gens:
            assert is_admissible_otimes(C, c) == bimod_projectivity_test(c), inst.name


def test_unit_admissible_and_tensor_closure(bimod_instances, graded_z2_cocycle):
    insts = bimod_instances + [graded_z2_cocycle]
    for inst in insts:
        C = inst.cat
        assert is_admissible_otimes(C, C.unit()), inst.name
        adm = [c for c in inst.gens if is_admissible_otimes(C, c)]
        for x, y in itertools.product(adm, repeat=2):
            assert is_admissible_otimes(C, C.tensor(x, y)), inst.name


def test_graded_everything_admissible(graded_instances):
    for inst in graded_instances:
        C = inst.cat
        for c in inst.gens:
            assert is_admissible_otimes(C, c), inst.name
            assert is_admissible_negtimes(C, c), inst.name


def test_simple_not_admissible(bimod7):
    C = bimod7.cat
    S = bimod7.gens[2]
    assert not is_admissible_otimes(C, S)
    assert rigid_dual_data(C, S) is None


def test_rigid_dual_snakes(modcomm5, graded_z2_cocycle):
    for inst in (modcomm5, graded_z2_cocycle):
        C = inst.cat
        for c in inst.gens:
            data = rigid_dual_data(C, c)
            if data is None:
                continue
            dual, ev, coev = data
            assert dual == candidate_dual(C, c), inst.name
            assert ev == candidate_ev(C, c), inst.name
            assert snake_1(C, c, dual, ev, coev) == C.id(c), inst.name
            assert snake_2(C, c, dual, ev, coev) == C.id(dual), inst.name


def test_modb_admissibility(modb):
    C, M, bB, S, corpus, gens = modb
    assert M.is_admissible(bB)
    assert M.is_admissible(M.free_object(2))
    assert not M.is_admissible(S)


def test_criterion_adm(modb):
    C, M, bB, S, corpus, gens = modb
    x2 = C.module_obj(free_right_module(C.algebra, 2))
    assert criterion_adm(M, bB, x2, bB)
    # S (+) S is not induced from x2, so the witness check must fail
    assert not criterion_adm(M, S, x2, S)


# -- generators and reconstruction ------------------------------------------


def test_generator_modb(modb):
    C, M, bB, S, corpus, gens = modb
    cands = [C.unit(), C.module_obj(free_right_module(C.algebra, 2))]
    assert is_generator(M, bB, corpus, cands)
    assert generates(M, S, bB, cands) is None
    assert not is_generator(M, S, corpus, cands)


def test_generator_regular(regulars):
    for name, C, M, gens in regulars:
        one = M.wrap(C.unit())
        corpus = [M.wrap(c) for c in gens]
        assert is_generator(M, one, corpus, gens), name


def test_reconstruction_modb(modb):
    C, M, bB, S, corpus, gens = modb
    cands = [C.unit(), C.module_obj(free_right_module(C.algebra, 2))]
    rep = reconstruction(M, bB, corpus, cands)
    assert rep["ok"], rep
    assert rep["associative"] and rep["unital"]
    assert rep["hom_bijective"] and rep["induction_iso"]


def test_reconstruction_modb_algebra_iso(modb):
    """The internal endomorphism algebra of B is B itself, through left
    multiplication, compatibly with multiplication and unit."""
    C, M, bB, S, corpus, gens = modb
    B = M.B
    lam = modb_algebra_iso(M)
    assert lam.is_iso()
    bo = M.b_cobj
    a0 = M.iHom(bB, bB)
    mu = M.mu_i(bB, bB, bB)
    # multiplication of B as a morphism in the base category
    flat = Matrix.zeros(F5, B.dim, B.dim * B.dim)
    for i in range(B.dim):
        ei = Matrix.zeros(F5, B.dim, 1)
        ei.array[i, 0] = F5.one
        for j in range(B.dim):
            ej = Matrix.zeros(F5, B.dim, 1)
            ej.array[j, 0] = F5.one
            flat.array[:, i * B.dim + j] = B.multiply(ei, ej).array[:, 0]
    mult = C.mor(C.tensor(bo, bo), bo, flat @ C.tensor_sect(bo, bo))
    assert mu @ C.tensor_mor(lam, lam) == lam @ mult
    eta = C.mor(C.unit(), bo, M.iota)
    assert lam @ eta == M.unit_i(bB)


def test_reconstruction_reports_failed_hypotheses(modb):
    C, M, bB, S, corpus, gens = modb
    cands = [C.unit(), C.module_obj(free_right_module(C.algebra, 2))]
    rep = reconstruction(M, S, corpus, cands)
    assert rep["ok"] is False
    assert "m0 is not admissible" in rep["failed_hypotheses"]
    assert "m0 is not a generator" in rep["failed_hypotheses"]


def test_reconstruction_regular_unit(modcomm5):
    C = modcomm5.cat
    M = RegularModule(C)
    one = M.wrap(C.unit())
    corpus = [M.wrap(c) for c in modcomm5.gens]
    rep = reconstruction(M, one, corpus, modcomm5.gens)
    assert rep["ok"], rep
