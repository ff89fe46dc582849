"""Finite-dimensional algebras and modules: oracle values and invariants."""

import pytest

from gvcat.linalg.fields import GF, QQ
from gvcat.linalg.matrices import Matrix
from gvcat.findim.algebras import (
    cyclic_group_algebra,
    dual_numbers,
    polynomial_quotient,
    trivial_algebra,
    upper_triangular,
)
from gvcat.findim.modules import (
    Bimodule,
    RightModule,
    bimodule_as_right_module,
    direct_sum_modules,
    free_right_module,
    hom_space,
    is_projective,
    iso_search,
    linear_dual,
    radical_basis,
    regular_bimodule,
    semisimple_quotient,
    simple_quotients,
    simple_right_modules,
    tensor_over_A,
)

F5 = GF(5)
F7 = GF(7)


def test_dual_numbers_structure():
    A = dual_numbers(F7)
    # [TRIVIAL] x * x = 0, 1 * x = x
    assert A.structure[1, 1].tolist() == [0, 0]
    assert A.structure[0, 1].tolist() == [0, 1]
    assert A.is_commutative()


def test_group_algebra_oracle():
    A = cyclic_group_algebra(F5, 3)
    # [TRIVIAL] g * g^2 = 1
    assert A.structure[1, 2].tolist() == [1, 0, 0]
    assert A.is_commutative()


def test_upper_triangular_not_commutative():
    T = upper_triangular(F7, 2)
    assert T.dim == 3
    assert not T.is_commutative()
    T.check()


def test_polynomial_quotient_y4():
    B = polynomial_quotient(F5, [0, 0, 0, 0])  # F5[y]/(y^4)
    # [DERIVED] y^2 * y^2 = y^4 = 0; y * y^2 = y^3
    assert B.structure[2, 2].tolist() == [0, 0, 0, 0]
    assert B.structure[1, 2].tolist() == [0, 0, 0, 1]


def test_bad_algebra_rejected():
    with pytest.raises(ValueError):
        # "unit" that is not a unit
        from gvcat.findim.algebras import Algebra

        Algebra(F5, [0, 1], dual_numbers(F5).structure.tolist())


def test_regular_bimodule_and_dual():
    A = dual_numbers(F7)
    m = regular_bimodule(A)
    m.check()
    d = linear_dual(m)
    d.check()
    # strict involution: double dual is literally the original
    dd = linear_dual(d)
    assert all(a == b for a, b in zip(dd.lam, m.lam))
    assert all(a == b for a, b in zip(dd.rho, m.rho))


def test_hom_space_regular_endomorphisms():
    # [DERIVED] End of the regular bimodule of F7[x]/(x^2) is the center = A,
    # so it is 2-dimensional.
    A = dual_numbers(F7)
    m = regular_bimodule(A)
    assert len(hom_space(m, m)) == 2


def test_hom_space_right_module_endos():
    # [DERIVED] End_B(B) = B for B = F5[y]/(y^4): dimension 4.
    B = polynomial_quotient(F5, [0, 0, 0, 0])
    reg = RightModule(B, B.right_mults)
    assert len(hom_space(reg, reg)) == 4


def test_tensor_over_A_unit_counts():
    # [DERIVED] A (x)_A A = A: dimension 2 for the dual numbers.
    A = dual_numbers(F7)
    m = regular_bimodule(A)
    t, proj, sect = tensor_over_A(m, m)
    assert t.dim == 2
    assert (proj @ sect) == Matrix.identity(F7, 2)
    t.check()


def test_tensor_over_A_simple_collapses():
    # [DERIVED] k (x)_A k = k for A the dual numbers acting through the
    # augmentation (x acts by 0).
    A = dual_numbers(F7)
    z = Matrix(F7, [[0]])
    o = Matrix(F7, [[1]])
    k = Bimodule(A, [o, z], [o, z])
    t, proj, sect = tensor_over_A(k, k)
    assert t.dim == 1


def test_iso_search_verified_witness():
    A = dual_numbers(F7)
    m = regular_bimodule(A)
    iso = iso_search(m, m)
    assert iso is not None and iso.is_invertible()
    # a simple module is not isomorphic to the regular one
    z = Matrix(F7, [[0]])
    o = Matrix(F7, [[1]])
    k = Bimodule(A, [o, z], [o, z])
    assert iso_search(m, k) is None


def test_projectivity_oracles():
    B = polynomial_quotient(F5, [0, 0, 0, 0])
    reg = RightModule(B, B.right_mults)
    assert is_projective(reg)
    assert is_projective(free_right_module(B, 2))
    # [DERIVED] the simple module over F5[y]/(y^4) is not projective
    simple = RightModule(B, [Matrix(F5, [[1]]), Matrix(F5, [[0]]), Matrix(F5, [[0]]), Matrix(F5, [[0]])])
    assert not is_projective(simple)


def test_projectivity_semisimple_everything():
    # [TRIVIAL] over the group algebra F7[Z/3] (semisimple), all modules are
    # projective — check the simples.
    A = cyclic_group_algebra(F7, 3)
    for s in simple_right_modules(A):
        assert is_projective(s)


def test_radical_oracles():
    # [DERIVED] rad(F7[x]/(x^2)) = (x): dimension 1.
    assert radical_basis(dual_numbers(F7)).ncols == 1
    # [DERIVED] rad of upper triangular 2x2 = strictly upper part: dim 1.
    assert radical_basis(upper_triangular(F7, 2)).ncols == 1
    # [TRIVIAL] group algebra F7[Z/3] is semisimple (7 does not divide 3).
    assert radical_basis(cyclic_group_algebra(F7, 3)).ncols == 0


def test_semisimple_quotient_dims():
    Abar, proj, sect = semisimple_quotient(polynomial_quotient(F5, [0, 0, 0, 0]))
    assert Abar.dim == 1
    Tbar, _, _ = semisimple_quotient(upper_triangular(F7, 2))
    assert Tbar.dim == 2


def test_simple_modules_oracles():
    # [DERIVED] F5[y]/(y^4) is local: exactly one simple module, dim 1.
    B = polynomial_quotient(F5, [0, 0, 0, 0])
    simples = simple_right_modules(B)
    assert len(simples) == 1 and simples[0].dim == 1
    # [DERIVED] upper triangular 2x2: two simples, both of dim 1.
    T = upper_triangular(F7, 2)
    simples_t = simple_right_modules(T)
    assert len(simples_t) == 2 and all(s.dim == 1 for s in simples_t)
    # [DERIVED] F7[Z/3]: three one-dimensional simples (cube roots of 1 in F7).
    G = cyclic_group_algebra(F7, 3)
    simples_g = simple_right_modules(G)
    assert len(simples_g) == 3 and all(s.dim == 1 for s in simples_g)


def test_simple_quotients_of_regular():
    B = polynomial_quotient(F5, [0, 0, 0, 0])
    reg = RightModule(B, B.right_mults)
    quots = simple_quotients(reg)
    assert len(quots) == 1
    s, mult = quots[0]
    assert s.dim == 1 and mult == 1


def test_direct_sum_modules():
    B = polynomial_quotient(F5, [0, 0, 0, 0])
    reg = RightModule(B, B.right_mults)
    s = direct_sum_modules(reg, reg)
    assert s.dim == 8
    s.check()


def test_rational_algebra_roundtrip():
    A = dual_numbers(QQ)
    m = regular_bimodule(A)
    t, proj, sect = tensor_over_A(m, m)
    assert t.dim == 2
    assert len(hom_space(m, m)) == 2
