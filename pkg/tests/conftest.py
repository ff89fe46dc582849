"""Shared corpus of category instances used across the test suite."""

from dataclasses import dataclass, field as dc_field

import pytest

from gvcat.linalg.fields import GF
from gvcat.linalg.matrices import Matrix
from gvcat.findim.algebras import (
    cyclic_group_algebra,
    dual_numbers,
    polynomial_quotient,
    trivial_algebra,
    upper_triangular,
)
from gvcat.findim.modules import Bimodule
from gvcat.core.bimod import BimodCategory, ModCommCategory
from gvcat.core.graded import AbelianGroup, GradedCategory

F5 = GF(5)
F7 = GF(7)


@dataclass
class Inst:
    name: str
    cat: object
    gens: list = dc_field(default_factory=list)


def _simple_bimodule(A, char_vals):
    """One-dimensional bimodule where basis element e_i acts by char_vals[i]
    on both sides."""
    mats = [Matrix(A.field, [[v]]) for v in char_vals]
    return Bimodule(A, mats, mats)


def make_bimod7():
    A = dual_numbers(F7)
    cat = BimodCategory(A)
    one = cat.unit()
    S = cat.obj(_simple_bimodule(A, [1, 0]))
    return Inst("bimod-F7[x]/(x^2)", cat, [one, cat.K(), S])


def make_tri7():
    T = upper_triangular(F7, 2)
    cat = BimodCategory(T)
    one = cat.unit()
    # basis order: e11, e12, e22; the character at the (1,1) corner
    S = cat.obj(_simple_bimodule(T, [1, 0, 0]))
    return Inst("bimod-tri2-F7", cat, [one, cat.K(), S])


def make_modcomm5():
    A = dual_numbers(F5)
    cat = ModCommCategory(A)
    one = cat.unit()
    S = cat.obj(_simple_bimodule(A, [1, 0]))
    return Inst("modcomm-F5[x]/(x^2)", cat, [one, cat.K(), S])


def make_vect7():
    """Plain vector spaces as Bimod(F7): hosts the symmetric Frobenius
    examples."""
    cat = BimodCategory(trivial_algebra(F7))
    two = cat.obj(
        Bimodule(
            trivial_algebra(F7),
            [Matrix(F7, [[1, 0], [0, 1]])],
            [Matrix(F7, [[1, 0], [0, 1]])],
        )
    )
    return Inst("vect-F7", cat, [cat.unit(), two])


def make_vect5():
    cat = BimodCategory(trivial_algebra(F5))
    return Inst("vect-F5", cat, [cat.unit()])


Z2 = AbelianGroup((2,))
Z4 = AbelianGroup((4,))
F17 = GF(17)


def z2_cocycle():
    # theta = 2, a primitive 4th root of unity in F5:
    # F(a,b,c) = theta^{2 a floor((b+c)/2)}, Omega(a,b) = theta^{ab}
    F = {((1,), (1,), (1,)): 4}  # -1 in F5
    Om = {((1,), (1,)): 2}  # i in F5
    return F, Om


def z4_cocycle():
    # theta = 2, a primitive 8th root of unity in F17:
    # F(a,b,c) = theta^{4 a floor((b+c)/4)} = (-1)^{a floor((b+c)/4)},
    # Omega(a,b) = theta^{ab} with integer representatives.
    F = {}
    for a in range(4):
        for b in range(4):
            for c in range(4):
                if (b + c) >= 4 and pow(16, a, 17) != 1:
                    F[((a,), (b,), (c,))] = pow(16, a, 17)
    Om = {
        ((a,), (b,)): pow(2, a * b, 17)
        for a in range(4)
        for b in range(4)
        if pow(2, a * b, 17) != 1
    }
    return F, Om


def make_graded(name, group, cocycle, h, field=F5):
    F, Om = cocycle if cocycle else ({}, {})
    cat = GradedCategory(field, group, F, Om, h)
    gens = [cat.simple(g) for g in group.elements]
    # one non-simple generator exercises genuine block structure
    gens.append(cat.graded_obj(tuple(1 for _ in group.elements)))
    return Inst(name, cat, gens)


@pytest.fixture(scope="session")
def bimod7():
    return make_bimod7()


@pytest.fixture(scope="session")
def tri7():
    return make_tri7()


@pytest.fixture(scope="session")
def modcomm5():
    return make_modcomm5()


@pytest.fixture(scope="session")
def vect7():
    return make_vect7()


@pytest.fixture(scope="session")
def graded_z2_triv():
    return make_graded("graded-Z2-triv-h1", Z2, None, (1,))


@pytest.fixture(scope="session")
def graded_z2_cocycle():
    return make_graded("graded-Z2-cocycle-h1", Z2, z2_cocycle(), (1,))


@pytest.fixture(scope="session")
def graded_z2_h0():
    return make_graded("graded-Z2-cocycle-h0", Z2, z2_cocycle(), (0,))


@pytest.fixture(scope="session")
def graded_z4_cocycle():
    return make_graded("graded-Z4-cocycle-h2", Z4, z4_cocycle(), (2,), field=F17)


@pytest.fixture(scope="session")
def graded_z4_triv():
    return make_graded("graded-Z4-triv-h1", Z4, None, (1,), field=F17)


@pytest.fixture(scope="session")
def bimod_instances(bimod7, tri7, modcomm5, vect7):
    return [bimod7, tri7, modcomm5, vect7]


@pytest.fixture(scope="session")
def graded_instances(
    graded_z2_triv, graded_z2_cocycle, graded_z2_h0, graded_z4_cocycle, graded_z4_triv
):
    return [
        graded_z2_triv,
        graded_z2_cocycle,
        graded_z2_h0,
        graded_z4_cocycle,
        graded_z4_triv,
    ]


@pytest.fixture(scope="session")
def all_instances(bimod_instances, graded_instances):
    return bimod_instances + graded_instances
