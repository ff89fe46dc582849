"""Exact linear algebra: oracle values and structural properties."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gvcat.linalg.fields import GF, QQ
from gvcat.linalg.matrices import (
    Matrix,
    coequalizer,
    direct_sum,
    equalizer,
    find_invertible_combination,
    hstack,
    kron,
    linear_combination,
    max_rank_of_pencil,
    split_surjection,
    vstack,
)

F5 = GF(5)
F7 = GF(7)


# -- fields ----------------------------------------------------------------


def test_field_parsing_oracles():
    # [DERIVED] 3/7 in F5: 7 = 2, 2^-1 = 3, 3*3 = 9 = 4.
    assert F5.parse("3/7") == 4
    assert QQ.parse("3/7") == Fraction(3, 7)
    assert F7.parse("-1") == 6
    assert F5.to_str(F5.parse("9")) == "4"


def test_field_inverses():
    for a in range(1, 7):
        assert (F7.inv(a) * a) % 7 == 1
    assert QQ.inv(Fraction(3, 7)) == Fraction(7, 3)
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


# -- solving ---------------------------------------------------------------


def test_solve_oracle_f5():
    # [DERIVED] over F5: 2x = 3 has x = 4 (2*4 = 8 = 3 mod 5).
    f = Matrix(F5, [[2]])
    b = Matrix(F5, [[3]])
    x = f.solve(b)
    assert x == Matrix(F5, [[4]])


def test_solve_inconsistent_returns_none():
    f = Matrix(F5, [[1], [2]])
    b = Matrix(F5, [[1], [3]])  # would need x = 1 and 2x = 3 -> x = 4
    assert f.solve(b) is None


def test_solve_rational():
    f = Matrix(QQ, [[Fraction(1, 2), 1], [0, Fraction(1, 3)]])
    b = Matrix(QQ, [[1], [1]])
    x = f.solve(b)
    assert (f @ x) == b
    assert x.array[1, 0] == Fraction(3)


def test_invert_oracle():
    m = Matrix(F7, [[1, 2], [3, 4]])
    minv = m.invert()
    assert m @ minv == Matrix.identity(F7, 2)
    with pytest.raises(ValueError):
        Matrix(F7, [[1, 2], [2, 4]]).invert()


def test_kernel_and_image():
    # [TRIVIAL] rank-1 projector-like map over F5.
    m = Matrix(F5, [[1, 2], [2, 4]])
    k = m.kernel_basis()
    assert k.ncols == 1
    assert (m @ k).is_zero()
    im = m.image_basis()
    assert im.ncols == 1
    assert m.rank() == 1


# -- kron / direct sum -----------------------------------------------------


def test_kron_index_convention():
    # (i,j) -> i * dim2 + j: entry at row (1,0) = 2, col (0,1) = 1.
    a = Matrix(F5, [[0, 1], [2, 0]])
    b = Matrix(F5, [[3, 0], [0, 4]])
    k = kron(a, b)
    assert k.shape == (4, 4)
    assert k.array[2, 1] == 0  # row (1,0), col (0,1): a[1,0]*b[0,1] = 2*0
    assert k.array[2, 0] == (2 * 3) % 5  # row (1,0), col (0,0)
    assert k.array[1, 3] == (1 * 4) % 5  # row (0,1), col (1,1)


def test_kron_mixed_product():
    a = Matrix(F7, [[1, 2], [3, 4]])
    b = Matrix(F7, [[2, 0], [1, 1]])
    c = Matrix(F7, [[1], [5]])
    d = Matrix(F7, [[3], [2]])
    assert kron(a @ c, b @ d) == kron(a, b) @ kron(c, d)


def test_direct_sum_block_structure():
    a = Matrix(F5, [[1]])
    b = Matrix(F5, [[2, 3]])
    s = direct_sum(a, b)
    assert s.shape == (2, 3)
    assert s.array.tolist() == [[1, 0, 0], [0, 2, 3]]


# -- equalizer / coequalizer / splittings ----------------------------------


def test_equalizer_oracle():
    f = Matrix(F5, [[1, 0], [0, 2]])
    g = Matrix(F5, [[1, 0], [0, 3]])
    e = equalizer(f, g)
    assert e.ncols == 1 and e.array[0, 0] == 1 and e.array[1, 0] == 0
    assert f @ e == g @ e


def test_coequalizer_universal_property():
    f = Matrix(F7, [[1, 0], [2, 0], [0, 0]])
    g = Matrix(F7, [[0, 0], [0, 0], [0, 0]])
    q = coequalizer(f, g)
    # difference image has rank 1, so the quotient has dimension 2
    assert q.nrows == 2 and q.ncols == 3
    assert (q @ f) == (q @ g)
    assert q.rank() == 2
    s = split_surjection(q)
    assert q @ s == Matrix.identity(F7, 2)


def test_split_surjection_none_for_non_surjection():
    q = Matrix(F5, [[1, 0], [2, 0]])
    assert split_surjection(q) is None


# -- pencils ---------------------------------------------------------------


def test_max_rank_of_pencil_oracle():
    # [DERIVED] {E11, E22} over F5: the combination E11 + E22 has rank 2.
    e11 = Matrix(F5, [[1, 0], [0, 0]])
    e22 = Matrix(F5, [[0, 0], [0, 1]])
    assert max_rank_of_pencil([e11, e22]) == 2
    assert max_rank_of_pencil([e11]) == 1
    assert max_rank_of_pencil([]) == 0


def test_max_rank_of_pencil_rational():
    e11 = Matrix(QQ, [[1, 0], [0, 0]])
    e22 = Matrix(QQ, [[0, 0], [0, 1]])
    assert max_rank_of_pencil([e11, e22]) == 2


def test_find_invertible_combination_verified():
    e11 = Matrix(F5, [[1, 0], [0, 0]])
    e22 = Matrix(F5, [[0, 0], [0, 1]])
    coeffs = find_invertible_combination([e11, e22])
    assert coeffs is not None
    assert linear_combination([e11, e22], coeffs).is_invertible()
    assert find_invertible_combination([e11]) is None


# -- property tests --------------------------------------------------------


def _f7_matrix(nrows, ncols):
    return st.lists(
        st.lists(st.integers(0, 6), min_size=ncols, max_size=ncols),
        min_size=nrows,
        max_size=nrows,
    ).map(lambda rows: Matrix(F7, rows))


@settings(max_examples=25, deadline=None)
@given(_f7_matrix(3, 4))
def test_rank_nullity(m):
    assert m.rank() + m.kernel_basis().ncols == m.ncols


@settings(max_examples=25, deadline=None)
@given(_f7_matrix(3, 3), _f7_matrix(3, 3))
def test_rref_idempotent_and_solve_consistency(a, b):
    r, piv = a.rref()
    r2, piv2 = r.rref()
    assert r == r2 and piv == piv2
    x = a.solve(b)
    if x is not None:
        assert a @ x == b


@settings(max_examples=20, deadline=None)
@given(_f7_matrix(2, 2), _f7_matrix(2, 2), _f7_matrix(2, 2))
def test_kron_associativity_flat_indexing(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@settings(max_examples=20, deadline=None)
@given(_f7_matrix(3, 2), _f7_matrix(3, 2))
def test_coequalizer_kills_difference(f, g):
    q = coequalizer(f, g)
    assert q @ f == q @ g
    assert q.rank() == q.nrows
    # universality at the level of dimensions
    assert q.nrows == 3 - (f - g).image_basis().ncols


def test_stacking():
    a = Matrix(F5, [[1, 2]])
    b = Matrix(F5, [[3, 4]])
    assert vstack(a, b) == Matrix(F5, [[1, 2], [3, 4]])
    assert hstack(a.T, b.T) == Matrix(F5, [[1, 3], [2, 4]])


def test_object_dtype_matmul_uses_fractions():
    a = Matrix(QQ, [[Fraction(1, 3), 0], [0, Fraction(1, 5)]])
    b = a.invert()
    assert b.array[0, 0] == 3 and b.array[1, 1] == 5
    assert isinstance((a @ b).array[0, 0], (int, Fraction))
