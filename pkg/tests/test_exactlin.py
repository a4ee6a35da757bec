from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from extrilab.exactlin import (
    GF,
    QQ,
    Matrix,
    Subspace,
    field_from_spec,
    image_basis,
    inverse,
    kernel_basis,
    quotient_basis,
    rank,
    solve,
)


def matrices(max_rows: int = 5, max_cols: int = 5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.integers(-4, 4), min_size=r * c, max_size=r * c).map(
                lambda xs: Matrix(r, c, [Fraction(x) for x in xs], QQ)
            )
        )
    )


def test_identity_and_product():
    a = Matrix.from_rows([[1, 2], [3, 4]], QQ)
    assert (Matrix.identity(2, QQ) @ a) == a
    assert a.T[0, 1] == 3
    assert a.trace() == 5


def test_rank_of_singular_matrix():
    a = Matrix.from_rows([[1, 2], [2, 4]], QQ)
    assert rank(a) == 1
    assert inverse(a) is None


def test_field_spec_parsing():
    assert field_from_spec("Q") == QQ
    f = field_from_spec({"Fp": 5})
    assert f == GF(5)
    with pytest.raises(ValueError):
        field_from_spec({"Fp": 4})


def test_prime_field_inverse():
    f = GF(7)
    a = Matrix.from_rows([[f(2), f(1)], [f(1), f(1)]], f)
    inv = inverse(a)
    assert inv is not None and (a @ inv).is_identity()


def test_solve_inconsistent_returns_none():
    a = Matrix.from_rows([[1, 0], [0, 0]], QQ)
    b = Matrix.from_rows([[1], [1]], QQ)
    assert solve(a, b) is None


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    ref = sympy.Matrix(m.rows, m.cols, [sympy.Rational(v.numerator, v.denominator) for row in m.to_rows() for v in row])
    assert rank(m) == ref.rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_are_killed(m):
    for v in kernel_basis(m).vectors():
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_solve_recovers_a_solution(m):
    x = Matrix(m.cols, 1, [Fraction(k + 1) for k in range(m.cols)], QQ)
    b = m @ x
    sol = solve(m, b)
    assert sol is not None and (m @ sol) == b


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_quotient_basis_is_a_splitting(m):
    sub = image_basis(m)
    proj, sect = quotient_basis(m.rows, sub)
    assert proj.rows == m.rows - sub.dim
    if proj.rows:
        assert (proj @ sect).is_identity()
    for v in sub.vectors():
        assert all(x == 0 for x in proj.apply(v))


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4), matrices(4, 4))
def test_intersection_dimension_formula(a, b):
    if a.rows != b.rows:
        return
    sa, sb = image_basis(a), image_basis(b)
    assert (sa + sb).dim + sa.intersection(sb).dim == sa.dim + sb.dim


def test_subspace_basis_is_canonical():
    s1 = Subspace.span([(1, 1, 0), (0, 1, 1)], 3, QQ)
    s2 = Subspace.span([(1, 2, 1), (1, 0, -1)], 3, QQ)
    assert s1 == s2
    assert s1.contains((2, 3, 1))
    assert not s1.contains((1, 0, 0))
