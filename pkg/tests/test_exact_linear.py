import numpy as np
import pytest
from fractions import Fraction
from hypothesis import given, settings
from hypothesis import strategies as st

from cycloschur.exact_linear import (
    GenericRing,
    ParameterAssignment,
    Inconsistent,
    NotAUnit,
    PrimeField,
    Rationals,
    RepeatedParameter,
    RowSpaceSolver,
    rank,
    right_nullspace,
    rref,
    solve_columns,
    vandermonde_data,
)

F5 = PrimeField(5)


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(6)


def test_inverse_roundtrip():
    for x in range(1, 5):
        assert F5.reduce_scalar(F5.inv(x) * x) == F5.one
    with pytest.raises(NotAUnit):
        F5.inv(0)


matrices = st.lists(
    st.lists(st.integers(0, 4), min_size=3, max_size=3), min_size=2, max_size=4
)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_rref_is_idempotent_and_rank_stable(rows):
    A = F5.array(rows)
    R, piv = rref(F5, A)
    R2, piv2 = rref(F5, R)
    assert F5.equal(R, R2) and piv == piv2
    assert rank(F5, A) == len(piv)
    assert rank(F5, A) == rank(F5, A.T)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_nullspace_annihilates(rows):
    A = F5.array(rows)
    Nn = right_nullspace(F5, A)
    assert Nn.shape[0] + rank(F5, A) == A.shape[1]
    if Nn.shape[0]:
        assert F5.equal(F5.reduce(A @ Nn.T), F5.zeros((A.shape[0], Nn.shape[0])))


def test_solve_columns_and_inconsistency():
    A = F5.array([[1, 2], [0, 1]])
    B = F5.array([[3], [4]])
    X = solve_columns(F5, A, B)
    assert F5.equal(F5.reduce(A @ X), B)
    singular = F5.array([[1, 2], [2, 4]])
    with pytest.raises(Inconsistent):
        solve_columns(F5, singular, F5.array([[1], [0]]))


def test_row_space_solver_detects_outside_vectors():
    V = F5.array([[1, 0, 2], [0, 1, 3]])
    solver = RowSpaceSolver(F5, V)
    c = solver.coords(F5.array([[2, 1, 2]]))
    assert F5.equal(F5.reduce(c @ V), F5.array([[2, 1, 2]]))
    with pytest.raises(Inconsistent):
        solver.coords(F5.array([[0, 0, 1]]))


def test_vandermonde_requires_distinct_parameters():
    with pytest.raises(RepeatedParameter):
        vandermonde_data(F5, (1, 1))
    vandermonde_data(F5, (1, 2))


def test_generic_scalar_specializes_like_the_field():
    ring = GenericRing(2)
    x = (ring.q() + ring.Q(1)) * (ring.q() - ring.Q(2))
    assign = ParameterAssignment(Rationals(), Fraction(2), (Fraction(1), Fraction(3)))
    val = x.specialize(assign)
    assert val == Fraction((2 + 1) * (2 - 3))


def test_generic_inverse_only_for_monomial_units():
    ring = GenericRing(1)
    assert ring.reduce_scalar(ring.inv(ring.q()) * ring.q()) == ring.one
    with pytest.raises(NotAUnit):
        ring.inv(ring.q() + ring.one)


def test_rationals_exactness():
    dom = Rationals()
    A = dom.array([[1, 2], [3, 5]])
    assert rank(dom, A) == 2
    third = dom.reduce_scalar(dom.inv(Fraction(3)))
    assert third * 3 == Fraction(1)
