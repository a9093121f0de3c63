from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorhodge.errors import InputError
from colorhodge.exactla import (
    RationalMatrix,
    SparseEchelon,
    equals,
    image_basis,
    multiply,
    pivot_columns,
    rank,
    solve,
    sparse_pivot_columns,
    sparse_rank,
    to_sparse_columns,
    trace,
)

half = Fraction(1, 2)
PROJ = RationalMatrix([[half, half], [half, half]])


def gauss_rank(rows):
    """Textbook Fraction elimination, used as an independent oracle."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


matrices = st.integers(1, 6).flatmap(
    lambda rows: st.integers(1, 6).flatmap(
        lambda cols: st.lists(
            st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4) | st.just(Fraction(0)),
                     min_size=cols, max_size=cols),
            min_size=rows, max_size=rows)))


def test_rank_examples():
    assert rank(RationalMatrix.zeros(3, 4)) == 0
    assert rank(RationalMatrix.identity(5)) == 5
    assert rank(RationalMatrix([[-1] * 6])) == 1
    assert rank(RationalMatrix([], 0)) == 0


def test_image_basis_examples():
    assert image_basis(RationalMatrix.identity(3)) == RationalMatrix.identity(3)
    basis = image_basis(PROJ)
    assert basis.shape == (2, 1) and basis.column(0) == (half, half)
    assert image_basis(RationalMatrix.zeros(2, 2)).cols == 0


def test_products_and_trace():
    m = RationalMatrix([[1, 2], [3, Fraction(1, 3)]])
    assert multiply(RationalMatrix.identity(2), m) == m
    assert trace(PROJ) == 1
    assert equals(PROJ @ PROJ, PROJ)
    with pytest.raises(InputError):
        multiply(m, RationalMatrix.identity(3))
    with pytest.raises(InputError):
        trace(RationalMatrix([[1, 2]]))


def test_solve():
    a = RationalMatrix([[1, 0], [1, 1], [0, 2]])
    x = RationalMatrix([[Fraction(1, 3)], [-2]])
    assert solve(a, a @ x) == x
    with pytest.raises(InputError):
        solve(a, RationalMatrix([[1], [0], [0]]))


@given(matrices)
@settings(max_examples=150, deadline=None)
def test_engines_agree(rows):
    m = RationalMatrix(rows)
    expected = gauss_rank(rows)
    assert rank(m) == expected
    assert rank(m.transpose()) == expected
    assert sparse_rank(to_sparse_columns(m)) == expected
    assert pivot_columns(m) == sparse_pivot_columns(to_sparse_columns(m))
    assert image_basis(m).cols == expected


@given(matrices, matrices)
@settings(max_examples=80, deadline=None)
def test_rank_of_product_bounded(a, b):
    a, b = RationalMatrix(a), RationalMatrix(b)
    if a.cols != b.rows:
        b = RationalMatrix([list(b.row(i % b.rows)) for i in range(a.cols)])
    assert rank(a @ b) <= min(rank(a), rank(b))


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_idempotent_trace_equals_rank(rows):
    # P = B (B^T B)^-1 B^T is the orthogonal projection onto the column space
    b = image_basis(RationalMatrix(rows))
    if not b.cols:
        return
    bt = b.transpose()
    gram_inv = solve(bt @ b, RationalMatrix.identity(b.cols))
    p = b @ gram_inv @ bt
    assert p @ p == p
    t = trace(p)
    assert t.denominator == 1 and t == rank(p) == b.cols


def test_elimination_is_deterministic():
    m = RationalMatrix([[0, 2, 4], [0, 1, 2], [3, 0, 1]])
    assert pivot_columns(m) == pivot_columns(m) == [0, 1]
    assert image_basis(m) == image_basis(RationalMatrix(m.tolist()))


def test_sparse_echelon_membership():
    ech = SparseEchelon()
    assert ech.add({0: 2, 1: 4})
    assert not ech.add({0: -1, 1: -2})
    assert ech.add({1: 3})
    assert ech.contains({0: 5, 1: 7}) and len(ech) == 2
