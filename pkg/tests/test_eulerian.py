from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorhodge.complex import build_chain_complex
from colorhodge.errors import BudgetExceeded, InputError, InvariantViolation
from colorhodge.eulerian import (
    GroupAlgebraElement,
    act,
    action_matrix,
    compose,
    convolve,
    descent_class_coefficients,
    descent_count,
    eulerian_idempotent,
    eulerian_idempotents,
    identity,
    inverse,
    permutations,
    sign,
)
from colorhodge.exactla import RationalMatrix, rank
from colorhodge.graphs import Graph, GraphSequence

from conftest import sequences

half = Fraction(1, 2)


def binomial_poly_coeffs(k, d, t_values):
    """Oracle for binom(k + t - d - 1, k): evaluate the falling product directly."""
    vals = []
    for t in t_values:
        num = 1
        for i in range(k):
            num *= k + t - d - 1 - i
        vals.append(Fraction(num, factorial(k)))
    return vals


def test_descents():
    assert descent_count((1, 2, 3, 4)) == 0
    assert descent_count((4, 3, 2, 1)) == 3
    assert descent_count((2, 1, 3)) == 1


def test_permutation_helpers():
    s, t = (2, 3, 1), (2, 1, 3)
    assert compose(s, t) == (3, 2, 1)
    assert compose(s, inverse(s)) == identity(3)
    assert sign((2, 1, 3)) == -1 and sign((2, 3, 1)) == 1
    assert act((2, 1), ("a", "b")) == ("b", "a")
    # block at position p moves to position s(p)
    assert act((2, 3, 1), ("a", "b", "c")) == ("c", "a", "b")


@pytest.mark.parametrize("k", range(1, 7))
def test_generating_identity_reproduced(k):
    # the polynomial in t per descent class matches direct binomial evaluation
    classes = descent_class_coefficients(k)
    ts = list(range(-3, k + 3))
    for d, cs in classes.items():
        assert cs[0] == 0
        assert [sum(c * t**e for e, c in enumerate(cs)) for t in ts] == binomial_poly_coeffs(k, d, ts)


def test_small_idempotents():
    (e1,) = eulerian_idempotents(1)
    assert e1 == GroupAlgebraElement.unit(1)
    a, b = eulerian_idempotents(2)
    assert a == GroupAlgebraElement(2, {(1, 2): half, (2, 1): half})
    assert b == GroupAlgebraElement(2, {(1, 2): half, (2, 1): -half})
    total = sum(eulerian_idempotents(3), GroupAlgebraElement.zero(3))
    assert total == GroupAlgebraElement.unit(3)


def test_convolve_examples():
    a, b = eulerian_idempotents(2)
    assert convolve(GroupAlgebraElement.unit(2), a) == a
    assert convolve(a, b).is_zero()
    assert convolve(a, a) == a
    with pytest.raises(InputError):
        convolve(a, GroupAlgebraElement.unit(3))


@pytest.mark.parametrize("k", range(1, 6))
def test_orthogonal_idempotents(k):
    es = eulerian_idempotents(k)
    for i, a in enumerate(es):
        for j, b in enumerate(es):
            assert convolve(a, b) == (a if i == j else GroupAlgebraElement.zero(k))


def test_regular_ranks_are_stirling_first_kind():
    expected = {4: [6, 11, 6, 1], 5: [24, 50, 35, 10, 1]}
    for k, dims in expected.items():
        assert [e[identity(k)] * factorial(k) for e in eulerian_idempotents(k)] == dims


def test_guard_and_range():
    with pytest.raises(BudgetExceeded):
        eulerian_idempotents(9)
    with pytest.raises(InputError):
        eulerian_idempotents(0)
    assert eulerian_idempotent(3, 4).is_zero()


def test_k7_uses_direct_composition():
    es = eulerian_idempotents(7)
    assert sum(es, GroupAlgebraElement.zero(7)) == GroupAlgebraElement.unit(7)
    s = GroupAlgebraElement(7, {(2, 1, 3, 4, 5, 6, 7): 1})
    assert convolve(s, s) == GroupAlgebraElement.unit(7)


def test_action_matrix_examples(pair):
    basis = build_chain_complex(pair).bases[0]
    assert basis == (((1, 2), (3, 4)), ((3, 4), (1, 2)))
    a, b = eulerian_idempotents(2)
    assert action_matrix(GroupAlgebraElement.unit(2), basis) == RationalMatrix.identity(2)
    assert action_matrix(b, basis) == RationalMatrix([[half, -half], [-half, half]])
    assert action_matrix(a, basis) == RationalMatrix([[half, half], [half, half]])
    with pytest.raises(InvariantViolation):
        action_matrix(a, basis[:1])
    with pytest.raises(InputError):
        action_matrix(GroupAlgebraElement.unit(3), basis)


elements = st.integers(2, 4).flatmap(
    lambda k: st.tuples(
        st.just(k),
        st.dictionaries(st.sampled_from(permutations(k)), st.integers(-3, 3), max_size=6),
        st.dictionaries(st.sampled_from(permutations(k)), st.integers(-3, 3), max_size=6),
    ))


@given(elements)
@settings(max_examples=40, deadline=None)
def test_action_is_homomorphism(data):
    k, xa, xb = data
    a, b = GroupAlgebraElement(k, xa), GroupAlgebraElement(k, xb)
    # one free orbit: the k! orderings of k blocks around a single edge
    seq = GraphSequence.single(Graph(k + 1, [(1, 2)]))
    basis = build_chain_complex(seq).bases[k - 2]
    assert len(basis) == factorial(k)
    assert action_matrix(convolve(a, b), basis) == action_matrix(a, basis) @ action_matrix(b, basis)


@given(sequences(max_n=5, max_m=2))
@settings(max_examples=15, deadline=None)
def test_commutation_with_boundary(seq):
    cc = build_chain_complex(seq)
    for r in range(0, cc.n - 1):
        if not cc.dim(r):
            continue
        d = RationalMatrix.from_sparse(cc.dim(r - 1), cc.dim(r), cc.boundaries[r])
        for j in range(1, r + 3):
            p = action_matrix(eulerian_idempotent(r + 2, j), cc.bases[r])
            q = action_matrix(eulerian_idempotent(r + 1, j), cc.bases[r - 1])
            assert d @ p == q @ d
            assert rank(p) == sum(p[i, i] for i in range(p.rows))
