import itertools
from math import factorial

import pytest
from hypothesis import given, settings

from colorhodge.complex import (
    betti_numbers,
    boundary_ranks,
    boundary_squares_vanish,
    build_chain_complex,
    enumerate_ordered_partitions,
    euler_characteristic,
    is_face,
    make_partition,
    merge_at,
    stirling2,
)
from colorhodge.errors import BudgetExceeded, InputError
from colorhodge.exactla import RationalMatrix, rank
from colorhodge.graphs import Graph, GraphSequence, count_acyclic_orientations

from conftest import graphs, sequences


def surjection_partitions(n, k):
    """Ordered partitions as fibres of surjections {1..n} -> {1..k}."""
    out = set()
    for f in itertools.product(range(k), repeat=n):
        if len(set(f)) == k:
            out.add(tuple(tuple(v for v in range(1, n + 1) if f[v - 1] == b) for b in range(k)))
    return out


def dense_boundary(cc, r):
    return RationalMatrix.from_sparse(cc.dim(r - 1), cc.dim(r), cc.boundaries[r])


@pytest.mark.parametrize("n, k, count", [(3, 2, 6), (3, 3, 6), (4, 1, 1), (5, 3, 150)])
def test_ordered_partition_counts(n, k, count):
    parts = enumerate_ordered_partitions(n, k)
    assert len(parts) == count == factorial(k) * stirling2(n, k)
    assert parts == sorted(set(parts))
    assert set(parts) == surjection_partitions(n, k)


def test_partition_validation():
    assert make_partition([[3, 1], [2]], 3) == ((1, 3), (2,))
    for bad in ([[1], []], [[1, 2], [2]], [[1]]):
        with pytest.raises(InputError):
            make_partition(bad, 3)
    with pytest.raises(InputError):
        enumerate_ordered_partitions(3, 4)


def test_is_face_examples(pair, k3):
    assert is_face(((1, 2, 3, 4),), pair)
    assert not is_face(((1,), (2,), (3,)), GraphSequence.single(k3))
    assert is_face(((1, 2), (3, 4)), pair)
    assert not is_face(((1, 3), (2, 4)), pair)
    with pytest.raises(InputError):
        is_face(((1, 2),), pair)


def test_merge():
    assert merge_at(((3,), (1,), (2, 4)), 2) == ((3,), (1, 2, 4))


@pytest.mark.parametrize("seq, dims", [
    (GraphSequence.single(Graph.complete(3)), [1, 6, 0]),
    (GraphSequence(2, [[(1, 2)]]), [1, 0]),
    (GraphSequence(4, [[(1, 2)], [(3, 4)]]), [1, 2, 0, 0]),
])
def test_chain_dims_examples(seq, dims):
    cc = build_chain_complex(seq)
    assert [cc.dim(r) for r in cc.degrees] == dims
    # independent face count from surjections
    for r in cc.degrees:
        assert cc.dim(r) == sum(1 for p in surjection_partitions(seq.n, r + 2) if is_face(p, seq))


def test_degree_zero_boundary_is_minus_one():
    cc = build_chain_complex(GraphSequence.single(Graph.complete(3)))
    assert cc.boundaries[0] == {(0, s): -1 for s in range(6)}
    assert rank(dense_boundary(cc, 0)) == 1


@pytest.mark.parametrize("seq, betti", [
    (GraphSequence.single(Graph.complete(3)), {-1: 0, 0: 5, 1: 0}),
    (GraphSequence(2, [[(1, 2)]]), {-1: 1, 0: 0}),
    (GraphSequence(4, [[(1, 2)], [(3, 4)]]), {-1: 0, 0: 1, 1: 0, 2: 0}),
])
def test_betti_examples(seq, betti):
    assert betti_numbers(build_chain_complex(seq)) == betti


def test_vertex_guard():
    with pytest.raises(BudgetExceeded):
        build_chain_complex(GraphSequence.single(Graph.complete(8)))
    with pytest.raises(BudgetExceeded):
        build_chain_complex(GraphSequence.single(Graph.complete(4)), max_n=3)


@given(sequences(max_n=5, max_m=3))
@settings(max_examples=40, deadline=None)
def test_complex_invariants(seq):
    cc = build_chain_complex(seq)
    assert boundary_squares_vanish(cc)
    for r in range(1, cc.n - 1):
        if cc.dim(r) and cc.dim(r - 2):
            prod = dense_boundary(cc, r - 1) @ dense_boundary(cc, r)
            assert all(prod[i, j] == 0 for i in range(prod.rows) for j in range(prod.cols))
    sparse = boundary_ranks(cc)
    for r in range(0, cc.n - 1):
        if cc.dim(r) and cc.dim(r - 1):
            assert sparse[r] == rank(dense_boundary(cc, r))
    betti = betti_numbers(cc)
    assert euler_characteristic(cc.dims()) == euler_characteristic(betti)
    for r in cc.degrees:
        for face in cc.bases[r]:
            for perm in itertools.permutations(face):
                assert is_face(perm, seq)


@given(graphs(min_n=3, max_n=5, min_edges=1))
@settings(max_examples=40, deadline=None)
def test_single_graph_wedge_of_spheres(g):
    betti = betti_numbers(build_chain_complex(GraphSequence.single(g)))
    a = count_acyclic_orientations(g)
    assert betti == {r: (a - 1 if r == g.n - 3 else 0) for r in range(-1, g.n - 1)}
