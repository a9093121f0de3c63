"""Intersections of coloring complexes as chain complexes.

A face of degree r is an ordered partition of {1..n} into r + 2 blocks such
that, for every graph in the sequence, some block contains an edge of it.
Degrees run from -1 (the one-block partition) to n - 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Iterator, Sequence

from .errors import BudgetExceeded, InputError, InvariantViolation
from .exactla import SparseVector, sparse_rank
from .graphs import GraphSequence

Block = tuple[int, ...]
OrderedSetPartition = tuple[Block, ...]

MAX_VERTICES = 7


def make_partition(blocks: Sequence[Sequence[int]], n: int | None = None) -> OrderedSetPartition:
    """Validate and canonicalize (sort each block) an ordered set partition."""
    p = tuple(tuple(sorted(b)) for b in blocks)
    if any(not b for b in p):
        raise InputError("ordered partition has an empty block")
    flat = [v for b in p for v in b]
    if len(flat) != len(set(flat)):
        raise InputError("ordered partition blocks overlap")
    if n is not None and sorted(flat) != list(range(1, n + 1)):
        raise InputError(f"blocks do not cover 1..{n}")
    return p


def stirling2(n: int, k: int) -> int:
    return sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1)) // factorial(k)


def _set_partitions(n: int, k: int) -> Iterator[list[list[int]]]:
    """Unordered partitions of 1..n into k blocks via restricted growth strings."""

    def rec(v, blocks):
        remaining = n - v + 1
        if len(blocks) + remaining < k:
            return
        if v > n:
            if len(blocks) == k:
                yield blocks
            return
        for b in blocks:
            b.append(v)
            yield from rec(v + 1, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([v])
            yield from rec(v + 1, blocks)
            blocks.pop()

    yield from rec(1, [])


def set_partitions(n: int, k: int) -> list[tuple[Block, ...]]:
    return [tuple(tuple(b) for b in p) for p in _set_partitions(n, k)]


def enumerate_ordered_partitions(n: int, k: int) -> list[OrderedSetPartition]:
    """All k! S(n, k) ordered partitions of 1..n into k blocks, sorted."""
    if not 1 <= k <= n:
        raise InputError(f"need 1 <= k <= n, got n={n}, k={k}")
    out = [
        perm
        for blocks in set_partitions(n, k)
        for perm in itertools.permutations(blocks)
    ]
    out.sort()
    return out


def _block_has_edge_of(block: Block, edges) -> bool:
    s = set(block)
    return any(u in s and v in s for u, v in edges)


def is_face(p: OrderedSetPartition, seq: GraphSequence) -> bool:
    flat = sorted(v for b in p for v in b)
    if flat != list(range(1, seq.n + 1)):
        raise InputError(f"partition {p} is not on the vertex set 1..{seq.n}")
    return all(any(_block_has_edge_of(b, g.edges) for b in p) for g in seq.graphs)


def _is_face_unchecked(blocks, edge_lists) -> bool:
    sets = [set(b) for b in blocks]
    return all(
        any(u in s and v in s for s in sets for u, v in edges) for edges in edge_lists
    )


def merge_at(p: OrderedSetPartition, i: int) -> OrderedSetPartition:
    """Merge blocks i and i+1 (1-based)."""
    merged = tuple(sorted(p[i - 1] + p[i]))
    return p[: i - 1] + (merged,) + p[i + 1:]


@dataclass(frozen=True)
class ChainComplexData:
    """Bases per degree plus sparse integer boundary matrices.

    ``boundaries[r]`` maps (target index, source index) -> integer entry for
    the boundary from degree r to degree r - 1, r >= 0.
    """

    n: int
    bases: dict[int, tuple[OrderedSetPartition, ...]]
    boundaries: dict[int, dict[tuple[int, int], int]]
    index: dict[int, dict[OrderedSetPartition, int]] = field(repr=False)
    # columns[r][s] = [(target, entry), ...], the same data as boundaries[r]
    columns: dict[int, list[list[tuple[int, int]]]] = field(repr=False, default_factory=dict)

    @property
    def degrees(self) -> range:
        return range(-1, self.n - 1)

    def dim(self, r: int) -> int:
        return len(self.bases.get(r, ()))

    def dims(self) -> dict[int, int]:
        return {r: self.dim(r) for r in self.degrees}

    def top_degree(self) -> int:
        return max(r for r in self.degrees if self.dim(r))

    def boundary_columns(self, r: int) -> list[SparseVector]:
        cols: list[SparseVector] = [{} for _ in range(self.dim(r))]
        for (t, s), v in self.boundaries.get(r, {}).items():
            cols[s][t] = v
        return cols

    def boundary_of(self, r: int, vec: SparseVector) -> SparseVector:
        """Apply the degree-r boundary to a sparse chain (basis index -> coeff)."""
        if r <= -1:
            return {}
        out: SparseVector = {}
        cols = self.columns[r]
        for s, c in vec.items():
            for t, v in cols[s]:
                out[t] = out.get(t, 0) + c * v
        return {t: v for t, v in out.items() if v}


def check_vertex_guard(n: int, max_n: int | None):
    if max_n is not None and n > max_n:
        raise BudgetExceeded(f"n = {n} exceeds the vertex guard of {max_n}")


def build_chain_complex(seq: GraphSequence, max_n: int | None = MAX_VERTICES) -> ChainComplexData:
    n = seq.n
    check_vertex_guard(n, max_n)
    if n < 1:
        raise InputError("need at least one vertex")
    edge_lists = [g.edges for g in seq.graphs]
    bases: dict[int, tuple[OrderedSetPartition, ...]] = {}
    index: dict[int, dict[OrderedSetPartition, int]] = {}
    for r in range(-1, n - 1):
        faces = tuple(
            p for p in enumerate_ordered_partitions(n, r + 2) if _is_face_unchecked(p, edge_lists)
        )
        bases[r] = faces
        index[r] = {p: i for i, p in enumerate(faces)}
    boundaries: dict[int, dict[tuple[int, int], int]] = {}
    for r in range(0, n - 1):
        entries: dict[tuple[int, int], int] = {}
        tgt = index[r - 1]
        for s, face in enumerate(bases[r]):
            for i in range(1, r + 2):
                key = (tgt[merge_at(face, i)], s)
                entries[key] = entries.get(key, 0) + (-1) ** i
        boundaries[r] = {k: v for k, v in entries.items() if v}
    columns: dict[int, list[list[tuple[int, int]]]] = {}
    for r, entries in boundaries.items():
        cols: list[list[tuple[int, int]]] = [[] for _ in bases[r]]
        for (t, s), v in sorted(entries.items()):
            cols[s].append((t, v))
        columns[r] = cols
    cc = ChainComplexData(n, bases, boundaries, index, columns)
    if cc.dim(-1) != 1:
        raise InvariantViolation("the one-block partition must be a face")
    return cc


def boundary_squares_vanish(cc: ChainComplexData) -> bool:
    """Check that d_{r-1} d_r = 0 for every r, column by column."""
    for r in range(1, cc.n - 1):
        for s in range(cc.dim(r)):
            if cc.boundary_of(r - 1, cc.boundary_of(r, {s: 1})):
                return False
    return True


def boundary_ranks(cc: ChainComplexData) -> dict[int, int]:
    """rank of the boundary out of each degree; zero out of degree -1."""
    ranks = {-1: 0}
    for r in range(0, cc.n - 1):
        ranks[r] = sparse_rank(cc.boundary_columns(r)) if cc.dim(r) and cc.dim(r - 1) else 0
    return ranks


def betti_numbers(cc: ChainComplexData) -> dict[int, int]:
    """dim H_r = dim C_r - rank d_r - rank d_{r+1}, over the rationals."""
    ranks = boundary_ranks(cc)
    return {
        r: cc.dim(r) - ranks[r] - ranks.get(r + 1, 0)
        for r in cc.degrees
    }


def euler_characteristic(dims: dict[int, int]) -> int:
    return sum((-1) ** (r % 2) * d for r, d in dims.items())
