"""Simple graphs on the vertex set 1..n and sequences of such graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator

from .errors import BudgetExceeded, InputError

Edge = tuple[int, int]

MAX_ORIENTATION_EDGES = 24


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
        normed = set()
        for e in edges:
            e = tuple(e)
            if len(e) != 2:
                raise InputError(f"edge {e!r} is not a vertex pair")
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int)):
                raise InputError(f"edge {e!r} has non-integer endpoints")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge {e!r} has an endpoint outside 1..{n}")
            pair = normalize_edge(u, v)
            if pair in normed:
                raise InputError(f"duplicate edge {pair!r}")
            normed.add(pair)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(normed)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, itertools.combinations(range(1, n + 1), 2))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def __len__(self):
        return len(self.edges)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {1}
        stack = [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __str__(self):
        return "{" + ",".join(f"{u}{v}" if self.n < 10 else f"{u}-{v}" for u, v in self.edges) + "}"


@dataclass(frozen=True)
class GraphSequence:
    n: int
    graphs: tuple[Graph, ...]

    def __init__(self, n: int, graphs: Iterable[Graph | Iterable[Iterable[int]]]):
        members = []
        for i, g in enumerate(graphs, start=1):
            if not isinstance(g, Graph):
                g = Graph(n, g)
            if g.n != n:
                raise InputError(f"graph {i} has {g.n} vertices, expected {n}")
            if not g.edges:
                raise InputError(f"graph {i} is empty; every member must have an edge")
            members.append(g)
        if not members:
            raise InputError("a graph sequence needs at least one graph")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "graphs", tuple(members))

    @classmethod
    def single(cls, g: Graph) -> GraphSequence:
        return cls(g.n, [g])

    @property
    def m(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.graphs) + f"; n={self.n})"


@dataclass(frozen=True)
class Diagonal:
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class CycleFreeVerdict:
    ok: bool
    shared_edge: Edge | None = None
    shared_between: tuple[int, int] | None = None
    cyclic_diagonal: Diagonal | None = None

    def __bool__(self):
        return self.ok

    def witness(self) -> str:
        if self.shared_edge is not None:
            i, j = self.shared_between
            return f"graphs {i} and {j} share edge {self.shared_edge}"
        if self.cyclic_diagonal is not None:
            return f"diagonal {list(self.cyclic_diagonal.edges)} contains a cycle"
        return ""


def union(gs: Iterable[Graph]) -> Graph:
    gs = list(gs)
    if not gs:
        raise InputError("union of no graphs")
    n = gs[0].n
    if any(g.n != n for g in gs):
        raise InputError("union of graphs on different vertex counts")
    return Graph(n, set().union(*(g.edge_set for g in gs)))


def diagonals(seq: GraphSequence) -> Iterator[Diagonal]:
    for choice in itertools.product(*(g.edges for g in seq.graphs)):
        yield Diagonal(tuple(choice))


def count_diagonals(seq: GraphSequence) -> int:
    return prod(len(g.edges) for g in seq.graphs)


def _has_cycle(n: int, edges: Iterable[Edge]) -> bool:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


def is_diagonally_cycle_free(seq: GraphSequence) -> CycleFreeVerdict:
    """Edge sets pairwise disjoint and every diagonal a forest on V.

    On failure the verdict carries one witness: the first shared edge found,
    or the first cyclic diagonal in enumeration order.
    """
    owner: dict[Edge, int] = {}
    for i, g in enumerate(seq.graphs, start=1):
        for e in g.edges:
            if e in owner:
                return CycleFreeVerdict(False, shared_edge=e, shared_between=(owner[e], i))
            owner[e] = i
    for d in diagonals(seq):
        if _has_cycle(seq.n, d.edges):
            return CycleFreeVerdict(False, cyclic_diagonal=d)
    return CycleFreeVerdict(True)


def _orientation_is_acyclic(n: int, arcs: list[Edge]) -> bool:
    indeg = [0] * (n + 1)
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    ready = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == n


def count_acyclic_orientations(g: Graph, max_edges: int = MAX_ORIENTATION_EDGES) -> int:
    """Count acyclic orientations by checking all 2^|E| of them."""
    if len(g.edges) > max_edges:
        raise BudgetExceeded(f"{len(g.edges)} edges exceeds the orientation budget of {max_edges}")
    total = 0
    for flips in itertools.product((False, True), repeat=len(g.edges)):
        arcs = [(v, u) if f else (u, v) for (u, v), f in zip(g.edges, flips)]
        if _orientation_is_acyclic(g.n, arcs):
            total += 1
    return total
