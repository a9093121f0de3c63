"""Integer polynomials in lambda and chromatic polynomials of graphs and graph sequences."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InputError
from .graphs import Edge, Graph, GraphSequence, union

COLORING_BUDGET = 10**8

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class IntegerPolynomial:
    """Dense polynomial; ``coeffs[k]`` is the coefficient of lambda^k."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntegerPolynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntegerPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    def __neg__(self) -> IntegerPolynomial:
        return IntegerPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return self + (-other)

    def __mul__(self, other: IntegerPolynomial | int) -> IntegerPolynomial:
        if isinstance(other, int):
            return IntegerPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntegerPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def coefficient(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def negate_variable(self) -> IntegerPolynomial:
        """p(-lambda)."""
        return IntegerPolynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def render(self, var: str = "λ", unicode_powers: bool = False) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else (
                    var + str(k).translate(_SUPERSCRIPTS) if unicode_powers else f"{var}^{k}"
                )
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.render()


def negate_variable(p: IntegerPolynomial) -> IntegerPolynomial:
    return p.negate_variable()


def coefficient(p: IntegerPolynomial, j: int) -> int:
    return p.coefficient(j)


def evaluate(p: IntegerPolynomial, x: int) -> int:
    return p.evaluate(x)


LAMBDA = IntegerPolynomial([0, 1])


def _contract(n: int, edges: frozenset[Edge], e: Edge) -> tuple[int, frozenset[Edge]]:
    """Merge the endpoints of ``e`` (keep the smaller label), relabel to 1..n-1."""
    keep, gone = e

    def relabel(v):
        if v == gone:
            v = keep
        return v - 1 if v > gone else v

    out = set()
    for u, v in edges:
        if (u, v) == e:
            continue
        a, b = relabel(u), relabel(v)
        if a != b:
            out.add((a, b) if a < b else (b, a))
    return n - 1, frozenset(out)


@lru_cache(maxsize=None)
def _chromatic_coeffs(n: int, edges: frozenset[Edge]) -> tuple[int, ...]:
    if not edges:
        return IntegerPolynomial.monomial(n).coeffs
    e = max(edges)
    deleted = IntegerPolynomial(_chromatic_coeffs(n, edges - {e}))
    cn, cedges = _contract(n, edges, e)
    contracted = IntegerPolynomial(_chromatic_coeffs(cn, cedges))
    return (deleted - contracted).coeffs


def chromatic_polynomial(g: Graph) -> IntegerPolynomial:
    """Chromatic polynomial by memoized deletion-contraction."""
    return IntegerPolynomial(_chromatic_coeffs(g.n, g.edge_set))


def _check_budget(n: int, lam: int, budget: int | None):
    if budget is not None and n * lam**n > budget:
        raise BudgetExceeded(f"enumerating {lam}^{n} colorings exceeds the budget of {budget}")


def count_proper_colorings(g: Graph, lam: int, budget: int | None = COLORING_BUDGET) -> int:
    """Brute-force count of proper colorings with ``lam`` colors."""
    if lam < 0:
        raise InputError("number of colors must be nonnegative")
    _check_budget(g.n, lam, budget)
    edges = [(u - 1, v - 1) for u, v in g.edges]
    return sum(
        1
        for c in itertools.product(range(lam), repeat=g.n)
        if all(c[u] != c[v] for u, v in edges)
    )


def count_colorings_proper_for_some(
    seq: GraphSequence, lam: int, budget: int | None = COLORING_BUDGET
) -> int:
    """Brute-force count of colorings that are proper for at least one member graph."""
    if lam < 0:
        raise InputError("number of colors must be nonnegative")
    _check_budget(seq.n, lam, budget)
    members = [[(u - 1, v - 1) for u, v in g.edges] for g in seq.graphs]
    return sum(
        1
        for c in itertools.product(range(lam), repeat=seq.n)
        if any(all(c[u] != c[v] for u, v in edges) for edges in members)
    )


def _inclusion_exclusion(n: int, graphs: Sequence[Graph]) -> IntegerPolynomial:
    total = IntegerPolynomial()
    for size in range(1, len(graphs) + 1):
        sign = 1 if size % 2 else -1
        for subset in itertools.combinations(graphs, size):
            total = total + chromatic_polynomial(union(subset)) * sign
    return total


def sequence_chromatic_polynomial(seq: GraphSequence) -> IntegerPolynomial:
    """Colorings proper for at least one member, via inclusion-exclusion over unions."""
    return _inclusion_exclusion(seq.n, seq.graphs)


@dataclass(frozen=True)
class RecursionCheck:
    holds: bool
    lhs: IntegerPolynomial
    rhs: IntegerPolynomial


def verify_recursion(seq: GraphSequence) -> RecursionCheck:
    """Check chi(G', G_{m-1}) - chi(G', G_{m-1} u G_m) + chi(G', G_m) == chi(G).

    Here G' = (G_1, ..., G_{m-2}); for m = 2 it is empty and the identity is
    two-set inclusion-exclusion.
    """
    if seq.m < 2:
        raise InputError("the recursion needs at least two graphs")
    prefix = list(seq.graphs[:-2])
    a, b = seq.graphs[-2], seq.graphs[-1]

    def chi(tail):
        return sequence_chromatic_polynomial(GraphSequence(seq.n, prefix + [tail]))

    rhs = chi(a) - chi(union([a, b])) + chi(b)
    lhs = sequence_chromatic_polynomial(seq)
    return RecursionCheck(lhs == rhs, lhs, rhs)
