"""Permutations, the rational group algebra of S_k, and Eulerian idempotents.

Permutations are tuples in one-line form ``(pi(1), ..., pi(k))``. Products
compose right to left, ``(s * t)(i) = s(t(i))``, and S_k acts on ordered
partitions by moving blocks: ``s . (B_1, ..., B_k) = (B_{s^-1(1)}, ..., B_{s^-1(k)})``,
which makes the action a homomorphism for this product.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InputError, InvariantViolation
from .exactla import RationalMatrix

Permutation = tuple[int, ...]

MAX_DEGREE = 8
_TABLE_MAX_DEGREE = 6


def identity(k: int) -> Permutation:
    return tuple(range(1, k + 1))


def compose(s: Permutation, t: Permutation) -> Permutation:
    return tuple(s[x - 1] for x in t)


def inverse(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for i, x in enumerate(s, start=1):
        out[x - 1] = i
    return tuple(out)


def descent_count(p: Permutation) -> int:
    return sum(1 for a, b in zip(p, p[1:]) if a > b)


def sign(p: Permutation) -> int:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        parity += length - 1
    return -1 if parity % 2 else 1


def act(s: Permutation, blocks: Sequence) -> tuple:
    """Return ``s . blocks``: the block at position p moves to position s(p)."""
    out = [None] * len(blocks)
    for p, b in enumerate(blocks):
        out[s[p] - 1] = b
    return tuple(out)


@lru_cache(maxsize=None)
def permutations(k: int) -> tuple[Permutation, ...]:
    return tuple(itertools.permutations(range(1, k + 1)))


@lru_cache(maxsize=None)
def _perm_index(k: int) -> dict[Permutation, int]:
    return {p: i for i, p in enumerate(permutations(k))}


@lru_cache(maxsize=None)
def _multiplication_table(k: int) -> list[list[int]]:
    perms = permutations(k)
    idx = _perm_index(k)
    return [[idx[compose(s, t)] for t in perms] for s in perms]


@dataclass(frozen=True)
class GroupAlgebraElement:
    """Finite sum of permutations of degree k with rational coefficients."""

    k: int
    coeffs: dict[Permutation, Fraction]

    def __init__(self, k: int, coeffs: dict[Permutation, object] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        clean = {}
        for p, c in items:
            p = tuple(p)
            if len(p) != k or sorted(p) != list(range(1, k + 1)):
                raise InputError(f"{p} is not a permutation of degree {k}")
            c = Fraction(c)
            if c:
                clean[p] = clean.get(p, Fraction(0)) + c
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", {p: c for p, c in clean.items() if c})

    @classmethod
    def unit(cls, k: int) -> GroupAlgebraElement:
        return cls(k, {identity(k): 1})

    @classmethod
    def zero(cls, k: int) -> GroupAlgebraElement:
        return cls(k, {})

    def __getitem__(self, p: Permutation) -> Fraction:
        return self.coeffs.get(tuple(p), Fraction(0))

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        _same_degree(self, other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, Fraction(0)) + c
        return GroupAlgebraElement(self.k, out)

    def __sub__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return self + other.scale(-1)

    def scale(self, c) -> GroupAlgebraElement:
        c = Fraction(c)
        return GroupAlgebraElement(self.k, {p: x * c for p, x in self.coeffs.items()})

    def __mul__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return convolve(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebraElement)
            and self.k == other.k
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.k, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def common_denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coeffs.values())) if self.coeffs else 1

    def integer_vector(self) -> tuple[int, list[int]]:
        """(scale, v) with v[i] = scale * coefficient of the i-th permutation."""
        d = self.common_denominator()
        perms = permutations(self.k)
        return d, [int(self[p] * d) for p in perms]


def _same_degree(a: GroupAlgebraElement, b: GroupAlgebraElement):
    if a.k != b.k:
        raise InputError(f"degree mismatch: {a.k} vs {b.k}")


def convolve(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """(a b)(s) = sum_t a(s t^-1) b(t)."""
    _same_degree(a, b)
    k = a.k
    da, va = a.integer_vector()
    db, vb = b.integer_vector()
    perms = permutations(k)
    acc = [0] * factorial(k)
    nb = [(j, y) for j, y in enumerate(vb) if y]
    if k <= _TABLE_MAX_DEGREE:
        table = _multiplication_table(k)
        for i, x in enumerate(va):
            if x:
                row = table[i]
                for j, y in nb:
                    acc[row[j]] += x * y
    else:
        idx = _perm_index(k)
        for i, x in enumerate(va):
            if x:
                s = perms[i]
                for j, y in nb:
                    acc[idx[compose(s, perms[j])]] += x * y
    den = da * db
    return GroupAlgebraElement(k, {perms[i]: Fraction(c, den) for i, c in enumerate(acc) if c})


def _rising_numerator(k: int, d: int) -> list[int]:
    """Integer coefficients in t of (t - d)(t - d + 1)...(t - d + k - 1)."""
    poly = [1]
    for i in range(k):
        shift = i - d
        nxt = [0] * (len(poly) + 1)
        for e, c in enumerate(poly):
            nxt[e + 1] += c
            nxt[e] += shift * c
        poly = nxt
    return poly


def descent_class_coefficients(k: int) -> dict[int, list[Fraction]]:
    """For each descent count d, the t-coefficients of binom(k + t - d - 1, k)."""
    kf = factorial(k)
    return {d: [Fraction(c, kf) for c in _rising_numerator(k, d)] for d in range(k)}


_cache_lock = threading.Lock()
_idempotent_cache: dict[int, tuple[GroupAlgebraElement, ...]] = {}


def eulerian_idempotents(k: int, max_k: int | None = MAX_DEGREE) -> tuple[GroupAlgebraElement, ...]:
    """(e_k^(1), ..., e_k^(k)) from the descent generating identity.

    The coefficient of a permutation p in e_k^(j) is sgn(p) times the t^j
    coefficient of binom(k + t - des(p) - 1, k).
    """
    if k < 1:
        raise InputError("degree must be at least 1")
    if max_k is not None and k > max_k:
        raise BudgetExceeded(f"degree {k} exceeds the idempotent guard of {max_k}")
    with _cache_lock:
        cached = _idempotent_cache.get(k)
        if cached is not None:
            return cached
        by_class = descent_class_coefficients(k)
        if any(cs[0] for cs in by_class.values()):
            raise InvariantViolation("nonzero t^0 term in the descent generating identity")
        pieces: list[dict[Permutation, Fraction]] = [{} for _ in range(k)]
        for p in permutations(k):
            cs = by_class[descent_count(p)]
            sg = sign(p)
            for j in range(1, k + 1):
                if cs[j]:
                    pieces[j - 1][p] = sg * cs[j]
        result = tuple(GroupAlgebraElement(k, c) for c in pieces)
        _idempotent_cache[k] = result
        return result


def eulerian_idempotent(k: int, j: int, max_k: int | None = MAX_DEGREE) -> GroupAlgebraElement:
    """e_k^(j); zero when j is outside 1..k."""
    if not 1 <= j <= k:
        return GroupAlgebraElement.zero(k)
    return eulerian_idempotents(k, max_k)[j - 1]


def action_matrix(x: GroupAlgebraElement, basis: Sequence[tuple]) -> RationalMatrix:
    """Matrix of x acting on the span of ``basis`` by permuting block positions.

    Entry (b', b) is the sum of x(p) over p with p . b = b'.
    """
    index = {b: i for i, b in enumerate(basis)}
    size = len(basis)
    entries: dict[tuple[int, int], Fraction] = {}
    for col, b in enumerate(basis):
        if len(b) != x.k:
            raise InputError(f"element of degree {x.k} cannot act on {len(b)} blocks")
        for p, c in x.coeffs.items():
            image = act(p, b)
            row = index.get(image)
            if row is None:
                raise InvariantViolation(f"basis is not closed under the action: {image} missing")
            entries[(row, col)] = entries.get((row, col), Fraction(0)) + c
    return RationalMatrix.from_sparse(size, size, entries)
