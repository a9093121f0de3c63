"""Hodge decomposition of a coloring complex by Eulerian idempotents.

S_k permutes the blocks of k-block faces freely, so C_r splits into orbits,
each a copy of the regular representation of S_{r+2}. In orbit coordinates
(face ``s . rep`` indexed by ``s``) the projection e_k^(j) acts by the same
k! x k! block on every orbit: entry (p, s) = e(p s^-1). Ranks, pivot
columns and coordinate solves are computed once per (k, j) on that block
and reused for every orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .complex import ChainComplexData, OrderedSetPartition
from .errors import InvariantViolation
from .exactla import (
    RationalMatrix,
    SparseVector,
    rank,
    solve,
    sparse_pivot_columns,
    sparse_rank,
)
from .eulerian import (
    MAX_DEGREE,
    _multiplication_table,
    _perm_index,
    _TABLE_MAX_DEGREE,
    act,
    action_matrix,
    compose,
    eulerian_idempotent,
    permutations,
)


@dataclass(frozen=True)
class RegularPiece:
    """e_k^(j) acting on one regular orbit, scaled to integers.

    ``columns[s]`` is the image of the orbit element indexed by ``s``, as a
    sparse vector over permutation indices, multiplied by ``scale``.
    """

    k: int
    j: int
    scale: int
    columns: tuple[dict[int, int], ...]
    pivots: tuple[int, ...]
    # rows where columns[pivots] is invertible, with that inverse
    solve_rows: tuple[int, ...]
    solve_inverse: RationalMatrix

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _product_index(k: int):
    if k <= _TABLE_MAX_DEGREE:
        table = _multiplication_table(k)
        return lambda a, b: table[a][b]
    perms = permutations(k)
    idx = _perm_index(k)
    return lambda a, b: idx[compose(perms[a], perms[b])]


@lru_cache(maxsize=None)
def regular_piece(k: int, j: int, max_k: int | None = MAX_DEGREE) -> RegularPiece:
    x = eulerian_idempotent(k, j, max_k)
    scale, vec = x.integer_vector()
    mul = _product_index(k)
    support = [(p, c) for p, c in enumerate(vec) if c]
    columns = []
    for s in range(factorial(k)):
        col: dict[int, int] = {}
        for p, c in support:
            col[mul(p, s)] = c
        columns.append(col)
    pivots = sparse_pivot_columns(columns)
    if pivots:
        size = factorial(k)
        sub_t = [columns[s] for s in pivots]
        # pick rows by eliminating the transposed pivot block
        rows_as_cols = [{i: col[r] for i, col in enumerate(sub_t) if r in col} for r in range(size)]
        solve_rows = tuple(sparse_pivot_columns(rows_as_cols))
        sub = RationalMatrix([[columns[s].get(r, 0) for s in pivots] for r in solve_rows])
        inv = solve(sub, RationalMatrix.identity(len(pivots)))
    else:
        solve_rows = ()
        inv = RationalMatrix([], 0)
    return RegularPiece(k, j, scale, tuple(columns), tuple(pivots), solve_rows, inv)


@dataclass
class DegreeOrbits:
    """Orbit bookkeeping for one degree: face index <-> (orbit, permutation index)."""

    k: int
    reps: list[OrderedSetPartition]
    members: list[list[int]]  # members[o][perm index] = basis index
    where: list[tuple[int, int]]  # where[basis index] = (orbit, perm index)


def degree_orbits(basis: tuple[OrderedSetPartition, ...]) -> DegreeOrbits:
    if not basis:
        return DegreeOrbits(0, [], [], [])
    k = len(basis[0])
    perms = permutations(k)
    index = {b: i for i, b in enumerate(basis)}
    orbit_of: dict[tuple, int] = {}
    reps: list[OrderedSetPartition] = []
    members: list[list[int]] = []
    where: list[tuple[int, int]] = [(-1, -1)] * len(basis)
    for i, b in enumerate(basis):
        key = tuple(sorted(b))
        if key in orbit_of:
            continue
        o = len(reps)
        orbit_of[key] = o
        reps.append(key)
        row = []
        for pi, p in enumerate(perms):
            face = act(p, key)
            bi = index.get(face)
            if bi is None:
                raise InvariantViolation(f"face set not closed under reordering: {face} missing")
            row.append(bi)
            where[bi] = (o, pi)
        members.append(row)
    return DegreeOrbits(k, reps, members, where)


@dataclass
class HodgeTable:
    n: int
    m: int
    chain_dims: dict[int, dict[int, int]]
    homology_dims: dict[int, dict[int, int]]
    euler: dict[int, int]
    euler_from_homology: dict[int, int] = field(default_factory=dict)

    @property
    def pieces(self) -> range:
        return range(1, self.n + 1)

    @property
    def degrees(self) -> range:
        return range(-1, self.n - 1)

    def betti(self) -> dict[int, int]:
        return {i: sum(self.homology_dims[i].values()) for i in self.degrees}


class HodgeDecomposition:
    """Per-complex projections, images and restricted boundaries."""

    def __init__(self, cc: ChainComplexData, max_k: int | None = MAX_DEGREE):
        self.cc = cc
        self.max_k = max_k
        self.orbits = {r: degree_orbits(cc.bases[r]) for r in cc.degrees}

    def piece(self, r: int, j: int) -> RegularPiece | None:
        k = r + 2
        if not self.cc.dim(r) or not 1 <= j <= k:
            return None
        return regular_piece(k, j, self.max_k)

    # -- chain level -------------------------------------------------------

    def chain_dim(self, r: int, j: int) -> int:
        """Rank of the projection: block-diagonal with one regular block per orbit."""
        pc = self.piece(r, j)
        return 0 if pc is None else len(self.orbits[r].reps) * pc.rank

    def chain_dim_by_trace(self, r: int, j: int) -> int:
        """Trace of the projection, summed face by face over stabilizers."""
        if not self.cc.dim(r) or not 1 <= j <= r + 2:
            return 0
        x = eulerian_idempotent(r + 2, j, self.max_k)
        total = Fraction(0)
        for b in self.cc.bases[r]:
            for p, c in x.coeffs.items():
                if act(p, b) == b:
                    total += c
        if total.denominator != 1:
            raise InvariantViolation(f"non-integral trace {total} at degree {r}, piece {j}")
        return int(total)

    def dense_chain_dim(self, r: int, j: int) -> int:
        """Rank of the full action matrix; slow, for cross-checking."""
        if not self.cc.dim(r) or not 1 <= j <= r + 2:
            return 0
        return rank(action_matrix(eulerian_idempotent(r + 2, j, self.max_k), self.cc.bases[r]))

    def project(self, r: int, j: int, vec: SparseVector) -> tuple[int, SparseVector]:
        """(scale, scale * P_r^(j) vec) for an integer chain ``vec``."""
        pc = self.piece(r, j)
        if pc is None:
            return 1, {}
        orb = self.orbits[r]
        out: SparseVector = {}
        for s, c in vec.items():
            o, pi = orb.where[s]
            row = orb.members[o]
            for p, v in pc.columns[pi].items():
                t = row[p]
                out[t] = out.get(t, 0) + c * v
        return pc.scale, {t: v for t, v in out.items() if v}

    def image_basis(self, r: int, j: int) -> list[SparseVector]:
        """Integer spanning vectors of C_r^(j): pivot columns orbit by orbit."""
        pc = self.piece(r, j)
        if pc is None:
            return []
        orb = self.orbits[r]
        basis = []
        for row in orb.members:
            for s in pc.pivots:
                basis.append({row[p]: v for p, v in pc.columns[s].items()})
        return basis

    def coordinates(self, r: int, j: int, vec: SparseVector) -> list[Fraction]:
        """Coordinates of a chain in C_r^(j) with respect to ``image_basis``."""
        pc = self.piece(r, j)
        if pc is None:
            if vec:
                raise InvariantViolation(f"nonzero chain in the zero piece {j} at degree {r}")
            return []
        orb = self.orbits[r]
        per_orbit: dict[int, dict[int, int]] = {}
        for t, v in vec.items():
            o, pi = orb.where[t]
            per_orbit.setdefault(o, {})[pi] = v
        coords: list[Fraction] = []
        for o in range(len(orb.reps)):
            local = per_orbit.get(o)
            if not local:
                coords.extend([Fraction(0)] * pc.rank)
                continue
            rhs = [local.get(i, 0) for i in pc.solve_rows]
            inv = pc.solve_inverse
            c = [sum((inv[a, b] * rhs[b] for b in range(len(rhs)) if rhs[b]), Fraction(0))
                 for a in range(pc.rank)]
            recon: dict[int, Fraction] = {}
            for a, s in enumerate(pc.pivots):
                if c[a]:
                    for p, v in pc.columns[s].items():
                        recon[p] = recon.get(p, 0) + c[a] * v
            recon = {p: v for p, v in recon.items() if v}
            if recon != {p: Fraction(v) for p, v in local.items() if v}:
                raise InvariantViolation(
                    f"chain leaves Hodge piece {j} at degree {r}: restriction is not defined"
                )
            coords.extend(c)
        return coords

    # -- homology ----------------------------------------------------------

    def boundary_rank(self, r: int, j: int) -> int:
        """rank of the boundary restricted to C_r^(j), in ambient coordinates."""
        if r <= -1 or not self.cc.dim(r - 1):
            return 0
        return sparse_rank(self.cc.boundary_of(r, v) for v in self.image_basis(r, j))

    def homology_dim(self, r: int, j: int) -> int:
        return self.chain_dim(r, j) - self.boundary_rank(r, j) - (
            self.boundary_rank(r + 1, j) if r + 1 in self.cc.bases else 0
        )

    def commutes(self, r: int, j: int) -> bool:
        """d_r P_r^(j) == P_{r-1}^(j) d_r, checked column by column."""
        if r <= -1:
            return True
        for s in range(self.cc.dim(r)):
            sa, pv = self.project(r, j, {s: 1})
            left = self.cc.boundary_of(r, pv)
            sb, right = self.project(r - 1, j, self.cc.boundary_of(r, {s: 1}))
            left = {t: v * sb for t, v in left.items()}
            right = {t: v * sa for t, v in right.items()}
            if left != right:
                return False
        return True

    def projection_matrix(self, r: int, j: int) -> RationalMatrix:
        size = self.cc.dim(r)
        entries = {}
        for s in range(size):
            scale, col = self.project(r, j, {s: 1})
            for t, v in col.items():
                entries[(t, s)] = Fraction(v, scale)
        return RationalMatrix.from_sparse(size, size, entries)


@dataclass(frozen=True)
class HodgeSubcomplex:
    """The j-th piece in its own coordinates."""

    j: int
    dims: dict[int, int]
    boundaries: dict[int, RationalMatrix]  # degree r -> matrix from r to r-1

    def squares_vanish(self) -> bool:
        for r, d in self.boundaries.items():
            below = self.boundaries.get(r - 1)
            if below is None or not d.cols or not below.rows:
                continue
            prod_ = below @ d
            if any(prod_[a, b] for a in range(prod_.rows) for b in range(prod_.cols)):
                return False
        return True

    def betti_numbers(self) -> dict[int, int]:
        ranks = {r: rank(d) for r, d in self.boundaries.items()}
        return {r: d - ranks.get(r, 0) - ranks.get(r + 1, 0) for r, d in self.dims.items()}


def hodge_subcomplex(cc: ChainComplexData, j: int, hd: HodgeDecomposition | None = None) -> HodgeSubcomplex:
    """Restrict the boundary to piece j, solving exactly for image coordinates."""
    hd = hd or HodgeDecomposition(cc)
    dims = {r: hd.chain_dim(r, j) for r in cc.degrees}
    boundaries: dict[int, RationalMatrix] = {}
    for r in cc.degrees:
        if r <= -1:
            continue
        cols = [hd.coordinates(r - 1, j, cc.boundary_of(r, v)) for v in hd.image_basis(r, j)]
        boundaries[r] = RationalMatrix.from_columns(cols, dims[r - 1])
    return HodgeSubcomplex(j, dims, boundaries)


def hodge_chain_dimensions(cc: ChainComplexData, hd: HodgeDecomposition | None = None,
                           check_trace: bool = True) -> dict[int, dict[int, int]]:
    """dim C_r^(j) as the rank of the projection, checked against its trace."""
    hd = hd or HodgeDecomposition(cc)
    dims = {}
    for r in cc.degrees:
        row = {}
        for j in range(1, cc.n + 1):
            by_rank = hd.chain_dim(r, j)
            if check_trace and by_rank != (by_trace := hd.chain_dim_by_trace(r, j)):
                raise InvariantViolation(
                    f"trace {by_trace} != rank {by_rank} at degree {r}, piece {j}"
                )
            row[j] = by_rank
        dims[r] = row
    return dims


def hodge_homology_dimensions(cc: ChainComplexData, hd: HodgeDecomposition | None = None) -> dict[int, dict[int, int]]:
    hd = hd or HodgeDecomposition(cc)
    ranks = {(r, j): hd.boundary_rank(r, j) for r in cc.degrees for j in range(1, cc.n + 1)}
    return {
        r: {
            j: hd.chain_dim(r, j) - ranks[r, j] - ranks.get((r + 1, j), 0)
            for j in range(1, cc.n + 1)
        }
        for r in cc.degrees
    }


def _alternating(table: dict[int, dict[int, int]], n: int) -> dict[int, int]:
    return {j: sum((-1) ** (r % 2) * row[j] for r, row in table.items()) for j in range(1, n + 1)}


def euler_characteristics(cc: ChainComplexData, hd: HodgeDecomposition | None = None) -> dict[int, int]:
    return hodge_table(cc, hd).euler


def hodge_table(cc: ChainComplexData, hd: HodgeDecomposition | None = None, m: int = 0,
                check_trace: bool = True) -> HodgeTable:
    """Chain and homology dimensions per (degree, piece) with every cross-check."""
    hd = hd or HodgeDecomposition(cc)
    chain = hodge_chain_dimensions(cc, hd, check_trace)
    homology = hodge_homology_dimensions(cc, hd)
    n = cc.n
    for r in cc.degrees:
        if sum(chain[r].values()) != cc.dim(r):
            raise InvariantViolation(f"Hodge pieces do not fill C_{r}")
        for j, d in chain[r].items():
            if j > r + 2 and d:
                raise InvariantViolation(f"piece {j} nonzero in degree {r}")
            if homology[r][j] < 0:
                raise InvariantViolation(f"negative homology dimension at ({r}, {j})")
    euler = _alternating(chain, n)
    euler_h = _alternating(homology, n)
    if euler != euler_h:
        raise InvariantViolation(f"Euler characteristics disagree: chains {euler}, homology {euler_h}")
    if euler[n] != 0:
        raise InvariantViolation(f"top piece Euler characteristic is {euler[n]}, expected 0")
    return HodgeTable(n, m, chain, homology, euler, euler_h)
