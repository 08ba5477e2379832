"""Generalized Reed-Muller spaces on the Boolean cube and their distances.

A decreasing set S of {0,1}^m parametrizes the row span of the rows of
R_m = [[1,1],[0,1]]^{kron m} indexed by S; an increasing set T the row
span of the corresponding rows of R_m^{-T}.  These are two
parametrizations of one family, and nested pairs have a closed-form
minimum coset weight: a power of two determined by the extreme weights
of the set difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2 import BitMatrix
from .posets import (DECREASING, INCREASING, MonotoneSet, SubsetTuple,
                     complement_partition, lin_index)

_R1 = BitMatrix.from_rows([[1, 1], [0, 1]])


@lru_cache(maxsize=None)
def r_matrix(m: int) -> BitMatrix:
    """The 2^m x 2^m Kronecker power of [[1,1],[0,1]]; self-inverse over GF(2)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return BitMatrix.identity(1)
    return r_matrix(m - 1).kron(_R1)


@lru_cache(maxsize=None)
def r_matrix_inv_t(m: int) -> BitMatrix:
    return r_matrix(m).transpose()  # R_m is self-inverse


def cube_shape(m: int) -> tuple[int, ...]:
    return (2,) * m


@dataclass(frozen=True)
class GrmSpace:
    """A generalized Reed-Muller space with its generator matrix."""

    m: int
    parameter_set: MonotoneSet
    parametrization: str  # DECREASING or INCREASING
    generator: BitMatrix

    @property
    def dimension(self) -> int:
        return self.generator.rows


def grm_generator(s: MonotoneSet, parametrization: str | None = None) -> GrmSpace:
    """Generator matrix GP(S) @ R_m (decreasing) or GP(T) @ R_m^{-T} (increasing).

    The incomplete permutation places the selected rows in ascending
    lexicographic order, so the generator is simply the selected rows of
    R_m (resp. its inverse-transpose).
    """
    if parametrization is None:
        parametrization = s.direction
    if parametrization != s.direction:
        raise ValueError("parametrization does not match the set direction")
    m = len(s.shape)
    if s.shape != cube_shape(m):
        raise ValueError("GRM spaces live on the Boolean cube")
    base = r_matrix(m) if parametrization == DECREASING else r_matrix_inv_t(m)
    rows = [base.data[i] for i in s.sorted_lin_indices()]
    gen = BitMatrix(len(rows), 1 << m, tuple(rows))
    return GrmSpace(m, s, parametrization, gen)


def dual_parameter_set(s: MonotoneSet) -> MonotoneSet:
    """The decreasing set whose GRM space is the orthogonal complement.

    For decreasing S the dual space is GRM((up T)^c) with T the
    elementwise bit-complement of S.
    """
    if s.direction != DECREASING:
        raise ValueError("dual_parameter_set expects a decreasing set")
    m = len(s.shape)
    flipped = frozenset(tuple(1 - e for e in t) for t in s.members)
    up_t = MonotoneSet(s.shape, flipped, INCREASING)
    return up_t.complement()


@dataclass(frozen=True)
class NestedPair:
    """Monotone sets of one direction with s a subset of t."""

    s: MonotoneSet
    t: MonotoneSet

    def __post_init__(self) -> None:
        if self.s.shape != self.t.shape or self.s.direction != self.t.direction:
            raise ValueError("sets are not comparable")
        if not self.s.members <= self.t.members:
            raise ValueError("s is not contained in t")

    @property
    def m(self) -> int:
        return len(self.t.shape)

    @property
    def difference(self) -> frozenset:
        return self.t.members - self.s.members


def nested_distance(pair: NestedPair) -> int | None:
    """Minimum weight over the containing space minus the contained space.

    Returns None ("undefined") when the set difference is empty; callers
    must handle that case.  For decreasing pairs the exponent is driven
    by the maximum weight in the difference; for increasing pairs by the
    maximum number of zeros.
    """
    diff = pair.difference
    if not diff:
        return None
    m = pair.m
    if pair.t.direction == DECREASING:
        r = max(sum(t) for t in diff)
    else:
        r = max(m - sum(t) for t in diff)
    return 1 << (m - r)


def nested_distance_uuv(pair: NestedPair) -> int | None:
    """The same distance evaluated through the (u, u+v) split recursion."""
    if pair.t.direction != DECREASING:
        raise ValueError("the recursion is stated for decreasing pairs")
    diff = pair.difference
    if not diff:
        return None
    if pair.m == 0:
        return 1
    t0, t1 = uuv_split(pair.t)
    s0, s1 = uuv_split(pair.s)
    d0 = nested_distance_uuv(NestedPair(s0, t0))
    d1 = nested_distance_uuv(NestedPair(s1, t1))
    candidates = []
    if d0 is not None:
        candidates.append(2 * d0)
    if d1 is not None:
        candidates.append(d1)
    return min(candidates)


def uuv_split(t: MonotoneSet) -> tuple[MonotoneSet, MonotoneSet]:
    """Split on coordinate 0: members starting with 0 and with 1, tails kept."""
    m = len(t.shape)
    if m < 1:
        raise ValueError("cannot split an empty shape")
    sub = t.shape[1:]
    t0 = frozenset(v[1:] for v in t.members if v[0] == 0)
    t1 = frozenset(v[1:] for v in t.members if v[0] == 1)
    return (MonotoneSet(sub, t0, t.direction), MonotoneSet(sub, t1, t.direction))


def css_xz_distances(x: SubsetTuple, z: SubsetTuple) -> tuple[int, int]:
    """Closed-form distances of the all-single-parity-check CSS(X, Z) code.

    Valid only when every component pair is ([1 1], [1 1]); then the
    middle layer K of the Boolean cube determines both distances as
    powers of two.  Raises ValueError when K is empty (no logical
    qubits, distances undefined) or when the subsets fail to intersect.
    """
    if x.m != z.m:
        raise ValueError("mismatched ground sets")
    m = x.m
    for xi in x.subsets:
        for zj in z.subsets:
            if not (xi & zj):
                raise ValueError("intersecting condition violated")
    shape = cube_shape(m)
    sx = [tuple(0 if c in s else 1 for c in range(m)) for s in x.subsets]
    sz = [tuple(1 if c in s else 0 for c in range(m)) for s in z.subsets]
    _, middle, _ = complement_partition(sx, sz, shape)
    if not middle:
        raise ValueError("middle layer is empty; distances undefined")
    d_x = 1 << min(m - sum(v) for v in middle)
    d_z = 1 << min(sum(v) for v in middle)
    return d_x, d_z
