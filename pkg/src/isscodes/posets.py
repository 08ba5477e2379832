"""The componentwise partial order on integer tuples and its monotone sets.

Index tuples live in a product of chains [n_0] x ... x [n_{m-1}] given by
a shape vector.  Monotone (increasing/decreasing) sets are stored
explicitly; block sizes in this project never exceed a few hundred
tuples.  Linear column indices are always the lexicographic
linearization, matching the Kronecker-product convention of
:mod:`isscodes.gf2`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import BitMatrix

IndexTuple = tuple[int, ...]
Shape = tuple[int, ...]

DECREASING = "decreasing"
INCREASING = "increasing"


def lin_index(t: IndexTuple, shape: Shape) -> int:
    """Lexicographic linearization of a tuple index (coordinate 0 most significant)."""
    if len(t) != len(shape):
        raise ValueError("shape mismatch")
    idx = 0
    for ti, ni in zip(t, shape):
        if not 0 <= ti < ni:
            raise ValueError(f"tuple entry {ti} out of range [0, {ni})")
        idx = idx * ni + ti
    return idx


def unlin_index(idx: int, shape: Shape) -> IndexTuple:
    """Inverse of :func:`lin_index`."""
    out = []
    for ni in reversed(shape):
        out.append(idx % ni)
        idx //= ni
    if idx:
        raise ValueError("index out of range for shape")
    return tuple(reversed(out))


def box(shape: Shape) -> Iterable[IndexTuple]:
    """All tuples of the product of chains, in lexicographic order."""
    return itertools.product(*(range(n) for n in shape))


def tuple_leq(x: IndexTuple, y: IndexTuple) -> bool:
    if len(x) != len(y):
        raise ValueError("shape mismatch")
    return all(a <= b for a, b in zip(x, y))


def tuple_lt(x: IndexTuple, y: IndexTuple) -> bool:
    """Strict componentwise order: x_i <= y_i everywhere, < somewhere."""
    return tuple_leq(x, y) and x != y


@dataclass(frozen=True)
class SubsetTuple:
    """An ordered tuple of subsets of [m]; duplicates between positions allowed."""

    m: int
    subsets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for s in self.subsets:
            for e in s:
                if not 0 <= e < self.m:
                    raise ValueError(f"element {e} outside [0, {self.m})")

    @classmethod
    def of(cls, m: int, subsets: Iterable[Iterable[int]]) -> "SubsetTuple":
        return cls(m, tuple(frozenset(s) for s in subsets))

    def __len__(self) -> int:
        return len(self.subsets)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.subsets[i]

    def indicator_matrix(self) -> BitMatrix:
        """The u x m indicator matrix view: row i has 1 in column c iff c in subset i."""
        data = []
        for s in self.subsets:
            w = 0
            for c in s:
                w |= 1 << c
            data.append(w)
        return BitMatrix(len(self.subsets), self.m, tuple(data))

    def to_json(self) -> list[list[int]]:
        return [sorted(s) for s in self.subsets]

    @classmethod
    def from_json(cls, data, m: int) -> "SubsetTuple":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.of(m, data)


@dataclass(frozen=True)
class MonotoneSet:
    """An explicitly stored increasing or decreasing subset of a box."""

    shape: Shape
    members: frozenset[IndexTuple]
    direction: str

    def __post_init__(self) -> None:
        if self.direction not in (INCREASING, DECREASING):
            raise ValueError(f"bad direction {self.direction!r}")

    def __contains__(self, t: IndexTuple) -> bool:
        return t in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[IndexTuple]:
        return sorted(self.members)

    def sorted_lin_indices(self) -> list[int]:
        return sorted(lin_index(t, self.shape) for t in self.members)

    def complement(self) -> "MonotoneSet":
        """The set complement, which is monotone in the opposite direction."""
        other = frozenset(t for t in box(self.shape) if t not in self.members)
        direction = INCREASING if self.direction == DECREASING else DECREASING
        return MonotoneSet(self.shape, other, direction)

    def check_closed(self) -> bool:
        for t in self.members:
            for i, ni in enumerate(self.shape):
                step = -1 if self.direction == DECREASING else 1
                v = t[i] + step
                if 0 <= v < ni:
                    neighbour = t[:i] + (v,) + t[i + 1:]
                    if neighbour not in self.members:
                        return False
        return True


def closure(generators: Iterable[IndexTuple], shape: Shape, direction: str) -> MonotoneSet:
    """Monotone closure of the generators inside the box.

    Generators with entries outside the box contribute nothing (they
    arise from rank-0 components in the CSS construction).
    """
    members: set[IndexTuple] = set()
    for g in generators:
        if len(g) != len(shape):
            raise ValueError("shape mismatch")
        if direction == DECREASING:
            if any(e < 0 for e in g):
                continue
            ranges = [range(min(e, n - 1) + 1) for e, n in zip(g, shape)]
        elif direction == INCREASING:
            if any(e >= n for e, n in zip(g, shape)):
                continue
            ranges = [range(max(e, 0), n) for e, n in zip(g, shape)]
        else:
            raise ValueError(f"bad direction {direction!r}")
        members.update(itertools.product(*ranges))
    return MonotoneSet(shape, frozenset(members), direction)


def extremal(s: MonotoneSet, kind: str) -> list[IndexTuple]:
    """The antichain of minimal (kind='min') or maximal (kind='max') elements."""
    if kind not in ("min", "max"):
        raise ValueError(f"bad kind {kind!r}")
    out = []
    for x in s.members:
        if kind == "min":
            dominated = any(tuple_lt(y, x) for y in s.members)
        else:
            dominated = any(tuple_lt(x, y) for y in s.members)
        if not dominated:
            out.append(x)
    return sorted(out)


def complement_partition(
    sx_generators: Iterable[IndexTuple],
    sz_generators: Iterable[IndexTuple],
    shape: Shape,
) -> tuple[MonotoneSet, frozenset[IndexTuple], MonotoneSet]:
    """Partition the box into (decreasing closure, middle layer K, increasing closure).

    Raises ValueError when the two closures overlap, which signals an
    invalid code specification.
    """
    down = closure(sx_generators, shape, DECREASING)
    up = closure(sz_generators, shape, INCREASING)
    overlap = down.members & up.members
    if overlap:
        raise ValueError(f"closures overlap: {sorted(overlap)[:4]}...")
    middle = frozenset(t for t in box(shape)
                       if t not in down.members and t not in up.members)
    return down, middle, up
