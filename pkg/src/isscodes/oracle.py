"""Brute-force minimum coset weight: the independent check on every distance claim.

The oracle enumerates an entire linear space by Gray code (one XOR per
candidate) and reports the exact minimum Hamming weight outside an
excluded subspace.  It refuses, rather than estimates, when the space
dimension exceeds the cap.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .gf2 import BitMatrix, BitVector

DEFAULT_DIM_CAP = 26


@dataclass(frozen=True)
class CosetProblem:
    """Minimum weight over span(containing) \\ span(excluded)."""

    n: int
    containing: BitMatrix
    excluded: BitMatrix

    def __post_init__(self) -> None:
        if self.containing.cols != self.n or self.excluded.cols != self.n:
            raise ValueError("ambient length mismatch")
        for i in range(self.excluded.rows):
            if not self.containing.row_space_contains(self.excluded.row(i)):
                raise ValueError("excluded space is not inside the containing space")


@dataclass(frozen=True)
class EnumerationStats:
    """Bookkeeping from one oracle run."""

    dimension: int
    visited: int
    min_weight: int | None


def _split_basis(p: CosetProblem) -> tuple[list[int], list[int]]:
    """Echelon basis of the excluded space plus a complement inside containing.

    A vector of the containing space lies in the excluded space exactly
    when its coefficients on the complement part vanish, so membership
    during enumeration is a single mask test.
    """
    ex_rows, ex_pivots = p.excluded.rref()
    ech = list(zip(ex_rows, ex_pivots))
    comp: list[int] = []
    comp_pivots: list[int] = []
    for w in p.containing.data:
        r = w
        for row, c in ech:
            if (r >> c) & 1:
                r ^= row
        for row, c in zip(comp, comp_pivots):
            if (r >> c) & 1:
                r ^= row
        if r:
            comp.append(r)
            comp_pivots.append((r & -r).bit_length() - 1)
    return comp, ex_rows


def _enumerate_partition(basis: list[int], comp_mask: int, fixed_bits: int,
                         fixed_value: int, start: int) -> tuple[int | None, int]:
    """Gray-code scan over the low dim-fixed_bits coefficients.

    ``start`` is the XOR of the basis rows selected by ``fixed_value``
    (placed on the high coefficient bits).  Returns (min weight or None,
    number of candidates visited).
    """
    dim = len(basis)
    free = dim - fixed_bits
    hi = fixed_value << free
    best: int | None = None
    v = start
    visited = 0
    # coefficient 0 of the free part
    if hi and hi & comp_mask:
        best = v.bit_count()
    if hi:
        visited += 1
    g_prev = 0
    for i in range(1, 1 << free):
        g = i ^ (i >> 1)
        v ^= basis[((g ^ g_prev) & -(g ^ g_prev)).bit_length() - 1]
        g_prev = g
        visited += 1
        if (g | hi) & comp_mask:
            w = v.bit_count()
            if best is None or w < best:
                best = w
    return best, visited


def coset_min_weight_stats(p: CosetProblem, dim_cap: int = DEFAULT_DIM_CAP,
                           threads: int = 1) -> EnumerationStats:
    """Exact minimum coset weight with enumeration bookkeeping.

    ``min_weight`` is None either on refusal (dimension above the cap;
    ``visited`` is 0) or when the containing space equals the excluded
    space.
    """
    comp, ex_rows = _split_basis(p)
    basis = comp + ex_rows
    dim = len(basis)
    if dim > dim_cap:
        return EnumerationStats(dim, 0, None)
    comp_mask = (1 << len(comp)) - 1
    if threads <= 1 or dim < 8:
        best, visited = _enumerate_partition(basis, comp_mask, 0, 0, 0)
        return EnumerationStats(dim, visited, best)

    bits = max(1, (threads - 1).bit_length())
    bits = min(bits, dim)
    free = dim - bits
    jobs = []
    for prefix in range(1 << bits):
        start = 0
        for b in range(bits):
            if (prefix >> b) & 1:
                start ^= basis[free + b]
        jobs.append((basis, comp_mask, bits, prefix, start))
    best: int | None = None
    visited = 0
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for w, seen in pool.map(_enumerate_partition_star, jobs):
            visited += seen
            if w is not None and (best is None or w < best):
                best = w
    return EnumerationStats(dim, visited, best)


def _enumerate_partition_star(args):
    return _enumerate_partition(*args)


def coset_min_weight(p: CosetProblem, dim_cap: int = DEFAULT_DIM_CAP,
                     threads: int = 1) -> int | None:
    """Exact minimum weight, or None as an explicit refusal above the cap."""
    return coset_min_weight_stats(p, dim_cap, threads).min_weight


def css_distances_bruteforce(hx: BitMatrix, hz: BitMatrix,
                             dim_cap: int = DEFAULT_DIM_CAP,
                             threads: int = 1) -> tuple[int | None, int | None]:
    """Exhaustive (d_x, d_z) of a CSS pair; refusal (None) propagates per side.

    d_x ranges over Ker(hz) minus the row space of hx; d_z symmetrically.
    """
    if hx.cols != hz.cols:
        raise ValueError("column count mismatch")
    if not (hx @ hz.transpose()).is_zero():
        raise ValueError("matrices are not orthogonal")
    n = hx.cols
    d_x = coset_min_weight(CosetProblem(n, hz.kernel_basis(), hx), dim_cap, threads)
    d_z = coset_min_weight(CosetProblem(n, hx.kernel_basis(), hz), dim_cap, threads)
    return d_x, d_z
