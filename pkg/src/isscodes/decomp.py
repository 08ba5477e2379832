"""Matrix decomposition tools for the intersecting-subset construction.

Three pieces live here:

* incomplete permutation matrices and the invertible row-merging factor
  that relates a stack of them to the single matrix on the merged
  column support;
* the joint decomposition of a pair of orthogonal matrices
  P_a A Q = L_a D_a R,  P_b B Q = L_b D_b R^{-T},
  with L_a lower unit-triangular, L_b and R upper unit-triangular and
  D_a / D_b incomplete permutations in pinned positions;
* layered tensor-product matrices (component matrices at positions in a
  subset, identities elsewhere, stacked over a tuple of subsets) and
  their decomposition built from the component decompositions.

Pivot choices are deterministic: the first 1 of A in row-major order,
and the first 1 of B in reverse column-major order (skipping A's pivot
column), so every factorization is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import BitMatrix, block_diag, from_blocks, iter_bits, perm_matrix
from .posets import IndexTuple, Shape, lin_index


@dataclass(frozen=True)
class IncompletePermutation:
    """An l x n 0/1 matrix with ones exactly at (placement[c], c) for c in support.

    ``placement`` maps column index -> row index and must be injective.
    """

    rows: int
    cols: int
    placement: dict[int, int]

    def __post_init__(self) -> None:
        vals = list(self.placement.values())
        if len(set(vals)) != len(vals):
            raise ValueError("placement is not injective")
        for c, r in self.placement.items():
            if not (0 <= c < self.cols and 0 <= r < self.rows):
                raise ValueError(f"placement entry ({r}, {c}) out of range")

    @property
    def support(self) -> list[int]:
        return sorted(self.placement)

    @classmethod
    def identity(cls, n: int) -> "IncompletePermutation":
        return cls(n, n, {i: i for i in range(n)})

    @classmethod
    def lexicographic(cls, rows: int, cols: int, support: Iterable[int]) -> "IncompletePermutation":
        """Support columns placed on rows 0, 1, ... in ascending column order."""
        return cls(rows, cols, {c: j for j, c in enumerate(sorted(support))})

    def kron(self, other: "IncompletePermutation") -> "IncompletePermutation":
        placement = {}
        for c1, r1 in self.placement.items():
            for c2, r2 in other.placement.items():
                placement[c1 * other.cols + c2] = r1 * other.rows + r2
        return IncompletePermutation(self.rows * other.rows,
                                     self.cols * other.cols, placement)


def materialize_gp(p: IncompletePermutation) -> BitMatrix:
    """The dense 0/1 matrix of an incomplete permutation."""
    data = [0] * p.rows
    for c, r in p.placement.items():
        data[r] |= 1 << c
    return BitMatrix(p.rows, p.cols, tuple(data))


def select_rows(p: IncompletePermutation, source: BitMatrix) -> BitMatrix:
    """materialize_gp(p) @ source, computed by row selection."""
    if p.cols != source.rows:
        raise ValueError("dimension mismatch")
    data = [0] * p.rows
    for c, r in p.placement.items():
        data[r] = source.data[c]
    return BitMatrix(p.rows, source.cols, tuple(data))


def lambda_factor(parts: Sequence[IncompletePermutation],
                  merged: IncompletePermutation) -> BitMatrix:
    """Invertible L with row-stack(parts) == L @ materialize_gp(merged).

    Every stacked row that holds column c gets a 1 in the merged row
    column placement[c]; the first such row per column is its leader.
    All non-leader rows (duplicates and zero rows) additionally receive
    a 1 in a distinct unused column, which makes L invertible.
    """
    total = sum(p.rows for p in parts)
    union: set[int] = set()
    for p in parts:
        if p.cols != merged.cols:
            raise ValueError("column count mismatch")
        union.update(p.placement)
    if union != set(merged.placement) or total != merged.rows:
        raise ValueError("merged support/shape does not match the parts")

    holders: dict[int, list[int]] = {c: [] for c in merged.placement}
    offset = 0
    for p in parts:
        for c, r in p.placement.items():
            holders[c].append(offset + r)
        offset += p.rows
    for c in holders:
        holders[c].sort()

    data = [0] * total
    leaders = set()
    for c, rows in holders.items():
        j = merged.placement[c]
        for beta in rows:
            data[beta] |= 1 << j
        leaders.add(rows[0])

    spare_cols = sorted(set(range(total)) - set(merged.placement.values()))
    spare_rows = sorted(set(range(total)) - leaders)
    if len(spare_cols) != len(spare_rows):
        raise AssertionError("leader bookkeeping is inconsistent")
    for beta, j in zip(spare_rows, spare_cols):
        data[beta] |= 1 << j
    return BitMatrix(total, total, tuple(data))


# ---------------------------------------------------------------------------
# Joint decomposition of an orthogonal pair
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JointDecomposition:
    """Factors of P_a A Q = L_a D_a R and P_b B Q = L_b D_b R^{-T}."""

    p_a: BitMatrix
    p_b: BitMatrix
    q: BitMatrix
    l_a: BitMatrix
    l_b: BitMatrix
    r: BitMatrix
    d_a: IncompletePermutation
    d_b: IncompletePermutation
    r_a: int
    r_b: int

    @property
    def r_inv_t(self) -> BitMatrix:
        return self.r.invert().transpose()


def _col_perm(sources: Sequence[int]) -> BitMatrix:
    """Matrix M with (a @ M) column j equal to a column sources[j]."""
    return perm_matrix(sources).transpose()


def _swap_perm(n: int, i: int, j: int) -> list[int]:
    s = list(range(n))
    s[i], s[j] = s[j], s[i]
    return s


def _first_one_rowmajor(a: BitMatrix) -> tuple[int, int] | None:
    for i, w in enumerate(a.data):
        if w:
            return i, (w & -w).bit_length() - 1
    return None


def _first_one_reverse_colmajor(b: BitMatrix, skip_col: int | None) -> tuple[int, int] | None:
    for q in range(b.cols - 1, -1, -1):
        if q == skip_col:
            continue
        for p in range(b.rows - 1, -1, -1):
            if (b.data[p] >> q) & 1:
                return p, q
    return None


def joint_decompose(a: BitMatrix, b: BitMatrix) -> JointDecomposition:
    """Joint decomposition of a pair of orthogonal matrices over GF(2).

    Requires a.cols == b.cols and a @ b.T == 0.  The recursion peels one
    pivot of each nonzero matrix per step; the middle block inherits
    orthogonality, and the factors are reassembled from the recursive
    solution of the middle block.
    """
    if a.cols != b.cols:
        raise ValueError("column count mismatch")
    if not (a @ b.transpose()).is_zero():
        raise ValueError("matrices are not orthogonal")
    p_a, p_b, q, l_a, l_b, r, r_a, r_b = _jd(a, b)
    d_a = IncompletePermutation(a.rows, a.cols, {i: i for i in range(r_a)})
    d_b = IncompletePermutation(
        b.rows, b.cols,
        {b.cols - r_b + i: b.rows - r_b + i for i in range(r_b)})
    return JointDecomposition(p_a, p_b, q, l_a, l_b, r, d_a, d_b, r_a, r_b)


def _jd(a: BitMatrix, b: BitMatrix):
    ma, mb, n = a.rows, b.rows, a.cols
    a_zero = a.is_zero()
    b_zero = b.is_zero()
    eye = BitMatrix.identity

    if a_zero and b_zero:
        return (eye(ma), eye(mb), eye(n), eye(ma), eye(mb), eye(n), 0, 0)

    if b_zero:
        i0, j0 = _first_one_rowmajor(a)
        pa0 = perm_matrix(_swap_perm(ma, 0, i0))
        q0 = _col_perm(_swap_perm(n, 0, j0))
        a1 = pa0 @ a @ q0
        u = a1.submatrix(0, 1, 1, n)            # 1 x (n-1)
        c = a1.submatrix(1, ma, 0, 1)           # (ma-1) x 1
        a2 = a1.submatrix(1, ma, 1, n) + c @ u
        (pa_, pb_, q_, la_, lb_, r_, ra_, rb_) = _jd(a2, BitMatrix.zeros(mb, n - 1))
        one = eye(1)
        pa = from_blocks([[one, BitMatrix.zeros(1, ma - 1)],
                          [BitMatrix.zeros(ma - 1, 1), pa_]]) @ pa0
        q = q0 @ from_blocks([[one, BitMatrix.zeros(1, n - 1)],
                              [BitMatrix.zeros(n - 1, 1), q_]])
        la = from_blocks([[one, BitMatrix.zeros(1, ma - 1)],
                          [pa_ @ c, la_]])
        rt = from_blocks([[one, u @ q_],
                          [BitMatrix.zeros(n - 1, 1), eye(n - 1)]])
        r = from_blocks([[one, BitMatrix.zeros(1, n - 1)],
                         [BitMatrix.zeros(n - 1, 1), r_]]) @ rt.invert()
        return (pa, pb_, q, la, lb_, r, ra_ + 1, rb_)

    if a_zero:
        p0, q0c = _first_one_reverse_colmajor(b, None)
        pb0 = perm_matrix(_swap_perm(mb, p0, mb - 1))
        q0 = _col_perm(_swap_perm(n, q0c, n - 1))
        b1 = pb0 @ b @ q0
        b21 = b1.submatrix(mb - 1, mb, 0, n - 1)   # 1 x (n-1)
        b13 = b1.submatrix(0, mb - 1, n - 1, n)    # (mb-1) x 1
        b2 = b1.submatrix(0, mb - 1, 0, n - 1) + b13 @ b21
        (pa_, pb_, q_, la_, lb_, r_, ra_, rb_) = _jd(BitMatrix.zeros(ma, n - 1), b2)
        one = eye(1)
        pb = from_blocks([[pb_, BitMatrix.zeros(mb - 1, 1)],
                          [BitMatrix.zeros(1, mb - 1), one]]) @ pb0
        q = q0 @ from_blocks([[q_, BitMatrix.zeros(n - 1, 1)],
                              [BitMatrix.zeros(1, n - 1), one]])
        lb = from_blocks([[lb_, pb_ @ b13],
                          [BitMatrix.zeros(1, mb - 1), one]])
        # R is tracked through its inverse-transpose on this branch.
        wt = from_blocks([[eye(n - 1), BitMatrix.zeros(n - 1, 1)],
                          [b21 @ q_, one]])
        r_inv_t = from_blocks([[r_.invert().transpose(), BitMatrix.zeros(n - 1, 1)],
                               [BitMatrix.zeros(1, n - 1), one]]) @ wt
        r = r_inv_t.transpose().invert()
        return (pa_, pb, q, la_, lb, r, ra_, rb_ + 1)

    # Both nonzero: peel a pivot of each.
    i0, j0 = _first_one_rowmajor(a)
    p0, q0c = _first_one_reverse_colmajor(b, skip_col=j0)
    if p0 is None:
        raise AssertionError("orthogonality guarantees a second pivot column")
    pa0 = perm_matrix(_swap_perm(ma, 0, i0))
    pb0 = perm_matrix(_swap_perm(mb, p0, mb - 1))
    middle = [j for j in range(n) if j not in (j0, q0c)]
    q0 = _col_perm([j0] + middle + [q0c])
    a1 = pa0 @ a @ q0
    b1 = pb0 @ b @ q0

    u = a1.submatrix(0, 1, 1, n - 1)               # 1 x (n-2)
    ca = a1.submatrix(1, ma, 0, 1)                 # (ma-1) x 1
    a22 = a1.submatrix(1, ma, 1, n - 1)
    b21 = b1.submatrix(mb - 1, mb, 0, 1)           # 1 x 1
    w = b1.submatrix(mb - 1, mb, 1, n - 1)         # 1 x (n-2)
    b13 = b1.submatrix(0, mb - 1, n - 1, n)        # (mb-1) x 1
    b12 = b1.submatrix(0, mb - 1, 1, n - 1)

    a2 = a22 + ca @ u
    b2 = b12 + b13 @ w
    (pa_, pb_, q_, la_, lb_, r_, ra_, rb_) = _jd(a2, b2)

    one = eye(1)
    z = BitMatrix.zeros
    pa = from_blocks([[one, z(1, ma - 1)], [z(ma - 1, 1), pa_]]) @ pa0
    pb = from_blocks([[pb_, z(mb - 1, 1)], [z(1, mb - 1), one]]) @ pb0
    q = q0 @ from_blocks([[one, z(1, n - 2), z(1, 1)],
                          [z(n - 2, 1), q_, z(n - 2, 1)],
                          [z(1, 1), z(1, n - 2), one]])
    la = from_blocks([[one, z(1, ma - 1)], [pa_ @ ca, la_]])
    lb = from_blocks([[lb_, pb_ @ b13], [z(1, mb - 1), one]])
    rt = from_blocks([[one, u @ q_, b21],
                      [z(n - 2, 1), eye(n - 2), q_.transpose() @ w.transpose()],
                      [z(1, 1), z(1, n - 2), one]])
    r = from_blocks([[one, z(1, n - 2), z(1, 1)],
                     [z(n - 2, 1), r_, z(n - 2, 1)],
                     [z(1, 1), z(1, n - 2), one]]) @ rt.invert()
    return (pa, pb, q, la, lb, r, ra_ + 1, rb_ + 1)


# ---------------------------------------------------------------------------
# Layered tensor-product matrices
# ---------------------------------------------------------------------------


def layered_tensor(h: Sequence[BitMatrix], x: Iterable[int]) -> BitMatrix:
    """Kronecker product with h[i] at positions in x and identities elsewhere."""
    xs = set(x)
    out = BitMatrix.identity(1)
    for i, hi in enumerate(h):
        factor = hi if i in xs else BitMatrix.identity(hi.cols)
        out = out.kron(factor)
    return out


@dataclass(frozen=True)
class LayeredMatrix:
    """A row stack of layered tensor products, one layer per subset."""

    components: tuple[BitMatrix, ...]
    subsets: tuple[frozenset[int], ...]
    materialized: BitMatrix

    @classmethod
    def build(cls, components: Sequence[BitMatrix],
              subsets: Sequence[Iterable[int]]) -> "LayeredMatrix":
        subs = tuple(frozenset(s) for s in subsets)
        mat = BitMatrix.vstack([layered_tensor(components, s) for s in subs]) \
            if subs else BitMatrix.zeros(0, _total_cols(components))
        return cls(tuple(components), subs, mat)


def _total_cols(components: Sequence[BitMatrix]) -> int:
    n = 1
    for h in components:
        n *= h.cols
    return n


@dataclass(frozen=True)
class ComponentFactors:
    """One component's decomposition p @ h @ q = l @ GP(d) @ r."""

    p: BitMatrix
    q: BitMatrix
    l: BitMatrix
    d: IncompletePermutation
    r: BitMatrix


@dataclass(frozen=True)
class LayeredDecomposition:
    """Factors of p @ M(H, X) @ q = l @ materialize_gp(d) @ r for a layered matrix."""

    p: BitMatrix
    q: BitMatrix
    l: BitMatrix
    d: IncompletePermutation
    r: BitMatrix


def layered_decompose(factors: Sequence[ComponentFactors],
                      subsets: Sequence[Iterable[int]]) -> LayeredDecomposition:
    """Decompose a layered tensor matrix from its component decompositions.

    Per layer the Kronecker identities give
    p_layer @ M(H, X_i) @ q = l_layer @ GP(d_layer) @ r,
    with q = kron(q_i) and r = kron(r_i) shared across layers; stacking
    the layers merges the d factors into GP on the union support, with
    the row-merging factor folded into l.
    """
    shape: Shape = tuple(f.q.rows for f in factors)

    q_full = _kron_all([f.q for f in factors])
    r_full = _kron_all([f.r for f in factors])

    p_layers: list[BitMatrix] = []
    l_layers: list[BitMatrix] = []
    d_layers: list[IncompletePermutation] = []
    for s in subsets:
        xs = set(s)
        p_layers.append(_kron_all(
            [f.p if i in xs else f.q.invert() for i, f in enumerate(factors)]))
        l_layers.append(_kron_all(
            [f.l if i in xs else f.r.invert() for i, f in enumerate(factors)]))
        d_layers.append(_kron_all_ip(
            [f.d if i in xs else IncompletePermutation.identity(f.q.rows)
             for i, f in enumerate(factors)]))

    total_rows = sum(d.rows for d in d_layers)
    union: set[int] = set()
    for d in d_layers:
        union.update(d.placement)
    merged = IncompletePermutation.lexicographic(total_rows, _prod(shape), union)
    lam = lambda_factor(d_layers, merged)
    return LayeredDecomposition(
        p=block_diag(p_layers),
        q=q_full,
        l=block_diag(l_layers) @ lam,
        d=merged,
        r=r_full,
    )


def _prod(shape: Shape) -> int:
    n = 1
    for s in shape:
        n *= s
    return n


def _kron_all(ms: Sequence[BitMatrix]) -> BitMatrix:
    out = BitMatrix.identity(1)
    for m in ms:
        out = out.kron(m)
    return out


def _kron_all_ip(ps: Sequence[IncompletePermutation]) -> IncompletePermutation:
    out = IncompletePermutation.identity(1)
    for p in ps:
        out = out.kron(p)
    return out
