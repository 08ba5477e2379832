"""The intersecting-subset CSS code and all of its derived objects.

A code is specified by a tuple of orthogonal component pairs (one X and
one Z check matrix per tensor position) and two tuples of subsets of
positions, every X subset meeting every Z subset.  From the joint
component decompositions the code's column indices split into a
decreasing set (prepared |+>), an increasing set (prepared |0>) and a
middle layer K carrying the logical qubits; stabilizer, normalizer and
logical generators, the syndrome schedule, the CNOT encoding circuit and
the syndrome-redundancy encoder all fall out of that decomposition.

Qubit indices are the lexicographic linearization of tuple indices,
shared with the Kronecker convention in :mod:`isscodes.gf2`.  Column
permutations coming from the component decompositions are tracked
explicitly, so every emitted object addresses original qubit labels.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .decomp import (ComponentFactors, IncompletePermutation, JointDecomposition,
                     LayeredDecomposition, joint_decompose, layered_decompose,
                     layered_tensor, materialize_gp)
from .gf2 import BitMatrix, BitVector, block_diag
from .posets import (DECREASING, INCREASING, IndexTuple, MonotoneSet, Shape,
                     SubsetTuple, complement_partition, lin_index, unlin_index)

SPC = BitMatrix.from_rows([[1, 1]])

STABILIZER = "stabilizer"
NORMALIZER = "normalizer"
LOGICAL = "logical"


@dataclass(frozen=True)
class ComponentPair:
    """One tensor position's X/Z check matrices with hx @ hz^T == 0."""

    hx: BitMatrix
    hz: BitMatrix

    def __post_init__(self) -> None:
        if self.hx.cols != self.hz.cols:
            raise ValueError("component column mismatch")
        if not (self.hx @ self.hz.transpose()).is_zero():
            raise ValueError("component pair is not orthogonal")

    @property
    def n(self) -> int:
        return self.hx.cols

    @cached_property
    def joint(self) -> JointDecomposition:
        return joint_decompose(self.hx, self.hz)

    @property
    def r_x(self) -> int:
        return self.joint.r_a

    @property
    def r_z(self) -> int:
        return self.joint.r_b

    @classmethod
    def spc(cls) -> "ComponentPair":
        return cls(SPC, SPC)


@dataclass(frozen=True)
class SyndromeLayer:
    pauli: str  # "X" or "Z"
    subset: frozenset[int]
    measurements: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SyndromeSchedule:
    layers: tuple[SyndromeLayer, ...]

    def to_json(self) -> dict:
        return {"layers": [
            {"pauli": layer.pauli,
             "subset": sorted(layer.subset),
             "measurements": [list(m) for m in layer.measurements]}
            for layer in self.layers]}


@dataclass(frozen=True)
class CircuitSpec:
    """Qubit preparations plus ordered layers of CNOT (control, target) pairs."""

    n: int
    prep_plus: tuple[int, ...]
    prep_zero: tuple[int, ...]
    data: tuple[int, ...]
    layers: tuple[tuple[tuple[int, int], ...], ...]

    def to_text(self) -> str:
        lines = [f"PREP+ {q}" for q in self.prep_plus]
        lines += [f"PREP0 {q}" for q in self.prep_zero]
        for i, layer in enumerate(self.layers):
            lines.append(f"LAYER {i}")
            lines += [f"CNOT {c} {t}" for c, t in layer]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CodeReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                           for c in self.checks]}


class CssCode:
    """An intersecting-subset CSS code; construct via :func:`build_css`."""

    def __init__(self, components: Sequence[ComponentPair],
                 x: SubsetTuple, z: SubsetTuple):
        self.components = tuple(components)
        self.m = len(self.components)
        self.x = x
        self.z = z
        self.shape: Shape = tuple(c.n for c in self.components)
        self.n = 1
        for ni in self.shape:
            self.n *= ni
        self._validate()
        self.s_x = self._sx_generators()
        self.s_z = self._sz_generators()
        self.down, self.middle, self.up = complement_partition(
            self.s_x, self.s_z, self.shape)

    # -- construction checks -------------------------------------------

    def _validate(self) -> None:
        if self.x.m != self.m or self.z.m != self.m:
            raise ValueError("subset tuples do not match the component count")
        for i, xi in enumerate(self.x.subsets):
            for j, zj in enumerate(self.z.subsets):
                if not (xi & zj):
                    raise ValueError(
                        f"intersecting condition violated: X_{i} and Z_{j} are disjoint")

    def _sx_generators(self) -> list[IndexTuple]:
        out = []
        for s in self.x.subsets:
            row = tuple(
                (self.components[c].r_x - 1) if c in s else (self.shape[c] - 1)
                for c in range(self.m))
            out.append(row)
        return out

    def _sz_generators(self) -> list[IndexTuple]:
        out = []
        for s in self.z.subsets:
            row = tuple(
                (self.shape[c] - self.components[c].r_z) if c in s else 0
                for c in range(self.m))
            out.append(row)
        return out

    # -- basic parameters ------------------------------------------------

    @property
    def k(self) -> int:
        return len(self.middle)

    # -- cached decomposition factors -------------------------------------

    @cached_property
    def x_factors(self) -> LayeredDecomposition:
        factors = [ComponentFactors(p=c.joint.p_a, q=c.joint.q, l=c.joint.l_a,
                                    d=c.joint.d_a, r=c.joint.r)
                   for c in self.components]
        return layered_decompose(factors, self.x.subsets)

    @cached_property
    def z_factors(self) -> LayeredDecomposition:
        factors = [ComponentFactors(p=c.joint.p_b, q=c.joint.q, l=c.joint.l_b,
                                    d=c.joint.d_b, r=c.joint.r_inv_t)
                   for c in self.components]
        return layered_decompose(factors, self.z.subsets)

    @cached_property
    def q_full(self) -> BitMatrix:
        out = BitMatrix.identity(1)
        for c in self.components:
            out = out.kron(c.joint.q)
        return out

    @cached_property
    def r_full(self) -> BitMatrix:
        out = BitMatrix.identity(1)
        for c in self.components:
            out = out.kron(c.joint.r)
        return out

    @cached_property
    def r_full_inv_t(self) -> BitMatrix:
        out = BitMatrix.identity(1)
        for c in self.components:
            out = out.kron(c.joint.r_inv_t)
        return out

    @cached_property
    def _qubit_relabel(self) -> list[int]:
        """Physical qubit index of each decomposed column coordinate."""
        phys = [0] * self.n
        for p in range(self.n):
            w = self.q_full.data[p]
            phys[(w & -w).bit_length() - 1] = p
        return phys

    def _rows_at(self, base: BitMatrix, tuples: Iterable[IndexTuple]) -> BitMatrix:
        """Rows of base @ q_full^T selected at the given tuple indices (lex order)."""
        full = base @ self.q_full.transpose()
        rows = [full.data[lin_index(t, self.shape)] for t in sorted(tuples)]
        return BitMatrix(len(rows), self.n, tuple(rows))

    # -- derived objects per the construction ------------------------------

    def check_matrices(self) -> tuple[BitMatrix, BitMatrix]:
        """The stacked X and Z measurement matrices (one layer per subset)."""
        hx = [c.hx for c in self.components]
        hz = [c.hz for c in self.components]
        mx = BitMatrix.vstack([layered_tensor(hx, s) for s in self.x.subsets]) \
            if self.x.subsets else BitMatrix.zeros(0, self.n)
        mz = BitMatrix.vstack([layered_tensor(hz, s) for s in self.z.subsets]) \
            if self.z.subsets else BitMatrix.zeros(0, self.n)
        return mx, mz

    def canonical_generators(self, kind: str) -> tuple[BitMatrix, BitMatrix]:
        """Independent generator rows (X part, Z part) in original qubit labels."""
        if kind == STABILIZER:
            t_x, t_z = self.down.members, self.up.members
        elif kind == NORMALIZER:
            t_x = frozenset(self.down.members | self.middle)
            t_z = frozenset(self.up.members | self.middle)
        elif kind == LOGICAL:
            t_x = t_z = self.middle
        else:
            raise ValueError(f"bad generator kind {kind!r}")
        x_part = self._rows_at(self.r_full, t_x)
        z_part = self._rows_at(self.r_full_inv_t, t_z)
        return x_part, z_part

    def parameters(self) -> dict:
        """Block size, logical count and the syndrome measurement profile."""
        mx, mz = self.check_matrices()
        profile: dict[int, int] = {}
        for w in mx.row_weights() + mz.row_weights():
            profile[w] = profile.get(w, 0) + 1
        layers = []
        row = 0
        for s in self.x.subsets:
            cnt = _layer_rows(self, s, "X")
            weights = sorted(set(mx.row_weights()[row:row + cnt]))
            layers.append({"pauli": "X", "subset": sorted(s),
                           "count": cnt, "weights": weights})
            row += cnt
        row = 0
        for s in self.z.subsets:
            cnt = _layer_rows(self, s, "Z")
            weights = sorted(set(mz.row_weights()[row:row + cnt]))
            layers.append({"pauli": "Z", "subset": sorted(s),
                           "count": cnt, "weights": weights})
            row += cnt
        return {"n": self.n, "k": self.k, "profile": profile, "layers": layers}

    def syndrome_schedule(self) -> SyndromeSchedule:
        """X layers then Z layers; within a layer one measurement per
        (row of the in-subset Kronecker product, assignment of the
        out-of-subset coordinates)."""
        layers = []
        for pauli, tuples in (("X", self.x.subsets), ("Z", self.z.subsets)):
            for s in tuples:
                layers.append(self._schedule_layer(pauli, s))
        return SyndromeSchedule(tuple(layers))

    def _schedule_layer(self, pauli: str, subset: frozenset[int]) -> SyndromeLayer:
        mats = [(c.hx if pauli == "X" else c.hz) for c in self.components]
        inside = sorted(subset)
        outside = [c for c in range(self.m) if c not in subset]
        small = BitMatrix.identity(1)
        for c in inside:
            small = small.kron(mats[c])
        sub_shape = tuple(self.shape[c] for c in inside)
        measurements = []
        for y in itertools.product(*(range(self.shape[c]) for c in outside)):
            fixed = dict(zip(outside, y))
            for w in small.data:
                qubits = []
                for bit in _bit_positions(w):
                    local = unlin_index(bit, sub_shape) if sub_shape else ()
                    full = [0] * self.m
                    for c, v in fixed.items():
                        full[c] = v
                    for c, v in zip(inside, local):
                        full[c] = v
                    qubits.append(lin_index(tuple(full), self.shape))
                measurements.append(tuple(sorted(qubits)))
        return SyndromeLayer(pauli, subset, tuple(measurements))

    def encoding_circuit(self) -> CircuitSpec:
        """Initialization plus m commuting CNOT layers realizing the code.

        Layer i applies the unit-triangular component factor R_i across
        all tuple positions that differ only in coordinate i; CNOTs are
        extracted by column-by-column elimination of R_i.
        """
        phys = self._qubit_relabel
        prep_plus = tuple(sorted(phys[lin_index(t, self.shape)]
                                 for t in self.down.members))
        prep_zero = tuple(sorted(phys[lin_index(t, self.shape)]
                                 for t in self.up.members))
        data = tuple(sorted(phys[lin_index(t, self.shape)]
                            for t in self.middle))
        layers = []
        for i, comp in enumerate(self.components):
            gates = _transvection_gates(comp.joint.r)
            pairs = []
            other = [c for c in range(self.m) if c != i]
            for y in itertools.product(*(range(self.shape[c]) for c in other)):
                fixed = dict(zip(other, y))
                for c_local, t_local in gates:
                    full_c = [0] * self.m
                    full_t = [0] * self.m
                    for c, v in fixed.items():
                        full_c[c] = v
                        full_t[c] = v
                    full_c[i] = c_local
                    full_t[i] = t_local
                    pairs.append((phys[lin_index(tuple(full_c), self.shape)],
                                  phys[lin_index(tuple(full_t), self.shape)]))
            layers.append(tuple(pairs))
        return CircuitSpec(self.n, prep_plus, prep_zero, data, tuple(layers))

    # -- syndrome redundancy ----------------------------------------------

    def raw_syndrome(self, side: str, error: BitVector) -> BitVector:
        """Independent-generator syndrome GP(T) R Q^T e^T for one side."""
        gens_x, gens_z = self.canonical_generators(STABILIZER)
        gens = gens_x if side == "x" else gens_z
        return gens.mul_vector(error)

    def syndrome_encode(self, side: str, raw: BitVector) -> BitVector:
        """Pad the raw syndrome into the stacked row index and apply P^T L.

        The result equals the stacked measurement outcomes M e^T whenever
        raw came from :meth:`raw_syndrome` on the same error.
        """
        ld = self.x_factors if side == "x" else self.z_factors
        support = len(ld.d.placement)
        if raw.length != support:
            raise ValueError(
                f"raw syndrome length {raw.length} != {support} independent generators")
        padded = BitVector(ld.d.rows, raw.bits)  # support rows are 0..|T|-1
        return ld.p.transpose().mul_vector(ld.l.mul_vector(padded))

    # -- structural verification -------------------------------------------

    def verify(self) -> CodeReport:
        checks: list[CheckResult] = []

        def add(name: str, ok: bool, detail: str = "") -> None:
            checks.append(CheckResult(name, ok, detail))

        for i, c in enumerate(self.components):
            ok = (c.hx @ c.hz.transpose()).is_zero()
            add(f"component {i} orthogonality", ok)
        bad = [(i, j) for i, xi in enumerate(self.x.subsets)
               for j, zj in enumerate(self.z.subsets) if not (xi & zj)]
        add("intersecting condition", not bad, f"disjoint pairs: {bad}" if bad else "")

        mx, mz = self.check_matrices()
        add("cross-commutation", (mx @ mz.transpose()).is_zero())

        gens_x, gens_z = self.canonical_generators(STABILIZER)
        add("span equality X", _same_row_space(mx, gens_x))
        add("span equality Z", _same_row_space(mz, gens_z))
        add("counting", self.n - mx.rank() - mz.rank() == self.k,
            f"n={self.n} rank_x={mx.rank()} rank_z={mz.rank()} k={self.k}")

        # symplectic validity of the stacked stabilizer generators
        sym_ok = (gens_x @ gens_z.transpose()).is_zero()
        add("symplectic validity", sym_ok)

        log_x, log_z = self.canonical_generators(LOGICAL)
        pairing = log_x @ log_z.transpose()
        add("logical pairing", pairing == BitMatrix.identity(self.k))
        add("logicals commute with stabilizer",
            (log_x @ gens_z.transpose()).is_zero()
            and (gens_x @ log_z.transpose()).is_zero())

        sched = self.syndrome_schedule()
        disjoint = True
        for layer in sched.layers:
            seen: set[int] = set()
            for meas in layer.measurements:
                if seen & set(meas):
                    disjoint = False
                seen.update(meas)
        add("schedule layer disjointness", disjoint)
        sched_rows = sorted(
            _qubits_to_word(m) for layer in sched.layers for m in layer.measurements)
        check_rows = sorted(mx.data + mz.data)
        add("schedule matches check matrices", sched_rows == check_rows)

        add("encoding pushforward", self._encoding_pushforward_ok(gens_x, gens_z))
        return CodeReport(tuple(checks))

    def _encoding_pushforward_ok(self, gens_x: BitMatrix, gens_z: BitMatrix) -> bool:
        circuit = self.encoding_circuit()
        x_rows = [1 << q for q in circuit.prep_plus]
        z_rows = [1 << q for q in circuit.prep_zero]
        x_rows, z_rows = _push_through(circuit, x_rows, z_rows)
        got_x = BitMatrix(len(x_rows), self.n, tuple(x_rows))
        got_z = BitMatrix(len(z_rows), self.n, tuple(z_rows))
        return _same_row_space(got_x, gens_x) and _same_row_space(got_z, gens_z)


def _layer_rows(code: CssCode, subset: frozenset[int], pauli: str) -> int:
    cnt = 1
    for c in range(code.m):
        comp = code.components[c]
        if c in subset:
            cnt *= (comp.hx.rows if pauli == "X" else comp.hz.rows)
        else:
            cnt *= code.shape[c]
    return cnt


def _bit_positions(w: int) -> list[int]:
    out = []
    while w:
        low = w & -w
        out.append(low.bit_length() - 1)
        w ^= low
    return out


def _qubits_to_word(qubits: Iterable[int]) -> int:
    w = 0
    for q in qubits:
        w |= 1 << q
    return w


def _transvection_gates(r: BitMatrix) -> list[tuple[int, int]]:
    """Ordered (control, target) list whose transvection product equals r.

    r must be unit upper triangular.  Column-by-column elimination
    records the gates reducing r to the identity; the reversed list
    rebuilds r.
    """
    n = r.rows
    cols = [[r.get(i, j) for i in range(n)] for j in range(n)]
    gates = []
    for t in range(1, n):
        for c in range(t - 1, -1, -1):
            if cols[t][c]:
                for i in range(n):
                    cols[t][i] ^= cols[c][i]
                gates.append((c, t))
    for j in range(n):
        for i in range(n):
            if cols[j][i] != (1 if i == j else 0):
                raise ValueError("matrix is not unit upper triangular")
    return list(reversed(gates))


def _push_through(circuit: CircuitSpec, x_rows: list[int],
                  z_rows: list[int]) -> tuple[list[int], list[int]]:
    """Binary-symplectic pushforward of X/Z Pauli rows through the CNOT layers."""
    for layer in circuit.layers:
        for c, t in layer:
            cbit, tbit = 1 << c, 1 << t
            for idx, u in enumerate(x_rows):
                if u & cbit:
                    x_rows[idx] = u ^ tbit
            for idx, v in enumerate(z_rows):
                if v & tbit:
                    z_rows[idx] = v ^ cbit
    return x_rows, z_rows


def _same_row_space(a: BitMatrix, b: BitMatrix) -> bool:
    if a.cols != b.cols:
        return False
    ra = a.rref()[0]
    rb = b.rref()[0]
    return ra == rb


def build_css(components: Sequence[ComponentPair] | None,
              x: SubsetTuple, z: SubsetTuple, m: int | None = None) -> CssCode:
    """Construct an intersecting-subset CSS code.

    When components is None every position gets the single-parity-check
    pair ([1 1], [1 1]); m then defaults to the subset tuples' ground
    set size.
    """
    if components is None:
        if m is None:
            m = x.m
        components = [ComponentPair.spc() for _ in range(m)]
    return CssCode(components, x, z)


def code_from_json(spec: dict | str) -> CssCode:
    """Build a code from the JSON wire format.

    {"m": int, "x": [[...]], "z": [[...]],
     "components": [{"hx": [[...]], "hz": [[...]]}]}   # optional
    """
    if isinstance(spec, str):
        spec = json.loads(spec)
    m = spec.get("m")
    comps = None
    if "components" in spec and spec["components"] is not None:
        comps = [ComponentPair(BitMatrix.from_rows(c["hx"]),
                               BitMatrix.from_rows(c["hz"]))
                 for c in spec["components"]]
        if m is None:
            m = len(comps)
        elif m != len(comps):
            raise ValueError("m does not match the component list")
    if m is None:
        raise ValueError("spec needs m or components")
    x = SubsetTuple.from_json(spec["x"], m)
    z = SubsetTuple.from_json(spec["z"], m)
    return build_css(comps, x, z, m)
