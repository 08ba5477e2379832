"""Acceptance gate: one test (one pass/fail line under pytest -v) per criterion."""

import itertools
import random
import time

from isscodes.catalog import catalog, get_entry
from isscodes.csscode import _push_through, build_css
from isscodes.decomp import joint_decompose, materialize_gp
from isscodes.gf2 import BitMatrix, BitVector
from isscodes.grm import (NestedPair, css_xz_distances, dual_parameter_set,
                          grm_generator, nested_distance, nested_distance_uuv,
                          r_matrix)
from isscodes.oracle import css_distances_bruteforce
from isscodes.posets import (DECREASING, MonotoneSet, SubsetTuple, box, closure,
                             complement_partition, lin_index)

from test_decomp import check_joint, rand_orthogonal_pair


def _report(num, desc, elapsed, limit):
    print(f"criterion {num} PASS ({elapsed:.1f}s / limit {limit}s): {desc}")
    assert elapsed < limit, f"criterion {num} exceeded {limit}s ({elapsed:.1f}s)"


def test_criterion_1_catalog_parameters():
    t0 = time.time()
    for e in catalog():
        code = e.build()
        assert (code.n, code.k) == (e.claimed_n, e.claimed_k), e.name
    _report(1, "computed (n, k) matches the published claim for all entries",
            time.time() - t0, 10)


def test_criterion_2_distance_formula():
    t0 = time.time()
    for e in catalog():
        assert css_xz_distances(e.x, e.z) == (e.claimed_d_x, e.claimed_d_z), e.name
    _report(2, "closed-form distances match every published (d_x, d_z)",
            time.time() - t0, 1)


def test_criterion_3_oracle_cross_check():
    t0 = time.time()
    enumerable = ["rm_r2_m4", "spc2d", "cyc32", "asym32",
                  "hasym8", "hasym16", "hasym32"]
    for name in enumerable:
        e = get_entry(name)
        mx, mz = e.build().check_matrices()
        got = css_distances_bruteforce(mx, mz)
        assert got == (e.claimed_d_x, e.claimed_d_z), (name, got)
    for name in ["spc3d", "cyc64", "hasym64", "ex256_6"]:
        e = get_entry(name)
        mx, mz = e.build().check_matrices()
        assert css_distances_bruteforce(mx, mz) == (None, None), name
    _report(3, "brute force agrees where enumerable; larger entries refuse",
            time.time() - t0, 120)


def test_criterion_4_measurement_profiles():
    t0 = time.time()
    fixed = {"spc2d": {4: 16}, "spc3d": {8: 384}, "cyc32": {8: 24},
             "asym32": {4: 48, 8: 4}, "ex256_6": {8: 512},
             "ex128_24": {8: 160}}
    for name, want in fixed.items():
        assert get_entry(name).build().parameters()["profile"] == want, name
    # parametric family formulas
    from math import comb
    for r, m in [(1, 3), (2, 4), (2, 5), (3, 5)]:
        x = SubsetTuple.of(m, itertools.combinations(range(m), m - r + 1))
        z = SubsetTuple.of(m, itertools.combinations(range(m), r + 1))
        prof = build_css(None, x, z).parameters()["profile"]
        want = {}
        want[2 ** (m - r + 1)] = comb(m, r - 1) * 2 ** (r - 1)
        want[2 ** (r + 1)] = want.get(2 ** (r + 1), 0) + \
            comb(m, r + 1) * 2 ** (m - r - 1)
        assert prof == want, (r, m)
    for m in range(3, 10):
        prof = get_entry(f"hasym{1 << m}").build().parameters()["profile"]
        assert prof == {2: 2 ** (m - 1), 4: (m - 1) * 2 ** (m - 2)}, m
    _report(4, "measurement weight profiles match, fixed and parametric",
            time.time() - t0, 10)


def test_criterion_5_joint_decomposition_suite():
    t0 = time.time()
    rng = random.Random(1234)
    for _ in range(500):
        a, b = rand_orthogonal_pair(rng, max_rows=8, max_cols=12)
        check_joint(a, b)
    _report(5, "500 random orthogonal pairs reassemble with all invariants",
            time.time() - t0, 5)


def _random_antichain_closure(rng, m, max_gens=3):
    gens = [tuple(rng.randrange(2) for _ in range(m))
            for _ in range(rng.randrange(1, max_gens + 1))]
    return closure(gens, (2,) * m, DECREASING)


def _all_down_sets(m):
    """All decreasing subsets of the m-cube as frozensets of tuples."""
    elems = sorted(box((2,) * m))
    down = [frozenset()]
    for t in elems:  # lexicographic = linear extension of the partial order
        below = frozenset(u for u in elems
                          if all(a <= b for a, b in zip(u, t)) and u != t)
        down += [s | {t} for s in down if below <= s]
    return down


def _coset_weight_table(members, m):
    """(coefficient mask, weight) for every nonzero row combination."""
    rm = r_matrix(m)
    rows = [rm.data[lin_index(t, (2,) * m)] for t in sorted(members)]
    recs = []
    acc = 0
    for i in range(1, 1 << len(rows)):
        acc ^= rows[(i & -i).bit_length() - 1]
        recs.append((i ^ (i >> 1), acc.bit_count()))
    return recs


def _mask(members_sorted, subset):
    msk = 0
    for j, t in enumerate(members_sorted):
        if t in subset:
            msk |= 1 << j
    return msk


def _check_nested_pair(t_members, s_members, m, recs):
    ts = sorted(t_members)
    smask = _mask(ts, s_members)
    oracle = min((w for g, w in recs if g & ~smask), default=None)
    t_set = MonotoneSet((2,) * m, frozenset(t_members), DECREASING)
    s_set = MonotoneSet((2,) * m, frozenset(s_members), DECREASING)
    pair = NestedPair(s_set, t_set)
    formula = nested_distance(pair)
    assert formula == oracle, (sorted(t_members), sorted(s_members))
    assert nested_distance_uuv(pair) == formula


def test_criterion_6_grm_property_suite():
    t0 = time.time()
    rng = random.Random(99)
    # duality for random antichain-generated decreasing sets, m <= 5
    for _ in range(120):
        m = rng.randrange(1, 6)
        s = _random_antichain_closure(rng, m)
        gs = grm_generator(s).generator
        gd = grm_generator(dual_parameter_set(s)).generator
        assert (gs @ gd.transpose()).is_zero()
        assert gs.rank() + gd.rank() == 1 << m
    # nested distances: every decreasing pair at m <= 4
    for m in range(5):
        downs = _all_down_sets(m)
        for t_members in downs:
            if not t_members:
                continue
            recs = _coset_weight_table(t_members, m)
            for s_members in downs:
                if s_members <= t_members:
                    _check_nested_pair(t_members, s_members, m, recs)
    # 200 random pairs at m = 5 (containing sets capped for enumerability)
    pairs = 0
    while pairs < 200:
        t_set = _random_antichain_closure(rng, 5)
        if not 0 < len(t_set.members) <= 18:
            continue
        recs = _coset_weight_table(t_set.members, 5)
        for _ in range(5):
            seed = [x for x in t_set.members if rng.random() < 0.5]
            s_set = closure(seed, (2,) * 5, DECREASING) if seed else \
                MonotoneSet((2,) * 5, frozenset(), DECREASING)
            _check_nested_pair(t_set.members, s_set.members, 5, recs)
            pairs += 1
    _report(6, "duality, nested-distance formula vs enumeration, and the "
               "(u,u+v) recursion all agree", time.time() - t0, 120)


def test_criterion_7_encoding_circuits():
    t0 = time.time()
    for e in catalog():
        code = e.build()
        if code.n > 512:
            continue
        circ = code.encoding_circuit()
        x_rows = [1 << q for q in circ.prep_plus]
        z_rows = [1 << q for q in circ.prep_zero]
        x_rows, z_rows = _push_through(circ, x_rows, z_rows)
        gx, gz = code.canonical_generators("stabilizer")
        got_x = BitMatrix(len(x_rows), code.n, tuple(x_rows))
        got_z = BitMatrix(len(z_rows), code.n, tuple(z_rows))
        assert got_x.rref()[0] == gx.rref()[0], e.name
        assert got_z.rref()[0] == gz.rref()[0], e.name
        # the m layer matrices commute pairwise
        layers = []
        for i, comp in enumerate(code.components):
            mats = [comp.joint.r if j == i else BitMatrix.identity(c.n)
                    for j, c in enumerate(code.components)]
            acc = BitMatrix.identity(1)
            for mm in mats:
                acc = acc.kron(mm)
            layers.append(acc)
        for a, b in itertools.combinations(layers, 2):
            assert a @ b == b @ a, e.name
    _report(7, "circuit pushforward spans the stabilizer; layers commute",
            time.time() - t0, 30)


def test_criterion_8_syndrome_redundancy():
    t0 = time.time()
    rng = random.Random(42)
    for name in ("spc2d", "cyc32"):
        code = get_entry(name).build()
        mx, mz = code.check_matrices()
        errors = [BitVector(code.n, 1 << q) for q in range(code.n)]
        errors += [BitVector(code.n, rng.getrandbits(code.n))
                   for _ in range(1000)]
        for side, mat in (("x", mx), ("z", mz)):
            for e in errors:
                raw = code.raw_syndrome(side, e)
                assert code.syndrome_encode(side, raw) == mat.mul_vector(e), \
                    (name, side)
    _report(8, "encoded raw syndrome equals the stacked measurement outcome "
               "for all single- and 1000 random multi-qubit errors",
            time.time() - t0, 10)


def test_criterion_9_product_bound():
    t0 = time.time()
    rng = random.Random(7)
    done = 0
    while done < 1000:
        m = rng.randrange(2, 8)
        xs = [frozenset(c for c in range(m) if rng.random() < 0.5) or
              frozenset({rng.randrange(m)}) for _ in range(rng.randrange(1, 4))]
        zs = [frozenset(c for c in range(m) if rng.random() < 0.5) or
              frozenset({rng.randrange(m)}) for _ in range(rng.randrange(1, 4))]
        if any(not (xi & zj) for xi in xs for zj in zs):
            continue
        x = SubsetTuple(m, tuple(xs))
        z = SubsetTuple(m, tuple(zs))
        try:
            d_x, d_z = css_xz_distances(x, z)
        except ValueError:  # empty middle layer: no logical qubits
            continue
        assert d_x * d_z <= 1 << m
        sx = [tuple(0 if c in s else 1 for c in range(m)) for s in xs]
        sz = [tuple(1 if c in s else 0 for c in range(m)) for s in zs]
        _, middle, _ = complement_partition(sx, sz, (2,) * m)
        weights = {sum(t) for t in middle}
        assert (d_x * d_z == 1 << m) == (len(weights) == 1)
        done += 1
    _report(9, "d_x*d_z <= 2^m on 1000 random codes, equality iff all "
               "middle-layer weights coincide", time.time() - t0, 10)
