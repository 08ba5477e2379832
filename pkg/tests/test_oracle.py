import itertools
import random

import pytest

from isscodes.gf2 import BitMatrix
from isscodes.oracle import (CosetProblem, EnumerationStats, coset_min_weight,
                             coset_min_weight_stats, css_distances_bruteforce)


def brute_reference(p):
    """Direct enumeration over the containing span, no Gray code."""
    ech, _ = p.containing.rref()
    best = None
    for r in range(1, len(ech) + 1):
        for combo in itertools.combinations(ech, r):
            v = 0
            for w in combo:
                v ^= w
            if v == 0:
                continue
            from isscodes.gf2 import BitVector
            if p.excluded.rows and p.excluded.row_space_contains(
                    BitVector(p.n, v)):
                continue
            if not p.excluded.rows and False:
                continue
            wt = bin(v).count("1")
            if best is None or wt < best:
                best = wt
    return best


def test_known_small_case():
    containing = BitMatrix.from_rows([[1, 1]])
    excluded = BitMatrix.zeros(0, 2)
    p = CosetProblem(2, containing, excluded)
    assert coset_min_weight(p) == 2


def test_excluded_reduces_candidates():
    containing = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    excluded = BitMatrix.from_rows([[1, 1, 0]])
    p = CosetProblem(3, containing, excluded)
    # candidates are 011 and 101
    assert coset_min_weight(p) == 2


def test_matches_direct_enumeration():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randrange(2, 9)
        r = rng.randrange(1, n + 1)
        containing = BitMatrix.from_bits(
            r, n, [rng.getrandbits(n) for _ in range(r)])
        exc_rows = [w for w in containing.data if w and rng.random() < 0.5]
        excluded = BitMatrix(len(exc_rows), n, tuple(exc_rows))
        p = CosetProblem(n, containing, excluded)
        assert coset_min_weight(p) == brute_reference(p)


def test_visit_counter():
    rng = random.Random(19)
    for _ in range(20):
        n = rng.randrange(2, 10)
        r = rng.randrange(1, n + 1)
        containing = BitMatrix.from_bits(
            r, n, [rng.getrandbits(n) for _ in range(r)])
        p = CosetProblem(n, containing, BitMatrix.zeros(0, n))
        stats = coset_min_weight_stats(p)
        assert stats.visited == (1 << stats.dimension) - 1


def test_refusal_above_cap():
    n = 40
    containing = BitMatrix.identity(n)
    p = CosetProblem(n, containing, BitMatrix.zeros(0, n))
    stats = coset_min_weight_stats(p, dim_cap=26)
    assert stats.min_weight is None
    assert stats.visited == 0
    assert coset_min_weight(p, dim_cap=26) is None


def test_excluded_must_be_contained():
    containing = BitMatrix.from_rows([[1, 1, 0]])
    excluded = BitMatrix.from_rows([[0, 0, 1]])
    with pytest.raises(ValueError):
        CosetProblem(3, containing, excluded)


def test_threads_match_single():
    rng = random.Random(23)
    n = 10
    containing = BitMatrix.from_bits(
        6, n, [rng.getrandbits(n) for _ in range(6)])
    p = CosetProblem(n, containing, BitMatrix.zeros(0, n))
    assert coset_min_weight(p, threads=3) == coset_min_weight(p)


def test_css_distances_bruteforce_known():
    # [[4,2,2]]: both checks the full parity on four qubits
    hx = BitMatrix.from_rows([[1, 1, 1, 1]])
    hz = BitMatrix.from_rows([[1, 1, 1, 1]])
    assert css_distances_bruteforce(hx, hz) == (2, 2)
