"""Built-in catalog of intersecting-subset codes with published parameters.

Each entry stores the defining subset tuples together with the claimed
parameters (block size, logical count, distances, syndrome measurement
profile, and the middle layer K when one was published).  Claims are
stored verbatim and re-derived by :func:`verify_entry`; nothing is
assumed.  One entry (``asym32``) deliberately keeps a duplicated subset
exactly as published; verification reports the consequences rather than
repairing the list.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .csscode import CssCode, build_css
from .grm import css_xz_distances
from .oracle import DEFAULT_DIM_CAP, css_distances_bruteforce
from .posets import SubsetTuple

ORACLE_VERIFIED = "verified"
ORACLE_FORMULA_ONLY = "formula-only"
ORACLE_REFUSED = "refused"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    m: int
    x: SubsetTuple
    z: SubsetTuple
    claimed_n: int
    claimed_k: int
    claimed_d_x: int
    claimed_d_z: int
    claimed_profile: dict[int, int]
    claimed_middle: tuple[frozenset[int], ...] | None = None
    note: str = ""

    def build(self) -> CssCode:
        return build_css(None, self.x, self.z, self.m)

    def to_json(self) -> dict:
        out = {"name": self.name, "m": self.m,
               "x": self.x.to_json(), "z": self.z.to_json(),
               "claimed": {"n": self.claimed_n, "k": self.claimed_k,
                           "d_x": self.claimed_d_x, "d_z": self.claimed_d_z,
                           "profile": {str(w): c for w, c in
                                       sorted(self.claimed_profile.items())}}}
        if self.claimed_middle is not None:
            out["claimed_middle"] = [sorted(s) for s in self.claimed_middle]
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CatalogEntry":
        claimed = data["claimed"]
        middle = None
        if "claimed_middle" in data:
            middle = tuple(frozenset(s) for s in data["claimed_middle"])
        return cls(name=data["name"], m=data["m"],
                   x=SubsetTuple.from_json(data["x"], data["m"]),
                   z=SubsetTuple.from_json(data["z"], data["m"]),
                   claimed_n=claimed["n"], claimed_k=claimed["k"],
                   claimed_d_x=claimed["d_x"], claimed_d_z=claimed["d_z"],
                   claimed_profile={int(w): c for w, c in claimed["profile"].items()},
                   claimed_middle=middle, note=data.get("note", ""))


@dataclass(frozen=True)
class ClaimCheck:
    claim: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass(frozen=True)
class VerificationReport:
    name: str
    claims: tuple[ClaimCheck, ...]
    oracle_status: str
    structural_passed: bool
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.structural_passed and all(c.passed for c in self.claims)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed,
                "oracle": self.oracle_status,
                "structural_passed": self.structural_passed,
                "claims": [{"claim": c.claim, "expected": _jsonable(c.expected),
                            "computed": _jsonable(c.computed), "passed": c.passed}
                           for c in self.claims],
                "notes": list(self.notes)}


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in sorted(v.items())}
    if isinstance(v, (list, tuple, set, frozenset)):
        return sorted((_jsonable(x) for x in v), key=repr)
    return v


def _lex_subsets(subsets) -> list[list[int]]:
    return sorted(sorted(s) for s in subsets)


def standard_rm_entry(r: int, m: int) -> CatalogEntry:
    """Entry with K equal to the full weight-r layer of the m-cube.

    Both kernels are classical Reed-Muller codes; distances multiply to
    the block size, the optimum for this family.
    """
    if not 0 < r < m:
        raise ValueError("need 0 < r < m")
    x = _lex_subsets(itertools.combinations(range(m), m - r + 1))
    z = _lex_subsets(itertools.combinations(range(m), r + 1))
    from math import comb
    profile: dict[int, int] = {}
    profile[2 ** (m - r + 1)] = comb(m, r - 1) * 2 ** (r - 1)
    profile[2 ** (r + 1)] = profile.get(2 ** (r + 1), 0) + comb(m, r + 1) * 2 ** (m - r - 1)
    middle = tuple(frozenset(c) for c in itertools.combinations(range(m), r))
    return CatalogEntry(
        name=f"rm_r{r}_m{m}", m=m,
        x=SubsetTuple.of(m, x), z=SubsetTuple.of(m, z),
        claimed_n=2 ** m, claimed_k=comb(m, r),
        claimed_d_x=2 ** (m - r), claimed_d_z=2 ** r,
        claimed_profile=profile, claimed_middle=middle)


def asymmetric_entry(m: int) -> CatalogEntry:
    """Single-logical-qubit entry with distances 2^(m-1) and 2."""
    if m < 3:
        raise ValueError("need m >= 3")
    x = [[0]]
    z = [[0, i] for i in range(1, m)]
    profile = {2: 2 ** (m - 1), 4: (m - 1) * 2 ** (m - 2)}
    return CatalogEntry(
        name=f"hasym{2 ** m}", m=m,
        x=SubsetTuple.of(m, x), z=SubsetTuple.of(m, z),
        claimed_n=2 ** m, claimed_k=1,
        claimed_d_x=2 ** (m - 1), claimed_d_z=2,
        claimed_profile=profile, claimed_middle=(frozenset({0}),))


def _parse(names: str) -> list[list[int]]:
    """'013,124' -> [[0,1,3],[1,2,4]] (single-digit element shorthand)."""
    return [[int(ch) for ch in tok] for tok in names.split(",")]


def catalog() -> list[CatalogEntry]:
    entries: list[CatalogEntry] = [standard_rm_entry(2, 4)]

    entries.append(CatalogEntry(
        name="spc2d", m=4,
        x=SubsetTuple.of(4, [[0, 1], [2, 3]]),
        z=SubsetTuple.of(4, [[0, 2], [1, 3]]),
        claimed_n=16, claimed_k=2, claimed_d_x=4, claimed_d_z=4,
        claimed_profile={4: 16},
        claimed_middle=(frozenset({1, 2}), frozenset({0, 3}))))

    entries.append(CatalogEntry(
        name="spc3d", m=9,
        x=SubsetTuple.of(9, [[0, 1, 2], [3, 4, 5], [6, 7, 8]]),
        z=SubsetTuple.of(9, [[0, 3, 6], [1, 4, 7], [2, 5, 8]]),
        claimed_n=512, claimed_k=174, claimed_d_x=8, claimed_d_z=8,
        claimed_profile={8: 384}))

    entries.append(CatalogEntry(
        name="cyc32", m=5,
        x=SubsetTuple.of(5, _parse("013,124,230")),
        z=SubsetTuple.of(5, _parse("013,124,230")),
        claimed_n=32, claimed_k=14, claimed_d_x=4, claimed_d_z=4,
        claimed_profile={8: 24}))

    cyc64 = _lex_subsets(_parse("013,124,235,340,451,502"))
    entries.append(CatalogEntry(
        name="cyc64", m=6,
        x=SubsetTuple.of(6, cyc64), z=SubsetTuple.of(6, cyc64),
        claimed_n=64, claimed_k=8, claimed_d_x=8, claimed_d_z=8,
        claimed_profile={8: 96},
        claimed_middle=tuple(frozenset(s) for s in
                             _parse("012,123,234,345,450,501,024,135"))))

    cyc128 = _lex_subsets(_parse("013,124,235,346,450,561"))
    entries.append(CatalogEntry(
        name="cyc128", m=7,
        x=SubsetTuple.of(7, cyc128), z=SubsetTuple.of(7, cyc128),
        claimed_n=128, claimed_k=10, claimed_d_x=8, claimed_d_z=8,
        claimed_profile={8: 192},
        claimed_middle=tuple(frozenset(s) for s in
                             _parse("345,145,135,134,1345,026,0256,0246,0236,0126"))))

    entries.append(CatalogEntry(
        name="ex128_24", m=7,
        x=SubsetTuple.of(7, _lex_subsets(_parse("012,013,234,356,456"))),
        z=SubsetTuple.of(7, _lex_subsets(_parse("143,146,360,325,025"))),
        claimed_n=128, claimed_k=24, claimed_d_x=8, claimed_d_z=8,
        claimed_profile={8: 160}))

    entries.append(CatalogEntry(
        name="ex256_6", m=8,
        x=SubsetTuple.of(8, _lex_subsets(_parse("012,123,234,345,456,567,670,701"))),
        z=SubsetTuple.of(8, _lex_subsets(_parse("136,247,350,461,572,603,714,025"))),
        claimed_n=256, claimed_k=6, claimed_d_x=16, claimed_d_z=16,
        claimed_profile={8: 512},
        claimed_middle=tuple(frozenset(s) for s in
                             _parse("2367,1357,1256,0347,0246,0145"))))

    entries.append(CatalogEntry(
        name="ex512_18", m=9,
        x=SubsetTuple.of(9, _lex_subsets(_parse("012,345,678,048,156,237"))),
        z=SubsetTuple.of(9, _lex_subsets(_parse("036,147,258,246,138,057"))),
        claimed_n=512, claimed_k=18, claimed_d_x=16, claimed_d_z=16,
        claimed_profile={8: 768}))

    entries.extend(asymmetric_entry(m) for m in range(3, 10))

    # published Z list includes {1,3} twice; kept verbatim on purpose
    entries.append(CatalogEntry(
        name="asym32", m=5,
        x=SubsetTuple.of(5, [[0, 1], [2, 3, 4]]),
        z=SubsetTuple.of(5, [[0, 2], [1, 3], [0, 4], [1, 4], [1, 3]]),
        claimed_n=32, claimed_k=2, claimed_d_x=8, claimed_d_z=4,
        claimed_profile={4: 48, 8: 4},
        claimed_middle=(frozenset({0, 3}), frozenset({1, 2})),
        note="the Z list repeats {1,3}; stored verbatim, so one measurement "
             "group appears twice and the weight-4 count includes it"))

    entries.append(CatalogEntry(
        name="asym128", m=7,
        x=SubsetTuple.of(7, _lex_subsets(_parse("013,124,235,346,450,561,602,134"))),
        z=SubsetTuple.of(7, _lex_subsets(_parse("013,124,235,346,450,561"))),
        claimed_n=128, claimed_k=3, claimed_d_x=8, claimed_d_z=16,
        claimed_profile={8: 224},
        claimed_middle=tuple(frozenset(s) for s in _parse("0246,0236,0126"))))

    return entries


def get_entry(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise KeyError(f"no catalog entry named {name!r}")


def verify_entry(e: CatalogEntry, dim_cap: int = DEFAULT_DIM_CAP,
                 threads: int = 1) -> VerificationReport:
    code = e.build()
    claims = [ClaimCheck("n", e.claimed_n, code.n),
              ClaimCheck("k", e.claimed_k, code.k)]
    notes = [e.note] if e.note else []

    if e.claimed_middle is not None:
        claimed = frozenset(frozenset(s) for s in e.claimed_middle)
        computed = frozenset(
            frozenset(i for i, b in enumerate(t) if b) for t in code.middle)
        claims.append(ClaimCheck("middle layer", claimed, computed))
        if claimed != computed:
            notes.append(
                f"middle layer differs from the published list: "
                f"missing={_jsonable(claimed - computed)} "
                f"extra={_jsonable(computed - claimed)}")

    params = code.parameters()
    claims.append(ClaimCheck("measurement profile", e.claimed_profile,
                             params["profile"]))

    d_x, d_z = css_xz_distances(code.x, code.z)
    claims.append(ClaimCheck("d_x", e.claimed_d_x, d_x))
    claims.append(ClaimCheck("d_z", e.claimed_d_z, d_z))

    mx, mz = code.check_matrices()
    dim_x = code.n - mz.rank()  # enumeration space for d_x lives in ker(M_z)
    dim_z = code.n - mx.rank()
    if max(dim_x, dim_z) <= dim_cap:
        bx, bz = css_distances_bruteforce(mx, mz, dim_cap=dim_cap, threads=threads)
        claims.append(ClaimCheck("d_x (brute force)", d_x, bx))
        claims.append(ClaimCheck("d_z (brute force)", d_z, bz))
        oracle_status = ORACLE_VERIFIED
    else:
        oracle_status = ORACLE_REFUSED
        notes.append(f"brute force refused: kernel dimension "
                     f"{max(dim_x, dim_z)} exceeds cap {dim_cap}")

    structural = code.verify()
    if not structural.passed:
        notes.extend(f"structural check failed: {c.name}"
                     for c in structural.checks if not c.passed)
    return VerificationReport(e.name, tuple(claims), oracle_status,
                              structural.passed, tuple(notes))
