"""Command-line interface: construct, verify, distance, catalog, grm."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import alist
from .catalog import (ORACLE_FORMULA_ONLY, ORACLE_REFUSED, ORACLE_VERIFIED,
                      catalog, get_entry, verify_entry)
from .csscode import CssCode, code_from_json
from .gf2 import BitMatrix
from .grm import (NestedPair, css_xz_distances, dual_parameter_set,
                  grm_generator, nested_distance)
from .oracle import DEFAULT_DIM_CAP, css_distances_bruteforce
from .posets import DECREASING, INCREASING, closure


def _load_code(path: str) -> CssCode:
    return code_from_json(json.loads(Path(path).read_text()))


def _is_spc_only(code: CssCode) -> bool:
    return all(c.hx.rows == 1 and c.hz.rows == 1 and c.n == 2
               and c.hx.data == (3,) and c.hz.data == (3,)
               for c in code.components)


def cmd_construct(args) -> int:
    code = _load_code(args.spec)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    mx, mz = code.check_matrices()
    (out / "hx.alist").write_text(alist.to_alist(mx))
    (out / "hz.alist").write_text(alist.to_alist(mz))
    (out / "hx.txt").write_text(mx.to_text())
    (out / "hz.txt").write_text(mz.to_text())
    (out / "schedule.json").write_text(
        json.dumps(code.syndrome_schedule().to_json(), indent=1))
    (out / "circuit.txt").write_text(code.encoding_circuit().to_text())
    (out / "params.json").write_text(json.dumps(code.parameters(), indent=1))
    return 0


def cmd_verify(args) -> int:
    code = _load_code(args.spec)
    report = code.verify()
    out = report.to_json()
    out["parameters"] = code.parameters()
    if _is_spc_only(code):
        d_x, d_z = css_xz_distances(code.x, code.z)
        out["distances"] = {"formula": {"d_x": d_x, "d_z": d_z}}
        mx, mz = code.check_matrices()
        bx, bz = css_distances_bruteforce(mx, mz, dim_cap=args.dim_cap,
                                          threads=args.threads)
        if bx is None or bz is None:
            out["distances"]["oracle"] = ORACLE_REFUSED
        else:
            out["distances"]["oracle"] = {"d_x": bx, "d_z": bz}
            if (bx, bz) != (d_x, d_z):
                out["passed"] = False
                out["checks"].append({"name": "distance cross-check",
                                      "passed": False,
                                      "detail": f"formula ({d_x},{d_z}) "
                                                f"oracle ({bx},{bz})"})
    print(json.dumps(out, indent=1))
    return 0 if out["passed"] else 1


def cmd_distance(args) -> int:
    code = _load_code(args.spec)
    result: dict = {}
    if args.method in ("formula", "both"):
        if not _is_spc_only(code):
            print("error: the distance formula applies only to codes whose "
                  "components are all the single-parity-check pair",
                  file=sys.stderr)
            return 2
        d_x, d_z = css_xz_distances(code.x, code.z)
        result["formula"] = {"d_x": d_x, "d_z": d_z}
    if args.method in ("oracle", "both"):
        mx, mz = code.check_matrices()
        bx, bz = css_distances_bruteforce(mx, mz, dim_cap=args.dim_cap,
                                          threads=args.threads)
        result["oracle"] = (ORACLE_REFUSED if bx is None or bz is None
                            else {"d_x": bx, "d_z": bz})
    print(json.dumps(result, indent=1))
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for e in catalog():
            c = e
            print(f"{c.name:10s} [[{c.claimed_n},{c.claimed_k}]] "
                  f"d_x={c.claimed_d_x} d_z={c.claimed_d_z}")
        return 0
    if args.action == "show":
        print(json.dumps(get_entry(args.name).to_json(), indent=1))
        return 0
    # verify
    entries = catalog() if args.all else [get_entry(args.name)]
    reports = [verify_entry(e, dim_cap=args.dim_cap, threads=args.threads)
               for e in entries]
    reports.sort(key=lambda r: r.name)
    print(json.dumps([r.to_json() for r in reports], indent=1))
    return 0 if all(r.passed for r in reports) else 1


def cmd_grm(args) -> int:
    direction = DECREASING if args.direction == "dec" else INCREASING
    shape = (2,) * args.m
    gens = [tuple(v) for v in json.loads(args.gens)]
    s = closure(gens, shape, direction)
    space = grm_generator(s)
    out = {"m": args.m, "direction": args.direction,
           "members": [list(t) for t in s.sorted_members()],
           "dimension": space.dimension,
           "generator": space.generator.to_text().splitlines()}
    if direction == DECREASING:
        dual = dual_parameter_set(s)
        out["dual"] = {"direction": "inc" if dual.direction == INCREASING else "dec",
                       "members": [list(t) for t in dual.sorted_members()]}
    if args.nested is not None:
        t_gens = [tuple(v) for v in json.loads(args.nested)]
        t = closure(t_gens, shape, direction)
        if not s.members <= t.members:
            print("error: --nested must generate a superset of --gens",
                  file=sys.stderr)
            return 2
        d = nested_distance(NestedPair(s, t))
        out["nested_distance"] = d if d is not None else "undefined"
    print(json.dumps(out, indent=1))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="isscodes",
        description="Construct and analyze intersecting-subset CSS codes.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, dim_cap=True):
        sp.add_argument("--threads", type=int, default=1,
                        help="oracle parallelism (default 1)")
        if dim_cap:
            sp.add_argument("--dim-cap", type=int, default=DEFAULT_DIM_CAP,
                            help="refuse brute-force beyond this kernel dimension")

    sp = sub.add_parser("construct", help="emit all artifacts for a code spec")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="structural verification report")
    sp.add_argument("--spec", required=True)
    add_common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("distance", help="distances by formula and/or brute force")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--method", required=True,
                    choices=["formula", "oracle", "both"])
    add_common(sp)
    sp.set_defaults(func=cmd_distance)

    sp = sub.add_parser("catalog", help="built-in published examples")
    csub = sp.add_subparsers(dest="action", required=True)
    c = csub.add_parser("list")
    c.set_defaults(func=cmd_catalog, all=False, name=None,
                   threads=1, dim_cap=DEFAULT_DIM_CAP)
    c = csub.add_parser("show")
    c.add_argument("name")
    c.set_defaults(func=cmd_catalog, all=False,
                   threads=1, dim_cap=DEFAULT_DIM_CAP)
    c = csub.add_parser("verify")
    c.add_argument("name", nargs="?")
    c.add_argument("--all", action="store_true")
    add_common(c)
    c.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("grm", help="generalized Reed-Muller spaces")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--gens", required=True,
                    help="JSON list of 0/1 generator tuples")
    sp.add_argument("--direction", required=True, choices=["inc", "dec"])
    sp.add_argument("--nested", default=None,
                    help="JSON generators of a containing set")
    sp.set_defaults(func=cmd_grm)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "catalog" and args.action == "verify" \
            and not args.all and args.name is None:
        print("error: catalog verify needs a name or --all", file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
