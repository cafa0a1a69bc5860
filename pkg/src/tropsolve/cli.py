"""``tropsolve`` command line.

Exit codes: 0 solvable (or success), 1 unsolvable (or attack failed), 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .errors import TropsolveError
from .report import solve_system
from .semiring import Kind
from .stickel import MAX_ATTACK_DEGREE, StickelParams, attack, run_protocol
from .textio import parse_system

EXIT_OK, EXIT_UNSOLVABLE, EXIT_ERROR = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_solve(args) -> int:
    doc = solve_system(parse_system(_read(args.input)), reduce_first=not args.no_reduce)
    if args.format == "json":
        print(doc.to_json(indent=2))
    else:
        print(doc.to_text(), end="")
    return EXIT_OK if doc.solvable else EXIT_UNSOLVABLE


def cmd_oracle(args) -> int:
    system = parse_system(_read(args.input))
    grid = oracle.default_grid(system)
    sols = oracle.enumerate_solutions(system, grid, limit=args.limit)
    minimal = oracle.minimal_modulus_set(sols)
    if args.format == "json":
        print(json.dumps({
            "kind": system.kind.value,
            "grid_size": grid.size,
            "solutions": [v.tokens() for v in sols],
            "minimal_moduli": [v.tokens() for v in minimal],
        }, indent=2))
    else:
        print(f"grid points: {grid.size}")
        print(f"solutions on grid: {len(sols)}")
        for v in sols:
            print(f"  {v}")
        print(f"minimal modulus vectors: {len(minimal)}")
        for v in minimal:
            print(f"  {v}")
    return EXIT_OK if sols else EXIT_UNSOLVABLE


def cmd_stickel(args) -> int:
    params = StickelParams(Kind(args.kind), n=args.n, degree=args.deg, seed=args.seed)
    tr = run_protocol(params)
    out = {"transcript": tr.to_dict(), "keys_agree": tr.keys_agree}
    status = EXIT_OK if tr.keys_agree else EXIT_ERROR
    if args.attack:
        recovered = attack(tr.A, tr.B, tr.W, tr.U, tr.V, args.deg)
        hit = recovered is not None and recovered == tr.key
        out["attack"] = {
            "recovered": None if recovered is None else
            [[e.token() for e in r] for r in recovered.to_rows()],
            "matches_key": hit,
        }
        if status == EXIT_OK and not hit:
            status = EXIT_UNSOLVABLE
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(f"semiring: {params.kind.value}  n={params.n}  D={params.degree}  seed={params.seed}")
        for name in ("A", "B", "W", "U", "V", "key"):
            print(f"{name}:")
            for r in getattr(tr, name).to_rows():
                print("  " + "  ".join(str(e) for e in r))
        print(f"keys agree: {'yes' if tr.keys_agree else 'no'}")
        if args.attack:
            a = out["attack"]
            if a["recovered"] is None:
                print("attack: no solution found")
            else:
                print(f"attack: key recovered: {'yes' if a['matches_key'] else 'no'}")
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropsolve",
                                description="One-sided linear systems over layered tropical semirings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="minimal solutions of A x = b")
    s.add_argument("--input", required=True, help="system file ('-' for stdin)")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--no-reduce", action="store_true",
                   help="skip reduction (input must already be reduced)")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="brute-force the system on a finite grid")
    o.add_argument("--input", required=True)
    o.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT,
                   help="refuse grids with more points than this")
    o.add_argument("--format", choices=("text", "json"), default="text")
    o.set_defaults(func=cmd_oracle)

    k = sub.add_parser("stickel", help="run the key exchange and optionally the attack")
    k.add_argument("--kind", choices=[x.value for x in Kind], default="trop")
    k.add_argument("--n", type=int, default=3)
    k.add_argument("--deg", type=int, default=2,
                   help=f"polynomial degree (attack supports up to {MAX_ATTACK_DEGREE})")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--attack", action="store_true")
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.set_defaults(func=cmd_stickel)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (TropsolveError, ValueError, OSError) as exc:
        print(f"tropsolve: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
