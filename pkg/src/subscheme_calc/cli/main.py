"""``subscheme-calc`` entry point."""

from __future__ import annotations

import argparse
import sys

from ..laws import DEFAULT_SEED, MODULES, run_laws
from ..polyring import GREVLEX_ORDER, LEX_ORDER
from .execute import execute
from .script import ScriptError, parse_script

ORDERS = {"grevlex": GREVLEX_ORDER, "lex": LEX_ORDER}


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="subscheme-calc", description="Closed subschemes of glued affine schemes over QQ.")
    sub = ap.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="execute a .ssc script")
    run.add_argument("file")
    run.add_argument("--cocycle-check", action="store_true", help="also verify the cocycle condition on triple overlaps")
    run.add_argument("--order", choices=sorted(ORDERS), default="grevlex", help="monomial order for every patch")
    laws = sub.add_parser("laws", help="run the property suites")
    laws.add_argument("--seed", type=int, default=DEFAULT_SEED)
    laws.add_argument("--max-n", type=int, default=1000, help="bound for the divisibility-lattice oracles")
    laws.add_argument("--module", choices=("all",) + MODULES, default="all")
    return ap


def _run(args, out, err) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as e:
        print(f"{args.file}: error: {e}", file=err)
        return 2
    try:
        script = parse_script(text)
    except ScriptError as e:
        print(f"{args.file}:{e.line}:{e.col}: error: {e.message}", file=err)
        return 2
    res = execute(script, ORDERS[args.order], args.cocycle_check)
    out.write(res.stdout)
    err.write(res.stderr)
    if res.script_error is not None:
        e = res.script_error
        print(f"{args.file}:{e.line}:{e.col}: error: {e.message}", file=err)
    return res.code


def _laws(args, out) -> int:
    rep = run_laws(args.module, args.seed, args.max_n)
    for line in rep.lines():
        print(line, file=out)
    n_fail = len(rep.failures)
    print(f"{len(rep.checks)} checks, {n_fail} failed, {len(rep.violations)} violated (seed={args.seed})", file=out)
    return 0 if rep.ok else 1


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = _parser().parse_args(argv)
    if args.command == "run":
        return _run(args, out, err)
    return _laws(args, out)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
