"""Compare the compiled and pure-Python kernel backends.

Each backend runs in its own interpreter (the backend is fixed at import),
selected with SUBSCHEME_CALC_PURE. Times are the best of ``--repeat`` runs.

    python benchmarks/bench_kernels.py            # full table, a few minutes
    python benchmarks/bench_kernels.py --quick    # under a minute
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def katsura(n):
    v = [f"u{i}" for i in range(n + 1)]

    def u(i):
        return v[abs(i)]

    eqs = ["+".join(u(0) if i == 0 else f"2*{u(i)}" for i in range(n + 1)) + "-1"]
    for m in range(n):
        terms = [f"{u(l)}*{u(m - l)}" for l in range(-n, n + 1) if abs(l) <= n and abs(m - l) <= n]
        eqs.append("+".join(terms) + f"-{u(m)}")
    return v, eqs


def cyclic(n):
    v = [f"x{i}" for i in range(n)]
    eqs = ["+".join("*".join(v[(i + j) % n] for j in range(k)) for i in range(n)) for k in range(1, n)]
    eqs.append("*".join(v) + "-1")
    return v, eqs


def _groebner(system, order="grevlex"):
    from subscheme_calc.groebner import groebner
    from subscheme_calc.polyring import GREVLEX_ORDER, LEX_ORDER, PolyRing

    variables, eqs = system
    R = PolyRing(variables)
    gens = [R.parse(e) for e in eqs]
    o = {"grevlex": GREVLEX_ORDER, "lex": LEX_ORDER}[order]
    return lambda: groebner(gens, o, R)


def _intersection():
    # a random triple from the law corpus that needs a long elimination
    from subscheme_calc.algebra import AffineAlgebra, ideal_intersect

    A = AffineAlgebra(["x", "y", "z"])
    I = A.ideal("2*x*y + y^2")
    J = A.ideal("-2*y - 3*z", "-3*x*y^2 + 1")
    K = A.ideal("-3*x^3 + 2*x*y^2 - 2*x*y", "3*x*y + 2*z - 1", "2*y*z^2 - 3")
    return lambda: ideal_intersect(I, ideal_intersect(J, K))


def _integer_table(n, t):
    from subscheme_calc import kernels

    return lambda: kernels.integer_law_table(n, t)


def workloads(quick):
    w = {
        "groebner katsura-5 (grevlex)": lambda: _groebner(katsura(5)),
        "groebner cyclic-5 (grevlex)": lambda: _groebner(cyclic(5)),
        "intersection (I∩(J∩K)), 3 variables": _intersection,
        "integer laws m <= 300, triples <= 100": lambda: _integer_table(300, 100),
    }
    if not quick:
        w["groebner katsura-6 (grevlex)"] = lambda: _groebner(katsura(6))
        w["groebner katsura-4 (lex)"] = lambda: _groebner(katsura(4), "lex")
        w["integer laws m <= 1000, triples <= 150"] = lambda: _integer_table(1000, 150)
    return w


def worker(quick, repeat):
    from subscheme_calc import BACKEND

    out = {"backend": BACKEND, "times": {}}
    for name, make in workloads(quick).items():
        fn = make()
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        out["times"][name] = best
    print(json.dumps(out))


def run_backend(pure, quick, repeat):
    env = dict(os.environ, SUBSCHEME_CALC_PURE="1" if pure else "0")
    cmd = [sys.executable, __file__, "--worker", "--repeat", str(repeat)] + (["--quick"] if quick else [])
    proc = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write the raw timings here")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.worker:
        worker(args.quick, args.repeat)
        return 0
    py = run_backend(True, args.quick, args.repeat)
    cy = run_backend(False, args.quick, args.repeat)
    if cy["backend"] != "cython":
        print("compiled kernel not available; only the pure-Python column is meaningful")
    width = max(len(k) for k in py["times"])
    print(f"{'workload':<{width}}  {'python s':>9}  {cy['backend'] + ' s':>9}  {'speedup':>7}")
    for name, tp in py["times"].items():
        tc = cy["times"][name]
        print(f"{name:<{width}}  {tp:9.3f}  {tc:9.3f}  {tp / tc:6.1f}x")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"python": py, "compiled": cy}, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
