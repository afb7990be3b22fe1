#!/usr/bin/env python3
# Compare the compiled kernels against the pure-Python fallback on the
# workloads that dominate real runs.  The backend is fixed at import time,
# so each measurement happens in a child interpreter: once with the default
# backend, once with MOULDKIT_PURE=1.
#
# Usage:  python3 benchmarks/bench_backends.py [--repeat N] [--workload NAME]

import argparse
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

WORKLOADS = {}


def workload(fn):
    WORKLOADS[fn.__name__] = fn
    return fn


def _random_mould(rng, depth, deg):
    from mouldkit.mould import Mould

    comps = {}
    for m in range(1, depth + 1):
        terms = {}
        for _ in range(3 * m):
            e = tuple(rng.randint(0, deg) for _ in range(m))
            terms[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        comps[m] = terms
    return Mould.from_components(depth, comps)


@workload
def mould_mul(rng):
    from mouldkit.mould import mould_mul

    a = _random_mould(rng, 6, 3)
    b = _random_mould(rng, 6, 3)
    for _ in range(4):
        mould_mul(a, b)


@workload
def senary(rng):
    from mouldkit.symmetry import senary_eq41_holds, senary_holds

    for _ in range(12):
        mo = _random_mould(rng, 4, 4)
        for r in (1, 2, 3):
            senary_holds(mo, r)
            senary_eq41_holds(mo, r)


@workload
def dmr_basis(rng):
    from mouldkit.liealg import dmr_basis as solve

    solve(8)


@workload
def krv_basis(rng):
    from mouldkit.liealg import krv_basis as solve

    solve(7)


@workload
def alternil(rng):
    from mouldkit.bridge import ma
    from mouldkit.liealg import dmr_basis as solve
    from mouldkit.mould import swap
    from mouldkit.symmetry import alternil_up_to_constant

    for f in solve(8).elements():
        alternil_up_to_constant(swap(ma(f)))


def run_worker(name, repeat):
    import mouldkit

    fn = WORKLOADS[name]
    best = None
    for _ in range(repeat):
        rng = random.Random(99)
        t0 = time.monotonic()
        fn(rng)
        dt = time.monotonic() - t0
        best = dt if best is None else min(best, dt)
    print("%s %.6f" % (mouldkit.backend_name, best))


def measure(name, repeat, pure):
    env = dict(os.environ)
    if pure:
        env["MOULDKIT_PURE"] = "1"
    else:
        env.pop("MOULDKIT_PURE", None)
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker", name,
         "--repeat", str(repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    backend, secs = out.stdout.split()
    return backend, float(secs)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workload", choices=sorted(WORKLOADS), default=None)
    ap.add_argument("--worker", choices=sorted(WORKLOADS), default=None,
                    help=argparse.SUPPRESS)
    args = ap.parse_args(argv)

    if args.worker:
        run_worker(args.worker, args.repeat)
        return 0

    names = [args.workload] if args.workload else sorted(WORKLOADS)
    print("%-12s %12s %12s %8s" % ("workload", "compiled [s]", "pure [s]", "ratio"))
    for name in names:
        backend, fast = measure(name, args.repeat, pure=False)
        if backend != "compiled":
            print("%-12s %12s" % (name, "(no compiled backend present)"))
            continue
        _, slow = measure(name, args.repeat, pure=True)
        ratio = slow / fast if fast > 0 else float("inf")
        print("%-12s %12.4f %12.4f %7.2fx" % (name, fast, slow, ratio))
    return 0


if __name__ == "__main__":
    sys.exit(main())
