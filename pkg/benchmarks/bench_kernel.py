#!/usr/bin/env python3
"""
Benchmark: compiled kernel vs pure-Python kernel on the workloads that
dominate real computations (admissible sets, R-polynomials, Bernstein
functions, raw group arithmetic).

Run after `pip install -e . --no-build-isolation`:

    python benchmarks/bench_kernel.py [--repeat N]

Both kernels are driven through identical group contexts built fresh per
measurement, so memo caches never leak between timings.
"""

import argparse
import random
import time

from iwahecke._kernel import available_impls
from iwahecke.affine import AffineWeylGroup
from iwahecke.hecke import HeckeAlgebra
from iwahecke.klpoly import RPolynomials
from iwahecke.rootdata import build_root_datum


def bench_raw_ops(W, iterations=40_000):
    rng = random.Random(99)
    k = W.kernel
    nw = W.weyl.size
    rank = W.rd.rank
    ngens = len(k.gens)
    samples = [(tuple(rng.randint(-3, 3) for _ in range(rank)),
                rng.randrange(nw), rng.randrange(ngens))
               for _ in range(512)]
    t0 = time.perf_counter()
    for i in range(iterations):
        t, w, g = samples[i & 511]
        k.length(t, w)
        k.left_descent(g, t, w)
        k.lmul_gen(g, t, w)
    return time.perf_counter() - t0


def bench_admissible(W):
    t0 = time.perf_counter()
    adm = W.admissible_set((1, 1, 0, 0))
    assert len(adm) == 33
    return time.perf_counter() - t0


def bench_rpoly(W):
    adm = W.admissible_set((1, 1, 0, 0))
    table = RPolynomials(W)
    t0 = time.perf_counter()
    for x in adm:
        for y in adm:
            table.r(x, y)
    return time.perf_counter() - t0


def bench_bernstein(W):
    H = HeckeAlgebra(W)
    t0 = time.perf_counter()
    z = H.bernstein_function((1, 1, 0, 0))
    assert len(z.terms) == 33
    return time.perf_counter() - t0


WORKLOADS = [
    ("raw ops (length/descent/lmul x 40k)", bench_raw_ops),
    ("admissible set GL(4), mu=(1,1,0,0)", bench_admissible),
    ("R-polynomials on Adm x Adm", bench_rpoly),
    ("Bernstein function z_(1,1,0,0)", bench_bernstein),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    impls = available_impls()
    print(f"kernels available: {', '.join(impls)}")
    if "c" not in impls:
        print("compiled kernel missing; benchmarking the fallback only")

    rd = build_root_datum("GL", 4)
    width = max(len(name) for name, _ in WORKLOADS)
    print(f"{'workload'.ljust(width)}  " +
          "".join(f"{impl:>12}" for impl in impls) +
          ("     speedup" if len(impls) == 2 else ""))
    for name, fn in WORKLOADS:
        best = {}
        for impl in impls:
            times = []
            for _ in range(args.repeat):
                W = AffineWeylGroup(rd, kernel=impl)  # fresh caches
                times.append(fn(W))
            best[impl] = min(times)
        row = f"{name.ljust(width)}  " + \
              "".join(f"{best[impl] * 1000:>10.1f}ms" for impl in impls)
        if len(impls) == 2:
            row += f"{best['python'] / best['c']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
