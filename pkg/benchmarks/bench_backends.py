"""Compare the compiled and pure-Python scan kernels on the workloads that
dominate real runs: per-ideal sdf scans over Z_n and the residue scans behind
the integer oracles.

Usage: python3 benchmarks/bench_backends.py [--zn-max N] [--z-max N]
"""

import argparse
import time

from sdfkit import available_backends, make_zn, proper_ideals, radical


def build_ring_workload(zn_max):
    """(tables, masks) tuples for every proper ideal of every Z_n; built once
    so the timed region is pure kernel work."""
    work = []
    for n in range(2, zn_max + 1):
        r = make_zn(n)
        for i in proper_ideals(r):
            work.append((r.add_table, r.neg_table, r.squares,
                         i.mask, radical(i).mask))
    return work


def bench_ring_scans(impl, work):
    t0 = time.perf_counter()
    for add, neg, sq, m, rad in work:
        impl.sdf_scan(add, neg, sq, rad, rad, rad, False)
        impl.sdf_scan(add, neg, sq, m, m, rad, True)
    return time.perf_counter() - t0, 2 * len(work)


def bench_z_scans(impl, z_max):
    t0 = time.perf_counter()
    for n in range(2, z_max + 1):
        impl.z_scan(n, n)
    return time.perf_counter() - t0, z_max - 1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--zn-max", type=int, default=160)
    ap.add_argument("--z-max", type=int, default=1500)
    args = ap.parse_args()

    impls = available_backends()
    print(f"available backends: {', '.join(sorted(impls))}")
    work = build_ring_workload(args.zn_max)
    results = {}
    for name in sorted(impls):
        impl = impls[name]
        ring_t, ring_n = bench_ring_scans(impl, work)
        z_t, z_n = bench_z_scans(impl, args.z_max)
        results[name] = (ring_t, z_t)
        print(f"{name:>8}: {ring_n} ring scans (Z_n, n <= {args.zn_max}) "
              f"in {ring_t:.3f}s; {z_n} residue scans (n <= {args.z_max}) "
              f"in {z_t:.3f}s")
    if {"python", "cython"} <= set(results):
        pr, pz = results["python"]
        cr, cz = results["cython"]
        print(f"speedup (python/cython): ring scans {pr / cr:.1f}x, "
              f"residue scans {pz / cz:.1f}x")


if __name__ == "__main__":
    main()
