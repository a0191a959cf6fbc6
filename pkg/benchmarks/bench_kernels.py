"""Time the compiled and pure-Python kernels on the same Cayley tables.

    python3 benchmarks/bench_kernels.py [--groups "symmetric:5;builtin:sg300_25"] [--repeat 3] [--json FILE]
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from grouplab import kernels
from grouplab.constructions import builtin_example, construct

DEFAULT_GROUPS = "symmetric:5;builtin:sg300_25;dihedral_chain(3,5,7);symmetric:6;builtin:d14_x_294_9"


def load(text: str):
    if text.startswith("dihedral_chain"):
        return builtin_example(text).G
    return construct(text)


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_group(G, repeat: int) -> list[dict]:
    table = G.table
    inv = np.ascontiguousarray(G.inv, dtype=np.int32)
    gens = np.array(G.gen_indices, dtype=np.int32)
    half = np.arange(0, G.order, 2, dtype=np.int32)
    rng = np.random.default_rng(0)
    few = rng.choice(G.order, size=min(G.order, 64), replace=False).astype(np.int32)
    rows = []
    backends = [("python", kernels.python_backend)]
    if kernels.compiled_backend is not None:
        backends.append(("cython", kernels.compiled_backend))
    results = {}
    for name, mod in backends:
        kt = mod.prepare_table(table)
        cases = {
            "closure": lambda: mod.closure(kt, gens),
            "conjugation_orbits": lambda: mod.conjugation_orbits(kt, inv, gens),
            "product_mask": lambda: mod.product_mask(kt, few, half),
            "element_orders": lambda: mod.element_orders(kt),
        }
        for case, fn in cases.items():
            out = fn()
            results.setdefault(case, []).append(np.asarray(out))
            rows.append({"group": G.name or f"order {G.order}", "order": G.order, "kernel": case,
                         "backend": name, "seconds": best_of(fn, repeat)})
    for case, outs in results.items():
        if any(not np.array_equal(outs[0], o) for o in outs[1:]):
            raise SystemExit(f"backends disagree on {case} for {G.name}")
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", default=DEFAULT_GROUPS)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", metavar="FILE")
    args = ap.parse_args(argv)
    if kernels.compiled_backend is None:
        print("compiled kernels not built; timing the Python backend only", file=sys.stderr)
    rows = []
    for text in args.groups.split(";"):
        G = load(text.strip())
        rows.extend(bench_group(G, args.repeat))
    print(f"{'group':<24}{'order':>7}  {'kernel':<20}{'python us':>12}{'cython us':>12}{'speedup':>9}")
    by_key: dict = {}
    for r in rows:
        by_key.setdefault((r["group"], r["order"], r["kernel"]), {})[r["backend"]] = r["seconds"]
    for (group, order, kernel), t in by_key.items():
        py, cy = t.get("python"), t.get("cython")
        speed = f"{py / cy:8.1f}x" if py and cy else "       -"
        cy_s = f"{cy * 1e6:12.1f}" if cy is not None else f"{'-':>12}"
        print(f"{group:<24}{order:>7}  {kernel:<20}{py * 1e6:12.1f}{cy_s}{speed}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
