"""Compare the compiled and pure-Python kernels.

Each backend runs in its own interpreter (the backend is picked at import),
timing ideal enumeration for F2[x,y]/(x,y)^n and a batch of random RREFs.

    python3 benchmarks/bench_kernels.py [--sizes 4 5] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from ramonoid import kernels
from ramonoid.corpus import max_ideal_power
from ramonoid.ideals import all_ideals, engine_for
from ramonoid.rings import build_ring, description_from_dict

sizes, repeat = json.loads(sys.argv[1]), int(sys.argv[2])
out = {"backend": kernels.BACKEND, "lattice": {}, "rref": None}
for n in sizes:
    best = None
    for _ in range(repeat):
        ring = build_ring(description_from_dict(max_ideal_power(2, n)))
        t = time.perf_counter()
        lat = all_ideals(ring)
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    out["lattice"][n] = [best, len(lat)]
rng = np.random.default_rng(0)
mats = [rng.integers(0, 2, size=(12, 15)) for _ in range(2000)]
t = time.perf_counter()
for m in mats:
    kernels.rref(m, 2)
out["rref"] = time.perf_counter() - t
print(json.dumps(out))
"""


def run(pure: bool, sizes, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("RAMONOID_PURE_PYTHON", None)
    if pure:
        env["RAMONOID_PURE_PYTHON"] = "1"
    res = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps(sizes), str(repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(res.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()

    rows = [run(False, args.sizes, args.repeat), run(True, args.sizes, args.repeat)]
    if rows[0]["backend"] != "cython":
        print("compiled extension not available; both rows use the Python kernels", file=sys.stderr)
    print(f"{'task':<28} " + " ".join(f"{r['backend']:>10}" for r in rows) + "   speedup")
    for n in args.sizes:
        key = str(n)
        times = [r["lattice"][key][0] for r in rows]
        assert rows[0]["lattice"][key][1] == rows[1]["lattice"][key][1], "backends disagree"
        label = f"ideals of (x,y)^{n} [{rows[0]['lattice'][key][1]}]"
        print(f"{label:<28} " + " ".join(f"{t:>9.3f}s" for t in times) + f"   {times[1] / times[0]:6.1f}x")
    times = [r["rref"] for r in rows]
    print(f"{'2000 rref 12x15 over F2':<28} " + " ".join(f"{t:>9.3f}s" for t in times) + f"   {times[1] / times[0]:6.1f}x")


if __name__ == "__main__":
    main()
