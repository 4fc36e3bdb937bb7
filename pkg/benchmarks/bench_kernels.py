"""Time the blade kernels with numba enabled and disabled.

    python benchmarks/bench_kernels.py [--repeat 5]

Each mode runs in a fresh interpreter because CLIFFORDFORMS_DISABLE_NUMBA is
read at import time.  Both modes must produce the same tables and products.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

WORKER = r"""
import json, sys, time
import numpy as np
from cliffordforms import _kernels as K

repeat = int(sys.argv[1])
rng = np.random.default_rng(0)
ginvs = []
for _ in range(20):
    s = rng.standard_normal((4, 4)) * 0.1
    ginvs.append(np.diag([1.0, -1.0, -1.0, -1.0]) + s + s.T)
u = rng.standard_normal((2000, 16)) + 1j * rng.standard_normal((2000, 16))
v = rng.standard_normal((2000, 16)) + 1j * rng.standard_normal((2000, 16))

K.generic_product_table(ginvs[0])  # compile outside the timed region
K.batched_product(K.generic_product_table(ginvs[0]), u[:2], v[:2])

def best(f):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = f()
        times.append(time.perf_counter() - t)
    return min(times), out

t_table, tables = best(lambda: [K.generic_product_table(g) for g in ginvs])
t_prod, prod = best(lambda: K.batched_product(tables[0], u, v))
np.save(sys.argv[2], np.concatenate([np.stack(tables).ravel(), prod.ravel().view(float)]))
print(json.dumps({"numba": K.USING_NUMBA, "table_x20": t_table, "product_x2000": t_prod}))
"""


def run(disable, repeat, out):
    env = dict(os.environ, CLIFFORDFORMS_DISABLE_NUMBA="1" if disable else "0")
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat), out], env=env, check=True,
                         capture_output=True, text=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    start = time.perf_counter()
    fast = run(False, args.repeat, "/tmp/_cf_bench_numba.npy")
    slow = run(True, args.repeat, "/tmp/_cf_bench_numpy.npy")
    diff = np.max(np.abs(np.load("/tmp/_cf_bench_numba.npy") - np.load("/tmp/_cf_bench_numpy.npy")))
    print(f"{'kernel':28s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for key, label in (("table_x20", "product table (20 metrics)"), ("product_x2000", "batched product (2000)")):
        print(f"{label:28s} {fast[key]:10.4f} {slow[key]:10.4f} {slow[key] / fast[key]:8.1f}")
    print(f"numba active: {fast['numba']} / {slow['numba']}; max |difference| = {diff:.1e}")
    print(f"wall time {time.perf_counter() - start:.1f} s")


if __name__ == "__main__":
    main()
