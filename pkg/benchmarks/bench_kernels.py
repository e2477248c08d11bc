"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the raw kernels on data taken from real structures, then a full
axiom sweep in a subprocess per backend (the backend is fixed at import).
"""

import argparse
import os
import subprocess
import sys
import timeit

from ecourant import _kernels_py
from ecourant.constructions import build_crossed_courant, build_omni, identity_crossed_module
from ecourant.corpus import sl2

try:
    from ecourant import _kernels
except ImportError:
    _kernels = None

SWEEP = (
    "import time; t = time.perf_counter();"
    "from ecourant.constructions import build_omni;"
    "from ecourant.courant import check_ec_axioms;"
    "[check_ec_axioms(build_omni(n)) for n in (2, 3)];"
    "print(time.perf_counter() - t)"
)


def kernel_cases():
    C = build_omni(3)
    X = build_crossed_courant(identity_crossed_module(sl2()))
    x = tuple(range(1, X.dim_k + 1))
    y = tuple(range(X.dim_k, 0, -1))
    flat = [list(r) for r in C.flat]
    return {
        "contract2 (dim K = 12)": lambda k: k.contract2(X.bracket, x, y, X.dim_k),
        "matmul (12 x 12)": lambda k: k.matmul(X.bracket[1], X.bracket[2]),
        "row_reduce (omni(3) flat)": lambda k: k.row_reduce([r[:] for r in flat], C.dim_k),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    backends = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    if _kernels is None:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'kernel':30s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in kernel_cases().items():
        times = [timeit.timeit(lambda: fn(k), number=args.repeat) / args.repeat for _, k in backends]
        ratio = f"{times[0] / times[1]:9.2f}x" if len(times) == 2 else ""
        print(f"{label:30s}" + "".join(f"{t * 1e6:10.1f}us" for t in times) + f"  {ratio}")

    sweep = {}
    for name, _ in backends:
        env = dict(os.environ, ECOURANT_PURE_PYTHON="1" if name == "python" else "0")
        out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
        sweep[name] = float(out.stdout)
    line = "".join(f"{sweep[name]:11.3f}s" for name, _ in backends)
    ratio = f"{sweep['python'] / sweep['cython']:9.2f}x" if "cython" in sweep else ""
    print(f"{'EC sweep omni(2), omni(3)':30s}{line}  {ratio}")


if __name__ == "__main__":
    main()
