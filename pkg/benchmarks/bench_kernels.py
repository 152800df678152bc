"""Compare the compiled and pure-Python stress/classification kernels.

    python3 benchmarks/bench_kernels.py [--n 256] [--repeat 5]

Times ``mr_grid`` on an n x n stretch grid with both backends and checks
that their outputs agree bit for bit.
"""

import argparse
import sys
import timeit

import numpy as np

from tensile_domain import _kernels_py

try:
    from tensile_domain import _kernels as _compiled
except ImportError:
    _compiled = None


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=256, help="grid points per axis")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--kv", type=float, default=0.5)
    args = ap.parse_args(argv)

    g = np.linspace(0.3, 4.0, args.n)
    l1, l2 = (a.ravel() for a in np.meshgrid(g, g, indexing="ij"))
    call = (1.0, 1.0, args.kv, l1, l2, 1e-9)
    points = l1.size

    backends = [("python", _kernels_py)]
    if _compiled is None:
        print("compiled extension not built; timing the pure-Python kernels only", file=sys.stderr)
    else:
        backends.insert(0, ("cython", _compiled))

    timings = {}
    for name, mod in backends:
        best = min(timeit.repeat(lambda: mod.mr_grid(*call), number=1, repeat=args.repeat))
        timings[name] = best
        print(f"{name:>7}: {best * 1e3:9.2f} ms  ({points / best / 1e6:7.2f} Mpoints/s)")

    if _compiled is not None:
        a, b = _compiled.mr_grid(*call), _kernels_py.mr_grid(*call)
        same = all(np.array_equal(x, y, equal_nan=x.dtype.kind == "f") for x, y in zip(a, b))
        print(f"speedup: {timings['python'] / timings['cython']:.1f}x, outputs identical: {same}")
        return 0 if same else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
