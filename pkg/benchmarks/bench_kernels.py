"""Timing comparison of the compiled and pure-Python tridiagonal kernels.

Runs the two inner-loop kernels (Sturm pivot counting, shifted tridiagonal
solve) and one end-to-end bound-state solve on a hydrogen-like hamiltonian
at several grid sizes, once per available backend.  The compiled extension
is optional; when it is absent only the pure-Python column is produced.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 501,2001,8001] [--repeats 5]
"""

from __future__ import annotations

import argparse
import importlib
import time

import numpy as np

from wsbound import kernels
from wsbound.fdsolver import RadialGrid, build_hamiltonian, solve_bound_state

_BACKENDS = {}
for _name, _mod in (("python", "wsbound._kernels_py"), ("cython", "wsbound._kernels_cy")):
    try:
        _BACKENDS[_name] = importlib.import_module(_mod)
    except ImportError:
        pass


def _coulomb(r):
    return -1.0 / r


def _hamiltonian(points: int):
    grid = RadialGrid(200.0 / points, 200.0, points)
    return build_hamiltonian(_coulomb, 0, grid)


def _best_of(repeats: int, fn) -> float:
    fn()  # warm up
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(impl, points: int, repeats: int) -> dict[str, float]:
    ham = _hamiltonian(points)
    diag, off = ham.diagonal, ham.off_diagonal
    rhs = np.ones(points)
    timings = {
        "sturm": _best_of(repeats, lambda: impl.sturm_count(diag, off, -0.3)),
        "solve": _best_of(repeats, lambda: impl.tridiag_solve(diag, off, -0.5001, rhs)),
    }

    # end-to-end: route the solver through this backend only for the timing
    saved = (kernels.sturm_count, kernels.tridiag_solve)
    kernels.sturm_count, kernels.tridiag_solve = impl.sturm_count, impl.tridiag_solve
    try:
        grid = RadialGrid(200.0 / points, 200.0, points)
        timings["bound_state"] = _best_of(
            repeats, lambda: solve_bound_state(_coulomb, 0, 0, grid)
        )
    finally:
        kernels.sturm_count, kernels.tridiag_solve = saved
    return timings


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="501,2001,8001")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(tok) for tok in args.sizes.split(",")]

    print(f"active backend at import: {kernels.BACKEND}")
    print(f"available backends: {', '.join(sorted(_BACKENDS))}")
    header = f"{'kernel':<12} {'points':>7}"
    for name in sorted(_BACKENDS):
        header += f" {name + ' [ms]':>14}"
    if len(_BACKENDS) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))

    results = {
        name: {pts: bench_backend(impl, pts, args.repeats) for pts in sizes}
        for name, impl in _BACKENDS.items()
    }
    for kernel in ("sturm", "solve", "bound_state"):
        for pts in sizes:
            row = f"{kernel:<12} {pts:>7}"
            for name in sorted(_BACKENDS):
                row += f" {results[name][pts][kernel] * 1e3:>14.3f}"
            if len(_BACKENDS) == 2:
                ratio = results["python"][pts][kernel] / results["cython"][pts][kernel]
                row += f" {ratio:>8.1f}x"
            print(row)


if __name__ == "__main__":
    main()
