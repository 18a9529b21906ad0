"""Compiled versus pure-Python kernels.

Each timing runs in a fresh interpreter so the backend is chosen at import.
Usage: python benchmarks/bench_kernels.py [--rank 6]
"""

import argparse
import os
import subprocess
import sys

WORKLOADS = {
    "d_squared": (
        "from braidhom.coxeter import type_b\n"
        "from braidhom.salvetti import build_complex, verify_d_squared\n"
        "assert verify_d_squared(build_complex(type_b({rank}))).ok\n"
    ),
    "divisors": (
        "from braidhom.coxeter import type_a\n"
        "from braidhom.kernels import elementary_divisors\n"
        "from braidhom.representations import symplectic_rep\n"
        "from braidhom.salvetti import build_complex, specialize\n"
        "n = 2 * (({rank} + 2) // 2) + 1\n"
        "cx = specialize(build_complex(type_a(n)), symplectic_rep(n))\n"
        "mats = [cx.boundary(k).to_dense() for k in range(1, cx.top + 1)]\n"
        "t = time.perf_counter()\n"
        "for m in mats:\n"
        "    elementary_divisors(m, len(m[0]))\n"
    ),
    "homology": (
        "from braidhom.coxeter import type_a\n"
        "from braidhom.linalg import homology\n"
        "from braidhom.representations import symplectic_rep\n"
        "from braidhom.salvetti import build_complex, specialize\n"
        "n = 2 * ({rank} // 2) + 1\n"
        "homology(specialize(build_complex(type_a(n)), symplectic_rep(n)))\n"
    ),
}


def timed(code: str, pure: bool) -> float:
    env = dict(os.environ)
    env.pop("BRAIDHOM_PURE_PYTHON", None)
    if pure:
        env["BRAIDHOM_PURE_PYTHON"] = "1"
    script = ("import time, braidhom\nt = time.perf_counter()\n" + code
              + "print(braidhom.BACKEND, time.perf_counter() - t)\n")
    out = subprocess.run([sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True)
    backend, seconds = out.stdout.split()
    if not pure and backend != "cython":
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    return float(seconds)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--rank", type=int, default=6)
    args = parser.parse_args()
    print(f"{'workload':<12}{'cython s':>10}{'python s':>10}{'speedup':>9}")
    for name, code in WORKLOADS.items():
        code = code.format(rank=args.rank)
        fast, slow = timed(code, False), timed(code, True)
        print(f"{name:<12}{fast:>10.3f}{slow:>10.3f}{slow / fast:>8.1f}x")


if __name__ == "__main__":
    main()
