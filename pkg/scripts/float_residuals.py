"""Identity residual of V V^-1 in binary64 as the node count grows.

    python scripts/float_residuals.py [--max-k 16] [--spacing equispaced|chebyshev]

Prints one line per k for the usual Vandermonde matrix, plus a confluent
variant where every node is doubled.
"""

import argparse
import math

from confvand import FLOAT, NodeSystem, build_confluent, invert_confluent, invert_usual
from confvand.matrix import Matrix
from confvand.vandermonde import default_tolerance


def nodes(k, spacing):
    if k == 1:
        return [0.0]
    if spacing == "chebyshev":
        return [math.cos(math.pi * (2 * i + 1) / (2 * k)) for i in range(k)]
    return [-1.0 + 2.0 * i / (k - 1) for i in range(k)]


def residual(v, inv):
    return (v @ inv - Matrix.identity(v.rows, FLOAT)).max_abs()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=16)
    ap.add_argument("--spacing", choices=("equispaced", "chebyshev"), default="equispaced")
    args = ap.parse_args()

    print(f"{'k':>3} {'usual':>12} {'hermite':>12} {'doubled n':>9} {'doubled':>12} {'budget':>8}")
    for k in range(1, args.max_k + 1):
        alphas = nodes(k, args.spacing)
        simple = NodeSystem.simple(alphas, FLOAT)
        v = build_confluent(simple)
        r_lagrange = residual(v, invert_usual(alphas, FLOAT))
        r_hermite = residual(v, invert_confluent(simple))
        doubled = NodeSystem(tuple(alphas), (2,) * k, FLOAT)
        r_doubled = residual(build_confluent(doubled), invert_confluent(doubled))
        print(
            f"{k:>3} {r_lagrange:>12.3e} {r_hermite:>12.3e} {doubled.n:>9} {r_doubled:>12.3e}"
            f" {default_tolerance(k):>8.0e}"
        )


if __name__ == "__main__":
    main()
