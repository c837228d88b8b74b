"""Deterministic node-system corpus used by the acceptance suite and scripts."""

from __future__ import annotations

import random
from fractions import Fraction

from .hermite import NodeSystem
from .scalar import EXACT, FLOAT, Field

# systems worked by hand in the literature this package reproduces
FIXED = [
    [(0, 3), (1, 1)],
    [(1, 2), (-1, 1)],
    [(1, 2), (2, 2), (-1, 1)],
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(Fraction(1, 2), 4)],
    [(0, 2), (1, 2)],
]


def random_rational(rng: random.Random, bound: int = 10) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_system(
    rng: random.Random,
    max_nodes: int = 4,
    max_mult: int = 4,
    max_degree: int = 12,
    bound: int = 10,
    nonzero: bool = False,
    field: Field = EXACT,
) -> NodeSystem:
    s = rng.randint(1, max_nodes)
    alphas: list = []
    while len(alphas) < s:
        a = random_rational(rng, bound)
        if a in alphas or (nonzero and a == 0):
            continue
        alphas.append(a)
    mults = [rng.randint(1, max_mult) for _ in range(s)]
    while sum(mults) > max_degree:
        j = max(range(s), key=lambda i: mults[i])
        mults[j] -= 1
    return NodeSystem(tuple(alphas), tuple(mults), field)


def corpus(size: int = 60, seed: int = 20211, field: Field = EXACT) -> list:
    """Fixed systems followed by seeded random ones (s <= 4, m_j <= 4, n <= 12)."""
    out = [NodeSystem.from_pairs(p, field) for p in FIXED]
    rng = random.Random(seed)
    while len(out) < size:
        out.append(random_system(rng, field=field))
    return out


def equispaced(k: int) -> list:
    """``k`` equispaced floats on [-1, 1] (just ``[0.0]`` when ``k == 1``)."""
    if k == 1:
        return [0.0]
    return [FLOAT.coerce(Fraction(2 * i, k - 1) - 1) for i in range(k)]
