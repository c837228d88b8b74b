"""Companion matrix of P, its Jordan form, and the similarity through V_G(P).

With columns of ``V_G`` being scaled derivative vectors, ``C_P V_G = V_G J``
where ``J`` has one Jordan block per node with ones on the superdiagonal.
The check is done multiplicatively so it does not depend on any inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .hermite import NodeSystem
from .matrix import Matrix
from .vandermonde import build_confluent, build_usual, invert_confluent


@dataclass(frozen=True)
class MonicCoefficients:
    """``P(x) = x^n - sum_{i=1..n} a[i-1] x^(n-i)``."""

    a: tuple

    @property
    def n(self) -> int:
        return len(self.a)


def expand_monic(system: NodeSystem) -> MonicCoefficients:
    p = system.polynomial().coeffs  # ascending, leading coefficient 1
    n = system.n
    return MonicCoefficients(tuple(-p[n - i] for i in range(1, n + 1)))


def companion_matrix(coeffs: MonicCoefficients) -> Matrix:
    n = coeffs.n
    if n < 1:
        raise ValueError("companion matrix needs degree >= 1")
    zero = coeffs.a[0] * 0
    one = zero + 1
    rows = [[one if j == i + 1 else zero for j in range(n)] for i in range(n - 1)]
    rows.append([coeffs.a[n - 1 - j] for j in range(n)])
    return Matrix(rows)


def jordan_form(system: NodeSystem) -> Matrix:
    n, f = system.n, system.field
    rows = [[f.zero] * n for _ in range(n)]
    for (alpha, m), start in zip(system.pairs, system.offsets()):
        for t in range(m):
            rows[start + t][start + t] = alpha
            if t + 1 < m:
                rows[start + t][start + t + 1] = f.one
    return Matrix(rows)


@dataclass(frozen=True)
class Mismatch:
    row: int
    col: int
    lhs: object
    rhs: object


@dataclass(frozen=True)
class SimilarityReport:
    ok: bool
    first_mismatch: Optional[Mismatch] = None
    residual: float = 0.0

    def to_dict(self, field) -> dict:
        mm = None
        if self.first_mismatch is not None:
            m = self.first_mismatch
            mm = {"row": m.row, "col": m.col, "lhs": field.format(m.lhs), "rhs": field.format(m.rhs)}
        return {"ok": self.ok, "first_mismatch": mm}


def _compare(lhs: Matrix, rhs: Matrix, tol: float) -> SimilarityReport:
    diff = lhs.first_difference(rhs, tol)
    residual = (lhs - rhs).max_abs()
    if diff is None:
        return SimilarityReport(True, None, residual)
    i, j, a, b = diff
    return SimilarityReport(False, Mismatch(i, j, a, b), residual)


def verify_similarity(system: NodeSystem, mode: str = "multiply", tol: float = 0.0) -> SimilarityReport:
    """Check ``C_P = V_G J V_G^-1``.

    ``mode="multiply"`` compares ``C_P V_G`` with ``V_G J``; ``"conjugate"``
    forms ``V_G J V_G^-1`` through :func:`invert_confluent`.  For systems of
    simple nodes the eigenvector relation ``C_P v_i = a_i v_i`` is checked
    column by column as well.  ``tol`` is only meaningful for floats.
    """
    cp = companion_matrix(expand_monic(system))
    vg = build_confluent(system)
    j = jordan_form(system)
    if mode == "multiply":
        report = _compare(cp @ vg, vg @ j, tol)
    elif mode == "conjugate":
        report = _compare(cp, vg @ j @ invert_confluent(system), tol)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if not report.ok or any(m != 1 for m in system.multiplicities):
        return report
    v = build_usual(system.alphas, system.field)
    for col, alpha in enumerate(system.alphas):
        vi = v.column(col)
        lhs = cp @ vi
        for row, (x, y) in enumerate(zip(lhs, vi)):
            rhs = alpha * y
            if (x != rhs) if tol == 0 else abs(x - rhs) > tol:
                return SimilarityReport(False, Mismatch(row, col, x, rhs), report.residual)
    return report
