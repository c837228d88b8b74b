"""Confluent, r_s-confluent and usual Vandermonde matrices and their inverses.

Column layout follows the node order of the :class:`NodeSystem`: block ``j``
holds ``m_j`` columns whose column ``c`` has entries ``C(i, c) a_j^(i-c)``
(rows ``i = 0..n-1``), i.e. the ``c``-th derivative of ``(1, a, a^2, ...)``
divided by ``c!``.

The main inverse never eliminates: row ``(j, k)`` of ``V^-1`` is the
monomial coefficient vector of the Hermite basis polynomial ``L_jk``.
"""

from __future__ import annotations

from typing import Sequence

from .hermite import NodeSystem, hermite_basis
from .matrix import Matrix
from .poly import Polynomial, product
from .scalar import EXACT, Field, binomial


def default_tolerance(n: int) -> float:
    """Identity-residual budget for the float realization (not a guarantee)."""
    return 1e-9 if n <= 6 else 1e-6


def _power(alpha, e: int, field: Field):
    return field.one if e == 0 else alpha**e


def _confluent_columns(alpha, m: int, n: int, field: Field, exponents=None) -> list:
    cols = []
    for c in range(m):
        shift = exponents[c] if exponents is not None else 0
        col = []
        for i in range(n):
            if i < c:
                col.append(field.zero)
            else:
                col.append(field.binomial(i, c) * _power(alpha, shift + i - c, field))
        cols.append(col)
    return cols


def _from_columns(cols: list) -> Matrix:
    return Matrix([list(r) for r in zip(*cols)])


def build_confluent(system: NodeSystem) -> Matrix:
    n, f = system.n, system.field
    cols = []
    for alpha, m in system.pairs:
        cols.extend(_confluent_columns(alpha, m, n, f))
    return _from_columns(cols)


def invert_confluent(system: NodeSystem, basis=None) -> Matrix:
    if basis is None:
        basis = hermite_basis(system)
    return Matrix(basis.coefficient_matrix())


def invert_single_node(alpha, n: int, field: Field = EXACT) -> Matrix:
    """Signed Pascal matrix: ``C(i, j) (-alpha)^(i-j)`` on and below the diagonal."""
    if n < 1:
        raise ValueError("size must be at least 1")
    alpha = field.coerce(alpha)
    return Matrix(
        [
            [field.binomial(i, j) * _power(-alpha, i - j, field) if i >= j else field.zero for j in range(n)]
            for i in range(n)
        ]
    )


def invert_two_nodes(alpha1, m1: int, alpha2, m2: int, field: Field = EXACT) -> Matrix:
    """Closed-form inverse for ``(x - a1)^m1 (x - a2)^m2`` by explicit double sums."""
    a1, a2 = field.coerce(alpha1), field.coerce(alpha2)
    if a1 == a2:
        raise ValueError(f"two-node inverse needs distinct nodes, got {field.format(a1)} twice")
    if m1 < 1 or m2 < 1:
        raise ValueError("multiplicities must be positive")
    n = m1 + m2

    def block(own, m_own, oth, m_oth):
        rows = []
        diff = own - oth
        for i in range(1, m_own + 1):
            row = []
            for j in range(1, n + 1):
                total = field.zero
                for p in range(m_own - i + 1):
                    weight = field.binomial(m_oth + p - 1, m_oth - 1) / diff ** (m_oth + p)
                    inner = field.zero
                    for r in range(j):
                        c_own = binomial(i + p - 1, r)
                        c_oth = binomial(m_oth, j - 1 - r)
                        if c_own == 0 or c_oth == 0:
                            continue
                        inner += (
                            field.from_int(c_own * c_oth)
                            * _power(own, p + i - 1 - r, field)
                            * _power(oth, m_oth - j + 1 + r, field)
                        )
                    total += weight * inner
                sign = -1 if (m_oth + i + j) % 2 else 1
                row.append(total * sign)
            rows.append(row)
        return rows

    return Matrix(block(a1, m1, a2, m2) + block(a2, m2, a1, m1))


def solve_confluent(system: NodeSystem, u: Sequence, basis=None) -> list:
    """``x`` with ``V_G x = u``; ``x[(j,k)] = sum_i u_i L_jk^(i)(0)/i!``, block order."""
    n, f = system.n, system.field
    if len(u) != n:
        raise ValueError(f"right-hand side has length {len(u)}, expected {n}")
    u = [f.coerce(c) for c in u]
    if basis is None:
        basis = hermite_basis(system)
    out = []
    for poly in basis.in_block_order():
        acc = f.zero
        for ui, ci in zip(u, poly.coeffs):
            acc += ui * ci
        out.append(acc)
    return out


def check_exponents(system: NodeSystem, table: Sequence[Sequence[int]]) -> tuple:
    """Validate an exponent table against ``system`` and return it as nested tuples."""
    if len(table) != system.s:
        raise ValueError(f"exponent table has {len(table)} rows for {system.s} nodes")
    out = []
    for j, (row, m) in enumerate(zip(table, system.multiplicities)):
        if len(row) != m:
            raise ValueError(f"exponent row {j + 1} has length {len(row)}, expected multiplicity {m}")
        for r in row:
            if isinstance(r, bool) or not isinstance(r, int) or r < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {r!r}")
        out.append(tuple(row))
    for alpha in system.alphas:
        if alpha == 0:
            raise ValueError("r_s-confluent matrices need nonzero nodes, got alpha=0")
    return tuple(out)


def build_rs(system: NodeSystem, table: Sequence[Sequence[int]]) -> Matrix:
    table = check_exponents(system, table)
    n, f = system.n, system.field
    cols = []
    for (alpha, m), row in zip(system.pairs, table):
        cols.extend(_confluent_columns(alpha, m, n, f, exponents=row))
    return _from_columns(cols)


def rs_scaling(system: NodeSystem, table: Sequence[Sequence[int]]) -> list:
    """Diagonal ``D`` with ``V^rs = V_G D``, in block order."""
    table = check_exponents(system, table)
    f = system.field
    return [_power(alpha, r, f) for alpha, row in zip(system.alphas, table) for r in row]


def invert_rs(system: NodeSystem, table: Sequence[Sequence[int]], basis=None) -> Matrix:
    scale = rs_scaling(system, table)
    return invert_confluent(system, basis).scale_rows([1 / d for d in scale])


def _distinct(alphas: Sequence, field: Field) -> list:
    alphas = [field.coerce(a) for a in alphas]
    if not alphas:
        raise ValueError("need at least one node")
    seen = set()
    for a in alphas:
        if a in seen:
            raise ValueError(f"duplicate node alpha={field.format(a)}")
        seen.add(a)
    return alphas


def build_usual(alphas: Sequence, field: Field = EXACT) -> Matrix:
    alphas = _distinct(alphas, field)
    k = len(alphas)
    return Matrix([[_power(a, i, field) for a in alphas] for i in range(k)])


def lagrange_polynomials(alphas: Sequence, field: Field = EXACT) -> list:
    """``s_j(x) = prod_{i != j} (x - a_i) / (a_j - a_i)``."""
    alphas = _distinct(alphas, field)
    out = []
    for j, aj in enumerate(alphas):
        num = product(Polynomial.linear_factor(ai) for i, ai in enumerate(alphas) if i != j)
        den = field.one
        for i, ai in enumerate(alphas):
            if i != j:
                den *= aj - ai
        out.append(num.scale(1 / den))
    return out


def invert_usual(alphas: Sequence, field: Field = EXACT) -> Matrix:
    k = len(alphas)
    return Matrix([s.padded(k) for s in lagrange_polynomials(alphas, field)])


def elementary_symmetric(values: Sequence, field: Field = EXACT) -> list:
    """``[sigma_0, ..., sigma_len]`` of ``values``."""
    e = [field.one] + [field.zero] * len(values)
    for t, v in enumerate(values, start=1):
        for r in range(t, 0, -1):
            e[r] = e[r] + v * e[r - 1]
    return e


def invert_usual_sigma(alphas: Sequence, field: Field = EXACT) -> Matrix:
    """Inverse via ``v_ij = (-1)^(k+j) sigma_{k-j}(i) / prod_{p != i}(a_i - a_p)`` (1-based)."""
    alphas = _distinct(alphas, field)
    k = len(alphas)
    rows = []
    for i, ai in enumerate(alphas):
        rest = alphas[:i] + alphas[i + 1 :]
        sigma = elementary_symmetric(rest, field)
        den = field.one
        for ap in rest:
            den *= ai - ap
        row = []
        for j in range(1, k + 1):
            sign = -1 if (k + j) % 2 else 1
            row.append(sign * sigma[k - j] / den)
        rows.append(row)
    return Matrix(rows)


def solve_usual(alphas: Sequence, u: Sequence, field: Field = EXACT) -> list:
    """``x_i = sum_j u_j s_i^(j)(0)/j!`` for ``sum_i a_i^n x_i = u_n``."""
    if len(u) != len(alphas):
        raise ValueError(f"right-hand side has length {len(u)}, expected {len(alphas)}")
    u = [field.coerce(c) for c in u]
    out = []
    for s in lagrange_polynomials(alphas, field):
        acc = field.zero
        for uj, cj in zip(u, s.coeffs):
            acc += uj * cj
        out.append(acc)
    return out
