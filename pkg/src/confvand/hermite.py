"""Generalized Hermite interpolation basis and partial fractions of 1/P.

For ``P = prod_j (x - a_j)^m_j`` the basis polynomial for slot ``(j, k)`` is

    L_jk = P_j (x - a_j)^k  sum_{i < m_j - k} g_j^(i)(a_j)/i! (x - a_j)^i

with ``P_j = P / (x - a_j)^m_j`` and ``g_j = 1/P_j``.  It satisfies
``L_jk^(l)(a_i) / l! = [i == j][l == k]`` for every ``l < m_i``.

Node and slot indices are 0-based throughout the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .poly import Polynomial, product, series_reciprocal_at, taylor_coefficients_at
from .scalar import EXACT, Field, Scalar


@dataclass(frozen=True)
class NodeSystem:
    """Distinct nodes with multiplicities, i.e. a factored monic ``P``."""

    alphas: tuple
    multiplicities: tuple
    field: Field = EXACT

    def __post_init__(self):
        alphas = tuple(self.field.coerce(a) for a in self.alphas)
        mults = tuple(self.multiplicities)
        if not alphas:
            raise ValueError("a node system needs at least one node")
        if len(alphas) != len(mults):
            raise ValueError(f"{len(alphas)} nodes but {len(mults)} multiplicities")
        for m in mults:
            if isinstance(m, bool) or not isinstance(m, int) or m < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {m!r}")
        seen = {}
        for j, a in enumerate(alphas):
            if a in seen:
                raise ValueError(
                    f"duplicate node alpha={self.field.format(a)} at positions "
                    f"{seen[a] + 1} and {j + 1}"
                )
            seen[a] = j
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "multiplicities", mults)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple], field: Field = EXACT) -> "NodeSystem":
        pairs = list(pairs)
        return cls(tuple(a for a, _ in pairs), tuple(m for _, m in pairs), field)

    @classmethod
    def simple(cls, alphas: Sequence, field: Field = EXACT) -> "NodeSystem":
        return cls(tuple(alphas), (1,) * len(alphas), field)

    @property
    def s(self) -> int:
        return len(self.alphas)

    @property
    def n(self) -> int:
        return sum(self.multiplicities)

    @property
    def pairs(self) -> list:
        return list(zip(self.alphas, self.multiplicities))

    def slots(self) -> list:
        """``(j, k)`` in block order: node ascending, derivative order ascending."""
        return [(j, k) for j, m in enumerate(self.multiplicities) for k in range(m)]

    def offsets(self) -> list:
        """Index of the first slot of each block."""
        out, acc = [], 0
        for m in self.multiplicities:
            out.append(acc)
            acc += m
        return out

    def factor(self, j: int) -> Polynomial:
        """``(x - a_j)^m_j``"""
        return Polynomial.linear_factor(self.alphas[j]) ** self.multiplicities[j]

    def polynomial(self) -> Polynomial:
        return product(self.factor(j) for j in range(self.s))


def node_polynomial(system: NodeSystem) -> Polynomial:
    return system.polynomial()


def cofactor(system: NodeSystem, j: int) -> Polynomial:
    """``P_j``: the product of every factor except the j-th."""
    if not 0 <= j < system.s:
        raise IndexError(f"node index {j} out of range for {system.s} nodes")
    return product(system.factor(i) for i in range(system.s) if i != j)


@dataclass(frozen=True)
class HermiteBasis:
    system: NodeSystem
    polys: dict  # (j, k) -> Polynomial
    cofactors: tuple
    jets: tuple  # jets[j][i] = g_j^(i)(a_j) / i!

    def __getitem__(self, slot) -> Polynomial:
        return self.polys[slot]

    def __iter__(self):
        return iter(self.system.slots())

    def in_block_order(self) -> list:
        return [self.polys[slot] for slot in self.system.slots()]

    def coefficient_matrix(self) -> list:
        """Rows are the monomial coefficients of each ``L_jk``, padded to ``n``."""
        n = self.system.n
        return [p.padded(n) for p in self.in_block_order()]


def reciprocal_jet(system: NodeSystem, j: int, cof: Polynomial | None = None) -> list:
    if cof is None:
        cof = cofactor(system, j)
    return series_reciprocal_at(cof, system.alphas[j], system.multiplicities[j])


def hermite_basis(system: NodeSystem) -> HermiteBasis:
    polys = {}
    cofactors, jets = [], []
    for j, (alpha, m) in enumerate(system.pairs):
        cof = cofactor(system, j)
        jet = reciprocal_jet(system, j, cof)
        cofactors.append(cof)
        jets.append(tuple(jet))
        zero = alpha * 0
        for k in range(m):
            # (x - a)^k * truncated jet, written in the shifted basis
            shifted = [zero] * k + jet[: m - k]
            polys[(j, k)] = cof * Polynomial.from_shifted(shifted, alpha)
    return HermiteBasis(system, polys, tuple(cofactors), tuple(jets))


def jets_of(q: Polynomial, system: NodeSystem) -> dict:
    """Derivative data ``(j, k) -> Q^(k)(a_j)`` for every slot of ``system``."""
    data = {}
    for j, (alpha, m) in enumerate(system.pairs):
        tc = taylor_coefficients_at(q, alpha, m)
        f = 1
        for k in range(m):
            data[(j, k)] = tc[k] * f
            f *= k + 1
    return data


def interpolate(system: NodeSystem, data: Mapping, basis: HermiteBasis | None = None) -> Polynomial:
    """The unique ``Q`` of degree < n with ``Q^(k)(a_j) = data[(j, k)]``."""
    expected = set(system.slots())
    got = set(data)
    if got != expected:
        missing = sorted(expected - got)
        extra = sorted(got - expected, key=repr)
        raise ValueError(f"interpolation data mismatch: missing {missing}, unexpected {extra}")
    if basis is None:
        basis = hermite_basis(system)
    f = system.field
    out = Polynomial()
    for j, k in system.slots():
        value = f.coerce(data[(j, k)])
        if value == 0:
            continue
        out = out + basis[(j, k)].scale(value / f.factorial(k))
    return out


@dataclass(frozen=True)
class PartialFraction:
    node: int
    exponent: int
    coefficient: Scalar


def partial_fractions(system: NodeSystem) -> list:
    """Terms of ``1/P = sum coeff / (x - a_j)^e``.

    One term per slot ``(j, k)``: exponent ``m_j - k``, coefficient
    ``g_j^(k)(a_j) / k!``.  Zero coefficients are kept.
    """
    terms = []
    for j, m in enumerate(system.multiplicities):
        for k, c in enumerate(reciprocal_jet(system, j)):
            terms.append(PartialFraction(j, m - k, c))
    return terms


def recombine(terms: Sequence[PartialFraction], system: NodeSystem) -> Polynomial:
    """``sum coeff * P / (x - a_j)^e``; equals 1 for a correct expansion."""
    out = Polynomial()
    for t in terms:
        m = system.multiplicities[t.node]
        if not 1 <= t.exponent <= m:
            raise ValueError(f"exponent {t.exponent} outside 1..{m} for node {t.node}")
        shift = Polynomial.linear_factor(system.alphas[t.node]) ** (m - t.exponent)
        out = out + (cofactor(system, t.node) * shift).scale(t.coefficient)
    return out
