"""Homogeneous symmetric functions as coefficient tables over partitions.

Only the power-sum (``"p"``) and monomial (``"m"``) bases are supported.
Alphabets are never materialized: a symmetric function of degree n is a
dict from partitions of n to coefficients in Q(alpha).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactalg import ALPHA, RatFunc
from .partitions import Partition, all_partitions, union, z_factor

P_BASIS = "p"
M_BASIS = "m"


def _rf(c) -> RatFunc:
    return c if isinstance(c, RatFunc) else RatFunc.const(c, ALPHA)


@dataclass(frozen=True)
class SymFunc:
    """A homogeneous symmetric function of a fixed degree in one basis.

    Zero coefficients are never stored.
    """

    degree: int
    basis: str
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in (P_BASIS, M_BASIS):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} is not a partition of {self.degree}")
            c = _rf(c)
            if c:
                clean[Partition(lam)] = c
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, lam) -> RatFunc:
        return self.coeffs.get(lam, RatFunc.const(0))

    def _same_space(self, other: SymFunc):
        if (self.degree, self.basis) != (other.degree, other.basis):
            raise ValueError(
                f"cannot combine degree {self.degree}/{self.basis} with degree {other.degree}/{other.basis}"
            )

    def __add__(self, other: SymFunc) -> SymFunc:
        self._same_space(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFunc(self.degree, self.basis, out)

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + other.scale(-1)

    def scale(self, c) -> SymFunc:
        c = _rf(c)
        if not c:
            return SymFunc(self.degree, self.basis)
        return SymFunc(self.degree, self.basis, {lam: v * c for lam, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (self.degree, self.basis, self.coeffs) == (other.degree, other.basis, other.coeffs)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "coeffs": {str(lam): str(c) for lam, c in sorted(self.coeffs.items(), reverse=True)},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


def power_sum(lam) -> SymFunc:
    lam = Partition(lam)
    return SymFunc(sum(lam), P_BASIS, {lam: 1})


def monomial(lam) -> SymFunc:
    lam = Partition(lam)
    return SymFunc(sum(lam), M_BASIS, {lam: 1})


def _set_partitions(items: list):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]


@dataclass(frozen=True)
class TransitionTables:
    """Exact p -> m matrix of one degree and its inverse, as nested dicts."""

    degree: int
    p_to_m: dict
    m_to_p: dict


@lru_cache(maxsize=None)
def transition_tables(n: int) -> TransitionTables:
    """Build the degree-n base change by expanding products of power sums.

    The coefficient of m_mu in p_lam counts assignments of the parts of lam
    to variables whose exponent vector is mu: each set partition of the
    parts whose block sums form mu contributes prod_i m_i(mu)! orderings.
    """
    parts = all_partitions(n)
    p_to_m = {}
    for lam in parts:
        row = {}
        for sp in _set_partitions(list(lam)):
            mu = Partition(sum(block) for block in sp)
            row[mu] = row.get(mu, 0) + 1
        p_to_m[lam] = {mu: c * _mult_factorials(mu) for mu, c in row.items()}
    return TransitionTables(n, p_to_m, _invert(parts, p_to_m))


def _mult_factorials(mu: Partition) -> int:
    out = 1
    for i, m in mu.multiplicities().items():
        for k in range(2, m + 1):
            out *= k
    return out


def _invert(parts, mat: dict) -> dict:
    """Gauss-Jordan inverse of a dict-of-dicts matrix over Q."""
    idx = {lam: k for k, lam in enumerate(parts)}
    size = len(parts)
    rows = []
    for lam in parts:
        row = [Fraction(0)] * (2 * size)
        for mu, c in mat[lam].items():
            row[idx[mu]] = Fraction(c)
        row[size + idx[lam]] = Fraction(1)
        rows.append(row)
    for c in range(size):
        piv = next(i for i in range(c, size) if rows[i][c])
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = 1 / rows[c][c]
        rows[c] = [x * inv for x in rows[c]]
        for i in range(size):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    # rows now hold M^{-1} with M indexed [p-row][m-col]; row for m_mu gives its p-expansion
    # since (p = M m) implies (m = M^{-1} p)
    return {
        lam: {parts[j]: rows[i][size + j] for j in range(size) if rows[i][size + j]}
        for i, lam in enumerate(parts)
    }


def p_to_m(f: SymFunc) -> SymFunc:
    if f.basis == M_BASIS:
        return f
    tab = transition_tables(f.degree).p_to_m
    out = {}
    for lam, c in f.coeffs.items():
        for mu, k in tab[lam].items():
            term = c * k
            out[mu] = out[mu] + term if mu in out else term
    return SymFunc(f.degree, M_BASIS, out)


def m_to_p(f: SymFunc) -> SymFunc:
    if f.basis == P_BASIS:
        return f
    tab = transition_tables(f.degree).m_to_p
    out = {}
    for lam, c in f.coeffs.items():
        for mu, k in tab[lam].items():
            term = c * k
            out[mu] = out[mu] + term if mu in out else term
    return SymFunc(f.degree, P_BASIS, out)


@lru_cache(maxsize=None)
def p_norm(lam: Partition) -> RatFunc:
    """<p_lam, p_lam>_alpha = z_lam alpha^{l(lam)}."""
    return RatFunc.var(ALPHA) ** len(lam) * z_factor(lam)


def hall_scalar(f: SymFunc, g: SymFunc) -> RatFunc:
    """The alpha-deformed Hall scalar product."""
    if f.degree != g.degree:
        raise ValueError(f"scalar product of degrees {f.degree} and {g.degree}")
    f, g = m_to_p(f), m_to_p(g)
    acc = RatFunc.const(0)
    for lam, c in f.coeffs.items():
        d = g.coeffs.get(lam)
        if d is not None:
            acc = acc + c * d * p_norm(lam)
    return acc


def p_product(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the power-sum basis, where p_lam p_mu = p_{lam union mu}."""
    if f.basis != P_BASIS or g.basis != P_BASIS:
        raise ValueError("p_product expects both factors in the p-basis")
    out = {}
    for lam, c in f.coeffs.items():
        for mu, d in g.coeffs.items():
            key = union(lam, mu)
            term = c * d
            out[key] = out[key] + term if key in out else term
    return SymFunc(f.degree + g.degree, P_BASIS, out)


def specialize_single_variable(f: SymFunc) -> dict[int, RatFunc]:
    """Evaluate at the alphabet (t, 0, 0, ...): p_k -> t^k.

    Returns ``{power: coefficient}`` with zero terms dropped; a homogeneous
    input has at most one term, at power ``f.degree``.  Setting t = 1 gives
    the evaluation at (1, 0, 0, ...).
    """
    f = m_to_p(f)
    total = RatFunc.const(0)
    for c in f.coeffs.values():
        total = total + c
    return {f.degree: total} if total else {}
