"""The triple Jack series, its logarithm, and the coefficients h_{mu,nu}^tau(beta).

A series in three power-sum alphabets and t is stored per t-degree as a
dict keyed by partition triples (mu, nu, tau); multiplication is a
convolution of keys under partition union in each alphabet.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from functools import lru_cache

from .exactalg import (
    ALPHA,
    BETA,
    NonPolynomial,
    NotInSpan,
    Poly,
    RatFunc,
    as_polynomial,
    b_basis_decompose,
    substitute_alpha_to_beta,
)
from .jack import build_jack
from .partitions import EMPTY, Partition, all_partitions, union

ONE_KEY = (EMPTY, EMPTY, EMPTY)


@dataclass
class TripleSeries:
    """Truncated series: ``slices[n]`` maps (mu, nu, tau) to a coefficient in Q(alpha)."""

    max_degree: int
    slices: dict = field(default_factory=dict)

    def __post_init__(self):
        for n in range(self.max_degree + 1):
            self.slices.setdefault(n, {})

    def constant(self) -> RatFunc:
        return self.slices[0].get(ONE_KEY, RatFunc.const(0))

    def __getitem__(self, key):
        n = sum(key[0])
        return self.slices.get(n, {}).get(key, RatFunc.const(0))

    def _combine(self, other: TripleSeries, sign: int) -> TripleSeries:
        out = TripleSeries(min(self.max_degree, other.max_degree))
        for n in range(out.max_degree + 1):
            sl = dict(self.slices[n])
            for k, v in other.slices[n].items():
                sl[k] = sl[k] + v * sign if k in sl else v * sign
            out.slices[n] = {k: v for k, v in sl.items() if v}
        return out

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, c) -> TripleSeries:
        out = TripleSeries(self.max_degree)
        for n, sl in self.slices.items():
            out.slices[n] = {k: v * c for k, v in sl.items()} if c else {}
        return out

    def __mul__(self, other: TripleSeries) -> TripleSeries:
        top = min(self.max_degree, other.max_degree)
        out = TripleSeries(top)
        for n in range(top + 1):
            acc = {}
            for a in range(n + 1):
                left, right = self.slices[a], other.slices[n - a]
                if not left or not right:
                    continue
                for (m1, n1, t1), c1 in left.items():
                    for (m2, n2, t2), c2 in right.items():
                        key = (union(m1, m2), union(n1, n2), union(t1, t2))
                        term = c1 * c2
                        acc[key] = acc[key] + term if key in acc else term
            out.slices[n] = {k: v for k, v in acc.items() if v}
        return out

    def equals(self, other: TripleSeries) -> bool:
        top = min(self.max_degree, other.max_degree)
        return all(self.slices[n] == other.slices[n] for n in range(top + 1))


def unit(max_degree: int) -> TripleSeries:
    return TripleSeries(max_degree, {0: {ONE_KEY: RatFunc.const(1)}})


def build_phi(max_degree: int) -> TripleSeries:
    """sum over lambda of J_lambda(x) J_lambda(y) J_lambda(z) t^|lambda| / <J_lambda, J_lambda>."""
    phi = unit(max_degree)
    for n in range(1, max_degree + 1):
        tab = build_jack(n)
        acc = {}
        for lam in all_partitions(n):
            coeffs = list(tab.p[lam].coeffs.items())
            inv_norm = tab.norms[lam].inverse()
            for mu, a in coeffs:
                a = a * inv_norm
                for nu, b in coeffs:
                    ab = a * b
                    for tau, c in coeffs:
                        key = (mu, nu, tau)
                        term = ab * c
                        acc[key] = acc[key] + term if key in acc else term
        phi.slices[n] = {k: v for k, v in acc.items() if v}
    return phi


def log_series(phi: TripleSeries) -> TripleSeries:
    """Formal log via sum_k (-1)^{k+1} (phi - 1)^k / k, truncated at phi.max_degree."""
    if phi.constant() != 1 or len(phi.slices[0]) != 1:
        raise ValueError("log needs a series with constant term 1")
    top = phi.max_degree
    u = phi - unit(top)
    out = TripleSeries(top)
    power = u
    for k in range(1, top + 1):
        out = out + power.scale(RatFunc.const((-1) ** (k + 1)) / k)
        power = power * u
    return out


def exp_series(f: TripleSeries) -> TripleSeries:
    """Formal exp via sum_k f^k / k!; ``f`` must have no constant term."""
    if f.slices[0]:
        raise ValueError("exp needs a series without constant term")
    top = f.max_degree
    out = unit(top)
    power = unit(top)
    fact = 1
    for k in range(1, top + 1):
        power = power * f
        fact *= k
        out = out + power.scale(RatFunc.const(1) / fact)
    return out


@lru_cache(maxsize=None)
def log_phi(max_degree: int) -> TripleSeries:
    return log_series(build_phi(max_degree))


def genus_bound(mu, nu, tau) -> int:
    """2 + n - l(mu) - l(nu) - l(tau): twice the genus of a map of that type."""
    return 2 + sum(mu) - len(mu) - len(nu) - len(tau)


@dataclass
class HTable:
    """Exact h_{mu,nu}^tau(beta) for every triple of partitions of n <= max_degree."""

    max_degree: int
    entries: dict = field(default_factory=dict)  # n -> {(mu, nu, tau): Poly in beta}

    def __getitem__(self, key) -> Poly:
        mu, nu, tau = (Partition(p) for p in key)
        return self.entries[sum(mu)][(mu, nu, tau)]

    def items(self, n: int):
        return self.entries[n].items()

    def to_json(self, n: int) -> dict:
        rows = [
            {"mu": str(mu), "nu": str(nu), "tau": str(tau), "h": poly.to_json()}
            for (mu, nu, tau), poly in _ordered(self.entries[n])
        ]
        return {"n": n, "entries": rows}

    def write_json(self, path, n: int):
        with open(path, "w") as fh:
            json.dump(self.to_json(n), fh, indent=1)

    def write_csv(self, path, n: int):
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["mu", "nu", "tau", "h"])
            for (mu, nu, tau), poly in _ordered(self.entries[n]):
                w.writerow([str(mu), str(nu), str(tau), " ".join(poly.to_json())])

    @classmethod
    def from_json(cls, data: dict) -> HTable:
        n = data["n"]
        tab = cls(n, {n: {}})
        for row in data["entries"]:
            key = tuple(Partition.parse(row[k]) for k in ("mu", "nu", "tau"))
            tab.entries[n][key] = Poly.from_json(row["h"], BETA)
        return tab


def _ordered(entries: dict):
    order = {}

    def rank(p):
        n = sum(p)
        if n not in order:
            order[n] = {lam: k for k, lam in enumerate(all_partitions(n))}
        return order[n][p]

    return sorted(entries.items(), key=lambda kv: tuple(rank(p) for p in kv[0]))


def extract_h(max_degree: int) -> HTable:
    """Read h from alpha t d/dt log(phi), substituting alpha = beta + 1 entrywise.

    Every coefficient is passed through :func:`as_polynomial`, so a
    non-polynomial value aborts with :class:`NonPolynomial` naming the triple.
    """
    lg = log_phi(max_degree)
    a = RatFunc.var(ALPHA)
    table = HTable(max_degree)
    for n in range(1, max_degree + 1):
        sl = lg.slices[n]
        zero = Poly.const(0, BETA)
        rows = {}
        for mu in all_partitions(n):
            for nu in all_partitions(n):
                for tau in all_partitions(n):
                    c = sl.get((mu, nu, tau))
                    if c is None:
                        rows[(mu, nu, tau)] = zero
                        continue
                    val = substitute_alpha_to_beta(c * a * n)
                    rows[(mu, nu, tau)] = as_polynomial(val, context=(mu, nu, tau))
        table.entries[n] = rows
    return table


def degree_bound_violations(table: HTable, n: int) -> list[str]:
    out = []
    for (mu, nu, tau), h in table.items(n):
        g = genus_bound(mu, nu, tau)
        if g < 0 and h:
            out.append(f"h_{{{mu},{nu}}}^{{{tau}}} = {h} should vanish (bound {g})")
        elif h and h.degree > g:
            out.append(f"h_{{{mu},{nu}}}^{{{tau}}} = {h} has degree {h.degree} > {g}")
    return out


def marginal_sum_check(table: HTable, n: int) -> list[str]:
    """sum_tau h(beta) = (1 + beta)^{n+1-l(mu)-l(nu)} sum_tau h(0) for every (mu, nu)."""
    out = []
    b1 = Poly([1, 1], BETA)
    for mu, nu, total in marginal_sums(table, n):
        e = n + 1 - len(mu) - len(nu)
        at0 = total(0)
        rhs = b1**e * at0 if e >= 0 else Poly.const(0, BETA)
        if e < 0 and at0:
            out.append(f"({mu};{nu}): negative exponent {e} with nonzero marginal {at0}")
        elif total != rhs:
            out.append(f"({mu};{nu}): sum_tau h = {total}, expected {rhs}")
    return out


def marginal_sums(table: HTable, n: int):
    sums = {}
    for (mu, nu, _), h in table.items(n):
        sums[(mu, nu)] = sums.get((mu, nu), Poly.const(0, BETA)) + h
    for (mu, nu), total in sums.items():
        yield mu, nu, total


def expansion_check(table: HTable, n: int) -> list[str]:
    """Every h decomposes in the basis beta^{g-2i}(beta+1)^i, and vanishes when g < 0."""
    out = []
    for (mu, nu, tau), h in table.items(n):
        g = genus_bound(mu, nu, tau)
        if g < 0:
            if h:
                out.append(f"({mu},{nu},{tau}): g = {g} but h = {h}")
            continue
        try:
            b_basis_decompose(h, g)
        except NotInSpan:
            out.append(f"({mu},{nu},{tau}): {h} not in the span for g = {g}")
    return out


def symmetry_check(table: HTable, n: int) -> list[str]:
    out = []
    for (mu, nu, tau), h in table.items(n):
        if table.entries[n][(nu, mu, tau)] != h:
            out.append(f"h_{{{mu},{nu}}}^{{{tau}}} != h_{{{nu},{mu}}}^{{{tau}}}")
    return out


__all__ = [
    "TripleSeries",
    "HTable",
    "NonPolynomial",
    "build_phi",
    "log_series",
    "exp_series",
    "extract_h",
    "genus_bound",
    "marginal_sum_check",
    "expansion_check",
    "degree_bound_violations",
    "symmetry_check",
]
