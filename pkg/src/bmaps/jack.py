"""Jack symmetric functions J_lambda^(alpha), built by Gram-Schmidt.

J_lambda is obtained from m_lambda by orthogonalizing against the J_mu
already built for every mu before lambda in increasing reverse
lexicographic order, then rescaling so that [m_{1^n}] J_lambda = n!.
The closed forms for one-part partitions are kept as independent checks
and never used in the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactalg import ALPHA, RatFunc
from .partitions import Partition, all_partitions, dominance_leq, z_factor
from .symfun import SymFunc, hall_scalar, m_to_p, monomial, p_to_m, specialize_single_variable


class DegenerateNorm(ArithmeticError):
    pass


@dataclass(frozen=True)
class JackTable:
    degree: int
    p: dict  # Partition -> SymFunc in the p-basis (authoritative for scalar products)
    m: dict  # Partition -> SymFunc in the m-basis (used for the triangularity checks)
    norms: dict  # Partition -> RatFunc

    def __getitem__(self, lam) -> SymFunc:
        return self.p[Partition(lam)]


@lru_cache(maxsize=None)
def build_jack(n: int) -> JackTable:
    order = list(reversed(all_partitions(n)))  # 1^n first
    one_n = Partition([1] * n)
    built_p: dict = {}
    norms: dict = {}
    for lam in order:
        f = m_to_p(monomial(lam))
        for mu in built_p:
            proj = hall_scalar(f, built_p[mu])
            if proj:
                f = f - built_p[mu].scale(proj / norms[mu])
        lead = p_to_m(f)[one_n]
        if not lead:
            raise DegenerateNorm(f"[m_1^n] vanished while building J_{lam}")
        f = f.scale(RatFunc.const(factorial(n)) / lead)
        nrm = hall_scalar(f, f)
        if not nrm:
            raise DegenerateNorm(f"<J_{lam}, J_{lam}> vanished")
        built_p[lam] = f
        norms[lam] = nrm
    p = {lam: built_p[lam] for lam in all_partitions(n)}
    return JackTable(n, p, {lam: p_to_m(f) for lam, f in p.items()}, {lam: norms[lam] for lam in p})


def jack(lam) -> SymFunc:
    lam = Partition(lam)
    return build_jack(lam.size).p[lam]


def jack_norm(lam) -> RatFunc:
    lam = Partition(lam)
    return build_jack(lam.size).norms[lam]


def rising_alpha(n: int) -> RatFunc:
    """(1 + alpha)(1 + 2 alpha) ... (1 + (n-1) alpha)."""
    a = RatFunc.var(ALPHA)
    out = RatFunc.const(1)
    for k in range(1, n):
        out = out * (a * k + 1)
    return out


def one_part_norm(n: int) -> RatFunc:
    """Closed form of <J_(n), J_(n)>_alpha."""
    return rising_alpha(n) * RatFunc.var(ALPHA) ** n * factorial(n)


def one_part_jack(n: int) -> SymFunc:
    """Closed form of J_(n) in the p-basis: sum over mu of n! alpha^{n - l(mu)} / z_mu p_mu."""
    a = RatFunc.var(ALPHA)
    return SymFunc(
        n, "p", {mu: a ** (n - len(mu)) * Fraction(factorial(n), z_factor(mu)) for mu in all_partitions(n)}
    )


def check_conditions(n: int) -> list[str]:
    """Triangularity, normalization and orthogonality of the degree-n table.

    Returns a list of failure descriptions; empty means every condition holds.
    """
    tab = build_jack(n)
    one_n = Partition([1] * n)
    problems = []
    parts = all_partitions(n)
    for lam in parts:
        jm = tab.m[lam]
        if jm[one_n] != factorial(n):
            problems.append(f"normalization: [m_1^{n}] J_{lam} = {jm[one_n]}")
        for mu in jm.coeffs:
            if not dominance_leq(mu, lam):
                problems.append(f"triangularity: [m_{mu}] J_{lam} = {jm[mu]} with {mu} not <= {lam}")
    for i, lam in enumerate(parts):
        for mu in parts[i + 1 :]:
            s = hall_scalar(tab.p[lam], tab.p[mu])
            if s:
                problems.append(f"orthogonality: <J_{lam}, J_{mu}> = {s}")
    return problems


def check_one_part_formulas(n: int) -> list[str]:
    """Compare the built table against the closed forms for one-part Jacks.

    Covers the p-expansion of J_(n), its norm, and the single-variable
    evaluation (nonzero only for lambda = (n)).  Failures name lambda and mu.
    """
    tab = build_jack(n)
    problems = []
    top = Partition([n])
    closed = one_part_jack(n)
    for mu in all_partitions(n):
        if tab.p[top][mu] != closed[mu]:
            problems.append(f"J_({n}) at p_{mu}: built {tab.p[top][mu]}, closed form {closed[mu]}")
    if tab.norms[top] != one_part_norm(n):
        problems.append(f"<J_({n}),J_({n})>: built {tab.norms[top]}, closed form {one_part_norm(n)}")
    for lam in all_partitions(n):
        ev = specialize_single_variable(tab.p[lam])
        want = {n: rising_alpha(n)} if lam == top else {}
        if ev != want:
            problems.append(f"J_{lam}(t,0,0,...): got {ev}, expected {want}")
    return problems
