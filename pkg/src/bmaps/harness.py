"""Verification suites tying the Jack side to the map side.

Each suite returns a :class:`SuiteReport`.  Suites never stop at the first
failure: every identity is checked on every key and all offenders are
recorded with both exact values.  Open questions live in
:func:`suite_experimental` and only ever produce observations.

Set ``BMAPS_CACHE_DIR`` to keep h-tables on disk between runs.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import tempfile
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .exactalg import ALPHA, BETA, NonPolynomial, NotInSpan, Poly, RatFunc, b_basis_decompose
from .hseries import (
    HTable,
    degree_bound_violations,
    expansion_check,
    extract_h,
    genus_bound,
    marginal_sum_check,
    symmetry_check,
)
from .jack import build_jack, check_conditions, check_one_part_formulas, one_part_norm
from .mapcore import canonical_key, faces, flag_orientation, key_to_string, map_type
from .mapstats import (
    CANONICAL,
    OrientationRule,
    PreconditionError,
    enumerate_maps,
    eta,
    genus_of_type,
    h_eta_table,
    handle_count,
    root_degree,
    sigma_eta,
    sigma_two_handles,
)
from .partitions import Partition, all_partitions
from .symfun import SymFunc

ARTIFACT_VERSION = "1"
CACHE_ENV = "BMAPS_CACHE_DIR"
SUITES = ("jack", "map-series", "unicellular", "marginal", "experimental")


# ---------------------------------------------------------------- reports


@dataclass
class Check:
    """One identity checked over a batch of keys."""

    identity: str
    n: int
    rule: str | None = None
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "rule": self.rule,
            "checked": self.checked,
            "passed": self.passed,
            "failures": list(self.failures),
        }


@dataclass
class SuiteReport:
    suite: str
    n_range: tuple
    rules: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    observations: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def check(self, identity: str, n: int, rule=None) -> Check:
        c = Check(identity, n, None if rule is None else str(rule))
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[str]:
        return [
            f"{c.identity} [n={c.n}{'' if c.rule is None else ', ' + c.rule}]: {msg}"
            for c in self.checks
            for msg in c.failures
        ]

    def to_json(self, include_timings: bool = False) -> dict:
        """Deterministic JSON; timings vary between runs and are opt-in."""
        out = {
            "suite": self.suite,
            "n_range": list(self.n_range),
            "rules": list(self.rules),
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "observations": self.observations,
        }
        if include_timings:
            out["timings"] = {k: round(v, 3) for k, v in sorted(self.timings.items())}
        return out

    def dumps(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_json(include_timings), indent=1, sort_keys=True)

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else f"FAIL ({len(c.failures)})"
            rule = "" if c.rule is None else f" {c.rule}"
            lines.append(f"[{self.suite}] n={c.n}{rule} {c.identity}: {status} over {c.checked} keys")
        return lines


class _Timer:
    def __init__(self, report: SuiteReport, name: str):
        self.report, self.name = report, name

    def __enter__(self):
        self.start = time.perf_counter()

    def __exit__(self, *exc):
        self.report.timings[self.name] = self.report.timings.get(self.name, 0.0) + time.perf_counter() - self.start


def fmt_triple(t) -> str:
    return "(" + ";".join(str(Partition(p)) for p in t) + ")"


def fmt_pair(mu, nu) -> str:
    return f"({Partition(mu)};{Partition(nu)})"


def _rule_names(rules) -> list[str]:
    return [str(r) for r in rules]


# ---------------------------------------------------------------- disk cache


class CacheMismatch(RuntimeError):
    pass


def cache_dir() -> Path | None:
    d = os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def _cache_path(directory: Path, module: str, n: int, rule=None) -> Path:
    ident = json.dumps([ARTIFACT_VERSION, module, n, None if rule is None else str(rule)])
    return directory / f"{module}-{hashlib.sha256(ident.encode()).hexdigest()[:24]}.json"


def _atomic_write(path: Path, payload: dict):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _htable_payload(table: HTable) -> dict:
    return {
        "version": ARTIFACT_VERSION,
        "max_degree": table.max_degree,
        "degrees": [table.to_json(d) for d in range(1, table.max_degree + 1)],
    }


def _htable_from_payload(data: dict) -> HTable:
    out = HTable(data["max_degree"])
    for block in data["degrees"]:
        part = HTable.from_json(block)
        out.entries.update(part.entries)
    return out


SPOT_CHECK_DEGREE = 4


def spot_check(table: HTable, rng: random.Random) -> None:
    """Recompute one randomly chosen entry from scratch and compare.

    Coefficients of degree d do not depend on the truncation order, so a
    small fresh table suffices.
    """
    d = rng.randint(1, min(table.max_degree, SPOT_CHECK_DEGREE))
    keys = sorted(table.entries[d])
    key = keys[rng.randrange(len(keys))]
    fresh = extract_h(d).entries[d][key]
    if fresh != table.entries[d][key]:
        raise CacheMismatch(f"cached h{fmt_triple(key)} = {table.entries[d][key]}, recomputed {fresh}")


@lru_cache(maxsize=None)
def _extract_in_process(max_degree: int) -> HTable:
    return extract_h(max_degree)


def htable(max_degree: int) -> HTable:
    """h-coefficients for every degree up to ``max_degree``, via the disk cache when enabled."""
    directory = cache_dir()
    if directory is None:
        return _extract_in_process(max_degree)
    path = _cache_path(directory, "hseries", max_degree)
    if path.exists():
        try:
            table = _htable_from_payload(json.loads(path.read_text()))
            spot_check(table, random.Random(max_degree))
            return table
        except (CacheMismatch, ValueError, KeyError):
            path.unlink()
    table = extract_h(max_degree)
    _atomic_write(path, _htable_payload(table))
    return table


# ---------------------------------------------------------------- shared map data


@lru_cache(maxsize=None)
def unicellular_maps(n: int) -> tuple:
    return tuple(m for m in enumerate_maps(n) if len(faces(m)) == 1)


@lru_cache(maxsize=None)
def audited_census(n: int) -> tuple[Counter, Counter]:
    """(all maps, orientable maps) per type, with the duplicate audit switched on."""
    total, orientable = Counter(), Counter()
    for m in enumerate_maps(n, audit=True):
        t = map_type(m).as_tuple()
        total[t] += 1
        if flag_orientation(m) is not None:
            orientable[t] += 1
    return total, orientable


@lru_cache(maxsize=None)
def _full_eta_table(n: int, rule: OrientationRule):
    return h_eta_table(n, rule)


@lru_cache(maxsize=None)
def _unicellular_eta_table(n: int, rule: OrientationRule):
    return h_eta_table(n, rule, maps=unicellular_maps(n))


def _zero() -> Poly:
    return Poly.const(0, BETA)


# ---------------------------------------------------------------- suites


def suite_jack(nmax: int) -> SuiteReport:
    rep = SuiteReport("jack", (1, nmax))
    a = RatFunc.var(ALPHA)
    for n in range(1, nmax + 1):
        with _Timer(rep, f"n={n}"):
            c = rep.check("C1-C3 (triangularity, normalization, orthogonality)", n)
            c.checked = len(all_partitions(n))
            c.failures.extend(check_conditions(n))
            c = rep.check("one-part expansion, norm and single-variable evaluation", n)
            c.checked = len(all_partitions(n))
            c.failures.extend(check_one_part_formulas(n))
    if nmax >= 2:
        tab = build_jack(2)
        c = rep.check("degree-2 hand values", 2)
        want = {
            Partition([2]): SymFunc(2, "p", {Partition([1, 1]): 1, Partition([2]): a}),
            Partition([1, 1]): SymFunc(2, "p", {Partition([1, 1]): 1, Partition([2]): -1}),
        }
        for lam, f in want.items():
            c.checked += 1
            if tab.p[lam] != f:
                c.failures.append(f"J_({lam}) = {tab.p[lam].to_json()['coeffs']}, expected {f.to_json()['coeffs']}")
    if nmax >= 3:
        c = rep.check("norm of J_(3)", 3)
        c.checked = 1
        want = (a + 1) * (a * 2 + 1) * a**3 * 6
        got = build_jack(3).norms[Partition([3])]
        if got != want or got != one_part_norm(3):
            c.failures.append(f"<J_(3),J_(3)> = {got}, expected {want}")
    return rep


def suite_map_series(nmax: int) -> SuiteReport:
    """h(0) and h(1) against the orientable and full censuses, with polynomiality checks."""
    rep = SuiteReport("map-series", (1, nmax))
    with _Timer(rep, "htable"):
        try:
            table = htable(nmax)
        except NonPolynomial as exc:
            rep.check("polynomiality", nmax).failures.append(str(exc))
            return rep
    for n in range(1, nmax + 1):
        entries = table.entries[n]
        c = rep.check("polynomial with degree <= 2+n-l(mu)-l(nu)-l(tau), zero below", n)
        c.checked = len(entries)
        c.failures.extend(degree_bound_violations(table, n))
        c = rep.check("symmetry in mu and nu", n)
        c.checked = len(entries)
        c.failures.extend(symmetry_check(table, n))
        with _Timer(rep, f"census n={n}"):
            total, orientable = audited_census(n)
        c0 = rep.check("h(0) = orientable census", n)
        c1 = rep.check("h(1) = census", n)
        for t, h in sorted(entries.items()):
            for chk, census, x in ((c0, orientable, 0), (c1, total, 1)):
                chk.checked += 1
                if h(x) != census[t]:
                    chk.failures.append(f"{fmt_triple(t)}: h({x}) = {h(x)}, census = {census[t]}")
        stray = set(total) - set(entries)
        if stray:
            c1.failures.extend(f"{fmt_triple(t)}: maps found but no h entry" for t in sorted(stray))
    return rep


def _sigma_eta_failures(maps, rules) -> tuple[int, list[str]]:
    out, checked = [], 0
    for m in maps:
        if handle_count(m) == 0:
            continue
        checked += 1
        tag = f"{fmt_triple(map_type(m).as_tuple())} i={handle_count(m)}"
        try:
            s = sigma_eta(m)
            back = sigma_eta(s)
        except PreconditionError as exc:
            out.append(f"{tag}: {exc}")
            continue
        if back != m:
            out.append(f"{tag}: sigma(sigma(M)) != M")
        if map_type(s) != map_type(m) or len(faces(s)) != 1:
            out.append(f"{tag}: type {map_type(m)} became {map_type(s)}")
        if handle_count(s) != handle_count(m):
            out.append(f"{tag}: handle count {handle_count(m)} became {handle_count(s)}")
        for rule in rules:
            if (eta(s, rule) - eta(m, rule)) % 2 == 0:
                out.append(f"{tag} [{rule}]: eta {eta(m, rule)} -> {eta(s, rule)} keeps parity")
    return checked, out


def _two_handle_failures(maps, rule) -> tuple[int, list[str]]:
    out, checked = [], 0
    for m in maps:
        checked += 1
        tag = f"{fmt_triple(map_type(m).as_tuple())} map {key_to_string(canonical_key(m))}"
        try:
            s = sigma_two_handles(m, rule)
            back = sigma_two_handles(s, rule)
        except PreconditionError as exc:
            out.append(f"{tag}: {exc}")
            continue
        if back != m:
            out.append(f"{tag}: sigma(sigma(M)) != M")
        if eta(s, rule) != 2 - eta(m, rule):
            out.append(f"{tag}: eta(M) = {eta(m, rule)}, eta(sigma M) = {eta(s, rule)}")
        if map_type(s) != map_type(m) or handle_count(s) != 2:
            out.append(f"{tag}: sigma left the class")
    return checked, out


def suite_unicellular(nmax: int, rules=(CANONICAL,)) -> SuiteReport:
    rules = list(rules)
    rep = SuiteReport("unicellular", (1, nmax), _rule_names(rules))
    table = htable(nmax)
    for n in range(1, nmax + 1):
        top = Partition([n])
        maps = unicellular_maps(n)
        by_class = defaultdict(list)
        for m in maps:
            t = map_type(m).as_tuple()
            by_class[(t[0], t[1])].append(m)

        c = rep.check("h(-1) = (-1)^(n+1-l(mu)-l(nu)) #unhandled", n)
        for mu in all_partitions(n):
            for nu in all_partitions(n):
                c.checked += 1
                h = table.entries[n][(mu, nu, top)]
                count = sum(1 for m in by_class[(mu, nu)] if handle_count(m) == 0)
                want = (-1) ** ((n + 1 - len(mu) - len(nu)) % 2) * count
                if h(-1) != want:
                    c.failures.append(f"{fmt_triple((mu, nu, top))}: h(-1) = {h(-1)}, signed count = {want}")

        with _Timer(rep, f"sigma_eta n={n}"):
            c = rep.check("sigma_eta: involution, eta parity flip, handles and type kept", n)
            c.checked, fails = _sigma_eta_failures(maps, rules)
            c.failures.extend(fails)

        for rule in rules:
            with _Timer(rep, f"eta table n={n} {rule}"):
                et = _unicellular_eta_table(n, rule)
            c = rep.check("a_i(-1) = 0 and sum (-1)^eta = 0 for i >= 1", n, rule)
            for t, by_i in sorted(et.a.items()):
                for i, ai in sorted(by_i.items()):
                    if i == 0:
                        continue
                    c.checked += 1
                    signed = sum((-1) ** e * k for e, k in et.counts[t][i].items())
                    if ai(-1) != 0 or signed != 0:
                        c.failures.append(f"{fmt_triple(t)} i={i}: a_i(-1) = {ai(-1)}, sum (-1)^eta = {signed}")

            c = rep.check("h = H_eta for l(mu)+l(nu) >= n-3", n, rule)
            for mu in all_partitions(n):
                for nu in all_partitions(n):
                    if len(mu) + len(nu) < n - 3:
                        continue
                    c.checked += 1
                    t = (mu, nu, top)
                    h, H = table.entries[n][t], et.h.get(t, _zero())
                    if h != H:
                        c.failures.append(f"{fmt_triple(t)}: h = {h}, H_eta = {H}")

            c = rep.check("two-handle sigma: involution, eta -> 2 - eta, a_2 palindromic", n, rule)
            for (mu, nu), members in sorted(by_class.items()):
                if len(mu) + len(nu) != n - 3:
                    continue
                two = [m for m in members if handle_count(m) == 2]
                with _Timer(rep, f"two-handle n={n} {rule}"):
                    k, fails = _two_handle_failures(two, rule)
                c.checked += k
                c.failures.extend(fails)
                t = (mu, nu, top)
                a2 = et.a.get(t, {}).get(2, _zero())
                coeffs = [a2.coeff(d) for d in range(3)]
                if a2.degree > 2 or coeffs[0] != coeffs[2]:
                    c.failures.append(f"{fmt_triple(t)}: a_2 = {a2} is not of the form a + b beta + a beta^2")
    return rep


def suite_marginal(nmax: int, rules=(CANONICAL,), refined_max: int = 4) -> SuiteReport:
    rules = list(rules)
    rep = SuiteReport("marginal", (1, nmax), _rule_names(rules))
    table = htable(nmax)
    b1 = Poly([1, 1], BETA)

    def power(e):
        return b1**e if e >= 0 else _zero()

    for n in range(1, nmax + 1):
        c = rep.check("sum_tau h = (1+beta)^(n+1-l(mu)-l(nu)) sum_tau h(0)", n)
        c.checked = len(all_partitions(n)) ** 2
        c.failures.extend(marginal_sum_check(table, n))
        c = rep.check("b-basis expansion of h", n)
        c.checked = len(table.entries[n])
        c.failures.extend(expansion_check(table, n))

        h_sum = defaultdict(_zero)
        for (mu, nu, _), h in table.items(n):
            h_sum[(mu, nu)] = h_sum[(mu, nu)] + h
        total, orientable = audited_census(n)
        orient_sum = Counter()
        for t, k in orientable.items():
            orient_sum[(t[0], t[1])] += k

        for rule in rules:
            with _Timer(rep, f"eta table n={n} {rule}"):
                et = _full_eta_table(n, rule)
            H_sum = defaultdict(_zero)
            for (mu, nu, _), H in et.h.items():
                H_sum[(Partition(mu), Partition(nu))] = H_sum[(Partition(mu), Partition(nu))] + H
            c1 = rep.check("sum_tau h = sum_tau H_eta", n, rule)
            c2 = rep.check("sum_tau H_eta = (1+beta)^(n+1-l(mu)-l(nu)) #orientable", n, rule)
            for mu in all_partitions(n):
                for nu in all_partitions(n):
                    c1.checked += 1
                    c2.checked += 1
                    lhs, rhs = h_sum[(mu, nu)], H_sum[(mu, nu)]
                    if lhs != rhs:
                        c1.failures.append(f"{fmt_pair(mu, nu)}: sum h = {lhs}, sum H = {rhs}")
                    want = power(n + 1 - len(mu) - len(nu)) * orient_sum[(mu, nu)]
                    if rhs != want:
                        c2.failures.append(f"{fmt_pair(mu, nu)}: sum H = {rhs}, expected {want}")

            if n <= refined_max:
                c = rep.check("root-degree refinement of the marginal sum", n, rule)
                by_deg = defaultdict(Counter)
                orient_deg = Counter()
                for m in enumerate_maps(n):
                    t = map_type(m).as_tuple()
                    key = (t[0], t[1], root_degree(m))
                    by_deg[key][eta(m, rule)] += 1
                    if flag_orientation(m) is not None:
                        orient_deg[key] += 1
                for mu in all_partitions(n):
                    for nu in all_partitions(n):
                        for d in sorted(set(mu)):
                            c.checked += 1
                            key = (mu, nu, d)
                            lhs = Poly.const(0, BETA)
                            for e, k in by_deg[key].items():
                                lhs = lhs + Poly([0] * e + [k], BETA)
                            want = power(n + 1 - len(mu) - len(nu)) * orient_deg[key]
                            if lhs != want:
                                c.failures.append(f"{fmt_pair(mu, nu)} root degree {d}: sum beta^eta = {lhs}, expected {want}")
    return rep


def _poly_json(p: Poly) -> list[str]:
    return p.to_json()


def suite_experimental(nmax: int, rules=(CANONICAL,)) -> SuiteReport:
    """Observations on the open questions; nothing here can fail."""
    rules = list(rules)
    rep = SuiteReport("experimental", (1, nmax), _rule_names(rules))
    table = htable(nmax)
    for n in range(1, nmax + 1):
        for rule in rules:
            et = _full_eta_table(n, rule)
            for t, h in sorted(table.entries[n].items()):
                key = tuple(tuple(p) for p in t)
                H = et.h.get(key, _zero())
                by_i = et.counts.get(key, {})
                handle_counts = {i: sum(c.values()) for i, c in by_i.items()}
                unhandled = handle_counts.get(0, 0)
                g = genus_bound(*t)
                obs = {
                    "n": n,
                    "rule": str(rule),
                    "triple": fmt_triple(t),
                    "h": _poly_json(h),
                    "H_eta": _poly_json(H),
                    "h(-1)": str(h(-1)),
                    "H_eta(-1)": str(H(-1)),
                    "unhandled": unhandled,
                    "H_eta(-1) = +-unhandled": abs(H(-1)) == unhandled,
                    "H_eta(-1) = h(-1)": H(-1) == h(-1),
                    "h = H_eta": h == H,
                    "handle_counts": {str(i): k for i, k in sorted(handle_counts.items())},
                }
                obs["b_basis"] = _b_basis_observation(H, g, handle_counts)
                rep.observations.append(obs)
    return rep


def _b_basis_observation(H: Poly, g: int, handle_counts: dict) -> dict:
    if g < 0:
        return {"g": g, "coefficients": None, "vanishes": not H, "matches_handle_counts": not H}
    try:
        coeffs = b_basis_decompose(H, g)
    except NotInSpan:
        return {"g": g, "coefficients": None, "in_span": False, "matches_handle_counts": False}
    match = all(
        Fraction(2) ** i * a == handle_counts.get(i, 0) for i, a in enumerate(coeffs)
    ) and all(i < len(coeffs) for i in handle_counts)
    return {
        "g": g,
        "coefficients": [str(a) for a in coeffs],
        "in_span": True,
        "matches_handle_counts": match,
    }


def run_suite(name: str, nmax: int, rules=(CANONICAL,)) -> SuiteReport:
    if name == "jack":
        return suite_jack(nmax)
    if name == "map-series":
        return suite_map_series(nmax)
    if name == "unicellular":
        return suite_unicellular(nmax, rules)
    if name == "marginal":
        return suite_marginal(nmax, rules)
    if name == "experimental":
        return suite_experimental(nmax, rules)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")


__all__ = [
    "Check",
    "SuiteReport",
    "CacheMismatch",
    "SUITES",
    "htable",
    "spot_check",
    "unicellular_maps",
    "audited_census",
    "suite_jack",
    "suite_map_series",
    "suite_unicellular",
    "suite_marginal",
    "suite_experimental",
    "run_suite",
]
