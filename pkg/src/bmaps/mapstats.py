"""Statistics computed on maps: root-deletion traces, orientations, the
orientation-induced measure of non-orientability eta, exhaustive
enumeration, the H and a-polynomials, and two sign-reversing involutions.
"""

from __future__ import annotations

import enum
import hashlib
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .exactalg import BETA, Poly
from .mapcore import (
    InvalidMap,
    RootedMap,
    canonical_form,
    canonical_key,
    canonical_numbering,
    corner_partition,
    deletion_sequence,
    delete_root_edge,
    edge_of,
    empty_map,
    face_walk,
    faces,
    flag_orientation,
    genus2x,
    insert_bridge,
    insert_nonbridge_edge,
    is_connected,
    key_to_string,
    map_type,
    twist,
    twist_edge,
    vertices,
    white_corners,
)


class EdgeType(enum.Enum):
    BRIDGE = "Bridge"
    BORDER = "Border"
    TWISTED = "Twisted"
    HANDLE = "Handle"

    def __str__(self):
        return self.value


class Kind(enum.Enum):
    FIRST = "First"
    SECOND = "Second"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class OrientationRule:
    """How faces of a non-orientable map other than the root face are oriented.

    ``seed is None`` is the canonical rule: pick the direction whose walk
    contains the face's flag of smallest canonical index.  A seeded rule
    flips that choice according to a keyed hash of the rooted map and face.
    """

    seed: int | None = None

    @classmethod
    def parse(cls, text: str) -> OrientationRule:
        text = text.strip()
        if text == "canonical":
            return cls()
        if text.startswith("seeded:"):
            return cls(int(text.split(":", 1)[1]))
        raise ValueError(f"unknown orientation rule {text!r}")

    def __str__(self):
        return "canonical" if self.seed is None else f"seeded:{self.seed}"

    def flip(self, key: tuple, face_min: int) -> bool:
        if self.seed is None:
            return False
        digest = hashlib.blake2b(
            f"{key_to_string(key)}#{face_min}".encode(),
            digest_size=8,
            key=(self.seed % 2**64).to_bytes(8, "little"),
        ).digest()
        return bool(digest[0] & 1)


CANONICAL = OrientationRule()


def parse_rules(text: str) -> list[OrientationRule]:
    return [OrientationRule.parse(t) for t in text.split(",") if t.strip()]


# ---------------------------------------------------------------- orientation and kind


def orientation(m: RootedMap, rule: OrientationRule = CANONICAL) -> frozenset:
    """The exit flags of every face walked in the direction chosen by ``rule``.

    Orientable maps get the global orientation of the root; otherwise the
    root face follows the root and each other face is decided by the rule.
    """
    if m.is_empty():
        return frozenset()
    colour = flag_orientation(m)
    if colour is not None:
        return frozenset(f for f, c in colour.items() if c == 0)
    num = canonical_numbering(m)
    key = None
    chosen = set(face_walk(m, m.root))
    for fc in faces(m):
        if m.root in fc:
            continue
        first = min(fc, key=num.__getitem__)
        walk = set(face_walk(m, first))
        if rule.seed is not None:
            key = key or canonical_key(m)
            if rule.flip(key, num[first]):
                walk = fc - walk
        chosen |= walk
    return frozenset(chosen)


def classify_root_edge(m: RootedMap) -> EdgeType:
    parts = delete_root_edge(m)
    if len(parts) == 2:
        return EdgeType.BRIDGE
    change = len(faces(parts[0])) - len(faces(m))
    return {-1: EdgeType.BORDER, 0: EdgeType.TWISTED, 1: EdgeType.HANDLE}[change]


def root_kind(m: RootedMap, rule: OrientationRule = CANONICAL) -> Kind:
    """First iff the corner after the root corner, with the inherited
    direction, agrees with the rule's orientation of the map left after
    deleting the root edge.  Bridges are First by convention."""
    parts = delete_root_edge(m)
    if len(parts) == 2:
        return Kind.FIRST
    a = m.cn[m.cross[m.root]]
    return Kind.FIRST if a in orientation(parts[0], rule) else Kind.SECOND


@dataclass(frozen=True)
class TraceStep:
    label: int
    root_flag: int
    edge: frozenset
    edge_type: EdgeType
    kind: Kind
    submap_key: tuple


@dataclass(frozen=True)
class Trace:
    steps: tuple

    @property
    def handles(self) -> int:
        return sum(s.edge_type is EdgeType.HANDLE for s in self.steps)

    @property
    def twisted(self) -> int:
        return sum(s.edge_type is EdgeType.TWISTED for s in self.steps)

    @property
    def eta(self) -> int:
        return sum(s.kind is Kind.SECOND for s in self.steps)

    def types(self) -> list[EdgeType]:
        return [s.edge_type for s in self.steps]

    def __len__(self):
        return len(self.steps)


def trace(m: RootedMap, rule: OrientationRule = CANONICAL) -> Trace:
    steps = []
    for label, sub in enumerate(deletion_sequence(m), start=1):
        steps.append(
            TraceStep(
                label,
                sub.root,
                edge_of(sub, sub.root),
                classify_root_edge(sub),
                root_kind(sub, rule),
                canonical_key(sub),
            )
        )
    return Trace(tuple(steps))


_ETA_CACHE: dict = {}
_HANDLE_CACHE: dict = {}


def eta(m: RootedMap, rule: OrientationRule = CANONICAL) -> int:
    """Number of second-kind edges in the root-deletion process."""
    if m.is_empty():
        return 0
    ck = (rule, canonical_key(m))
    hit = _ETA_CACHE.get(ck)
    if hit is not None:
        return hit
    parts = delete_root_edge(m)
    if len(parts) == 2:
        val = eta(parts[0], rule) + eta(parts[1], rule)
    else:
        val = eta(parts[0], rule) + (root_kind(m, rule) is Kind.SECOND)
    _ETA_CACHE[ck] = val
    return val


def handle_count(m: RootedMap) -> int:
    """i(M): number of handles in the root-deletion process."""
    if m.is_empty():
        return 0
    ck = canonical_key(m)
    hit = _HANDLE_CACHE.get(ck)
    if hit is not None:
        return hit
    parts = delete_root_edge(m)
    val = sum(handle_count(p) for p in parts)
    if len(parts) == 1 and classify_root_edge(m) is EdgeType.HANDLE:
        val += 1
    _HANDLE_CACHE[ck] = val
    return val


def is_unhandled(m: RootedMap) -> bool:
    return handle_count(m) == 0


def root_degree(m: RootedMap) -> int:
    if m.is_empty():
        return 0
    for v in vertices(m):
        if m.root in v:
            return len(v) // 2
    raise InvalidMap("root flag lies on no vertex")


# ---------------------------------------------------------------- enumeration


class DuplicateMap(AssertionError):
    pass


def _children(n: int, smaller):
    for n1 in range(n):
        for a in smaller(n1):
            for b in smaller(n - 1 - n1):
                yield insert_bridge(a, b)
    for m in smaller(n - 1):
        for p in white_corners(m):
            yield insert_nonbridge_edge(m, p, 0)
            yield insert_nonbridge_edge(m, p, 1)


@lru_cache(maxsize=None)
def _maps_up_to_cache(n: int) -> tuple:
    if n == 0:
        return (empty_map(),)
    return tuple(canonical_form(m) for m in _children(n, _maps_up_to_cache))


CACHE_LIMIT = 5


def enumerate_maps(n: int, audit: bool = False):
    """Yield every rooted bipartite map with n edges exactly once.

    Maps are built by reversing root-edge deletion, which is a bijection,
    so no deduplication is needed.  With ``audit`` every canonical key is
    kept and a repeat raises :class:`DuplicateMap`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    stream = _maps_up_to_cache(n) if n <= CACHE_LIMIT else (
        canonical_form(m) for m in _children(n, _maps_up_to_cache)
    )
    seen = set() if audit else None
    for m in stream:
        if seen is not None:
            k = canonical_key(m)
            if k in seen:
                raise DuplicateMap(f"map {key_to_string(k)} generated twice")
            seen.add(k)
        yield m


def enumerate_by_type(mu, nu, tau) -> list[RootedMap]:
    target = (tuple(mu), tuple(nu), tuple(tau))
    n = sum(mu)
    return [m for m in enumerate_maps(n) if map_type(m).as_tuple() == target]


def census(n: int) -> tuple[Counter, Counter]:
    """Counts of all maps and of orientable maps, keyed by type triple."""
    total, orientable = Counter(), Counter()
    for m in enumerate_maps(n):
        t = map_type(m).as_tuple()
        total[t] += 1
        if flag_orientation(m) is not None:
            orientable[t] += 1
    return total, orientable


# ---------------------------------------------------------------- H and a-polynomials


def genus_of_type(mu, nu, tau) -> int:
    return sum(mu) + 2 - len(mu) - len(nu) - len(tau)


@dataclass
class EtaTable:
    """H_{mu,nu}^tau(beta) = sum of beta^eta over maps of that type, plus the handle split."""

    n: int
    rule: OrientationRule
    h: dict = field(default_factory=dict)  # triple -> Poly
    a: dict = field(default_factory=dict)  # triple -> {i: Poly}
    unhandled: Counter = field(default_factory=Counter)
    counts: dict = field(default_factory=dict)  # triple -> {i: Counter(eta)}

    def consistency_failures(self) -> list[str]:
        """Check H = sum_i a_i beta^{g-2i} for every triple."""
        out = []
        beta = Poly([0, 1], BETA)
        for t, hpoly in self.h.items():
            g = genus_of_type(*t)
            total = Poly.const(0, BETA)
            for i, ai in self.a[t].items():
                total = total + ai * beta ** (g - 2 * i)
            if total != hpoly:
                out.append(f"{t}: H = {hpoly} but sum a_i beta^(g-2i) = {total}")
        return out

    def to_json(self) -> dict:
        rows = []
        for t in sorted(self.h, key=_triple_sort_key):
            rows.append(
                {
                    "mu": ",".join(map(str, t[0])),
                    "nu": ",".join(map(str, t[1])),
                    "tau": ",".join(map(str, t[2])),
                    "h": self.h[t].to_json(),
                    "i_split": [
                        {"i": i, "a": self.a[t][i].to_json()} for i in sorted(self.a[t])
                    ],
                }
            )
        return {"n": self.n, "orientation": str(self.rule), "entries": rows}


def _triple_sort_key(t):
    return tuple(tuple(-x for x in p) for p in t)


def _poly_from_counter(c: Counter, shift: int = 0) -> Poly:
    top = max(c) - shift if c else 0
    coeffs = [0] * (top + 1)
    for e, k in c.items():
        if e - shift < 0:
            raise ValueError(f"negative exponent {e - shift}")
        coeffs[e - shift] += k
    return Poly(coeffs, BETA)


def h_eta_table(n: int, rule: OrientationRule = CANONICAL, maps=None, unicellular_only: bool = False) -> EtaTable:
    """Build H and the a-polynomials by enumerating maps with n edges.

    ``a_i(beta) = sum over maps with i handles of beta^(eta + 2i - g)``.
    """
    table = EtaTable(n, rule)
    source = enumerate_maps(n) if maps is None else maps
    counts: dict = defaultdict(lambda: defaultdict(Counter))
    for m in source:
        if unicellular_only and len(faces(m)) != 1:
            continue
        t = map_type(m).as_tuple()
        i = handle_count(m)
        counts[t][i][eta(m, rule)] += 1
    for t, by_i in counts.items():
        g = genus_of_type(*t)
        hc = Counter()
        table.a[t] = {}
        for i, c in by_i.items():
            hc.update(c)
            table.a[t][i] = _poly_from_counter(c, shift=g - 2 * i)
        table.h[t] = _poly_from_counter(hc)
        table.unhandled[t] = sum(by_i.get(0, Counter()).values())
        table.counts[t] = {i: Counter(c) for i, c in by_i.items()}
    return table


# ---------------------------------------------------------------- involutions


class PreconditionError(ValueError):
    pass


class ReconnectionGap(PreconditionError):
    """The unique corner-preserving re-pairing is not a bipartite map."""


def _twist_labels(m: RootedMap, labels) -> RootedMap:
    roots = [sub.root for sub in deletion_sequence(m)]
    out = m
    for lab in labels:
        out = twist_edge(out, roots[lab - 1])
    return out


def _sigma_eta_labels(m: RootedMap) -> list[int]:
    """Labels to twist so that eta changes parity; m unicellular with a handle."""
    parts = delete_root_edge(m)
    if len(parts) == 2:
        m1, m2 = parts
        if handle_count(m1) > 0:
            return [lab + 1 for lab in _sigma_eta_labels(m1)]
        if handle_count(m2) > 0:
            return [lab + 1 + m1.n_edges for lab in _sigma_eta_labels(m2)]
        raise PreconditionError("bridge with both components unhandled")
    kind = classify_root_edge(m)
    if kind is EdgeType.HANDLE:
        return [1]
    if kind is EdgeType.TWISTED:
        inner = [lab + 1 for lab in _sigma_eta_labels(parts[0])]
        plain = _twist_labels(m, inner)
        if len(faces(plain)) == 1:
            return inner
        return inner + [1]
    raise PreconditionError(f"unexpected root edge type {kind} in a unicellular map")


def sigma_eta(m: RootedMap) -> RootedMap:
    """Twist-based involution on unicellular maps with at least one handle.

    It preserves the type and the handle count and flips the parity of eta
    for every orientation rule, so no rule is needed to build it.
    """
    if m.is_empty() or len(faces(m)) != 1:
        raise PreconditionError("sigma_eta needs a unicellular map")
    if handle_count(m) == 0:
        raise PreconditionError("sigma_eta needs a map with a handle")
    return _twist_labels(m, _sigma_eta_labels(m))


def _handle_labels(m: RootedMap) -> list[int]:
    return [
        lab
        for lab, sub in enumerate(deletion_sequence(m), start=1)
        if classify_root_edge(sub) is EdgeType.HANDLE
    ]


def _two_handle_setup(m: RootedMap):
    if len(faces(m)) != 1:
        raise PreconditionError("map is not unicellular")
    tr = trace(m)
    labels = [s.label for s in tr.steps if s.edge_type is EdgeType.HANDLE]
    if len(labels) != 2 or tr.twisted:
        raise PreconditionError("need exactly two handles and no twisted edges")
    return labels


def _first_difference(m: RootedMap, j: int):
    """Largest k with C(M^k) != C((tau_j M)^k), or None."""
    subs = deletion_sequence(m)
    twisted_subs = deletion_sequence(twist(m, j))
    found = None
    for k, (a, b) in enumerate(zip(subs, twisted_subs), start=1):
        if corner_partition(a) != corner_partition(b):
            found = k
    return found


def _rejoin(m: RootedMap, pair_a, pair_b, swap: bool) -> dict:
    """Cross-pairing joining half-edge pair_a to half-edge pair_b."""
    (a0, a1), (b0, b1) = pair_a, pair_b
    if swap:
        b0, b1 = b1, b0
    return {a0: b0, b0: a0, a1: b1, b1: a1}


def reconnect_unique(m: RootedMap) -> RootedMap:
    """Re-pair the half-edges of e_k and e_j crosswise, keeping C(M^k).

    k is the largest label with C(M^k) != C((tau_j M)^k), where i < j
    are the handle labels.  The half-edge h_k is joined to h_j' and h_j to
    h_k'; of the four gluings exactly one keeps the corner partition of the
    k-th sub-map.  Raises :class:`ReconnectionGap` when that gluing joins two
    vertices of the same colour, which happens when M^j was split off as
    the second part of a bridge and so is rooted at a white vertex of M.
    """
    i, j = _two_handle_setup(m)
    k = _first_difference(m, j)
    if k is None:
        raise PreconditionError("all corner partitions agree under tau_j")
    if not i < k < j:
        raise PreconditionError(f"difference label {k} not between handles {i} and {j}")
    subs = deletion_sequence(m)
    if classify_root_edge(subs[k - 1]) is not EdgeType.BORDER:
        raise PreconditionError(f"root edge of M^{k} is not a border")
    target = corner_partition(subs[k - 1])
    hk = subs[k - 1].root
    hj = subs[j - 1].root
    half_k = (hk, m.side[hk])
    half_k2 = (m.cross[hk], m.cross[m.side[hk]])
    half_j = (hj, m.side[hj])
    half_j2 = (m.cross[hj], m.cross[m.side[hj]])
    found = []
    for s1 in (False, True):
        for s2 in (False, True):
            cross = dict(m.cross)
            cross.update(_rejoin(m, half_k, half_j2, s1))
            cross.update(_rejoin(m, half_j, half_k2, s2))
            cand = RootedMap(cross, m.side, m.cn, m.root, m.black)
            if not is_connected(cand):
                continue
            csubs = deletion_sequence(cand)
            if len(csubs) < k or corner_partition(csubs[k - 1]) != target:
                continue
            found.append(cand)
    if len(found) != 1:
        raise PreconditionError(f"{len(found)} re-pairings keep C(M^{k}); expected one")
    out = found[0]
    if (hk in m.black) != (hj in m.black):
        raise ReconnectionGap(
            f"the re-pairing keeping C(M^{k}) joins h_{k} and h_{j}' at vertices of one colour "
            f"(M^{j} is rooted at a white vertex of M); no bipartite M' exists"
        )
    return out


def sigma_two_handles(m: RootedMap, rule: OrientationRule = CANONICAL) -> RootedMap:
    """Involution on unicellular two-handle maps with eta(sigma M) = 2 - eta(M)."""
    i, j = _two_handle_setup(m)
    base_eta = eta(m, rule)
    if _first_difference(m, j) is None:
        candidates = [twist(m, j), twist(twist(m, j), i)]
    else:
        mp = reconnect_unique(m)
        candidates = [mp, twist(mp, i)]
    good = [c for c in candidates if eta(c, rule) == 2 - base_eta]
    if len(good) != 1:
        raise PreconditionError(f"{len(good)} candidates satisfy eta = 2 - {base_eta}")
    return good[0]


def clear_caches():
    _ETA_CACHE.clear()
    _HANDLE_CACHE.clear()
