"""Rooted bipartite maps on arbitrary surfaces, encoded by flags.

Every edge carries four flags (one per end and ribbon side) and the map is
given by three fixed-point-free involutions on flags:

``cross``
    the flag at the other end of the same edge, on the same ribbon side;
``side``
    the flag at the same end of the same edge, on the other ribbon side;
``cn`` (corner-next)
    the flag across the corner at the same vertex; its 2-cycles are the corners.

Vertices are orbits of <side, cn>, faces are orbits of <cross, cn>, and
edges are orbits of <cross, side>.  The root is a flag ``r`` at the black
root vertex; the root corner is ``{r, cn[r]}`` and the root direction leaves
that corner along the edge of ``r``, so the face walk steps from an exit
flag ``f`` to ``cn[cross[f]]``.

Flag tokens are stable: surgery on one edge never renames the flags of
another, which lets corners be compared across sibling maps.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import chain

from .partitions import Partition


class InvalidMap(ValueError):
    """A structural invariant of a rooted bipartite map is violated."""


@dataclass(frozen=True, eq=False)
class RootedMap:
    """An immutable rooted bipartite map; the dicts must not be mutated after construction.

    ``black`` is the set of flags lying at black vertices.  The empty map
    (a single vertex, no edges) has empty dicts and ``root = None``.
    Equality and hashing go through :func:`canonical_key`.
    """

    cross: dict
    side: dict
    cn: dict
    root: int | None
    black: frozenset

    @property
    def n_edges(self) -> int:
        return len(self.cross) // 4

    @property
    def flags(self):
        return self.cross.keys()

    def is_empty(self) -> bool:
        return self.root is None

    def key(self) -> tuple:
        return canonical_key(self)

    def __eq__(self, other):
        if not isinstance(other, RootedMap):
            return NotImplemented
        return canonical_key(self) == canonical_key(other)

    def __hash__(self):
        return hash(canonical_key(self))

    def __repr__(self):
        return f"RootedMap(edges={self.n_edges}, root={self.root})"


def empty_map() -> RootedMap:
    return RootedMap({}, {}, {}, None, frozenset())


def single_edge_map() -> RootedMap:
    """The unique map with one edge: flags 0, 1 black and 2, 3 white."""
    return RootedMap(
        cross={0: 2, 2: 0, 1: 3, 3: 1},
        side={0: 1, 1: 0, 2: 3, 3: 2},
        cn={0: 1, 1: 0, 2: 3, 3: 2},
        root=0,
        black=frozenset({0, 1}),
    )


# ---------------------------------------------------------------- orbits


def _orbits(flags, perms) -> list[frozenset]:
    seen = set()
    out = []
    for f in flags:
        if f in seen:
            continue
        orbit = {f}
        stack = [f]
        while stack:
            g = stack.pop()
            for p in perms:
                h = p[g]
                if h not in orbit:
                    orbit.add(h)
                    stack.append(h)
        seen |= orbit
        out.append(frozenset(orbit))
    return out


def vertices(m: RootedMap) -> list[frozenset]:
    """Vertex orbits; the empty map has one vertex with no flags."""
    if m.is_empty():
        return [frozenset()]
    return _orbits(sorted(m.flags), (m.side, m.cn))


def faces(m: RootedMap) -> list[frozenset]:
    if m.is_empty():
        return [frozenset()]
    return _orbits(sorted(m.flags), (m.cross, m.cn))


def edges(m: RootedMap) -> list[frozenset]:
    return _orbits(sorted(m.flags), (m.cross, m.side))


def edge_of(m: RootedMap, f: int) -> frozenset:
    s = m.side[f]
    return frozenset((f, s, m.cross[f], m.cross[s]))


def face_degree(face) -> int:
    """Number of corners in a face."""
    if len(face) % 4:
        raise InvalidMap(f"face orbit of size {len(face)} has odd degree")
    return len(face) // 2


@dataclass(frozen=True)
class MapType:
    mu: Partition
    nu: Partition
    tau: Partition

    def as_tuple(self):
        return (self.mu, self.nu, self.tau)

    def __str__(self):
        return f"({self.mu};{self.nu};{self.tau})"


def map_type(m: RootedMap) -> MapType:
    """Black vertex degrees, white vertex degrees, and halved face degrees."""
    if m.is_empty():
        return MapType(Partition(), Partition(), Partition())
    mu, nu = [], []
    for v in vertices(m):
        (mu if next(iter(v)) in m.black else nu).append(len(v) // 2)
    tau = [face_degree(f) // 2 for f in faces(m)]
    return MapType(Partition(mu), Partition(nu), Partition(tau))


def genus2x(m: RootedMap) -> int:
    """Twice the genus, from e = v + f - 2 + 2g."""
    g2 = 2 - len(vertices(m)) - len(faces(m)) + m.n_edges
    if g2 < 0:
        raise InvalidMap(f"negative Euler genus {g2}")
    return g2


def is_unicellular(m: RootedMap) -> bool:
    return len(faces(m)) == 1


def flag_orientation(m: RootedMap) -> dict | None:
    """A 2-colouring of flags swapped by all three involutions, or None.

    Colour 0 is the colour of the root flag.
    """
    if m.is_empty():
        return {}
    colour = {m.root: 0}
    queue = deque([m.root])
    while queue:
        f = queue.popleft()
        c = colour[f]
        for p in (m.cross, m.side, m.cn):
            g = p[f]
            if g not in colour:
                colour[g] = 1 - c
                queue.append(g)
            elif colour[g] == c:
                return None
    return colour


def is_orientable(m: RootedMap) -> bool:
    return flag_orientation(m) is not None


def is_connected(m: RootedMap) -> bool:
    if m.is_empty():
        return True
    return len(_orbits([m.root], (m.cross, m.side, m.cn))[0]) == len(m.cross)


def validate(m: RootedMap) -> None:
    """Raise :class:`InvalidMap` unless every structural invariant holds."""
    if m.is_empty():
        if m.cross or m.side or m.cn or m.black:
            raise InvalidMap("empty map with leftover flags")
        return
    fl = set(m.flags)
    if set(m.side) != fl or set(m.cn) != fl:
        raise InvalidMap("involutions act on different flag sets")
    for name, p in (("cross", m.cross), ("side", m.side), ("cn", m.cn)):
        for f, g in p.items():
            if f == g or p[g] != f:
                raise InvalidMap(f"{name} is not a fixed-point-free involution at {f}")
    for f in fl:
        g = m.side[m.cross[f]]
        if g == f or m.side[m.cross[g]] != f:
            raise InvalidMap(f"cross.side is not a fixed-point-free involution at {f}")
    if m.root not in fl or m.root not in m.black:
        raise InvalidMap("root must be a black flag")
    if not is_connected(m):
        raise InvalidMap("map is not connected")
    for v in vertices(m):
        inside = {f in m.black for f in v}
        if len(inside) != 1:
            raise InvalidMap("vertex with mixed colours")
    for f in fl:
        if (f in m.black) == (m.cross[f] in m.black):
            raise InvalidMap(f"edge at flag {f} is monochromatic")
    for fc in faces(m):
        face_degree(fc)


# ---------------------------------------------------------------- corners


def corner(m: RootedMap, f: int) -> frozenset:
    return frozenset((f, m.cn[f]))


def corner_partition(m: RootedMap) -> frozenset:
    """C(M): the faces of M, each given as the set of its corners."""
    if m.is_empty():
        return frozenset()
    return frozenset(frozenset(corner(m, f) for f in fc) for fc in faces(m))


def white_corners(m: RootedMap) -> list[int]:
    """One representative flag (the smaller token) for every corner at a white vertex."""
    return sorted(f for f in m.flags if f not in m.black and f < m.cn[f])


def face_walk(m: RootedMap, start: int | None = None) -> list[int]:
    """Exit flags of the corners met walking the face of ``start`` in its direction."""
    f = m.root if start is None else start
    out = [f]
    g = m.cn[m.cross[f]]
    while g != f:
        out.append(g)
        g = m.cn[m.cross[g]]
    return out


# ---------------------------------------------------------------- surgery


def _restrict(m: RootedMap, comp, root, swap_colours: bool) -> RootedMap:
    cross = {f: m.cross[f] for f in comp}
    side = {f: m.side[f] for f in comp}
    cn = {f: m.cn[f] for f in comp}
    black = frozenset(f for f in comp if (f in m.black) != swap_colours)
    return RootedMap(cross, side, cn, root, black)


def delete_root_edge(m: RootedMap) -> tuple[RootedMap, ...]:
    """Remove the root edge.

    Returns ``(M',)`` when the rest stays connected, otherwise ``(M1, M2)``
    where M1 carries the old root corner (rooted with the inherited direction)
    and M2 is rooted at the first corner after the root corner with its
    colours swapped so that its root vertex is black.  Either may be empty.
    """
    if m.is_empty():
        raise InvalidMap("cannot delete an edge from the empty map")
    r = m.root
    rs = m.side[r]
    w = m.cross[r]
    ws = m.side[w]
    gone = {r, rs, w, ws}
    cn = {f: g for f, g in m.cn.items() if f not in gone}
    y = a = None
    if m.cn[r] != rs:
        x, y = m.cn[r], m.cn[rs]
        cn[x], cn[y] = y, x
    if m.cn[w] != ws:
        a, b = m.cn[w], m.cn[ws]
        cn[a], cn[b] = b, a
    rest = RootedMap(
        {f: g for f, g in m.cross.items() if f not in gone},
        {f: g for f, g in m.side.items() if f not in gone},
        cn,
        None,
        m.black - gone,
    )
    perms = (rest.cross, rest.side, rest.cn)
    comp1 = _orbits([y], perms)[0] if y is not None else frozenset()
    if y is not None and a is not None and a in comp1:
        return (RootedMap(rest.cross, rest.side, rest.cn, y, rest.black),)
    m1 = _restrict(rest, comp1, y, False) if y is not None else empty_map()
    if a is None:
        return (m1, empty_map())
    comp2 = _orbits([a], perms)[0]
    return (m1, _restrict(rest, comp2, a, True))


def _fresh(m: RootedMap, k: int) -> list[int]:
    base = max(m.flags, default=-1) + 1
    return list(range(base, base + k))


def insert_nonbridge_edge(m: RootedMap, white_flag: int, twist_bit: int) -> RootedMap:
    """Add an edge from the root corner to the white corner of ``white_flag``.

    The result's root-edge deletion returns exactly ``m``.  The two values
    of ``twist_bit`` give the two gluings of the new edge.
    """
    if m.is_empty():
        raise InvalidMap("non-bridge insertion needs a nonempty map")
    if white_flag not in m.cross or white_flag in m.black:
        raise InvalidMap(f"flag {white_flag} is not at a white vertex")
    b0, b1, wa, wb = _fresh(m, 4)
    y = m.root
    cy = m.cn[y]
    p = white_flag
    q = m.cn[p]
    cross = dict(m.cross)
    side = dict(m.side)
    cn = dict(m.cn)
    cn.update({b0: cy, cy: b0, b1: y, y: b1, wa: p, p: wa, wb: q, q: wb})
    side.update({b0: b1, b1: b0, wa: wb, wb: wa})
    if twist_bit:
        cross.update({b0: wb, wb: b0, b1: wa, wa: b1})
    else:
        cross.update({b0: wa, wa: b0, b1: wb, wb: b1})
    return RootedMap(cross, side, cn, b0, m.black | {b0, b1})


def shift_tokens(m: RootedMap, offset: int) -> RootedMap:
    return relabel(m, {f: f + offset for f in m.flags})


def relabel(m: RootedMap, mapping: dict) -> RootedMap:
    if m.is_empty():
        return m
    return RootedMap(
        {mapping[f]: mapping[g] for f, g in m.cross.items()},
        {mapping[f]: mapping[g] for f, g in m.side.items()},
        {mapping[f]: mapping[g] for f, g in m.cn.items()},
        mapping[m.root],
        frozenset(mapping[f] for f in m.black),
    )


def insert_bridge(m1: RootedMap, m2: RootedMap) -> RootedMap:
    """The unique map whose root-edge deletion is ``(m1, m2)``.

    ``m2`` is given with its own root black; its colours are swapped back
    here.  Its tokens are shifted if they collide with those of ``m1``.
    """
    if m1.flags & m2.flags:
        m2 = shift_tokens(m2, max(m1.flags) + 1 - min(m2.flags))
    base = max(chain(m1.flags, m2.flags), default=-1) + 1
    b0, b1, w0, w1 = range(base, base + 4)
    cross = {**m1.cross, **m2.cross, b0: w0, w0: b0, b1: w1, w1: b1}
    side = {**m1.side, **m2.side, b0: b1, b1: b0, w0: w1, w1: w0}
    cn = {**m1.cn, **m2.cn}
    if m1.is_empty():
        cn.update({b0: b1, b1: b0})
    else:
        y1 = m1.root
        c1 = m1.cn[y1]
        cn.update({b0: c1, c1: b0, b1: y1, y1: b1})
    if m2.is_empty():
        cn.update({w0: w1, w1: w0})
    else:
        y2 = m2.root
        c2 = m2.cn[y2]
        cn.update({w0: y2, y2: w0, w1: c2, c2: w1})
    black = m1.black | {b0, b1} | (m2.flags - m2.black)
    return RootedMap(cross, side, cn, b0, frozenset(black))


def twist_edge(m: RootedMap, f: int) -> RootedMap:
    """Re-glue the edge containing flag ``f`` the other way; no flag is renamed."""
    s = m.side[f]
    c, cs = m.cross[f], m.cross[s]
    cross = dict(m.cross)
    cross.update({f: cs, cs: f, s: c, c: s})
    return RootedMap(cross, m.side, m.cn, m.root, m.black)


# ---------------------------------------------------------------- root-deletion order


def deletion_sequence(m: RootedMap) -> list[RootedMap]:
    """The sub-maps M^1 = M, M^2, ... in label order.

    The root edge of ``M^i`` is the edge labelled i.  After a bridge the
    component carrying the old root corner is processed first.
    """
    out = []

    def walk(sub):
        if sub.is_empty():
            return
        out.append(sub)
        for part in delete_root_edge(sub):
            walk(part)

    walk(m)
    return out


def edge_labels(m: RootedMap) -> list[int]:
    """Root flags h_1, h_2, ... of the sub-maps, indexed by label - 1."""
    return [sub.root for sub in deletion_sequence(m)]


def twist(m: RootedMap, label: int) -> RootedMap:
    """The twist operator on the edge with the given root-deletion label (1-based)."""
    roots = edge_labels(m)
    if not 1 <= label <= len(roots):
        raise IndexError(f"label {label} out of range 1..{len(roots)}")
    return twist_edge(m, roots[label - 1])


# ---------------------------------------------------------------- canonical form


def canonical_numbering(m: RootedMap) -> dict:
    """Breadth-first numbering from the root, trying cross, side, cn in order."""
    if m.is_empty():
        return {}
    num = {m.root: 0}
    queue = deque([m.root])
    perms = (m.cross, m.side, m.cn)
    while queue:
        f = queue.popleft()
        for p in perms:
            g = p[f]
            if g not in num:
                num[g] = len(num)
                queue.append(g)
    return num


def canonical_key(m: RootedMap) -> tuple:
    """A complete invariant of the rooted map: the involutions under BFS numbering."""
    num = canonical_numbering(m)
    size = len(num)
    order = sorted(num, key=num.__getitem__)
    return (
        size,
        tuple(num[m.cross[f]] for f in order),
        tuple(num[m.side[f]] for f in order),
        tuple(num[m.cn[f]] for f in order),
        tuple(int(f in m.black) for f in order),
    )


def canonical_form(m: RootedMap) -> RootedMap:
    return relabel(m, canonical_numbering(m))


def key_to_string(key: tuple) -> str:
    """Length-prefixed text form of a canonical key."""
    size, cross, side, cn, colours = key
    parts = [str(size)]
    for arr in (cross, side, cn):
        parts.append(",".join(map(str, arr)))
    parts.append("".join(map(str, colours)))
    return "|".join(parts)


def map_from_key(key: tuple) -> RootedMap:
    size, cross, side, cn, colours = key
    if size == 0:
        return empty_map()
    return RootedMap(
        dict(enumerate(cross)),
        dict(enumerate(side)),
        dict(enumerate(cn)),
        0,
        frozenset(i for i, c in enumerate(colours) if c),
    )


def map_from_string(text: str) -> RootedMap:
    size, cross, side, cn, colours = text.split("|")
    arr = [tuple(int(x) for x in s.split(",") if x) for s in (cross, side, cn)]
    return map_from_key((int(size), *arr, tuple(int(c) for c in colours)))
