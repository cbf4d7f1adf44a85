"""Integer partitions: orders, statistics and the small surgeries used as indices."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial, prod


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Partitions are plain immutable tuples, so they hash and compare
    structurally and can be used directly as table keys::

        >>> lam = Partition([1, 3, 2])
        >>> lam
        Partition(3, 2, 1)
        >>> lam.size, lam.length
        (6, 3)
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Read the comma-separated text form; the empty string is the empty partition."""
        text = text.strip().strip("()")
        if not text:
            return cls()
        return cls(int(x) for x in text.split(",") if x.strip())

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        """Map part value i to m_i."""
        return Counter(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"


EMPTY = Partition()


def _partitions_bounded(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, (n) first and 1^n last.

    Reverse lexicographic order is a linear extension of dominance: if
    lambda strictly dominates mu then lambda comes first.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(tuple.__new__(Partition, p) for p in _partitions_bounded(n, n))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff ``lam <= mu`` in the dominance order (prefix sums compared)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance compares partitions of equal size, got {lam} and {mu}")
    s_lam = s_mu = 0
    for j in range(max(len(lam), len(mu))):
        s_lam += lam[j] if j < len(lam) else 0
        s_mu += mu[j] if j < len(mu) else 0
        if s_lam > s_mu:
            return False
    return True


def z_factor(lam: Partition) -> int:
    """prod_i i^{m_i} m_i!, the centralizer size of a permutation of cycle type lam."""
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


@lru_cache(maxsize=None)
def union(lam: Partition, mu: Partition) -> Partition:
    """Multiset union of parts."""
    if not mu:
        return lam
    if not lam:
        return mu
    return tuple.__new__(Partition, sorted(lam + mu, reverse=True))


def down(mu: Partition, i: int) -> Partition:
    """Replace one part equal to ``i`` by ``i - 1`` (dropping it when i = 1)."""
    parts = list(mu)
    try:
        parts.remove(i)
    except ValueError:
        raise ValueError(f"{mu!r} has no part equal to {i}") from None
    if i > 1:
        parts.append(i - 1)
    return Partition(parts)


def _sub_multisets(mu: Partition, size: int):
    """Sub-multisets of the parts of mu with the given sum, with their complements."""
    counts = sorted(Counter(mu).items(), reverse=True)
    for picks in product(*(range(m + 1) for _, m in counts)):
        if sum(v * k for (v, _), k in zip(counts, picks)) != size:
            continue
        taken, left = [], []
        for (v, m), k in zip(counts, picks):
            taken += [v] * k
            left += [v] * (m - k)
        yield Partition(taken), Partition(left)


def splits(mu: Partition, sizes) -> list[tuple[Partition, ...]]:
    """All tuples (mu^1, ..., mu^k) with |mu^j| = sizes[j] whose union is mu."""
    sizes = tuple(sizes)
    if any(r < 0 for r in sizes) or sum(sizes) != sum(mu):
        raise ValueError(f"sizes {sizes} do not add up to |{mu}| = {sum(mu)}")
    if not sizes:
        return [()]
    out = []
    for head, rest in _sub_multisets(mu, sizes[0]):
        for tail in splits(rest, sizes[1:]):
            out.append((head,) + tail)
    return out
