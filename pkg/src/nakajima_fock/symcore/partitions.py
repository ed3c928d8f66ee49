"""Integer partitions and weak compositions."""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

_TEXT_RE = re.compile(r"^\s*\[\s*(\d+(\s*,\s*\d+)*)?\s*\]\s*$")


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Hashable and immutable, so it can key the term maps of every sparse
    algebra element in the package.

    >>> Partition([1, 3, 2])
    Partition([3, 2, 1])
    >>> Partition.parse("[2,2,1]").weight
    5
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        if not _TEXT_RE.match(text):
            raise ValueError(f"malformed partition text: {text!r}")
        body = text.strip()[1:-1].strip()
        if not body:
            return cls()
        return cls(int(t) for t in body.split(","))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> number of occurrences, i.e. the (1^m1 2^m2 ...) form."""
        return dict(Counter(self))

    def add_part(self, k: int) -> "Partition":
        return Partition(self + (k,))

    def remove_part(self, k: int) -> "Partition":
        parts = list(self)
        parts.remove(k)
        return Partition(parts)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def z_factor(self) -> int:
        """Order of the centralizer of a permutation of cycle type self."""
        return prod(k**m * factorial(m) for k, m in Counter(self).items())

    def fits(self, rows: int, cols: int) -> bool:
        """True if the Young diagram fits in a rows x cols rectangle."""
        return len(self) <= rows and (not self or self[0] <= cols)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def _generate(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _generate(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, each exactly once, in reverse lexicographic order.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['[4]', '[3,1]', '[2,2]', '[2,1,1]', '[1,1,1,1]']
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_cached(n))


def partitions_in_box(rows: int, cols: int, weight: int | None = None) -> list[Partition]:
    """Partitions fitting a rows x cols rectangle, optionally of a fixed weight."""
    weights = range(rows * cols + 1) if weight is None else [weight]
    out = []
    for w in weights:
        if 0 <= w <= rows * cols:
            out.extend(p for p in _partitions_cached(w) if p.fits(rows, cols))
    return out


class Composition(tuple):
    """An ordered tuple of non-negative integers (a subdivision of its weight)."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(e) for e in entries)
        if any(e < 0 for e in entries):
            raise ValueError(f"composition entries must be non-negative: {entries}")
        return super().__new__(cls, entries)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Composition({list(self)})"


def compositions(n: int, parts: int) -> Iterator[Composition]:
    """Weak compositions of n into exactly `parts` ordered non-negative entries."""
    if n < 0 or parts < 0:
        return
    if parts == 0:
        if n == 0:
            yield Composition()
        return

    def rec(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    for c in rec(n, parts):
        yield Composition(c)
