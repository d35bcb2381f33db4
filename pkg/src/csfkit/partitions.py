"""Integer partitions: enumeration, dominance order, conjugation, hooks."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves exactly like the tuple of its parts, so it can be used as a
    dictionary key and compared with plain tuples.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the canonical ``"9,9,2"`` form; ``""`` is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self)

    def text(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def _rev_lex(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _rev_lex(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _rev_lex(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_cached(n))


def partition_index(n: int) -> dict[Partition, int]:
    """Position of each partition of ``n`` in :func:`partitions_of` order."""
    return _index_cached(n)


@lru_cache(maxsize=None)
def _index_cached(n: int) -> dict[Partition, int]:
    return {p: i for i, p in enumerate(_partitions_cached(n))}


def dominates(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    """True iff every prefix sum of ``lam`` is at least that of ``mu``."""
    if sum(lam) != sum(mu):
        raise ValueError(f"partitions of different weight: {lam} vs {mu}")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def conjugate(lam: tuple[int, ...]) -> Partition:
    if not lam:
        return Partition(())
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: tuple[int, ...]) -> list[list[int]]:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def multiplicities(lam: tuple[int, ...]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    return counts
