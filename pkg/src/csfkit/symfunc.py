"""Exact symmetric-function arithmetic over the power-sum, Schur and monomial bases.

Characters of the symmetric group come from the Murnaghan-Nakayama rule,
implemented on beta-sets (abacus positions): adding or removing a border
strip of size ``r`` moves one bead by ``r`` and the sign is the parity of
the beads jumped over.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from csfkit.partitions import Partition, dominates, hook_lengths, multiplicities, partitions_of

log = logging.getLogger(__name__)

BASES = ("power", "schur", "monomial")


@dataclass
class SymPoly:
    """A homogeneous symmetric function of degree ``n`` in a single basis.

    ``coeffs`` maps partitions of ``n`` to nonzero integers.
    """

    basis: str
    n: int
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean: dict[Partition, int] = {}
        for lam, c in self.coeffs.items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.n != self.n:
                raise ValueError(f"{lam} is not a partition of {self.n}")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be exact integers, got {type(c).__name__}")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def term(cls, basis: str, lam: Iterable[int], coeff: int = 1) -> "SymPoly":
        lam = Partition(lam)
        return cls(basis, lam.n, {lam: coeff})

    def _check_compatible(self, other: "SymPoly") -> None:
        if self.basis != other.basis or self.n != other.n:
            raise ValueError(
                f"cannot combine {self.basis}/deg {self.n} with {other.basis}/deg {other.n}"
            )

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymPoly(self.basis, self.n, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.basis, self.n, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __mul__(self, k: int) -> "SymPoly":
        return SymPoly(self.basis, self.n, {lam: k * c for lam, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __getitem__(self, lam: Iterable[int]) -> int:
        return self.coeffs.get(Partition(lam), 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def items(self) -> Iterator[tuple[Partition, int]]:
        """Nonzero terms in the fixed reverse-lexicographic order."""
        for lam in partitions_of(self.n):
            c = self.coeffs.get(lam)
            if c:
                yield lam, c


# ---------------------------------------------------------------------------
# beta-set border strips
# ---------------------------------------------------------------------------

def _beads(lam: tuple[int, ...], length: int) -> list[int]:
    padded = list(lam) + [0] * (length - len(lam))
    return [padded[i] + length - 1 - i for i in range(length)]


def _from_beads(beads: Iterable[int]) -> Partition:
    ordered = sorted(beads, reverse=True)
    length = len(ordered)
    return Partition(p for p in (b - (length - 1 - i) for i, b in enumerate(ordered)) if p)


@lru_cache(maxsize=None)
def remove_strips(lam: tuple[int, ...], r: int) -> tuple[tuple[Partition, int], ...]:
    """Shapes obtained by removing a border strip of size ``r``, with signs."""
    beads = _beads(lam, len(lam))
    occupied = set(beads)
    out = []
    for b in beads:
        t = b - r
        if t < 0 or t in occupied:
            continue
        jumped = sum(1 for x in beads if t < x < b)
        new = [t if x == b else x for x in beads]
        out.append((_from_beads(new), -1 if jumped % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def add_strips(lam: tuple[int, ...], r: int) -> tuple[tuple[Partition, int], ...]:
    """Shapes obtained by adding a border strip of size ``r``, with signs."""
    beads = _beads(lam, len(lam) + r)
    occupied = set(beads)
    out = []
    for b in beads:
        t = b + r
        if t in occupied:
            continue
        jumped = sum(1 for x in beads if b < x < t)
        new = [t if x == b else x for x in beads]
        out.append((_from_beads(new), -1 if jumped % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    # cycles is descending; consume the largest part first
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    return sum(sign * _mn(smaller, rest) for smaller, sign in remove_strips(shape, r))


def mn_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Irreducible character value chi^lam at cycle type mu."""
    if sum(lam) != sum(mu):
        raise ValueError(f"partitions of different weight: {lam} vs {mu}")
    return _mn(tuple(lam), tuple(sorted(mu, reverse=True)))


def hook_dimension(lam: tuple[int, ...]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    return factorial(sum(lam)) // hooks


def centralizer_order(mu: tuple[int, ...]) -> int:
    return prod(factorial(m) * p**m for p, m in multiplicities(mu).items())


class CharacterTable:
    """Character values chi^lam(mu) for a fixed degree ``n``.

    Single entries are computed on demand by border-strip removal. :meth:`build`
    fills every column at once by pushing border-strip additions down a
    depth-first walk over partitions of ``n`` that share leading parts.
    """

    def __init__(self, n: int, columns: dict[Partition, dict[Partition, int]] | None = None):
        if n < 0:
            raise ValueError("degree must be non-negative")
        self.n = n
        self.partitions = partitions_of(n)
        self._columns: dict[Partition, dict[Partition, int]] = dict(columns or {})

    @property
    def complete(self) -> bool:
        return len(self._columns) == len(self.partitions)

    def __getitem__(self, key: tuple[tuple[int, ...], tuple[int, ...]]) -> int:
        lam, mu = key
        col = self._columns.get(Partition(mu))
        if col is not None:
            return col.get(Partition(lam), 0)
        return mn_character(lam, mu)

    def column(self, mu: tuple[int, ...]) -> dict[Partition, int]:
        """Nonzero values chi^lam(mu) keyed by lam."""
        mu = Partition(mu)
        if mu.n != self.n:
            raise ValueError(f"{mu} is not a partition of {self.n}")
        col = self._columns.get(mu)
        if col is None:
            col = {lam: v for lam in self.partitions if (v := mn_character(lam, mu))}
            self._columns[mu] = col
        return col

    def build(self) -> "CharacterTable":
        if self.complete:
            return self
        log.info("building character table for n=%d (%d partitions)", self.n, len(self.partitions))

        def walk(state: dict[Partition, int], prefix: tuple[int, ...], remaining: int, cap: int) -> None:
            if remaining == 0:
                self._columns[Partition(prefix)] = state
                return
            for r in range(min(remaining, cap), 0, -1):
                nxt: dict[Partition, int] = {}
                for shape, val in state.items():
                    for bigger, sign in add_strips(shape, r):
                        nxt[bigger] = nxt.get(bigger, 0) + sign * val
                walk({s: v for s, v in nxt.items() if v}, prefix + (r,), remaining - r, r)

        walk({Partition(()): 1}, (), self.n, self.n)
        return self

    def entries(self) -> Iterator[tuple[Partition, Partition, int]]:
        """All (lam, mu, value) triples, zeros included, in enumeration order."""
        self.build()
        for lam in self.partitions:
            for mu in self.partitions:
                yield lam, mu, self._columns[mu].get(lam, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return self.n == other.n and list(self.entries()) == list(other.entries())


# ---------------------------------------------------------------------------
# Kostka numbers and basis changes
# ---------------------------------------------------------------------------

def _horizontal_strip_removals(lam: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    # inner shapes nu with lam/nu a horizontal strip of k cells: lam[i+1] <= nu[i] <= lam[i]
    rows = len(lam)

    def rec(i: int, left: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        floor = lam[i + 1] if i + 1 < rows else 0
        for take in range(min(left, lam[i] - floor) + 1):
            yield from rec(i + 1, left - take, acc + (lam[i] - take,))

    yield from rec(0, k, ())


def _count_ssyt(lam: tuple[int, ...], content: tuple[int, ...]) -> int:
    # the cells holding the largest letter form a horizontal strip
    if not content:
        return 1 if not lam else 0
    return sum(_count_ssyt(inner, content[:-1]) for inner in _horizontal_strip_removals(lam, content[-1]))


def kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    if sum(lam) != sum(mu):
        raise ValueError(f"partitions of different weight: {lam} vs {mu}")
    return _count_ssyt(tuple(lam), tuple(mu))


def _require(f: SymPoly, basis: str) -> None:
    if f.basis != basis:
        raise ValueError(f"expected a {basis}-basis SymPoly, got {f.basis}")


def p_to_s(f: SymPoly, table: CharacterTable | None = None) -> SymPoly:
    """Power-sum to Schur: [s_lam] = sum_mu f[mu] chi^lam(mu)."""
    _require(f, "power")
    if table is None:
        table = CharacterTable(f.n)
    elif table.n != f.n:
        raise ValueError(f"character table has degree {table.n}, need {f.n}")
    out: dict[Partition, int] = {}
    for mu, c in f.coeffs.items():
        for lam, chi in table.column(mu).items():
            out[lam] = out.get(lam, 0) + c * chi
    return SymPoly("schur", f.n, out)


def s_to_m(f: SymPoly) -> SymPoly:
    """Schur to monomial: [m_mu] = sum_lam f[lam] K_{lam,mu}."""
    _require(f, "schur")
    out: dict[Partition, int] = {}
    for lam, c in f.coeffs.items():
        for mu in partitions_of(f.n):
            if dominates(lam, mu):
                out[mu] = out.get(mu, 0) + c * kostka(lam, mu)
    return SymPoly("monomial", f.n, out)


def _p_to_m_coeff(mu: tuple[int, ...], lam: tuple[int, ...]) -> int:
    # ways to send each part of mu to a row of lam so every row is filled exactly
    def rec(i: int, room: list[int]) -> int:
        if i == len(mu):
            return 1 if not any(room) else 0
        total = 0
        for j in range(len(room)):
            if room[j] >= mu[i]:
                room[j] -= mu[i]
                total += rec(i + 1, room)
                room[j] += mu[i]
        return total

    return rec(0, list(lam))


def p_to_m(f: SymPoly) -> SymPoly:
    """Power-sum to monomial by expanding each product of power sums directly."""
    _require(f, "power")
    out: dict[Partition, int] = {}
    for mu, c in f.coeffs.items():
        for lam in partitions_of(f.n):
            k = _p_to_m_coeff(mu, lam)
            if k:
                out[lam] = out.get(lam, 0) + c * k
    return SymPoly("monomial", f.n, out)


def schur_principal_evaluation(lam: tuple[int, ...], k: int) -> int:
    """s_lam(1, ..., 1) with ``k`` ones, by the hook-content formula."""
    if k < 1:
        raise ValueError("k must be positive")
    if len(lam) > k:
        return 0
    num = prod(k + j - i for i in range(len(lam)) for j in range(lam[i]))
    den = prod(h for row in hook_lengths(lam) for h in row)
    return num // den
