"""Partitions, compositions and the l-abacus.

Everything here is exact integer combinatorics. A :class:`Partition` is an
immutable, hashable wrapper around a weakly decreasing tuple of positive
integers; most functions also accept a plain sequence and coerce it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import InternalError, ParseError, PreconditionError

__all__ = [
    "Partition",
    "Composition",
    "Abacus",
    "LAdicExpansion",
    "as_partition",
    "as_composition",
    "parse_parts",
    "conjugate",
    "hook_lengths",
    "is_l_restricted",
    "is_l_regular",
    "is_l_parabolic",
    "to_abacus",
    "l_core",
    "l_weight",
    "count_hooks_divisible",
    "l_adic_expansion",
    "rho",
    "parabolic",
    "dominance_leq",
    "enumerate_partitions",
]


def _check_ints(parts: Iterable[object]) -> tuple[int, ...]:
    out = []
    for p in parts:
        if isinstance(p, bool) or not isinstance(p, int):
            raise PreconditionError(f"parts must be integers, got {p!r}")
        if p < 0:
            raise PreconditionError(f"parts must be nonnegative, got {p}")
        out.append(p)
    return tuple(out)


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    Zero parts are stripped on construction; a sequence that increases
    anywhere is rejected rather than sorted.
    """

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()) -> None:
        raw = _check_ints(parts)
        for a, b in zip(raw, raw[1:]):
            if a < b:
                raise PreconditionError(f"not weakly decreasing: {raw}")
        object.__setattr__(self, "parts", tuple(p for p in raw if p))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """Zero-based part access, 0 past the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        return cls(parse_parts(text))


@dataclass(frozen=True)
class Composition:
    """An ordered sequence of positive integers (zeros are dropped)."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()) -> None:
        raw = _check_ints(parts)
        object.__setattr__(self, "parts", tuple(p for p in raw if p))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @classmethod
    def from_string(cls, text: str) -> "Composition":
        return cls(parse_parts(text))


PartitionLike = Union[Partition, Sequence[int]]
CompositionLike = Union[Composition, Partition, Sequence[int]]

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_parts(text: str) -> tuple[int, ...]:
    """Parse ``"4,2,1"`` or the exponent shorthand ``"2^3,1^2"``.

    The empty (or all-blank) string is the empty partition.
    """
    text = text.strip()
    if not text:
        return ()
    parts: list[int] = []
    for token in text.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise ParseError(f"bad partition token {token!r} in {text!r}")
        value, mult = int(m.group(1)), int(m.group(2) or 1)
        parts.extend([value] * mult)
    return tuple(parts)


def as_partition(x: PartitionLike) -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.from_string(x)
    return Partition(x)


def as_composition(x: CompositionLike) -> Composition:
    if isinstance(x, Composition):
        return x
    if isinstance(x, str):
        return Composition.from_string(x)
    return Composition(tuple(x))


def _check_l(l: int, minimum: int) -> None:
    if isinstance(l, bool) or not isinstance(l, int) or l < minimum:
        raise PreconditionError(f"l must be an integer >= {minimum}, got {l!r}")


def conjugate(lam: PartitionLike) -> Partition:
    lam = as_partition(lam)
    if not lam.parts:
        return lam
    return Partition(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1))


def hook_lengths(lam: PartitionLike) -> list[int]:
    """Hook lengths of all cells, listed row by row."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    return [
        (row - j) + (conj[j] - i) - 1
        for i, row in enumerate(lam.parts)
        for j in range(row)
    ]


def is_l_restricted(lam: PartitionLike, l: int) -> bool:
    lam = as_partition(lam)
    padded = lam.parts + (0,)
    return all(a - b <= l - 1 for a, b in zip(padded, padded[1:]))


def is_l_regular(lam: PartitionLike, l: int) -> bool:
    return is_l_restricted(conjugate(lam), l)


def is_l_parabolic(lam: CompositionLike, l: int) -> bool:
    return all(p in (1, l) for p in as_composition(lam))


@dataclass(frozen=True)
class Abacus:
    """Beta-numbers of a partition laid out on ``runner_count`` runners."""

    runner_count: int
    beads: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_l(self.runner_count, 1)
        if any(b < 0 for b in self.beads):
            raise PreconditionError("bead positions must be nonnegative")
        if any(a <= b for a, b in zip(self.beads, self.beads[1:])):
            raise PreconditionError(f"beads must be strictly decreasing: {self.beads}")

    @property
    def bead_count(self) -> int:
        return len(self.beads)

    def runners(self) -> list[list[int]]:
        """Level (position // l) of every bead, grouped by runner."""
        l = self.runner_count
        out: list[list[int]] = [[] for _ in range(l)]
        for b in sorted(self.beads):
            out[b % l].append(b // l)
        return out

    def to_partition(self) -> Partition:
        b = len(self.beads)
        return Partition(beta - (b - 1 - i) for i, beta in enumerate(self.beads))

    def slide(self) -> tuple["Abacus", int]:
        """Push every bead as far up its runner as it goes.

        Returns the settled abacus and the number of single-level moves,
        which is the weight.
        """
        l = self.runner_count
        moves = 0
        settled: list[int] = []
        for r, levels in enumerate(self.runners()):
            for target, level in enumerate(levels):
                moves += level - target
                settled.append(r + l * target)
        return Abacus(l, tuple(sorted(settled, reverse=True))), moves


def to_abacus(lam: PartitionLike, l: int, bead_count: int | None = None) -> Abacus:
    lam = as_partition(lam)
    _check_l(l, 1)
    b = len(lam) if bead_count is None else bead_count
    if b < len(lam):
        raise PreconditionError(f"bead_count {b} is less than the number of parts {len(lam)}")
    return Abacus(l, tuple(lam.part(i) + b - 1 - i for i in range(b)))


def l_core(lam: PartitionLike, l: int, bead_count: int | None = None) -> Partition:
    settled, _ = to_abacus(lam, l, bead_count).slide()
    return settled.to_partition()


def l_weight(lam: PartitionLike, l: int, bead_count: int | None = None) -> int:
    _, moves = to_abacus(lam, l, bead_count).slide()
    return moves


def count_hooks_divisible(lam: PartitionLike, l: int) -> int:
    _check_l(l, 1)
    return sum(1 for h in hook_lengths(lam) if h % l == 0)


@dataclass(frozen=True)
class LAdicExpansion:
    lambda0: Partition
    lambda1: Partition
    l: int

    def reconstruct(self) -> Partition:
        n = max(len(self.lambda0), len(self.lambda1))
        return Partition(self.lambda0.part(i) + self.l * self.lambda1.part(i) for i in range(n))


def l_adic_expansion(lam: PartitionLike, l: int) -> LAdicExpansion:
    """Split ``lam`` as ``lambda0 + l * lambda1`` with ``lambda0`` l-restricted.

    Works from the bottom row up: each row of ``lambda0`` is the row below
    it plus the residue of the gap mod l.
    """
    lam = as_partition(lam)
    _check_l(l, 2)
    k = len(lam)
    low = [0] * (k + 1)
    high = [0] * k
    for i in range(k - 1, -1, -1):
        low[i] = low[i + 1] + (lam[i] - low[i + 1]) % l
        high[i] = (lam[i] - low[i]) // l
    if any(a < b for a, b in zip(high, high[1:])):
        raise InternalError(f"l-adic quotient {high} of {lam} is not a partition")
    return LAdicExpansion(Partition(low[:k]), Partition(high), l)


def parabolic(a: int, s: int, l: int) -> Partition:
    """The partition ``(l^a, 1^s)``, l-parts first."""
    return Partition((l,) * a + (1,) * s)


def rho(lam: PartitionLike, l: int) -> Partition:
    exp = l_adic_expansion(lam, l)
    return parabolic(exp.lambda1.size, exp.lambda0.size, l)


def dominance_leq(lam: PartitionLike, mu: PartitionLike) -> bool:
    """True iff ``lam`` is dominated by ``mu``; partitions of different sizes are incomparable."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam.part(i)
        b += mu.part(i)
        if a > b:
            return False
    return True


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    return [Partition(p) for p in _partitions(n, n)]
