"""Complexities, support data, blocks and vertices for Hecke algebras of type A.

A support variety is carried around only as its canonical l-parabolic
``(l^a, 1^s)`` together with its dimension ``a``; complexity and support
dimension coincide, so every function here returns both views of the same
integer.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Optional

from .errors import InternalError, PreconditionError, VerificationError
from .partitions import (
    CompositionLike,
    Partition,
    PartitionLike,
    as_composition,
    as_partition,
    enumerate_partitions,
    is_l_restricted,
    l_adic_expansion,
    l_core,
    l_weight,
    parabolic,
)

__all__ = [
    "SupportDatum",
    "BlockDescriptor",
    "BlockSummary",
    "VertexBounds",
    "PoincareSpec",
    "trivial_complexity",
    "perm_module_complexity",
    "young_module_complexity",
    "is_young_projective",
    "has_complexity_one",
    "block_descriptor",
    "same_block",
    "blocks_of",
    "block_complexity_bound",
    "block_support",
    "specht_relative_vertex_upper",
    "specht_vertex_bounds",
    "unclamped_vertex_lower_bound",
    "poincare_spec",
    "poincare_series",
    "poincare_series_brute_force",
    "support_dim",
    "is_prime",
]


def _require_l(l: int) -> None:
    if isinstance(l, bool) or not isinstance(l, int) or l < 2:
        raise PreconditionError(f"l must be an integer >= 2, got {l!r}")


@dataclass(frozen=True)
class SupportDatum:
    d: int
    l: int
    a: int
    s: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.s < 0 or self.d != self.a * self.l + self.s:
            raise InternalError(f"inconsistent support datum {self}")

    @classmethod
    def of(cls, d: int, l: int, a: int) -> "SupportDatum":
        return cls(d, l, a, d - a * l)

    @property
    def dim(self) -> int:
        return self.a

    @property
    def parabolic(self) -> Partition:
        return parabolic(self.a, self.s, self.l)

    def to_json(self) -> dict[str, int]:
        return {"d": self.d, "l": self.l, "a": self.a, "s": self.s, "dim": self.dim}


@dataclass(frozen=True)
class BlockDescriptor:
    core: Partition
    weight: int
    rho_max: Partition

    def to_json(self) -> dict[str, object]:
        return {
            "core": list(self.core.parts),
            "weight": self.weight,
            "rho_max": list(self.rho_max.parts),
        }


@dataclass(frozen=True)
class BlockSummary:
    descriptor: BlockDescriptor
    members: tuple[Partition, ...]
    young_complexities: tuple[int, ...]


@dataclass(frozen=True)
class VertexBounds:
    a_min: int
    a_max: int
    exact: bool
    vertex: Optional[Partition] = None

    def to_json(self) -> dict[str, object]:
        out: dict[str, object] = {"a_min": self.a_min, "a_max": self.a_max, "exact": self.exact}
        if self.vertex is not None:
            out["vertex"] = list(self.vertex.parts)
        return out


@dataclass(frozen=True)
class PoincareSpec:
    l: int
    even_generator_degree: int
    odd_generator_degree: int
    multiplicities: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(self.multiplicities)

    def to_json(self) -> dict[str, object]:
        return {
            "l": self.l,
            "even_generator_degree": self.even_generator_degree,
            "odd_generator_degree": self.odd_generator_degree,
            "m": self.m,
            "multiplicities": list(self.multiplicities),
        }


def trivial_complexity(d: int, l: int) -> int:
    """Complexity of the trivial module, i.e. the Krull dimension floor(d/l)."""
    _require_l(l)
    if d < 0:
        raise PreconditionError(f"d must be nonnegative, got {d}")
    return d // l


def support_dim(lam: CompositionLike, l: int) -> int:
    _require_l(l)
    return sum(p // l for p in as_composition(lam))


def perm_module_complexity(lam: CompositionLike, l: int) -> tuple[int, SupportDatum]:
    comp = as_composition(lam)
    c = support_dim(comp, l)
    datum = SupportDatum.of(comp.size, l, c)
    if datum.dim != c:
        raise InternalError(f"complexity {c} differs from support dimension {datum.dim}")
    return c, datum


def young_module_complexity(lam: PartitionLike, l: int) -> tuple[int, Partition, SupportDatum]:
    lam = as_partition(lam)
    exp = l_adic_expansion(lam, l)
    c = exp.lambda1.size
    datum = SupportDatum.of(lam.size, l, c)
    return c, datum.parabolic, datum


def is_young_projective(lam: PartitionLike, l: int) -> bool:
    _require_l(l)
    return is_l_restricted(lam, l)


def _complexity_one_by_shape(lam: Partition, l: int) -> bool:
    if not lam.parts or lam[0] < l:
        return False
    mu = list(lam.parts)
    mu[0] -= l
    if any(a < b for a, b in zip(mu, mu[1:])):
        return False
    return is_l_restricted(Partition(mu), l)


def has_complexity_one(lam: PartitionLike, l: int) -> bool:
    """Young module of complexity exactly one, decided two ways that must agree."""
    lam = as_partition(lam)
    by_expansion = l_adic_expansion(lam, l).lambda1.size == 1
    by_shape = _complexity_one_by_shape(lam, l)
    if by_expansion != by_shape:
        raise InternalError(
            f"complexity-one tests disagree for {lam}, l={l}: expansion {by_expansion}, shape {by_shape}"
        )
    return by_expansion


def block_descriptor(lam: PartitionLike, l: int) -> BlockDescriptor:
    lam = as_partition(lam)
    _require_l(l)
    core = l_core(lam, l)
    w = l_weight(lam, l)
    return BlockDescriptor(core, w, parabolic(w, lam.size - l * w, l))


def same_block(lam: PartitionLike, mu: PartitionLike, l: int) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise PreconditionError(f"partitions of different sizes: {lam.size} vs {mu.size}")
    _require_l(l)
    return l_core(lam, l) == l_core(mu, l)


def blocks_of(d: int, l: int) -> list[BlockSummary]:
    """Group the partitions of ``d`` into blocks.

    Blocks come out with cores in reverse-lexicographic order and members
    in enumeration order. Raises VerificationError if some block of weight
    w fails to realise every Young complexity 0..w.
    """
    _require_l(l)
    grouped: dict[Partition, list[Partition]] = defaultdict(list)
    for lam in enumerate_partitions(d):
        grouped[l_core(lam, l)].append(lam)
    out = []
    for core in sorted(grouped, reverse=True):
        members = tuple(grouped[core])
        desc = block_descriptor(members[0], l)
        cs = tuple(young_module_complexity(m, l)[0] for m in members)
        if set(cs) != set(range(desc.weight + 1)):
            raise VerificationError(
                f"block with core {core} and weight {desc.weight} has Young complexities {sorted(set(cs))}"
            )
        out.append(BlockSummary(desc, members, cs))
    return out


def block_complexity_bound(lam: PartitionLike, l: int) -> int:
    _require_l(l)
    return l_weight(lam, l)


def block_support(lam: PartitionLike, l: int) -> SupportDatum:
    """Support datum of the whole block containing ``lam``: a = weight."""
    lam = as_partition(lam)
    return SupportDatum.of(lam.size, l, block_complexity_bound(lam, l))


def specht_relative_vertex_upper(lam: PartitionLike, l: int) -> Partition:
    lam = as_partition(lam)
    _require_l(l)
    return parabolic(l_weight(lam, l), l_core(lam, l).size, l)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def unclamped_vertex_lower_bound(lam: PartitionLike, l: int) -> int:
    """The shape lower bound before clamping at 0; it can be negative."""
    lam = as_partition(lam)
    if not is_prime(l):
        raise PreconditionError(f"vertex bounds need a prime l, got {l}")
    n = lam.size
    # powers beyond n leave the core equal to lam and contribute nothing;
    # for n < l^2 the sum is empty and the vertex is determined
    correction = 0
    power = l * l
    while power <= n:
        correction += l_core(lam, power).size // power
        power *= l
    return l_weight(lam, l) - correction


def specht_vertex_bounds(lam: PartitionLike, l: int) -> VertexBounds:
    lam = as_partition(lam)
    a_min = max(0, unclamped_vertex_lower_bound(lam, l))
    a_max = l_weight(lam, l)
    if a_min == a_max:
        return VertexBounds(a_max, a_max, True, parabolic(a_max, lam.size - l * a_max, l))
    return VertexBounds(a_min, a_max, False)


def poincare_spec(lam: CompositionLike, l: int) -> PoincareSpec:
    _require_l(l)
    comp = as_composition(lam)
    return PoincareSpec(l, 2 * l - 2, 2 * l - 3, tuple(p // l for p in comp))


def _generator_degrees(l: int, bound: int) -> tuple[list[int], list[int]]:
    """Degrees of the even and odd monomials of R_l up to ``bound``."""
    if l == 2:
        return list(range(bound + 1)), []
    step = 2 * l - 2
    even = list(range(0, bound + 1, step))
    odd = list(range(2 * l - 3, bound + 1, step))
    return even, odd


def _symmetric_power_series(m: int, l: int, bound: int) -> list[int]:
    # dp[k][deg]: number of admissible k-element monomial multisets of degree deg
    even, odd = _generator_degrees(l, bound)
    dp = [[0] * (bound + 1) for _ in range(m + 1)]
    dp[0][0] = 1
    for e in even:
        for k in range(1, m + 1):
            row, prev = dp[k], dp[k - 1]
            for deg in range(e, bound + 1):
                row[deg] += prev[deg - e]
    for o in odd:
        for k in range(m, 0, -1):
            row, prev = dp[k], dp[k - 1]
            for deg in range(bound, o - 1, -1):
                row[deg] += prev[deg - o]
    return dp[m]


def _truncated_product(a: list[int], b: list[int], bound: int) -> list[int]:
    out = [0] * (bound + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(bound + 1 - i):
                out[i + j] += x * b[j]
    return out


def poincare_series(lam: CompositionLike, l: int, bound: int) -> list[int]:
    """Hilbert series of the invariant cohomology ring, coefficients 0..bound."""
    if bound < 0:
        raise PreconditionError(f"degree bound must be nonnegative, got {bound}")
    spec = poincare_spec(lam, l)
    series = [1] + [0] * bound
    for m in spec.multiplicities:
        if m:
            series = _truncated_product(series, _symmetric_power_series(m, l, bound), bound)
    return series


def poincare_series_brute_force(m: int, l: int, bound: int) -> list[int]:
    """Count monomial multisets directly; odd monomials may not repeat."""
    _require_l(l)
    even, odd = _generator_degrees(l, bound)
    counts = [0] * (bound + 1)
    for k in range(m + 1):
        for odds in combinations(odd, k):
            base = sum(odds)
            if base > bound:
                continue
            for evens in combinations_with_replacement(even, m - k):
                total = base + sum(evens)
                if total <= bound:
                    counts[total] += 1
    return counts
