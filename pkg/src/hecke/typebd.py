"""Types B/C and D through the Morita equivalences with products of type A algebras.

Parameters are restricted to ``Q = ±q^m`` with ``q`` a primitive l-th root
of unity. Invertibility of the Morita polynomials is decided by a closed
residue criterion and, independently, by exact arithmetic in
``Z[q]/Phi_l(q)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError, PreconditionError
from .invariants import SupportDatum, young_module_complexity
from .partitions import Partition, PartitionLike, as_partition, parse_parts
from .qpoly import IntPolynomial, cyclotomic

__all__ = [
    "Bipartition",
    "QSpec",
    "f_D_invertible",
    "f_D_invertible_exact",
    "f_B_invertible",
    "f_B_invertible_exact",
    "f_B_vanishing_index",
    "morita_component",
    "typeB_young_complexity",
    "typeB_support",
    "typeBD_trivial_complexity",
    "typeD_clifford_complexity",
]


@dataclass(frozen=True)
class Bipartition:
    left: Partition
    right: Partition

    def __init__(self, left: PartitionLike = (), right: PartitionLike = ()) -> None:
        object.__setattr__(self, "left", as_partition(left))
        object.__setattr__(self, "right", as_partition(right))

    @property
    def n(self) -> int:
        return self.left.size + self.right.size

    @classmethod
    def from_string(cls, text: str) -> "Bipartition":
        if text.count("|") != 1:
            raise ParseError(f"bipartition needs exactly one '|': {text!r}")
        left, right = text.split("|")
        return cls(Partition(parse_parts(left)), Partition(parse_parts(right)))

    def __str__(self) -> str:
        return f"{self.left}|{self.right}"


_QSPEC = re.compile(r"^\s*([+-]?)\s*(?:q(?:\^\s*(-?\d+))?|(1))\s*$")


@dataclass(frozen=True)
class QSpec:
    """The parameter ``Q = sign * q^power``."""

    sign: int
    power: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise PreconditionError(f"sign must be +1 or -1, got {self.sign}")

    @classmethod
    def parse(cls, text: str) -> "QSpec":
        """Accepts ``+q^2``, ``-q^0``, ``q``, ``-q``, ``+1``, ``-1``."""
        m = _QSPEC.match(text)
        if m is None:
            raise ParseError(f"bad Q literal {text!r}; expected e.g. '+q^2' or '-q^0'")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(3):
            power = 0
        else:
            power = int(m.group(2)) if m.group(2) is not None else 1
        return cls(sign, power)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}q^{self.power}"


def _require(n: int, l: int) -> None:
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if l < 2:
        raise PreconditionError(f"l must be >= 2, got {l}")


def _first_in_range(residue: int, lo: int, hi: int, l: int) -> Optional[int]:
    """Smallest i in [lo, hi] with i = residue (mod l), if any."""
    i = lo + (residue - lo) % l
    return i if i <= hi else None


def f_D_invertible(n: int, l: int) -> bool:
    """Whether 2 * prod_{i=1}^{n-1} (1 + q^i) is nonzero."""
    _require(n, l)
    return l % 2 == 1 or n - 1 < l // 2


def f_B_vanishing_index(n: int, l: int, Q: QSpec) -> Optional[int]:
    """Smallest i in [1-n, n-1] with Q + q^i = 0, or None."""
    _require(n, l)
    if Q.sign < 0:
        return _first_in_range(Q.power % l, 1 - n, n - 1, l)
    if l % 2:
        return None
    return _first_in_range((Q.power + l // 2) % l, 1 - n, n - 1, l)


def f_B_invertible(n: int, l: int, Q: QSpec) -> bool:
    """Whether prod_{i=1-n}^{n-1} (Q + q^i) is nonzero."""
    return f_B_vanishing_index(n, l, Q) is None


def _power_mod(i: int, l: int) -> IntPolynomial:
    return IntPolynomial.monomial(i % l)


def _reduce(p: IntPolynomial, l: int) -> IntPolynomial:
    return divmod(p, cyclotomic(l))[1]


def f_D_invertible_exact(n: int, l: int) -> bool:
    _require(n, l)
    acc = IntPolynomial.constant(2)
    for i in range(1, n):
        acc = _reduce(acc * (1 + _power_mod(i, l)), l)
    return not acc.is_zero()


def f_B_invertible_exact(n: int, l: int, Q: QSpec) -> bool:
    _require(n, l)
    q_term = _power_mod(Q.power, l) * Q.sign
    acc = IntPolynomial.constant(1)
    for i in range(1 - n, n):
        acc = _reduce(acc * (q_term + _power_mod(i, l)), l)
    return not acc.is_zero()


def morita_component(b: Bipartition) -> int:
    """Index j of the factor H_q(j) (x) H_q(n-j) that ``b`` lives in."""
    return b.left.size


def _check_B(n: int, l: int, Q: QSpec) -> None:
    i = f_B_vanishing_index(n, l, Q)
    if i is not None:
        raise PreconditionError(
            f"f_{n}(Q,q) is not invertible for l={l}, Q={Q}: factor Q + q^{i} vanishes"
        )


def typeB_young_complexity(b: Bipartition, l: int, Q: QSpec) -> int:
    _check_B(b.n, l, Q)
    return young_module_complexity(b.left, l)[0] + young_module_complexity(b.right, l)[0]


def typeB_support(b: Bipartition, l: int, Q: QSpec) -> SupportDatum:
    return SupportDatum.of(b.n, l, typeB_young_complexity(b, l, Q))


def typeBD_trivial_complexity(n: int, l: int, kind: str, Q: Optional[QSpec] = None) -> int:
    """floor(n/l): the complexity of the trivial module and a bound for all modules."""
    kind = kind.upper()
    if kind == "B":
        if Q is None:
            raise PreconditionError("type B needs a Q parameter")
        _check_B(n, l, Q)
    elif kind == "D":
        if not f_D_invertible(n, l):
            raise PreconditionError(
                f"f_{n}(q) is not invertible for l={l}: factor 1 + q^{l // 2} vanishes"
            )
    else:
        raise PreconditionError(f"type must be B or D, got {kind!r}")
    return n // l


def typeD_clifford_complexity(left: PartitionLike, right: PartitionLike, l: int) -> int:
    left, right = as_partition(left), as_partition(right)
    if left.size != right.size:
        raise PreconditionError(f"outer tensor over H_q((m,m)) needs |left| == |right|, got {left.size}, {right.size}")
    return young_module_complexity(left, l)[0] + young_module_complexity(right, l)[0]
