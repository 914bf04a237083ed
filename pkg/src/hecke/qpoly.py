"""Integer polynomials in t, cyclotomic polynomials and graded Specht dimensions."""

from __future__ import annotations

import math
import threading
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import DivisibilityError, InternalError, PreconditionError
from .partitions import PartitionLike, as_partition, hook_lengths, l_core, l_weight

__all__ = [
    "IntPolynomial",
    "CyclotomicFactorization",
    "SpechtDimension",
    "t_integer",
    "cyclotomic",
    "exact_divide",
    "graded_dim_specht",
    "cyclotomic_factorization",
    "expand_factorization",
    "specht_dim",
    "count_syt",
    "primes_upto",
]


class IntPolynomial:
    """Dense polynomial with Python-int coefficients, lowest degree first.

    Trailing zeros are trimmed, so the zero polynomial has ``coeffs == ()``
    and equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(int(x) for x in c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> "IntPolynomial":
        return _lift(other) - self

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise PreconditionError("negative exponent")
        result = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, den: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division over the integers.

        Raises DivisibilityError when a step would need a non-integer
        quotient coefficient.
        """
        if den.is_zero():
            raise PreconditionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dn, lead = den.degree, den.leading()
        quot = [0] * max(len(rem) - dn, 0)
        for k in range(len(rem) - 1, dn - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise DivisibilityError(f"{den} does not divide {self} over the integers")
            quot[k - dn] = q
            for j, d in enumerate(den.coeffs):
                rem[k - dn + j] -= q * d
        return IntPolynomial(quot), IntPolynomial(rem)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def _lift(x: "IntPolynomial | int") -> IntPolynomial:
    return x if isinstance(x, IntPolynomial) else IntPolynomial.constant(x)


def exact_divide(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    q, r = divmod(num, den)
    if not r.is_zero():
        raise DivisibilityError(f"({num}) / ({den}) leaves remainder {r}")
    return q


def t_integer(n: int) -> IntPolynomial:
    if n < 0:
        raise PreconditionError(f"t-integer needs n >= 0, got {n}")
    return IntPolynomial([1] * n)


def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


_cyclotomic_cache: dict[int, IntPolynomial] = {}
_cyclotomic_lock = threading.Lock()


def cyclotomic(l: int) -> IntPolynomial:
    """Phi_l(t) from the divisor product of (t^d - 1)^mu(l/d)."""
    if l < 1:
        raise PreconditionError(f"cyclotomic index must be >= 1, got {l}")
    cached = _cyclotomic_cache.get(l)
    if cached is not None:
        return cached
    num = IntPolynomial.constant(1)
    den = IntPolynomial.constant(1)
    for d in range(1, l + 1):
        if l % d:
            continue
        mu = _mobius(l // d)
        factor = IntPolynomial.monomial(d) - 1
        if mu == 1:
            num = num * factor
        elif mu == -1:
            den = den * factor
    poly = exact_divide(num, den)
    with _cyclotomic_lock:
        return _cyclotomic_cache.setdefault(l, poly)


def graded_dim_specht(lam: PartitionLike) -> IntPolynomial:
    lam = as_partition(lam)
    top = Counter(range(1, lam.size + 1))
    bottom = Counter(hook_lengths(lam))
    common = top & bottom
    top -= common
    bottom -= common
    num = IntPolynomial.constant(1)
    for k, mult in sorted(top.items()):
        num = num * t_integer(k) ** mult
    den = IntPolynomial.constant(1)
    for k, mult in sorted(bottom.items()):
        den = den * t_integer(k) ** mult
    try:
        return exact_divide(num, den)
    except DivisibilityError as exc:
        raise InternalError(f"graded dimension of {lam} is not a polynomial: {exc}") from exc


@dataclass(frozen=True)
class CyclotomicFactorization:
    """Exponent of each Phi_l, l >= 2; zero exponents are never stored."""

    exponents: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {int(k): int(v) for k, v in sorted(self.exponents.items()) if v}
        if any(k < 2 or v < 0 for k, v in clean.items()):
            raise PreconditionError(f"bad factorization {clean}")
        object.__setattr__(self, "exponents", clean)

    def __hash__(self) -> int:
        return hash(tuple(self.exponents.items()))

    def to_json(self) -> dict[str, int]:
        return {str(k): v for k, v in self.exponents.items()}

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return " * ".join(
            f"Phi_{k}" if v == 1 else f"Phi_{k}^{v}" for k, v in self.exponents.items()
        )


def cyclotomic_factorization(lam: PartitionLike) -> CyclotomicFactorization:
    lam = as_partition(lam)
    n = lam.size
    return CyclotomicFactorization({l: n // l - l_weight(lam, l) for l in range(2, n + 1)})


def expand_factorization(f: CyclotomicFactorization) -> IntPolynomial:
    out = IntPolynomial.constant(1)
    for l, e in f.exponents.items():
        out = out * cyclotomic(l) ** e
    return out


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [p for p in range(n + 1) if sieve[p]]


@dataclass(frozen=True)
class SpechtDimension:
    value: int
    prime_exponents: Mapping[int, int]

    def __str__(self) -> str:
        if not self.prime_exponents:
            return str(self.value)
        fac = " * ".join(
            str(p) if e == 1 else f"{p}^{e}" for p, e in self.prime_exponents.items()
        )
        return f"{self.value} = {fac}"


def specht_dim(lam: PartitionLike) -> SpechtDimension:
    """Dimension by the hook formula, cross-checked against the core/weight product."""
    lam = as_partition(lam)
    n = lam.size
    value = math.factorial(n) // math.prod(hook_lengths(lam))
    exponents: dict[int, int] = {}
    for p in primes_upto(n):
        e, q = 0, p
        while q <= n:
            e += l_core(lam, q).size // q
            q *= p
        if e:
            exponents[p] = e
    factored = math.prod(p**e for p, e in exponents.items())
    if factored != value:
        raise InternalError(f"dim S^{lam}: hook formula gives {value}, core product gives {factored}")
    return SpechtDimension(value, exponents)


def count_syt(lam: PartitionLike) -> int:
    """Count standard Young tableaux by placing 1..n one cell at a time."""
    shape = as_partition(lam).parts
    filled = [0] * len(shape)
    remaining = sum(shape)

    def place(left: int) -> int:
        if left == 0:
            return 1
        total = 0
        for i, row in enumerate(shape):
            if filled[i] < row and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                total += place(left - 1)
                filled[i] -= 1
        return total

    return place(remaining)
