"""Oracle pairings run over every partition up to a size bound.

Each rule compares a closed-form computation against an independent one
(enumeration, brute force, exact ring arithmetic). Rules run in increasing
size order, so the first failure recorded for a rule is a minimal
counterexample.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from .errors import HeckeError
from .invariants import (
    blocks_of,
    block_complexity_bound,
    has_complexity_one,
    is_prime,
    perm_module_complexity,
    poincare_series,
    poincare_series_brute_force,
    specht_vertex_bounds,
    trivial_complexity,
    unclamped_vertex_lower_bound,
    young_module_complexity,
)
from .partitions import (
    Partition,
    count_hooks_divisible,
    enumerate_partitions,
    is_l_restricted,
    l_adic_expansion,
    l_core,
    l_weight,
    parabolic,
)
from .qpoly import (
    count_syt,
    cyclotomic_factorization,
    expand_factorization,
    graded_dim_specht,
    specht_dim,
)
from .typebd import (
    Bipartition,
    QSpec,
    f_B_invertible,
    f_B_invertible_exact,
    f_D_invertible,
    f_D_invertible_exact,
    typeB_young_complexity,
    typeBD_trivial_complexity,
)

__all__ = ["Failure", "RuleResult", "Report", "RULES", "verify_suite", "KNOWN_FAULTS"]

SYT_LIMIT = 8
POINCARE_MAX_M = 3
POINCARE_DEGREE = 24
KNOWN_FAULTS = frozenset({"weight"})

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Failure:
    rule: str
    input: str
    expected: str
    got: str


@dataclass
class RuleResult:
    rule: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, inp: str, expected: object, got: object) -> None:
        self.checked += 1
        if expected != got:
            self.failures.append(Failure(self.rule, inp, str(expected), str(got)))

    def guard(self, inp: str, fn: Callable[[], object]) -> None:
        """Count a check that passes unless ``fn`` raises a package error."""
        self.checked += 1
        try:
            fn()
        except HeckeError as exc:
            self.failures.append(Failure(self.rule, inp, "no error", f"{type(exc).__name__}: {exc}"))

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict[str, object]:
        first = self.failures[0] if self.failures else None
        return {
            "rule": self.rule,
            "status": "PASS" if self.passed else "FAIL",
            "checks": self.checked,
            "failures": len(self.failures),
            "counterexample": "" if first is None else f"{first.input}: expected {first.expected}, got {first.got}",
        }


@dataclass
class Report:
    records: list[dict[str, object]] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 3 if self.failures else 0


RuleFn = Callable[[int, Sequence[int], frozenset[str]], RuleResult]
RULES: dict[str, RuleFn] = {}


def rule(name: str) -> Callable[[Callable[..., None]], RuleFn]:
    def register(fn: Callable[..., None]) -> RuleFn:
        def run(max_n: int, ls: Sequence[int], faults: frozenset[str]) -> RuleResult:
            res = RuleResult(name)
            fn(res, max_n, ls, faults)
            return res

        RULES[name] = run
        return run

    return register


def _partitions_upto(max_n: int, start: int = 0) -> Iterable[Partition]:
    for n in range(start, max_n + 1):
        yield from enumerate_partitions(n)


def _lab(lam: Partition, l: int | None = None) -> str:
    text = f"({lam})"
    return text if l is None else f"{text} l={l}"


@rule("weight-equals-divisible-hooks")
def rule_weight_hooks(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    bump = 1 if "weight" in faults else 0
    for lam in _partitions_upto(max_n):
        for l in ls:
            res.check(_lab(lam, l), count_hooks_divisible(lam, l), l_weight(lam, l) + bump)


@rule("core-weight-size")
def rule_core_weight(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for lam in _partitions_upto(max_n):
        for l in ls:
            core, w = l_core(lam, l), l_weight(lam, l)
            res.check(_lab(lam, l), lam.size, core.size + l * w)
            res.check(_lab(lam, l) + " core weight", 0, l_weight(core, l))
            res.check(_lab(lam, l) + " idempotent", core, l_core(core, l))


@rule("graded-dim-factorization")
def rule_graded_dim(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for lam in _partitions_upto(max_n):
        poly = graded_dim_specht(lam)
        res.check(_lab(lam), poly, expand_factorization(cyclotomic_factorization(lam)))
        res.check(_lab(lam) + " nonnegative", True, all(c >= 0 for c in poly.coeffs))


@rule("specht-dim-two-routes")
def rule_specht_routes(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for lam in _partitions_upto(max_n):
        res.guard(_lab(lam), lambda lam=lam: specht_dim(lam))
        res.check(_lab(lam) + " at t=1", specht_dim(lam).value, graded_dim_specht(lam)(1))


@rule("hook-formula-syt")
def rule_syt(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for n in range(min(max_n, SYT_LIMIT) + 1):
        total = 0
        for lam in enumerate_partitions(n):
            dim = specht_dim(lam).value
            total += dim * dim
            res.check(_lab(lam), count_syt(lam), dim)
        res.check(f"sum of squares n={n}", math.factorial(n), total)


def _brute_force_adic(lam: Partition, l: int) -> list[tuple[Partition, Partition]]:
    found = []
    for k in range(lam.size // l + 1):
        for high in enumerate_partitions(k):
            for low in enumerate_partitions(lam.size - l * k):
                if not is_l_restricted(low, l):
                    continue
                rows = max(len(low), len(high), len(lam))
                if all(low.part(i) + l * high.part(i) == lam.part(i) for i in range(rows)):
                    found.append((low, high))
    return found


@rule("ladic-uniqueness")
def rule_adic(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for lam in _partitions_upto(max_n):
        for l in ls:
            if l < 2:
                continue
            exp = l_adic_expansion(lam, l)
            res.check(_lab(lam, l), [(exp.lambda0, exp.lambda1)], _brute_force_adic(lam, l))


@rule("block-coverage")
def rule_blocks(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for d in range(max_n + 1):
        for l in ls:
            if l < 2:
                continue
            res.guard(f"d={d} l={l}", lambda d=d, l=l: blocks_of(d, l))


@rule("young-bounded-by-weight")
def rule_young_bound(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for lam in _partitions_upto(max_n):
        for l in ls:
            if l < 2:
                continue
            c = young_module_complexity(lam, l)[0]
            res.check(_lab(lam, l), True, c <= block_complexity_bound(lam, l))
            res.guard(_lab(lam, l) + " complexity one", lambda lam=lam, l=l: has_complexity_one(lam, l))


@rule("vertex-bounds")
def rule_vertex(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for l in ls:
        if not is_prime(l):
            continue
        for lam in _partitions_upto(min(max_n, l * l - 1)):
            w = l_weight(lam, l)
            vb = specht_vertex_bounds(lam, l)
            res.check(_lab(lam, l), (True, parabolic(w, l_core(lam, l).size, l)), (vb.exact, vb.vertex))
        # the lower bound is clamped at 0; record every partition where that bites
        for lam in _partitions_upto(max_n, start=l * l):
            raw = unclamped_vertex_lower_bound(lam, l)
            vb = specht_vertex_bounds(lam, l)
            res.check(_lab(lam, l) + " clamp", (max(0, raw), l_weight(lam, l)), (vb.a_min, vb.a_max))
            if raw < 0:
                res.notes.append(f"{_lab(lam, l)}: lower bound {raw} clamped to 0")


@rule("trivial-module-consistency")
def rule_trivial(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for d in range(max_n + 1):
        for l in ls:
            if l < 2:
                continue
            routes = (
                trivial_complexity(d, l),
                perm_module_complexity((d,), l)[0],
                young_module_complexity((d,), l)[0],
            )
            res.check(f"d={d} l={l}", (d // l,) * 3, routes)


@rule("poincare-brute-force")
def rule_poincare(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for l in ls:
        if l < 2:
            continue
        for m in range(min(POINCARE_MAX_M, max_n // l) + 1):
            res.check(
                f"m={m} l={l}",
                poincare_series_brute_force(m, l, POINCARE_DEGREE),
                poincare_series((m * l,) if m else (), l, POINCARE_DEGREE),
            )


@rule("typebd-invertibility")
def rule_typebd(res: RuleResult, max_n: int, ls: Sequence[int], faults: frozenset[str]) -> None:
    for n in range(1, max_n + 1):
        for l in ls:
            if l < 2:
                continue
            res.check(f"D n={n} l={l}", f_D_invertible_exact(n, l), f_D_invertible(n, l))
            for sign, m in product((1, -1), range(l)):
                Q = QSpec(sign, m)
                ok = f_B_invertible(n, l, Q)
                res.check(f"B n={n} l={l} Q={Q}", f_B_invertible_exact(n, l, Q), ok)
                if ok:
                    res.check(
                        f"B n={n} l={l} Q={Q} trivial",
                        typeBD_trivial_complexity(n, l, "B", Q),
                        typeB_young_complexity(Bipartition((n,), ()), l, Q),
                    )


def _run_rule(args: tuple[str, int, tuple[int, ...], frozenset[str]]) -> RuleResult:
    name, max_n, ls, faults = args
    return RULES[name](max_n, ls, faults)


def verify_suite(
    max_n: int,
    ls: Sequence[int],
    faults: Iterable[str] = (),
    workers: int = 1,
) -> Report:
    """Run every rule; summary records are sorted by rule name."""
    faults = frozenset(faults)
    unknown = faults - KNOWN_FAULTS
    if unknown:
        raise ValueError(f"unknown fault(s): {sorted(unknown)}")
    tasks = [(name, max_n, tuple(ls), faults) for name in sorted(RULES)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_rule, tasks))
    else:
        results = [_run_rule(t) for t in tasks]
    report = Report()
    for r in results:
        report.records.append(r.summary())
        report.failures.extend(r.failures)
        for note in r.notes:
            log.info("%s: %s", r.rule, note)
        report.notes.extend(r.notes)
    return report
