"""Acceptance gate: one test per criterion, each under its time budget.

A summary line per criterion is printed at the end of the pytest run.
"""

import io
import math
import time
from contextlib import contextmanager
from itertools import product
from pathlib import Path

import pytest

from hecke import (
    Bipartition,
    Partition,
    QSpec,
    blocks_of,
    count_syt,
    cyclotomic_factorization,
    enumerate_partitions,
    expand_factorization,
    f_B_invertible,
    f_B_invertible_exact,
    f_D_invertible,
    f_D_invertible_exact,
    graded_dim_specht,
    hook_lengths,
    l_adic_expansion,
    l_weight,
    perm_module_complexity,
    poincare_series,
    poincare_series_brute_force,
    primes_upto,
    specht_dim,
    specht_vertex_bounds,
    trivial_complexity,
    typeB_young_complexity,
    typeBD_trivial_complexity,
    young_module_complexity,
)
from hecke.cli import main

from oracles import brute_force_expansions, hooks_by_cells, strip_rim_hooks

GOLDEN = Path(__file__).parent / "golden"
NO_CONFIG = {"HECKE_CONFIG": "/nonexistent/hecke.conf"}


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def partitions_upto(n):
    for k in range(n + 1):
        yield from enumerate_partitions(k)


@pytest.mark.criterion(1, "abacus weight equals count of hooks divisible by l")
def test_weight_equals_divisible_hooks():
    with budget(10):
        for lam in partitions_upto(14):
            hooks = hooks_by_cells(lam)
            for l in range(1, 10):
                assert l_weight(lam, l) == sum(1 for h in hooks if h % l == 0), (lam, l)


@pytest.mark.criterion(2, "cyclotomic factorization and two-route dimension")
def test_factorization_and_dimension_routes():
    with budget(30):
        for lam in partitions_upto(10):
            assert expand_factorization(cyclotomic_factorization(lam)) == graded_dim_specht(lam)
        for lam in partitions_upto(12):
            n = lam.size
            by_hooks = math.factorial(n) // math.prod(hooks_by_cells(lam))
            by_cores = 1
            for p in primes_upto(n):
                power = p
                while power <= n:
                    by_cores *= p ** (strip_rim_hooks(lam, power)[0].size // power)
                    power *= p
            assert by_hooks == by_cores == specht_dim(lam).value, lam


@pytest.mark.criterion(3, "hook formula agrees with standard tableaux count")
def test_hook_formula_against_tableaux():
    with budget(5):
        for n in range(9):
            total = 0
            for lam in enumerate_partitions(n):
                d = graded_dim_specht(lam)(1)
                assert d == count_syt(lam), lam
                total += d * d
            assert total == math.factorial(n)


@pytest.mark.criterion(4, "l-adic expansion is the unique decomposition")
def test_l_adic_uniqueness():
    with budget(10):
        for l in (2, 3):
            for lam in partitions_upto(10):
                exp = l_adic_expansion(lam, l)
                assert brute_force_expansions(lam, l) == [(exp.lambda0, exp.lambda1)], (lam, l)


@pytest.mark.criterion(5, "every block of weight w realizes Young complexities 0..w")
def test_block_coverage():
    with budget(10):
        for l in (2, 3):
            for d in range(13):
                by_core = {}
                for lam in enumerate_partitions(d):
                    core, removed = strip_rim_hooks(lam, l)
                    by_core.setdefault(core, (removed, set()))[1].add(lam)
                blocks = blocks_of(d, l)
                assert {b.descriptor.core: (b.descriptor.weight, set(b.members)) for b in blocks} == by_core
                for b in blocks:
                    assert set(b.young_complexities) == set(range(b.descriptor.weight + 1))
        sets = sorted(sorted(set(b.young_complexities)) for b in blocks_of(5, 2))
        assert sets == [[0, 1], [0, 1, 2]]


@pytest.mark.criterion(6, "Specht vertex exact below l squared, plus spot values")
def test_vertex_bounds():
    with budget(5):
        for l in (2, 3):
            for lam in partitions_upto(l * l - 1):
                core, w = strip_rim_hooks(lam, l)
                vb = specht_vertex_bounds(lam, l)
                assert vb.exact and vb.vertex == Partition((l,) * w + (1,) * core.size), (lam, l)
        vb = specht_vertex_bounds((3, 1), 2)
        assert vb.exact and vb.vertex == Partition((2, 2))
        vb = specht_vertex_bounds((2, 2), 2)
        assert (vb.a_min, vb.a_max, vb.exact) == (1, 2, False)


@pytest.mark.criterion(7, "trivial module complexity by three routes")
def test_trivial_module_consistency():
    with budget(1):
        for l in range(2, 8):
            for d in range(31):
                routes = (trivial_complexity(d, l), perm_module_complexity((d,), l)[0], young_module_complexity((d,), l)[0])
                assert routes == (d // l,) * 3, (d, l)


@pytest.mark.criterion(8, "Poincare series against monomial enumeration")
def test_poincare_series():
    with budget(10):
        for l in (3, 4):
            for m in range(4):
                assert poincare_series((m * l,), l, 24) == poincare_series_brute_force(m, l, 24), (l, m)
        series = poincare_series((3,), 3, 8)
        assert {k for k, c in enumerate(series) if c} == {0, 3, 4, 7, 8}


@pytest.mark.criterion(9, "type B/D invertibility and trivial complexity")
def test_type_bd():
    with budget(5):
        for n in range(1, 21):
            for l in range(2, 13):
                assert f_D_invertible(n, l) == f_D_invertible_exact(n, l), (n, l)
                for sign, m in product((1, -1), range(l)):
                    Q = QSpec(sign, m)
                    ok = f_B_invertible(n, l, Q)
                    assert ok == f_B_invertible_exact(n, l, Q), (n, l, Q)
                    if ok:
                        c = typeB_young_complexity(Bipartition((n,), ()), l, Q)
                        assert c == n // l == typeBD_trivial_complexity(n, l, "B", Q)


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(""), stdout=out, stderr=err, env=NO_CONFIG)
    return code, out.getvalue()


@pytest.mark.criterion(10, "CLI goldens, determinism and exit codes")
def test_cli_contract():
    documented = [
        (["dimq", "2,1", "--l", "2", "--json"], "dimq_2_1.json"),
        (["blocks", "5", "--l", "2", "--table"], "blocks_5_l2.txt"),
        (["verify", "--max-n", "10", "--l", "2,3"], "verify_10_l2_3.txt"),
    ]
    for argv, golden in documented:
        expected = (GOLDEN / golden).read_text()
        for workers in ("1", "2", "1"):
            assert run_cli(argv + ["--workers", workers]) == (0, expected)
    assert run_cli(["core", "3,1"])[0] == 1
    assert run_cli(["vertex", "3,1", "--l", "4"])[0] == 2
    assert run_cli(["verify", "--max-n", "6", "--l", "2", "--inject-fault", "weight"])[0] == 3
