import math

import pytest
from hypothesis import given

from hecke import (
    InternalError,
    Partition,
    PreconditionError,
    SupportDatum,
    block_complexity_bound,
    block_descriptor,
    block_support,
    blocks_of,
    enumerate_partitions,
    has_complexity_one,
    is_l_restricted,
    is_young_projective,
    l_weight,
    perm_module_complexity,
    poincare_series,
    poincare_series_brute_force,
    poincare_spec,
    same_block,
    specht_relative_vertex_upper,
    specht_vertex_bounds,
    support_dim,
    trivial_complexity,
    unclamped_vertex_lower_bound,
    young_module_complexity,
)

from strategies import l_at_least_2, partitions


def test_support_datum_invariants():
    datum = SupportDatum.of(7, 3, 2)
    assert (datum.s, datum.dim) == (1, 2)
    assert datum.parabolic == Partition((3, 3, 1))
    assert datum.to_json() == {"d": 7, "l": 3, "a": 2, "s": 1, "dim": 2}
    with pytest.raises(InternalError):
        SupportDatum(7, 3, 2, 2)


@pytest.mark.parametrize("d, l, c", [(6, 3, 2), (2, 3, 0), (5, 2, 2), (0, 2, 0)])
def test_trivial_complexity(d, l, c):
    assert trivial_complexity(d, l) == c


def test_trivial_complexity_rejects_l_one():
    with pytest.raises(PreconditionError):
        trivial_complexity(4, 1)


@pytest.mark.parametrize(
    "comp, l, c", [((4, 2, 1), 2, 3), ((1, 1, 1, 1), 3, 0), ((7,), 3, 2), ((1, 5, 2), 2, 3)]
)
def test_perm_module_complexity(comp, l, c):
    got, datum = perm_module_complexity(comp, l)
    assert got == c == datum.dim == support_dim(comp, l)
    assert datum.d == sum(comp) and datum.s == sum(comp) - l * c


@pytest.mark.parametrize("l", range(2, 8))
def test_three_routes_for_trivial_module(l):
    for d in range(31):
        expected = d // l
        assert trivial_complexity(d, l) == expected
        assert perm_module_complexity((d,), l)[0] == expected
        assert young_module_complexity((d,), l)[0] == expected


@pytest.mark.parametrize(
    "lam, l, c, rho_parts",
    [((4, 2, 1), 2, 1, (2, 1, 1, 1, 1, 1)), ((5,), 2, 2, (2, 2, 1)), ((2, 2, 1), 2, 0, (1, 1, 1, 1, 1))],
)
def test_young_module_complexity(lam, l, c, rho_parts):
    got, r, datum = young_module_complexity(lam, l)
    assert got == c == datum.dim
    assert r == Partition(rho_parts) == datum.parabolic


@given(partitions(max_size=12), l_at_least_2)
def test_young_projective_iff_restricted_iff_complexity_zero(lam, l):
    c = young_module_complexity(lam, l)[0]
    assert is_young_projective(lam, l) == is_l_restricted(lam, l) == (c == 0)


@pytest.mark.parametrize(
    "lam, l, expected",
    [((2, 2, 1), 2, True), ((3, 1), 2, False), ((), 2, True)],
)
def test_is_young_projective(lam, l, expected):
    assert is_young_projective(lam, l) is expected


@pytest.mark.parametrize(
    "lam, l, expected",
    [((3, 1), 2, True), ((5,), 2, False), ((2, 2, 1), 2, False), ((4, 2, 1), 2, True), ((3,), 3, True)],
)
def test_has_complexity_one(lam, l, expected):
    assert has_complexity_one(lam, l) is expected


@given(partitions(max_size=12), l_at_least_2)
def test_complexity_one_routes_agree(lam, l):
    # raises InternalError on disagreement
    assert has_complexity_one(lam, l) == (young_module_complexity(lam, l)[0] == 1)


@pytest.mark.parametrize(
    "lam, l, core, w, rho_max",
    [
        ((4, 1), 2, (2, 1), 1, (2, 1, 1, 1)),
        ((2, 1), 2, (2, 1), 0, (1, 1, 1)),
        ((5,), 2, (1,), 2, (2, 2, 1)),
    ],
)
def test_block_descriptor(lam, l, core, w, rho_max):
    desc = block_descriptor(lam, l)
    assert desc.core == Partition(core)
    assert desc.weight == w
    assert desc.rho_max == Partition(rho_max)
    assert desc.to_json() == {"core": list(core), "weight": w, "rho_max": list(rho_max)}


@given(partitions(max_size=12), l_at_least_2)
def test_block_descriptor_invariants(lam, l):
    desc = block_descriptor(lam, l)
    assert desc.core.size + l * desc.weight == lam.size
    assert (desc.weight == 0) == (desc.rho_max == Partition((1,) * lam.size))


@pytest.mark.parametrize(
    "lam, mu, l, expected",
    [((4, 1), (2, 1, 1, 1), 2, True), ((4, 1), (3, 2), 2, False), ((3, 2), (3, 2), 2, True)],
)
def test_same_block(lam, mu, l, expected):
    assert same_block(lam, mu, l) is expected


def test_same_block_size_mismatch():
    with pytest.raises(PreconditionError):
        same_block((2,), (3,), 2)


@pytest.mark.parametrize("d, l", [(6, 2), (7, 3)])
def test_same_block_is_equivalence(d, l):
    ps = enumerate_partitions(d)
    for a in ps:
        assert same_block(a, a, l)
        for b in ps:
            assert same_block(a, b, l) == same_block(b, a, l)
            if same_block(a, b, l):
                assert all(same_block(a, c, l) == same_block(b, c, l) for c in ps)


def test_blocks_of_five_l_two():
    blocks = blocks_of(5, 2)
    assert [b.descriptor.core for b in blocks] == [Partition((2, 1)), Partition((1,))]
    assert [b.descriptor.weight for b in blocks] == [1, 2]
    assert [b.members for b in blocks] == [
        (Partition((4, 1)), Partition((2, 1, 1, 1))),
        tuple(Partition(p) for p in [(5,), (3, 2), (3, 1, 1), (2, 2, 1), (1, 1, 1, 1, 1)]),
    ]
    assert sorted(blocks[0].young_complexities) == [0, 1]
    assert sorted(blocks[1].young_complexities) == [0, 0, 1, 2, 2]


def test_blocks_of_three_l_two():
    blocks = {b.descriptor.core: b for b in blocks_of(3, 2)}
    one = blocks[Partition((1,))]
    assert one.descriptor.weight == 1
    assert dict(zip(one.members, one.young_complexities)) == {
        Partition((3,)): 1,
        Partition((1, 1, 1)): 0,
    }
    assert blocks[Partition((2, 1))].young_complexities == (0,)


def test_blocks_semisimple_range():
    for b in blocks_of(4, 5):
        assert b.descriptor.weight == 0
        assert b.young_complexities == (0,)


@pytest.mark.parametrize("l", [2, 3])
def test_blocks_partition_the_enumeration(l):
    for d in range(13):
        blocks = blocks_of(d, l)
        members = [m for b in blocks for m in b.members]
        assert sorted(members) == sorted(enumerate_partitions(d))
        for b in blocks:
            assert set(b.young_complexities) == set(range(b.descriptor.weight + 1))


@given(partitions(max_size=12), l_at_least_2)
def test_young_complexity_bounded_by_block_weight(lam, l):
    assert young_module_complexity(lam, l)[0] <= block_complexity_bound(lam, l) == l_weight(lam, l)


@pytest.mark.parametrize("lam, l, bound", [((3, 2), 2, 2), ((2, 1), 2, 0), ((4, 1), 2, 1)])
def test_block_complexity_bound(lam, l, bound):
    assert block_complexity_bound(lam, l) == bound
    assert block_support(lam, l).a == bound


@pytest.mark.parametrize(
    "lam, l, expected",
    [((3, 2), 2, (2, 2, 1)), ((2, 1), 2, (1, 1, 1)), ((3, 1), 2, (2, 2))],
)
def test_specht_relative_vertex_upper(lam, l, expected):
    assert specht_relative_vertex_upper(lam, l) == Partition(expected)


def test_vertex_bounds_examples():
    vb = specht_vertex_bounds((3, 1), 2)
    assert (vb.a_min, vb.a_max, vb.exact, vb.vertex) == (2, 2, True, Partition((2, 2)))
    vb = specht_vertex_bounds((2, 1), 2)
    assert (vb.a_min, vb.a_max, vb.exact, vb.vertex) == (0, 0, True, Partition((1, 1, 1)))
    vb = specht_vertex_bounds((2, 2), 2)
    assert (vb.a_min, vb.a_max, vb.exact, vb.vertex) == (1, 2, False, None)
    assert vb.to_json() == {"a_min": 1, "a_max": 2, "exact": False}


def test_vertex_bounds_rejects_non_prime():
    with pytest.raises(PreconditionError):
        specht_vertex_bounds((3, 1), 4)


@given(partitions(max_size=12))
def test_vertex_bounds_invariants(lam):
    for l in (2, 3, 5):
        vb = specht_vertex_bounds(lam, l)
        upper = specht_relative_vertex_upper(lam, l)
        assert 0 <= vb.a_min <= vb.a_max == l_weight(lam, l)
        assert upper.parts.count(l) == vb.a_max
        if lam.size < l * l:
            assert vb.exact and vb.vertex == upper


# -- Poincare series ----------------------------------------------------------

def test_poincare_spec_degrees():
    spec = poincare_spec((7, 3), 3)
    assert (spec.even_generator_degree, spec.odd_generator_degree) == (4, 3)
    assert spec.multiplicities == (2, 1) and spec.m == 3


def test_poincare_single_factor_l3():
    assert poincare_series((3,), 3, 8) == [1, 0, 0, 1, 1, 0, 0, 1, 1]


def test_poincare_two_factors_l3():
    # monomial pairs: {1,1}, {1,y}, {1,x}, {x,y} + {1,xy}, {x,x} + {1,x^2}
    assert poincare_series((6,), 3, 8) == [1, 0, 0, 1, 1, 0, 0, 2, 2]


def test_poincare_empty_factor():
    assert poincare_series((1, 2), 3, 5) == [1, 0, 0, 0, 0, 0]
    assert poincare_series((), 4, 3) == [1, 0, 0, 0]


def test_poincare_l2_is_partitions_into_at_most_m_parts():
    series = poincare_series((6,), 2, 12)
    expected = [sum(1 for p in enumerate_partitions(k) if len(p) <= 3) for k in range(13)]
    assert series == expected


def test_poincare_composition_is_product_of_parts():
    a = poincare_series((6,), 3, 20)
    b = poincare_series((4,), 3, 20)
    both = poincare_series((6, 4), 3, 20)
    assert both == [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(21)]


@pytest.mark.parametrize("l", [3, 4])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_poincare_matches_brute_force(l, m):
    assert poincare_series((m * l,), l, 24) == poincare_series_brute_force(m, l, 24)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_poincare_growth_matches_krull_dimension(m):
    series = poincare_series((3 * m,), 3, 480)

    def cumulative(n):
        return sum(series[: n + 1])

    slope = math.log(cumulative(480) / cumulative(240)) / math.log(2)
    assert abs(slope - m) < 0.35


def test_unclamped_lower_bound_can_be_negative():
    # (3,2,1) is a 2-core but its 4-core is itself: 0 - floor(6/4) = -1
    assert unclamped_vertex_lower_bound((3, 2, 1), 2) == -1
    vb = specht_vertex_bounds((3, 2, 1), 2)
    assert (vb.a_min, vb.a_max, vb.exact) == (0, 0, True)
