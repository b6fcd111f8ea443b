"""Unit and property tests for the cycle arithmetic layer."""

import itertools

import pytest
from hypothesis import given, strategies as st

from dualcycles.lattice import (
    Cycle,
    CycleError,
    DimensionError,
    DualGraph,
    Order,
    add,
    canonical_degree,
    compare,
    inf_cycles,
    intersection,
    is_anti_nef,
    pairing_vector,
    scale,
    sub,
    support,
    virtual_genus,
)


def path_graph(n: int, weights=None) -> DualGraph:
    return DualGraph(weights or (-2,) * n, [(i, i + 1) for i in range(n - 1)])


@st.composite
def graphs(draw) -> DualGraph:
    """Random trees with weights in -5..-2, up to 8 vertices."""
    n = draw(st.integers(min_value=1, max_value=8))
    weights = draw(st.lists(st.integers(-5, -2), min_size=n, max_size=n))
    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    return DualGraph(weights, edges)


def cycles_for(g: DualGraph, lo=-4, hi=6):
    return st.tuples(*(st.integers(lo, hi) for _ in range(g.vertex_count)))


@st.composite
def graph_and_cycles(draw, k=1, lo=-4, hi=6):
    g = draw(graphs())
    zs = [draw(cycles_for(g, lo, hi)) for _ in range(k)]
    return (g, *zs)


class TestDualGraph:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            DualGraph((), [])

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            DualGraph((-2, -2), [(0, 0)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            DualGraph((-2, -2), [(0, 1), (1, 0)])

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError, match="out of range"):
            DualGraph((-2, -2), [(0, 2)])

    def test_edge_normalization(self):
        g = DualGraph((-2, -2, -2), [(2, 0), (1, 2)])
        assert g.edges == frozenset({(0, 2), (1, 2)})
        assert g.neighbors(2) == (0, 1)

    def test_intersection_matrix(self):
        g = path_graph(3, (-2, -3, -2))
        assert g.intersection_matrix() == [
            [-2, 1, 0],
            [1, -3, 1],
            [0, 1, -2],
        ]

    def test_check_cycle_dimension(self):
        g = path_graph(2)
        with pytest.raises(DimensionError):
            g.check_cycle((1, 1, 1))

    def test_hashable_and_equal(self):
        a = DualGraph((-2, -2), [(0, 1)])
        b = DualGraph((-2, -2), [(1, 0)])
        assert a == b and hash(a) == hash(b)


class TestArithmetic:
    def test_support(self):
        assert support((0, 2, -1, 3)) == {1, 3}

    def test_add_sub_scale(self):
        assert add((1, 2), (3, 4)) == (4, 6)
        assert sub((1, 2), (3, 4)) == (-2, -2)
        assert scale(3, (1, -2)) == (3, -6)

    def test_inf(self):
        assert inf_cycles((1, 5), (2, 3)) == (1, 3)

    @pytest.mark.parametrize(
        "z, w, expected",
        [
            ((1, 1), (1, 1), Order.EQUAL),
            ((1, 1), (2, 1), Order.LESS_EQ),
            ((3, 1), (2, 1), Order.GREATER_EQ),
            ((0, 2), (1, 1), Order.INCOMPARABLE),
        ],
    )
    def test_compare(self, z, w, expected):
        assert compare(z, w) is expected

    def test_compare_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            compare((1,), (1, 2))


class TestPairing:
    def test_pairing_vector_matches_matrix(self):
        g = path_graph(4, (-2, -3, -2, -4))
        z = (1, 2, 0, 3)
        m = g.intersection_matrix()
        expected = tuple(sum(m[i][j] * z[j] for j in range(4)) for i in range(4))
        assert pairing_vector(g, z) == expected

    def test_intersection_via_units(self):
        g = path_graph(3)
        assert intersection(g, g.unit(0), g.unit(1)) == 1
        assert intersection(g, g.unit(0), g.unit(2)) == 0
        assert intersection(g, g.unit(1), g.unit(1)) == -2

    @given(graph_and_cycles(k=2))
    def test_intersection_symmetric(self, gzw):
        g, z, w = gzw
        assert intersection(g, z, w) == intersection(g, w, z)

    @given(graph_and_cycles(k=3))
    def test_intersection_bilinear(self, gzw):
        g, z, w, v = gzw
        assert intersection(g, add(z, w), v) == intersection(g, z, v) + intersection(
            g, w, v
        )

    @given(graph_and_cycles(k=1))
    def test_pairing_vector_consistent_with_intersection(self, gz):
        g, z = gz
        pv = pairing_vector(g, z)
        for i in range(g.vertex_count):
            assert pv[i] == intersection(g, z, g.unit(i))


class TestGenus:
    def test_canonical_degree_zero_on_minus_two_graphs(self):
        g = path_graph(5)
        assert canonical_degree(g, (3, 1, 4, 1, 5)) == 0

    def test_canonical_degree_counts_heavy_vertices(self):
        g = path_graph(3, (-3, -2, -4))
        assert canonical_degree(g, (2, 7, 3)) == 2 * 1 + 0 + 3 * 2

    def test_virtual_genus_of_unit(self):
        # a single smooth rational curve has genus 0
        g = path_graph(3, (-2, -3, -2))
        for i in range(3):
            assert virtual_genus(g, g.unit(i)) == 0

    @given(graph_and_cycles(k=1))
    def test_virtual_genus_is_an_integer(self, gz):
        # the defining quotient never truncates: Z^2 + K.Z is always even
        g, z = gz
        assert isinstance(virtual_genus(g, z), int)

    @given(graph_and_cycles(k=2))
    def test_genus_additivity(self, gzw):
        g, z, w = gzw
        lhs = virtual_genus(g, add(z, w))
        rhs = virtual_genus(g, z) + virtual_genus(g, w) + intersection(g, z, w) - 1
        assert lhs == rhs


class TestAntiNef:
    def test_rejects_negative_coefficients(self):
        g = path_graph(2)
        with pytest.raises(CycleError):
            is_anti_nef(g, (1, -1))

    def test_small_cases(self):
        g = path_graph(3)
        assert is_anti_nef(g, (1, 1, 1))
        assert is_anti_nef(g, (1, 2, 1))
        assert not is_anti_nef(g, (2, 1, 2))  # middle vertex pairs positively
        assert not is_anti_nef(g, (0, 1, 0))
        assert is_anti_nef(g, (0, 0, 0))

    def test_inf_preserves_anti_nef_exhaustively(self):
        g = path_graph(3, (-2, -3, -2))
        box = range(4)
        anti = [
            z
            for z in itertools.product(box, box, box)
            if is_anti_nef(g, z)
        ]
        for z in anti:
            for w in anti:
                assert is_anti_nef(g, inf_cycles(z, w))

    @given(graph_and_cycles(k=2, lo=0, hi=5))
    def test_sum_of_anti_nef_is_anti_nef(self, gzw):
        g, z, w = gzw
        if is_anti_nef(g, z) and is_anti_nef(g, w):
            assert is_anti_nef(g, add(z, w))
