import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcograph.cotree import bags, from_graph, parse, to_graph
from qcograph.enumeration import enumerate_cographs
from qcograph.graph import Graph, bipartition, components, induced_subgraph
from qcograph.spectra import (
    algebraic_connectivity,
    condensed,
    default_tol_group,
    dumps_17g,
    jacobi_eigh,
    laplacian,
    main_eigs_condensed,
    q_spectrum,
    report_to_json,
    signless_laplacian,
)

SQRT6 = math.sqrt(6.0)


def graph_of(expr):
    return to_graph(parse(expr))


class TestMatrices:
    def test_q_of_k2(self):
        assert np.array_equal(signless_laplacian(Graph.complete(2)), [[1, 1], [1, 1]])

    def test_q_of_empty3(self):
        assert np.array_equal(signless_laplacian(Graph.empty(3)), np.zeros((3, 3)))

    def test_q_trace_is_twice_size(self):
        paw = graph_of("J(1, U(J(1), J(2)))")
        q = signless_laplacian(paw)
        assert np.trace(q) == 2 * paw.m == 8

    def test_q_row_sums(self):
        g = graph_of("J(2, U(2))")
        q = signless_laplacian(g)
        assert np.array_equal(q.sum(axis=1), 2 * g.degrees())

    def test_l_of_k2(self):
        assert np.array_equal(laplacian(Graph.complete(2)), [[1, -1], [-1, 1]])

    def test_l_annihilates_ones(self):
        g = graph_of("U(J(3), J(2, U(2)))")
        assert np.allclose(laplacian(g) @ np.ones(g.n), 0.0)

    def test_c4_laplacian_spectrum(self):
        c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        vals = jacobi_eigh(laplacian(c4)).values
        assert np.allclose(vals, [0, 2, 2, 4], atol=1e-10)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            signless_laplacian(Graph.empty(0))
        with pytest.raises(ValueError):
            laplacian(Graph.empty(0))


class TestJacobi:
    def test_identity(self):
        dec = jacobi_eigh(np.eye(3))
        assert np.allclose(dec.values, [1, 1, 1])

    def test_swap_matrix(self):
        dec = jacobi_eigh(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.allclose(dec.values, [-1, 1])

    def test_q_of_k4(self):
        dec = jacobi_eigh(signless_laplacian(Graph.complete(4)))
        assert np.allclose(dec.values, [2, 2, 2, 6], atol=1e-10)

    @given(st.integers(1, 12), st.integers(0, 2**32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_against_lapack(self, n, seed):
        rng = np.random.default_rng(seed)
        m = rng.normal(size=(n, n))
        m = m + m.T
        dec = jacobi_eigh(m)
        assert np.allclose(dec.values, np.linalg.eigvalsh(m), atol=1e-9 * max(1, np.linalg.norm(m)))

    @given(st.integers(1, 10), st.integers(0, 2**32 - 1))
    @settings(max_examples=40, deadline=None)
    def test_decomposition_invariants(self, n, seed):
        rng = np.random.default_rng(seed)
        m = rng.normal(size=(n, n))
        m = m + m.T
        dec = jacobi_eigh(m)
        norm = np.linalg.norm(m)
        assert np.all(np.diff(dec.values) >= 0)
        assert np.linalg.norm(m @ dec.vectors - dec.vectors * dec.values) <= 1e-10 * max(1, norm)
        assert np.linalg.norm(dec.vectors.T @ dec.vectors - np.eye(n)) <= 1e-12 * n

    def test_deterministic(self):
        m = signless_laplacian(graph_of("J(3, U(J(2), J(4)))"))
        a = jacobi_eigh(m)
        b = jacobi_eigh(m)
        assert np.array_equal(a.values, b.values)
        assert np.array_equal(a.vectors, b.vectors)


class TestQSpectrum:
    def test_bipartite_join_2_3(self):
        rep = q_spectrum(graph_of("J(U(2),U(3))"))
        got = [(round(g.value, 8), g.multiplicity, g.main) for g in rep.groups]
        assert got == [(5.0, 1, True), (3.0, 1, False), (2.0, 2, False), (0.0, 1, True)]
        assert rep.main_count == 2

    def test_bipartite_join_regular(self):
        rep = q_spectrum(graph_of("J(U(2),U(2))"))
        got = [(round(g.value, 8), g.multiplicity, g.main) for g in rep.groups]
        assert got == [(4.0, 1, True), (2.0, 2, False), (0.0, 1, False)]
        assert rep.main_count == 1

    def test_paw(self):
        rep = q_spectrum(graph_of("J(1, U(J(1), J(2)))"))
        mains = rep.main_values()
        assert mains == pytest.approx([(5 + math.sqrt(17)) / 2, (5 - math.sqrt(17)) / 2])
        non_mains = sorted(g.value for g in rep.groups if not g.main)
        assert non_mains == pytest.approx([1.0, 2.0])

    def test_k1(self):
        rep = q_spectrum(Graph.complete(1))
        assert rep.main_count == 1 and rep.groups[0].value == 0.0

    def test_multiplicities_sum_to_n(self):
        for expr in ("J(5)", "U(2, J(3))", "J(2, U(J(2), J(3)))"):
            rep = q_spectrum(graph_of(expr))
            assert sum(g.multiplicity for g in rep.groups) == rep.n

    def test_parseval(self):
        for expr in ("J(4)", "U(J(2), J(3), 1)", "J(U(3), U(2), 2)"):
            rep = q_spectrum(graph_of(expr))
            total = sum(g.projection_norm**2 for g in rep.groups)
            assert abs(total - rep.n) <= 1e-8 * rep.n

    def test_positive_semidefinite(self):
        for n in range(1, 8):
            for s in enumerate_cographs(n).strings:
                rep = q_spectrum(graph_of(s))
                assert rep.groups[-1].value >= -rep.tol_group

    def test_largest_main_when_connected(self):
        for s in enumerate_cographs(6).strings:
            g = graph_of(s)
            if len(components(g)) != 1:
                continue
            rep = q_spectrum(g)
            assert rep.groups[0].main
            assert rep.groups[0].multiplicity == 1

    def test_zero_multiplicity_counts_bipartite_components(self):
        for n in range(1, 8):
            for s in enumerate_cographs(n).strings:
                g = graph_of(s)
                rep = q_spectrum(g)
                zero_mult = sum(
                    grp.multiplicity for grp in rep.groups if abs(grp.value) <= rep.tol_group
                )
                expected = sum(
                    1
                    for block in components(g)
                    if bipartition(induced_subgraph(g, block)) is not None
                )
                assert zero_mult == expected, s

    def test_json_serialization(self):
        rep = q_spectrum(graph_of("J(U(2),U(3))"))
        text = report_to_json(rep)
        import json

        data = json.loads(text)
        assert data["n"] == 5 and data["main_count"] == 2
        assert len(data["groups"]) == 4
        assert set(data["tolerances"]) == {"tol_group", "tol_main"}

    def test_17_digit_floats(self):
        assert dumps_17g({"x": 1 / 3}) == '{"x":0.33333333333333331}'


class TestCondensed:
    def test_bipartite_join_matrix(self):
        c = condensed(bags(parse("J(U(2),U(3))")))
        assert np.allclose(c.entries, [[3, SQRT6], [SQRT6, 2]])

    def test_complete_split_matrix(self):
        c = condensed(bags(parse("J(2, U(3))")))
        assert np.allclose(c.entries, [[5, SQRT6], [SQRT6, 2]])

    def test_complete_graph(self):
        c = condensed(bags(parse("J(7)")))
        assert np.allclose(c.entries, [[12.0]])
        assert main_eigs_condensed(c) == [(12.0, True)]

    def test_bipartite_join_mains(self):
        mains = main_eigs_condensed(condensed(bags(parse("J(U(2),U(3))"))))
        assert [(round(v, 9), f) for v, f in mains] == [(5.0, True), (0.0, True)]

    def test_core_union_middle_not_main(self):
        # three bags; the eigenvalue a+b+c-2 = 2 is not main
        mains = main_eigs_condensed(condensed(bags(parse("J(1, U(J(1), J(2)))"))))
        flags = {round(v, 6): f for v, f in mains}
        assert flags[2.0] is False
        assert sum(flags.values()) == 2

    def test_single_vertex_degenerates_to_zero(self):
        from qcograph.cotree import Leaf

        c = condensed(bags(Leaf()))
        assert np.allclose(c.entries, [[0.0]])
        assert main_eigs_condensed(c) == [(0.0, True)]

    def test_matches_full_route_small(self):
        for n in range(1, 8):
            for s in enumerate_cographs(n).strings:
                g = graph_of(s)
                full = q_spectrum(g).main_values()
                cond = [v for v, f in main_eigs_condensed(condensed(bags(from_graph(g)))) if f]
                assert len(full) == len(cond), s
                assert full == pytest.approx(cond, abs=1e-8), s


class TestAlgebraicConnectivity:
    def test_complete(self):
        for n in range(2, 7):
            assert algebraic_connectivity(Graph.complete(n)) == pytest.approx(n)

    def test_disconnected_is_zero(self):
        assert algebraic_connectivity(graph_of("U(J(3),J(3))")) == pytest.approx(0.0)

    def test_paw_equals_one(self):
        assert algebraic_connectivity(graph_of("J(1, U(J(1), J(2)))")) == pytest.approx(1.0)

    def test_needs_two_vertices(self):
        with pytest.raises(ValueError):
            algebraic_connectivity(Graph.complete(1))
