"""Property-based invariants and independent cross-checks."""

import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

import edgealg as ea
from edgealg import (
    Graph,
    blocks,
    buchberger,
    chordless_cycles,
    cycle_generators,
    elimination_generators,
    is_bipartite,
    is_ci_graph,
    kernel_membership,
    minimal_generator_census,
    minimalize,
    psi,
    shrink_edge,
)

from util_graphs import random_connected_graph

SLOW_PROFILE = settings(max_examples=40, deadline=None)


def seeded(seed: int, max_edges: int, bipartite: bool = False, min_edges: int = 1):
    return random_connected_graph(
        random.Random(seed), max_edges, bipartite=bipartite, min_edges=min_edges
    )


class TestGraphProperties:
    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_chordless_count_lower_bound(self, seed):
        g = seeded(seed, 10)
        count = len(chordless_cycles(g))
        assert count >= g.n_edges - g.n_vertices + 1

    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_shrink_drops_one_vertex(self, seed):
        g = seeded(seed, 9)
        rng = random.Random(seed + 1)
        i = rng.randrange(g.n_edges)
        assert shrink_edge(g, i).n_vertices == g.n_vertices - 1

    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_blocks_partition_edges(self, seed):
        g = seeded(seed, 10)
        seen = sorted(
            (frozenset(e) for b in blocks(g) for e in b.edges), key=sorted
        )
        assert seen == sorted((frozenset(e) for e in g.edges), key=sorted)

    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_ci_iff_all_blocks_ci(self, seed):
        g = seeded(seed, 10, bipartite=True)
        whole = is_ci_graph(g).is_ci
        per_block = all(is_ci_graph(b).is_ci for b in blocks(g))
        assert whole == per_block


class TestAlgebraProperties:
    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_elimination_elements_in_kernel(self, seed):
        g = seeded(seed, 8)
        for b in elimination_generators(g).elements:
            assert kernel_membership(b, g)

    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_routes_agree_on_bipartite(self, seed):
        g = seeded(seed, 9, bipartite=True)
        elim = elimination_generators(g)
        cyc = buchberger(cycle_generators(g))
        assert elim.elements == cyc.elements

    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_minimal_count_matches_census(self, seed):
        g = seeded(seed, 9, bipartite=True)
        mg = minimalize(elimination_generators(g), g)
        c = minimal_generator_census(g, max_deg=ea.generator_degree_bound(g) or 2)
        assert len(mg) == c.total
        assert mg.degrees() == c.degrees

    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_psi_of_walks_in_kernel(self, seed):
        g = seeded(seed, 8, min_edges=4)
        for w in ea.minimal_even_walks(g, 6):
            b = psi(w, g.n_edges)
            assert b is not None and kernel_membership(b, g)

    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_main_theorem_count_equivalence(self, seed):
        g = seeded(seed, 9, bipartite=True)
        mg = minimalize(elimination_generators(g), g)
        bound = g.n_edges - g.n_vertices + 1
        assert (len(mg) == bound) == is_ci_graph(g).is_ci


class TestHilbertProperties:
    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_hilbert_equals_fiber_count(self, seed):
        import itertools

        g = seeded(seed, 7, bipartite=True)
        gb = ea.kernel_groebner_basis(g)
        ideal = ea.MonomialIdeal.from_monomials([b.plus for b in gb.elements])
        H = ea.hilbert_function(ideal, g.n_edges, 3)
        vpos = {v: k for k, v in enumerate(g.vertices)}
        for d in range(4):
            seen = set()
            for combo in itertools.combinations_with_replacement(
                range(g.n_edges), d
            ):
                mdeg = [0] * g.n_vertices
                for i in combo:
                    u, v = g.edges[i]
                    mdeg[vpos[u]] += 1
                    mdeg[vpos[v]] += 1
                seen.add(tuple(mdeg))
            assert H[d] == len(seen)

    @SLOW_PROFILE
    @given(st.integers(0, 10**9))
    def test_h_prefix_on_random_graphs(self, seed):
        g = seeded(seed, 9, bipartite=True)
        if ea.smallest_even_walk_length(g) is None:
            return
        assert ea.verify_h_prefix(g).ok


def sympy_poly_key(expr, gens):
    import sympy

    poly = sympy.Poly(expr, *gens)
    return frozenset(poly.terms())


class TestSympyCross:
    """Independent Groebner computation of the elimination ideal."""

    @pytest.mark.parametrize(
        "g",
        [
            Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1)]),
            Graph.from_edges([(1, 2), (2, 3), (1, 3)]),
            Graph.from_edges([(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
            Graph.from_edges([(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]),
            ea.gn(2),
        ],
        ids=["square", "triangle", "k23", "bowtie", "g2"],
    )
    def test_elimination_matches_sympy(self, g):
        import sympy
        from sympy import groebner, symbols

        nv, ne = g.n_vertices, g.n_edges
        vs = symbols([f"v{i}" for i in range(nv)])
        es = symbols([f"e{i}" for i in range(ne)])
        vpos = {v: k for k, v in enumerate(g.vertices)}
        polys = [
            vs[vpos[u]] * vs[vpos[w]] - es[i] for i, (u, w) in enumerate(g.edges)
        ]
        gb = groebner(polys, *(list(vs) + list(es)), order="lex")
        vset = set(vs)
        theirs = {
            sympy_poly_key(p, es) for p in gb.exprs if not (p.free_symbols & vset)
        }
        ours = set()
        for b in elimination_generators(g).elements:
            expr = sympy.Integer(1)
            for i, k in enumerate(b.plus):
                expr *= es[i] ** k
            neg = sympy.Integer(1)
            for i, k in enumerate(b.minus):
                neg *= es[i] ** k
            ours.add(sympy_poly_key(expr - neg, es))
        assert ours == theirs
