"""Hilbert functions, h-vectors, and the low-degree prefix identity."""

import itertools
from math import comb

import pytest

import edgealg as ea
from edgealg import (
    DomainError,
    Graph,
    HVector,
    MonomialIdeal,
    h_vector,
    hilbert_function,
    kernel_groebner_basis,
    verify_h_prefix,
)

FOUR_CYCLE = Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1)])
K23 = Graph.from_edges([(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
PATH = Graph.from_edges([(1, 2), (2, 3), (3, 4)])
BOWTIE = Graph.from_edges([(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


def brute_standard_count(gens, nvars, degree):
    count = 0
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        mono = [0] * nvars
        for i in combo:
            mono[i] += 1
        if not any(all(m >= gi for m, gi in zip(mono, gen)) for gen in gens):
            count += 1
    return count


class TestMonomialIdeal:
    def test_antichain(self):
        ideal = MonomialIdeal.from_monomials([(1, 0, 1), (1, 1, 1), (0, 2, 0)])
        assert sorted(ideal.generators) == [(0, 2, 0), (1, 0, 1)]

    def test_empty(self):
        assert MonomialIdeal.from_monomials([]).generators == ()


class TestHilbertFunction:
    def test_free_algebra(self):
        ideal = MonomialIdeal.from_monomials([])
        H = hilbert_function(ideal, 4, 6)
        assert list(H) == [comb(i + 3, 3) for i in range(7)]

    def test_one_quadric(self):
        ideal = MonomialIdeal.from_monomials([(1, 0, 1, 0)])
        H = hilbert_function(ideal, 4, 2)
        assert H[2] == 9

    def test_k23_leads(self):
        gb = kernel_groebner_basis(K23)
        ideal = MonomialIdeal.from_monomials([b.plus for b in gb.elements])
        H = hilbert_function(ideal, 6, 2)
        assert H[2] == 18

    def test_against_brute_enumeration(self):
        gens = [(2, 0, 0, 0), (0, 1, 1, 0), (1, 0, 0, 1)]
        ideal = MonomialIdeal.from_monomials(gens)
        H = hilbert_function(ideal, 4, 5)
        for d in range(6):
            assert H[d] == brute_standard_count(gens, 4, d)

    def test_equals_fiber_count(self):
        # H of the initial ideal = number of distinct vertex-degree vectors
        # hit by degree-i monomials (dimension of the degree-i piece)
        for g in (FOUR_CYCLE, K23, ea.gn(2), BOWTIE):
            gb = kernel_groebner_basis(g)
            ideal = MonomialIdeal.from_monomials([b.plus for b in gb.elements])
            H = hilbert_function(ideal, g.n_edges, 4)
            vpos = {v: k for k, v in enumerate(g.vertices)}
            for d in range(5):
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


class TestHVector:
    def test_four_cycle(self):
        hv = h_vector(FOUR_CYCLE, 4)
        assert hv.d == 3
        assert hv.entries[:3] == (1, 1, 0)
        assert all(x == 0 for x in hv.entries[2:])

    def test_tree(self):
        hv = h_vector(PATH, 4)
        assert hv.d == 3
        assert hv.entries[0] == 1
        assert all(x == 0 for x in hv.entries[1:])
        assert hv.L is None

    def test_g2_ci_of_two_quadrics(self):
        hv = h_vector(ea.gn(2), 5)
        assert hv.entries[:4] == (1, 2, 1, 0)
        assert hv.d == 5 and hv.L == 2

    def test_cube(self):
        hv = h_vector(ea.cube(), 5)
        assert hv.d == 7
        assert hv.entries[:5] == (1, 5, 9, 1, 0)

    def test_bowtie(self):
        hv = h_vector(BOWTIE, 5)
        assert hv.d == 5 and hv.L == 3
        assert hv.entries[0] == 1

    def test_entries_start_with_one(self):
        for g in (FOUR_CYCLE, K23, ea.gn(3), BOWTIE):
            assert h_vector(g, 3).entries[0] == 1

    def test_disconnected_rejected(self):
        with pytest.raises(DomainError):
            h_vector(Graph.from_edges([(1, 2), (3, 4)]), 3)

    def test_convolution_reproduces_H(self):
        # Sum_k C(d, k) (-1)^k H(i-k) = h_i inverts to
        # H(i) = Sum_j h_j * C(d - 1 + i - j, d - 1)
        g = K23
        hv = h_vector(g, 6)
        gb = kernel_groebner_basis(g)
        ideal = MonomialIdeal.from_monomials([b.plus for b in gb.elements])
        H = hilbert_function(ideal, g.n_edges, 6)
        for i in range(7):
            total = sum(
                hv.entries[j] * comb(hv.d - 1 + i - j, hv.d - 1)
                for j in range(i + 1)
                if j < len(hv.entries)
            )
            assert total == H[i]


class TestHPrefix:
    def test_four_cycle(self):
        rep = verify_h_prefix(FOUR_CYCLE)
        assert rep.ok
        assert rep.L == 2 and rep.codim == 1
        assert rep.h[1] == 1 == comb(1, 0)
        assert rep.defect == 1
        assert rep.census_L == 1

    def test_k23(self):
        rep = verify_h_prefix(K23)
        assert rep.ok
        assert rep.L == 2 and rep.codim == 2
        assert rep.defect == 3
        assert rep.census_L == 3
        assert rep.walks_2L == 3

    def test_g2(self):
        rep = verify_h_prefix(ea.gn(2))
        assert rep.ok
        assert rep.L == 2 and rep.codim == 2
        assert rep.defect == 2
        assert rep.census_L == 2
        assert rep.walks_2L == 2

    def test_cube(self):
        rep = verify_h_prefix(ea.cube())
        assert rep.ok
        assert rep.L == 2 and rep.codim == 5
        assert rep.defect == comb(6, 4) - 9
        assert rep.census_L == 6

    def test_bowtie_nonbipartite(self):
        rep = verify_h_prefix(BOWTIE)
        assert rep.ok
        assert rep.L == 3 and rep.codim == 1
        assert rep.defect == 1 and rep.census_L == 1
        assert rep.walks_2L == 2

    def test_tree_rejected(self):
        with pytest.raises(DomainError):
            verify_h_prefix(PATH)

    def test_disconnected_rejected(self):
        with pytest.raises(DomainError):
            verify_h_prefix(Graph.from_edges([(1, 2), (3, 4)]))
