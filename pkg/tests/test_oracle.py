"""Fiber census oracle: the Groebner-free route to generator counts."""

import itertools

import pytest

import edgealg as ea
from edgealg import (
    DomainError,
    Graph,
    ResourceCapError,
    ci_oracle,
    default_census_depth,
    fibers_up_to,
    generator_degree_bound,
    minimal_generator_census,
)

FOUR_CYCLE = Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1)])
K23 = Graph.from_edges([(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
BOWTIE = Graph.from_edges([(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
PATH = Graph.from_edges([(1, 2), (2, 3), (3, 4)])


def brute_fibers(g: Graph, degree: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Group ALL degree-d edge monomials by vertex multidegree, directly."""
    vpos = {v: k for k, v in enumerate(g.vertices)}
    out: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for combo in itertools.combinations_with_replacement(range(g.n_edges), degree):
        mono = [0] * g.n_edges
        mdeg = [0] * g.n_vertices
        for i in combo:
            mono[i] += 1
            u, v = g.edges[i]
            mdeg[vpos[u]] += 1
            mdeg[vpos[v]] += 1
        out.setdefault(tuple(mdeg), []).append(tuple(mono))
    return out


class TestFibers:
    def test_four_cycle_single_fiber(self):
        fs = fibers_up_to(FOUR_CYCLE, 2)
        assert len(fs) == 1
        f = fs[0]
        assert f.multidegree == (1, 1, 1, 1)
        assert sorted(f.monomials) == [(0, 1, 0, 1), (1, 0, 1, 0)]
        assert f.degree == 2 and f.size == 2

    def test_path_no_fibers(self):
        assert fibers_up_to(PATH, 4) == []

    def test_k23_three_pairs(self):
        fs = [f for f in fibers_up_to(K23, 2) if f.degree == 2]
        assert len(fs) == 3
        assert all(f.size == 2 for f in fs)

    def test_fiber_sanity_against_brute(self):
        # every multi-element group found directly must appear, with the
        # same members; singleton groups are rightly absent
        for g in (FOUR_CYCLE, K23, BOWTIE):
            for d in (2, 3):
                brute = {
                    b: sorted(ms)
                    for b, ms in brute_fibers(g, d).items()
                    if len(ms) >= 2
                }
                ours = {
                    f.multidegree: sorted(f.monomials)
                    for f in fibers_up_to(g, d)
                    if f.degree == d
                }
                assert ours == brute

    def test_component_counting(self):
        fs = fibers_up_to(K23, 2)
        assert all(f.components() == 2 for f in fs)

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            fibers_up_to(ea.cube(), 6, monomial_cap=100)


class TestBounds:
    def test_bipartite_bound(self):
        assert generator_degree_bound(FOUR_CYCLE) == 2
        assert generator_degree_bound(K23) == 2
        assert generator_degree_bound(ea.gn(4)) == 5

    def test_nonbipartite_bound(self):
        assert generator_degree_bound(BOWTIE) == 6

    def test_forest_bound(self):
        assert generator_degree_bound(PATH) == 0

    def test_componentwise_max(self):
        g = Graph.from_edges(
            [(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 5)]
        )
        # square (bound 2) + triangle (bound 3)
        assert generator_degree_bound(g) == 3

    def test_default_depth(self):
        assert default_census_depth(PATH) == 2
        assert default_census_depth(K23) == 4
        assert default_census_depth(ea.cube()) == 5

    def test_default_depth_nonbipartite(self):
        with pytest.raises(DomainError):
            default_census_depth(BOWTIE)


class TestCensus:
    def test_four_cycle(self):
        c = minimal_generator_census(FOUR_CYCLE)
        assert c.degrees == {2: 1}
        assert c.total == 1 and c.height == 1
        assert c.conclusive
        assert c.is_complete_intersection is True

    def test_k23(self):
        c = minimal_generator_census(K23)
        assert c.degrees == {2: 3}
        assert c.total == 3 and c.height == 2
        assert c.is_complete_intersection is False

    def test_cube(self):
        c = minimal_generator_census(ea.cube())
        assert c.degrees == {2: 6, 3: 4}
        assert c.total == 10 and c.height == 5
        assert c.is_complete_intersection is False

    def test_gn(self):
        for n in (1, 2, 3):
            c = minimal_generator_census(ea.gn(n))
            assert c.degrees == {2: n}
            assert c.is_complete_intersection is True

    def test_hn(self):
        c = minimal_generator_census(ea.hn(3))
        assert c.degrees == {3: 3}
        assert c.height == 2
        assert c.is_complete_intersection is False

    def test_bowtie(self):
        c = minimal_generator_census(BOWTIE, max_deg=6)
        assert c.degrees == {3: 1}
        assert c.height == 1 and c.conclusive
        assert c.is_complete_intersection is True

    def test_forest_empty(self):
        c = minimal_generator_census(PATH)
        assert c.degrees == {} and c.total == 0 and c.height == 0
        assert c.is_complete_intersection is True

    def test_notes_record_depth(self):
        c = minimal_generator_census(K23)
        assert any("degree 4" in n for n in c.notes)

    def test_inconclusive_when_shallow(self):
        c = minimal_generator_census(ea.gn(4), max_deg=2)
        assert not c.conclusive
        # 4 degree-2 generators already found, height 4: early verdict
        # would claim CI, so the census must stay undecided
        assert c.total == 4 and c.height == 4
        assert c.is_complete_intersection is None


class TestCiOracle:
    def test_g3_true(self):
        assert ci_oracle(ea.gn(3)) is True

    def test_h3_false(self):
        assert ci_oracle(ea.hn(3)) is False

    def test_k23_false_at_any_depth(self):
        # total exceeds height by degree 2 already: False is sound even
        # though depth 2 is not conclusive
        assert ci_oracle(K23, max_deg=2) is False

    def test_g4_needs_explicit_depth(self):
        assert ci_oracle(ea.gn(4)) is None
        assert ci_oracle(ea.gn(4), max_deg=generator_degree_bound(ea.gn(4))) is True

    def test_bowtie(self):
        assert ci_oracle(BOWTIE, max_deg=6) is True
