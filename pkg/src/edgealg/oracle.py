"""Fiber census: brute-force minimal generator counts for the kernel ideal.

This module never touches Groebner machinery. It groups edge monomials by
their image vertex-degree vector (the fibers of the presentation map) and
counts, per fiber, the connected components of the graph linking monomials
with a common variable. A fiber with c components forces exactly c - 1
minimal generators in its multidegree: differences within a component are
multiples of lower-degree relations, and bridging the components is exactly
what new generators do. Summing max(0, c - 1) over all fibers of degree at
most D yields the number of minimal generators of degree at most D.

Completeness bounds come from the structure of primitive binomials of edge
kernels: for bipartite graphs these are simple even cycles, so generator
degrees never exceed half the longest possible cycle length; in general no
edge occurs more than twice in a primitive walk, so degrees never exceed
the edge count. A census run at least that deep decides the complete
intersection question outright.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np

from ._kernels import fiber_groups_exact
from .cycles import chordless_cycles
from .errors import DomainError, ResourceCapError
from .graph import Graph, connected_components, height, is_bipartite

MONOMIAL_CAP_DEFAULT = 10**7


@dataclass(frozen=True)
class Fiber:
    """All edge monomials with a common vertex multidegree."""

    multidegree: tuple[int, ...]
    monomials: tuple[tuple[int, ...], ...]

    @property
    def degree(self) -> int:
        return sum(self.multidegree) // 2

    @property
    def size(self) -> int:
        return len(self.monomials)

    def components(self) -> int:
        supports = [frozenset(i for i, e in enumerate(m) if e) for m in self.monomials]
        return _component_count_sets(supports)


@dataclass(frozen=True)
class GeneratorCensus:
    """Per-degree minimal generator counts of the kernel ideal.

    degrees: {degree: count} for degrees with at least one generator.
    total: sum of the counts found up to complete_up_to.
    height: e(G) - krull_dim(G), the complete intersection target.
    conclusive: the scan reached the degree bound past which no generator
    can exist, so total is the exact global count.
    """

    degrees: dict[int, int]
    total: int
    height: int
    complete_up_to: int
    conclusive: bool
    notes: tuple[str, ...] = ()

    @property
    def is_complete_intersection(self) -> Optional[bool]:
        if self.total > self.height:
            return False
        if self.conclusive:
            return self.total == self.height
        return None


def _component_count_sets(supports) -> int:
    n = len(supports)
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        si = supports[i]
        for j in range(i + 1, n):
            if si & supports[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    return len({find(i) for i in range(n)})


def _component_count_masks(masks) -> int:
    n = len(masks)
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        mi = int(masks[i])
        for j in range(i + 1, n):
            if mi & int(masks[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    return len({find(i) for i in range(n)})


def _endpoint_arrays(g: Graph):
    vpos = {v: k for k, v in enumerate(g.vertices)}
    eu = np.array([vpos[u] for u, _ in g.edges], dtype=np.int32)
    ev = np.array([vpos[v] for _, v in g.edges], dtype=np.int32)
    return eu, ev


def _check_cap(g: Graph, max_deg: int, monomial_cap: int) -> None:
    total = sum(comb(g.n_edges + d - 1, d) for d in range(1, max_deg + 1))
    if total > monomial_cap:
        raise ResourceCapError(
            f"census to degree {max_deg} needs {total} monomials, over the "
            f"cap {monomial_cap}; raise monomial_cap or lower max_deg"
        )


def default_census_depth(g: Graph) -> int:
    """Half the longest chordless cycle length, plus two; 2 for forests.
    Only defined for bipartite graphs: generator degrees of non-bipartite
    kernels are not controlled by chordless cycles, so callers must choose
    the depth themselves."""
    if is_bipartite(g) is None:
        raise DomainError(
            "no default census depth for a non-bipartite graph; pass max_deg "
            f"(depth {generator_degree_bound(g)} is always conclusive)"
        )
    cycles = chordless_cycles(g)
    if not cycles:
        return 2
    return max(len(c.edges) for c in cycles) // 2 + 2


def generator_degree_bound(g: Graph) -> int:
    """A degree past which no minimal generator of the kernel can exist.

    Minimal generators are primitive. Primitive binomials of a bipartite
    component are relations of simple even cycles, of length at most twice
    the smaller side of the bipartition; in a non-bipartite component a
    primitive walk repeats no edge more than twice, so its relation has
    degree at most the component's edge count.
    """
    bound = 0
    for verts in connected_components(g):
        vset = set(verts)
        comp = Graph.from_edges(
            [e for e in g.edges if e[0] in vset], vertices=verts
        )
        ne = comp.n_edges
        if ne >= comp.n_vertices:
            side = is_bipartite(comp)
            if side is None:
                bound = max(bound, ne)
            else:
                small = min(len(side.left), len(side.right))
                bound = max(bound, min(small, ne // 2))
    return bound


def fibers_up_to(
    g: Graph,
    max_deg: int,
    monomial_cap: int = MONOMIAL_CAP_DEFAULT,
) -> list[Fiber]:
    """All fibers of size >= 2 with total degree <= max_deg, materialized
    with their monomials. Sorted by (degree, multidegree)."""
    if max_deg < 1:
        raise DomainError("max_deg must be at least 1")
    if g.n_edges == 0:
        return []
    _check_cap(g, max_deg, monomial_cap)
    eu, ev = _endpoint_arrays(g)
    out: list[Fiber] = []
    for d in range(1, max_deg + 1):
        keys, offsets, _masks, exps = fiber_groups_exact(
            eu, ev, g.n_vertices, d, want_exponents=True
        )
        for k in range(len(offsets) - 1):
            lo, hi = int(offsets[k]), int(offsets[k + 1])
            monos = sorted(tuple(int(x) for x in exps[i]) for i in range(lo, hi))
            out.append(Fiber(tuple(int(x) for x in keys[k]), tuple(monos)))
    out.sort(key=lambda f: (f.degree, f.multidegree))
    return out


def minimal_generator_census(
    g: Graph,
    max_deg: Optional[int] = None,
    monomial_cap: int = MONOMIAL_CAP_DEFAULT,
) -> GeneratorCensus:
    """Count minimal generators of the kernel ideal per degree, up to
    max_deg (default: default_census_depth for bipartite inputs)."""
    if max_deg is None:
        max_deg = default_census_depth(g)
    if max_deg < 1:
        raise DomainError("max_deg must be at least 1")
    ht = height(g)
    bound = generator_degree_bound(g)
    notes = [f"census complete up to degree {max_deg}"]
    conclusive = max_deg >= bound or g.n_edges == 0
    if conclusive:
        notes.append(f"no generator can have degree above {bound}")
    degrees: dict[int, int] = {}
    if g.n_edges:
        _check_cap(g, max_deg, monomial_cap)
        eu, ev = _endpoint_arrays(g)
        for d in range(2, max_deg + 1):
            found = _census_at_degree(eu, ev, g.n_vertices, d)
            if found:
                degrees[d] = found
    total = sum(degrees.values())
    return GeneratorCensus(degrees, total, ht, max_deg, conclusive, tuple(notes))


def _census_at_degree(eu, ev, nv: int, d: int) -> int:
    keys, offsets, masks, exps = fiber_groups_exact(eu, ev, nv, d, want_exponents=False)
    ngroups = len(offsets) - 1
    if ngroups == 0:
        return 0
    sizes = np.diff(offsets)
    found = 0
    if masks is not None:
        # fibers of size 2 dominate; they split iff the supports are disjoint
        two = np.flatnonzero(sizes == 2)
        if len(two):
            starts = offsets[:-1][two]
            found += int(np.count_nonzero((masks[starts] & masks[starts + 1]) == 0))
        for k in np.flatnonzero(sizes > 2):
            lo, hi = int(offsets[k]), int(offsets[k + 1])
            found += _component_count_masks(masks[lo:hi]) - 1
    else:
        for k in range(ngroups):
            lo, hi = int(offsets[k]), int(offsets[k + 1])
            supports = [
                frozenset(np.flatnonzero(exps[i]).tolist()) for i in range(lo, hi)
            ]
            found += _component_count_sets(supports) - 1
    return found


def ci_oracle(
    g: Graph,
    max_deg: Optional[int] = None,
    monomial_cap: int = MONOMIAL_CAP_DEFAULT,
) -> Optional[bool]:
    """True/False when the census decides the complete intersection
    question, None when it ran too shallow to tell."""
    census = minimal_generator_census(g, max_deg, monomial_cap)
    verdict = census.is_complete_intersection
    if verdict is None:
        return None
    if census.conclusive and census.total < census.height:
        raise RuntimeError(
            "census found fewer generators than the height; this contradicts "
            "Krull's bound and indicates a defect in the census"
        )
    return verdict
