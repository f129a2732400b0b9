"""Closed walks, cycles, and the chordless-cycle combinatorics behind the
complete-intersection criterion.

A closed walk of even length 2k yields a degree-k binomial relation between
edge variables (see binomial.psi); the chordless cycles are the ones whose
relations are indispensable. The decisive combinatorial test implemented here:
a bipartite graph is a "CI graph" iff no two chordless cycles share more than
one edge, which for connected graphs is equivalent to having exactly
e - v + 1 chordless cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import DomainError, ResourceCapError
from .graph import Graph, connected_components, height, is_bipartite, is_connected

CYCLE_CAP_DEFAULT = 10**6


@dataclass(frozen=True)
class Walk:
    """A walk stored as its edge-index sequence plus the matching vertex
    sequence (one longer; equal first/last vertex means the walk is closed)."""

    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise DomainError("vertex sequence must be one longer than edge sequence")

    @classmethod
    def from_vertices(cls, g: Graph, vseq: tuple[int, ...]) -> "Walk":
        edges = []
        for a, b in zip(vseq, vseq[1:]):
            key = frozenset((a, b))
            if key not in g.edge_index:
                raise DomainError(f"({a}, {b}) is not an edge")
            edges.append(g.edge_index[key])
        return cls(tuple(edges), tuple(vseq))

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def closed(self) -> bool:
        return self.length > 0 and self.vertices[0] == self.vertices[-1]

    @property
    def is_minimal(self) -> bool:
        """No two cyclically consecutive edges coincide."""
        if not self.closed:
            return False
        l = self.length
        return all(self.edges[i] != self.edges[(i + 1) % l] for i in range(l))

    @property
    def is_trivial(self) -> bool:
        """Some rotation pairs the walk into doubled edges (e1=e2, e3=e4, ...)."""
        if not self.closed or self.length % 2:
            return False
        l = self.length
        doubled = self.edges + self.edges
        for s in range(l):
            if all(doubled[s + i] == doubled[s + i + 1] for i in range(0, l, 2)):
                return True
        return False

    def rotations_and_reversals(self) -> Iterator[tuple[int, ...]]:
        if not self.closed:
            yield self.edges
            return
        l = self.length
        fwd = self.edges + self.edges
        rev = tuple(reversed(self.edges)) * 2
        for s in range(l):
            yield fwd[s : s + l]
            yield rev[s : s + l]

    def canonical_edges(self) -> tuple[int, ...]:
        """Lexicographically least edge tuple over all rotations and reversals."""
        return min(self.rotations_and_reversals())


@dataclass(frozen=True)
class Cycle:
    """A simple cycle in canonical form: the edge sequence is rotated to start
    at the smallest edge index and oriented so the second edge is the smaller
    of the two choices. vertices[i] is the startpoint of edges[i]."""

    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @classmethod
    def from_vertex_cycle(cls, g: Graph, vcycle: tuple[int, ...]) -> "Cycle":
        """vcycle lists the cycle's vertices once; the closing edge is implied."""
        l = len(vcycle)
        if l < 3:
            raise DomainError("a cycle has at least 3 vertices")
        edges = []
        for k in range(l):
            a, b = vcycle[k], vcycle[(k + 1) % l]
            key = frozenset((a, b))
            if key not in g.edge_index:
                raise DomainError(f"({a}, {b}) is not an edge")
            edges.append(g.edge_index[key])
        if len(set(edges)) != l or len(set(vcycle)) != l:
            raise DomainError("not a simple cycle")
        p = edges.index(min(edges))
        fwd_e = tuple(edges[p:] + edges[:p])
        fwd_v = tuple(vcycle[p:] + vcycle[:p])
        # reversed orientation, still starting with the same minimal edge
        rv = list(reversed(vcycle))
        re = [
            g.edge_index[frozenset((rv[k], rv[(k + 1) % l]))] for k in range(l)
        ]
        q = re.index(min(re))
        rev_e = tuple(re[q:] + re[:q])
        rev_v = tuple(rv[q:] + rv[:q])
        if fwd_e[1:] <= rev_e[1:]:
            return cls(fwd_e, fwd_v)
        return cls(rev_e, rev_v)

    def as_walk(self) -> Walk:
        return Walk(self.edges, self.vertices + (self.vertices[0],))

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)


def chordless_cycles(g: Graph, cap: int = CYCLE_CAP_DEFAULT) -> tuple[Cycle, ...]:
    """All chordless cycles of g, each once, in canonical form.

    Enumeration anchors each cycle at its minimum vertex v and the ordered
    pair u < w of v's neighbors on the cycle, then grows induced paths only
    through vertices larger than v. Raises ResourceCapError beyond cap.
    """
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    found: list[Cycle] = []

    def emit(vpath: list[int]):
        found.append(Cycle.from_vertex_cycle(g, tuple(vpath)))
        if len(found) > cap:
            raise ResourceCapError(
                f"more than {cap} chordless cycles; raise the cycle cap"
            )

    for v in sorted(g.vertices):
        nbrs = sorted(x for x in adj[v] if x > v)
        for ui in range(len(nbrs)):
            u = nbrs[ui]
            for wi in range(ui + 1, len(nbrs)):
                w = nbrs[wi]
                if u in adj[w]:
                    emit([u, v, w])
                    continue
                # grow induced paths u - v - w - ... through vertices > v
                stack = [[u, v, w]]
                while stack:
                    path = stack.pop()
                    last = path[-1]
                    blocked = set(path[1:-1])
                    for x in sorted(adj[last]):
                        if x <= v or x in path:
                            continue
                        if any(x in adj[p] for p in blocked):
                            continue
                        if x in adj[u]:
                            emit(path + [x])
                        else:
                            stack.append(path + [x])

    found.sort(key=lambda c: (c.length, c.edges))
    return tuple(found)


@dataclass(frozen=True)
class CiVerdict:
    """is_ci is true iff no two chordless cycles share more than one edge;
    witness names an offending pair otherwise."""

    is_ci: bool
    witness: Optional[tuple[Cycle, Cycle, tuple[int, ...]]] = None


def is_ci_graph(g: Graph, cap: int = CYCLE_CAP_DEFAULT) -> CiVerdict:
    """The combinatorial complete-intersection test. Bipartite input only."""
    if is_bipartite(g) is None:
        raise DomainError("is_ci_graph requires a bipartite graph")
    cycles = chordless_cycles(g, cap=cap)
    for i in range(len(cycles)):
        ei = cycles[i].edge_set()
        for j in range(i + 1, len(cycles)):
            shared = ei & cycles[j].edge_set()
            if len(shared) > 1:
                return CiVerdict(False, (cycles[i], cycles[j], tuple(sorted(shared))))
    return CiVerdict(True)


@dataclass(frozen=True)
class CountCheck:
    count: int
    bound: int

    @property
    def equal(self) -> bool:
        return self.count == self.bound


def chordless_count_check(g: Graph, cap: int = CYCLE_CAP_DEFAULT) -> CountCheck:
    """Compare the number of chordless cycles with e - v + 1 (connected g).

    The count can never be smaller; a violation would be an implementation
    bug and raises RuntimeError.
    """
    if not is_connected(g):
        raise DomainError("chordless_count_check requires a connected graph")
    count = len(chordless_cycles(g, cap=cap))
    bound = g.n_edges - g.n_vertices + 1
    if count < bound:
        raise RuntimeError("chordless cycle count fell below e - v + 1")
    return CountCheck(count, bound)


def _psi_products(edges: tuple[int, ...]) -> bool:
    """True when odd-position and even-position edge multisets differ,
    i.e. the walk's binomial is nonzero."""
    from collections import Counter

    return Counter(edges[0::2]) != Counter(edges[1::2])


def minimal_even_walks(g: Graph, max_len: int) -> tuple[Walk, ...]:
    """Minimal closed walks of even length <= max_len with a nonzero binomial,
    up to rotation and reversal.

    Walks whose odd- and even-position products coincide (this includes the
    doubled-edge "trivial" walks) are excluded: they carry no relation.
    """
    if max_len < 4 or max_len % 2:
        raise DomainError("max_len must be an even number >= 4")
    out: dict[tuple[int, ...], Walk] = {}
    for l in range(4, max_len + 1, 2):
        for walk in _walks_of_length(g, l):
            key = walk.canonical_edges()
            if key not in out:
                out[key] = walk
    walks = sorted(out.values(), key=lambda w: (w.length, w.canonical_edges()))
    return tuple(walks)


def _walks_of_length(g: Graph, l: int) -> Iterator[Walk]:
    """Minimal closed walks of exact length l with nonzero binomial, one
    representative per (start = smallest vertex on the walk) anchoring; the
    caller dedups rotations/reversals."""
    for s in g.vertices:
        dist = _bfs_dist(g, s)
        # vseq holds the vertex path, eseq the edge path
        stack: list[tuple[list[int], list[int]]] = [([s], [])]
        while stack:
            vseq, eseq = stack.pop()
            cur = vseq[-1]
            steps_left = l - len(eseq)
            if steps_left == 0:
                if cur == s and eseq[0] != eseq[-1] and _psi_products(tuple(eseq)):
                    yield Walk(tuple(eseq), tuple(vseq))
                continue
            for w, ei in g.adjacency[cur]:
                if w < s:
                    continue
                if eseq and ei == eseq[-1]:
                    continue
                if dist.get(w, l + 1) > steps_left - 1:
                    continue
                stack.append((vseq + [w], eseq + [ei]))


def _bfs_dist(g: Graph, s: int) -> dict[int, int]:
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for w, _ in g.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def smallest_even_walk_length(g: Graph, cap: Optional[int] = None) -> Optional[int]:
    """Length of the shortest minimal even closed walk with nonzero binomial,
    or None when the kernel ideal is zero (forests, single odd cycles).

    cap bounds the search length (default 2e + 2); hitting it while the
    height formula says a relation must exist raises ResourceCapError.
    """
    if cap is None:
        cap = 2 * g.n_edges + 2
    for l in range(4, cap + 1, 2):
        for _ in _walks_of_length(g, l):
            return l
    if height(g) > 0:
        raise ResourceCapError(
            f"no relation walk found up to length {cap} but the kernel is nonzero; "
            "raise the cap"
        )
    return None
