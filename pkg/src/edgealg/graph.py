"""Finite simple graphs with indexed edges.

The edge *index* is the identity used everywhere else in the package: edge i
of a graph corresponds to the polynomial variable e_{i+1}, and the monomial
order on edge variables is lex by index (e_1 > e_2 > ...), i.e. input order.
Parsing therefore preserves edge order exactly, and all derived graphs
(blocks, shrinks) keep the relative order of surviving edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .errors import DomainError, ParseError


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph with ordered vertices and indexed edges.

    vertices: vertex ids (non-negative ints) in a fixed order.
    edges: (u, v) pairs; index in this tuple is the edge id.
    No loops, no parallel edges.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen_v = set()
        for v in self.vertices:
            if v < 0:
                raise DomainError(f"negative vertex id {v}")
            if v in seen_v:
                raise DomainError(f"duplicate vertex id {v}")
            seen_v.add(v)
        seen_e = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if u not in seen_v or v not in seen_v:
                raise DomainError(f"edge ({u}, {v}) has an unknown endpoint")
            key = frozenset((u, v))
            if key in seen_e:
                raise DomainError(f"parallel edge ({u}, {v})")
            seen_e.add(key)

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[int, int]], vertices: Optional[Sequence[int]] = None
    ) -> "Graph":
        """Build a graph from an edge list; vertices default to first-appearance order."""
        edges = tuple((int(u), int(v)) for u, v in edges)
        if vertices is None:
            order: list[int] = []
            seen: set[int] = set()
            for u, v in edges:
                for w in (u, v):
                    if w not in seen:
                        seen.add(w)
                        order.append(w)
            vertices = order
        return cls(tuple(vertices), edges)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Mapping[int, tuple[tuple[int, int], ...]]:
        """vertex -> tuple of (neighbor, edge index), in edge-index order."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self.vertices}
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return {v: tuple(lst) for v, lst in adj.items()}

    @cached_property
    def edge_index(self) -> Mapping[frozenset, int]:
        return {frozenset(e): i for i, e in enumerate(self.edges)}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w, _ in self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edge_index


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: one edge per line, two whitespace-separated
    non-negative integers; '#' starts a comment; blank lines are skipped."""
    edges: list[tuple[int, int]] = []
    seen: set[frozenset] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(line_no, f"expected 2 vertex tokens, got {len(tokens)}")
        endpoints = []
        for tok in tokens:
            if not tok.isdigit():
                raise ParseError(line_no, f"not a non-negative integer: {tok!r}")
            endpoints.append(int(tok))
        u, v = endpoints
        if u == v:
            raise ParseError(line_no, f"loop at vertex {u}")
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(line_no, f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    if not edges:
        raise DomainError("empty edge list: the document contains no edges")
    return Graph.from_edges(edges)


def to_dot(g: Graph) -> str:
    """Emit Graphviz DOT, preserving edge order."""
    lines = ["graph {"]
    deg = {v: 0 for v in g.vertices}
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    for v in g.vertices:
        if deg[v] == 0:
            lines.append(f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Bipartition:
    """A proper 2-coloring. side_of maps every vertex to 0 or 1."""

    side_of: Mapping[int, int]

    @property
    def left(self) -> frozenset:
        return frozenset(v for v, s in self.side_of.items() if s == 0)

    @property
    def right(self) -> frozenset:
        return frozenset(v for v, s in self.side_of.items() if s == 1)


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """Return a Bipartition if g has no odd cycle, else None.

    Coloring is deterministic: each component is rooted at its first vertex
    in g.vertices order, root colored 0.
    """
    side: dict[int, int] = {}
    for root in g.vertices:
        if root in side:
            continue
        side[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for w, _ in g.adjacency[v]:
                if w not in side:
                    side[w] = side[v] ^ 1
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return Bipartition(side)


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of components, each in g.vertices order, components ordered
    by first vertex."""
    comp_of: dict[int, int] = {}
    n_comp = 0
    for root in g.vertices:
        if root in comp_of:
            continue
        comp_of[root] = n_comp
        stack = [root]
        while stack:
            v = stack.pop()
            for w, _ in g.adjacency[v]:
                if w not in comp_of:
                    comp_of[w] = n_comp
                    stack.append(w)
        n_comp += 1
    groups: list[list[int]] = [[] for _ in range(n_comp)]
    for v in g.vertices:
        groups[comp_of[v]].append(v)
    return tuple(tuple(grp) for grp in groups)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def krull_dim(g: Graph) -> int:
    """Krull dimension of the edge algebra: per component, v-1 if the
    component is bipartite else v; isolated vertices contribute 0."""
    total = 0
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        comp_set = set(comp)
        sub = Graph.from_edges(
            [e for e in g.edges if e[0] in comp_set], vertices=comp
        )
        total += len(comp) - 1 if is_bipartite(sub) is not None else len(comp)
    return total


def height(g: Graph) -> int:
    """Height of the toric kernel ideal: e(G) - krull_dim(G)."""
    return g.n_edges - krull_dim(g)


def blocks(g: Graph) -> tuple[Graph, ...]:
    """Biconnected components as edge-subgraphs; every edge of g lies in
    exactly one block (bridges become single-edge blocks).

    Each block keeps its edges in the relative order of g and reindexes them
    densely, so a block is a standalone Graph with its own induced lex order.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    timer = 0
    edge_stack: list[int] = []
    block_edge_sets: list[list[int]] = []

    for root in g.vertices:
        if root in disc:
            continue
        # iterative DFS; frames: (vertex, parent edge index, adjacency cursor)
        disc[root] = low[root] = timer
        timer += 1
        frames = [(root, -1, 0)]
        while frames:
            v, pe, cursor = frames[-1]
            adj = g.adjacency[v]
            if cursor < len(adj):
                frames[-1] = (v, pe, cursor + 1)
                w, ei = adj[cursor]
                if ei == pe:
                    continue
                if w not in disc:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append(ei)
                    frames.append((w, ei, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append(ei)
                    low[v] = min(low[v], disc[w])
            else:
                frames.pop()
                if frames:
                    parent = frames[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= disc[parent]:
                        # parent is an articulation point (or root): pop a block
                        blk: list[int] = []
                        while True:
                            ei = edge_stack.pop()
                            blk.append(ei)
                            if ei == pe:
                                break
                        block_edge_sets.append(blk)

    result = []
    for blk in block_edge_sets:
        idx = sorted(blk)
        result.append(Graph.from_edges([g.edges[i] for i in idx]))
    # deterministic order: by smallest original edge index
    order = sorted(range(len(block_edge_sets)), key=lambda k: min(block_edge_sets[k]))
    return tuple(result[k] for k in order)


def shrink_edge(g: Graph, i: int) -> Graph:
    """Contract edge i: remove it, identify its endpoints (the first endpoint
    survives), merge any parallel edges that arise, drop any loops."""
    if not 0 <= i < g.n_edges:
        raise DomainError(f"edge index {i} out of range")
    keep, gone = g.edges[i]
    new_edges: list[tuple[int, int]] = []
    seen: set[frozenset] = set()
    for j, (u, v) in enumerate(g.edges):
        if j == i:
            continue
        if u == gone:
            u = keep
        if v == gone:
            v = keep
        if u == v:
            continue
        key = frozenset((u, v))
        if key in seen:
            continue
        seen.add(key)
        new_edges.append((u, v))
    vertices = tuple(v for v in g.vertices if v != gone)
    return Graph(vertices, tuple(new_edges))


def triangle_count_at(g: Graph, i: int) -> int:
    """Number of triangles containing edge i (common neighbors of its endpoints)."""
    if not 0 <= i < g.n_edges:
        raise DomainError(f"edge index {i} out of range")
    u, v = g.edges[i]
    nu = set(g.neighbors(u))
    return sum(1 for w in g.neighbors(v) if w in nu)


@dataclass(frozen=True)
class PlanarityReport:
    """Certified planarity answer.

    planar: the verdict.
    embedding: for planar graphs, vertex -> clockwise neighbor order.
    witness_kind: for non-planar graphs, "K5" or "K33" (subdivision type).
    witness_edges: edges of the Kuratowski subgraph, as pairs from g.
    witness_branch_vertices: the 5 or 6 branch vertices of the subdivision.
    """

    planar: bool
    embedding: Optional[Mapping[int, tuple[int, ...]]] = None
    witness_kind: Optional[str] = None
    witness_edges: Optional[tuple[tuple[int, int], ...]] = None
    witness_branch_vertices: Optional[tuple[int, ...]] = None

    def check(self, g: Graph) -> bool:
        """Verify the certificate against g without re-running the planarity
        algorithm. For planar: the rotation system satisfies Euler's formula.
        For non-planar: the witness is a subgraph of g and smooths to K5/K33."""
        if self.planar:
            return _check_embedding(g, self.embedding)
        wg = Graph.from_edges(self.witness_edges)
        for u, v in wg.edges:
            if not g.has_edge(u, v):
                return False
        kind, branch = _classify_subdivision(wg)
        return kind == self.witness_kind and set(branch) == set(
            self.witness_branch_vertices
        )


def _check_embedding(g: Graph, rotation: Mapping[int, tuple[int, ...]]) -> bool:
    """Count faces by tracing the rotation system and check Euler's formula
    per connected component: v - e + f = 2 (faces of a component include the
    outer face; isolated vertices give v=1, f=1)."""
    for v in g.vertices:
        rot = rotation.get(v)
        if rot is None or set(rot) != set(g.neighbors(v)):
            return False
    for comp in connected_components(g):
        comp_set = set(comp)
        darts = set()
        for u, v in g.edges:
            if u in comp_set:
                darts.add((u, v))
                darts.add((v, u))
        e = len(darts) // 2
        faces = 0
        remaining = set(darts)
        while remaining:
            faces += 1
            start = min(remaining)
            cur = start
            while True:
                remaining.discard(cur)
                u, v = cur
                rot = rotation[v]
                k = rot.index(u)
                cur = (v, rot[(k + 1) % len(rot)])
                if cur == start:
                    break
        if e == 0:
            faces = 1
        if len(comp) - e + faces != 2:
            return False
    return True


def _classify_subdivision(wg: Graph) -> tuple[Optional[str], tuple[int, ...]]:
    """Smooth all degree-2 vertices of wg and recognize K5 or K33."""
    deg = {v: len(wg.neighbors(v)) for v in wg.vertices}
    branch = sorted(v for v in wg.vertices if deg[v] >= 3)
    if any(deg[v] not in (2, 3, 4) for v in wg.vertices):
        return None, tuple(branch)
    # walk from each branch vertex through degree-2 chains
    core_edges: set[frozenset] = set()
    for b in branch:
        for w0, _ in wg.adjacency[b]:
            prev, cur = b, w0
            while deg[cur] == 2:
                nxt = [x for x in wg.neighbors(cur) if x != prev]
                if not nxt:
                    return None, tuple(branch)
                prev, cur = cur, nxt[0]
            if cur == b:
                return None, tuple(branch)
            core_edges.add(frozenset((b, cur)))
    if len(branch) == 5 and all(deg[b] == 4 for b in branch):
        want = {frozenset(p) for p in _pairs(branch)}
        if core_edges == want:
            return "K5", tuple(branch)
    if len(branch) == 6 and all(deg[b] == 3 for b in branch):
        # try to split branch vertices into two sides of K33
        b0 = branch[0]
        side0 = {b0} | {x for x in branch if frozenset((b0, x)) not in core_edges}
        side1 = set(branch) - side0
        if len(side0) == 3 and len(side1) == 3:
            want = {frozenset((a, b)) for a in side0 for b in side1}
            if core_edges == want:
                return "K33", tuple(branch)
    return None, tuple(branch)


def _pairs(items):
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield items[i], items[j]


def is_planar(g: Graph) -> PlanarityReport:
    """Planarity with a certificate: an embedding (rotation system) when
    planar, otherwise a Kuratowski-subdivision witness."""
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    ok, cert = nx.check_planarity(G, counterexample=True)
    if ok:
        rotation = {
            v: tuple(cert.neighbors_cw_order(v)) if g.neighbors(v) else ()
            for v in g.vertices
        }
        return PlanarityReport(planar=True, embedding=rotation)
    witness = Graph.from_edges(tuple(cert.edges()))
    kind, branch = _classify_subdivision(witness)
    if kind is None:
        raise RuntimeError("planarity backend returned an unrecognizable witness")
    return PlanarityReport(
        planar=False,
        witness_kind=kind,
        witness_edges=witness.edges,
        witness_branch_vertices=branch,
    )
