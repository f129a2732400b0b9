"""Named example graphs with fixed vertex labelings.

gn(n): the wheel-of-squares family. Vertices x=1, y=2, u_i=2i+1, v_i=2i+2.
Edges in order: (x,y), then (x,u_1)..(x,u_n), (y,v_1)..(y,v_n),
(u_1,v_1)..(u_n,v_n). Bipartite with n chordless squares x-u_i-v_i-y and
e - v + 1 = n, so its edge algebra is a complete intersection for every n.

hn(n): gn(n) minus the edge (x,y). The squares open up and the chordless
cycles become the C(n,2) hexagons x-u_i-v_i-y-v_j-u_j, while the height
drops to e - v + 1 = n - 1, so the edge algebra is far from a complete
intersection once n >= 3.

cube(): the 3-cube graph on vertices 1..8 with the edge labeling
e1=(1,2), e2=(1,4), e3=(1,5), e4=(2,3), e5=(2,6), e6=(3,4), e7=(3,7),
e8=(4,8), e9=(5,6), e10=(8,5), e11=(6,7), e12=(7,8). Ten chordless cycles
(six squares, four hexagons); its reduced lex Groebner basis has 14
elements.

octagon(): an 8-cycle on vertices 1..8 with a pendant triangle on each odd
corner (apexes 9..16): 16 vertices, 20 edges, Eulerian and non-bipartite.
Its kernel has twenty minimal generators, topping out at the degree-10
relation of the Euler circuit.

remark(): a 3-regular non-bipartite graph on 8 vertices and 12 edges whose
edge algebra is a complete intersection although the graph is not planar
(it contains a K_{3,3} subdivision: branch vertices 1, 2, 6 and 4, 5, 7,
with 8 subdividing 2-7 and 3 subdividing 6-5).
"""

from __future__ import annotations

from .errors import DomainError
from .graph import Graph


def gn(n: int) -> Graph:
    if n < 1:
        raise DomainError("gn requires n >= 1")
    edges = [(1, 2)]
    edges += [(1, 2 * i + 1) for i in range(1, n + 1)]
    edges += [(2, 2 * i + 2) for i in range(1, n + 1)]
    edges += [(2 * i + 1, 2 * i + 2) for i in range(1, n + 1)]
    return Graph.from_edges(edges)


def hn(n: int) -> Graph:
    if n < 1:
        raise DomainError("hn requires n >= 1")
    return Graph.from_edges(gn(n).edges[1:])


def cube() -> Graph:
    return Graph.from_edges(
        [
            (1, 2),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 6),
            (3, 4),
            (3, 7),
            (4, 8),
            (5, 6),
            (8, 5),
            (6, 7),
            (7, 8),
        ]
    )


def octagon() -> Graph:
    rim = [(i, i + 1) for i in range(1, 8)] + [(8, 1)]
    triangles = []
    for k, corner in enumerate((1, 3, 5, 7)):
        a, b = 9 + 2 * k, 10 + 2 * k
        triangles += [(corner, a), (corner, b), (a, b)]
    return Graph.from_edges(rim + triangles)


def remark() -> Graph:
    return Graph.from_edges(
        [
            (1, 4),
            (1, 5),
            (1, 7),
            (2, 4),
            (2, 5),
            (2, 8),
            (8, 7),
            (6, 4),
            (6, 3),
            (3, 5),
            (6, 7),
            (3, 8),
        ]
    )


FAMILIES = {
    "gn": (gn, True),
    "hn": (hn, True),
    "cube": (cube, False),
    "octagon": (octagon, False),
    "remark": (remark, False),
}


def generate(family: str, n: int | None = None) -> Graph:
    if family not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise DomainError(f"unknown family {family!r}; known: {known}")
    fn, wants_n = FAMILIES[family]
    if wants_n:
        if n is None:
            raise DomainError(f"family {family!r} needs n")
        return fn(n)
    if n is not None:
        raise DomainError(f"family {family!r} takes no n")
    return fn()
