"""Pure-difference binomials, walk relations, and a Buchberger engine.

Every ideal handled here is generated by differences of monomials. That
class is closed under S-polynomials and reduction, so the whole Groebner
layer works on exponent vectors alone; no coefficient arithmetic ever
appears. The monomial order is lex with variable 0 most significant, which
is plain tuple comparison on exponent vectors. Elimination orders are the
same order on a concatenated (vertex block, edge block) variable list.

The toric ideals of this package are prime and contain no monomials, so a
binomial may be replaced by its primitive part (common monomial factor
cancelled) without changing the ideal. The engine does this on every new
element; the Buchberger certificate still holds because the cancelled
remainder reduces to zero by its own primitive part.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from ._kernels import make_reducer
from .cycles import Cycle, Walk, chordless_cycles
from .errors import DomainError, ResourceCapError
from .graph import Graph, is_bipartite

DEGREE_CAP_DEFAULT = 24


def _orient(a: tuple[int, ...], b: tuple[int, ...]):
    """Cancel the common factor of a and b and order the sides so the first
    is lex-larger. Returns None for the zero binomial."""
    g = tuple(min(x, y) for x, y in zip(a, b))
    if any(g):
        a = tuple(x - y for x, y in zip(a, g))
        b = tuple(x - y for x, y in zip(b, g))
    if a == b:
        return None
    return (a, b) if a > b else (b, a)


@dataclass(frozen=True)
class Binomial:
    """plus - minus with plus lex-greater and supports disjoint."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise DomainError("side lengths differ")
        if self.plus <= self.minus:
            raise DomainError("plus side must be lex-greater than minus side")
        if any(p and m for p, m in zip(self.plus, self.minus)):
            raise DomainError("sides must have disjoint support")

    @classmethod
    def from_sides(cls, a: Sequence[int], b: Sequence[int]) -> Optional["Binomial"]:
        oriented = _orient(tuple(a), tuple(b))
        if oriented is None:
            return None
        return cls(*oriented)

    @property
    def nvars(self) -> int:
        return len(self.plus)

    @property
    def degree(self) -> int:
        return sum(self.plus)

    def to_json_dict(self) -> dict:
        return {
            "plus": {str(i): e for i, e in enumerate(self.plus) if e},
            "minus": {str(i): e for i, e in enumerate(self.minus) if e},
        }

    def render(self, prefix: str = "e") -> str:
        """Human form with 1-based variable labels, e.g. 'e1*e3 - e2*e4'."""

        def side(v: tuple[int, ...]) -> str:
            factors = []
            for i, e in enumerate(v):
                if not e:
                    continue
                factors.append(f"{prefix}{i + 1}" + (f"^{e}" if e > 1 else ""))
            return "*".join(factors) if factors else "1"

        return f"{side(self.plus)} - {side(self.minus)}"


@dataclass(frozen=True)
class BinomialBasis:
    """An ordered set of binomials in a common polynomial ring.

    nvars: number of variables (edge variables unless stated otherwise).
    reduced: the elements form the reduced Groebner basis.
    minimal: the elements form a minimal generating set.
    complete_through: when not None, the basis is only known complete up to
    this total degree (graded truncation).
    """

    nvars: int
    elements: tuple[Binomial, ...]
    reduced: bool = False
    minimal: bool = False
    complete_through: Optional[int] = None

    def __len__(self) -> int:
        return len(self.elements)

    def degrees(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for b in self.elements:
            out[b.degree] = out.get(b.degree, 0) + 1
        return out

    def to_json(self) -> list[dict]:
        return [b.to_json_dict() for b in self.elements]


def _sorted_elements(elements: Iterable[Binomial]) -> tuple[Binomial, ...]:
    return tuple(sorted(elements, key=lambda b: (b.degree, b.plus, b.minus)))


def psi(walk: Walk, nvars: int) -> Optional[Binomial]:
    """The walk relation: product of odd-position edges minus product of
    even-position edges, common factor cancelled, sides oriented.
    Returns None when the two products coincide (the zero relation)."""
    if not walk.closed or walk.length % 2:
        raise DomainError("psi needs a closed walk of even length")
    a = [0] * nvars
    b = [0] * nvars
    for pos, ei in enumerate(walk.edges):
        if pos % 2 == 0:
            a[ei] += 1
        else:
            b[ei] += 1
    return Binomial.from_sides(a, b)


def kernel_membership(b: Binomial, g: Graph) -> bool:
    """True iff both sides have the same image under e -> uv, i.e. equal
    vertex-degree vectors."""
    if b.nvars != g.n_edges:
        raise DomainError("binomial and graph variable counts differ")
    deg: dict[int, int] = {v: 0 for v in g.vertices}
    for i, (u, v) in enumerate(g.edges):
        d = b.plus[i] - b.minus[i]
        deg[u] += d
        deg[v] += d
    return all(x == 0 for x in deg.values())


def cycle_generators(g: Graph) -> BinomialBasis:
    """The chordless-cycle relations. For bipartite graphs these are exactly
    the minimal generators of the kernel ideal."""
    if is_bipartite(g) is None:
        raise DomainError("cycle_generators requires a bipartite graph")
    elements = []
    for c in chordless_cycles(g):
        rel = psi(c.as_walk(), g.n_edges)
        if rel is None:
            raise RuntimeError("cycle relation vanished; enumeration bug")
        elements.append(rel)
    return BinomialBasis(g.n_edges, _sorted_elements(elements), minimal=True)


class GradedEngine:
    """Buchberger for pure-difference binomial ideals, processing S-pairs in
    ascending (weighted) degree.

    The ideals here are homogeneous for the supplied weights, so running the
    pair queue through degree D yields a Groebner basis complete through D;
    running it dry yields a full GB. `cap` raises ResourceCapError when an
    S-pair exceeds it (set cap=None for no cap)."""

    def __init__(
        self,
        nvars: int,
        weights: Optional[tuple[int, ...]] = None,
        cap: Optional[int] = None,
    ):
        self.nvars = nvars
        self.weights = weights
        self.cap = cap
        self.elements: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        self._reducer = make_reducer(nvars)
        self._heap: list[tuple[int, int, int]] = []
        self._alive: set[tuple[int, int]] = set()

    def _wdeg(self, mono: tuple[int, ...]) -> int:
        if self.weights is None:
            return sum(mono)
        return sum(w * e for w, e in zip(self.weights, mono))

    def add_generator(self, a: Sequence[int], b: Sequence[int]) -> None:
        """Reduce a - b against the current basis and append if nonzero."""
        p = self._reducer.nf(tuple(a))
        m = self._reducer.nf(tuple(b))
        oriented = _orient(p, m)
        if oriented is None:
            return
        self._append(*oriented)

    def _append(self, p: tuple[int, ...], m: tuple[int, ...]) -> None:
        t = len(self.elements)
        lead_t = p
        # Gebauer-Moller update of the pair set
        lcms = {
            i: tuple(max(x, y) for x, y in zip(self.elements[i][0], lead_t))
            for i in range(t)
        }
        # drop old pairs strictly dominated by the new element
        for (i, j) in list(self._alive):
            lij = tuple(
                max(x, y) for x, y in zip(self.elements[i][0], self.elements[j][0])
            )
            if (
                all(a <= b for a, b in zip(lead_t, lij))
                and lcms[i] != lij
                and lcms[j] != lij
            ):
                self._alive.discard((i, j))
        # criteria M and F: minimal new lcms, one representative per lcm
        keep: list[int] = []
        for i in range(t):
            dominated = False
            for j in range(t):
                if j == i:
                    continue
                if lcms[j] == lcms[i]:
                    if j < i:
                        dominated = True
                        break
                    continue
                if all(a <= b for a, b in zip(lcms[j], lcms[i])):
                    dominated = True
                    break
            if not dominated:
                keep.append(i)
        # criterion B: drop coprime-lead pairs
        for i in keep:
            li = self.elements[i][0]
            if all(not (a and b) for a, b in zip(li, lead_t)):
                continue
            self._alive.add((i, t))
            heapq.heappush(self._heap, (self._wdeg(lcms[i]), i, t))
        self.elements.append((p, m))
        self._reducer.add_row(p, m)

    def run(self, through: Optional[int] = None) -> None:
        """Process pairs in degree order; stop after `through` when given."""
        while self._heap:
            wd, i, j = self._heap[0]
            if (i, j) not in self._alive:
                heapq.heappop(self._heap)
                continue
            if through is not None and wd > through:
                return
            if self.cap is not None and wd > self.cap:
                raise ResourceCapError(
                    f"S-pair of weighted degree {wd} exceeds the degree cap "
                    f"{self.cap}; raise max_degree"
                )
            heapq.heappop(self._heap)
            self._alive.discard((i, j))
            pi, mi = self.elements[i]
            pj, mj = self.elements[j]
            lcm = tuple(max(a, b) for a, b in zip(pi, pj))
            m1 = tuple(x + l - p for x, l, p in zip(mi, lcm, pi))
            m2 = tuple(x + l - p for x, l, p in zip(mj, lcm, pj))
            n1 = self._reducer.nf(m1)
            n2 = self._reducer.nf(m2)
            oriented = _orient(n1, n2)
            if oriented is not None:
                self._append(*oriented)

    def nf_binomial(self, a: Sequence[int], b: Sequence[int]):
        p = self._reducer.nf(tuple(a))
        m = self._reducer.nf(tuple(b))
        return _orient(p, m)

    def reduced_elements(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Minimal leads, then tail-reduced: the reduced Groebner basis of
        whatever the engine has completed."""
        order = sorted(
            range(len(self.elements)),
            key=lambda k: (self._wdeg(self.elements[k][0]), self.elements[k][0]),
        )
        kept: list[int] = []
        kept_leads: list[tuple[int, ...]] = []
        for k in order:
            lead = self.elements[k][0]
            if any(all(a <= b for a, b in zip(l, lead)) for l in kept_leads):
                continue
            kept.append(k)
            kept_leads.append(lead)
        final = make_reducer(self.nvars)
        for k in kept:
            final.add_row(*self.elements[k])
        out = []
        for k in kept:
            p, m = self.elements[k]
            m2 = final.nf(m)
            oriented = _orient(p, m2)
            if oriented is None or oriented[0] != p:
                raise RuntimeError("tail reduction broke a lead term")
            out.append(oriented)
        return out


def _engine_from(basis: BinomialBasis, cap: Optional[int]) -> GradedEngine:
    engine = GradedEngine(basis.nvars, cap=cap)
    for b in basis.elements:
        engine.add_generator(b.plus, b.minus)
    return engine


def buchberger(
    basis: BinomialBasis, max_degree: int = DEGREE_CAP_DEFAULT
) -> BinomialBasis:
    """Reduced Groebner basis of the ideal of `basis` under lex by variable
    index. Raises ResourceCapError if an S-pair exceeds max_degree."""
    engine = _engine_from(basis, cap=max_degree)
    engine.run()
    elements = [Binomial(p, m) for p, m in engine.reduced_elements()]
    return BinomialBasis(
        basis.nvars,
        _sorted_elements(elements),
        reduced=True,
        complete_through=basis.complete_through,
    )


def elimination_generators(
    g: Graph,
    max_degree: Optional[int] = None,
    cap: int = DEGREE_CAP_DEFAULT,
) -> BinomialBasis:
    """Reduced Groebner basis of the kernel ideal, for any graph, by
    eliminating vertex variables from the relations edge = u*v.

    Variables are ordered vertex block first (every vertex variable beats
    every edge variable), lex by position within each block, and the ideal
    is graded with vertex weight 1 and edge weight 2.

    max_degree, when given, truncates the computation at that edge degree:
    the result is then the reduced GB complete through max_degree
    (complete_through records this). Without max_degree the run is exact and
    `cap` (edge-degree units) guards against runaway growth by raising
    ResourceCapError.
    """
    nv, ne = g.n_vertices, g.n_edges
    n = nv + ne
    vpos = {v: k for k, v in enumerate(g.vertices)}
    weights = tuple([1] * nv + [2] * ne)
    if max_degree is not None:
        engine = GradedEngine(n, weights=weights, cap=None)
    else:
        engine = GradedEngine(n, weights=weights, cap=2 * cap)
    for i, (u, v) in enumerate(g.edges):
        a = [0] * n
        a[vpos[u]] += 1
        a[vpos[v]] += 1
        b = [0] * n
        b[nv + i] = 1
        engine.add_generator(a, b)
    engine.run(through=None if max_degree is None else 2 * max_degree)
    elements = []
    for p, m in engine.reduced_elements():
        if any(p[:nv]) or any(m[:nv]):
            continue
        elements.append(Binomial(p[nv:], m[nv:]))
    return BinomialBasis(
        ne,
        _sorted_elements(elements),
        reduced=True,
        complete_through=max_degree,
    )


def minimalize(basis: BinomialBasis, g: Optional[Graph] = None) -> BinomialBasis:
    """A minimal generating subset of a homogeneous binomial basis.

    Processes elements by ascending degree; an element is dropped exactly
    when it reduces to zero against the kept elements completed through its
    own degree. For graded ideals this realizes the degreewise minimal
    generator count, so the degrees multiset of the result is canonical.

    When the graph is supplied, every input element is checked to lie in
    its kernel ideal first.
    """
    if g is not None:
        for b in basis.elements:
            if not kernel_membership(b, g):
                raise DomainError(f"{b.render()} is not a kernel element")
    engine = GradedEngine(basis.nvars, cap=None)
    kept: list[Binomial] = []
    for b in sorted(basis.elements, key=lambda x: (x.degree, x.plus, x.minus)):
        engine.run(through=b.degree)
        if engine.nf_binomial(b.plus, b.minus) is None:
            continue
        kept.append(b)
        engine.add_generator(b.plus, b.minus)
        engine.run(through=b.degree)
    return BinomialBasis(
        basis.nvars,
        _sorted_elements(kept),
        minimal=True,
        complete_through=basis.complete_through,
    )


@dataclass(frozen=True)
class WalkMatch:
    binomial: Binomial
    walk: Optional[Walk]
    is_cycle: bool


@dataclass(frozen=True)
class WalkMatchReport:
    """For each Groebner basis element, a minimal even closed walk whose
    relation it is; all_cycles says every element came from a simple even
    cycle (expected whenever the graph has at most one odd cycle)."""

    matches: tuple[WalkMatch, ...]
    all_matched: bool
    all_cycles: bool


def groebner_walk_subset(g: Graph, gb: BinomialBasis) -> WalkMatchReport:
    """Realize each basis element as psi of a minimal even closed walk by
    building an alternating Euler circuit of its plus/minus edge multigraph."""
    matches = []
    for b in gb.elements:
        walk = _binomial_to_walk(g, b)
        is_cycle = False
        if walk is not None:
            rel = psi(walk, g.n_edges)
            if rel != b:
                walk = None
            else:
                is_cycle = len(set(walk.edges)) == walk.length and len(
                    set(walk.vertices[:-1])
                ) == walk.length
        matches.append(WalkMatch(b, walk, is_cycle))
    return WalkMatchReport(
        tuple(matches),
        all_matched=all(m.walk is not None for m in matches),
        all_cycles=all(m.walk is not None and m.is_cycle for m in matches),
    )


def _binomial_to_walk(g: Graph, b: Binomial) -> Optional[Walk]:
    """An alternating Euler circuit through the plus edges (odd positions)
    and minus edges (even positions), or None when the relation is not a
    single-walk relation (unbalanced or disconnected support)."""
    if not kernel_membership(b, g):
        return None
    tokens: list[tuple[int, int, int, int]] = []  # (edge index, u, v, color)
    for i, e in enumerate(b.plus):
        for _ in range(e):
            tokens.append((i, *g.edges[i], 0))
    for i, e in enumerate(b.minus):
        for _ in range(e):
            tokens.append((i, *g.edges[i], 1))
    verts = sorted({t[1] for t in tokens} | {t[2] for t in tokens})
    # connectivity of the union multigraph
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for _, u, v, _c in tokens:
        parent[find(u)] = find(v)
    if len({find(v) for v in verts}) != 1:
        return None

    # initial color-alternating pairing at every vertex
    inc: dict[int, tuple[list[int], list[int]]] = {v: ([], []) for v in verts}
    for tid, (_, u, v, c) in enumerate(tokens):
        inc[u][c].append(tid)
        inc[v][c].append(tid)
    partner: dict[tuple[int, int], int] = {}
    for v in verts:
        plus_inc, minus_inc = inc[v]
        if len(plus_inc) != len(minus_inc):
            return None
        for a, bb in zip(plus_inc, minus_inc):
            partner[(v, a)] = bb
            partner[(v, bb)] = a

    def trails():
        seen: set[int] = set()
        out = []
        for t0 in range(len(tokens)):
            if t0 in seen:
                continue
            trail = []
            t = t0
            v_at = tokens[t][2]  # traverse t0 from its u endpoint
            while True:
                seen.add(t)
                trail.append((t, v_at))
                t2 = partner[(v_at, t)]
                _, eu, ev, _c = tokens[t2]
                v_at = ev if eu == v_at else eu
                t = t2
                if t == t0 and v_at == tokens[t0][2]:
                    break
            out.append(trail)
        return out

    # Kotzig merge: two trails meeting at a vertex combine into one by
    # re-pairing their passages there. Same-color arrivals splice directly;
    # opposite-color arrivals splice one trail in reversed.
    ts = trails()
    while len(ts) > 1:
        arrivals: dict[int, tuple[int, int]] = {}
        pick = None
        for idx, trail in enumerate(ts):
            for t, v_at in trail:
                prev = arrivals.get(v_at)
                if prev is not None and prev[0] != idx:
                    pick = (v_at, prev[1], t)
                    break
                arrivals.setdefault(v_at, (idx, t))
            if pick:
                break
        if pick is None:
            return None
        v_m, ta, tb = pick
        pa, pb = partner[(v_m, ta)], partner[(v_m, tb)]
        if tokens[ta][3] == tokens[tb][3]:
            repair = ((ta, pb), (tb, pa))
        else:
            repair = ((ta, tb), (pa, pb))
        for x, y in repair:
            partner[(v_m, x)] = y
            partner[(v_m, y)] = x
        ts = trails()

    trail = ts[0]
    # rotate so a plus token sits first; the trail lists (token, arrival
    # vertex), so the walk starts at the first token's other endpoint
    start = next(k for k, (t, _) in enumerate(trail) if tokens[t][3] == 0)
    trail = trail[start:] + trail[:start]
    edges = tuple(tokens[t][0] for t, _ in trail)
    first = trail[0]
    u0 = tokens[first[0]][1] if tokens[first[0]][2] == first[1] else tokens[first[0]][2]
    vseq = [u0] + [v_at for _, v_at in trail]
    return Walk(edges, tuple(vseq))
