"""Hilbert functions of edge algebras and the h-vector prefix identity.

The Hilbert function of k[E]/K equals that of k[E]/in(K), so it is a count
of standard monomials: monomials divisible by no lead term of the reduced
Groebner basis. The h-vector is the finite transform h_i = sum of
(-1)^k C(d,k) H(i-k) with d the Krull dimension.

For a connected graph whose kernel is nonzero, writing L for half the
length of the shortest nontrivial even closed walk (equivalently the least
degree of a kernel element), the h-vector starts out as that of a
polynomial ring in e - d variables: h_i = C(e-d+i-1, e-d-1) for i < L, and
the deficit at degree L counts the degree-L minimal generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .binomial import buchberger, cycle_generators, elimination_generators
from .cycles import minimal_even_walks, smallest_even_walk_length
from .errors import DomainError
from .graph import Graph, is_bipartite, is_connected, krull_dim
from .oracle import minimal_generator_census


@dataclass(frozen=True)
class MonomialIdeal:
    """Generators of a monomial ideal, stored as an antichain."""

    generators: tuple[tuple[int, ...], ...]

    @classmethod
    def from_monomials(cls, monomials) -> "MonomialIdeal":
        monos = sorted(set(tuple(m) for m in monomials), key=lambda m: (sum(m), m))
        kept: list[tuple[int, ...]] = []
        for m in monos:
            if not any(all(a <= b for a, b in zip(k, m)) for k in kept):
                kept.append(m)
        return cls(tuple(kept))


@dataclass(frozen=True)
class HVector:
    """entries = (1, h_1, ..., h_max_deg); d = Krull dimension; L = half
    the shortest nontrivial even closed walk length, None when the kernel
    is zero."""

    d: int
    entries: tuple[int, ...]
    L: Optional[int]


def hilbert_function(
    ideal: MonomialIdeal, nvars: int, max_deg: int
) -> tuple[int, ...]:
    """H(i) = number of degree-i monomials in nvars variables divisible by
    no generator, for 0 <= i <= max_deg."""
    if max_deg < 0:
        raise DomainError("max_deg must be non-negative")
    gens = [g for g in ideal.generators if len(g) == nvars]
    if len(gens) != len(ideal.generators):
        raise DomainError("ideal generators must have nvars exponents")
    H = [0] * (max_deg + 1)

    def free_tail(used: int, nfree: int) -> None:
        for j in range(max_deg - used + 1):
            H[used + j] += comb(j + nfree - 1, nfree - 1)

    def rec(i: int, used: int, active: list[tuple[int, ...]]) -> None:
        if not active:
            if i == nvars:
                H[used] += 1
            else:
                free_tail(used, nvars - i)
            return
        if i == nvars:
            # a generator with all coordinates matched would have pruned
            H[used] += 1
            return
        budget = max_deg - used
        for a in range(budget + 1):
            child = []
            divisible = False
            for gvec in active:
                if gvec[i] > a:
                    continue
                if not any(gvec[j] for j in range(i + 1, nvars)):
                    divisible = True
                    break
                child.append(gvec)
            if not divisible:
                rec(i + 1, used + a, child)

    live = [g for g in gens if sum(g) <= max_deg]
    if any(sum(g) == 0 for g in live):
        return tuple(H)
    rec(0, 0, live)
    return tuple(H)


def kernel_groebner_basis(g: Graph):
    """Reduced GB of the kernel ideal: via cycle relations for bipartite
    input, via vertex elimination otherwise."""
    if is_bipartite(g) is not None:
        return buchberger(cycle_generators(g))
    return elimination_generators(g)


def h_vector(g: Graph, max_deg: int) -> HVector:
    """h-vector of the edge algebra of a connected graph, through degree
    max_deg."""
    if not is_connected(g):
        raise DomainError("h_vector requires a connected graph")
    gb = kernel_groebner_basis(g)
    ideal = MonomialIdeal.from_monomials(b.plus for b in gb.elements)
    H = hilbert_function(ideal, g.n_edges, max_deg)
    d = krull_dim(g)
    h = tuple(
        sum((-1) ** k * comb(d, k) * H[i - k] for k in range(min(i, d) + 1))
        for i in range(max_deg + 1)
    )
    length = smallest_even_walk_length(g)
    return HVector(d, h, None if length is None else length // 2)


@dataclass(frozen=True)
class HPrefixReport:
    """Checks that the h-vector opens like a free algebra's and that the
    first deviation counts the lowest-degree minimal generators.

    h: entries through degree L. expected_prefix: the binomial values for
    degrees < L. defect: C(e-d+L-1, e-d-1) - h_L. census_L: minimal
    generators of degree L by fiber census. walks_2L: nontrivial minimal
    closed walks of length 2L up to rotation and reversal, recorded for
    comparison without being asserted equal to the defect.
    """

    ok: bool
    L: int
    codim: int
    h: tuple[int, ...]
    expected_prefix: tuple[int, ...]
    defect: int
    census_L: int
    walks_2L: int
    mismatches: tuple[str, ...]


def verify_h_prefix(g: Graph) -> HPrefixReport:
    if not is_connected(g):
        raise DomainError("verify_h_prefix requires a connected graph")
    length = smallest_even_walk_length(g)
    if length is None:
        raise DomainError("the kernel is zero: no walk degree L to verify")
    L = length // 2
    codim = g.n_edges - krull_dim(g)
    hv = h_vector(g, L)
    expected = tuple(comb(codim + i - 1, codim - 1) for i in range(L))
    mismatches = [
        f"h_{i} = {hv.entries[i]}, expected C({codim + i - 1},{codim - 1}) = {e}"
        for i, e in enumerate(expected)
        if hv.entries[i] != e
    ]
    defect = comb(codim + L - 1, codim - 1) - hv.entries[L]
    census = minimal_generator_census(g, max_deg=L)
    census_L = census.degrees.get(L, 0)
    if defect != census_L:
        mismatches.append(
            f"defect {defect} at degree L={L} != {census_L} minimal generators"
        )
    walks = len(minimal_even_walks(g, length))
    return HPrefixReport(
        ok=not mismatches,
        L=L,
        codim=codim,
        h=hv.entries,
        expected_prefix=expected,
        defect=defect,
        census_L=census_L,
        walks_2L=walks,
        mismatches=tuple(mismatches),
    )
