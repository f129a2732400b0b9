"""Pure-Python implementations of the two hot kernels.

These are the reference semantics; edgealg._core is a drop-in Cython
replacement selected at import time by edgealg._kernels. Both backends must
produce identical results (tests enforce parity).
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations_with_replacement

import numpy as np

BACKEND_NAME = "pure"


class Reducer:
    """Rewrite monomials modulo a growing list of binomial rows.

    Each row (plus, minus) rewrites any monomial divisible by plus, replacing
    that factor by minus. Rewriting strictly decreases the monomial in lex
    order (variable 0 most significant), so it terminates. Rows are scanned
    in insertion order and rewriting restarts from the first row after every
    hit, which makes normal forms deterministic for a fixed row list.
    """

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.plus_rows: list[tuple[int, ...]] = []
        self.minus_rows: list[tuple[int, ...]] = []
        self.masks: list[int] = []

    @staticmethod
    def _mask(m) -> int:
        mask = 0
        for i, e in enumerate(m):
            if e:
                mask |= 1 << i
        return mask

    @property
    def nrows(self) -> int:
        return len(self.plus_rows)

    def add_row(self, plus: tuple[int, ...], minus: tuple[int, ...]) -> None:
        self.plus_rows.append(tuple(plus))
        self.minus_rows.append(tuple(minus))
        self.masks.append(self._mask(plus))

    def nf(self, m: tuple[int, ...], skip: int = -1) -> tuple[int, ...]:
        cur = list(m)
        mask = self._mask(cur)
        n = self.nvars
        restart = True
        while restart:
            restart = False
            for r in range(len(self.plus_rows)):
                if r == skip:
                    continue
                if self.masks[r] & ~mask:
                    continue
                p = self.plus_rows[r]
                ok = True
                for i in range(n):
                    if p[i] > cur[i]:
                        ok = False
                        break
                if not ok:
                    continue
                q = self.minus_rows[r]
                for i in range(n):
                    cur[i] += q[i] - p[i]
                mask = self._mask(cur)
                restart = True
                break
        return tuple(cur)


def fiber_groups_exact(
    eu: list[int], ev: list[int], nv: int, degree: int, want_exponents: bool
):
    """Group all degree-`degree` edge monomials by their vertex multidegree
    and return the groups of size >= 2.

    Returns (keys, offsets, masks, exps):
      keys    int32 array (K, nv), sorted rows, one per nontrivial fiber
      offsets int64 array (K+1,) group boundaries into masks/exps
      masks   uint64 object-free support masks, one per member (ne <= 64)
              or None when ne > 64
      exps    int32 array (M, ne) member exponent vectors, or None unless
              want_exponents
    """
    ne = len(eu)
    counts: Counter = Counter()
    for combo in combinations_with_replacement(range(ne), degree):
        b = [0] * nv
        for e in combo:
            b[eu[e]] += 1
            b[ev[e]] += 1
        counts[tuple(b)] += 1
    dup = {k for k, c in counts.items() if c >= 2}
    groups: dict[tuple, list] = {k: [] for k in dup}
    if dup:
        for combo in combinations_with_replacement(range(ne), degree):
            b = [0] * nv
            for e in combo:
                b[eu[e]] += 1
                b[ev[e]] += 1
            key = tuple(b)
            if key in groups:
                groups[key].append(combo)
    keys = sorted(groups)
    offsets = [0]
    masks: list[int] = []
    exps: list[list[int]] = []
    for key in keys:
        for combo in groups[key]:
            x = [0] * ne
            mask = 0
            for e in combo:
                x[e] += 1
                mask |= 1 << e
            masks.append(mask)
            exps.append(x)
        offsets.append(len(masks))
    keys_arr = np.array(keys, dtype=np.int32).reshape(len(keys), nv)
    offsets_arr = np.array(offsets, dtype=np.int64)
    masks_arr = np.array(masks, dtype=np.uint64) if ne <= 64 else None
    exps_arr = (
        np.array(exps, dtype=np.int32).reshape(len(exps), ne)
        if want_exponents or ne > 64
        else None
    )
    return keys_arr, offsets_arr, masks_arr, exps_arr
