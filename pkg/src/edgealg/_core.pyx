# cython: boundscheck=False, wraparound=False, initializedcheck=False
# distutils: language = c++
"""Compiled kernels: monomial normal forms and fiber enumeration.

Drop-in replacement for edgealg._kernels_pure, selected by edgealg._kernels.
Semantics must match the pure versions exactly; tests enforce parity.
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libcpp.algorithm cimport sort as cpp_sort
from libcpp.map cimport map as cppmap
from libcpp.pair cimport pair
from libcpp.vector cimport vector

import numpy as np

ctypedef unsigned long long ull
ctypedef pair[ull, ull] keypair
ctypedef long long i64

BACKEND_NAME = "compiled"


cdef class Reducer:
    """Rewrite monomials modulo binomial rows; see the pure version for the
    contract. Supports up to 64 variables (dispatch enforces this)."""

    cdef int nvars
    cdef vector[i64] plusf
    cdef vector[i64] minusf
    cdef vector[ull] masks

    def __init__(self, int nvars):
        if nvars > 64:
            raise ValueError("compiled reducer supports at most 64 variables")
        self.nvars = nvars

    @property
    def nrows(self):
        return self.masks.size()

    def add_row(self, plus, minus):
        cdef int i
        cdef i64 e
        cdef ull mask = 0
        for i in range(self.nvars):
            e = plus[i]
            self.plusf.push_back(e)
            if e:
                mask |= (<ull>1) << i
        for i in range(self.nvars):
            self.minusf.push_back(minus[i])
        self.masks.push_back(mask)

    def nf(self, m, int skip=-1):
        cdef int n = self.nvars
        cdef vector[i64] cur
        cdef int i, r
        cdef int nrows = <int>self.masks.size()
        cdef ull mask = 0
        cdef bint hit, ok
        cdef const i64* prow
        cdef const i64* qrow
        cur.resize(n)
        for i in range(n):
            cur[i] = m[i]
            if cur[i]:
                mask |= (<ull>1) << i
        hit = True
        while hit:
            hit = False
            for r in range(nrows):
                if r == skip:
                    continue
                if self.masks[r] & ~mask:
                    continue
                prow = &self.plusf[r * n]
                ok = True
                for i in range(n):
                    if prow[i] > cur[i]:
                        ok = False
                        break
                if not ok:
                    continue
                qrow = &self.minusf[r * n]
                mask = 0
                for i in range(n):
                    cur[i] += qrow[i] - prow[i]
                    if cur[i]:
                        mask |= (<ull>1) << i
                hit = True
                break
        return tuple(cur[i] for i in range(n))


cdef inline bint _kp_less(keypair a, keypair b) noexcept:
    if a.first != b.first:
        return a.first < b.first
    return a.second < b.second


cdef bint _in_dups(const vector[keypair]* dups, keypair kp) noexcept:
    cdef size_t lo = 0, hi = dups.size(), mid
    while lo < hi:
        mid = (lo + hi) // 2
        if _kp_less(deref(dups)[mid], kp):
            lo = mid + 1
        else:
            hi = mid
    if lo >= dups.size():
        return False
    return deref(dups)[lo].first == kp.first and deref(dups)[lo].second == kp.second


cdef void _scan(int i, int rem, int ne, int nv, const int* eu, const int* ev,
                const int* word, const int* shift,
                ull* key, int* x,
                vector[keypair]* keys_out,
                const vector[keypair]* dups,
                vector[ull]* mem_mask, vector[int]* mem_exp,
                cppmap[keypair, vector[int]]* groups,
                long* member_counter, bint want_exponents) noexcept:
    cdef int k, j
    cdef keypair kp
    cdef ull mask
    if i == ne - 1:
        x[i] = rem
        key[word[2 * i]] += (<ull>rem) << shift[2 * i]
        key[word[2 * i + 1]] += (<ull>rem) << shift[2 * i + 1]
        kp = keypair(key[0], key[1])
        if keys_out != NULL:
            keys_out.push_back(kp)
        elif _in_dups(dups, kp):
            mask = 0
            for j in range(ne):
                if x[j]:
                    mask |= (<ull>1) << j
            mem_mask.push_back(mask)
            if want_exponents:
                for j in range(ne):
                    mem_exp.push_back(x[j])
            deref(groups)[kp].push_back(<int>member_counter[0])
            member_counter[0] += 1
        key[word[2 * i]] -= (<ull>rem) << shift[2 * i]
        key[word[2 * i + 1]] -= (<ull>rem) << shift[2 * i + 1]
        x[i] = 0
        return
    for k in range(rem + 1):
        x[i] = k
        key[word[2 * i]] += (<ull>k) << shift[2 * i]
        key[word[2 * i + 1]] += (<ull>k) << shift[2 * i + 1]
        _scan(i + 1, rem - k, ne, nv, eu, ev, word, shift, key, x,
              keys_out, dups, mem_mask, mem_exp, groups,
              member_counter, want_exponents)
        key[word[2 * i]] -= (<ull>k) << shift[2 * i]
        key[word[2 * i + 1]] -= (<ull>k) << shift[2 * i + 1]
    x[i] = 0


def fiber_groups_exact(eu_list, ev_list, int nv, int degree, bint want_exponents):
    """Same contract as the pure version, for ne <= 64 and packable keys."""
    cdef int ne = len(eu_list)
    if ne > 64 or ne == 0:
        raise ValueError("compiled fiber kernel needs 1..64 edges")
    cdef int bits = max(2, int(2 * degree).bit_length())
    cdef int fields_per_word = 64 // bits
    if nv > 2 * fields_per_word:
        raise ValueError("multidegree does not fit the packed key")

    cdef vector[int] eu_v, ev_v, word_v, shift_v
    cdef int i, p
    for i in range(ne):
        eu_v.push_back(eu_list[i])
        ev_v.push_back(ev_list[i])
    # per-edge endpoint field positions, interleaved (u, v)
    for i in range(ne):
        for p in (eu_list[i], ev_list[i]):
            word_v.push_back(p // fields_per_word)
            shift_v.push_back((p % fields_per_word) * bits)

    cdef vector[keypair] keys
    cdef vector[int] x_v
    x_v.resize(ne)
    cdef ull key[2]
    key[0] = 0
    key[1] = 0

    _scan(0, degree, ne, nv, &eu_v[0], &ev_v[0], &word_v[0], &shift_v[0],
          key, &x_v[0], &keys, NULL, NULL, NULL, NULL, NULL, False)

    cpp_sort(keys.begin(), keys.end())
    cdef vector[keypair] dups
    cdef size_t a = 0, b
    while a < keys.size():
        b = a + 1
        while b < keys.size() and keys[b] == keys[a]:
            b += 1
        if b - a >= 2:
            dups.push_back(keys[a])
        a = b
    keys.clear()
    keys.shrink_to_fit()

    cdef cppmap[keypair, vector[int]] groups
    cdef vector[ull] mem_mask
    cdef vector[int] mem_exp
    cdef long member_counter = 0
    if dups.size() > 0:
        key[0] = 0
        key[1] = 0
        _scan(0, degree, ne, nv, &eu_v[0], &ev_v[0], &word_v[0], &shift_v[0],
              key, &x_v[0], NULL, &dups, &mem_mask, &mem_exp, &groups,
              &member_counter, want_exponents)

    cdef long K = groups.size()
    cdef long M = member_counter
    keys_arr = np.empty((K, nv), dtype=np.int32)
    offsets_arr = np.empty(K + 1, dtype=np.int64)
    masks_arr = np.empty(M, dtype=np.uint64)
    exps_arr = np.empty((M, ne), dtype=np.int32) if want_exponents else None
    cdef int[:, :] keys_mv = keys_arr
    cdef i64[:] off_mv = offsets_arr
    cdef ull[:] masks_mv = masks_arr
    cdef int[:, :] exps_mv
    if want_exponents:
        exps_mv = exps_arr

    cdef cppmap[keypair, vector[int]].iterator it = groups.begin()
    cdef long row = 0, pos = 0
    cdef long mem
    cdef size_t t
    cdef ull hi, lo, field_mask = ((<ull>1) << bits) - 1
    cdef int w, s, j
    off_mv[0] = 0
    while it != groups.end():
        hi = deref(it).first.first
        lo = deref(it).first.second
        for p in range(nv):
            w = p // fields_per_word
            s = (p % fields_per_word) * bits
            if w == 0:
                keys_mv[row, p] = <int>((hi >> s) & field_mask)
            else:
                keys_mv[row, p] = <int>((lo >> s) & field_mask)
        for t in range(deref(it).second.size()):
            mem = deref(it).second[t]
            masks_mv[pos] = mem_mask[mem]
            if want_exponents:
                for j in range(ne):
                    exps_mv[pos, j] = mem_exp[mem * ne + j]
            pos += 1
        row += 1
        off_mv[row] = pos
        inc(it)
    return keys_arr, offsets_arr, masks_arr, exps_arr
