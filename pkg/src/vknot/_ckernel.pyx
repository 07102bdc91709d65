# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled polynomial kernels (same contract as ``_pykernel``).

Coefficients are int64 with checked arithmetic; any overflow raises
OverflowError and the caller reruns the operation on the big-int fallback.
"""

from libc.stdint cimport int64_t
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp.map cimport map as cmap
from libcpp.unordered_map cimport unordered_map
from libcpp.algorithm cimport sort
from cython.operator cimport dereference as deref, preincrement as inc, predecrement as dec

from .errors import NotDivisible

cdef extern from *:
    """
    static inline int vk_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int vk_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int vk_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint vk_mul_ovf(long long a, long long b, long long *r) nogil
    bint vk_add_ovf(long long a, long long b, long long *r) nogil
    bint vk_sub_ovf(long long a, long long b, long long *r) nogil

ctypedef long long i64
ctypedef pair[i64, i64] Term
ctypedef vector[Term] Poly

cdef enum:
    BASE = 2097152
    HALF = 1048576


cdef inline void unpack(i64 key, i64* g, i64* s, i64* t) noexcept nogil:
    cdef i64 tt = (key + HALF) % BASE
    if tt < 0:
        tt += BASE
    tt -= HALF
    cdef i64 rest = (key - tt) // BASE
    cdef i64 ss = (rest + HALF) % BASE
    if ss < 0:
        ss += BASE
    ss -= HALF
    t[0] = tt
    s[0] = ss
    g[0] = (rest - ss) // BASE


cdef Poly to_poly(dict d) except *:
    cdef Poly p
    p.reserve(len(d))
    for k, c in d.items():
        p.push_back(Term(<i64>k, <i64>c))
    sort(p.begin(), p.end())
    return p


cdef dict from_poly(const Poly& p):
    cdef dict out = {}
    cdef size_t i
    for i in range(p.size()):
        out[p[i].first] = p[i].second
    return out


cdef Poly cmul(const Poly& a, const Poly& b) except *:
    cdef Poly out
    cdef size_t i, j
    cdef i64 prod, acc
    if a.size() == 0 or b.size() == 0:
        return out
    if b.size() == 1:
        out.reserve(a.size())
        for i in range(a.size()):
            if vk_mul_ovf(a[i].second, b[0].second, &prod):
                raise OverflowError("int64 coefficient overflow")
            out.push_back(Term(a[i].first + b[0].first, prod))
        return out
    if a.size() == 1:
        return cmul(b, a)
    cdef unordered_map[i64, i64] acc_map
    acc_map.reserve(a.size() * b.size())
    for i in range(a.size()):
        for j in range(b.size()):
            if vk_mul_ovf(a[i].second, b[j].second, &prod):
                raise OverflowError("int64 coefficient overflow")
            acc = acc_map[a[i].first + b[j].first]
            if vk_add_ovf(acc, prod, &acc):
                raise OverflowError("int64 coefficient overflow")
            acc_map[a[i].first + b[j].first] = acc
    cdef unordered_map[i64, i64].iterator it = acc_map.begin()
    while it != acc_map.end():
        if deref(it).second != 0:
            out.push_back(Term(deref(it).first, deref(it).second))
        inc(it)
    sort(out.begin(), out.end())
    return out


cdef Poly csub(const Poly& a, const Poly& b) except *:
    cdef Poly out
    cdef size_t i = 0, j = 0
    cdef i64 v
    out.reserve(a.size() + b.size())
    while i < a.size() and j < b.size():
        if a[i].first < b[j].first:
            out.push_back(a[i])
            i += 1
        elif b[j].first < a[i].first:
            if b[j].second == -9223372036854775807 - 1:
                raise OverflowError("int64 coefficient overflow")
            out.push_back(Term(b[j].first, -b[j].second))
            j += 1
        else:
            if vk_sub_ovf(a[i].second, b[j].second, &v):
                raise OverflowError("int64 coefficient overflow")
            if v != 0:
                out.push_back(Term(a[i].first, v))
            i += 1
            j += 1
    while i < a.size():
        out.push_back(a[i])
        i += 1
    while j < b.size():
        if b[j].second == -9223372036854775807 - 1:
            raise OverflowError("int64 coefficient overflow")
        out.push_back(Term(b[j].first, -b[j].second))
        j += 1
    return out


cdef Poly cneg(const Poly& a) except *:
    cdef Poly out
    cdef size_t i
    out.reserve(a.size())
    for i in range(a.size()):
        if a[i].second == -9223372036854775807 - 1:
            raise OverflowError("int64 coefficient overflow")
        out.push_back(Term(a[i].first, -a[i].second))
    return out


cdef void exp_box(const Poly& p, i64* lo, i64* hi) noexcept:
    cdef i64 e[3]
    cdef size_t i
    cdef int v
    for v in range(3):
        lo[v] = 9223372036854775807
        hi[v] = -9223372036854775807
    for i in range(p.size()):
        unpack(p[i].first, &e[0], &e[1], &e[2])
        for v in range(3):
            if e[v] < lo[v]:
                lo[v] = e[v]
            if e[v] > hi[v]:
                hi[v] = e[v]


cdef Poly cdiv_exact(const Poly& a, const Poly& b) except *:
    cdef Poly q
    cdef size_t i
    cdef i64 qc, qk, kk, prod, v
    cdef i64 alo[3]
    cdef i64 ahi[3]
    cdef i64 blo[3]
    cdef i64 bhi[3]
    cdef i64 e[3]
    cdef int w
    if b.size() == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.size() == 0:
        return q
    if b.size() == 1:
        q.reserve(a.size())
        for i in range(a.size()):
            if a[i].second % b[0].second != 0:
                raise NotDivisible("coefficient not divisible")
            q.push_back(Term(a[i].first - b[0].first, a[i].second // b[0].second))
        return q
    exp_box(a, alo, ahi)
    exp_box(b, blo, bhi)
    for w in range(3):
        alo[w] -= blo[w]
        ahi[w] -= bhi[w]
        if alo[w] > ahi[w]:
            raise NotDivisible("exponent ranges incompatible")
    cdef i64 lead_k = b[b.size() - 1].first
    cdef i64 lead_c = b[b.size() - 1].second
    cdef cmap[i64, i64] rem
    for i in range(a.size()):
        rem[a[i].first] = a[i].second
    cdef cmap[i64, i64].iterator it
    while not rem.empty():
        it = rem.end()
        dec(it)
        qk = deref(it).first - lead_k
        if deref(it).second % lead_c != 0:
            raise NotDivisible("coefficient not divisible")
        qc = deref(it).second // lead_c
        rem.erase(it)
        unpack(qk, &e[0], &e[1], &e[2])
        for w in range(3):
            if e[w] < alo[w] or e[w] > ahi[w]:
                raise NotDivisible("quotient term leaves the admissible exponent box")
        q.push_back(Term(qk, qc))
        for i in range(b.size() - 1):
            kk = qk + b[i].first
            if vk_mul_ovf(qc, b[i].second, &prod):
                raise OverflowError("int64 coefficient overflow")
            it = rem.find(kk)
            if it == rem.end():
                if vk_sub_ovf(0, prod, &v):
                    raise OverflowError("int64 coefficient overflow")
                rem[kk] = v
            else:
                if vk_sub_ovf(deref(it).second, prod, &v):
                    raise OverflowError("int64 coefficient overflow")
                if v == 0:
                    rem.erase(it)
                else:
                    deref(it).second = v
    sort(q.begin(), q.end())
    return q


def mul(dict a, dict b):
    return from_poly(cmul(to_poly(a), to_poly(b)))


def div_exact(dict a, dict b):
    return from_poly(cdiv_exact(to_poly(a), to_poly(b)))


def det_bareiss(list rows):
    cdef size_t n = len(rows)
    cdef size_t i, j, k, best
    cdef vector[vector[Poly]] m
    cdef Poly num, prev, pivot, out
    cdef bint negate = False, have_prev = False
    if n == 0:
        return {0: 1}
    m.resize(n)
    for i in range(n):
        row = rows[i]
        if len(row) != n:
            raise ValueError("matrix is not square")
        m[i].resize(n)
        for j in range(n):
            m[i][j] = to_poly(row[j])
    for k in range(n - 1):
        best = n
        for i in range(k, n):
            if m[i][k].size() != 0 and (best == n or m[i][k].size() < m[best][k].size()):
                best = i
        if best == n:
            return {}
        if best != k:
            m[k].swap(m[best])
            negate = not negate
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                if m[i][k].size() != 0 and m[k][j].size() != 0:
                    num = cmul(m[i][k], m[k][j])
                    if m[i][j].size() != 0:
                        num = csub(cmul(pivot, m[i][j]), num)
                    else:
                        num = cneg(num)
                elif m[i][j].size() != 0:
                    num = cmul(pivot, m[i][j])
                else:
                    continue
                if have_prev:
                    m[i][j] = cdiv_exact(num, prev)
                else:
                    m[i][j] = num
            m[i][k].clear()
        prev = pivot
        have_prev = True
    out = m[n - 1][n - 1]
    if negate:
        out = cneg(out)
    return from_poly(out)
