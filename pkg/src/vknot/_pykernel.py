"""Pure-Python polynomial kernels.

Polynomials are plain dicts ``{key: coeff}`` where ``key`` packs the
exponent triple (e_G, e_s, e_t) into one integer::

    key = e_G * BASE**2 + e_s * BASE + e_t

with |e_s|, |e_t| < HALF.  Adding keys adds exponents, and integer order on
keys is lexicographic order on (e_G, e_s, e_t).  Zero coefficients are never
stored.  The compiled kernel in ``_ckernel.pyx`` implements the same three
entry points (``mul``, ``div_exact``, ``det_bareiss``) on the same layout.
"""

import heapq

from .errors import NotDivisible

BASE = 1 << 21
HALF = 1 << 20
ONE = {0: 1}


def pack(g, s, t):
    return (g * BASE + s) * BASE + t


def unpack(key):
    t = (key + HALF) % BASE - HALF
    rest = (key - t) // BASE
    s = (rest + HALF) % BASE - HALF
    return (rest - s) // BASE, s, t


def mul(a, b):
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        ((kb, cb),) = b.items()
        if cb == 1:
            return {ka + kb: ca for ka, ca in a.items()}
        return {ka + kb: ca * cb for ka, ca in a.items()}
    out = {}
    get = out.get
    items = list(a.items())
    for kb, cb in b.items():
        for ka, ca in items:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def sub(a, b):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            del out[k]
    return out


def _box(p):
    """Per-variable (min, max) exponent ranges of a nonzero polynomial."""
    exps = [unpack(k) for k in p]
    return [(min(e[i] for e in exps), max(e[i] for e in exps)) for i in range(3)]


def div_exact(a, b):
    """Return q with b*q == a, or raise NotDivisible.

    Leading-term elimination under the packed (lex) order.  If b divides a,
    each variable's exponent range of the quotient is pinned by the ranges
    of a and b, so any candidate quotient term outside that box proves
    non-divisibility; this also bounds the loop in the Laurent setting,
    where lex order is not a well-order.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    if len(b) == 1:
        ((kb, cb),) = b.items()
        out = {}
        for k, c in a.items():
            qc, r = divmod(c, cb)
            if r:
                raise NotDivisible("coefficient not divisible")
            out[k - kb] = qc
        return out

    box = [(lo_a - lo_b, hi_a - hi_b) for (lo_a, hi_a), (lo_b, hi_b) in zip(_box(a), _box(b))]
    if any(lo > hi for lo, hi in box):
        raise NotDivisible("exponent ranges incompatible")
    (glo, ghi), (slo, shi), (tlo, thi) = box

    lead_k = max(b)
    lead_c = b[lead_k]
    tail = [(k, c) for k, c in b.items() if k != lead_k]

    rem = dict(a)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    q = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, 0)
        if not c:
            continue
        qk = k - lead_k
        g, s, t = unpack(qk)
        if not (glo <= g <= ghi and slo <= s <= shi and tlo <= t <= thi):
            raise NotDivisible("quotient term leaves the admissible exponent box")
        qc, r = divmod(c, lead_c)
        if r:
            raise NotDivisible("coefficient not divisible")
        q[qk] = qc
        for kb, cb in tail:
            kk = qk + kb
            old = rem.get(kk)
            v = (old or 0) - qc * cb
            if v:
                if old is None:
                    heapq.heappush(heap, -kk)
                rem[kk] = v
            elif old is not None:
                del rem[kk]
    return q


def det_bareiss(rows):
    """Fraction-free Bareiss determinant of a square matrix of dict polys.

    ``rows`` is not modified.  Pivot rows are chosen by fewest terms among
    the candidates, which keeps intermediate minors small on sparse input.
    """
    n = len(rows)
    if n == 0:
        return dict(ONE)
    m = [list(r) for r in rows]
    negate = False
    prev = ONE
    for k in range(n - 1):
        best = None
        for i in range(k, n):
            p = m[i][k]
            if p and (best is None or len(p) < len(m[best][k])):
                best = i
        if best is None:
            return {}
        if best != k:
            m[k], m[best] = m[best], m[k]
            negate = not negate
        rowk = m[k]
        pivot = rowk[k]
        for i in range(k + 1, n):
            rowi = m[i]
            a = rowi[k]
            for j in range(k + 1, n):
                x = rowi[j]
                y = rowk[j]
                if a and y:
                    num = mul(a, y)
                    num = sub(mul(pivot, x), num) if x else {kk: -c for kk, c in num.items()}
                elif x:
                    num = mul(pivot, x)
                else:
                    continue
                rowi[j] = num if prev is ONE else div_exact(num, prev)
            rowi[k] = {}
        prev = pivot
    out = m[n - 1][n - 1]
    if negate:
        out = {k: -c for k, c in out.items()}
    return dict(out)
