"""Pure-Python sparse polynomial kernels.

Polynomials are plain dicts mapping exponent tuples to nonzero ``mpq``
coefficients. Monomial orders are passed as ``(code, k)`` pairs so the
compiled twin in ``_ckernels.pyx`` can share the exact same signatures.
"""

from heapq import heapify, heappop, heappush

LEX = 0
GREVLEX = 1
BLOCK = 2


def sort_key(order):
    """Return a key function under which ascending sort = descending monomials."""
    code, k = order
    if code == LEX:
        return lambda m: tuple([-e for e in m])
    if code == GREVLEX:
        return lambda m: (-sum(m),) + m[::-1]
    if code == BLOCK:
        def key(m):
            tail = m[k:]
            return tuple([-e for e in m[:k]]) + (-sum(tail),) + tail[::-1]
        return key
    raise ValueError(f"unknown order code {code}")


def leading_monomial(p, order):
    return min(p, key=sort_key(order))


def add(p, q):
    r = dict(p)
    for m, c in q.items():
        v = r.get(m)
        if v is None:
            r[m] = c
        else:
            v += c
            if v:
                r[m] = v
            else:
                del r[m]
    return r


def mul(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = {}
    for m2, c2 in q.items():
        for m1, c1 in p.items():
            m = tuple([a + b for a, b in zip(m1, m2)])
            v = r.get(m)
            if v is None:
                r[m] = c1 * c2
            else:
                v += c1 * c2
                if v:
                    r[m] = v
                else:
                    del r[m]
    return r


def mul_term(p, mono, coeff):
    return {tuple([a + b for a, b in zip(m, mono)]): c * coeff for m, c in p.items()}


def normal_form(p, divisors, order, full=True):
    """Multivariate division remainder of ``p``.

    ``divisors`` is a sequence of ``(lm, lc, poly)`` triples. The largest
    reducible term is always reduced first, by the first divisor whose
    leading monomial divides it. With ``full=False`` the division stops at
    the first irreducible leading term (top reduction).
    """
    key = sort_key(order)
    p = dict(p)
    heap = [(key(m), m) for m in p]
    heapify(heap)
    rem = {}
    while heap:
        m = heappop(heap)[1]
        c = p.get(m)
        if c is None:
            continue
        for lm, lc, g in divisors:
            for a, b in zip(m, lm):
                if a < b:
                    break
            else:
                q = tuple([a - b for a, b in zip(m, lm)])
                f = c / lc
                for gm, gc in g.items():
                    t = tuple([a + b for a, b in zip(gm, q)])
                    v = p.get(t)
                    if v is None:
                        p[t] = -f * gc
                        heappush(heap, (key(t), t))
                    else:
                        v -= f * gc
                        if v:
                            p[t] = v
                        else:
                            del p[t]
                break
        else:
            if not full:
                return p
            del p[m]
            rem[m] = c
    return rem


def integer_law_table(n, triple_n):
    """Monoid laws of (gcd, 0) and (lcm, 1) on 0..n; associativity on 0..triple_n."""
    from math import gcd

    def lcm(a, b):
        return 0 if a == 0 or b == 0 else a // gcd(a, b) * b

    ms = range(n + 1)
    out = dict.fromkeys(
        ("commutative", "idempotent", "identities", "absorption",
         "mul associative", "add associative"), True)
    for a in ms:
        if gcd(a, a) != a or lcm(a, a) != a:
            out["idempotent"] = False
        if gcd(a, 0) != a or lcm(a, 1) != a:
            out["identities"] = False
        for b in ms:
            g, l = gcd(a, b), lcm(a, b)
            if g != gcd(b, a) or l != lcm(b, a):
                out["commutative"] = False
            if lcm(a, g) != a or gcd(a, l) != a:
                out["absorption"] = False
    ts = range(min(triple_n, n) + 1)
    for a in ts:
        for b in ts:
            g, l = gcd(a, b), lcm(a, b)
            for c in ts:
                if gcd(g, c) != gcd(a, gcd(b, c)):
                    out["mul associative"] = False
                if lcm(l, c) != lcm(a, lcm(b, c)):
                    out["add associative"] = False
    return out
