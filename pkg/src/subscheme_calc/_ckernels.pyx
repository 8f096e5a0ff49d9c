# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels``: same signatures, same results.

Exponent vectors are copied into C arrays so monomial comparison,
divisibility tests and the term heap of the division loop run without
touching Python objects. Coefficients stay ``mpq`` objects.
"""

from cpython.long cimport PyLong_AsLong, PyLong_FromLong
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc, realloc

from ._kernels import sort_key as _py_sort_key

LEX = 0
GREVLEX = 1
BLOCK = 2


def sort_key(order):
    return _py_sort_key(order)


cdef inline int _cmp(long* a, long* b, int n, int code, int k) noexcept nogil:
    """1 if a > b, -1 if a < b, 0 if equal under the order."""
    cdef int i
    cdef long da = 0, db = 0
    if code == 0:
        for i in range(n):
            if a[i] != b[i]:
                return 1 if a[i] > b[i] else -1
        return 0
    if code == 1:
        for i in range(n):
            da += a[i]
            db += b[i]
        if da != db:
            return 1 if da > db else -1
        for i in range(n - 1, -1, -1):
            if a[i] != b[i]:
                return 1 if a[i] < b[i] else -1
        return 0
    for i in range(k):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    for i in range(k, n):
        da += a[i]
        db += b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(n - 1, k - 1, -1):
        if a[i] != b[i]:
            return 1 if a[i] < b[i] else -1
    return 0


cdef inline void _read(tuple m, long* out, int n):
    cdef int i
    for i in range(n):
        out[i] = PyLong_AsLong(<object>PyTuple_GET_ITEM(m, i))


cdef inline tuple _make(long* e, int n):
    cdef tuple t = PyTuple_New(n)
    cdef object v
    cdef int i
    for i in range(n):
        v = PyLong_FromLong(e[i])
        Py_INCREF(v)
        PyTuple_SET_ITEM(t, i, v)
    return t


cdef class _Pool:
    """Exponent vectors in one C array, ordered by a binary max-heap."""

    cdef long* exps
    cdef int* heap
    cdef int n, code, k, size, used, cap
    cdef list objs

    def __cinit__(self, int n, int code, int k, int cap):
        self.n = n
        self.code = code
        self.k = k
        self.cap = cap if cap > 16 else 16
        self.exps = <long*>malloc(self.cap * (n if n > 0 else 1) * sizeof(long))
        self.heap = <int*>malloc(self.cap * sizeof(int))
        self.size = 0
        self.used = 0
        self.objs = []
        if self.exps == NULL or self.heap == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.exps)
        free(self.heap)

    cdef int _grow(self) except -1:
        cdef int newcap = self.cap * 2
        cdef long* e = <long*>realloc(self.exps, newcap * (self.n if self.n > 0 else 1) * sizeof(long))
        if e == NULL:
            raise MemoryError()
        self.exps = e
        cdef int* h = <int*>realloc(self.heap, newcap * sizeof(int))
        if h == NULL:
            raise MemoryError()
        self.heap = h
        self.cap = newcap
        return 0

    cdef inline long* at(self, int idx):
        return self.exps + idx * self.n

    cdef int push(self, tuple m, long* e) except -1:
        cdef int idx, pos, parent, i
        if self.used == self.cap:
            self._grow()
        idx = self.used
        self.used += 1
        for i in range(self.n):
            self.exps[idx * self.n + i] = e[i]
        self.objs.append(m)
        pos = self.size
        self.size += 1
        while pos > 0:
            parent = (pos - 1) >> 1
            if _cmp(self.at(self.heap[parent]), self.at(idx), self.n, self.code, self.k) >= 0:
                break
            self.heap[pos] = self.heap[parent]
            pos = parent
        self.heap[pos] = idx
        return 0

    cdef int pop(self):
        cdef int top = self.heap[0]
        cdef int last, pos, child
        self.size -= 1
        if self.size == 0:
            return top
        last = self.heap[self.size]
        pos = 0
        while True:
            child = 2 * pos + 1
            if child >= self.size:
                break
            if child + 1 < self.size and _cmp(self.at(self.heap[child + 1]), self.at(self.heap[child]), self.n, self.code, self.k) > 0:
                child += 1
            if _cmp(self.at(self.heap[child]), self.at(last), self.n, self.code, self.k) <= 0:
                break
            self.heap[pos] = self.heap[child]
            pos = child
        self.heap[pos] = last
        return top


def leading_monomial(dict p, order):
    cdef int code = order[0], k = order[1]
    cdef object best = None
    cdef tuple m
    cdef int n
    cdef long* a
    cdef long* b
    if not p:
        raise ValueError("zero polynomial")
    n = len(next(iter(p)))
    a = <long*>malloc((n if n > 0 else 1) * sizeof(long))
    b = <long*>malloc((n if n > 0 else 1) * sizeof(long))
    try:
        for m in p:
            if best is None:
                best = m
                _read(m, a, n)
                continue
            _read(m, b, n)
            if _cmp(b, a, n, code, k) > 0:
                best = m
                _read(m, a, n)
    finally:
        free(a)
        free(b)
    return best


def add(dict p, dict q):
    cdef dict r = dict(p)
    cdef object m, c, v
    for m, c in q.items():
        v = r.get(m)
        if v is None:
            r[m] = c
        else:
            v = v + c
            if v:
                r[m] = v
            else:
                del r[m]
    return r


cdef long* _unpack(dict p, int n, list coeffs) except NULL:
    cdef int t = 0
    cdef long* out = <long*>malloc((len(p) * n if len(p) * n > 0 else 1) * sizeof(long))
    if out == NULL:
        raise MemoryError()
    for m, c in p.items():
        _read(<tuple>m, out + t * n, n)
        coeffs.append(c)
        t += 1
    return out


def mul(dict p, dict q):
    if len(p) < len(q):
        p, q = q, p
    cdef dict r = {}
    if not p or not q:
        return r
    cdef int n = len(next(iter(p)))
    cdef list pc = [], qc = []
    cdef long* pe = _unpack(p, n, pc)
    cdef long* qe = _unpack(q, n, qc)
    cdef long* buf = <long*>malloc((n if n > 0 else 1) * sizeof(long))
    cdef int i, j, v, np_ = len(pc), nq = len(qc)
    cdef tuple t
    cdef object c, old, c2
    try:
        for j in range(nq):
            c2 = qc[j]
            for i in range(np_):
                for v in range(n):
                    buf[v] = pe[i * n + v] + qe[j * n + v]
                t = _make(buf, n)
                c = pc[i] * c2
                old = r.get(t)
                if old is None:
                    r[t] = c
                else:
                    c = old + c
                    if c:
                        r[t] = c
                    else:
                        del r[t]
    finally:
        free(pe)
        free(qe)
        free(buf)
    return r


def mul_term(dict p, tuple mono, coeff):
    cdef dict r = {}
    cdef int n = len(mono), v
    cdef long* e = <long*>malloc((n if n > 0 else 1) * sizeof(long))
    cdef long* s = <long*>malloc((n if n > 0 else 1) * sizeof(long))
    try:
        _read(mono, s, n)
        for m, c in p.items():
            _read(<tuple>m, e, n)
            for v in range(n):
                e[v] += s[v]
            r[_make(e, n)] = c * coeff
    finally:
        free(e)
        free(s)
    return r


def normal_form(dict p, divisors, order, bint full=True):
    """Full division remainder; see ``_kernels.normal_form``."""
    cdef int code = order[0], k = order[1]
    cdef dict work = dict(p)
    cdef dict rem = {}
    if not work:
        return rem
    cdef int n = len(next(iter(work)))
    cdef int nd = len(divisors), d, i, t, nt, idx
    cdef long* lms = <long*>malloc((nd * n if nd * n > 0 else 1) * sizeof(long))
    cdef long* cur = <long*>malloc((n if n > 0 else 1) * sizeof(long))
    cdef long* q = <long*>malloc((n if n > 0 else 1) * sizeof(long))
    cdef long* buf = <long*>malloc((n if n > 0 else 1) * sizeof(long))
    cdef list gcoeffs = [], lcs = []
    cdef long* ge
    cdef long* eptr
    cdef bint divides
    cdef object c, f, v, gc, lc
    cdef tuple m, tm
    cdef _Pool pool = _Pool(n, code, k, 2 * len(work))
    cdef list cl
    cdef long** gptr = <long**>malloc((nd if nd > 0 else 1) * sizeof(long*))
    for d in range(nd):
        gptr[d] = NULL
    try:
        for d in range(nd):
            lm, lc, g = divisors[d]
            _read(<tuple>lm, lms + d * n, n)
            lcs.append(lc)
            cl = []
            gptr[d] = _unpack(<dict>g, n, cl)
            gcoeffs.append(cl)
        for m in work:
            _read(m, cur, n)
            pool.push(m, cur)
        while pool.size:
            idx = pool.pop()
            m = <tuple>pool.objs[idx]
            c = work.get(m)
            if c is None:
                continue
            eptr = pool.at(idx)
            divides = False
            for d in range(nd):
                divides = True
                for i in range(n):
                    if eptr[i] < lms[d * n + i]:
                        divides = False
                        break
                if divides:
                    break
            if not divides:
                if not full:
                    return work
                del work[m]
                rem[m] = c
                continue
            for i in range(n):
                q[i] = eptr[i] - lms[d * n + i]
            f = c / lcs[d]
            cl = <list>gcoeffs[d]
            ge = gptr[d]
            nt = len(cl)
            for t in range(nt):
                for i in range(n):
                    buf[i] = ge[t * n + i] + q[i]
                tm = _make(buf, n)
                gc = cl[t]
                v = work.get(tm)
                if v is None:
                    work[tm] = -(f * gc)
                    pool.push(tm, buf)
                else:
                    v = v - f * gc
                    if v:
                        work[tm] = v
                    else:
                        del work[tm]
    finally:
        for d in range(nd):
            free(gptr[d])
        free(gptr)
        free(lms)
        free(cur)
        free(q)
        free(buf)
    return rem


cdef inline long long _mod(long long u, int d, double inv) noexcept nogil:
    # u mod d for 0 <= u < 2^52 via a float reciprocal; the quotient can only
    # undershoot when d divides u, giving d instead of 0, and gcd(d, d) = gcd(0, d)
    return u - (<long long>(u * inv)) * d


cdef int _zero_triple(int* G, long long* L, int N, int a, int b, int c) noexcept nogil:
    # failure bits: 1 for the gcd side, 2 for the lcm side (both sides must be 0)
    cdef int bad = 0
    if G[G[a * N + b] * N + c] != G[a * N + G[b * N + c]]:
        bad |= 1
    if not ((L[a * N + b] == 0 or c == 0) and (L[b * N + c] == 0 or a == 0)):
        bad |= 2
    return bad


def integer_law_table(int n, int triple_n):
    """Monoid laws of (gcd, 0) and (lcm, 1) on 0..n; associativity on 0..triple_n.

    Returns a dict of booleans keyed by law name.
    """
    cdef int N = n + 1, a, b, c, x, y, t
    cdef int T = (triple_n if triple_n < n else n) + 1
    cdef int* G = <int*>malloc(N * N * sizeof(int))
    cdef long long* L = <long long*>malloc(N * N * sizeof(long long))
    cdef double* inv = <double*>malloc(N * sizeof(double))
    cdef int* Ga
    cdef int* Gc
    cdef long long* La
    cdef long long* Lc
    cdef long long l, u, lbad = 0
    cdef int gbad = 0
    cdef double ia, ic
    cdef bint comm = True, idem = True, ident = True, absorb = True
    cdef bint gassoc = True, lassoc = True
    if G == NULL or L == NULL or inv == NULL:
        free(G)
        free(L)
        free(inv)
        raise MemoryError()
    try:
        for a in range(N):
            inv[a] = 1.0 / a if a else 0.0
            for b in range(N):
                x = a
                y = b
                while y:
                    t = x % y
                    x = y
                    y = t
                G[a * N + b] = x
                L[a * N + b] = 0 if a == 0 or b == 0 else <long long>(a // x) * b
        for a in range(N):
            if G[a * N + a] != a or L[a * N + a] != a:
                idem = False
            if G[a * N] != a or (N > 1 and L[a * N + 1] != a):
                ident = False
            for b in range(N):
                if G[a * N + b] != G[b * N + a] or L[a * N + b] != L[b * N + a]:
                    comm = False
                # a + (a * b) = a and a * (a + b) = a, with lcm(a, b) possibly > n
                x = G[a * N + b]
                if (0 if a == 0 or x == 0 else a // G[a * N + x] * x) != a:
                    absorb = False
                l = L[a * N + b]
                if G[(l % a if a else l) * N + a] != a:
                    absorb = False
        # triples containing a zero: gcd(0, m) = m and lcm(0, m) = 0
        for a in range(T):
            for b in range(T):
                t = (_zero_triple(G, L, N, 0, a, b) | _zero_triple(G, L, N, a, 0, b)
                     | _zero_triple(G, L, N, a, b, 0))
                if t & 1:
                    gassoc = False
                if t & 2:
                    lassoc = False
        for a in range(1, T):
            Ga = G + a * N
            La = L + a * N
            ia = inv[a]
            for c in range(1, T):
                Gc = G + c * N
                Lc = L + c * N
                ic = inv[c]
                # branch-free: any mismatch leaves a nonzero bit behind
                for b in range(1, T):
                    gbad |= Gc[Ga[b]] ^ Ga[Gc[b]]
                    l = La[b]
                    u = Lc[b]
                    # lcm(l, c) = l c / gcd(l mod c, c), compared cross-multiplied
                    lbad |= (l * c * Ga[_mod(u, a, ia)]) ^ (u * a * Gc[_mod(l, c, ic)])
        if gbad:
            gassoc = False
        if lbad:
            lassoc = False
    finally:
        free(G)
        free(L)
        free(inv)
    return {
        "commutative": comm,
        "idempotent": idem,
        "identities": ident,
        "absorption": absorb,
        "mul associative": gassoc,
        "add associative": lassoc,
    }
