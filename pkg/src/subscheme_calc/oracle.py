"""Independent oracles: ideals of ZZ and ZZ/n, and univariate Euclid over QQ.

Nothing here touches the Groebner code path. Subschemes of Spec ZZ are
ideals ``(m)`` with ``m >= 0``; intersection is the ideal sum (gcd) and
union the ideal intersection (lcm).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import kernels
from .polyring import Polynomial, PolyRing
from .report import Report


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return a // gcd(a, b) * b


@dataclass(frozen=True)
class IntegerSubscheme:
    """V((m)) in Spec ZZ; m = 0 is the whole scheme, m = 1 the empty one."""

    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("use the nonnegative generator of the ideal")

    def __mul__(self, other: IntegerSubscheme) -> IntegerSubscheme:
        return int_mul(self, other)

    def __add__(self, other: IntegerSubscheme) -> IntegerSubscheme:
        return int_add(self, other)

    def support(self) -> frozenset[int]:
        """Primes p with (p) in V(m); m = 0 gives {0}, the generic point, standing for all of Spec ZZ."""
        if self.m == 0:
            return frozenset({0})
        return frozenset(_prime_factors(self.m))


def int_mul(a: IntegerSubscheme, b: IntegerSubscheme) -> IntegerSubscheme:
    return IntegerSubscheme(gcd(a.m, b.m))


def int_add(a: IntegerSubscheme, b: IntegerSubscheme) -> IntegerSubscheme:
    return IntegerSubscheme(lcm(a.m, b.m))


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class CyclicRingSubscheme:
    """The ideal (d) of ZZ/n for a divisor d of n; d = n is the zero ideal."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1 or self.n % self.d:
            raise ValueError(f"{self.d} is not a positive divisor of {self.n}")

    def __mul__(self, other: CyclicRingSubscheme) -> CyclicRingSubscheme:
        return CyclicRingSubscheme(self.n, gcd(self.d, other.d))

    def __add__(self, other: CyclicRingSubscheme) -> CyclicRingSubscheme:
        return CyclicRingSubscheme(self.n, lcm(self.d, other.d))

    def extend(self, m: int) -> CyclicRingSubscheme:
        """Image ideal along ZZ/n -> ZZ/m for m | n."""
        return CyclicRingSubscheme(m, gcd(self.d, m))


def cyc_laws(n: int) -> Report:
    """Exhaustive monoid and extension laws on the ideal lattice of ZZ/n."""
    rep = Report(f"ZZ/{n}")
    divs = divisors(n)
    idx = {d: k for k, d in enumerate(divs)}
    size = len(divs)
    meet = [[0] * size for _ in range(size)]
    join = [[0] * size for _ in range(size)]
    closed = True
    for a, da in enumerate(divs):
        for b, db in enumerate(divs):
            g, l = gcd(da, db), lcm(da, db)
            if g not in idx or l not in idx:
                closed = False
                continue
            meet[a][b] = idx[g]
            join[a][b] = idx[l]
    tag = f"ZZ/{n}"
    rep.check(f"{tag} closure over {size} ideals", closed)
    if not closed:
        return rep
    rng = range(size)
    whole, emp = idx[n], idx[1]
    for name, op, unit in (("mul", meet, whole), ("add", join, emp)):
        rep.check(f"{tag} {name} commutative",
                  all(op[a][b] == op[b][a] for a in rng for b in rng))
        rep.check(f"{tag} {name} associative",
                  all(op[op[a][b]][c] == op[a][op[b][c]] for a in rng for b in rng for c in rng))
        rep.check(f"{tag} {name} idempotent", all(op[a][a] == a for a in rng))
        rep.check(f"{tag} {name} identity", all(op[a][unit] == a for a in rng))
    rep.check(f"{tag} absorption",
              all(join[a][meet[a][b]] == a and meet[a][join[a][b]] == a for a in rng for b in rng))
    ext_ok_mul = ext_ok_add = ext_ok_unit = True
    for m in divs:
        ext = [gcd(d, m) for d in divs]
        for a in rng:
            for b in rng:
                if ext[meet[a][b]] != gcd(ext[a], ext[b]):
                    ext_ok_mul = False
                if ext[join[a][b]] != lcm(ext[a], ext[b]):
                    ext_ok_add = False
        if ext[whole] != m or ext[emp] != 1:
            ext_ok_unit = False
    rep.check(f"{tag} extension preserves mul", ext_ok_mul)
    rep.check(f"{tag} extension preserves add", ext_ok_add)
    rep.check(f"{tag} extension preserves identities", ext_ok_unit)
    return rep


def integer_laws(max_m: int = 1000, max_triple: int | None = None) -> Report:
    """Spec ZZ laws: all pairs with m <= max_m, associativity on triples <= max_triple.

    ``max_triple`` defaults to ``max_m`` with the compiled kernel and to 100
    with the pure-Python one, where a billion triples would take hours.
    """
    if max_triple is None:
        max_triple = max_m if kernels.BACKEND == "cython" else min(max_m, 100)
    res = kernels.integer_law_table(max_m, max_triple)
    rep = Report("Spec ZZ")
    for law in ("commutative", "idempotent", "identities", "absorption"):
        rep.check(f"Spec ZZ {law} (m <= {max_m})", res[law])
    t = min(max_triple, max_m)
    for law in ("mul associative", "add associative"):
        rep.check(f"Spec ZZ {law} (m <= {t})", res[law])
    return rep


def prime_power_structures(p: int, top: int = 20) -> list[IntegerSubscheme]:
    """The closed subscheme structures (p^a), a = 1..top, on the point (p)."""
    return [IntegerSubscheme(p**a) for a in range(1, top + 1)]


# -- univariate Euclid over QQ ---------------------------------------------

def _coeffs(f: Polynomial) -> list[Fraction]:
    if f.ring.nvars != 1:
        raise ValueError("univariate polynomial expected")
    deg = f.total_degree()
    out = [Fraction(0)] * (deg + 1)
    for (e,), c in f.data.items():
        out[e] = Fraction(int(c.numerator), int(c.denominator))
    return out


def _trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for k, bc in enumerate(b):
            a[shift + k] -= c * bc
        a.pop()
    return q, a


def _monic(a: list[Fraction]) -> list[Fraction]:
    return [c / a[-1] for c in a] if a else a


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        a, b = b, _trim(_divmod(a, b)[1])
    return _monic(a)


def _mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _to_poly(a: list[Fraction], ring: PolyRing) -> Polynomial:
    return ring.from_dict({(e,): c for e, c in enumerate(a) if c})


def uni_gcd_oracle(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (0 only if both are 0)."""
    return _to_poly(_gcd(_coeffs(f), _coeffs(g)), f.ring)


def uni_intersect_oracle(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic lcm f*g/gcd(f, g), the generator of (f) ∩ (g)."""
    if not f or not g:
        raise ValueError("lcm oracle needs nonzero inputs")
    a, b = _coeffs(f), _coeffs(g)
    q, r = _divmod(_mul(a, b), _gcd(a, b))
    assert not _trim(r)
    return _to_poly(_monic(_trim(q)), f.ring)
