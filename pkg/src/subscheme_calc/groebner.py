"""Buchberger's algorithm and reduced Groebner bases.

All arithmetic is exact. Pair pruning uses the Gebauer-Moeller update, which
implements both Buchberger criteria (coprime leading monomials and the
chain criterion). Pairs are selected by the normal strategy: smallest lcm
total degree first, ties broken by the smaller lcm exponent vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .polyring import (
    MonomialOrder,
    NoLeadingTermError,
    Polynomial,
    PolyRing,
    RingMismatchError,
)


@dataclass(frozen=True)
class GrobnerBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = False

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_unit(self) -> bool:
        return any(g.is_constant() and g for g in self.generators)


def _common_ring(polys: Sequence[Polynomial], ring: PolyRing | None = None) -> PolyRing:
    for p in polys:
        if ring is None:
            ring = p.ring
        elif p.ring.variables != ring.variables:
            raise RingMismatchError(
                f"mixed rings {list(ring.variables)} and {list(p.ring.variables)}"
            )
    if ring is None:
        raise ValueError("cannot infer a ring from an empty generator list")
    return ring


def _divisors(G: Sequence[Polynomial], order: MonomialOrder) -> list:
    out = []
    for g in G:
        if g:
            c, m = g.lead(order)
            out.append((m, c, g.data))
    return out


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on division by ``G`` (in sequence order)."""
    order = order or f.ring.order
    _common_ring(list(G), f.ring)
    if not f:
        return f
    return Polynomial(f.ring, kernels.normal_form(f.data, _divisors(G, order), order.code))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    if not f or not g:
        raise NoLeadingTermError("S-polynomial of a zero polynomial")
    _common_ring([f, g])
    order = order or f.ring.order
    cf, mf = f.lead(order)
    cg, mg = g.lead(order)
    lcm = _lcm(mf, mg)
    a = f.mul_term(1 / cf, tuple(x - y for x, y in zip(lcm, mf)))
    b = g.mul_term(1 / cg, tuple(x - y for x, y in zip(lcm, mg)))
    return a - b


class _State:
    """Working data of one Buchberger run: monic polys, leading monomials."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.code = order.code
        self.sort_key = order.sort_key
        self.polys: list[dict] = []
        self.lms: list[tuple] = []
        self.active: list[int] = []
        self.pairs: list[tuple[int, int]] = []

    def reduce(self, p: dict) -> dict:
        # reducers with the smallest leading monomial first
        sk = self.sort_key
        order = sorted(self.active, key=lambda i: sk(self.lms[i]), reverse=True)
        divs = [(self.lms[i], 1, self.polys[i]) for i in order]
        return kernels.normal_form(p, divs, self.code)

    def add(self, h: dict):
        lm = kernels.leading_monomial(h, self.code)
        inv = 1 / h[lm]
        h = {m: c * inv for m, c in h.items()}
        ih = len(self.polys)
        self.polys.append(h)
        self.lms.append(lm)
        self._update(ih)
        self._tail_reduce(ih)

    def _tail_reduce(self, ih: int):
        """Reduce the tails of the other basis elements by the newcomer.

        Leading monomials are untouched, so pairs and criteria stay valid;
        this keeps intermediate coefficients close to the reduced basis.
        """
        mh = self.lms[ih]
        for ig in self.active:
            if ig == ih:
                continue
            g, lg = self.polys[ig], self.lms[ig]
            if not any(m != lg and _divides(mh, m) for m in g):
                continue
            tail = {m: c for m, c in g.items() if m != lg}
            divs = [(self.lms[i], 1, self.polys[i]) for i in self.active if i != ig]
            tail = kernels.normal_form(tail, divs, self.code)
            tail[lg] = g[lg]
            self.polys[ig] = tail

    def _update(self, ih: int):
        lms = self.lms
        mh = lms[ih]
        # new pairs (ih, g): drop those whose lcm is a proper multiple of another
        cand = list(self.active)
        kept: list[int] = []
        while cand:
            ig = cand.pop(0)
            lcm_hg = _lcm(mh, lms[ig])
            coprime = all(not (a and b) for a, b in zip(mh, lms[ig]))
            if coprime or not any(
                _divides(_lcm(mh, lms[j]), lcm_hg) for j in cand + kept
            ):
                kept.append(ig)
        new_pairs = [
            (ig, ih) for ig in kept if not all(not (a and b) for a, b in zip(mh, lms[ig]))
        ]
        # chain criterion on old pairs
        old = []
        for i, j in self.pairs:
            lcm_ij = _lcm(lms[i], lms[j])
            if (
                not _divides(mh, lcm_ij)
                or _lcm(lms[i], mh) == lcm_ij
                or _lcm(lms[j], mh) == lcm_ij
            ):
                old.append((i, j))
        self.pairs = old + new_pairs
        self.active = [ig for ig in self.active if not _divides(mh, lms[ig])]
        self.active.append(ih)

    def pop_pair(self) -> tuple[int, int]:
        # normal strategy: the pair whose lcm is smallest under the working order
        lms = self.lms
        sk = self.sort_key

        def key(pair):
            return (sk(_lcm(lms[pair[0]], lms[pair[1]])), pair)

        best = max(range(len(self.pairs)), key=lambda k: key(self.pairs[k]))
        return self.pairs.pop(best)

    def spoly(self, i: int, j: int) -> dict:
        mi, mj = self.lms[i], self.lms[j]
        lcm = _lcm(mi, mj)
        a = kernels.mul_term(self.polys[i], tuple(x - y for x, y in zip(lcm, mi)), 1)
        b = kernels.mul_term(self.polys[j], tuple(x - y for x, y in zip(lcm, mj)), -1)
        return kernels.add(a, b)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder | None = None, ring: PolyRing | None = None) -> GrobnerBasis:
    """A (not yet reduced) Groebner basis of the ideal generated by ``gens``."""
    ring = _common_ring(list(gens), ring)
    order = order or ring.order
    ring = ring.with_order(order)
    st = _State(order)
    for g in gens:
        if g:
            h = st.reduce(g.data)
            if h:
                st.add(h)
    while st.pairs:
        i, j = st.pop_pair()
        h = st.reduce(st.spoly(i, j))
        if h:
            st.add(h)
            if len(h) == 1 and not any(next(iter(h))):
                break
    basis = tuple(Polynomial(ring, st.polys[i]) for i in st.active)
    if any(g.is_constant() for g in basis):
        basis = (ring.one,)
    return GrobnerBasis(basis, order, reduced=False)


def reduced_basis(G: GrobnerBasis) -> GrobnerBasis:
    """The unique reduced basis of the ideal spanned by the Groebner basis ``G``."""
    order = G.order
    polys = [g for g in G.generators if g]
    if not polys:
        return GrobnerBasis((), order, reduced=True)
    ring = polys[0].ring.with_order(order)
    leads = [p.lm(order) for p in polys]
    minimal = []
    for i, p in enumerate(polys):
        redundant = False
        for j, q in enumerate(polys):
            if j == i:
                continue
            if _divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append(p)
    out = []
    for k, p in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = normal_form(p, others, order)
        out.append(Polynomial(ring, r.monic(order).data))
    out.sort(key=lambda p: order.sort_key(p.lm(order)))
    return GrobnerBasis(tuple(out), order, reduced=True)


def groebner(gens: Sequence[Polynomial], order: MonomialOrder | None = None, ring: PolyRing | None = None) -> GrobnerBasis:
    """Reduced Groebner basis of ``(gens)``; the canonical form of the ideal."""
    return reduced_basis(buchberger(gens, order, ring))


def contains(G: GrobnerBasis, f: Polynomial) -> bool:
    if G.generators:
        _common_ring(list(G.generators), f.ring)
    return not normal_form(f, G.generators, G.order)
