"""Finitely presented QQ-algebras, their ideals, and ring maps between them.

An ideal of ``A = QQ[x]/Q`` is stored as an ideal of ``QQ[x]`` containing
``Q``; its canonical form is the reduced Groebner basis of
``generators + relations`` under the algebra's canonical order.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .groebner import GrobnerBasis, groebner, normal_form
from .polyring import (
    GREVLEX_ORDER,
    MonomialOrder,
    Polynomial,
    PolyRing,
    block_order,
    format_poly,
    fresh_names,
    parse_poly,
)


class AlgebraMismatchError(ValueError):
    pass


class IllDefinedMapError(ValueError):
    pass


class AffineAlgebra:
    """QQ[variables] / (relations), compared by content."""

    def __init__(
        self,
        variables: Sequence[str],
        relations: Iterable[Polynomial | str] = (),
        order: MonomialOrder = GREVLEX_ORDER,
    ):
        self.ring = PolyRing(variables, order)
        rels = [parse_poly(r, self.ring) if isinstance(r, str) else r for r in relations]
        self.relations: tuple[Polynomial, ...] = (
            groebner(rels, order, self.ring).generators if rels else ()
        )

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ring.variables

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def is_zero_ring(self) -> bool:
        return len(self.relations) == 1 and self.relations[0].is_constant()

    def __eq__(self, other):
        return (
            isinstance(other, AffineAlgebra)
            and self.ring == other.ring
            and self.relations == other.relations
        )

    def __hash__(self):
        return hash((self.ring, self.relations))

    def __repr__(self):
        rels = ", ".join(format_poly(r) for r in self.relations)
        tail = f" / ({rels})" if rels else ""
        return f"QQ[{', '.join(self.variables)}]{tail}"

    def parse(self, text: str, hooks=None) -> Polynomial:
        return parse_poly(text, self.ring, hooks)

    def gen(self, name) -> Polynomial:
        return self.ring.gen(name)

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of ``f`` modulo the relations."""
        return normal_form(f, self.relations, self.order) if self.relations else f

    def ideal(self, *gens: Polynomial | str) -> Ideal:
        return Ideal(self, [self.parse(g) if isinstance(g, str) else g for g in gens])

    def zero_ideal(self) -> Ideal:
        return Ideal(self, [])

    def unit_ideal(self) -> Ideal:
        return Ideal(self, [self.ring.one])


def _same_algebra(A: AffineAlgebra, B: AffineAlgebra):
    if A is not B and A != B:
        raise AlgebraMismatchError(f"ideals live in different algebras: {A!r} vs {B!r}")


class Ideal:
    """An ideal of an affine algebra, canonicalized lazily."""

    __slots__ = ("algebra", "generators", "_canonical")

    def __init__(self, algebra: AffineAlgebra, generators: Iterable[Polynomial]):
        self.algebra = algebra
        gens = []
        for g in generators:
            if g.ring.variables != algebra.variables:
                raise AlgebraMismatchError(
                    f"generator {g} is not in {algebra!r}"
                )
            gens.append(g)
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._canonical: GrobnerBasis | None = None

    @classmethod
    def _from_reduced(cls, algebra: AffineAlgebra, basis: Sequence[Polynomial]) -> Ideal:
        # ``basis`` must already be the reduced basis under algebra.order
        I = cls(algebra, basis)
        I._canonical = GrobnerBasis(tuple(basis), algebra.order, reduced=True)
        return I

    @property
    def canonical(self) -> GrobnerBasis:
        if self._canonical is None:
            A = self.algebra
            self._canonical = groebner(
                list(self.generators) + list(A.relations), A.order, A.ring
            )
        return self._canonical

    @property
    def basis(self) -> tuple[Polynomial, ...]:
        return self.canonical.generators

    def canon(self) -> Ideal:
        return Ideal._from_reduced(self.algebra, self.basis)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self.basis, self.algebra.order)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.basis, self.algebra.order)

    def is_unit(self) -> bool:
        return is_unit(self)

    def display_generators(self) -> list[Polynomial]:
        """Canonical generators with those lying in the relations dropped."""
        if self.is_unit():
            return [self.algebra.ring.one]
        A = self.algebra
        return [g for g in self.basis if A.reduce(g)]

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_eq(self, other)

    def __hash__(self):
        return hash((self.algebra, self.basis))

    def __str__(self):
        gens = self.display_generators()
        return "(" + ", ".join(format_poly(g) for g in gens) + ")" if gens else "(0)"

    def __repr__(self):
        return f"Ideal({self} in {self.algebra!r})"


def is_unit(I: Ideal) -> bool:
    b = I.basis
    return len(b) == 1 and b[0].is_constant() and bool(b[0])


def ideal_eq(I: Ideal, J: Ideal) -> bool:
    _same_algebra(I.algebra, J.algebra)
    return I.basis == J.basis


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_algebra(I.algebra, J.algebra)
    A = I.algebra
    return Ideal(A, I.basis + J.basis).canon()


def eliminate_polys(
    gens: Sequence[Polynomial], ring: PolyRing, k: int
) -> tuple[PolyRing, list[Polynomial]]:
    """Generators of ``(gens) ∩ QQ[ring.variables[k:]]``.

    Returns the subring (grevlex) and its reduced basis, computed under
    block(k) with the eliminated variables in the first block.
    """
    sub = PolyRing(ring.variables[k:], GREVLEX_ORDER)
    G = groebner(gens, block_order(k), ring)
    keep = []
    positions = range(k, ring.nvars)
    for g in G.generators:
        if all(not any(m[:k]) for m in g.data):
            keep.append(g.restrict(sub, positions))
    return sub, keep


def _contract(gens: Sequence[Polynomial], ring: PolyRing, k: int, target: AffineAlgebra) -> Ideal:
    _, kept = eliminate_polys(gens, ring, k)
    lifted = [Polynomial(target.ring, g.data) for g in kept]
    if target.order == GREVLEX_ORDER:
        # the kept part of a block(k) reduced basis is the reduced grevlex basis
        lifted.sort(key=lambda p: target.order.sort_key(p.lm()))
        return Ideal._from_reduced(target, lifted)
    return Ideal(target, lifted).canon()


def extended_ring(A: AffineAlgebra, count: int) -> tuple[PolyRing, list[int]]:
    """``count`` fresh variables followed by A's variables, under block(count)."""
    names = fresh_names(count, A.variables)
    ring = PolyRing(names + list(A.variables), block_order(count))
    return ring, list(range(count, count + A.nvars))


def eliminate(I: Ideal, k: int, target: AffineAlgebra | None = None) -> Ideal:
    """Contract ``I`` to the subalgebra on all but the first ``k`` variables."""
    A = I.algebra
    if target is None:
        rels = []
        if A.relations:
            block = PolyRing(A.variables, block_order(k))
            _, rels = eliminate_polys([Polynomial(block, r.data) for r in A.relations], block, k)
        target = AffineAlgebra(A.variables[k:], rels)
    if tuple(target.variables) != tuple(A.variables[k:]):
        raise AlgebraMismatchError("target algebra must carry the non-eliminated variables")
    ring = PolyRing(A.variables, block_order(k))
    gens = [Polynomial(ring, g.data) for g in I.basis]
    if not gens:
        return target.zero_ideal()
    return _contract(gens, ring, k, target)


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    _same_algebra(I.algebra, J.algebra)
    A = I.algebra
    if is_unit(I):
        return J.canon()
    if is_unit(J):
        return I.canon()
    if not I.basis or not J.basis:
        return A.zero_ideal().canon()
    ring, pos = extended_ring(A, 1)
    t = ring.gen(0)
    gens = [t * g.embed(ring, pos) for g in I.basis]
    gens += [(1 - t) * g.embed(ring, pos) for g in J.basis]
    gens += [r.embed(ring, pos) for r in A.relations]
    return _contract(gens, ring, 1, A)


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^∞) via eliminate(s, I + (1 - s*f))."""
    A = I.algebra
    if f.ring.variables != A.variables:
        raise AlgebraMismatchError(f"{f} is not in {A!r}")
    if is_unit(I):
        return I.canon()
    ring, pos = extended_ring(A, 1)
    s = ring.gen(0)
    gens = [g.embed(ring, pos) for g in I.basis]
    gens.append(1 - s * f.embed(ring, pos))
    return _contract(gens, ring, 1, A)


def inverse(A: AffineAlgebra, h: Polynomial) -> Polynomial | None:
    """A representative of 1/h in A, or None when h is not a unit."""
    ring, pos = extended_ring(A, 1)
    w = ring.gen(0)
    gens = [r.embed(ring, pos) for r in A.relations] + [w * h.embed(ring, pos) - 1]
    G = groebner(gens, ring.order, ring)
    r = normal_form(w, G.generators, ring.order)
    if any(m[0] for m in r.data):
        return None
    return A.reduce(r.restrict(A.ring, pos))


class RingMap:
    """Homomorphism source -> target given by one image per source variable."""

    def __init__(
        self,
        source: AffineAlgebra,
        target: AffineAlgebra,
        images: Sequence[Polynomial | str] | Mapping[str, Polynomial | str],
    ):
        if isinstance(images, Mapping):
            missing = [v for v in source.variables if v not in images]
            extra = [v for v in images if v not in source.variables]
            if missing or extra:
                raise ValueError(
                    f"ring map images must cover exactly {list(source.variables)}"
                    f" (missing {missing}, unexpected {extra})"
                )
            images = [images[v] for v in source.variables]
        if len(images) != source.nvars:
            raise ValueError("one image per source variable is required")
        imgs = []
        for g in images:
            g = target.parse(g) if isinstance(g, str) else target.ring.coerce(g)
            imgs.append(Polynomial(target.ring, g.data))
        self.source = source
        self.target = target
        self.images: tuple[Polynomial, ...] = tuple(imgs)

    @classmethod
    def identity(cls, A: AffineAlgebra) -> RingMap:
        return cls(A, A, A.ring.gens)

    def __call__(self, f: Polynomial) -> Polynomial:
        return map_apply(self, f)

    def raw(self, f: Polynomial) -> Polynomial:
        """Substitute images without reducing modulo the target relations."""
        if f.ring.variables != self.source.variables:
            raise AlgebraMismatchError(f"{f} is not in {self.source!r}")
        return f.substitute(self.images, self.target.ring)

    def __eq__(self, other):
        if not isinstance(other, RingMap):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        B = self.target
        return all(not B.reduce(a - b) for a, b in zip(self.images, other.images))

    __hash__ = None

    def __repr__(self):
        body = ", ".join(
            f"{v} -> {format_poly(g)}" for v, g in zip(self.source.variables, self.images)
        )
        return f"RingMap({self.source!r} -> {self.target!r}: {body})"


def map_validate(phi: RingMap) -> bool:
    B = phi.target
    return all(not B.reduce(phi.raw(r)) for r in phi.source.relations)


def _require_valid(phi: RingMap):
    if not map_validate(phi):
        raise IllDefinedMapError(f"{phi!r} does not send the source relations to 0")


def map_apply(phi: RingMap, f: Polynomial) -> Polynomial:
    return phi.target.reduce(phi.raw(f))


def map_compose(psi: RingMap, phi: RingMap) -> RingMap:
    """psi ∘ phi (apply phi first)."""
    if phi.target != psi.source:
        raise AlgebraMismatchError("cannot compose: target(phi) != source(psi)")
    return RingMap(phi.source, psi.target, [map_apply(psi, g) for g in phi.images])


def _graph(phi: RingMap) -> tuple[PolyRing, list[int], list[Polynomial]]:
    """Graph ideal in QQ[target vars (renamed), source vars], target vars first."""
    A, B = phi.source, phi.target
    m = B.nvars
    tnames = fresh_names(m, A.variables)
    ring = PolyRing(tnames + list(A.variables), block_order(m))
    tpos = list(range(m))
    spos = list(range(m, m + A.nvars))
    gens = [r.embed(ring, tpos) for r in B.relations]
    for i, img in enumerate(phi.images):
        gens.append(ring.gen(spos[i]) - img.embed(ring, tpos))
    return ring, spos, gens


def map_kernel(phi: RingMap) -> Ideal:
    """Ker(phi) by eliminating the target variables from the graph ideal."""
    _require_valid(phi)
    A = phi.source
    ring, spos, gens = _graph(phi)
    gens += [r.embed(ring, spos) for r in A.relations]
    return _contract(gens, ring, phi.target.nvars, A).canon()


def preimages(phi: RingMap) -> list[Polynomial] | None:
    """A preimage in the source of each target variable, or None if phi is not onto."""
    _require_valid(phi)
    A, B = phi.source, phi.target
    ring, spos, gens = _graph(phi)
    G = groebner(gens, ring.order, ring)
    m = B.nvars
    out = []
    for j in range(m):
        r = normal_form(ring.gen(j), G.generators, ring.order)
        if any(any(mono[:m]) for mono in r.data):
            return None
        out.append(A.reduce(r.restrict(A.ring, spos)))
    return out


def map_surjective(phi: RingMap) -> bool:
    return preimages(phi) is not None


def map_inverse(phi: RingMap) -> RingMap | None:
    """Two-sided inverse of an isomorphism, or None if phi is not bijective."""
    pre = preimages(phi)
    if pre is None:
        return None
    inv = RingMap(phi.target, phi.source, pre)
    if not map_validate(inv):
        return None
    if map_compose(inv, phi) != RingMap.identity(phi.source):
        return None
    return inv


def extend(phi: RingMap, I: Ideal) -> Ideal:
    """The target ideal generated by phi(I)."""
    _same_algebra(phi.source, I.algebra)
    _require_valid(phi)
    B = phi.target
    return Ideal(B, [phi.raw(g) for g in I.basis]).canon()


def canonical_surjection(I: Ideal) -> RingMap:
    """A -> A/I, the identity on variables."""
    A = I.algebra
    quotient = AffineAlgebra(A.variables, I.basis, A.order)
    return RingMap(A, quotient, quotient.ring.gens)
