"""Closed subschemes as compatible per-patch ideal families.

A closed subscheme of a glued scheme X is stored as its ideal on each patch.
Two families describe the same subscheme exactly when their canonical
per-patch ideals agree, so equality is structural. Intersection (``mul``)
is the per-patch ideal sum and union (``add``) the per-patch intersection.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import (
    Ideal,
    RingMap,
    extend,
    ideal_intersect,
    ideal_sum,
    map_kernel,
    map_surjective,
    saturate,
)
from .report import Report
from .scheme import GluedScheme, SchemeMorphism, transport


class SchemeMismatchError(ValueError):
    pass


class InvalidMorphismError(ValueError):
    pass


class NotClosedImmersionError(ValueError):
    pass


class ClosedSubscheme:
    __slots__ = ("scheme", "ideals", "name")

    def __init__(self, scheme: GluedScheme, ideals: Sequence[Ideal], name: str = ""):
        if len(ideals) != len(scheme.patches):
            raise ValueError(
                f"need one ideal per patch ({len(scheme.patches)}), got {len(ideals)}"
            )
        for k, (I, A) in enumerate(zip(ideals, scheme.patches)):
            if I.algebra != A:
                raise ValueError(f"ideal {k} does not live on patch {k}")
        self.scheme = scheme
        self.ideals = tuple(ideals)
        self.name = name

    @classmethod
    def from_generators(cls, scheme: GluedScheme, gens: Sequence[Sequence], name: str = "") -> ClosedSubscheme:
        """One generator list (strings or polynomials) per patch."""
        return cls(scheme, [A.ideal(*g) for A, g in zip(scheme.patches, gens)], name)

    def __eq__(self, other):
        if not isinstance(other, ClosedSubscheme):
            return NotImplemented
        return eq(self, other)

    def __hash__(self):
        return hash(tuple(I.basis for I in self.ideals))

    def __mul__(self, other):
        return mul(self, other)

    def __add__(self, other):
        return add(self, other)

    def __str__(self):
        return "[ " + " ; ".join(str(I) for I in self.ideals) + " ]"

    def __repr__(self):
        return f"ClosedSubscheme({self})"


def _same_scheme(Z: ClosedSubscheme, W: ClosedSubscheme):
    if Z.scheme is not W.scheme and Z.scheme != W.scheme:
        raise SchemeMismatchError("closed subschemes of different schemes")


def validate(Z: ClosedSubscheme) -> Report:
    """Overlap compatibility: transport(i->j, I_i) = sat(I_j, f_ji) on every glue record."""
    rep = Report("subscheme")
    X = Z.scheme
    for rec in X.glue:
        moved = transport(X, rec.i, rec.j, Z.ideals[rec.i])
        local = saturate(Z.ideals[rec.j], rec.f_ji)
        ok = moved == local
        detail = "" if ok else f"transported {moved} but patch {rec.j} gives {local}"
        rep.check(f"compatible {rec.i}->{rec.j}", ok, detail)
    return rep


def canon(Z: ClosedSubscheme) -> ClosedSubscheme:
    return ClosedSubscheme(Z.scheme, [I.canon() for I in Z.ideals], Z.name)


def eq(Z: ClosedSubscheme, W: ClosedSubscheme) -> bool:
    _same_scheme(Z, W)
    return all(I.basis == J.basis for I, J in zip(Z.ideals, W.ideals))


def whole(X: GluedScheme) -> ClosedSubscheme:
    """X itself: the zero ideal on every patch."""
    return ClosedSubscheme(X, [A.zero_ideal().canon() for A in X.patches])


def empty(X: GluedScheme) -> ClosedSubscheme:
    """The empty subscheme: the unit ideal on every patch."""
    return ClosedSubscheme(X, [A.unit_ideal().canon() for A in X.patches])


def mul(Z: ClosedSubscheme, W: ClosedSubscheme) -> ClosedSubscheme:
    """Scheme-theoretic intersection."""
    _same_scheme(Z, W)
    return ClosedSubscheme(Z.scheme, [ideal_sum(I, J) for I, J in zip(Z.ideals, W.ideals)])


def add(Z: ClosedSubscheme, W: ClosedSubscheme) -> ClosedSubscheme:
    """Scheme-theoretic union."""
    _same_scheme(Z, W)
    return ClosedSubscheme(Z.scheme, [ideal_intersect(I, J) for I, J in zip(Z.ideals, W.ideals)])


def pullback(f: SchemeMorphism, Z: ClosedSubscheme) -> ClosedSubscheme:
    """Base change of Z along f, patchwise the extension of Z's ideals."""
    if Z.scheme is not f.target and Z.scheme != f.target:
        raise SchemeMismatchError("the morphism does not land in the subscheme's scheme")
    rep = f.report()
    if not rep.ok:
        raise InvalidMorphismError(
            "invalid morphism: " + "; ".join(c.line() for c in rep.failures)
        )
    return ClosedSubscheme(
        f.source, [extend(phi, Z.ideals[t]) for t, phi in f.assignment]
    )


def from_surjection(phi: RingMap) -> ClosedSubscheme:
    """The closed subscheme of Spec(source) cut out by a surjection."""
    if not map_surjective(phi):
        raise NotClosedImmersionError(
            f"{phi!r} is not surjective, so it does not define a closed immersion"
        )
    X = GluedScheme.affine(phi.source)
    return ClosedSubscheme(X, [map_kernel(phi)])


def additive_law_check(f: SchemeMorphism, Z: ClosedSubscheme, W: ClosedSubscheme) -> tuple[bool, ClosedSubscheme, ClosedSubscheme]:
    """Compare pullback(f, Z + W) against pullback(f, Z) + pullback(f, W)."""
    lhs = pullback(f, add(Z, W))
    rhs = add(pullback(f, Z), pullback(f, W))
    return eq(lhs, rhs), lhs, rhs
