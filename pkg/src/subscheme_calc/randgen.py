"""Seeded random instances for the law suites and tests."""

from __future__ import annotations

import random

from .algebra import AffineAlgebra, Ideal, RingMap
from .polyring import Polynomial, PolyRing
from .scheme import GluedScheme, SchemeMorphism
from .subscheme import ClosedSubscheme

VARIABLE_NAMES = ("x", "y", "z")


def random_monomial(rng: random.Random, nvars: int, max_deg: int, min_deg: int = 0) -> tuple:
    deg = rng.randint(min_deg, max_deg)
    m = [0] * nvars
    for _ in range(deg):
        m[rng.randrange(nvars)] += 1
    return tuple(m)


def random_poly(
    rng: random.Random,
    ring: PolyRing,
    max_deg: int = 3,
    max_terms: int = 3,
    coeff: int = 3,
    min_deg: int = 0,
) -> Polynomial:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        c = rng.choice([k for k in range(-coeff, coeff + 1) if k])
        terms.append((c, random_monomial(rng, ring.nvars, max_deg, min_deg)))
    return ring.from_terms(terms)


def random_nonconstant(rng: random.Random, ring: PolyRing, **kw) -> Polynomial:
    while True:
        f = random_poly(rng, ring, **kw)
        if f and not f.is_constant():
            return f


def random_ideal(
    rng: random.Random, A: AffineAlgebra, max_gens: int = 3, max_deg: int = 3, max_terms: int = 2
) -> Ideal:
    gens = [
        random_nonconstant(rng, A.ring, max_deg=max_deg, max_terms=max_terms)
        for _ in range(rng.randint(1, max_gens))
    ]
    return Ideal(A, gens)


def random_affine_space(rng: random.Random, max_vars: int = 3) -> AffineAlgebra:
    return AffineAlgebra(VARIABLE_NAMES[: rng.randint(1, max_vars)])


def linear_product(rng: random.Random, ring: PolyRing, max_factors: int = 4, root_range: int = 3) -> Polynomial:
    """A product of 1..max_factors linear factors (x - r), r an integer root."""
    x = ring.gen(0)
    f = ring.const(rng.choice([1, 2, -3]))
    for _ in range(rng.randint(1, max_factors)):
        f = f * (x - rng.randint(-root_range, root_range))
    return f


def random_substitution(
    rng: random.Random, source: AffineAlgebra, target: AffineAlgebra, max_deg: int = 2, max_terms: int = 2
) -> RingMap:
    """A ring map source -> target sending each variable to a random polynomial."""
    images = [random_poly(rng, target.ring, max_deg=max_deg, max_terms=max_terms) for _ in source.variables]
    return RingMap(source, target, images)


def affine_morphism(X: GluedScheme, Y: GluedScheme, phi: RingMap, name: str = "") -> SchemeMorphism:
    """Spec(phi) between single-patch schemes."""
    return SchemeMorphism(X, Y, [(0, phi)], name)


def binary_form_point_set(rng: random.Random, P1: GluedScheme, max_points: int = 3) -> ClosedSubscheme:
    """V(F) on the projective line for a random binary form F.

    F = prod (a_k X0 - b_k X1)^(e_k); patch 0 uses u = X1/X0, patch 1 uses
    v = X0/X1, so the patch ideals are (F(1, u)) and (F(v, 1)).
    """
    U, V = P1.patches
    u, v = U.ring.gen(0), V.ring.gen(0)
    f0, f1 = U.ring.one, V.ring.one
    for _ in range(rng.randint(1, max_points)):
        a, b = rng.choice([(1, 0), (0, 1), (1, 1), (1, 2), (2, 1), (1, -1), (3, 1)])
        e = rng.randint(1, 2)
        f0 = f0 * (a - b * u) ** e
        f1 = f1 * (a * v - b) ** e
    return ClosedSubscheme(P1, [U.ideal(f0), V.ideal(f1)])


def projective_line() -> GluedScheme:
    U, V = AffineAlgebra(["u"]), AffineAlgebra(["v"])
    return GluedScheme.glued([U, V], [(0, 1, "u", "v", {"u": "#inv(v)"})], name="P1")


def squaring_map(P1: GluedScheme) -> SchemeMorphism:
    U, V = P1.patches
    return SchemeMorphism(
        P1, P1, [(0, RingMap(U, U, ["u^2"])), (1, RingMap(V, V, ["v^2"]))], "sq"
    )
