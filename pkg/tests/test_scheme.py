import pytest

from subscheme_calc.algebra import AffineAlgebra, RingMap
from subscheme_calc.randgen import projective_line, squaring_map
from subscheme_calc.scheme import (
    GlueError,
    GluedScheme,
    SchemeMorphism,
    compose_morphisms,
    localize,
    make_glue,
    transport,
    validate_morphism,
    validate_scheme,
)

U, V = AffineAlgebra(["u"]), AffineAlgebra(["v"])


@pytest.fixture
def P1():
    return projective_line()


def test_localize_examples():
    L, to_L = localize(U, U.parse("u"))
    assert L.variables == ("#0", "u")
    assert [str(r) for r in L.relations] == ["#0*u - 1"]
    assert to_L(U.parse("u^2")) == L.parse("u^2")
    L1, _ = localize(U, U.parse("1"))
    assert [str(r) for r in L1.relations] == ["#0 - 1"]
    L0, _ = localize(U, U.parse("0"))
    assert L0.is_zero_ring()


def test_transport_examples(P1):
    assert str(transport(P1, 0, 1, U.ideal("u - 2"))) == "(v - 1/2)"
    assert str(transport(P1, 1, 0, V.ideal("2*v - 1"))) == "(u - 2)"
    assert transport(P1, 0, 1, U.zero_ideal()) == V.zero_ideal()
    assert transport(P1, 0, 1, U.unit_ideal()).is_unit()
    # the origin of patch 0 is the point at infinity of patch 1: it leaves the overlap
    assert transport(P1, 0, 1, U.ideal("u")).is_unit()
    assert str(transport(P1, 0, 1, U.ideal("u^2*(u - 1)"))) == "(v - 1)"


def test_transport_rejects_foreign_ideals(P1):
    with pytest.raises(GlueError):
        transport(P1, 0, 1, V.ideal("v"))


def test_p1_valid(P1):
    rep = validate_scheme(P1)
    assert rep.ok
    assert rep.lines() == [
        "PASS glue 0->1 well-defined",
        "PASS glue 0->1 inverse",
        "PASS glue 1->0 well-defined",
    ]
    assert validate_scheme(P1, cocycle=True).ok


def test_non_inverse_glue_is_invalid():
    rec = make_glue([U, V], 0, 1, "u", "v", {"u": "v"})
    back = make_glue([U, V], 1, 0, "v", "u", {"v": "#inv(u)"})
    rep = validate_scheme(GluedScheme([U, V], [rec, back]))
    assert not rep.ok
    assert [c.name for c in rep.failures] == ["glue 0->1 inverse"]


def test_missing_mirror_is_invalid():
    rec = make_glue([U, V], 0, 1, "u", "v", {"u": "#inv(v)"})
    rep = validate_scheme(GluedScheme([U, V], [rec]))
    assert [c.name for c in rep.failures] == ["glue 0->1 mirror"]


def test_single_patch_valid():
    assert validate_scheme(GluedScheme.affine(AffineAlgebra(["x", "y"], ["x*y"]))).ok


def test_glue_construction_errors():
    with pytest.raises(GlueError):
        GluedScheme.glued([U, V], [(0, 1, "u", "v", {"u": "v^2"})])
    with pytest.raises(GlueError):
        GluedScheme.glued([U, V], [(0, 1, "u", "v", {"u": "v + 1"})])
    rec = make_glue([U, V], 0, 1, "u", "v", {"u": "#inv(v)"})
    with pytest.raises(GlueError):
        GluedScheme([U, V], [rec, rec])
    with pytest.raises(GlueError):
        GluedScheme([U], [rec])


def test_explicit_inverse_image():
    X = GluedScheme.glued([U, V], [(0, 1, "u", "v", {"u": "#inv(v)"}, "v")])
    assert validate_scheme(X, cocycle=True).ok


def test_p2_cocycle():
    U0, U1, U2 = AffineAlgebra(["a", "b"]), AffineAlgebra(["c", "d"]), AffineAlgebra(["e", "f"])
    # U0: (x1/x0, x2/x0), U1: (x0/x1, x2/x1), U2: (x0/x2, x1/x2)
    specs = [
        (0, 1, "a", "c", {"a": "#inv(c)", "b": "d*#inv(c)"}),
        (0, 2, "b", "e", {"a": "f*#inv(e)", "b": "#inv(e)"}),
        (1, 2, "d", "f", {"c": "e*#inv(f)", "d": "#inv(f)"}),
    ]
    X = GluedScheme.glued([U0, U1, U2], specs)
    rep = validate_scheme(X, cocycle=True)
    assert rep.ok
    assert sum(c.name.startswith("cocycle") for c in rep.checks) == 6


def test_p2_broken_cocycle_detected():
    U0, U1, U2 = AffineAlgebra(["a", "b"]), AffineAlgebra(["c", "d"]), AffineAlgebra(["e", "f"])
    specs = [
        (0, 1, "a", "c", {"a": "#inv(c)", "b": "d*#inv(c)"}),
        (0, 2, "b", "e", {"a": "f*#inv(e)", "b": "#inv(e)"}),
        # scaled by 2: each pair still glues, but the triple overlaps disagree
        (1, 2, "d", "f", {"c": "2*e*#inv(f)", "d": "#inv(f)"}),
    ]
    X = GluedScheme.glued([U0, U1, U2], specs)
    assert validate_scheme(X).ok
    rep = validate_scheme(X, cocycle=True)
    assert not rep.ok
    assert all(c.name.startswith("cocycle") for c in rep.failures)


def test_squaring_valid(P1):
    assert validate_morphism(squaring_map(P1)).ok
    assert validate_morphism(SchemeMorphism.identity(P1)).ok


def test_mismatched_morphism_invalid(P1):
    f = SchemeMorphism(P1, P1, [(0, RingMap(U, U, ["u^2"])), (1, RingMap(V, V, ["v^3"]))])
    rep = validate_morphism(f)
    assert not rep.ok
    assert {c.name for c in rep.failures} == {"overlap 0->1", "overlap 1->0"}


def test_morphism_shape_errors(P1):
    with pytest.raises(ValueError):
        SchemeMorphism(P1, P1, [(0, RingMap(U, U, ["u"]))])
    with pytest.raises(ValueError):
        SchemeMorphism(P1, P1, [(0, RingMap(V, V, ["v"])), (1, RingMap(V, V, ["v"]))])


def test_compose_squaring(P1):
    sq = squaring_map(P1)
    sq2 = compose_morphisms(sq, sq)
    assert sq2.assignment[0][1].images == (U.parse("u^4"),)
    assert validate_morphism(sq2).ok


def test_equality_and_hash(P1):
    Q = projective_line()
    assert P1 == Q and hash(P1) == hash(Q)
    D = GluedScheme.glued([U, V], [(0, 1, "u", "v", {"u": "v"})])
    assert P1 != D
