import pytest
from hypothesis import given, settings, strategies as st

from strategies import coeffs
from subscheme_calc.algebra import AffineAlgebra, Ideal, RingMap, canonical_surjection
from subscheme_calc.laws import diagonal_example, doubled_origin_line
from subscheme_calc.randgen import affine_morphism, projective_line, squaring_map
from subscheme_calc.scheme import GluedScheme, SchemeMorphism
from subscheme_calc.subscheme import (
    ClosedSubscheme,
    InvalidMorphismError,
    NotClosedImmersionError,
    SchemeMismatchError,
    add,
    additive_law_check,
    canon,
    empty,
    eq,
    from_surjection,
    mul,
    pullback,
    validate,
    whole,
)

A = AffineAlgebra(["x", "y"])
X = GluedScheme.affine(A, "plane")


def V(*gens):
    return ClosedSubscheme.from_generators(X, [gens])


@pytest.fixture(scope="module")
def P1():
    return projective_line()


def pt(P1, a, b):
    """The point (a : b) on P1 chart-wise, u = b/a and v = a/b."""
    return ClosedSubscheme.from_generators(P1, [[f"{a}*u - {b}"], [f"{b}*v - {a}"]])


def test_validate_examples(P1):
    assert validate(ClosedSubscheme.from_generators(P1, [["u - 2"], ["2*v - 1"]])).ok
    bad = validate(ClosedSubscheme.from_generators(P1, [["u - 2"], ["v - 1"]]))
    assert not bad.ok
    assert bad.failures[0].line() == "FAIL compatible 0->1: transported (v - 1/2) but patch 1 gives (v - 1)"
    assert validate(V("x^2", "x*y - 1")).ok


def test_canon_examples():
    assert str(canon(V("x + y", "y"))) == "[ (x, y) ]"
    assert canon(V("y", "x")) == canon(V("x", "y"))
    assert str(V("y^2 - x", "3*x")) == "[ (y^2, x) ]"


def test_eq_examples(P1):
    p = ClosedSubscheme.from_generators(P1, [["u - 2"], ["2*v - 1"]])
    q = ClosedSubscheme.from_generators(P1, [["2*u - 4", "(u - 2)^2"], ["v - 1/2"]])
    assert eq(p, q)
    assert not eq(whole(P1), empty(P1))
    assert eq(p, canon(p))


def test_whole_and_empty(P1):
    assert str(whole(P1)) == "[ (0) ; (0) ]"
    assert str(empty(P1)) == "[ (1) ; (1) ]"
    Z = GluedScheme.affine(AffineAlgebra(["x"], ["1"]))
    assert eq(whole(Z), empty(Z))


def test_mul_add_examples():
    assert str(mul(V("x"), V("y"))) == "[ (x, y) ]"
    assert str(add(V("x"), V("y"))) == "[ (x*y) ]"
    assert V("x") * V("y") == V("x", "y")
    assert V("x") + V("y") == V("x*y")


def test_union_of_points(P1):
    U = add(pt(P1, 1, 2), pt(P1, 1, 3))
    assert str(U) == "[ (u^2 - 5*u + 6) ; (v^2 - 5/6*v + 1/6) ]"
    assert validate(U).ok
    # the point (0 : 1) is invisible on patch 0 but not on patch 1
    W = add(pt(P1, 1, 2), pt(P1, 0, 1))
    assert str(W) == "[ (u - 2) ; (v^2 - 1/2*v) ]"


def test_doubled_origin_has_two_origins():
    D = doubled_origin_line()
    O1 = ClosedSubscheme.from_generators(D, [["u"], ["1"]])
    O2 = ClosedSubscheme.from_generators(D, [["1"], ["v"]])
    assert validate(O1).ok and validate(O2).ok
    assert not eq(O1, O2)
    assert eq(mul(O1, O2), empty(D))
    assert str(add(O1, O2)) == "[ (u) ; (v) ]"


def test_pullback_diagonal():
    f, Zx, Zy = diagonal_example()
    assert str(pullback(f, add(Zx, Zy))) == "[ (t^2) ]"
    assert str(add(pullback(f, Zx), pullback(f, Zy))) == "[ (t) ]"
    assert str(pullback(f, mul(Zx, Zy))) == "[ (t) ]"
    ok, lhs, rhs = additive_law_check(f, Zx, Zy)
    assert not ok and str(lhs) == "[ (t^2) ]" and str(rhs) == "[ (t) ]"


def test_pullback_squaring(P1):
    sq = squaring_map(P1)
    Z = pt(P1, 1, 4)
    assert str(pullback(sq, Z)) == "[ (u^2 - 4) ; (v^2 - 1/4) ]"
    assert validate(pullback(sq, Z)).ok


def test_pullback_errors(P1):
    f, Zx, _ = diagonal_example()
    with pytest.raises(SchemeMismatchError):
        pullback(f, pt(P1, 1, 2))
    U, Vv = P1.patches
    broken = SchemeMorphism(P1, P1, [(0, RingMap(U, U, ["u^2"])), (1, RingMap(Vv, Vv, ["v^3"]))])
    with pytest.raises(InvalidMorphismError):
        pullback(broken, pt(P1, 1, 2))
    with pytest.raises(SchemeMismatchError):
        mul(Zx, pt(P1, 1, 2))


def test_from_surjection_examples():
    Q = AffineAlgebra(["x"])
    powers = [from_surjection(canonical_surjection(Q.ideal(f"x^{n}"))) for n in range(1, 6)]
    assert [str(Z) for Z in powers] == [f"[ ({'x' if n == 1 else f'x^{n}'}) ]" for n in range(1, 6)]
    assert eq(from_surjection(RingMap.identity(A)), whole(GluedScheme.affine(A)))
    T = AffineAlgebra(["t"])
    with pytest.raises(NotClosedImmersionError):
        from_surjection(RingMap(A, T, ["t^2", "t^3"]))


def test_family_length_checked(P1):
    U = P1.patches[0]
    with pytest.raises(ValueError):
        ClosedSubscheme(P1, [U.ideal("u")])
    with pytest.raises(ValueError):
        ClosedSubscheme(P1, [U.ideal("u"), U.ideal("u")])


# random subschemes of the plane cut out by small binomials
terms = st.tuples(coeffs, st.tuples(st.integers(0, 2), st.integers(0, 2)))
gens = st.lists(terms, min_size=1, max_size=2).map(lambda ts: A.ring.from_terms(ts)).filter(
    lambda g: g and not g.is_constant())
subschemes = st.lists(gens, min_size=1, max_size=2).map(lambda gs: ClosedSubscheme(X, [Ideal(A, gs)]))


@settings(max_examples=30)
@given(subschemes, subschemes, subschemes)
def test_monoid_laws(Z, W, U):
    assert eq(mul(Z, W), mul(W, Z)) and eq(add(Z, W), add(W, Z))
    assert eq(mul(mul(Z, W), U), mul(Z, mul(W, U)))
    assert eq(add(add(Z, W), U), add(Z, add(W, U)))
    assert eq(mul(Z, Z), Z) and eq(add(Z, Z), Z)
    assert eq(mul(Z, whole(X)), Z) and eq(add(Z, empty(X)), Z)


@settings(max_examples=30)
@given(subschemes, subschemes)
def test_absorption(Z, W):
    assert eq(add(Z, mul(Z, W)), Z)
    assert eq(mul(Z, add(Z, W)), Z)


@settings(max_examples=30)
@given(subschemes, subschemes, st.sampled_from([["t", "t"], ["t^2", "t - 1"], ["0", "t^3"]]))
def test_pullback_preserves_mul(Z, W, images):
    T = AffineAlgebra(["t"])
    f = affine_morphism(GluedScheme.affine(T), X, RingMap(A, T, images))
    assert eq(pullback(f, mul(Z, W)), mul(pullback(f, Z), pullback(f, W)))
    ident = SchemeMorphism.identity(X)
    assert eq(pullback(ident, Z), Z)
