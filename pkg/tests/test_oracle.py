"""Oracles first: the integer, cyclic-ring and univariate references."""

import pytest
from hypothesis import given, strategies as st

from subscheme_calc import kernels, oracle
from subscheme_calc.oracle import (
    CyclicRingSubscheme,
    IntegerSubscheme,
    cyc_laws,
    divisors,
    int_add,
    int_mul,
    integer_laws,
    prime_power_structures,
    uni_gcd_oracle,
    uni_intersect_oracle,
)
from subscheme_calc.polyring import PolyRing

R = PolyRing(["x"])


def test_int_mul_is_gcd():
    assert int_mul(IntegerSubscheme(4), IntegerSubscheme(6)) == IntegerSubscheme(2)
    assert IntegerSubscheme(9) * IntegerSubscheme(0) == IntegerSubscheme(9)
    assert IntegerSubscheme(9) * IntegerSubscheme(9) == IntegerSubscheme(9)


def test_int_add_is_lcm():
    assert int_add(IntegerSubscheme(4), IntegerSubscheme(6)) == IntegerSubscheme(12)
    assert IntegerSubscheme(9) + IntegerSubscheme(1) == IntegerSubscheme(9)
    assert IntegerSubscheme(9) + IntegerSubscheme(0) == IntegerSubscheme(0)


def test_negative_generator_rejected():
    with pytest.raises(ValueError):
        IntegerSubscheme(-4)


def test_support():
    assert IntegerSubscheme(360).support() == {2, 3, 5}
    assert IntegerSubscheme(1).support() == frozenset()
    assert IntegerSubscheme(0).support() == {0}


def test_divisors_frozen():
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
    assert divisors(1) == [1]
    assert divisors(97) == [1, 97]


def test_cyc_laws_12():
    rep = cyc_laws(12)
    assert rep.ok
    assert len(rep.checks) == 13
    assert rep.lines()[0] == "PASS ZZ/12 closure over 6 ideals"


def test_cyc_laws_1_is_vacuous():
    assert cyc_laws(1).ok


def test_cyc_extension_keeps_add_on_36():
    # (4) + (9) = (36) in ZZ/36; extending to ZZ/6 gives (6) either way
    a, b = CyclicRingSubscheme(36, 4), CyclicRingSubscheme(36, 9)
    assert (a + b).extend(6) == a.extend(6) + b.extend(6) == CyclicRingSubscheme(6, 6)


def test_cyc_rejects_non_divisor():
    with pytest.raises(ValueError):
        CyclicRingSubscheme(12, 5)


def test_cyc_laws_detect_a_broken_lcm(monkeypatch):
    monkeypatch.setattr(oracle, "lcm", lambda a, b: a * b)
    assert not cyc_laws(12).ok


def test_integer_laws_frozen_lines():
    assert integer_laws(50).lines() == [
        "PASS Spec ZZ commutative (m <= 50)",
        "PASS Spec ZZ idempotent (m <= 50)",
        "PASS Spec ZZ identities (m <= 50)",
        "PASS Spec ZZ absorption (m <= 50)",
        "PASS Spec ZZ mul associative (m <= 50)",
        "PASS Spec ZZ add associative (m <= 50)",
    ]


@pytest.mark.parametrize("name", ["python", "cython"])
def test_integer_table_backends_agree(name):
    try:
        impl = kernels.load_backend(name)
    except ImportError:
        pytest.skip("compiled kernel not built")
    res = impl.integer_law_table(120, 40)
    assert all(res.values())
    assert set(res) == {"commutative", "idempotent", "identities", "absorption",
                        "mul associative", "add associative"}


def test_prime_powers_distinct_with_one_support():
    structs = prime_power_structures(7)
    assert len(structs) == 20
    assert len({s.m for s in structs}) == 20
    assert {s.support() for s in structs} == {frozenset({7})}


def test_uni_oracles_frozen():
    f, g = R.parse("x^2*(x - 1)"), R.parse("x*(x - 1)^2")
    assert str(uni_intersect_oracle(f, g)) == "x^4 - 2*x^3 + x^2"
    assert str(uni_gcd_oracle(f, g)) == "x^2 - x"
    assert str(uni_intersect_oracle(R.parse("x"), R.parse("x - 1"))) == "x^2 - x"
    h = R.parse("2*x^2 - 4")
    assert str(uni_intersect_oracle(h, h)) == "x^2 - 2"


def test_uni_gcd_of_zero():
    assert str(uni_gcd_oracle(R.zero, R.parse("3*x + 6"))) == "x + 2"
    with pytest.raises(ValueError):
        uni_intersect_oracle(R.zero, R.parse("x"))


roots = st.lists(st.integers(-4, 4), min_size=1, max_size=4)


def _from_roots(rs, lead=1):
    f = R.const(lead)
    for r in rs:
        f = f * (R.gen(0) - r)
    return f


@given(roots, roots)
def test_uni_oracles_match_root_multisets(a, b):
    # gcd and lcm of split polynomials are min/max of root multiplicities
    ra, rb = {r: a.count(r) for r in a}, {r: b.count(r) for r in b}
    g = [r for r in ra if r in rb for _ in range(min(ra[r], rb[r]))]
    l = [r for r in set(a) | set(b) for _ in range(max(ra.get(r, 0), rb.get(r, 0)))]
    f1, f2 = _from_roots(a, 3), _from_roots(b, -2)
    assert uni_gcd_oracle(f1, f2) == _from_roots(g)
    assert uni_intersect_oracle(f1, f2) == _from_roots(l)


@given(st.integers(0, 300), st.integers(0, 300), st.integers(0, 300))
def test_integer_lattice_laws(a, b, c):
    A, B, C = IntegerSubscheme(a), IntegerSubscheme(b), IntegerSubscheme(c)
    assert (A * B) * C == A * (B * C)
    assert (A + B) + C == A + (B + C)
    assert A + (A * B) == A and A * (A + B) == A
