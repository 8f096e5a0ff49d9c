"""The compiled and pure-Python kernels must agree exactly."""

import os
import subprocess
import sys

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from strategies import coeffs
from subscheme_calc import kernels
from subscheme_calc.polyring import GREVLEX_ORDER, LEX_ORDER, block_order

py = kernels.load_backend("python")
try:
    cy = kernels.load_backend("cython")
except ImportError:  # pragma: no cover - depends on the build
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled kernel not built")

mono = st.tuples(*[st.integers(0, 4)] * 3)
polys = st.dictionaries(mono, coeffs.map(lambda c: mpq(c.numerator, c.denominator)), max_size=5)
codes = st.sampled_from([o.code for o in (LEX_ORDER, GREVLEX_ORDER, block_order(1), block_order(2))])


def divisors_of(ps, code):
    out = []
    for g in ps:
        if g:
            lm = py.leading_monomial(g, code)
            out.append((lm, g[lm], g))
    return out


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    if cy is not None and os.environ.get("SUBSCHEME_CALC_PURE", "") in ("", "0"):
        assert kernels.BACKEND == "cython"


def test_pure_switch():
    env = dict(os.environ, SUBSCHEME_CALC_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from subscheme_calc import BACKEND; print(BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.load_backend("rust")


@needs_ext
@given(polys, polys, codes)
def test_arithmetic_agrees(p, q, code):
    assert cy.add(p, q) == py.add(p, q)
    assert cy.mul(p, q) == py.mul(p, q)
    if p:
        assert cy.leading_monomial(p, code) == py.leading_monomial(p, code)
        m = next(iter(p))
        assert cy.mul_term(q, m, p[m]) == py.mul_term(q, m, p[m])


@needs_ext
@given(polys, st.lists(polys, max_size=3), codes, st.booleans())
def test_normal_form_agrees(p, gs, code, full):
    divs = divisors_of(gs, code)
    assert cy.normal_form(p, divs, code, full) == py.normal_form(p, divs, code, full)


@needs_ext
@given(st.lists(mono, min_size=2, max_size=8), codes)
def test_sort_keys_agree(ms, code):
    assert sorted(ms, key=cy.sort_key(code)) == sorted(ms, key=py.sort_key(code))


@needs_ext
@pytest.mark.parametrize("n,t", [(1, 1), (12, 12), (60, 30), (200, 50)])
def test_integer_tables_agree(n, t):
    assert cy.integer_law_table(n, t) == py.integer_law_table(n, t)


def test_cancellation_drops_zero_terms():
    for impl in filter(None, (py, cy)):
        p = {(1, 0, 0): mpq(3, 2)}
        neg = impl.mul_term(p, (0, 0, 0), -1)
        assert impl.add(p, neg) == {}


def test_benchmark_workloads_run():
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    assert len(bench.katsura(5)[1]) == 6
    assert len(bench.cyclic(5)[1]) == 5
    G = bench._groebner(bench.katsura(3))()
    assert len(G.generators) > 0
    assert all(bench._integer_table(30, 10)().values())
