import pytest

from subscheme_calc.laws import DEFAULT_SEED, MODULES, SUITES, oracle_laws, run_laws


@pytest.mark.parametrize("module", [m for m in MODULES if m != "oracle"])
@pytest.mark.parametrize("seed", [DEFAULT_SEED, 11])
def test_suites_pass(module, seed):
    rep = SUITES[module](seed)
    assert rep.ok, [c.line() for c in rep.failures]


def test_oracle_suite_small():
    rep = oracle_laws(5, max_n=120, cases=30)
    assert rep.ok
    assert rep.checks[0].name == "cyc_laws(n) for all n <= 120"


def test_only_violation_is_the_additive_law():
    rep = run_laws("subscheme")
    assert [c.name for c in rep.violations] == ["subscheme: pullback preserves add"]


def test_seeds_are_reproducible():
    assert run_laws("algebra", 3).lines() == run_laws("algebra", 3).lines()


def test_unknown_module():
    with pytest.raises(KeyError):
        run_laws("widgets")
