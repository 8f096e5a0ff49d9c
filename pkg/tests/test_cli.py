import io
import os
import subprocess
import sys
from pathlib import Path

import pytest

from subscheme_calc.cli import ScriptError, execute, parse_script
from subscheme_calc.cli.main import main
from subscheme_calc.cli.script import CheckCmd, EvalCmd, LawsCmd, RingDecl, SchemeDecl, SubschemeDecl
from subscheme_calc.polyring import LEX_ORDER

ROOT = Path(__file__).resolve().parent.parent
SAMPLES = ROOT / "samples"
GOLDEN = Path(__file__).resolve().parent / "golden"

# (golden name, argv after "run")
GOLDEN_CASES = [
    ("p1", ["p1.ssc"]),
    ("p1_cocycle_lex", ["p1.ssc", "--cocycle-check", "--order", "lex"]),
    ("p2_cocycle", ["p2.ssc", "--cocycle-check"]),
    ("diagonal", ["diagonal.ssc"]),
    ("doubled_origin", ["doubled_origin.ssc"]),
    ("bad_glue", ["bad_glue.ssc"]),
    ("syntax_error", ["syntax_error.ssc"]),
]


def run_cli(argv):
    """Run the driver in-process from the samples directory; returns a transcript."""
    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(SAMPLES)
    try:
        code = main(["run", *argv], out, err)
    finally:
        os.chdir(cwd)
    return f"$ subscheme-calc run {' '.join(argv)}\n{out.getvalue()}[stderr]\n{err.getvalue()}[exit {code}]\n"


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden(name, argv):
    expected = (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")
    first = run_cli(argv)
    assert first == expected
    assert run_cli(argv) == first


P1_TEXT = (SAMPLES / "p1.ssc").read_text(encoding="utf-8")


def test_p1_sample_has_seven_statements():
    s = parse_script(P1_TEXT)
    assert len(s) == 7
    kinds = [type(st) for st in s.statements]
    assert kinds == [RingDecl, RingDecl, SchemeDecl, SubschemeDecl, SubschemeDecl, EvalCmd, EvalCmd]
    assert s.statements[2].glue[0].images == {"u": "#inv(v)"}


def error_of(text):
    with pytest.raises(ScriptError) as e:
        parse_script(text)
    return e.value


def test_syntax_error_position():
    e = error_of("ring A = QQ[x, y];\nideal I in A = (x^2 -")
    assert (e.line, e.col) == (2, 22)


def test_redeclaration():
    e = error_of("ring A = QQ[x];\nring A = QQ[y];")
    assert e.line == 2 and "already" in e.message


def test_unknown_name():
    e = error_of("ring A = QQ[x];\nideal I in B = (x);")
    assert (e.line, e.col) == (2, 12)


def test_reserved_variable_prefix():
    e = error_of("ring A = QQ[x, #t];")
    assert e.col == 16
    e = error_of("ring A = QQ[x];\nideal I in A = (#t);")
    assert "reserved" in e.message


def test_unknown_variable_position():
    e = error_of("ring A = QQ[x];\nideal I in A = (x, y + 1);")
    assert (e.line, e.col) == (2, 20)


def test_patch_index_out_of_range():
    e = error_of("ring A = QQ[u];\nscheme X { patch A; glue 0:u ~ 1:u via { u -> u }; }")
    assert "out of range" in e.message


def test_wrong_kind_of_name():
    e = error_of("ring A = QQ[x];\neval mul(A, A);")
    assert e.line == 2


def test_comments_and_inverse_hooks():
    s = parse_script("# a comment\nring A = QQ[u]; # trailing\n##\nring B = QQ[v];\n"
                     "scheme X { patch A; patch B; glue 0:u ~ 1:v via { u -> 3*#inv(v) }; }\n")
    assert len(s) == 3


def test_laws_and_check_statements():
    s = parse_script("laws groebner seed=5;\nlaws all;\nring A = QQ[x];\nideal I in A = (x);\ncheck I;")
    assert isinstance(s.statements[0], LawsCmd) and s.statements[0].seed == 5
    assert s.statements[1].seed is None
    assert isinstance(s.statements[-1], CheckCmd)
    assert error_of("laws widgets;").message.startswith("unknown law module")


def run_text(text, **kw):
    return execute(parse_script(text), **kw)


def test_execute_examples():
    res = run_text(P1_TEXT + "eval add(Z, empty(P1));\neval eq(add(Z, empty(P1)), Z);\n")
    assert res.output == ["true", "[ (u^2 - 2*u) ; (v - 1/2) ]", "[ (u - 2) ; (v - 1/2) ]", "true"]
    assert res.code == 0


def test_eval_on_ideals():
    res = run_text("ring A = QQ[x, y];\nideal I in A = (x);\nideal J in A = (y);\n"
                   "eval add(I, J);\neval mul(I, J);\neval canon(I);\neval eq(I, J);")
    assert res.output == ["(x*y)", "(x, y)", "(x)", "false"]
    assert res.code == 1


def test_eq_false_sets_exit_one_but_keeps_going():
    res = run_text(P1_TEXT + "eval eq(Z, W);\neval whole(P1);")
    assert res.output[-2:] == ["false", "[ (0) ; (0) ]"]
    assert res.code == 1


def test_invalid_subscheme_stops_execution():
    res = run_text("ring A = QQ[u];\nring B = QQ[v];\n"
                   "scheme P1 { patch A; patch B; glue 0:u ~ 1:v via { u -> #inv(v) }; }\n"
                   "subscheme Z of P1 = [ (u - 2) ; (v - 1) ];\neval whole(P1);")
    assert res.code == 1
    assert res.output == []
    assert res.errors[0] == "line 4: validation failed for subscheme Z"
    assert "FAIL compatible 0->1" in res.errors[1]


def test_invalid_morphism_reported():
    res = run_text("ring A = QQ[u];\nring B = QQ[v];\n"
                   "scheme P1 { patch A; patch B; glue 0:u ~ 1:v via { u -> #inv(v) }; }\n"
                   "morphism f : P1 -> P1 { patch 0 -> 0 via { u -> u^2 }; patch 1 -> 1 via { v -> v^3 }; }\n")
    assert res.code == 1
    assert res.errors[0] == "line 4: validation failed for morphism f"


def test_type_errors_exit_two():
    text = ("ring A = QQ[x];\nring B = QQ[y];\nideal I in A = (x);\nideal J in B = (y);\n"
            "scheme X { patch A; }\nsubscheme Z of X = [ (x) ];\n")
    res = run_text(text + "eval mul(I, J);")
    assert res.code == 2 and res.script_error.line == 7
    res = run_text(text + "eval add(Z, I);")
    assert res.code == 2
    res = run_text(text + "eval mul(eq(Z, Z), Z);")
    assert res.code == 2


def test_order_flag_changes_display():
    text = "ring A = QQ[x, y];\nideal I in A = (x - y^3);\neval canon(I);"
    assert run_text(text).output == ["(y^3 - x)"]
    assert run_text(text, order=LEX_ORDER).output == ["(x - y^3)"]


def test_check_output():
    res = run_text(P1_TEXT + "check Z;\ncheck A;")
    assert res.output[2:] == ["check Z: ok", "  PASS compatible 0->1", "  PASS compatible 1->0",
                              "check A: ok", "  PASS nonzero ring"]


def test_laws_statement():
    res = run_text("laws groebner seed=3;")
    assert res.output[0] == "laws groebner seed=3: ok"
    assert res.code == 0


def test_laws_subcommand():
    out = io.StringIO()
    assert main(["laws", "--module", "scheme", "--seed", "4"], out) == 0
    lines = out.getvalue().splitlines()
    assert lines[0] == "PASS scheme: P1 valid (pairwise)"
    assert lines[-1] == "6 checks, 0 failed, 0 violated (seed=4)"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "subscheme_calc.cli.main", "run", "p1.ssc"],
                          cwd=SAMPLES, capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "true\n[ (u^2 - 2*u) ; (v - 1/2) ]\n"


def test_missing_file():
    err = io.StringIO()
    assert main(["run", "does-not-exist.ssc"], io.StringIO(), err) == 2
    assert err.getvalue().startswith("does-not-exist.ssc: error:")


def test_bad_arguments_exit_two():
    with pytest.raises(SystemExit) as e:
        main(["run", "x.ssc", "--order", "deglex"], io.StringIO(), io.StringIO())
    assert e.value.code == 2


def regenerate():  # pragma: no cover - maintenance helper
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in GOLDEN_CASES:
        (GOLDEN / f"{name}.txt").write_text(run_cli(argv), encoding="utf-8")


if __name__ == "__main__":  # pragma: no cover
    regenerate()
