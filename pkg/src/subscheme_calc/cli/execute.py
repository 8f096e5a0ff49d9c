"""Run a parsed script against the library."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import AffineAlgebra, Ideal, RingMap, ideal_intersect, ideal_sum
from ..laws import DEFAULT_SEED, run_laws
from ..polyring import GREVLEX_ORDER, MonomialOrder
from ..report import Report
from ..scheme import GluedScheme, SchemeMorphism, validate_scheme
from ..subscheme import ClosedSubscheme, add, canon, empty, eq, mul, pullback, validate, whole
from .script import (
    CheckCmd,
    EvalCmd,
    Expr,
    IdealDecl,
    LawsCmd,
    MorphismDecl,
    RingDecl,
    SchemeDecl,
    Script,
    ScriptError,
    SubschemeDecl,
)


class ValidationFailure(Exception):
    """A declaration failed eager validation; execution stops."""


@dataclass
class Result:
    output: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    code: int = 0
    script_error: ScriptError | None = None

    @property
    def stdout(self) -> str:
        return "".join(line + "\n" for line in self.output)

    @property
    def stderr(self) -> str:
        return "".join(line + "\n" for line in self.errors)


class Executor:
    def __init__(self, order: MonomialOrder = GREVLEX_ORDER, cocycle: bool = False):
        self.order = order
        self.cocycle = cocycle
        self.env: dict[str, object] = {}
        self.result = Result()

    # helpers

    def fail(self, stmt, what: str, report: Report | None = None, message: str = ""):
        errs = self.result.errors
        errs.append(f"line {stmt.line}: validation failed for {what}")
        if message:
            errs.append(f"  {message}")
        if report is not None:
            errs.extend("  " + c.line() for c in report.failures)
        self.result.code = 1
        raise ValidationFailure(what)

    def _type_error(self, e: Expr, message: str):
        raise ScriptError(message, e.line, e.col)

    # statements

    def run(self, script: Script) -> Result:
        for stmt in script.statements:
            try:
                self.statement(stmt)
            except ValidationFailure:
                break
            except ScriptError as e:
                self.result.script_error = e
                self.result.code = 2
                break
        return self.result

    def statement(self, stmt):
        if isinstance(stmt, RingDecl):
            A = AffineAlgebra(stmt.variables, stmt.relations, self.order)
            self.env[stmt.name] = A
        elif isinstance(stmt, IdealDecl):
            A = self.env[stmt.ring]
            self.env[stmt.name] = A.ideal(*stmt.generators)
        elif isinstance(stmt, SchemeDecl):
            self.scheme(stmt)
        elif isinstance(stmt, MorphismDecl):
            self.morphism(stmt)
        elif isinstance(stmt, SubschemeDecl):
            X = self.env[stmt.scheme]
            if len(stmt.ideals) != len(X.patches):
                self.fail(stmt, f"subscheme {stmt.name}",
                          message=f"{stmt.scheme} has {len(X.patches)} patches, got {len(stmt.ideals)} ideals")
            Z = ClosedSubscheme.from_generators(X, stmt.ideals, stmt.name)
            rep = validate(Z)
            if not rep.ok:
                self.fail(stmt, f"subscheme {stmt.name}", rep)
            self.env[stmt.name] = Z
        elif isinstance(stmt, EvalCmd):
            value = self.evaluate(stmt.expr)
            if isinstance(value, bool):
                self.result.output.append("true" if value else "false")
                if not value:
                    self.result.code = 1
            else:
                self.result.output.append(str(value))
        elif isinstance(stmt, CheckCmd):
            self.check(stmt)
        elif isinstance(stmt, LawsCmd):
            seed = DEFAULT_SEED if stmt.seed is None else stmt.seed
            rep = run_laws(stmt.module, seed)
            self.result.output.append(f"laws {stmt.module} seed={seed}: {'ok' if rep.ok else 'FAILED'}")
            self.result.output.extend("  " + line for line in rep.lines())
            if not rep.ok:
                self.result.code = 1
        else:  # pragma: no cover - the parser only builds the types above
            raise TypeError(f"unknown statement {stmt!r}")

    def scheme(self, stmt: SchemeDecl):
        patches = [self.env[r] for r in stmt.patches]
        specs = [(g.i, g.j, g.f_ij, g.f_ji, g.images, g.inverse_image) for g in stmt.glue]
        try:
            X = GluedScheme.glued(patches, specs, name=stmt.name)
        except ValueError as e:
            self.fail(stmt, f"scheme {stmt.name}", message=str(e))
        rep = validate_scheme(X, cocycle=self.cocycle)
        if not rep.ok:
            self.fail(stmt, f"scheme {stmt.name}", rep)
        self.env[stmt.name] = X

    def morphism(self, stmt: MorphismDecl):
        X, Y = self.env[stmt.source], self.env[stmt.target]
        try:
            assignment = [None] * len(X.patches)
            for pm in stmt.patches:
                if not 0 <= pm.target_patch < len(Y.patches):
                    raise ValueError(f"{stmt.target} has no patch {pm.target_patch}")
                if not 0 <= pm.source_patch < len(X.patches):
                    raise ValueError(f"{stmt.source} has no patch {pm.source_patch}")
                phi = RingMap(Y.patches[pm.target_patch], X.patches[pm.source_patch], pm.images)
                assignment[pm.source_patch] = (pm.target_patch, phi)
            missing = [i for i, a in enumerate(assignment) if a is None]
            if missing:
                raise ValueError(f"no map given for source patches {missing}")
            f = SchemeMorphism(X, Y, assignment, stmt.name)
        except ValueError as e:
            self.fail(stmt, f"morphism {stmt.name}", message=str(e))
        rep = f.report()
        if not rep.ok:
            self.fail(stmt, f"morphism {stmt.name}", rep)
        self.env[stmt.name] = f

    def check(self, stmt: CheckCmd):
        obj = self.env[stmt.name]
        if isinstance(obj, GluedScheme):
            rep = validate_scheme(obj, cocycle=self.cocycle)
        elif isinstance(obj, SchemeMorphism):
            rep = obj.report()
        elif isinstance(obj, ClosedSubscheme):
            rep = validate(obj)
        elif isinstance(obj, AffineAlgebra):
            rep = Report()
            rep.check("nonzero ring", not obj.is_zero_ring(), "" if not obj.is_zero_ring() else "relations generate (1)")
        else:
            rep = Report()
            rep.check("ideal", True, str(obj))
        self.result.output.append(f"check {stmt.name}: {'ok' if rep.ok else 'FAILED'}")
        self.result.output.extend("  " + line for line in rep.lines())
        if not rep.ok:
            self.result.code = 1

    # expressions

    def evaluate(self, e: Expr):
        if e.op == "name":
            return self.env[e.name]
        if e.op in ("whole", "empty"):
            X = self.env[e.args[0].name]
            return whole(X) if e.op == "whole" else empty(X)
        if e.op == "pullback":
            f = self.env[e.args[0].name]
            Z = self.evaluate(e.args[1])
            if not isinstance(Z, ClosedSubscheme):
                self._type_error(e, "pullback needs a subscheme")
            if Z.scheme != f.target:
                self._type_error(e, f"{e.args[0].name} does not map into the subscheme's scheme")
            return pullback(f, Z)
        args = [self.evaluate(a) for a in e.args]
        if any(isinstance(a, bool) for a in args):
            self._type_error(e, f"{e.op} cannot take a truth value")
        if e.op == "canon":
            (Z,) = args
            return canon(Z) if isinstance(Z, ClosedSubscheme) else Z.canon()
        a, b = args
        if isinstance(a, Ideal) and isinstance(b, Ideal):
            if a.algebra != b.algebra:
                self._type_error(e, f"{e.op}: ideals live in different rings")
            return {"mul": ideal_sum, "add": ideal_intersect, "eq": lambda I, J: I == J}[e.op](a, b)
        if isinstance(a, ClosedSubscheme) and isinstance(b, ClosedSubscheme):
            if a.scheme != b.scheme:
                self._type_error(e, f"{e.op}: subschemes of different schemes")
            return {"mul": mul, "add": add, "eq": eq}[e.op](a, b)
        self._type_error(e, f"{e.op}: operands must both be subschemes or both ideals")


def execute(script: Script, order: MonomialOrder = GREVLEX_ORDER, cocycle: bool = False) -> Result:
    """Run ``script``; eval output, reports and the exit code come back in a ``Result``."""
    return Executor(order, cocycle).run(script)
