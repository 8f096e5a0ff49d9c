"""Parser for ``.ssc`` scripts.

A script is a sequence of ``;``-terminated statements::

    ring A = QQ[x, y] / (x^2 - y);
    ideal I in A = (x, y^2);
    scheme X { patch U; patch V; glue 0:u ~ 1:v via { u -> #inv(v) }; }
    morphism f : X -> Y { patch 0 -> 0 via { x -> t^2 }; }
    subscheme Z of X = [ (u - 2) ; (2*v - 1) ];
    eval mul(Z, W);
    check X;
    laws subscheme seed=7;

``#`` followed by a space (or ending the line) starts a comment, so
``#inv(...)`` inside expressions is left alone. Parsing resolves names and
parses every polynomial against its ring, so errors carry a line and
column; the algebra itself is built later by the executor.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..laws import MODULES
from ..polyring import ParseError, PolyRing, is_internal_name, parse_poly

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")


class ScriptError(Exception):
    """A parse or name-resolution error at a 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# -- AST ---------------------------------------------------------------------

@dataclass
class Statement:
    line: int
    col: int


@dataclass
class RingDecl(Statement):
    name: str
    variables: list[str]
    relations: list[str]


@dataclass
class IdealDecl(Statement):
    name: str
    ring: str
    generators: list[str]


@dataclass
class GlueDecl:
    i: int
    f_ij: str
    j: int
    f_ji: str
    images: dict[str, str]
    inverse_image: str | None
    line: int
    col: int


@dataclass
class SchemeDecl(Statement):
    name: str
    patches: list[str]
    glue: list[GlueDecl]


@dataclass
class PatchMap:
    source_patch: int
    target_patch: int
    images: dict[str, str]
    line: int
    col: int


@dataclass
class MorphismDecl(Statement):
    name: str
    source: str
    target: str
    patches: list[PatchMap]


@dataclass
class SubschemeDecl(Statement):
    name: str
    scheme: str
    ideals: list[list[str]]


@dataclass
class Expr:
    """``op`` is a name reference (``"name"``) or an operator with arguments."""

    op: str
    args: list = field(default_factory=list)
    name: str = ""
    line: int = 0
    col: int = 0

    def __str__(self):
        if self.op == "name":
            return self.name
        return f"{self.op}({', '.join(str(a) for a in self.args)})"


@dataclass
class EvalCmd(Statement):
    expr: Expr


@dataclass
class CheckCmd(Statement):
    name: str


@dataclass
class LawsCmd(Statement):
    module: str
    seed: int | None


@dataclass
class Script:
    statements: list[Statement]

    def __len__(self):
        return len(self.statements)


# -- scanner -----------------------------------------------------------------

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self._starts = [0]
        for k, ch in enumerate(text):
            if ch == "\n":
                self._starts.append(k + 1)

    def where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        lo, hi = 0, len(self._starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._starts[mid] <= pos:
                lo = mid
            else:
                hi = mid - 1
        return lo + 1, pos - self._starts[lo] + 1

    def error(self, message: str, pos: int | None = None) -> ScriptError:
        return ScriptError(message, *self.where(pos))

    def _is_comment(self, k: int) -> bool:
        nxt = self.text[k + 1: k + 2]
        return nxt == "" or nxt.isspace() or nxt == "#"

    def skip(self):
        t = self.text
        while self.pos < len(t):
            ch = t[self.pos]
            if ch.isspace():
                self.pos += 1
            elif ch == "#" and self._is_comment(self.pos):
                end = t.find("\n", self.pos)
                self.pos = len(t) if end < 0 else end
            else:
                break

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def peek(self, literal: str) -> bool:
        self.skip()
        return self.text.startswith(literal, self.pos)

    def accept(self, literal: str) -> bool:
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str, what: str | None = None):
        if not self.accept(literal):
            found = self.text[self.pos: self.pos + 12].split("\n")[0] or "end of input"
            raise self.error(f"expected {what or repr(literal)}, found {found!r}")

    def ident(self, what: str = "a name") -> tuple[str, int]:
        self.skip()
        m = _IDENT.match(self.text, self.pos)
        if not m:
            if self.text.startswith("#", self.pos):
                raise self.error("names starting with '#' are reserved for internal variables")
            raise self.error(f"expected {what}")
        start = self.pos
        self.pos = m.end()
        return m.group(), start

    def keyword(self, word: str) -> bool:
        self.skip()
        m = _IDENT.match(self.text, self.pos)
        if m and m.group() == word:
            self.pos = m.end()
            return True
        return False

    def integer(self, what: str = "an integer") -> int:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        self.pos = m.end()
        return int(m.group())

    def chunk(self, stops: str) -> tuple[str, int]:
        """Raw text up to a top-level stop character; parentheses must balance."""
        self.skip()
        start = self.pos
        depth = 0
        t = self.text
        while self.pos < len(t):
            ch = t[self.pos]
            if ch == "#" and self._is_comment(self.pos):
                break
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0 and ")" in stops:
                    break
                depth -= 1
                if depth < 0:
                    raise self.error("unbalanced ')'")
            elif depth == 0 and ch in stops:
                break
            elif ch in ";{}[]" and depth > 0:
                raise self.error("unclosed '('", start)
            self.pos += 1
        if depth:
            raise self.error("unclosed '('", start)
        text = t[start: self.pos].rstrip()
        if not text:
            raise self.error("expected an expression")
        return text, start


# -- parser ------------------------------------------------------------------

_KIND_RING, _KIND_IDEAL, _KIND_SCHEME, _KIND_MORPHISM, _KIND_SUBSCHEME = (
    "ring", "ideal", "scheme", "morphism", "subscheme")

_EXPR_OPS = {
    "mul": 2, "add": 2, "eq": 2, "pullback": 2, "canon": 1, "whole": 1, "empty": 1,
}


class _Parser:
    def __init__(self, text: str):
        self.sc = _Scanner(text)
        self.kinds: dict[str, str] = {}
        self.rings: dict[str, PolyRing] = {}
        self.schemes: dict[str, list[str]] = {}

    # names

    def declare(self, name: str, kind: str, pos: int):
        if name in self.kinds:
            raise self.sc.error(f"redeclaration of {name!r} (already a {self.kinds[name]})", pos)
        self.kinds[name] = kind

    def use(self, name: str, pos: int, *kinds: str):
        kind = self.kinds.get(name)
        if kind is None:
            raise self.sc.error(f"unknown name {name!r}", pos)
        if kinds and kind not in kinds:
            raise self.sc.error(f"{name!r} is a {kind}, expected a {' or '.join(kinds)}", pos)
        return kind

    # polynomials

    def poly(self, text: str, start: int, ring: PolyRing, hooks=None) -> str:
        try:
            parse_poly(text, ring, hooks)
        except ParseError as e:
            raise self.sc.error(e.message, start + e.offset) from None
        return text

    def poly_list(self, ring: PolyRing, close: str = ")") -> list[str]:
        """Comma-separated polynomials up to ``close`` (already past the opener)."""
        out = []
        if self.sc.accept(close):
            return out
        while True:
            text, start = self.sc.chunk("," + close)
            out.append(self.poly(text, start, ring))
            if self.sc.accept(","):
                continue
            self.sc.expect(close)
            return out

    # statements

    def parse(self) -> Script:
        stmts = []
        while not self.sc.at_end():
            stmts.append(self.statement())
        return Script(stmts)

    def statement(self) -> Statement:
        sc = self.sc
        sc.skip()
        line, col = sc.where()
        word, pos = sc.ident("a statement keyword")
        handler = {
            "ring": self.ring_decl, "ideal": self.ideal_decl, "scheme": self.scheme_decl,
            "morphism": self.morphism_decl, "subscheme": self.subscheme_decl,
            "eval": self.eval_cmd, "check": self.check_cmd, "laws": self.laws_cmd,
        }.get(word)
        if handler is None:
            raise sc.error(f"unknown statement {word!r}", pos)
        stmt = handler(line, col)
        if isinstance(stmt, (SchemeDecl, MorphismDecl)):
            sc.accept(";")  # block statements end at '}'
        else:
            sc.expect(";", "';'")
        return stmt

    def ring_decl(self, line, col) -> RingDecl:
        sc = self.sc
        name, pos = sc.ident("a ring name")
        sc.expect("=")
        if not sc.keyword("QQ"):
            raise sc.error("expected 'QQ' (rings are over the rationals)")
        sc.expect("[")
        variables = []
        if not sc.accept("]"):
            while True:
                v, vpos = sc.ident("a variable name")
                if v in variables:
                    raise sc.error(f"duplicate variable {v!r}", vpos)
                variables.append(v)
                if sc.accept(","):
                    continue
                sc.expect("]")
                break
        ring = PolyRing(variables)
        relations = []
        if sc.accept("/"):
            sc.expect("(")
            relations = self.poly_list(ring)
        self.declare(name, _KIND_RING, pos)
        self.rings[name] = ring
        return RingDecl(line, col, name, variables, relations)

    def ideal_decl(self, line, col) -> IdealDecl:
        sc = self.sc
        name, pos = sc.ident("an ideal name")
        if not sc.keyword("in"):
            raise sc.error("expected 'in'")
        ring, rpos = sc.ident("a ring name")
        self.use(ring, rpos, _KIND_RING)
        sc.expect("=")
        sc.expect("(")
        gens = self.poly_list(self.rings[ring])
        self.declare(name, _KIND_IDEAL, pos)
        return IdealDecl(line, col, name, ring, gens)

    def scheme_decl(self, line, col) -> SchemeDecl:
        sc = self.sc
        name, pos = sc.ident("a scheme name")
        sc.expect("{")
        patches: list[str] = []
        glue: list[GlueDecl] = []
        while not sc.accept("}"):
            if sc.keyword("patch"):
                ring, rpos = sc.ident("a ring name")
                self.use(ring, rpos, _KIND_RING)
                patches.append(ring)
            elif sc.keyword("glue"):
                glue.append(self.glue_decl(patches))
            else:
                raise sc.error("expected 'patch', 'glue' or '}'")
            sc.expect(";", "';'")
        if not patches:
            raise sc.error("a scheme needs at least one patch", pos)
        self.declare(name, _KIND_SCHEME, pos)
        self.schemes[name] = patches
        return SchemeDecl(line, col, name, patches, glue)

    def _patch_index(self, patches: list[str], what: str) -> tuple[int, int]:
        self.sc.skip()
        pos = self.sc.pos
        k = self.sc.integer(what)
        if k >= len(patches):
            raise self.sc.error(f"patch index {k} out of range (have {len(patches)})", pos)
        return k, pos

    def glue_decl(self, patches: list[str]) -> GlueDecl:
        sc = self.sc
        sc.skip()
        line, col = sc.where()
        i, _ = self._patch_index(patches, "a patch index")
        sc.expect(":")
        Ri = self.rings[patches[i]]
        text, start = sc.chunk("~")
        f_ij = self.poly(text, start, Ri)
        sc.expect("~")
        j, jpos = self._patch_index(patches, "a patch index")
        if j == i:
            raise sc.error("a patch cannot be glued to itself", jpos)
        sc.expect(":")
        Rj = self.rings[patches[j]]
        self.sc.skip()
        start = sc.pos
        m = re.compile(r"via\b").search(sc.text, sc.pos)
        if not m:
            raise sc.error("expected 'via'")
        text = sc.text[start: m.start()].rstrip()
        if not text:
            raise sc.error("expected an expression")
        f_ji = self.poly(text, start, Rj)
        sc.pos = m.start()
        sc.keyword("via")
        # images live in Rj[1/f_ji]; syntax-check them against Rj with #inv allowed
        hooks = {"#inv": lambda arg, offset: arg}
        images, inverse_image = self.image_block(Ri.variables, Rj, hooks, allow_inverse=True)
        missing = [v for v in Ri.variables if v not in images]
        if missing:
            raise sc.error(f"glue {i}->{j} gives no image for {', '.join(missing)}")
        return GlueDecl(i, f_ij, j, f_ji, images, inverse_image, line, col)

    def image_block(self, variables, ring: PolyRing, hooks=None, allow_inverse=False):
        """``{ v -> expr, ... }``; entries separated by ',' or ';'."""
        sc = self.sc
        sc.expect("{")
        images: dict[str, str] = {}
        inverse_image = None
        while not sc.accept("}"):
            sc.skip()
            kpos = sc.pos
            if allow_inverse and sc.text.startswith("#inv", sc.pos) and not _IDENT.match(sc.text, sc.pos + 4):
                sc.pos += 4
                key = "#inv"
            else:
                key, kpos = sc.ident("a variable name")
                if key not in variables:
                    raise sc.error(f"{key!r} is not a variable of the mapped patch", kpos)
            if key in images or (key == "#inv" and inverse_image is not None):
                raise sc.error(f"image of {key!r} given twice", kpos)
            sc.expect("->", "'->'")
            text, start = sc.chunk(",;}")
            self.poly(text, start, ring, hooks)
            if key == "#inv":
                inverse_image = text
            else:
                images[key] = text
            if not sc.accept(",") and not sc.accept(";"):
                sc.expect("}", "',' or '}'")
                break
        return images, inverse_image

    def morphism_decl(self, line, col) -> MorphismDecl:
        sc = self.sc
        name, pos = sc.ident("a morphism name")
        sc.expect(":")
        src, spos = sc.ident("a scheme name")
        self.use(src, spos, _KIND_SCHEME)
        sc.expect("->")
        tgt, tpos = sc.ident("a scheme name")
        self.use(tgt, tpos, _KIND_SCHEME)
        sc.expect("{")
        maps: list[PatchMap] = []
        seen = set()
        while not sc.accept("}"):
            sc.skip()
            pline, pcol = sc.where()
            if not sc.keyword("patch"):
                raise sc.error("expected 'patch' or '}'")
            i, ipos = self._patch_index(self.schemes[src], "a source patch index")
            if i in seen:
                raise sc.error(f"source patch {i} mapped twice", ipos)
            seen.add(i)
            sc.expect("->")
            t, _ = self._patch_index(self.schemes[tgt], "a target patch index")
            if not sc.keyword("via"):
                raise sc.error("expected 'via'")
            target_ring = self.rings[self.schemes[tgt][t]]
            source_ring = self.rings[self.schemes[src][i]]
            images, _ = self.image_block(target_ring.variables, source_ring)
            missing = [v for v in target_ring.variables if v not in images]
            if missing:
                raise sc.error(f"patch {i} gives no image for {', '.join(missing)}")
            maps.append(PatchMap(i, t, images, pline, pcol))
            sc.expect(";", "';'")
        if len(maps) != len(self.schemes[src]):
            raise sc.error(f"morphism {name!r} must map every source patch", pos)
        maps.sort(key=lambda m: m.source_patch)
        self.declare(name, _KIND_MORPHISM, pos)
        return MorphismDecl(line, col, name, src, tgt, maps)

    def subscheme_decl(self, line, col) -> SubschemeDecl:
        sc = self.sc
        name, pos = sc.ident("a subscheme name")
        if not sc.keyword("of"):
            raise sc.error("expected 'of'")
        X, xpos = sc.ident("a scheme name")
        self.use(X, xpos, _KIND_SCHEME)
        sc.expect("=")
        sc.expect("[")
        patches = self.schemes[X]
        ideals = []
        while True:
            sc.expect("(")
            if len(ideals) >= len(patches):
                raise sc.error(f"{X} has only {len(patches)} patches")
            ideals.append(self.poly_list(self.rings[patches[len(ideals)]]))
            if sc.accept(";"):
                continue
            sc.expect("]", "';' or ']'")
            break
        if len(ideals) != len(patches):
            raise sc.error(f"expected {len(patches)} patch ideals, got {len(ideals)}")
        self.declare(name, _KIND_SUBSCHEME, pos)
        return SubschemeDecl(line, col, name, X, ideals)

    def expr(self) -> Expr:
        sc = self.sc
        sc.skip()
        line, col = sc.where()
        word, pos = sc.ident("an expression")
        if sc.peek("("):
            arity = _EXPR_OPS.get(word)
            if arity is None:
                raise sc.error(f"unknown operation {word!r}", pos)
            sc.expect("(")
            args = []
            for k in range(arity):
                if k:
                    sc.expect(",", "','")
                if word == "pullback" and k == 0:
                    m, mpos = sc.ident("a morphism name")
                    self.use(m, mpos, _KIND_MORPHISM)
                    args.append(Expr("name", name=m, line=line, col=col))
                elif word in ("whole", "empty"):
                    x, xpos = sc.ident("a scheme name")
                    self.use(x, xpos, _KIND_SCHEME)
                    args.append(Expr("name", name=x, line=line, col=col))
                else:
                    args.append(self.expr())
            sc.expect(")", "')'")
            return Expr(word, args, line=line, col=col)
        self.use(word, pos, _KIND_SUBSCHEME, _KIND_IDEAL)
        return Expr("name", name=word, line=line, col=col)

    def eval_cmd(self, line, col) -> EvalCmd:
        return EvalCmd(line, col, self.expr())

    def check_cmd(self, line, col) -> CheckCmd:
        name, pos = self.sc.ident("a name")
        self.use(name, pos)
        return CheckCmd(line, col, name)

    def laws_cmd(self, line, col) -> LawsCmd:
        sc = self.sc
        module, pos = sc.ident("a module name")
        if module not in MODULES and module != "all":
            raise sc.error(f"unknown law module {module!r}", pos)
        seed = None
        if sc.keyword("seed"):
            sc.expect("=")
            seed = sc.integer("a seed")
        return LawsCmd(line, col, module, seed)


def parse_script(text: str) -> Script:
    """Parse and name-check a script; raises ``ScriptError`` at the first problem."""
    return _Parser(text).parse()


__all__ = [
    "CheckCmd", "EvalCmd", "Expr", "GlueDecl", "IdealDecl", "LawsCmd", "MorphismDecl",
    "PatchMap", "RingDecl", "SchemeDecl", "Script", "ScriptError", "Statement",
    "SubschemeDecl", "is_internal_name", "parse_script",
]
