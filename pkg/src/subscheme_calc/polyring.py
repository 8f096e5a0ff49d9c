"""Exact multivariate polynomials over QQ.

A :class:`PolyRing` is an ordered tuple of variable names plus a canonical
:class:`MonomialOrder`. A :class:`Polynomial` is an immutable sparse map from
exponent tuples to nonzero ``gmpy2.mpq`` coefficients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from gmpy2 import mpq

from . import kernels
from .kernels import BLOCK, GREVLEX, LEX

RESERVED_PREFIX = "#"

Monomial = tuple  # tuple[int, ...]


class PolyError(Exception):
    pass


class RingMismatchError(PolyError, ValueError):
    pass


class NoLeadingTermError(PolyError, ValueError):
    pass


class ParseError(PolyError, ValueError):
    """Syntax error at a character offset of the parsed text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.message = message
        self.offset = offset


class UnknownVariableError(ParseError):
    pass


class ReservedNameError(ParseError):
    pass


def rational(value) -> mpq:
    """Coerce an int, Fraction, mpq or ``"a/b"`` string to ``mpq``."""
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


@dataclass(frozen=True)
class MonomialOrder:
    """lex, grevlex, or block(k): lex on the first k variables, grevlex after."""

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.k < 0:
            raise ValueError("block size must be nonnegative")

    @property
    def code(self) -> tuple[int, int]:
        return ({"lex": LEX, "grevlex": GREVLEX, "block": BLOCK}[self.kind], self.k)

    def sort_key(self, m: Monomial):
        """Ascending sort under this key lists monomials largest first."""
        return kernels.sort_key(self.code)(m)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.sort_key(a), self.sort_key(b)
        return (ka < kb) - (ka > kb)

    def __str__(self):
        return f"block({self.k})" if self.kind == "block" else self.kind


LEX_ORDER = MonomialOrder("lex")
GREVLEX_ORDER = MonomialOrder("grevlex")


def block_order(k: int) -> MonomialOrder:
    return MonomialOrder("block", k)


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def is_internal_name(name: str) -> bool:
    return name.startswith(RESERVED_PREFIX)


def fresh_names(count: int, avoid: Iterable[str]) -> list[str]:
    """Return ``count`` auxiliary names ``#0, #1, ...`` not in ``avoid``."""
    taken = set(avoid)
    out, i = [], 0
    while len(out) < count:
        name = f"{RESERVED_PREFIX}{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


class PolyRing:
    """QQ[variables] with a canonical monomial order."""

    __slots__ = ("variables", "order", "_index")

    def __init__(self, variables: Sequence[str], order: MonomialOrder = GREVLEX_ORDER):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        for v in variables:
            if not (_IDENT.match(v) or (is_internal_name(v) and len(v) > 1)):
                raise ValueError(f"invalid variable name {v!r}")
        self.variables = variables
        self.order = order
        self._index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self._index[name]

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        return f"PolyRing({list(self.variables)}, {self.order})"

    def with_order(self, order: MonomialOrder) -> PolyRing:
        return self if order == self.order else PolyRing(self.variables, order)

    def from_dict(self, data: Mapping[Monomial, object]) -> Polynomial:
        n = self.nvars
        clean = {}
        for m, c in data.items():
            m = tuple(m)
            if len(m) != n or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {self}")
            c = rational(c)
            if c:
                clean[m] = c
        return Polynomial(self, clean)

    def from_terms(self, terms: Iterable[tuple[object, Monomial]]) -> Polynomial:
        acc: dict = {}
        for c, m in terms:
            m = tuple(m)
            acc[m] = acc.get(m, 0) + rational(c)
        return self.from_dict(acc)

    def const(self, c) -> Polynomial:
        c = rational(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return self.const(1)

    def gen(self, name_or_index) -> Polynomial:
        i = name_or_index if isinstance(name_or_index, int) else self._index[name_or_index]
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): mpq(1)})

    @property
    def gens(self) -> list[Polynomial]:
        return [self.gen(i) for i in range(self.nvars)]

    def coerce(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            _check_ring(self, value.ring)
            return value
        return self.const(value)

    def parse(self, text: str, hooks=None) -> Polynomial:
        return parse_poly(text, self, hooks)


def _check_ring(r1: PolyRing, r2: PolyRing):
    if r1 is not r2 and r1.variables != r2.variables:
        raise RingMismatchError(
            f"polynomials live in different rings: {list(r1.variables)} vs {list(r2.variables)}"
        )


class Polynomial:
    """Immutable polynomial; ``terms`` lists (coefficient, monomial) largest first."""

    __slots__ = ("ring", "_d", "_terms", "_hash")

    def __init__(self, ring: PolyRing, data: dict):
        # ``data`` must already be clean: no zero coefficients, mpq values.
        self.ring = ring
        self._d = data
        self._terms = None
        self._hash = None

    @property
    def data(self) -> Mapping[Monomial, mpq]:
        return self._d

    @property
    def terms(self) -> tuple:
        if self._terms is None:
            key = self.ring.order.sort_key
            self._terms = tuple((self._d[m], m) for m in sorted(self._d, key=key))
        return self._terms

    def sorted_terms(self, order: MonomialOrder | None = None) -> tuple:
        if order is None or order == self.ring.order:
            return self.terms
        key = order.sort_key
        return tuple((self._d[m], m) for m in sorted(self._d, key=key))

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def is_constant(self) -> bool:
        return not self._d or (len(self._d) == 1 and not any(next(iter(self._d))))

    def constant_value(self) -> mpq:
        return self._d.get((0,) * self.ring.nvars, mpq(0))

    def __len__(self):
        return len(self._d)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.variables == other.ring.variables and self._d == other._d
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return self._d == self.ring.const(other)._d
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self._d.items())))
        return self._hash

    def _other(self, other) -> dict | None:
        if isinstance(other, Polynomial):
            _check_ring(self.ring, other.ring)
            return other._d
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return self.ring.const(other)._d
        return None

    def __add__(self, other):
        d = self._other(other)
        if d is None:
            return NotImplemented
        return Polynomial(self.ring, kernels.add(self._d, d))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self._d.items()})

    def __sub__(self, other):
        d = self._other(other)
        if d is None:
            return NotImplemented
        return Polynomial(self.ring, kernels.add(self._d, {m: -c for m, c in d.items()}))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        d = self._other(other)
        if d is None:
            return NotImplemented
        return Polynomial(self.ring, kernels.mul(self._d, d))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = rational(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(1 / c)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = self.ring.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        c = rational(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: v * c for m, v in self._d.items()})

    def mul_term(self, coeff, mono: Monomial) -> Polynomial:
        coeff = rational(coeff)
        if not coeff:
            return self.ring.zero
        return Polynomial(self.ring, kernels.mul_term(self._d, tuple(mono), coeff))

    def lead(self, order: MonomialOrder | None = None) -> tuple[mpq, Monomial]:
        if not self._d:
            raise NoLeadingTermError("the zero polynomial has no leading term")
        order = order or self.ring.order
        m = kernels.leading_monomial(self._d, order.code)
        return self._d[m], m

    def lm(self, order: MonomialOrder | None = None) -> Monomial:
        return self.lead(order)[1]

    def lc(self, order: MonomialOrder | None = None) -> mpq:
        return self.lead(order)[0]

    def monic(self, order: MonomialOrder | None = None) -> Polynomial:
        if not self._d:
            return self
        return self.scale(1 / self.lc(order))

    def total_degree(self) -> int:
        return max((sum(m) for m in self._d), default=-1)

    def support(self) -> set[int]:
        """Indices of variables that occur in some term."""
        used = set()
        for m in self._d:
            used.update(i for i, e in enumerate(m) if e)
        return used

    def embed(self, ring: PolyRing, positions: Sequence[int]) -> Polynomial:
        """Send variable ``i`` of this ring to variable ``positions[i]`` of ``ring``."""
        n = ring.nvars
        out = {}
        for m, c in self._d.items():
            t = [0] * n
            for i, e in enumerate(m):
                if e:
                    t[positions[i]] += e
            out[tuple(t)] = c
        return Polynomial(ring, out)

    def restrict(self, ring: PolyRing, positions: Sequence[int]) -> Polynomial:
        """Inverse of :meth:`embed` for polynomials supported on ``positions``."""
        out = {}
        for m, c in self._d.items():
            t = tuple(m[p] for p in positions)
            if sum(t) != sum(m):
                raise ValueError("polynomial uses variables outside the target ring")
            out[t] = c
        return Polynomial(ring, out)

    def substitute(self, images: Sequence[Polynomial], ring: PolyRing | None = None) -> Polynomial:
        """Evaluate with variable ``i`` replaced by ``images[i]``."""
        if len(images) != self.ring.nvars:
            raise RingMismatchError("one image per variable is required")
        if ring is None:
            if not images:
                raise ValueError("target ring required for a zero-variable source")
            ring = images[0].ring
        for g in images:
            _check_ring(ring, g.ring)
        powers: list[dict] = [{1: g._d} for g in images]
        one = {(0,) * ring.nvars: mpq(1)}

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                half = power(i, e // 2)
                sq = kernels.mul(half, half)
                cache[e] = kernels.mul(sq, cache[1]) if e % 2 else sq
            return cache[e]

        acc: dict = {}
        for m, c in self._d.items():
            term = {k: v * c for k, v in one.items()}
            for i, e in enumerate(m):
                if e:
                    term = kernels.mul(term, power(i, e))
                    if not term:
                        break
            acc = kernels.add(acc, term)
        return Polynomial(ring, acc)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_ring(f.ring, g.ring)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_ring(f.ring, g.ring)
    return f * g


def leading_term(f: Polynomial, order: MonomialOrder | None = None) -> tuple[mpq, Monomial]:
    return f.lead(order)


def _format_monomial(ring: PolyRing, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.variables, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, order: MonomialOrder | None = None) -> str:
    """Deterministic text: terms largest first, coefficients as ``a/b``."""
    terms = f.sorted_terms(order)
    if not terms:
        return "0"
    out = []
    for i, (c, m) in enumerate(terms):
        mono = _format_monomial(f.ring, m)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# -- parsing -------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*|#[A-Za-z0-9_]+)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("eof", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing, hooks: Mapping[str, Callable] | None):
        self.ring = ring
        self.hooks = hooks or {}
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value or tok[0] == "eof":
            raise ParseError(f"expected {value!r}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        f = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return f

    def expr(self) -> Polynomial:
        f = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            pos = self.peek()[2]
            g = self.unary()
            if op == "*":
                f = f * g
            else:
                if not g.is_constant():
                    raise ParseError("division only by nonzero constants", pos)
                if g.is_zero():
                    raise ParseError("division by zero", pos)
                f = f / g.constant_value()
        return f

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.take()
            f = self.unary()
            return -f if tok[1] == "-" else f
        return self.power()

    def power(self) -> Polynomial:
        f = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise ParseError("exponent must be a nonnegative integer", tok[2])
            f = f ** int(tok[1])
        return f

    def atom(self) -> Polynomial:
        kind, value, pos = self.take()
        if kind == "num":
            return self.ring.const(int(value))
        if kind == "name":
            if is_internal_name(value):
                hook = self.hooks.get(value)
                if hook is None:
                    raise ReservedNameError(
                        f"names starting with {RESERVED_PREFIX!r} are reserved: {value!r}", pos
                    )
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return hook(inner, pos)
            if value not in self.ring._index:
                raise UnknownVariableError(f"unknown variable {value!r}", pos)
            return self.ring.gen(value)
        if kind == "op" and value == "(":
            f = self.expr()
            self.expect(")")
            return f
        if kind == "eof":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_poly(text: str, ring, hooks: Mapping[str, Callable] | None = None) -> Polynomial:
    """Parse ``text`` as a polynomial in ``ring`` (a PolyRing or anything with ``.ring``).

    ``hooks`` maps reserved names such as ``"#inv"`` to callables
    ``(argument_polynomial, offset) -> Polynomial`` for call-style atoms.
    """
    ring = ring if isinstance(ring, PolyRing) else ring.ring
    return _Parser(text, ring, hooks).parse()
