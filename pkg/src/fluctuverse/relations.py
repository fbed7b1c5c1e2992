"""Tokenizer, parser and evaluator for textual physics relations.

Expression grammar (standard precedence, left-associative binaries)::

    relation   := expr (('=' | '~' | '<=') expr)?
    expr       := term (('+' | '-') term)*
    term       := unary (('*' | '/') unary)*
    unary      := '-' unary | power
    power      := primary ('^' rational)?
    primary    := NUMBER units? | IDENT | FUNC '(' expr ')' | '(' expr ')'
    rational   := INT | '-' INT | '(' '-'? INT '/' INT ')'
    units      := unit_atom (('*' | '/') unit_atom)*      # juxtaposed to NUMBER
    unit_atom  := UNIT ('^(' '-'? INT '/' INT ')')?

`^` binds tighter than unary minus, which binds tighter than `*`/`/`.
Exponents are rational literals, never expressions: cube roots of
dimensioned quantities must stay exact in the exponent lattice. sqrt and
cbrt desugar to Pow(x, 1/2) and Pow(x, 1/3) at parse time; abs, exp and ln
stay Func nodes, and exp/ln demand dimensionless arguments.

Unit annotations attach to a numeric literal by juxtaposition only
(``1e56 g``, ``1.38e-16 erg/K``): a `*` or `/` continues the unit exactly
when the following token is a unit name, and ``^(`` directly after a unit
name is always a unit exponent. To raise an annotated number to a power,
parenthesize it: ``(2 cm)^2``.

Unary minus on a bare numeric literal folds into the literal; on anything
else it lowers to multiplication by -1, so no extra AST variant exists and
pretty-printed trees reparse to structurally identical trees.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    DomainError,
    DuplicateIdError,
    FluctuverseError,
    LexError,
    ParseError,
    QuantityOverflowError,
)
from .quantity import (
    DIMENSIONLESS,
    Dimension,
    Quantity,
    UNIT_DIMENSIONS,
    decades_deviation,
)

# ---------------------------------------------------------------------------
# Tokens

NUMBER = "NUMBER"
IDENT = "IDENT"
OP = "OP"          # + - * / ^
LPAREN = "LPAREN"
RPAREN = "RPAREN"
CMP = "CMP"        # ~ = <=
EOF = "EOF"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r})"


_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<comment>\#[^\n]*)
    | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)
    | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
    | (?P<le><=)
    | (?P<cmp>[=~])
    | (?P<op>[-+*/^])
    | (?P<lparen>\()
    | (?P<rparen>\))
    """,
    re.VERBOSE,
)


def _position(source: str, pos: int) -> tuple[int, int]:
    line = source.count("\n", 0, pos) + 1
    column = pos - source.rfind("\n", 0, pos)
    return line, column


def tokenize(source: str) -> list[Token]:
    """Lex an expression; whitespace and # comments are dropped."""
    tokens: list[Token] = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            line, column = _position(source, pos)
            raise LexError(f"unexpected character {source[pos]!r}", line, column)
        kind = m.lastgroup
        text = m.group()
        if kind not in ("ws", "comment"):
            line, column = _position(source, pos)
            mapped = {
                "number": NUMBER,
                "ident": IDENT,
                "le": CMP,
                "cmp": CMP,
                "op": OP,
                "lparen": LPAREN,
                "rparen": RPAREN,
            }[kind]
            tokens.append(Token(mapped, text, line, column))
        pos = m.end()
    line, column = _position(source, pos)
    tokens.append(Token(EOF, "", line, column))
    return tokens


# ---------------------------------------------------------------------------
# AST

UnitFactors = tuple[tuple[str, Fraction], ...]


@dataclass(frozen=True)
class Number:
    value: float
    unit: UnitFactors = ()

    def unit_dimension(self) -> Dimension:
        dim = DIMENSIONLESS
        for name, exp in self.unit:
            dim = dim * UNIT_DIMENSIONS[name] ** exp
        return dim


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "ExprNode"
    right: "ExprNode"


@dataclass(frozen=True)
class Pow:
    base: "ExprNode"
    exponent: Fraction


@dataclass(frozen=True)
class Func:
    name: str  # abs | exp | ln (sqrt/cbrt desugar to Pow)
    arg: "ExprNode"


ExprNode = Number | Ident | BinOp | Pow | Func

_FUNC_NAMES = {"sqrt", "cbrt", "abs", "exp", "ln"}
_DESUGARED = {"sqrt": Fraction(1, 2), "cbrt": Fraction(1, 3)}


class Comparator(enum.Enum):
    APPROX = "="
    ORDER_OF_MAGNITUDE = "~"
    UPPER_BOUND = "<="


# ---------------------------------------------------------------------------
# Parser

class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        i = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[i]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def error(self, expected: str) -> ParseError:
        tok = self.peek()
        found = repr(tok.text) if tok.kind != EOF else "end of input"
        return ParseError(
            f"expected {expected}, found {found} (line {tok.line}, column {tok.column})"
        )

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            raise self.error(text if text is not None else kind.lower())
        return self.advance()

    # expression grammar -----------------------------------------------

    def parse_expr(self) -> ExprNode:
        node = self.parse_term()
        while self.peek().kind == OP and self.peek().text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self) -> ExprNode:
        node = self.parse_unary()
        while self.peek().kind == OP and self.peek().text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.parse_unary())
        return node

    def parse_unary(self) -> ExprNode:
        if self.peek().kind == OP and self.peek().text == "-":
            self.advance()
            operand = self.parse_unary()
            if isinstance(operand, Number):
                return Number(-operand.value, operand.unit)
            return BinOp("*", Number(-1.0), operand)
        return self.parse_power()

    def parse_power(self) -> ExprNode:
        base = self.parse_primary()
        if self.peek().kind == OP and self.peek().text == "^":
            self.advance()
            return Pow(base, self.parse_rational())
        return base

    def parse_rational(self) -> Fraction:
        negate = False
        if self.peek().kind == OP and self.peek().text == "-":
            self.advance()
            negate = True
        if self.peek().kind == NUMBER:
            num = self._int_token("integer exponent")
            return Fraction(-num if negate else num)
        if negate:
            raise self.error("integer exponent")
        if self.peek().kind == LPAREN:
            self.advance()
            sign = 1
            if self.peek().kind == OP and self.peek().text == "-":
                self.advance()
                sign = -1
            num = self._int_token("exponent numerator")
            self.expect(OP, "/")
            den = self._int_token("exponent denominator")
            self.expect(RPAREN)
            return Fraction(sign * num, den)
        raise self.error("rational exponent")

    def _int_token(self, what: str) -> int:
        tok = self.peek()
        if tok.kind != NUMBER or not tok.text.isdigit():
            raise self.error(what)
        self.advance()
        return int(tok.text)

    def parse_primary(self) -> ExprNode:
        tok = self.peek()
        if tok.kind == NUMBER:
            self.advance()
            return Number(float(tok.text), self.parse_unit_annotation())
        if tok.kind == IDENT:
            if tok.text in _FUNC_NAMES and self.peek(1).kind == LPAREN:
                self.advance()
                self.advance()
                arg = self.parse_expr()
                self.expect(RPAREN)
                if tok.text in _DESUGARED:
                    return Pow(arg, _DESUGARED[tok.text])
                return Func(tok.text, arg)
            self.advance()
            return Ident(tok.text)
        if tok.kind == LPAREN:
            self.advance()
            node = self.parse_expr()
            self.expect(RPAREN)
            return node
        raise self.error("a number, identifier or '('")

    # unit annotations ---------------------------------------------------

    def parse_unit_annotation(self) -> UnitFactors:
        if not self._at_unit_ident():
            return ()
        factors = [self.parse_unit_atom(Fraction(1))]
        while (
            self.peek().kind == OP
            and self.peek().text in "*/"
            and self.peek(1).kind == IDENT
            and self.peek(1).text in UNIT_DIMENSIONS
        ):
            sign = Fraction(1) if self.advance().text == "*" else Fraction(-1)
            factors.append(self.parse_unit_atom(sign))
        return tuple(factors)

    def _at_unit_ident(self) -> bool:
        tok = self.peek()
        return tok.kind == IDENT and tok.text in UNIT_DIMENSIONS

    def parse_unit_atom(self, sign: Fraction) -> tuple[str, Fraction]:
        name = self.advance().text
        exp = Fraction(1)
        # '^(' right after a unit name is always a unit exponent
        if (
            self.peek().kind == OP
            and self.peek().text == "^"
            and self.peek(1).kind == LPAREN
        ):
            self.advance()
            self.advance()
            neg = False
            if self.peek().kind == OP and self.peek().text == "-":
                self.advance()
                neg = True
            num = self._int_token("unit exponent numerator")
            self.expect(OP, "/")
            den = self._int_token("unit exponent denominator")
            self.expect(RPAREN)
            exp = Fraction(-num if neg else num, den)
        return (name, exp * sign)


def parse_expr(tokens: list[Token]) -> ExprNode:
    """Parse a token sequence into an expression tree; all tokens must be used."""
    parser = _Parser(tokens)
    node = parser.parse_expr()
    if parser.peek().kind != EOF:
        raise parser.error("end of expression")
    return node


def parse(source: str) -> ExprNode:
    return parse_expr(tokenize(source))


def parse_relation_expr(source: str) -> tuple[ExprNode, Comparator, ExprNode]:
    """Parse ``lhs (=|~|<=) rhs`` into its two trees plus the comparator."""
    parser = _Parser(tokenize(source))
    lhs = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != CMP:
        raise parser.error("a comparator ('=', '~' or '<=')")
    parser.advance()
    rhs = parser.parse_expr()
    if parser.peek().kind != EOF:
        raise parser.error("end of relation")
    return lhs, Comparator(tok.text), rhs


# ---------------------------------------------------------------------------
# Pretty printing (round-trips: reparsing the output yields an equal tree)

_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}


def _format_unit_factors(unit: UnitFactors) -> str:
    parts = []
    for i, (name, exp) in enumerate(unit):
        if i == 0:
            mag = exp
            joiner = ""
        else:
            joiner = "*" if exp > 0 else "/"
            mag = exp if exp > 0 else -exp
        atom = name if mag == 1 else f"{name}^({mag.numerator}/{mag.denominator})"
        parts.append(joiner + atom)
    return "".join(parts)


def _node_precedence(node: ExprNode) -> int:
    if isinstance(node, BinOp):
        return _PRECEDENCE[node.op]
    return 4


def pretty(node: ExprNode) -> str:
    """Render an expression; parse(pretty(tree)) == tree for parser-produced trees."""
    if isinstance(node, Number):
        text = repr(node.value)
        if node.unit:
            text += " " + _format_unit_factors(node.unit)
        return text
    if isinstance(node, Ident):
        return node.name
    if isinstance(node, Func):
        return f"{node.name}({pretty(node.arg)})"
    if isinstance(node, Pow):
        base = pretty(node.base)
        simple_base = isinstance(node.base, (Ident, Func)) or (
            isinstance(node.base, Number) and node.base.value >= 0 and not node.base.unit
        )
        if not simple_base:
            base = f"({base})"
        p = node.exponent
        exp = str(p.numerator) if p.denominator == 1 else f"({p.numerator}/{p.denominator})"
        return f"{base}^{exp}"
    if isinstance(node, BinOp):
        prec = _PRECEDENCE[node.op]
        left = pretty(node.left)
        if _node_precedence(node.left) < prec:
            left = f"({left})"
        right = pretty(node.right)
        if _node_precedence(node.right) <= prec and isinstance(node.right, BinOp):
            right = f"({right})"
        return f"{left}{node.op}{right}"
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# Dimension inference and evaluation

def _annotate(err: FluctuverseError, node: ExprNode) -> None:
    # tag the smallest enclosing subtree once, then let the error propagate
    if not getattr(err, "expr_context", None):
        err.expr_context = pretty(node)
        if err.args:
            err.args = (f"{err.args[0]} [in: {err.expr_context}]",) + err.args[1:]


def infer_dimension(node: ExprNode, registry) -> Dimension:
    """Static dimension of an expression against a constants registry."""
    try:
        if isinstance(node, Number):
            return node.unit_dimension()
        if isinstance(node, Ident):
            return registry.get(node.name).dim
        if isinstance(node, Pow):
            return infer_dimension(node.base, registry) ** node.exponent
        if isinstance(node, Func):
            arg = infer_dimension(node.arg, registry)
            if node.name in ("exp", "ln") and not arg.is_dimensionless:
                raise DimensionMismatchError(arg, DIMENSIONLESS, context=node.name)
            return arg if node.name == "abs" else DIMENSIONLESS
        if isinstance(node, BinOp):
            left = infer_dimension(node.left, registry)
            right = infer_dimension(node.right, registry)
            if node.op in "+-":
                if left != right:
                    raise DimensionMismatchError(left, right, context=f"'{node.op}'")
                return left
            return left * right if node.op == "*" else left / right
    except FluctuverseError as err:
        _annotate(err, node)
        raise
    raise TypeError(f"not an expression node: {node!r}")


def eval_expr(node: ExprNode, registry) -> Quantity:
    """Evaluate an expression to a Quantity; dimensionally sound by construction."""
    try:
        if isinstance(node, Number):
            return Quantity(node.value, node.unit_dimension())
        if isinstance(node, Ident):
            return registry.get(node.name)
        if isinstance(node, Pow):
            return eval_expr(node.base, registry).pow(node.exponent)
        if isinstance(node, Func):
            arg = eval_expr(node.arg, registry)
            if node.name == "abs":
                return Quantity(abs(arg.value), arg.dim)
            if not arg.dim.is_dimensionless:
                raise DimensionMismatchError(arg.dim, DIMENSIONLESS, context=node.name)
            if node.name == "exp":
                try:
                    return Quantity(math.exp(arg.value))
                except OverflowError:
                    raise QuantityOverflowError(f"exp overflow at {arg.value!r}") from None
            if node.name == "ln":
                if arg.value <= 0.0:
                    raise DomainError(f"ln of non-positive value {arg.value!r}")
                return Quantity(math.log(arg.value))
        if isinstance(node, BinOp):
            left = eval_expr(node.left, registry)
            right = eval_expr(node.right, registry)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            return left / right
    except FluctuverseError as err:
        _annotate(err, node)
        raise
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# Relations and the corpus file

@dataclass(frozen=True)
class Relation:
    id: str
    description: str
    lhs: ExprNode
    rhs: ExprNode
    comparator: Comparator
    tolerance_decades: float = 1.0
    ref: str = ""

    @property
    def section(self) -> str:
        return self.id.split(".", 1)[0]


@dataclass(frozen=True)
class RelationResult:
    id: str
    lhs_value: Quantity | None
    rhs_value: Quantity | None
    deviation_decades: float | None
    dim_consistent: bool
    passed: bool


def check_relation(rel: Relation, registry, tol_scale: float = 1.0) -> RelationResult:
    """Evaluate a relation. Dimension problems are reported, never raised."""
    lhs_q = rhs_q = None
    dim_consistent = True
    try:
        lhs_q = eval_expr(rel.lhs, registry)
    except DimensionMismatchError:
        dim_consistent = False
    try:
        rhs_q = eval_expr(rel.rhs, registry)
    except DimensionMismatchError:
        dim_consistent = False
    if dim_consistent and lhs_q.dim != rhs_q.dim:
        dim_consistent = False
    if not dim_consistent:
        return RelationResult(rel.id, lhs_q, rhs_q, None, False, False)

    deviation = None
    if lhs_q.value > 0.0 and rhs_q.value > 0.0:
        deviation = decades_deviation(lhs_q, rhs_q)
    if rel.comparator is Comparator.UPPER_BOUND:
        passed = lhs_q.value <= rhs_q.value
    else:
        passed = deviation is not None and deviation <= rel.tolerance_decades * tol_scale
    return RelationResult(rel.id, lhs_q, rhs_q, deviation, True, passed)


_SECTION_RE = re.compile(r"^\[relation\s+(?P<id>[A-Za-z0-9_.-]+)\]$")
_ID_RE = re.compile(r"^[A-Za-z0-9_.-]+$")


def _strip_comment(line: str) -> str:
    in_quote = False
    for i, ch in enumerate(line):
        if ch == '"':
            in_quote = not in_quote
        elif ch == "#" and not in_quote:
            return line[:i]
    return line


def _quoted_value(raw: str, where: str) -> str:
    raw = raw.strip()
    if len(raw) < 2 or raw[0] != '"' or raw[-1] != '"':
        raise ParseError(f"{where}: expected a double-quoted string, got {raw!r}")
    return raw[1:-1]


def parse_relation_file(source: str) -> list[Relation]:
    """Parse the corpus format: [relation <id>] sections with desc/expr/tol/ref keys."""
    relations: list[Relation] = []
    seen: set[str] = set()
    current: dict | None = None

    def finish():
        if current is None:
            return
        where = f"relation {current['id']!r}"
        if "expr" not in current:
            raise ParseError(f"{where}: missing expr")
        lhs, comparator, rhs = parse_relation_expr(current["expr"])
        tol = current.get("tol", 1.0)
        if tol <= 0:
            raise ParseError(f"{where}: tol must be positive, got {tol}")
        relations.append(
            Relation(
                id=current["id"],
                description=current.get("desc", ""),
                lhs=lhs,
                rhs=rhs,
                comparator=comparator,
                tolerance_decades=tol,
                ref=current.get("ref", ""),
            )
        )

    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        m = _SECTION_RE.match(line)
        if m:
            finish()
            rel_id = m.group("id")
            if rel_id in seen:
                raise DuplicateIdError(f"duplicate relation id {rel_id!r} (line {lineno})")
            seen.add(rel_id)
            current = {"id": rel_id}
            continue
        if current is None:
            raise ParseError(f"line {lineno}: content outside a [relation ...] section")
        key, eq, value = line.partition("=")
        key = key.strip()
        if not eq:
            raise ParseError(f"relation {current['id']!r}: bad line {raw.strip()!r}")
        if key in ("desc", "expr", "ref"):
            current[key] = _quoted_value(value, f"relation {current['id']!r} key {key!r}")
        elif key == "tol":
            try:
                current["tol"] = float(value.strip())
            except ValueError:
                raise ParseError(
                    f"relation {current['id']!r}: tol is not a number: {value.strip()!r}"
                ) from None
        else:
            raise ParseError(f"relation {current['id']!r}: unknown key {key!r}")
    finish()
    return relations


def default_corpus_text() -> str:
    from importlib import resources

    return resources.files("fluctuverse.data").joinpath("corpus.txt").read_text("utf-8")


def load_default_corpus() -> list[Relation]:
    return parse_relation_file(default_corpus_text())
