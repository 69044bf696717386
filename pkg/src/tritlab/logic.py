"""Kleene three-valued logic with a small SQL-flavored expression language.

Truth values are -1 (false), 0 (unknown), +1 (true).  Under that
numbering NOT is numeric negation, AND is MIN and OR is MAX, which is
exactly the logic SQL applies to comparisons against NULL: any
comparison with a NULL operand, including NULL = NULL, is unknown.

The expression grammar (keywords case-insensitive, precedence low to
high: OR, AND, NOT):

    expr       := term (OR term)*
    term       := factor (AND factor)*
    factor     := NOT factor | '(' expr ')' | atom
    atom       := TRUE | FALSE | UNKNOWN | identifier | comparison
    comparison := operand ('=' | '<>') operand
    operand    := integer | NULL | '$' identifier

Bare identifiers are trit-valued variables; '$'-prefixed names are data
variables holding an integer or NULL.  The two namespaces are disjoint
so a truth value can never be confused with a nullable data value.
"""

import itertools
import re
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterator, Union


class Trit(IntEnum):
    FALSE = -1
    UNKNOWN = 0
    TRUE = 1

    def __str__(self) -> str:
        return str(int(self))


def _as_trit(value) -> Trit:
    try:
        return Trit(value)
    except ValueError:
        raise ValueError(f"not a trit value: {value!r} (must be -1, 0 or +1)") from None


def k3_not(a: Trit) -> Trit:
    return Trit(-_as_trit(a))


def k3_and(a: Trit, b: Trit) -> Trit:
    return Trit(min(_as_trit(a), _as_trit(b)))


def k3_or(a: Trit, b: Trit) -> Trit:
    return Trit(max(_as_trit(a), _as_trit(b)))


# --- expression trees ------------------------------------------------------


@dataclass(frozen=True)
class DataVar:
    """A '$name' reference to an integer-or-NULL data variable."""

    name: str


# a comparison operand: an integer literal, NULL (None), or a data variable
Operand = Union[int, None, DataVar]


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: Trit


@dataclass(frozen=True)
class Not:
    child: "LogicExpr"


@dataclass(frozen=True)
class And:
    left: "LogicExpr"
    right: "LogicExpr"


@dataclass(frozen=True)
class Or:
    left: "LogicExpr"
    right: "LogicExpr"


@dataclass(frozen=True)
class Compare:
    lhs: Operand
    op: str  # '=' or '<>'
    rhs: Operand

    def __post_init__(self):
        if self.op not in ("=", "<>"):
            raise ValueError(f"comparison operator must be '=' or '<>', got {self.op!r}")


LogicExpr = Union[Var, Const, Not, And, Or, Compare]


class ExprError(ValueError):
    """Base for expression language errors; position is a 1-based offset."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class LexicalError(ExprError):
    pass


class ExprSyntaxError(ExprError):
    pass


class EvaluationError(ValueError):
    pass


# --- lexer -----------------------------------------------------------------

_KEYWORDS = {"AND", "OR", "NOT", "TRUE", "FALSE", "UNKNOWN", "NULL"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
    | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
    | (?P<int>-?\d+)
    | (?P<neq><>)
    | (?P<eq>=)
    | (?P<lparen>\()
    | (?P<rparen>\))
    | (?P<dollar>\$)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # keyword name, or one of IDENT INT EQ NEQ LPAREN RPAREN DOLLAR EOF
    text: str
    pos: int  # 1-based character offset


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise LexicalError(
                f"unexpected character {text[i]!r} at position {i + 1}", i + 1
            )
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "ident" and value.upper() in _KEYWORDS:
                tokens.append(_Token(value.upper(), value, i + 1))
            else:
                tokens.append(_Token(kind.upper(), value, i + 1))
        i = m.end()
    tokens.append(_Token("EOF", "", len(text) + 1))
    return tokens


# --- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str) -> None:
        tok = self.peek()
        where = "end of input" if tok.kind == "EOF" else f"{tok.text!r} at position {tok.pos}"
        raise ExprSyntaxError(f"expected {expected}, found {where}", tok.pos)

    def expect(self, kind: str, expected: str) -> _Token:
        if self.peek().kind != kind:
            self.fail(expected)
        return self.advance()

    def parse_expr(self) -> LogicExpr:
        node = self.parse_term()
        while self.peek().kind == "OR":
            self.advance()
            node = Or(node, self.parse_term())
        return node

    def parse_term(self) -> LogicExpr:
        node = self.parse_factor()
        while self.peek().kind == "AND":
            self.advance()
            node = And(node, self.parse_factor())
        return node

    def parse_factor(self) -> LogicExpr:
        tok = self.peek()
        if tok.kind == "NOT":
            self.advance()
            return Not(self.parse_factor())
        if tok.kind == "LPAREN":
            self.advance()
            node = self.parse_expr()
            self.expect("RPAREN", "')'")
            return node
        return self.parse_atom()

    def parse_atom(self) -> LogicExpr:
        tok = self.peek()
        if tok.kind in ("TRUE", "FALSE", "UNKNOWN"):
            self.advance()
            return Const({"TRUE": Trit.TRUE, "FALSE": Trit.FALSE, "UNKNOWN": Trit.UNKNOWN}[tok.kind])
        if tok.kind == "IDENT":
            self.advance()
            return Var(tok.text)
        if tok.kind in ("INT", "NULL", "DOLLAR"):
            lhs = self.parse_operand()
            op_tok = self.peek()
            if op_tok.kind == "EQ":
                op = "="
            elif op_tok.kind == "NEQ":
                op = "<>"
            else:
                self.fail("'=' or '<>'")
            self.advance()
            return Compare(lhs, op, self.parse_operand())
        self.fail("an expression")

    def parse_operand(self) -> Operand:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return int(tok.text)
        if tok.kind == "NULL":
            self.advance()
            return None
        if tok.kind == "DOLLAR":
            self.advance()
            name = self.expect("IDENT", "identifier after '$'")
            return DataVar(name.text)
        self.fail("an integer, NULL or '$' variable")


def parse(text: str) -> LogicExpr:
    """Parse an expression string; raises on lexical/syntax/trailing errors."""
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    if parser.peek().kind != "EOF":
        tok = parser.peek()
        raise ExprSyntaxError(
            f"trailing input {tok.text!r} at position {tok.pos}", tok.pos
        )
    return node


def _format_operand(op: Operand) -> str:
    if op is None:
        return "NULL"
    if isinstance(op, DataVar):
        return f"${op.name}"
    return str(op)


def format_expr(expr: LogicExpr) -> str:
    """Render a tree back to source, parenthesizing only where needed.

    parse(format_expr(e)) reproduces e structurally.
    """

    def fmt(node: LogicExpr, min_prec: int) -> str:
        if isinstance(node, Or):
            s, prec = f"{fmt(node.left, 1)} OR {fmt(node.right, 2)}", 1
        elif isinstance(node, And):
            s, prec = f"{fmt(node.left, 2)} AND {fmt(node.right, 3)}", 2
        elif isinstance(node, Not):
            s, prec = f"NOT {fmt(node.child, 3)}", 3
        elif isinstance(node, Var):
            s, prec = node.name, 4
        elif isinstance(node, Const):
            s, prec = {Trit.TRUE: "TRUE", Trit.FALSE: "FALSE", Trit.UNKNOWN: "UNKNOWN"}[node.value], 4
        elif isinstance(node, Compare):
            s, prec = f"{_format_operand(node.lhs)} {node.op} {_format_operand(node.rhs)}", 4
        else:
            raise TypeError(f"not a logic expression node: {node!r}")
        return f"({s})" if prec < min_prec else s

    return fmt(expr, 0)


# --- evaluation ------------------------------------------------------------


@dataclass
class Bindings:
    """Variable environment: trit variables and integer-or-NULL data variables.

    A data variable bound to None holds SQL NULL; a *missing* name of
    either kind is an evaluation error, never silently unknown.
    """

    trits: dict[str, Trit] = field(default_factory=dict)
    data: dict[str, Union[int, None]] = field(default_factory=dict)


def evaluate(expr: LogicExpr, bindings: Bindings | None = None) -> Trit:
    """Evaluate a tree to a trit.

    Comparisons with a NULL operand (literal NULL, or a data variable
    holding NULL) yield unknown; integer comparisons are classical.
    Raises EvaluationError for unbound variable names.
    """
    env = bindings if bindings is not None else Bindings()

    def resolve(op: Operand) -> Union[int, None]:
        if isinstance(op, DataVar):
            if op.name not in env.data:
                raise EvaluationError(f"unbound data variable ${op.name}")
            return env.data[op.name]
        return op

    def ev(node: LogicExpr) -> Trit:
        if isinstance(node, Const):
            return node.value
        if isinstance(node, Var):
            if node.name not in env.trits:
                raise EvaluationError(f"unbound variable {node.name}")
            return _as_trit(env.trits[node.name])
        if isinstance(node, Not):
            return k3_not(ev(node.child))
        # AND/OR are total functions; evaluate both sides so unbound
        # names are reported no matter where they sit
        if isinstance(node, And):
            return k3_and(ev(node.left), ev(node.right))
        if isinstance(node, Or):
            return k3_or(ev(node.left), ev(node.right))
        if isinstance(node, Compare):
            lhs, rhs = resolve(node.lhs), resolve(node.rhs)
            if lhs is None or rhs is None:
                return Trit.UNKNOWN
            matched = lhs == rhs if node.op == "=" else lhs != rhs
            return Trit.TRUE if matched else Trit.FALSE
        raise TypeError(f"not a logic expression node: {node!r}")

    return ev(expr)


def _walk(node: LogicExpr) -> Iterator[LogicExpr]:
    yield node
    if isinstance(node, Not):
        yield from _walk(node.child)
    elif isinstance(node, (And, Or)):
        yield from _walk(node.left)
        yield from _walk(node.right)


@dataclass(frozen=True)
class TruthTable:
    """All assignments of an expression's trit variables, with results.

    Each row is the variable assignment in `variables` order followed by
    the expression value.
    """

    variables: tuple[str, ...]
    rows: tuple[tuple[Trit, ...], ...]


_TRIT_ORDER = (Trit.FALSE, Trit.UNKNOWN, Trit.TRUE)


def truth_table(expr: LogicExpr) -> TruthTable:
    """Enumerate the expression over all 3^k trit-variable assignments.

    Variables appear in first-appearance order; each one cycles through
    (-1, 0, +1) with the rightmost variable fastest.  Expressions with
    data variables have no finite table and are rejected.
    """
    variables: list[str] = []
    for node in _walk(expr):
        if isinstance(node, Compare):
            for op in (node.lhs, node.rhs):
                if isinstance(op, DataVar):
                    raise ValueError(
                        f"cannot tabulate data variable ${op.name}; bind it and evaluate instead"
                    )
        elif isinstance(node, Var) and node.name not in variables:
            variables.append(node.name)
    rows = []
    for assignment in itertools.product(_TRIT_ORDER, repeat=len(variables)):
        env = Bindings(trits=dict(zip(variables, assignment)))
        rows.append(assignment + (evaluate(expr, env),))
    return TruthTable(variables=tuple(variables), rows=tuple(rows))


def eval_text(text: str, bindings: Bindings | None = None) -> Trit:
    """Parse and evaluate in one step."""
    return evaluate(parse(text), bindings)


# --- photon measurement table ----------------------------------------------

# Outcome of filtering a photon ensemble: rows by photon state, columns
# by filter state, both over (-1, 0, +1) for horizontal/diagonal/vertical.
# The grid is stored verbatim from its source; the center cell is printed
# there as bare "1", kept here as +1, the only reading inside the value
# domain.  See the discrepancy notes for the tension with the half-
# intensity rule it is said to encode.
MEASUREMENT_GRID: tuple[tuple[Trit, ...], ...] = (
    (Trit.FALSE, Trit.UNKNOWN, Trit.TRUE),
    (Trit.UNKNOWN, Trit.TRUE, Trit.UNKNOWN),
    (Trit.TRUE, Trit.UNKNOWN, Trit.TRUE),
)


def quantum_measure(photon: Trit, filter: Trit) -> Trit:
    """Measurement outcome trit for a photon state seen through a filter."""
    return MEASUREMENT_GRID[_as_trit(photon) + 1][_as_trit(filter) + 1]
