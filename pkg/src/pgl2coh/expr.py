"""Ring-element expressions: tokenizer, LL(1) parser, printer and evaluator.

Grammar (whitespace between tokens is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := NUMBER | VAR | SECTOR | "(" expr ")"

NUMBER is ``123`` or ``p/q``, VAR is one of a, b, g, Q and SECTOR is
``t[bits]:h<s>:<index>``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .classes import OrbifoldClass
from .polynomial import Poly
from .sectors import SectorGenerator, TorsionClass


class ParseError(ValueError):
    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"at byte {offset}: {message}{detail}")


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Sector:
    bits: str
    s: int
    index: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<SECTOR>t\[[^\]]*\]:h\d+:\d+)
  | (?P<NUMBER>\d+(?:/\d+)?)
  | (?P<VAR>[abgQ])
  | (?P<OP>[-+*^()])
    """,
    re.VERBOSE,
)

ATOM_START = ("NUMBER", "VAR", "SECTOR", "(")


def tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte(text, pos), ATOM_START + ("+", "-", "*", "^", ")"))
        kind = m.lastgroup
        if kind != "ws":
            if kind == "OP":
                kind = m.group()
            out.append(Token(kind, m.group(), _byte(text, pos)))
        pos = m.end()
    out.append(Token("EOF", "", _byte(text, len(text))))
    return out


def _byte(text, pos):
    return len(text[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, text, genus):
        self.tokens = tokenize(text)
        self.pos = 0
        self.genus = genus

    @property
    def peek(self):
        return self.tokens[self.pos]

    def take(self, *kinds):
        tok = self.peek
        if tok.kind not in kinds:
            what = "end of input" if tok.kind == "EOF" else repr(tok.text)
            raise ParseError(f"unexpected {what}", tok.offset, kinds)
        self.pos += 1
        return tok

    def parse(self):
        node = self.expr()
        self.take("EOF")
        return node

    def expr(self):
        node = self.term()
        while self.peek.kind in ("+", "-"):
            op = self.take("+", "-").text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek.kind == "*":
            self.take("*")
            node = BinOp("*", node, self.unary())
        return node

    def unary(self):
        if self.peek.kind == "-":
            self.take("-")
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek.kind == "^":
            self.take("^")
            tok = self.take("NUMBER")
            if "/" in tok.text:
                raise ParseError("exponent must be a non-negative integer", tok.offset, ("INT",))
            node = Pow(node, int(tok.text))
        return node

    def atom(self):
        tok = self.take(*ATOM_START)
        if tok.kind == "NUMBER":
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", tok.offset)
            return Num(Fraction(int(num), int(den or 1)))
        if tok.kind == "VAR":
            return Var(tok.text)
        if tok.kind == "SECTOR":
            return self.sector(tok)
        node = self.expr()
        self.take(")")
        return node

    def sector(self, tok):
        m = re.fullmatch(r"t\[([^\]]*)\]:h(\d+):(\d+)", tok.text)
        bits, s, index = m.group(1), int(m.group(2)), int(m.group(3))
        if self.genus is None:
            raise ParseError("sector atoms need a genus", tok.offset)
        if not re.fullmatch(r"[01]*", bits):
            raise ParseError(f"sector label {bits!r} is not a bit string", tok.offset)
        if len(bits) != 2 * self.genus:
            raise ParseError(f"sector label has {len(bits)} bits, genus {self.genus} needs {2 * self.genus}", tok.offset)
        if s % 2:
            raise ParseError(f"odd sector degree h{s}", tok.offset)
        try:
            SectorGenerator(TorsionClass.parse(bits), s, index)
        except ValueError as exc:
            raise ParseError(str(exc), tok.offset) from None
        return Sector(bits, s, index)


def parse(text, genus=None):
    if genus is not None and genus < 2:
        raise ValueError(f"genus must be >= 2, got {genus}")
    return _Parser(text, genus).parse()


# printing

_PREC = {"+": 1, "-": 1, "*": 2}


def _prec(node):
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def to_text(node):
    """Canonical text; parsing it gives back an equal tree."""
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Sector):
        return f"t[{node.bits}]:h{node.s}:{node.index}"
    if isinstance(node, Neg):
        inner = to_text(node.operand)
        return f"-{inner}" if _prec(node.operand) >= 3 else f"-({inner})"
    if isinstance(node, Pow):
        base = to_text(node.base)
        if _prec(node.base) < 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    p = _PREC[node.op]
    left = to_text(node.left)
    if _prec(node.left) < p:
        left = f"({left})"
    right = to_text(node.right)
    if _prec(node.right) <= p:
        right = f"({right})"
    sep = "*" if node.op == "*" else f" {node.op} "
    return f"{left}{sep}{right}"


# evaluation


class EvaluationError(ValueError):
    pass


def _formal_product(x, y):
    """Product without a ring: fine unless two twisted classes or a non-Q factor meet a sector."""
    if x.twisted and y.twisted:
        raise EvaluationError("multiplying two twisted classes needs a ring")
    if y.twisted:
        x, y = y, x
    if x.twisted:
        if y.untwisted.variables() - {"Q"}:
            raise EvaluationError("multiplying a twisted class by a, b or g needs a ring")
        return x.scale(y.untwisted)
    return OrbifoldClass(x.genus, x.untwisted * y.untwisted)


def evaluate(node, genus, product=None):
    """Evaluate to an OrbifoldClass; ``product`` defaults to the formal product."""
    mul = product or _formal_product

    def ev(n):
        if isinstance(n, Num):
            return OrbifoldClass(genus, Poly.constant(n.value))
        if isinstance(n, Var):
            return OrbifoldClass(genus, Poly.var(n.name))
        if isinstance(n, Sector):
            return OrbifoldClass.sector(SectorGenerator(TorsionClass.parse(n.bits), n.s, n.index))
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, Pow):
            base = ev(n.base)
            out = OrbifoldClass.unit(genus)
            for _ in range(n.exponent):
                out = mul(out, base)
            return out
        x, y = ev(n.left), ev(n.right)
        if n.op == "+":
            return x + y
        if n.op == "-":
            return x - y
        return mul(x, y)

    return ev(node)


def parse_polynomial(text):
    """Parse an expression in a, b, g, Q only and expand it to a Poly."""
    node = parse(text)
    return evaluate(node, 2).untwisted


def parse_class(text, genus, product=None):
    return evaluate(parse(text, genus), genus, product)

