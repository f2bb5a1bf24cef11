"""Text syntax for states and operators.

States are sums of ``coef*basis[parts]`` terms::

    s[2,1] - 1/2*p[2]

A state written in a single basis keeps that basis; mixing bases normalizes
to Schur.

Operators follow the grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := RATIONAL | gen | '(' expr ')'
    gen    := e_INT | f_INT | h_INT | d | id
            | mul(state) | adj(state) | tmul(state) | tadj(state)

``*`` is composition acting right to left: ``adj(h[1])*mul(e[2])`` multiplies
by ``e_2`` first and then applies the adjoint of ``h_1``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .fock import (
    AdjBy,
    Compose,
    Dgen,
    E,
    F,
    Hgen,
    Identity,
    MulBy,
    OperatorExpr,
    Scale,
    Sum,
    TwistAdjBy,
    TwistMulBy,
)
from .partitions import Partition
from .symfunc import Basis, SymElt, format_coeff, format_elt


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(
    r"""\s*(?:
      (?P<num>\d+(?:/\d+)?)
    | (?P<gen>[efh]_-?\d+)
    | (?P<call>mul|adj|tmul|tadj)\(
    | (?P<word>id|d)(?![A-Za-z0-9_])
    | (?P<basis>[sehp])\[
    | (?P<op>[-+*()\],])
    )""",
    re.VERBOSE,
)


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError("unexpected character", text, start)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.take()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        return tok

    def error(self, message):
        raise ParseError(message, self.text, self.peek()[2])

    def at_end(self):
        return self.peek()[0] == "end"

    # states -------------------------------------------------------------
    def state(self, stop=("end",)) -> SymElt:
        terms = []
        sign = 1
        first = True
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
            elif not first:
                break
            coef = Fraction(sign)
            if self.peek()[0] == "num":
                coef *= Fraction(self.take()[1])
                self.expect("op", "*")
            tok = self.peek()
            if tok[0] != "basis":
                self.error("expected a basis element like s[2,1]")
            self.take()
            terms.append((Basis.coerce(tok[1]), self._parts(tok[2]), coef))
            first = False
            sign = 1
            if self.peek()[0] in stop or (self.peek()[0] == "op" and self.peek()[1] in stop):
                break
            if not (self.peek()[0] == "op" and self.peek()[1] in "+-"):
                self.error("expected '+', '-' or ')'" if ")" in stop else "expected '+' or '-'")
        bases = {b for b, _, _ in terms}
        if len(bases) == 1:
            return SymElt(bases.pop(), [(lam, c) for _, lam, c in terms])
        out = SymElt(Basis.SCHUR)
        for b, lam, c in terms:
            out = out + SymElt(b, [(lam, c)])
        return out

    def _parts(self, start) -> Partition:
        parts = []
        while True:
            kind, val, pos = self.take()
            if kind == "op" and val == "]" and not parts:
                break
            if kind != "num" or "/" in val:
                raise ParseError("expected a part", self.text, pos)
            parts.append(int(val))
            kind, val, pos = self.take()
            if kind == "op" and val == "]":
                break
            if not (kind == "op" and val == ","):
                raise ParseError("expected ',' or ']'", self.text, pos)
        if any(x == 0 for x in parts):
            raise ParseError("parts must be positive", self.text, start)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ParseError("parts must be weakly decreasing", self.text, start)
        return Partition(parts)

    # operators ----------------------------------------------------------
    def expr(self) -> OperatorExpr:
        terms = []
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val == "-":
            self.take()
            negate = True
        terms.append(self.term(negate))
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            negate = self.take()[1] == "-"
            terms.append(self.term(negate))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self, negate: bool) -> OperatorExpr:
        scalar = None
        ops = []
        while True:
            kind, val, pos = self.peek()
            if kind == "num":
                self.take()
                scalar = Fraction(val) * (1 if scalar is None else scalar)
            else:
                ops.append(self.factor())
            if self.peek()[0] == "op" and self.peek()[1] == "*":
                self.take()
                continue
            break
        if ops:
            tree = ops[0]
            for x in ops[1:]:
                tree = Compose(tree, x)
        else:
            tree = Identity()
        if scalar is not None:
            return Scale(-scalar if negate else scalar, tree)
        return Scale(Fraction(-1), tree) if negate else tree

    def factor(self) -> OperatorExpr:
        kind, val, pos = self.take()
        if kind == "gen":
            idx = int(val[2:])
            return {"e": E, "f": F, "h": Hgen}[val[0]](idx)
        if kind == "word":
            return Identity() if val == "id" else Dgen()
        if kind == "call":
            b = self.state(stop=(")",))
            self.expect("op", ")")
            return {"mul": MulBy, "adj": AdjBy, "tmul": TwistMulBy, "tadj": TwistAdjBy}[val](b)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect("op", ")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", self.text, pos)


def parse_state(text: str) -> SymElt:
    """Parse a state such as ``s[2,1] - 1/2*p[2]``.  ``0`` is the zero state."""
    if text.strip() == "0":
        return SymElt(Basis.SCHUR)
    parser = _Parser(text)
    out = parser.state()
    if not parser.at_end():
        parser.error("trailing input")
    return out


def parse_operator(text: str) -> OperatorExpr:
    parser = _Parser(text)
    out = parser.expr()
    if not parser.at_end():
        parser.error("trailing input")
    return out


# --- printing ---------------------------------------------------------------

_CALLS = {MulBy: "mul", AdjBy: "adj", TwistMulBy: "tmul", TwistAdjBy: "tadj"}


def format_operator(x: OperatorExpr) -> str:
    """Inverse of :func:`parse_operator` up to whitespace."""
    if isinstance(x, Sum):
        if not x.terms:
            return "0*id"
        if len(x.terms) == 1:
            return f"({format_operator(x.terms[0])})"
        out = []
        for n, t in enumerate(x.terms):
            if isinstance(t, Scale) and t.c < 0:
                body = _negated_term(t)
                out.append(f"-{body}" if n == 0 else f"- {body}")
            else:
                body = _term(t)
                out.append(body if n == 0 else f"+ {body}")
        return " ".join(out)
    if isinstance(x, Scale) and x.c < 0:
        return f"-{_negated_term(x)}"
    return _term(x)


def _negated_term(x: Scale) -> str:
    # printed after a '-' sign; the parser folds the sign back into the scalar
    c = -x.c
    if c == 1:
        if isinstance(x.child, (Scale, Sum)):
            return f"({format_operator(x.child)})"
        return _term(x.child)
    return f"{format_coeff(c)}*{_factor_chain(x.child)}"


def _term(x: OperatorExpr) -> str:
    if isinstance(x, Scale):
        if x.c < 0:
            return f"({format_operator(x)})"
        return f"{format_coeff(x.c)}*{_factor_chain(x.child)}"
    if isinstance(x, Sum):
        return f"({format_operator(x)})"
    return _factor_chain(x)


def _factor_chain(x: OperatorExpr) -> str:
    """``x`` as a '*'-separated chain of factors (no leading scalar)."""
    if isinstance(x, Compose):
        return f"{_factor_chain(x.left)}*{_factor(x.right)}"
    return _factor(x)


def _factor(x: OperatorExpr) -> str:
    if isinstance(x, E):
        return f"e_{x.i}"
    if isinstance(x, F):
        return f"f_{x.i}"
    if isinstance(x, Hgen):
        return f"h_{x.i}"
    if isinstance(x, Dgen):
        return "d"
    if isinstance(x, Identity):
        return "id"
    if type(x) in _CALLS:
        return f"{_CALLS[type(x)]}({format_elt(x.b)})"
    return f"({format_operator(x)})"
