"""Problem files: variables on line 1, the characteristic on line 2, then polynomials.

Polynomials are separated by commas and may span lines; ``^`` marks powers
and ``*`` between factors is optional. Lines starting with ``#`` are
comments, except ``#phi: <polynomial>`` which names the polynomial to
saturate or divide by.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .ring import DRL, FieldSpec, MonomialOrder, PolyRing, Polynomial

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


@dataclass
class Problem:
    ring: PolyRing
    polys: list
    phi: Polynomial | None = None


@dataclass
class _Tok:
    kind: str        # "num", "var", "op", "end"
    text: str
    line: int
    col: int
    value: int = 0


def _tokenize(text: str, names: Sequence[str], line0: int = 1, col0: int = 1) -> list[_Tok]:
    by_length = sorted(names, key=len, reverse=True)
    toks = []
    line, col = line0, col0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("num", text[i:j], line, col, int(text[i:j])))
            col += j - i
            i = j
            continue
        if ch in "+-*^(),":
            toks.append(_Tok("op", ch, line, col))
            i += 1
            col += 1
            continue
        for name in by_length:
            if text.startswith(name, i):
                toks.append(_Tok("var", name, line, col))
                i += len(name)
                col += len(name)
                break
        else:
            m = re.match(r"[A-Za-z_][A-Za-z0-9_]*", text[i:])
            word = m.group(0) if m else ch
            raise ParseError(f"unknown symbol {word!r}", line, col)
    toks.append(_Tok("end", "", line, col))
    return toks


class _Parser:
    def __init__(self, toks: list[_Tok], ring: PolyRing):
        self.toks = toks
        self.k = 0
        self.ring = ring
        self.index = {name: i for i, name in enumerate(ring.names)}

    @property
    def tok(self) -> _Tok:
        return self.toks[self.k]

    def error(self, msg: str):
        t = self.tok
        raise ParseError(msg, t.line, t.col)

    def take(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.k += 1
            return True
        return False

    def poly_list(self) -> list[Polynomial]:
        out = []
        while self.tok.kind != "end":
            out.append(self.expr())
            if not self.take(","):
                break
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return out

    def expr(self) -> Polynomial:
        f = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.k += 1
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def _starts_factor(self) -> bool:
        t = self.tok
        return t.kind in ("num", "var") or (t.kind == "op" and t.text == "(")

    def term(self) -> Polynomial:
        f = self.factor()
        while True:
            if self.take("*"):
                f = f * self.factor()
            elif self._starts_factor():
                f = f * self.factor()
            else:
                return f

    def factor(self) -> Polynomial:
        if self.take("-"):
            return -self.factor()
        if self.take("+"):
            return self.factor()
        base = self.atom()
        if self.take("^"):
            if self.tok.kind != "num":
                self.error("expected an integer exponent")
            e = self.tok.value
            self.k += 1
            base = base ** e
        return base

    def atom(self) -> Polynomial:
        t = self.tok
        if t.kind == "num":
            self.k += 1
            return self.ring.constant(t.value)
        if t.kind == "var":
            self.k += 1
            return self.ring.var(self.index[t.text])
        if self.take("("):
            f = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return f
        self.error("expected a number, a variable or '('" if t.kind != "end" else "unexpected end of input")


def parse_polynomial(text: str, ring: PolyRing, line: int = 1, col: int = 1) -> Polynomial:
    parser = _Parser(_tokenize(text, ring.names, line, col), ring)
    if parser.tok.kind == "end":
        parser.error("empty polynomial")
    f = parser.expr()
    if parser.tok.kind != "end":
        parser.error(f"unexpected {parser.tok.text!r}")
    return f


def parse_problem(text: str, order: MonomialOrder = DRL) -> Problem:
    lines = text.split("\n")
    content = [(k + 1, ln) for k, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    if len(content) < 2:
        raise ParseError("expected a variable line and a characteristic line", len(lines), 1)
    (ln_vars, vars_line), (ln_p, p_line) = content[0], content[1]
    names = [s.strip() for s in vars_line.split(",")]
    for name in names:
        if not NAME_RE.match(name):
            raise ParseError(f"bad variable name {name!r}", ln_vars, vars_line.find(name) + 1 if name else 1)
    if not re.fullmatch(r"\s*\d+\s*", p_line):
        raise ParseError(f"bad characteristic {p_line.strip()!r}", ln_p, 1)
    try:
        field = FieldSpec(int(p_line))
    except ValueError as e:
        raise ParseError(str(e), ln_p, 1) from None
    try:
        ring = PolyRing(tuple(names), field, order)
    except ValueError as e:
        raise ParseError(str(e), ln_vars, 1) from None
    # the body keeps its original line numbers so errors point at the file
    body_start = ln_p
    body = []
    phi = None
    for k in range(body_start, len(lines)):
        ln = lines[k]
        stripped = ln.lstrip()
        if stripped.startswith("#"):
            m = re.match(r"#\s*phi\s*:(.*)$", stripped)
            if m:
                phi = parse_polynomial(m.group(1), ring, k + 1, ln.index(":") + 2)
            body.append("")
        else:
            body.append(ln)
    toks = _tokenize("\n".join(body), ring.names, body_start + 1, 1)
    polys = _Parser(toks, ring).poly_list()
    if not polys:
        raise ParseError("no polynomials", len(lines), 1)
    return Problem(ring, polys, phi)


def format_polys(F: Sequence[Polynomial]) -> str:
    """One polynomial per line, terms decreasing under their ring's order."""
    return "".join(f"{f}\n" for f in F)


def format_problem(ring: PolyRing, F: Sequence[Polynomial], phi: Polynomial | None = None) -> str:
    out = ",".join(ring.names) + "\n" + f"{ring.p}\n" + ",\n".join(str(f) for f in F) + "\n"
    if phi is not None:
        out += f"#phi: {phi}\n"
    return out
