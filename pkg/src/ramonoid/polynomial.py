"""Sparse multivariate polynomials with integer coefficients and their parser.

Grammar (whitespace ignored)::

    relation := poly ["=" poly]
    poly     := ["+" | "-"] term {("+" | "-") term}
    term     := factor {"*" factor}
    factor   := int | var ["^" int]

A leading integer is optional, so ``x^2``, ``3*x*y^2`` and ``-1`` all parse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import DescriptionSyntaxError, RingDescriptionError

Exponent = Tuple[int, ...]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^=()]))")


@dataclass(frozen=True)
class Polynomial:
    """Polynomial over Z in the variables ``vars``.

    ``terms`` maps exponent vectors to nonzero coefficients; it is stored as
    a sorted tuple so instances hash and compare structurally.
    """

    vars: Tuple[str, ...]
    terms: Tuple[Tuple[Exponent, int], ...]

    @classmethod
    def from_dict(cls, variables: Sequence[str], terms: Dict[Exponent, int]) -> "Polynomial":
        clean = {e: c for e, c in terms.items() if c != 0}
        for e in clean:
            if len(e) != len(variables) or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e}")
        return cls(tuple(variables), tuple(sorted(clean.items())))

    def as_dict(self) -> Dict[Exponent, int]:
        return dict(self.terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return Polynomial.from_dict(self.vars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.vars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: Dict[Exponent, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial.from_dict(self.vars, out)

    def mod(self, p: int) -> "Polynomial":
        return Polynomial.from_dict(self.vars, {e: c % p for e, c in self.terms})

    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        return format_terms(self.vars, self.as_dict())


def format_monomial(variables: Sequence[str], e: Exponent) -> str:
    parts = []
    for v, k in zip(variables, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts) or "1"


def format_terms(variables: Sequence[str], terms: Dict[Exponent, int]) -> str:
    if not terms:
        return "0"
    out = []
    # highest total degree first, as people write them
    for e in sorted(terms, key=lambda e: (-sum(e), tuple(-k for k in e))):
        c = terms[e]
        mono = format_monomial(variables, e)
        if mono == "1":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def _tokens(text: str) -> Iterator[Tuple[str, str, int]]:
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            return
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise DescriptionSyntaxError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        yield kind, m.group(kind), m.start(kind)
        pos = m.end()


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.vars = tuple(variables)
        self.toks: List[Tuple[str, str, int]] = list(_tokens(text))
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg: str):
        raise DescriptionSyntaxError(msg, self.text, self.peek()[2])

    def poly(self) -> Dict[Exponent, int]:
        out: Dict[Exponent, int] = {}
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            coef, e = self.term()
            out[e] = out.get(e, 0) + sign * coef
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
                continue
            return out

    def term(self) -> Tuple[int, Exponent]:
        coef = 1
        e = [0] * len(self.vars)
        while True:
            kind, val, pos = self.take()
            if kind == "int":
                coef *= int(val)
            elif kind == "var":
                if val not in self.vars:
                    raise RingDescriptionError(f"unknown variable {val!r} at position {pos} in {self.text!r}")
                k = 1
                nk, nv, _ = self.peek()
                if nk == "op" and nv == "^":
                    self.take()
                    ek, ev, _ = self.take()
                    if ek != "int":
                        self.i -= 1
                        self.error("expected an integer exponent")
                    k = int(ev)
                e[self.vars.index(val)] += k
            else:
                self.i -= 1
                self.error("expected an integer or a variable")
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "*":
                self.take()
                continue
            return coef, tuple(e)


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``text`` as a polynomial in ``variables``."""
    p = _Parser(text, variables)
    terms = p.poly()
    if p.peek()[0] != "end":
        p.error("unexpected trailing input")
    return Polynomial.from_dict(variables, terms)


def parse_relation(text: str, variables: Sequence[str]) -> Tuple[Polynomial, Polynomial]:
    """Parse ``lhs = rhs`` (or a bare ``poly``, meaning ``poly = 0``)."""
    p = _Parser(text, variables)
    lhs = p.poly()
    kind, val, _ = p.peek()
    rhs: Dict[Exponent, int] = {}
    if kind == "op" and val == "=":
        p.take()
        rhs = p.poly()
    if p.peek()[0] != "end":
        p.error("unexpected trailing input")
    return Polynomial.from_dict(variables, lhs), Polynomial.from_dict(variables, rhs)
