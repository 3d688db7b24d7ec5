"""Recursive-descent parser for tower expressions.

Grammar (whitespace insensitive)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' ['-'] INT]
    atom   := INT | 'x' | 'f' DIGIT | '(' expr ')'

Only ``x`` (or a parenthesized ``c*x^a``) may carry a negative exponent.
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from .core_arith import check_prime
from .errors import InputError
from .tower import MAX_GENERATORS, Tower, TowerElement

MAX_EXPONENT = 100_000

Raw = Dict[Tuple[int, Tuple[int, ...]], int]

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|f(\d)|([-+*^()]))")


class ParseError(InputError):
    def __init__(self, message: str, position: int, source: str):
        super().__init__(f"{message} at position {position}: {source!r}")
        self.position = position
        self.source = source


def _tokenize(src: str) -> List[Tuple[str, object, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError("unexpected character", pos, src)
        start = m.start(0) + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("x", None, start))
        elif m.group(3):
            idx = int(m.group(3))
            if idx == 0:
                raise ParseError("generator indices start at f1", start, src)
            tokens.append(("f", idx, start))
        else:
            tokens.append((m.group(4), None, start))
        pos = m.end(0)
    tokens.append(("end", None, len(src)))
    return tokens


_ZERO = (0,) * MAX_GENERATORS


class _Parser:
    def __init__(self, src: str, p: int, max_generator: int):
        self.src = src
        self.p = p
        self.max_generator = max_generator
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str, expected: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {expected}, found {self._describe(tok)}", tok[2], self.src)
        self.i += 1
        return tok

    def _describe(self, tok) -> str:
        kind, value, _ = tok
        if kind == "end":
            return "end of input"
        if kind == "int":
            return repr(str(value))
        if kind == "f":
            return repr(f"f{value}")
        return repr(kind)

    # raw polynomial helpers
    def _add(self, a: Raw, b: Raw, sign: int = 1) -> Raw:
        out = dict(a)
        for k, c in b.items():
            s = (out.get(k, 0) + sign * c) % self.p
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def _mul(self, a: Raw, b: Raw) -> Raw:
        out: Raw = {}
        for (xa, ga), ca in a.items():
            for (xb, gb), cb in b.items():
                k = (xa + xb, tuple(i + j for i, j in zip(ga, gb)))
                out[k] = (out.get(k, 0) + ca * cb) % self.p
        return {k: c for k, c in out.items() if c}

    def _pow(self, a: Raw, n: int, pos: int) -> Raw:
        if n < 0:
            if len(a) != 1:
                raise ParseError("negative exponent needs a single x monomial", pos, self.src)
            (xa, ga), c = next(iter(a.items()))
            if any(ga):
                raise ParseError("negative exponents are only allowed on x", pos, self.src)
            return {(xa * n, ga): pow(pow(c, -1, self.p), -n, self.p)}
        result: Raw = {(0, _ZERO): 1}
        base = a
        while n:
            if n & 1:
                result = self._mul(result, base)
            n >>= 1
            if n:
                base = self._mul(base, base)
        return result

    def parse(self) -> Raw:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0, self.src)
        value = self.expr()
        self.take("end", "operator or end of input")
        return value

    def expr(self) -> Raw:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take(self.peek()[0], "sign")[0] == "-" else 1
        value = self._add({}, self.term(), sign)
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0], "operator")[0]
            value = self._add(value, self.term(), -1 if op == "-" else 1)
        return value

    def term(self) -> Raw:
        value = self.factor()
        while self.peek()[0] == "*":
            self.take("*", "'*'")
            value = self._mul(value, self.factor())
        return value

    def factor(self) -> Raw:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take("^", "'^'")
            neg = False
            if self.peek()[0] == "-":
                self.take("-", "'-'")
                neg = True
            tok = self.take("int", "integer exponent")
            n = tok[1]
            if n > MAX_EXPONENT:
                raise ParseError(f"exponent overflow (limit {MAX_EXPONENT})", tok[2], self.src)
            return self._pow(base, -n if neg else n, tok[2])
        return base

    def atom(self) -> Raw:
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.i += 1
            c = tok[1] % self.p
            return {(0, _ZERO): c} if c else {}
        if kind == "x":
            self.i += 1
            return {(1, _ZERO): 1}
        if kind == "f":
            self.i += 1
            j = tok[1]
            if j > self.max_generator:
                raise ParseError(
                    f"variable f{j} exceeds declared levels ({self.max_generator})", tok[2], self.src)
            g = [0] * MAX_GENERATORS
            g[j - 1] = 1
            return {(0, tuple(g)): 1}
        if kind == "(":
            self.i += 1
            value = self.expr()
            self.take(")", "')'")
            return value
        raise ParseError(f"expected a number, x, f1..f9 or '(', found {self._describe(tok)}",
                         tok[2], self.src)


def parse_raw(src: str, p: int, max_generator: int = MAX_GENERATORS) -> Raw:
    """Parse to a raw ``{(x_exp, gen_exps): coef mod p}`` map, no relations applied."""
    check_prime(p)
    return _Parser(src, p, max_generator).parse()


def parse_expression(src: str, p: int, tower: Optional[Tower] = None,
                     original_generators: bool = False) -> TowerElement:
    """Parse ``src`` into a normal-form element of ``tower``.

    ``tower`` defaults to the bare base field F_p((x)).  With
    ``original_generators`` each ``fj`` means the generator as first
    adjoined, before any normalizing substitution.
    """
    if tower is None:
        tower = Tower(p)
    elif tower.p != p:
        raise InputError(f"tower is over F_{tower.p}, expression requested over F_{p}")
    raw = parse_raw(src, p, tower.height)
    if not original_generators or not any(lv.substitutions for lv in tower.levels):
        return tower.normal_form(raw)
    images = [tower.original_generator(j) for j in range(1, tower.height + 1)]
    acc = tower.zero()
    for (a, gens), c in raw.items():
        term = tower.x() ** a * c
        for j, e in enumerate(gens[:tower.height]):
            if e:
                term = term * images[j] ** e
        acc = acc + term
    return acc
