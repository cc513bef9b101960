"""Text syntax for terms.

Objects: ``I``, identifiers, ``(a*b)``. 1-cells: ``id[x]``, ``a[x,y,z]``,
``a'[..]``, ``l[x]``, ``l'[x]``, ``r[x]``, ``r'[x]``, ``R[x,y]``,
``R'[x,y]``, ``(f*g)`` and ``(f;g)`` where ``;`` is diagrammatic order
(first ``f``, then ``g``). 2-cells use the constructor names printed by
``terms.print_two`` with ``;`` for vertical, ``.`` for horizontal and
``*`` for tensor composition. Chains such as ``x*y*z`` without
parentheses associate to the left.
"""

from __future__ import annotations

import re

from . import terms as T


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at offset {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_]*'?)|([\[\](),*;.]))")


def tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        out.append((m.group(1) or m.group(2), m.start(1) if m.group(1) else m.start(2)))
        pos = m.end()
    out.append(("", len(text)))
    return out


_OBJ_CELLS = {
    "id": (T.Id, 1), "a": (T.Assoc, 3), "a'": (T.AssocInv, 3),
    "l": (T.LUnit, 1), "l'": (T.LUnitInv, 1), "r": (T.RUnit, 1),
    "r'": (T.RUnitInv, 1), "R": (T.Braid, 2), "R'": (T.BraidInv, 2),
}

# constructor -> argument kinds: o object, c 1-cell, t 2-cell
_TWO_CELLS = {
    "id2": (T.Id2, "c"), "etaA": (T.EtaA, "ooo"), "epsA": (T.EpsA, "ooo"),
    "etaL": (T.EtaL, "o"), "epsL": (T.EpsL, "o"), "etaR": (T.EtaRu, "o"),
    "epsR": (T.EpsRu, "o"), "etaB": (T.EtaB, "oo"), "epsB": (T.EpsB, "oo"),
    "pi": (T.Pi, "oooo"), "mu": (T.Mu, "oo"), "lambda": (T.Lambda, "oo"),
    "rho": (T.Rho, "oo"), "hexL": (T.HexL, "ooo"), "hexR": (T.HexR, "ooo"),
    "natA": (T.NatA, "ccc"), "natL": (T.NatL, "c"), "natR": (T.NatRu, "c"),
    "natB": (T.NatB, "cc"), "interchange": (T.Interchange, "cc"),
    "funct2": (T.Funct2, "cccc"), "funct0": (T.Funct0, "oo"),
    "cassoc": (T.CompAssoc, "ccc"), "clunit": (T.CompLUnit, "c"),
    "crunit": (T.CompRUnit, "c"), "inv": (T.Inv, "t"),
}


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def pos(self) -> int:
        return self.toks[self.i][1]

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok or 'end of input'!r}", self.pos())
        self.i += 1
        return tok

    def done(self) -> None:
        if self.peek() != "":
            raise ParseError(f"trailing input {self.peek()!r}", self.pos())

    def chain(self, atom, ops: dict):
        left = atom()
        op = None
        while self.peek() in ops:
            if op is not None and self.peek() != op:
                raise ParseError("mixed operators need parentheses", self.pos())
            op = self.take()
            left = ops[op](left, atom())
        return left

    # objects
    def obj(self):
        return self.chain(self.obj_atom, {"*": T.ObjTensor})

    def obj_atom(self):
        tok = self.peek()
        if tok == "(":
            self.take()
            x = self.obj()
            self.take(")")
            return x
        if tok and tok[0].isalpha() and not tok.endswith("'"):
            self.take()
            return T.Unit() if tok == "I" else T.Gen(tok)
        raise ParseError(f"expected an object, found {tok or 'end of input'!r}", self.pos())

    def args(self, kinds: str) -> list:
        self.take("[")
        out = []
        for n, k in enumerate(kinds):
            if n:
                self.take(",")
            out.append({"o": self.obj, "c": self.cell, "t": self.two}[k]())
        self.take("]")
        return out

    # 1-cells
    def cell(self):
        return self.chain(self.cell_atom, {
            "*": T.Tensor, ";": lambda f, g: T.Compose(g, f)})

    def cell_atom(self):
        tok = self.peek()
        if tok == "(":
            self.take()
            f = self.cell()
            self.take(")")
            return f
        if tok in _OBJ_CELLS:
            cls, arity = _OBJ_CELLS[tok]
            self.take()
            return cls(*self.args("o" * arity))
        raise ParseError(f"expected a 1-cell, found {tok or 'end of input'!r}", self.pos())

    # 2-cells
    def two(self):
        return self.chain(self.two_atom, {
            "*": T.Tensor2,
            ";": lambda a, b: T.VComp(b, a),
            ".": lambda a, b: T.HComp(b, a),
        })

    def two_atom(self):
        tok = self.peek()
        if tok == "(":
            self.take()
            a = self.two()
            self.take(")")
            return a
        if tok in _TWO_CELLS:
            cls, kinds = _TWO_CELLS[tok]
            self.take()
            return cls(*self.args(kinds))
        raise ParseError(f"expected a 2-cell, found {tok or 'end of input'!r}", self.pos())


def parse_obj(text: str):
    p = _Parser(text)
    x = p.obj()
    p.done()
    return x


def parse_cell(text: str):
    p = _Parser(text)
    f = p.cell()
    p.done()
    return f


def parse_two(text: str):
    p = _Parser(text)
    a = p.two()
    p.done()
    return a


def parse_any(text: str):
    """Parse a 2-cell, 1-cell or object, trying in that order of specificity."""
    errors = []
    for fn in (parse_cell, parse_two, parse_obj):
        try:
            return fn(text)
        except ParseError as e:
            errors.append(e)
    raise max(errors, key=lambda e: e.pos)
