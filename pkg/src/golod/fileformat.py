"""Parser for the ideal-file format.

    ring Q[x,y];
    ideal a = x^2, x*y, y^2;
    ideal b = x, y;
    task check a criterion=auto truncation=6;

Fields are Q or F<p>; generator expressions support +, -, *, ^, integer and
num/den rational coefficients, and parentheses.  Every generator must be
homogeneous or the file is rejected with its position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .ideals import Ideal
from .poly import GF, QQ, Polynomial, PolyRing


class IdealFileError(ValueError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        pos = f" (line {line}, column {col})" if line is not None else ""
        super().__init__(message + pos)


@dataclass
class Task:
    ideal: str
    options: dict = field(default_factory=dict)


@dataclass
class ParsedFile:
    ring: PolyRing
    ideals: dict
    tasks: list


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<comment>#[^\n]*)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*^/=,;()\[\]])"
)


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise IdealFileError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        val = m.group()
        if kind not in ("ws", "comment"):
            tokens.append((kind, val, line, col))
        newlines = val.count("\n")
        if newlines:
            line += newlines
            col = len(val) - val.rfind("\n")
        else:
            col += len(val)
        pos = m.end()
    tokens.append(("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind=None, value=None):
        k, v, line, col = self.peek()
        if (kind is not None and k != kind) or (value is not None and v != value):
            want = value or kind
            raise IdealFileError(f"expected {want!r}, found {v!r}", line, col)
        return self.next()

    def error(self, message):
        _, v, line, col = self.peek()
        raise IdealFileError(message, line, col)

    # -- grammar ----------------------------------------------------------

    def parse(self) -> ParsedFile:
        ring = None
        ideals: dict = {}
        tasks: list = []
        while self.peek()[0] != "eof":
            k, v, line, col = self.peek()
            if v == "ring":
                if ring is not None:
                    raise IdealFileError("duplicate ring declaration", line, col)
                ring = self.parse_ring()
            elif v == "ideal":
                if ring is None:
                    raise IdealFileError("ideal declared before the ring", line, col)
                name, ideal = self.parse_ideal(ring)
                if name in ideals:
                    raise IdealFileError(f"duplicate ideal name {name!r}", line, col)
                ideals[name] = ideal
            elif v == "task":
                tasks.append(self.parse_task(ideals))
            else:
                self.error(f"expected 'ring', 'ideal' or 'task', found {v!r}")
        if ring is None:
            raise IdealFileError("missing ring declaration")
        if not ideals:
            raise IdealFileError("no ideals declared")
        return ParsedFile(ring, ideals, tasks)

    def parse_ring(self) -> PolyRing:
        self.expect(value="ring")
        k, fname, line, col = self.expect("name")
        if fname == "Q":
            fld = QQ
        elif fname.startswith("F") and fname[1:].isdigit():
            try:
                fld = GF(int(fname[1:]))
            except ValueError as e:
                raise IdealFileError(str(e), line, col)
        else:
            raise IdealFileError(f"unknown field {fname!r} (use Q or F<p>)", line, col)
        self.expect(value="[")
        names = [self.expect("name")[1]]
        while self.peek()[1] == ",":
            self.next()
            names.append(self.expect("name")[1])
        self.expect(value="]")
        self.expect(value=";")
        try:
            return PolyRing(tuple(names), field=fld)
        except ValueError as e:
            raise IdealFileError(str(e), line, col)

    def parse_ideal(self, ring: PolyRing):
        self.expect(value="ideal")
        name = self.expect("name")[1]
        self.expect(value="=")
        gens = []
        while True:
            _, _, line, col = self.peek()
            p = self.parse_expr(ring)
            if not p.is_homogeneous():
                raise IdealFileError(f"inhomogeneous generator {p}", line, col)
            gens.append(p)
            k, v, _, _ = self.peek()
            if v == ",":
                self.next()
                continue
            break
        self.expect(value=";")
        return name, Ideal(ring, gens)

    def parse_task(self, ideals: dict) -> Task:
        self.expect(value="task")
        self.expect(value="check")
        k, name, line, col = self.expect("name")
        if name not in ideals:
            raise IdealFileError(f"task references unknown ideal {name!r}", line, col)
        options: dict = {}
        while self.peek()[1] != ";":
            key = self.expect("name")[1]
            while self.peek()[1] == "-":  # hyphenated option keys
                self.next()
                key += "_" + self.expect("name")[1]
            self.expect(value="=")
            kind, val, line, col = self.next()
            if kind not in ("name", "int"):
                raise IdealFileError(f"bad task value {val!r}", line, col)
            if kind == "name":
                while self.peek()[1] == "-":  # hyphenated values like strongly-golod
                    self.next()
                    val += "-" + self.expect("name")[1]
            options[key] = int(val) if kind == "int" else val
        self.expect(value=";")
        return Task(name, options)

    # -- polynomial expressions -------------------------------------------

    def parse_expr(self, ring: PolyRing) -> Polynomial:
        k, v, _, _ = self.peek()
        negate = False
        if v == "-":
            self.next()
            negate = True
        elif v == "+":
            self.next()
        p = self.parse_term(ring)
        if negate:
            p = -p
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            q = self.parse_term(ring)
            p = p + q if op == "+" else p - q
        return p

    def parse_term(self, ring: PolyRing) -> Polynomial:
        p = self.parse_power(ring)
        while self.peek()[1] == "*":
            self.next()
            p = p * self.parse_power(ring)
        return p

    def parse_power(self, ring: PolyRing) -> Polynomial:
        p = self.parse_atom(ring)
        if self.peek()[1] == "^":
            self.next()
            e = self.expect("int")
            p = p ** int(e[1])
        return p

    def parse_atom(self, ring: PolyRing) -> Polynomial:
        k, v, line, col = self.peek()
        if v == "(":
            self.next()
            p = self.parse_expr(ring)
            self.expect(value=")")
            return p
        if k == "int":
            self.next()
            num = int(v)
            if self.peek()[1] == "/":
                self.next()
                den = int(self.expect("int")[1])
                if den == 0:
                    raise IdealFileError("zero denominator", line, col)
                return ring.const(Fraction(num, den))
            return ring.const(num)
        if k == "name":
            self.next()
            if v not in ring.names:
                raise IdealFileError(f"unknown variable {v!r}", line, col)
            return ring.gen(ring.names.index(v))
        raise IdealFileError(f"expected a polynomial atom, found {v!r}", line, col)


def parse_ideal_file(text: str) -> ParsedFile:
    return _Parser(text).parse()


def format_ideal_file(ring: PolyRing, ideals: dict, tasks=()) -> str:
    """Serialize back to the file grammar (round-trips through the parser)."""
    fname = "Q" if ring.field.char == 0 else f"F{ring.field.char}"
    lines = [f"ring {fname}[{','.join(ring.names)}];"]
    for name, ideal in ideals.items():
        gens = ", ".join(str(g) for g in ideal.generators) if ideal.generators else "0"
        lines.append(f"ideal {name} = {gens};")
    for t in tasks:
        opts = " ".join(f"{k}={v}" for k, v in sorted(t.options.items()))
        lines.append(f"task check {t.ideal}{' ' + opts if opts else ''};")
    return "\n".join(lines) + "\n"
