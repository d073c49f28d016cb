"""Exact multivariate polynomials over Q or F_p with graded monomial orders.

Monomials are plain exponent tuples; coefficients are `fractions.Fraction`
over Q and ints in [0, p) over F_p.  Everything is immutable by convention:
operations return fresh values and never mutate their operands, so values
can be shared freely.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb


class CharacteristicGateError(ValueError):
    """A criterion that is only proved in characteristic zero was asked for mod p."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


class RationalField:
    """The field Q with arbitrary-precision Fraction arithmetic."""

    char = 0

    def coerce(self, v):
        return Fraction(v)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """F_p, elements stored as ints in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p

    zero = 0
    one = 1

    def coerce(self, v):
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {v} vanishes mod {self.p}")
            return (v.numerator * pow(v.denominator, -1, self.p)) % self.p
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        return (a * pow(b, -1, self.p)) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


# ---------------------------------------------------------------------------
# monomials: exponent tuples


def mon_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mon_div(a: tuple, b: tuple) -> tuple:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mon_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_deg(a: tuple) -> int:
    return sum(a)


def mon_coprime(a: tuple, b: tuple) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class DegRevLex:
    """Degree reverse lexicographic order; larger key means larger monomial."""

    name = "degrevlex"

    def key(self, e: tuple) -> tuple:
        return (sum(e), tuple(-x for x in reversed(e)))

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class Lex:
    name = "lex"

    def key(self, e: tuple) -> tuple:
        return (e,)

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class BlockOrder:
    """Product order: the first `nfront` exponents dominate (elimination order)."""

    def __init__(self, nfront: int, front=None, back=None):
        self.nfront = nfront
        self.front = front or DegRevLex()
        self.back = back or DegRevLex()
        self.name = f"block({nfront})"

    def key(self, e: tuple) -> tuple:
        return (self.front.key(e[: self.nfront]), self.back.key(e[self.nfront :]))

    def __eq__(self, other):
        return (
            isinstance(other, BlockOrder)
            and other.nfront == self.nfront
            and other.front == self.front
            and other.back == self.back
        )

    def __hash__(self):
        return hash((self.name, self.front, self.back))

    def __repr__(self):
        return self.name


ORDERS = {"degrevlex": DegRevLex, "lex": Lex}


class PolyRing:
    """S = k[X_1..X_d] with a fixed monomial order (degrevlex by default)."""

    def __init__(self, names, field=QQ, order=None):
        names = tuple(names)
        if not names:
            raise ValueError("need at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.names = names
        self.d = len(names)
        self.field = field
        self.order = order or DegRevLex()
        self._gens = None

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.names == self.names
            and other.field == self.field
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return f"{self.field}[{','.join(self.names)}]"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.d: self.field.one})

    def const(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {(0,) * self.d: c})

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.d
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> tuple:
        if self._gens is None:
            self._gens = tuple(self.gen(i) for i in range(self.d))
        return self._gens

    def monomial(self, exps, coeff=1) -> "Polynomial":
        exps = tuple(exps)
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {exps: c})

    def from_terms(self, terms: dict) -> "Polynomial":
        clean = {m: c for m, c in terms.items() if c != self.field.zero}
        return Polynomial(self, clean)

    def monomials_of_degree(self, q: int) -> list:
        """All degree-q exponent tuples, descending in the ring order."""
        if q < 0:
            return []
        out = []
        for c in itertools.combinations_with_replacement(range(self.d), q):
            e = [0] * self.d
            for i in c:
                e[i] += 1
            out.append(tuple(e))
        out.sort(key=self.order.key, reverse=True)
        return out

    def dim_degree(self, q: int) -> int:
        """dim_k S_q = C(q+d-1, d-1)."""
        if q < 0:
            return 0
        return comb(q + self.d - 1, self.d - 1)

    def with_aux_variable(self, name="t_"):
        """Extended ring k[t, X_1..X_d] with an order eliminating t."""
        if name in self.names:
            name = name + "_"
        return PolyRing((name,) + self.names, self.field, BlockOrder(1, front=Lex(), back=self.order))


class Polynomial:
    """Sparse polynomial: map from exponent tuple to nonzero coefficient."""

    __slots__ = ("ring", "terms", "_lt")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lt = None

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mon_deg(m) for m in self.terms)

    def homogeneous_degree(self):
        """The common degree of all terms, or None if inhomogeneous or zero."""
        degs = {mon_deg(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({mon_deg(m) for m in self.terms}) <= 1

    def lt(self):
        """Leading (monomial, coefficient) under the ring order."""
        if self._lt is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            m = max(self.terms, key=self.ring.order.key)
            self._lt = (m, self.terms[m])
        return self._lt

    def lm(self) -> tuple:
        return self.lt()[0]

    def lc(self):
        return self.lt()[1]

    def monic(self) -> "Polynomial":
        c = self.lc()
        if c == self.ring.field.one:
            return self
        inv = self.ring.field.inv(c)
        mul = self.ring.field.mul
        return Polynomial(self.ring, {m: mul(v, inv) for m, v in self.terms.items()})

    def coefficient(self, exps: tuple):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def constant_part(self):
        return self.terms.get((0,) * self.ring.d, self.ring.field.zero)

    def is_constant(self) -> bool:
        return self.degree() <= 0

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError(f"mixed rings: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._check(other)
        field = self.ring.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            v = field.add(res.get(m, field.zero), c)
            if v == field.zero:
                res.pop(m, None)
            else:
                res[m] = v
        return Polynomial(self.ring, res)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._check(other)
        field = self.ring.field
        zero = field.zero
        res: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = field.add(res.get(m, zero), field.mul(c1, c2))
                if v == zero:
                    res.pop(m, None)
                else:
                    res[m] = v
        return Polynomial(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        c = field.coerce(c)
        if c == field.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {m: field.mul(v, c) for m, v in self.terms.items()})

    def mul_monomial(self, exps: tuple, coeff=None) -> "Polynomial":
        field = self.ring.field
        c = field.one if coeff is None else coeff
        return Polynomial(
            self.ring,
            {tuple(x + y for x, y in zip(m, exps)): field.mul(v, c) for m, v in self.terms.items()},
        )

    def derivative(self, var_index: int) -> "Polynomial":
        """Formal partial derivative with respect to variable var_index."""
        if not 0 <= var_index < self.ring.d:
            raise IndexError(f"variable index {var_index} out of range")
        field = self.ring.field
        res: dict = {}
        for m, c in self.terms.items():
            e = m[var_index]
            if e == 0:
                continue
            v = field.mul(c, field.coerce(e))
            if v == field.zero:
                continue
            dm = list(m)
            dm[var_index] = e - 1
            res[tuple(dm)] = v
        return Polynomial(self.ring, res)

    # -- comparison / hashing / printing ---------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                return self == self.ring.const(other)
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                piece = str(c)
            elif c == self.ring.field.one:
                piece = mono
            elif self.ring.field.char == 0 and c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{c}*{mono}"
            parts.append(piece)
        out = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __repr__(self):
        return f"<{self} over {self.ring}>"


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    """Dispatch form of +, -, *; mixed-ring operands are rejected."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def partial_derivative(f: Polynomial, var_index: int) -> Polynomial:
    return f.derivative(var_index)
