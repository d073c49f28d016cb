"""Homogeneous ideals and their algebra: sum, product, power, intersection,
colon quotient, containment, and the derivative ideal."""

from __future__ import annotations

from .groebner import (
    FreeVector,
    ReducedGB,
    buchberger,
    minimal_free_resolution,
    minimalize_gens,
)
from .linalg import Echelon
from .poly import CharacteristicGateError, Polynomial, PolyRing, mon_deg


class Ideal:
    """Homogeneous ideal given by generators, with a cached reduced Groebner basis.

    The zero ideal has an empty generator list; the unit ideal is (1).
    Generators are kept monic, deduplicated and sorted so that equal ideals
    built from the same generators print identically.
    """

    def __init__(self, ring: PolyRing, gens):
        self.ring = ring
        clean = []
        for g in gens:
            if not isinstance(g, Polynomial):
                g = ring.const(g)
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator: {g}")
            clean.append(g.monic())
        if any(g.is_constant() for g in clean):
            clean = [ring.one()]
        clean = list(dict.fromkeys(clean))
        clean.sort(key=lambda g: (g.degree(), ring.order.key(g.lm())))
        self.generators = tuple(clean)
        self._gb = None
        self._min_gens = None
        self._power_cache: dict = {}
        self._resolution = None
        self._std_cache: dict = {}

    # -- basic structure --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return bool(self.generators) and self.generators[0].is_constant()

    def is_proper(self) -> bool:
        return not self.is_unit()

    @property
    def gb(self) -> ReducedGB:
        if self._gb is None:
            if self.is_zero():
                self._gb = ReducedGB(self.ring, 1, [])
            else:
                self._gb = buchberger(list(self.generators), ring=self.ring)
        return self._gb

    def min_gens(self) -> tuple:
        """A minimal homogeneous generating set (unique cardinality by Nakayama)."""
        if self._min_gens is None:
            self._min_gens = tuple(minimalize_gens(list(self.generators), ring=self.ring, rank=1))
        return self._min_gens

    def contains_poly(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        return self.gb.contains(f)

    def contains(self, other: "Ideal") -> bool:
        if isinstance(other, Polynomial):
            return self.contains_poly(other)
        return all(self.contains_poly(g) for g in other.generators)

    def __le__(self, other: "Ideal") -> bool:
        return other.contains(self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.contains(other) and other.contains(self)

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __repr__(self):
        if self.is_zero():
            return "Ideal(0)"
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"

    def min_generator_degree(self):
        if self.is_zero():
            return None
        return min(g.degree() for g in self.generators)

    def max_generator_degree(self):
        if self.is_zero():
            return None
        return max(g.degree() for g in self.min_gens())

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Ideal"):
        if self.ring != other.ring:
            raise ValueError("ideals over different rings")

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, list(self.generators) + list(other.generators))

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, [])
        prods = [f * g for f in self.generators for g in other.generators]
        return Ideal(self.ring, minimalize_gens(prods, ring=self.ring, rank=1))

    def __pow__(self, m: int) -> "Ideal":
        if m < 0:
            raise ValueError("negative ideal power")
        if m == 0:
            return Ideal(self.ring, [self.ring.one()])
        if m not in self._power_cache:
            if m == 1:
                self._power_cache[m] = self
            else:
                self._power_cache[m] = self ** (m - 1) * self
        return self._power_cache[m]

    def intersection(self, other: "Ideal") -> "Ideal":
        """a cap b by eliminating an auxiliary variable t from t*a + (1-t)*b."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, [])
        if self.is_unit():
            return other
        if other.is_unit():
            return self
        ext = self.ring.with_aux_variable()
        t = ext.gen(0)

        def embed(p: Polynomial) -> Polynomial:
            return Polynomial(ext, {(0,) + m: c for m, c in p.terms.items()})

        gens = [t * embed(g) for g in self.generators]
        gens += [(ext.one() - t) * embed(g) for g in other.generators]
        gb = buchberger(gens, ring=ext)
        out = []
        for e in gb:
            p = e.component(0)
            if all(m[0] == 0 for m in p.terms):
                out.append(Polynomial(self.ring, {m[1:]: c for m, c in p.terms.items()}))
        return Ideal(self.ring, minimalize_gens(out, ring=self.ring, rank=1))

    def quotient(self, f: Polynomial) -> "Ideal":
        """(a : f) = {g : g*f in a}, computed by intersecting with (f) and dividing."""
        if f.is_zero():
            raise ValueError("colon by the zero polynomial")
        if not f.is_homogeneous():
            raise ValueError("colon by an inhomogeneous polynomial")
        if f.is_constant():
            return self
        inter = self.intersection(Ideal(self.ring, [f]))
        return Ideal(self.ring, [exact_div(g, f) for g in inter.generators])

    def derivative_ideal(self) -> "Ideal":
        """The ideal of all partial derivatives of elements (plus the generators).

        Characteristic zero only: the criteria that consume this are proved
        over Q, and Euler's identity makes the generators redundant there.
        """
        if self.ring.field.char != 0:
            raise CharacteristicGateError(
                "derivative-ideal criteria are only available over Q (characteristic zero)"
            )
        gens = []
        for g in self.generators:
            for i in range(self.ring.d):
                dg = g.derivative(i)
                if not dg.is_zero():
                    gens.append(dg)
            gens.append(g)
        return Ideal(self.ring, minimalize_gens(gens, ring=self.ring, rank=1))

    # -- graded pieces ------------------------------------------------------

    def graded_component_basis(self, degree: int) -> list:
        """Deterministic k-basis of the degree-q piece of the ideal."""
        if degree < 0:
            raise ValueError("negative degree")
        monos = self.ring.monomials_of_degree(degree)
        index = {m: i for i, m in enumerate(monos)}
        ech = Echelon(self.ring.field)
        basis = []
        for g in self.generators:
            gdeg = g.degree()
            if gdeg > degree:
                continue
            for m in self.ring.monomials_of_degree(degree - gdeg):
                vec = {index[mm]: c for mm, c in g.mul_monomial(m).terms.items()}
                piv, _ = ech.insert(vec)
                if piv is not None:
                    basis.append((piv, None))
        out = []
        for piv in sorted(ech.pivots):
            row = ech.pivots[piv]
            out.append(Polynomial(self.ring, {monos[i]: c for i, c in row.items()}))
        return out

    def dim_graded_component(self, degree: int) -> int:
        return len(self.graded_component_basis(degree))

    def component_ideal(self, degree: int) -> "Ideal":
        """Ideal generated by the whole degree-q graded piece."""
        return Ideal(self.ring, self.graded_component_basis(degree))

    def standard_monomials(self, degree: int) -> list:
        """Monomials of the given degree that survive in S/a, descending order."""
        if degree not in self._std_cache:
            if self.is_zero():
                std = self.ring.monomials_of_degree(degree)
            else:
                leads = [e.component(0).lm() for e in self.gb]
                std = [
                    m
                    for m in self.ring.monomials_of_degree(degree)
                    if not any(all(x <= y for x, y in zip(l, m)) for l in leads)
                ]
            self._std_cache[degree] = std
        return self._std_cache[degree]

    def quotient_dim(self, degree: int) -> int:
        """dim_k (S/a)_q, counted on standard monomials."""
        return len(self.standard_monomials(degree))

    def resolution(self, max_hom_degree=None):
        """Minimal graded free resolution of S/a (cached at the largest depth seen)."""
        if self.is_unit():
            raise ValueError("unit ideal has no minimal resolution of S/a")
        depth = self.ring.d if max_hom_degree is None else max_hom_degree
        if self._resolution is None or self._resolution.length() < min(depth, self.ring.d):
            self._resolution = minimal_free_resolution(list(self.generators), self.ring, depth)
        return self._resolution


def exact_div(g: Polynomial, f: Polynomial) -> Polynomial:
    """g / f when f divides g exactly."""
    from .groebner import _Basis

    state = _Basis(f.ring, 1)
    state.add(FreeVector.from_poly(f.monic()))
    rem, q = state.divide(FreeVector.from_poly(g), track=True)
    if not rem.is_zero():
        raise ValueError(f"{f} does not divide {g}")
    field = f.ring.field
    inv = field.inv(f.lc())
    terms = {}
    for mono, c in q.get(0, {}).items():
        terms[mono] = field.mul(c, inv)
    return Polynomial(f.ring, terms)


def graded_component_basis(target, degree: int):
    """Deterministic k-basis of the degree-q piece of an Ideal or Submodule.

    Ideals give polynomials; submodules give FreeVectors (with the module's
    degree shifts accounted for).
    """
    from .groebner import Submodule

    if isinstance(target, Ideal):
        return target.graded_component_basis(degree)
    if not isinstance(target, Submodule):
        raise TypeError(f"expected Ideal or Submodule, got {type(target)!r}")
    if degree < 0:
        raise ValueError("negative degree")
    for g in target.gens:
        if not g.is_homogeneous(target.shifts):
            raise ValueError("inhomogeneous submodule generator")
    ring = target.ring
    ech = Echelon(ring.field)
    for g in target.gens:
        gdeg = g.degree(target.shifts)
        if gdeg > degree or g.is_zero():
            continue
        for m in ring.monomials_of_degree(degree - gdeg):
            ech.insert(dict(g.mul_monomial(m).terms))
    out = []
    for piv in sorted(ech.pivots):
        row = ech.pivots[piv]
        out.append(FreeVector(ring, target.rank, dict(row)))
    return out


def ideal_combine(a: Ideal, b: Ideal, op: str) -> Ideal:
    if op == "sum":
        return a + b
    if op == "product":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def ideal_power(a: Ideal, m: int) -> Ideal:
    return a**m


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    return a.intersection(b)


def ideal_quotient(a: Ideal, f: Polynomial) -> Ideal:
    return a.quotient(f)


def ideal_contains(a: Ideal, b: Ideal) -> bool:
    return a.contains(b)


def derivative_ideal(c: Ideal) -> Ideal:
    return c.derivative_ideal()


def maximal_ideal(ring: PolyRing) -> Ideal:
    """n = (X_1, ..., X_d)."""
    return Ideal(ring, list(ring.gens()))


def hilbert_numerator(betti) -> dict:
    """K-polynomial coefficients sum_i (-1)^i beta_{i,j} per degree j."""
    out: dict = {}
    for (i, j), v in betti.entries.items():
        out[j] = out.get(j, 0) + (-1) ** i * v
    return {j: c for j, c in sorted(out.items()) if c}


def hilbert_dim_from_numerator(numer: dict, d: int, q: int) -> int:
    """Coefficient of t^q in (sum numer_j t^j) / (1-t)^d."""
    from math import comb

    total = 0
    for j, c in numer.items():
        if q - j >= 0:
            total += c * comb(q - j + d - 1, d - 1)
    return total
