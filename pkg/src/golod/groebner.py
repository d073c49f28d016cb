"""Buchberger Groebner bases for ideals and free-module submodules.

Module terms are (component, monomial) pairs ordered position-over-term
(higher component dominates) over the ring's monomial order.  Syzygies come
out of a representation-tracking Buchberger run: every S-pair of the final
basis that reduces to zero yields a relation among the original generators,
and together those relations generate the whole syzygy module.  Minimal
graded free resolutions take minimal generators of each successive kernel,
which for homogeneous input produces no unit entries by Nakayama.
"""

from __future__ import annotations

import heapq

from .poly import (
    Polynomial,
    PolyRing,
    mon_coprime,
    mon_deg,
    mon_div,
    mon_divides,
    mon_lcm,
)


class FreeVector:
    """Element of a free module S^rank, stored as {(component, monomial): coeff}."""

    __slots__ = ("ring", "rank", "terms", "_lt")

    def __init__(self, ring: PolyRing, rank: int, terms: dict):
        self.ring = ring
        self.rank = rank
        self.terms = terms
        self._lt = None

    @classmethod
    def from_polys(cls, polys) -> "FreeVector":
        polys = list(polys)
        ring = polys[0].ring
        terms = {}
        for c, p in enumerate(polys):
            for m, v in p.terms.items():
                terms[(c, m)] = v
        return cls(ring, len(polys), terms)

    @classmethod
    def from_poly(cls, p: Polynomial, rank: int = 1, component: int = 0) -> "FreeVector":
        return cls(p.ring, rank, {(component, m): v for m, v in p.terms.items()})

    @classmethod
    def unit(cls, ring, rank, component) -> "FreeVector":
        return cls(ring, rank, {(component, (0,) * ring.d): ring.field.one})

    def component(self, c: int) -> Polynomial:
        return Polynomial(self.ring, {m: v for (cc, m), v in self.terms.items() if cc == c})

    def components(self) -> tuple:
        return tuple(self.component(c) for c in range(self.rank))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lt(self, key):
        if self._lt is None:
            t = max(self.terms, key=key)
            self._lt = (t, self.terms[t])
        return self._lt

    def degree(self, shifts=None) -> int:
        if not self.terms:
            return -1
        if shifts is None:
            return max(mon_deg(m) for (_, m) in self.terms)
        return max(mon_deg(m) + shifts[c] for (c, m) in self.terms)

    def is_homogeneous(self, shifts=None) -> bool:
        if not self.terms:
            return True
        if shifts is None:
            shifts = (0,) * self.rank
        degs = {mon_deg(m) + shifts[c] for (c, m) in self.terms}
        return len(degs) == 1

    def monic(self, key) -> "FreeVector":
        _, c = self.lt(key)
        field = self.ring.field
        if c == field.one:
            return self
        inv = field.inv(c)
        return FreeVector(self.ring, self.rank, {t: field.mul(v, inv) for t, v in self.terms.items()})

    def scale(self, c) -> "FreeVector":
        field = self.ring.field
        if c == field.zero:
            return FreeVector(self.ring, self.rank, {})
        return FreeVector(self.ring, self.rank, {t: field.mul(v, c) for t, v in self.terms.items()})

    def neg(self) -> "FreeVector":
        neg = self.ring.field.neg
        return FreeVector(self.ring, self.rank, {t: neg(v) for t, v in self.terms.items()})

    def add(self, other: "FreeVector") -> "FreeVector":
        field = self.ring.field
        res = dict(self.terms)
        for t, v in other.terms.items():
            w = field.add(res.get(t, field.zero), v)
            if w == field.zero:
                res.pop(t, None)
            else:
                res[t] = w
        return FreeVector(self.ring, self.rank, res)

    def sub(self, other: "FreeVector") -> "FreeVector":
        return self.add(other.neg())

    def mul_monomial(self, mono: tuple, coeff=None) -> "FreeVector":
        field = self.ring.field
        c = field.one if coeff is None else coeff
        return FreeVector(
            self.ring,
            self.rank,
            {
                (comp, tuple(x + y for x, y in zip(m, mono))): field.mul(v, c)
                for (comp, m), v in self.terms.items()
            },
        )

    def mul_poly(self, p: Polynomial) -> "FreeVector":
        out = FreeVector(self.ring, self.rank, {})
        for m, c in p.terms.items():
            out = out.add(self.mul_monomial(m, c))
        return out

    def reduce_coefficients(self, gb: "ReducedGB") -> "FreeVector":
        """Normal form of every component against a rank-1 basis (reduction mod an ideal)."""
        terms = {}
        for c in range(self.rank):
            for m, v in gb.normal_form(self.component(c)).terms.items():
                terms[(c, m)] = v
        return FreeVector(self.ring, self.rank, terms)

    def __eq__(self, other):
        return (
            isinstance(other, FreeVector)
            and other.ring == self.ring
            and other.rank == self.rank
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, self.rank, frozenset(self.terms.items())))

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.components()) + ")"

    def __repr__(self):
        return f"<vec {self}>"


def _module_key(order):
    def key(term):
        comp, mono = term
        return (comp, order.key(mono))

    return key


def _as_vector(x, rank=1) -> FreeVector:
    if isinstance(x, FreeVector):
        return x
    if isinstance(x, Polynomial):
        return FreeVector.from_poly(x, rank=rank)
    raise TypeError(f"expected Polynomial or FreeVector, got {type(x)!r}")


class _Basis:
    """Mutable Buchberger state: monic elements indexed with per-component lead lists."""

    def __init__(self, ring: PolyRing, rank: int):
        self.ring = ring
        self.rank = rank
        self.key = _module_key(ring.order)
        self.elements: list[FreeVector] = []
        self.by_comp: dict[int, list] = {}  # lead component -> [(lead mono, index)]

    def add(self, vec: FreeVector):
        idx = len(self.elements)
        self.elements.append(vec)
        comp, mono = vec.lt(self.key)[0]
        self.by_comp.setdefault(comp, []).append((mono, idx))
        return idx

    def find_divisor(self, term):
        comp, mono = term
        for lead, idx in self.by_comp.get(comp, ()):
            if mon_divides(lead, mono):
                return idx
        return -1

    def divide(self, vec: FreeVector, track=False):
        """Multivariate division; returns (remainder, quotients or None).

        quotients maps basis index -> {monomial: coeff} with
        vec = sum quotients * basis + remainder.
        """
        field = self.ring.field
        key = self.key
        active = dict(vec.terms)
        remainder: dict = {}
        quotients: dict = {} if track else None
        while active:
            t = max(active, key=key)
            idx = self.find_divisor(t)
            if idx < 0:
                remainder[t] = active.pop(t)
                continue
            g = self.elements[idx]
            comp, mono = t
            gmono = g.lt(key)[0][1]
            q_mono = mon_div(mono, gmono)
            coeff = active[t]  # basis elements are monic
            for (gc, gm), gv in g.terms.items():
                tt = (gc, tuple(x + y for x, y in zip(gm, q_mono)))
                w = field.sub(active.get(tt, field.zero), field.mul(coeff, gv))
                if w == field.zero:
                    active.pop(tt, None)
                else:
                    active[tt] = w
            if track:
                qd = quotients.setdefault(idx, {})
                qd[q_mono] = field.add(qd.get(q_mono, field.zero), coeff)
        return FreeVector(self.ring, self.rank, remainder), quotients


def _pair_key(order, lcm_mono, i, j):
    return (mon_deg(lcm_mono), order.key(lcm_mono), i, j)


def _buchberger_core(state: _Basis, gens):
    """Plain completion loop with the product (rank 1) and chain criteria.

    Inserts gens into the state after pre-reduction and processes S-pairs
    until every one reduces to zero.  The state may already hold a Groebner
    basis, so this doubles as an incremental update.
    """
    ring = state.ring
    order = ring.order
    key = state.key
    pending: set = set()
    heap: list = []

    def push_pairs(new_idx):
        comp_new, mono_new = state.elements[new_idx].lt(key)[0]
        for mono_old, idx in state.by_comp.get(comp_new, ()):
            if idx == new_idx:
                continue
            lcm = mon_lcm(mono_old, mono_new)
            pending.add((idx, new_idx))
            heapq.heappush(heap, _pair_key(order, lcm, idx, new_idx) + (lcm,))

    def insert(vec: FreeVector):
        red, _ = state.divide(vec)
        if red.is_zero():
            return
        idx = state.add(red.monic(key))
        push_pairs(idx)

    for g in gens:
        insert(g)

    while heap:
        entry = heapq.heappop(heap)
        i, j, lcm = entry[2], entry[3], entry[4]
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        gi, gj = state.elements[i], state.elements[j]
        mi = gi.lt(key)[0][1]
        mj = gj.lt(key)[0][1]
        # product criterion is only sound for rank-1 inputs
        if state.rank == 1 and mon_coprime(mi, mj):
            continue
        skip = False
        for mono_k, k in state.by_comp.get(gi.lt(key)[0][0], ()):
            if k in (i, j):
                continue
            if mon_divides(mono_k, lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        ui = mon_div(lcm, mi)
        uj = mon_div(lcm, mj)
        insert(gi.mul_monomial(ui).sub(gj.mul_monomial(uj)))


class ReducedGB:
    """Auto-reduced monic Groebner basis; normal forms against it are unique."""

    def __init__(self, ring: PolyRing, rank: int, elements):
        self.ring = ring
        self.rank = rank
        self.key = _module_key(ring.order)
        self.elements = tuple(elements)
        self._state = _Basis(ring, rank)
        for e in self.elements:
            self._state.add(e)

    def normal_form(self, x, track=False):
        vec = _as_vector(x, rank=self.rank)
        red, q = self._state.divide(vec, track=track)
        out = red if isinstance(x, FreeVector) else red.component(0)
        return (out, q) if track else out

    def contains(self, x) -> bool:
        vec = _as_vector(x, rank=self.rank)
        red, _ = self._state.divide(vec)
        return red.is_zero()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _interreduce(state: _Basis) -> list:
    """Full auto-reduction: monic, no lead divides any term of another element."""
    ring = state.ring
    key = state.key
    elems = list(state.elements)
    changed = True
    while changed:
        changed = False
        elems.sort(key=lambda v: key(v.lt(key)[0]))
        for i in range(len(elems)):
            others = _Basis(ring, state.rank)
            for j, e in enumerate(elems):
                if j != i and e is not None:
                    others.add(e)
            red, _ = others.divide(elems[i])
            if red.is_zero():
                elems[i] = None
                changed = True
            elif red.terms != elems[i].terms:
                elems[i] = red.monic(key)
                changed = True
        elems = [e for e in elems if e is not None]
    elems.sort(key=lambda v: key(v.lt(key)[0]))
    return elems


def buchberger(gens, ring=None, rank=None) -> ReducedGB:
    """Reduced Groebner basis of the ideal/submodule generated by gens."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("cannot infer ring from empty generator list")
        ring = gens[0].ring
    vecs = []
    for g in gens:
        v = _as_vector(g, rank=rank or 1)
        if rank is None:
            rank = v.rank
        if v.rank != rank:
            raise ValueError(f"mixed ranks: {v.rank} vs {rank}")
        if v.ring != ring:
            raise ValueError("mixed rings in generator list")
        if not v.is_zero():
            vecs.append(v)
    rank = rank or 1
    state = _Basis(ring, rank)
    _buchberger_core(state, vecs)
    return ReducedGB(ring, rank, _interreduce(state))


def normal_form(x, gb: ReducedGB):
    return gb.normal_form(x)


class TrackedGB:
    """Groebner basis with representations of its elements in the input generators."""

    def __init__(self, ring, rank, basis, reps, syzygies, nsrc):
        self.ring = ring
        self.rank = rank
        self.basis = basis  # list[FreeVector], monic
        self.reps = reps  # reps[k]: FreeVector of rank nsrc with basis[k] = reps[k] . gens
        self.syzygies = syzygies  # FreeVectors of rank nsrc
        self.nsrc = nsrc
        self._state = _Basis(ring, rank)
        for b in basis:
            self._state.add(b)

    def lift(self, x) -> FreeVector | None:
        """Write x as a combination of the original generators; None if not a member."""
        vec = _as_vector(x, rank=self.rank)
        red, q = self._state.divide(vec, track=True)
        if not red.is_zero():
            return None
        out = FreeVector(self.ring, self.nsrc, {})
        for k, qd in (q or {}).items():
            for mono, c in qd.items():
                out = out.add(self.reps[k].mul_monomial(mono, c))
        return out


def buchberger_tracked(gens, ring=None, rank=None) -> TrackedGB:
    """Buchberger with representation tracking and Schreyer-complete syzygies.

    All S-pairs of the final basis are processed (criteria shortcuts are not
    syzygy-complete), so `syzygies` generates the full syzygy module of gens.
    """
    gens = list(gens)
    if ring is None:
        ring = gens[0].ring
    vecs = [_as_vector(g, rank=rank or (g.rank if isinstance(g, FreeVector) else 1)) for g in gens]
    if vecs:
        rank = vecs[0].rank
        for v in vecs:
            if v.rank != rank or v.ring != ring:
                raise ValueError("mixed ranks or rings in generator list")
    rank = rank or 1
    state = _Basis(ring, rank)
    nsrc = len(vecs)
    # zero generators contribute unit syzygies immediately
    live = []
    pre_syz = []
    for i, v in enumerate(vecs):
        if v.is_zero():
            pre_syz.append(FreeVector.unit(ring, nsrc, i))
        else:
            live.append((i, v))
    reps, syz = _run_tracked(state, live, nsrc)
    return TrackedGB(ring, rank, list(state.elements), reps, pre_syz + syz, nsrc)


def _run_tracked(state: _Basis, indexed_gens, nsrc):
    ring = state.ring
    units = [FreeVector.unit(ring, nsrc, i) for i, _ in indexed_gens]
    gens = [v for _, v in indexed_gens]
    # temporarily thread the correct unit reps through the core
    reps: list = []
    syzygies: list = []
    order = ring.order
    key = state.key
    field = ring.field
    pending: set = set()
    heap: list = []

    def push_pairs(new_idx):
        comp_new, mono_new = state.elements[new_idx].lt(key)[0]
        for mono_old, idx in state.by_comp.get(comp_new, ()):
            if idx == new_idx:
                continue
            lcm = mon_lcm(mono_old, mono_new)
            pending.add((idx, new_idx))
            heapq.heappush(heap, _pair_key(order, lcm, idx, new_idx) + (lcm,))

    def insert(vec, rep):
        red, q = state.divide(vec, track=True)
        for k, qd in (q or {}).items():
            for mono, c in qd.items():
                rep = rep.sub(reps[k].mul_monomial(mono, c))
        if red.is_zero():
            if not rep.is_zero():
                syzygies.append(rep)
            return
        lc = red.lt(key)[1]
        reps.append(rep.scale(field.inv(lc)))
        idx = state.add(red.monic(key))
        push_pairs(idx)

    for unit, g in zip(units, gens):
        insert(g, unit)

    while heap:
        entry = heapq.heappop(heap)
        i, j, lcm = entry[2], entry[3], entry[4]
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        gi, gj = state.elements[i], state.elements[j]
        ui = mon_div(lcm, gi.lt(key)[0][1])
        uj = mon_div(lcm, gj.lt(key)[0][1])
        spoly = gi.mul_monomial(ui).sub(gj.mul_monomial(uj))
        rep = reps[i].mul_monomial(ui).sub(reps[j].mul_monomial(uj))
        insert(spoly, rep)

    return reps, syzygies


def syzygy_module(columns, ring=None, minimal=True) -> list:
    """Generators of the kernel of the map S^n -> S^rank given by the columns."""
    columns = list(columns)
    if not columns:
        return []
    tgb = buchberger_tracked(columns, ring=ring)
    syz = [s for s in tgb.syzygies if not s.is_zero()]
    key = _module_key(tgb.ring.order)
    syz = [s.monic(key) for s in syz]
    if minimal:
        syz = minimalize_gens(syz, ring=tgb.ring, rank=tgb.nsrc)
    syz.sort(key=lambda v: (v.degree(), key(v.lt(key)[0])))
    return syz


def minimalize_gens(gens, ring=None, rank=None, shifts=None) -> list:
    """Minimal generating subset of a graded module, greedily by degree.

    Each candidate is dropped iff it already lies in the module generated by
    the kept ones; for homogeneous input processed in degree order this gives
    a minimal generating set (Nakayama).
    """
    gens = [g for g in gens if not _as_vector(g).is_zero()]
    if not gens:
        return []
    vecs = [_as_vector(g, rank=rank or 1) for g in gens]
    ring = ring or vecs[0].ring
    rank = vecs[0].rank
    key = _module_key(ring.order)
    order = sorted(
        range(len(vecs)),
        key=lambda i: (vecs[i].degree(shifts), key(vecs[i].lt(key)[0]), i),
    )
    state = _Basis(ring, rank)
    kept: list = []
    for i in order:
        red, _ = state.divide(vecs[i])
        if red.is_zero():
            continue
        kept.append(vecs[i])
        # complete the membership basis with the new element
        _buchberger_core(state, [vecs[i]])
    polys_in = not isinstance(gens[0], FreeVector)
    if polys_in:
        return [v.component(0).monic() for v in kept]
    return [v.monic(key) for v in kept]


def module_equal(gens_a, gens_b, ring=None, rank=None) -> bool:
    """Do two generating sets span the same submodule?"""
    gens_a = [_as_vector(g, rank=rank or 1) for g in gens_a]
    gens_b = [_as_vector(g, rank=rank or 1) for g in gens_b]
    if not gens_a and not gens_b:
        return True
    ring = ring or (gens_a + gens_b)[0].ring
    rank = rank or (gens_a + gens_b)[0].rank
    if not gens_a:
        return all(g.is_zero() for g in gens_b)
    if not gens_b:
        return all(g.is_zero() for g in gens_a)
    gb_a = buchberger(gens_a, ring=ring, rank=rank)
    gb_b = buchberger(gens_b, ring=ring, rank=rank)
    return all(gb_a.contains(g) for g in gens_b) and all(gb_b.contains(g) for g in gens_a)


class BettiTable:
    """Graded Betti numbers beta_{i,j} with totals."""

    def __init__(self, entries: dict):
        self.entries = dict(entries)

    @classmethod
    def from_shifts(cls, shifts_per_level) -> "BettiTable":
        entries: dict = {}
        for i, shifts in enumerate(shifts_per_level):
            for j in shifts:
                entries[(i, j)] = entries.get((i, j), 0) + 1
        return cls(entries)

    def total(self, i: int) -> int:
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def totals(self) -> list:
        if not self.entries:
            return [0]
        top = max(i for (i, _) in self.entries)
        return [self.total(i) for i in range(top + 1)]

    def graded(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def max_internal_degree(self) -> int:
        return max((j for (_, j) in self.entries), default=0)

    def internal_degrees(self, i: int) -> list:
        return sorted(j for (ii, j) in self.entries if ii == i and self.entries[(ii, j)])

    def __eq__(self, other):
        return isinstance(other, BettiTable) and other.entries == self.entries

    def __repr__(self):
        return f"BettiTable({self.entries})"


class Resolution:
    """Minimal graded free resolution: shifts per level and differential columns."""

    def __init__(self, ring, shifts, matrices, betti, minimal=True):
        self.ring = ring
        self.shifts = shifts  # shifts[i]: internal degrees of the basis of F_i
        self.matrices = matrices  # matrices[i]: columns of phi_{i+1}: F_{i+1} -> F_i
        self.betti = betti
        self.minimal = minimal

    def length(self) -> int:
        return len(self.shifts) - 1

    def differential(self, i: int) -> list:
        """Columns of phi_i: F_i -> F_{i-1} (1-based homological index)."""
        return self.matrices[i - 1]

    def rank(self, i: int) -> int:
        return len(self.shifts[i]) if i < len(self.shifts) else 0

    def verify(self):
        """Assert phi_i . phi_{i+1} = 0 and minimality (no unit entries)."""
        for i in range(1, self.length()):
            cols_next = self.matrices[i]
            prev = self.matrices[i - 1]
            for col in cols_next:
                acc = FreeVector(self.ring, len(self.shifts[i - 1]), {})
                for (comp, mono), c in col.terms.items():
                    acc = acc.add(prev[comp].mul_monomial(mono, c))
                if not acc.is_zero():
                    raise AssertionError(f"resolution differentials do not compose to zero at step {i}")
        for i, cols in enumerate(self.matrices):
            tgt = self.shifts[i]
            src = self.shifts[i + 1]
            for c_idx, col in enumerate(cols):
                for (comp, mono), coeff in col.terms.items():
                    if mon_deg(mono) == 0 and src[c_idx] == tgt[comp]:
                        raise AssertionError("unit entry in a supposedly minimal resolution")
        return True


class Submodule:
    """Finitely generated graded submodule of S^rank with cached membership basis."""

    def __init__(self, ring, rank: int, gens, shifts=None):
        self.ring = ring
        self.rank = rank
        self.gens = tuple(gens)
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        self._gb = None

    @property
    def gb(self) -> ReducedGB:
        if self._gb is None:
            if self.gens:
                self._gb = buchberger(self.gens, ring=self.ring, rank=self.rank)
            else:
                self._gb = ReducedGB(self.ring, self.rank, [])
        return self._gb

    def contains(self, vec) -> bool:
        if _as_vector(vec, rank=self.rank).is_zero():
            return True
        if not self.gens:
            return False
        return self.gb.contains(vec)

    def contains_module(self, other: "Submodule") -> bool:
        return all(self.contains(g) for g in other.gens)

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.gens)

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and other.ring == self.ring
            and other.rank == self.rank
            and module_equal(self.gens, other.gens, ring=self.ring, rank=self.rank)
            if other.gens or self.gens
            else self.rank == other.rank
        )

    def __repr__(self):
        return f"Submodule(rank={self.rank}, gens={len(self.gens)})"


def intersect_modules(a: Submodule, b: Submodule) -> Submodule:
    """Generators of a cap b via syzygies of the combined generator list."""
    if a.rank != b.rank or a.ring != b.ring:
        raise ValueError("modules live in different free modules")
    if not a.gens or not b.gens:
        return Submodule(a.ring, a.rank, [], a.shifts)
    combined = list(a.gens) + list(b.gens)
    out = []
    for syz in syzygy_module(combined, ring=a.ring, minimal=False):
        w = FreeVector(a.ring, a.rank, {})
        for (comp, mono), c in syz.terms.items():
            if comp < len(a.gens):
                w = w.add(a.gens[comp].mul_monomial(mono, c))
        if not w.is_zero():
            out.append(w)
    out = minimalize_gens(out, ring=a.ring, rank=a.rank)
    return Submodule(a.ring, a.rank, out, a.shifts)


def minimal_free_resolution(gens, ring, max_hom_degree: int) -> Resolution:
    """Minimal graded free resolution of S/(gens) up to homological degree max_hom_degree.

    gens must be homogeneous polynomials generating a proper ideal.
    """
    for g in gens:
        if g and not g.is_homogeneous():
            raise ValueError(f"inhomogeneous generator: {g}")
    mingens = minimalize_gens([g for g in gens if g], ring=ring, rank=1)
    shifts = [[0]]
    matrices = []
    if mingens:
        cols = [FreeVector.from_poly(g) for g in mingens]
        shifts.append([g.degree() for g in mingens])
        matrices.append(cols)
        level = 1
        while level < max_hom_degree:
            syz = syzygy_module(matrices[-1], ring=ring, minimal=True)
            if not syz:
                break
            prev_shifts = shifts[-1]
            shifts.append([v.degree(prev_shifts) for v in syz])
            matrices.append(syz)
            level += 1
    betti = BettiTable.from_shifts(shifts)
    return Resolution(ring, shifts, matrices, betti)
