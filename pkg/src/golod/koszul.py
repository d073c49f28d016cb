"""Koszul complexes over S and over R = S/a: cycles, Tor by two independent
routes, induced maps on Tor, homology-algebra products, and Jacobian cycle
representatives.

Sign convention throughout: d(e_{i1}^...^e_{ij}) = sum_l (-1)^(l+1) X_{il} *
e_{i1}^...(drop l)...^e_{ij}.  Internal degree of e_J is |J|.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .groebner import (
    BettiTable,
    FreeVector,
    Submodule,
    buchberger_tracked,
    intersect_modules,
    minimalize_gens,
    syzygy_module,
)
from .ideals import Ideal, maximal_ideal
from .linalg import Echelon, kernel_basis
from .poly import CharacteristicGateError, Polynomial, PolyRing, mon_deg


def wedge_basis(d: int, i: int) -> list:
    """Index sets of the canonical basis of K_i, lexicographically ordered."""
    return list(itertools.combinations(range(d), i))


def wedge_sign(J1: tuple, J2: tuple):
    """Sign of e_J1 ^ e_J2 relative to the sorted union; None when they overlap."""
    if set(J1) & set(J2):
        return None
    merged = list(J1) + list(J2)
    inversions = 0
    for a in range(len(merged)):
        for b in range(a + 1, len(merged)):
            if merged[a] > merged[b]:
                inversions += 1
    return -1 if inversions % 2 else 1


class KoszulComplex:
    """Koszul complex of S on the variables, optionally tensored with S/a."""

    def __init__(self, ring: PolyRing, modulo: Ideal | None = None):
        if modulo is not None:
            if modulo.is_unit():
                raise ValueError("Koszul complex modulo the unit ideal is zero")
            if modulo.ring != ring:
                raise ValueError("modulo ideal from a different ring")
        self.ring = ring
        self.modulo = modulo
        self.d = ring.d
        self._diff: dict = {}

    def basis(self, i: int) -> list:
        return wedge_basis(self.d, i)

    def rank(self, i: int) -> int:
        if i < 0 or i > self.d:
            return 0
        return len(self.basis(i))

    def differential(self, i: int) -> list:
        """Columns of d_i: K_i -> K_{i-1}, as vectors over S (reduced mod a if present)."""
        if not 1 <= i <= self.d:
            raise ValueError(f"differential index {i} out of range")
        if i not in self._diff:
            target = self.basis(i - 1)
            tindex = {J: r for r, J in enumerate(target)}
            cols = []
            for J in self.basis(i):
                terms = {}
                for l, var in enumerate(J):
                    rest = J[:l] + J[l + 1 :]
                    e = [0] * self.d
                    e[var] = 1
                    sign = 1 if l % 2 == 0 else -1
                    coeff = self.ring.field.coerce(sign)
                    terms[(tindex[rest], tuple(e))] = coeff
                v = FreeVector(self.ring, len(target), terms)
                if self.modulo is not None:
                    v = v.reduce_coefficients(self.modulo.gb)
                cols.append(v)
            self._diff[i] = cols
        return self._diff[i]

    def apply_differential(self, i: int, vec: FreeVector) -> FreeVector:
        cols = self.differential(i)
        out = FreeVector(self.ring, self.rank(i - 1), {})
        for (comp, mono), c in vec.terms.items():
            out = out.add(cols[comp].mul_monomial(mono, c))
        if self.modulo is not None:
            out = out.reduce_coefficients(self.modulo.gb)
        return out


def koszul_complex(ring: PolyRing, modulo: Ideal | None = None) -> KoszulComplex:
    return KoszulComplex(ring, modulo)


_cycle_cache: dict = {}


def koszul_cycles(kc: KoszulComplex, i: int) -> Submodule:
    """Generators of the cycle module Z_i, as a submodule of K_i over S.

    Over S this is the kernel of d_i; over R = S/a the lifted cycles
    {z : d(z) in a*K_{i-1}} are returned (their classes generate Z_i(K^R)).
    """
    if not 1 <= i <= kc.d:
        raise ValueError(f"cycle index {i} out of range")
    cache_key = (kc.ring, None if kc.modulo is None else kc.modulo.generators, i)
    if cache_key in _cycle_cache:
        return _cycle_cache[cache_key]
    rank = kc.rank(i)
    shifts = (i,) * rank
    cols = list(KoszulComplex(kc.ring, None).differential(i))
    ncols = len(cols)
    if kc.modulo is not None:
        tgt_rank = kc.rank(i - 1)
        for g in kc.modulo.generators:
            for comp in range(tgt_rank):
                cols.append(FreeVector.from_poly(g, rank=tgt_rank, component=comp))
    syz = syzygy_module(cols, ring=kc.ring, minimal=False)
    gens = []
    for s in syz:
        terms = {(c, m): v for (c, m), v in s.terms.items() if c < ncols}
        v = FreeVector(kc.ring, rank, terms)
        if kc.modulo is not None:
            v = v.reduce_coefficients(kc.modulo.gb)
        if not v.is_zero():
            gens.append(v)
    gens = minimalize_gens(gens, ring=kc.ring, rank=rank)
    sub = Submodule(kc.ring, rank, gens, shifts)
    _cycle_cache[cache_key] = sub
    return sub


def ideal_times_koszul(a: Ideal, i: int) -> Submodule:
    """The submodule a*K_i of K_i."""
    rank = len(wedge_basis(a.ring.d, i))
    gens = [
        FreeVector.from_poly(g, rank=rank, component=c)
        for c in range(rank)
        for g in a.generators
    ]
    return Submodule(a.ring, rank, gens, (i,) * rank)


def module_times_ideal(a: Ideal, sub: Submodule) -> Submodule:
    gens = [z.mul_poly(g) for g in a.generators for z in sub.gens]
    gens = [g for g in gens if not g.is_zero()]
    return Submodule(sub.ring, sub.rank, gens, sub.shifts)


# ---------------------------------------------------------------------------
# graded pieces of K over R, as exact linear algebra in standard coordinates


class _GradedKoszul:
    """Per-internal-degree linear algebra on K^R for R = S/a."""

    def __init__(self, a: Ideal):
        self.a = a
        self.ring = a.ring
        self.d = a.ring.d
        self._labels: dict = {}
        self._nf_cache: dict = {}

    def labels(self, i: int, q: int) -> list:
        """Coordinate labels (J, standard monomial) of (K^R_i)_q."""
        key = (i, q)
        if key not in self._labels:
            if i < 0 or i > self.d or q < i:
                self._labels[key] = []
            else:
                std = self.a.standard_monomials(q - i)
                self._labels[key] = [(J, m) for J in wedge_basis(self.d, i) for m in std]
        return self._labels[key]

    def nf_coords(self, mono: tuple) -> dict:
        """Standard-monomial coordinates of NF(mono) mod a."""
        if mono not in self._nf_cache:
            p = self.a.gb.normal_form(self.ring.monomial(mono))
            self._nf_cache[mono] = dict(p.terms)
        return self._nf_cache[mono]

    def diff_column(self, i: int, J: tuple, m: tuple) -> dict:
        """d(m*e_J) in the coordinates of (K^R_{i-1})_q."""
        out: dict = {}
        field = self.ring.field
        for l, var in enumerate(J):
            rest = J[:l] + J[l + 1 :]
            sign = field.coerce(1 if l % 2 == 0 else -1)
            e = list(m)
            e[var] += 1
            for mm, c in self.nf_coords(tuple(e)).items():
                lab = (rest, mm)
                v = field.add(out.get(lab, field.zero), field.mul(sign, c))
                if v == field.zero:
                    out.pop(lab, None)
                else:
                    out[lab] = v
        return out

    def cycle_vectors(self, i: int, q: int) -> list:
        """Basis of the degree-q cycles of K^R_i, as coordinate dicts."""
        labels = self.labels(i, q)
        if not labels:
            return []
        if i == 0:
            return [{lab: self.ring.field.one} for lab in labels]
        columns = [self.diff_column(i, J, m) for (J, m) in labels]
        combos = kernel_basis(self.ring.field, columns)
        out = []
        for combo in combos:
            out.append({labels[idx]: c for idx, c in combo.items()})
        return out

    def boundary_vectors(self, i: int, q: int) -> list:
        """Spanning vectors of the degree-q boundaries inside K^R_i."""
        if i >= self.d:
            return []
        return [self.diff_column(i + 1, J, m) for (J, m) in self.labels(i + 1, q)]

    def homology(self, i: int, q: int):
        """(dimension, representative coordinate vectors) of H_i(K^R)_q."""
        bound = Echelon(self.ring.field)
        for b in self.boundary_vectors(i, q):
            bound.insert(b)
        reps = []
        for z in self.cycle_vectors(i, q):
            piv, _ = bound.insert(z)
            if piv is not None:
                reps.append(z)
        return len(reps), reps

    def to_vector(self, i: int, coords: dict) -> FreeVector:
        index = {J: r for r, J in enumerate(wedge_basis(self.d, i))}
        return FreeVector(self.ring, len(index), {(index[J], m): c for (J, m), c in coords.items()})

    def vector_coords(self, i: int, vec: FreeVector) -> dict:
        """Coordinates of a vector with standard coefficients (reduce first if unsure)."""
        basis = wedge_basis(self.d, i)
        out = {}
        for (comp, m), c in vec.terms.items():
            out[(basis[comp], m)] = c
        return out


@dataclass
class HomologyClassSet:
    """k-basis data of H_i(K^R): representatives are lifted cycles over S."""

    hom_degree: int
    representatives: list
    internal_degrees: list
    dimension: int


def homology_classes(a: Ideal, i: int, degrees) -> HomologyClassSet:
    gk = _GradedKoszul(a)
    reps = []
    qs = []
    for q in degrees:
        _, vecs = gk.homology(i, q)
        for v in vecs:
            reps.append(gk.to_vector(i, v))
            qs.append(q)
    return HomologyClassSet(i, reps, qs, len(reps))


# ---------------------------------------------------------------------------
# Tor dimensions by two routes


def tor_dimensions(a: Ideal, path: str = "resolution_lift") -> BettiTable:
    """dim_k Tor_i^S(S/a, k) for 0 <= i <= d, graded.

    resolution_lift reads the minimal graded resolution; koszul_cycles
    computes H_{i-1}(aK) as a graded subquotient, scanning internal degrees
    one past the resolution's support so disagreements would be caught.
    """
    if a.is_unit():
        raise ValueError("unit ideal rejected")
    if path == "resolution_lift":
        return a.resolution(a.ring.d).betti
    if path != "koszul_cycles":
        raise ValueError(f"unknown path {path!r}")
    d = a.ring.d
    entries = {(0, 0): 1}
    if a.is_zero():
        return BettiTable(entries)
    maxdeg = a.resolution(d).betti.max_internal_degree() + 1
    na = maximal_ideal(a.ring) * a
    for q in range(0, maxdeg + 1):
        v = a.dim_graded_component(q) - na.dim_graded_component(q)
        if v:
            entries[(1, q)] = v
    kc = KoszulComplex(a.ring)
    for i in range(2, d + 1):
        zi = koszul_cycles(kc, i - 1)
        for q in range(i, maxdeg + 1):
            v = _subquotient_dim(a, zi, i - 1, q)
            if v:
                entries[(i, q)] = v
    return BettiTable(entries)


def _span_vectors(gens, degree, shifts):
    """Degree-q multiples of module generators, as coordinate dicts."""
    out = []
    for g in gens:
        gdeg = g.degree(shifts)
        if gdeg > degree:
            continue
        ring = g.ring
        for m in ring.monomials_of_degree(degree - gdeg):
            out.append(dict(g.mul_monomial(m).terms))
    return out


def _subquotient_dim(a: Ideal, zi: Submodule, i: int, q: int) -> int:
    """dim of ((Z_i cap a*K_i) / a*Z_i) in internal degree q."""
    ring = a.ring
    field = ring.field
    shifts = (i,) * zi.rank
    z_span = _span_vectors(zi.gens, q, shifts)
    ak = ideal_times_koszul(a, i)
    ak_span = _span_vectors(ak.gens, q, shifts)
    az = module_times_ideal(a, zi)
    az_span = _span_vectors(az.gens, q, shifts)
    rz = Echelon(field)
    for v in z_span:
        rz.insert(v)
    rak = Echelon(field)
    for v in ak_span:
        rak.insert(v)
    rboth = Echelon(field)
    for v in z_span + ak_span:
        rboth.insert(v)
    raz = Echelon(field)
    for v in az_span:
        raz.insert(v)
    inter = rz.rank + rak.rank - rboth.rank
    return inter - raz.rank


# ---------------------------------------------------------------------------
# induced maps on Tor


@dataclass
class TorMapReport:
    i: int
    matrix: list
    is_zero: bool
    path: str
    details: dict = field(default_factory=dict)


def _containment_witness(a: Ideal, b: Ideal):
    for g in a.generators:
        if not b.contains_poly(g):
            return g
    return None


def induced_tor_map(a: Ideal, b: Ideal, i: int, path: str = "resolution_lift") -> TorMapReport:
    """Matrix of Tor_i^S(S/a,k) -> Tor_i^S(S/b,k) induced by S/a -> S/b.

    Requires a <= b.  The resolution path lifts the identity comparison map
    through both minimal resolutions and tensors with k; the cycles path maps
    H_{i-1}(aK) -> H_{i-1}(bK) by inclusion of representatives.
    """
    if a.ring != b.ring:
        raise ValueError("ideals over different rings")
    if not (a.is_proper() and b.is_proper()):
        raise ValueError("unit ideal rejected")
    w = _containment_witness(a, b)
    if w is not None:
        raise ValueError(f"containment a <= b fails: witness generator {w}")
    if not 1 <= i <= a.ring.d:
        raise ValueError(f"homological index {i} out of range")
    if path == "resolution_lift":
        return _tor_map_resolution(a, b, i)
    if path == "koszul_cycles":
        return _tor_map_cycles(a, b, i)
    raise ValueError(f"unknown path {path!r}")


def _lift_through(cols, target_vec: FreeVector, tracked_cache: dict, key) -> FreeVector:
    if key not in tracked_cache:
        tracked_cache[key] = buchberger_tracked(cols) if cols else None
    tracked = tracked_cache[key]
    if tracked is None:
        if target_vec.is_zero():
            return FreeVector(target_vec.ring, 0, {})
        raise AssertionError("lift target nonzero but target module is zero")
    lift = tracked.lift(target_vec)
    if lift is None:
        raise AssertionError("comparison map failed to lift (resolution not exact?)")
    return lift


def _tor_map_resolution(a: Ideal, b: Ideal, i: int) -> TorMapReport:
    ring = a.ring
    res_a = a.resolution(i)
    res_b = b.resolution(i)
    cache: dict = {}
    phi_cols = [FreeVector.unit(ring, 1, 0)]  # phi_0 = identity on F_0 = S
    for step in range(1, i + 1):
        ra_step = res_a.rank(step)
        rb_prev = res_b.rank(step - 1)
        acols = res_a.differential(step) if ra_step else []
        bcols = res_b.differential(step) if res_b.rank(step) else []
        new_cols = []
        for col in acols:
            v = FreeVector(ring, rb_prev, {})
            for (comp, mono), c in col.terms.items():
                v = v.add(phi_cols[comp].mul_monomial(mono, c))
            new_cols.append(_lift_through(bcols, v, cache, (id(b), step)))
        phi_cols = new_cols
    rows = res_b.rank(i)
    cols_n = res_a.rank(i)
    zero_mono = (0,) * ring.d
    matrix = [[ring.field.zero] * cols_n for _ in range(rows)]
    is_zero = True
    for cdx, col in enumerate(phi_cols):
        for r in range(rows):
            v = col.terms.get((r, zero_mono), ring.field.zero)
            matrix[r][cdx] = v
            if v != ring.field.zero:
                is_zero = False
    return TorMapReport(i, matrix, is_zero, "resolution_lift")


def _tor_map_cycles(a: Ideal, b: Ideal, i: int) -> TorMapReport:
    ring = a.ring
    field = ring.field
    if i == 1:
        # H_0(aK) -> H_0(bK) is a/na -> b/nb; zero iff a <= n*b
        nb = maximal_ideal(ring) * b
        mingens = a.min_gens()
        matrix = []
        is_zero = all(nb.contains_poly(g) for g in mingens)
        return TorMapReport(i, matrix, is_zero, "koszul_cycles", {"i1_rule": "a <= n*b"})
    kc = KoszulComplex(ring)
    zi = koszul_cycles(kc, i - 1)
    shifts = (i - 1,) * zi.rank
    degrees = sorted(
        set(a.resolution(i).betti.internal_degrees(i))
        | set(b.resolution(i).betti.internal_degrees(i))
    )
    blocks = []
    is_zero = True
    for q in degrees:
        z_span = _span_vectors(zi.gens, q, shifts)
        a_span = _span_vectors(ideal_times_koszul(a, i - 1).gens, q, shifts)
        az_span = _span_vectors(module_times_ideal(a, zi).gens, q, shifts)
        bz_span = _span_vectors(module_times_ideal(b, zi).gens, q, shifts)
        b_span = _span_vectors(ideal_times_koszul(b, i - 1).gens, q, shifts)
        inter_a = _intersection_basis(field, z_span, a_span)
        reps_a = _quotient_reps(field, inter_a, az_span)
        # basis of H(bK)_q to express images
        inter_b = _intersection_basis(field, z_span, b_span)
        bz_ech = Echelon(field, track=False)
        for v in bz_span:
            bz_ech.insert(v)
        reps_b = []
        for v in inter_b:
            piv, _ = bz_ech.insert(v)
            if piv is not None:
                reps_b.append(v)
        # express each a-representative over (bZ + reps_b)
        expr = Echelon(field, track=True)
        for v in bz_span:
            expr.insert(v)
        nb_base = expr.ninserted
        rep_positions = []
        for v in reps_b:
            expr.insert(v)
            rep_positions.append(expr.ninserted - 1)
        block = []
        for v in reps_a:
            combo: dict = {}
            r = expr.reduce(v, combo)
            if r:
                raise AssertionError("image of a cycle escaped Z cap bK")
            col = [field.neg(combo.get(pos, field.zero)) for pos in rep_positions]
            if any(c != field.zero for c in col):
                is_zero = False
            block.append(col)
        blocks.append((q, block))
    return TorMapReport(i, blocks, is_zero, "koszul_cycles", {"blocked_by_degree": True})


def _intersection_basis(field, span_a, span_b) -> list:
    """Basis vectors of span(A) cap span(B) via the kernel of [A | B]."""
    if not span_a or not span_b:
        return []
    columns = list(span_a) + list(span_b)
    combos = kernel_basis(field, columns)
    ech = Echelon(field)
    out = []
    for combo in combos:
        w: dict = {}
        for idx, c in combo.items():
            if idx < len(span_a):
                for lab, v in span_a[idx].items():
                    vv = field.add(w.get(lab, field.zero), field.mul(c, v))
                    if vv == field.zero:
                        w.pop(lab, None)
                    else:
                        w[lab] = vv
        if w:
            piv, _ = ech.insert(w)
            if piv is not None:
                out.append(w)
    return out


def _quotient_reps(field, vectors, modulo_span) -> list:
    ech = Echelon(field)
    for v in modulo_span:
        ech.insert(v)
    reps = []
    for v in vectors:
        piv, _ = ech.insert(v)
        if piv is not None:
            reps.append(v)
    return reps


def zero_map_check(a: Ideal, b: Ideal, path: str = "resolution_lift") -> bool:
    """True iff Tor_i(S/a,k) -> Tor_i(S/b,k) vanishes for every 1 <= i <= d."""
    for i in range(1, a.ring.d + 1):
        if not induced_tor_map(a, b, i, path=path).is_zero:
            return False
    return True


def cycle_containment_check(a: Ideal, b: Ideal) -> bool:
    """True iff Z_i cap a*K_i <= b*Z_i for all 1 <= i <= d."""
    if a.ring != b.ring:
        raise ValueError("ideals over different rings")
    w = _containment_witness(a, b)
    if w is not None:
        raise ValueError(f"containment a <= b fails: witness generator {w}")
    kc = KoszulComplex(a.ring)
    for i in range(1, a.ring.d + 1):
        zi = koszul_cycles(kc, i)
        inter = intersect_modules(Submodule(a.ring, zi.rank, zi.gens, zi.shifts), ideal_times_koszul(a, i))
        if inter.is_zero():
            continue
        bz = module_times_ideal(b, zi)
        if not all(bz.contains(g) for g in inter.gens):
            return False
    return True


# ---------------------------------------------------------------------------
# homology algebra products


@dataclass
class HomologyProductReport:
    vanishes: bool
    witness: dict | None
    pairs_checked: int
    complete: bool
    characteristic: int
    class_dims: dict


def wedge_vectors(v: FreeVector, i: int, w: FreeVector, j: int, modulo: Ideal) -> FreeVector:
    """Product of a K_i and a K_j element inside K_{i+j}, coefficients mod a."""
    ring = v.ring
    d = ring.d
    bi = wedge_basis(d, i)
    bj = wedge_basis(d, j)
    bij = {J: r for r, J in enumerate(wedge_basis(d, i + j))}
    out = FreeVector(ring, len(bij), {})
    field = ring.field
    for (c1, m1), a1 in v.terms.items():
        for (c2, m2), a2 in w.terms.items():
            sign = wedge_sign(bi[c1], bj[c2])
            if sign is None:
                continue
            J = tuple(sorted(bi[c1] + bj[c2]))
            coeff = field.mul(a1, a2)
            if sign < 0:
                coeff = field.neg(coeff)
            mono = tuple(x + y for x, y in zip(m1, m2))
            out = out.add(FreeVector(ring, len(bij), {(bij[J], mono): coeff}))
    return out.reduce_coefficients(modulo.gb)


def homology_algebra_products(a: Ideal, degree_bound: int | None = None,
                              stop_at_witness: bool = True) -> HomologyProductReport:
    """Multiply a k-basis of H_{>=1}(K^R) pairwise and reduce modulo boundaries.

    With degree_bound=None the internal-degree support is read off the Betti
    table of the minimal resolution (so an all-zero table is a certificate);
    a finite bound gives a witness search that is sound for refutation but
    cannot certify vanishing.
    """
    if a.is_unit():
        raise ValueError("unit ideal rejected")
    ring = a.ring
    d = ring.d
    gk = _GradedKoszul(a)
    complete = degree_bound is None
    if complete:
        betti = a.resolution(d).betti
        support = {i: betti.internal_degrees(i) for i in range(1, d + 1)}
    else:
        support = {i: list(range(i, degree_bound + 1)) for i in range(1, d + 1)}
    classes: dict = {}
    dims: dict = {}
    for i, degs in support.items():
        for q in degs:
            dim, reps = gk.homology(i, q)
            if dim:
                classes[(i, q)] = [gk.to_vector(i, r) for r in reps]
                dims[(i, q)] = dim
    boundary_ech: dict = {}

    def boundaries(i, q):
        if (i, q) not in boundary_ech:
            ech = Echelon(ring.field)
            for b in gk.boundary_vectors(i, q):
                ech.insert(b)
            boundary_ech[(i, q)] = ech
        return boundary_ech[(i, q)]

    witness = None
    pairs = 0
    keys = sorted(classes)
    for (i, q1) in keys:
        for (j, q2) in keys:
            if j < i:
                continue
            if i + j > d:
                continue
            for idx1, z in enumerate(classes[(i, q1)]):
                for idx2, w in enumerate(classes[(j, q2)]):
                    if (j, q2) == (i, q1) and idx2 < idx1:
                        continue
                    pairs += 1
                    prod = wedge_vectors(z, i, w, j, a)
                    if prod.is_zero():
                        continue
                    coords = gk.vector_coords(i + j, prod)
                    residue = boundaries(i + j, q1 + q2).reduce(coords)
                    if residue:
                        witness = {
                            "left": (i, q1, idx1, str(z)),
                            "right": (j, q2, idx2, str(w)),
                            "product": str(prod),
                            "hom_degree": i + j,
                            "internal_degree": q1 + q2,
                        }
                        if stop_at_witness:
                            return HomologyProductReport(False, witness, pairs, complete,
                                                         ring.field.char, dims)
    return HomologyProductReport(witness is None, witness, pairs, complete,
                                 ring.field.char, dims)


# ---------------------------------------------------------------------------
# Jacobian cycle representatives


def _poly_det(rows) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    ring = rows[0][0].ring
    out = ring.zero()
    for c in range(n):
        minor = [r[:c] + r[c + 1 :] for r in rows[1:]]
        term = rows[0][c] * _poly_det(minor)
        out = out + (term if c % 2 == 0 else -term)
    return out


def jacobian_cycle_representatives(c: Ideal, l: int) -> list:
    """Cycles in K^R_l built from Jacobians of minimal-resolution entries.

    Every returned vector is verified to be a cycle over R = S/c; over Q and
    for c inside n^2 their classes span H_l(K^R).
    """
    if c.ring.field.char != 0:
        raise CharacteristicGateError("Jacobian representatives need characteristic zero")
    ring = c.ring
    if c.is_zero() or (c.min_generator_degree() or 0) < 2:
        raise ValueError("ideal must be contained in the square of the maximal ideal")
    if not 1 <= l <= ring.d:
        raise ValueError(f"wedge degree {l} out of range")
    res = c.resolution(l)
    if res.rank(l) == 0:
        return []
    entries = {}
    for step in range(1, l + 1):
        cols = res.differential(step)
        entries[step] = cols  # alpha^{(step)}_{j,k} = component k of column j
    kc = KoszulComplex(ring, modulo=c)
    basis_l = wedge_basis(ring.d, l)
    index_l = {J: r for r, J in enumerate(basis_l)}
    chains = itertools.product(*[range(res.rank(l - t)) for t in range(0, l)])
    out = []
    seen = set()
    for chain in chains:
        # chain = (j_1, ..., j_l); g_t couples F_{l-t+1} with F_{l-t}
        gs = []
        idxs = list(chain) + [0]
        for t in range(l):
            col = entries[l - t][idxs[t]]
            gs.append(col.component(idxs[t + 1]))
        if any(g.is_zero() for g in gs):
            continue
        terms = {}
        for I in itertools.combinations(range(ring.d), l):
            rows = [[g.derivative(iv) for iv in I] for g in gs]
            det = c.gb.normal_form(_poly_det(rows))
            for m, v in det.terms.items():
                terms[(index_l[I], m)] = v
        z = FreeVector(ring, len(basis_l), terms)
        if z.is_zero():
            continue
        key = frozenset(z.monic(lambda t: (t[0], ring.order.key(t[1]))).terms.items())
        if key in seen:
            continue
        seen.add(key)
        dz = kc.apply_differential(l, z)
        if not dz.is_zero():
            raise AssertionError("Jacobian candidate is not a cycle over R")
        out.append(z)
    return out
