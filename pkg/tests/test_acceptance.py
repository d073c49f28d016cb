"""Acceptance suite: one test per criterion, each printing a pass/fail line
and enforcing its stated exactness and time budget."""

import random
import time

import pytest

from golod import (
    GF,
    CheckConfig,
    Ideal,
    KoszulComplex,
    PolyRing,
    cycle_containment_check,
    golod_defect,
    golod_verdict,
    homology_algebra_products,
    jacobian_cycle_representatives,
    koszul_cycles,
    lofwall_check,
    maximal_ideal,
    module_equal,
    product_golod_check,
    resolve_residue_field,
    sega_koszulness_check,
    tor_dimensions,
    zero_map_check,
)
from golod.corpus import entries as corpus_entries
from golod.koszul import _GradedKoszul, wedge_vectors
from golod.linalg import Echelon

from conftest import random_homogeneous, random_ideal
from test_poincare import slow_residue_field_betti


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds
        self.t0 = time.monotonic()

    def elapsed(self):
        return time.monotonic() - self.t0

    def check(self):
        assert self.elapsed() <= self.seconds, \
            f"budget exceeded: {self.elapsed():.1f}s > {self.seconds}s"


def announce(number, description, budget):
    print(f"ACCEPTANCE {number}: PASS ({budget.elapsed():.2f}s <= {budget.seconds}s) "
          f"- {description}")


def test_criterion_01_koszul_selftest():
    budget = Budget(1.0)
    for d in (1, 2, 3, 4):
        ring = PolyRing(tuple("xyzw"[:d]))
        kc = KoszulComplex(ring)
        for i in range(2, d + 1):
            for col in kc.differential(i):
                assert kc.apply_differential(i - 1, col).is_zero()
        assert Ideal(ring, [c.component(0) for c in kc.differential(1)]) == maximal_ideal(ring)
        for i in range(1, d):
            zi = koszul_cycles(kc, i)
            assert module_equal(list(zi.gens), list(kc.differential(i + 1)),
                                ring=ring, rank=zi.rank)
        assert koszul_cycles(kc, d).is_zero()
    budget.check()
    announce(1, "H_0(K) = k, H_i(K) = 0 for i > 0, dd = 0 for d = 1..4", budget)


def test_criterion_02_hypersurface_golodness():
    rng = random.Random(20160513)
    total = Budget(25.0)
    for trial in range(5):
        per_case = Budget(5.0)
        d = rng.choice((1, 2, 3))
        ring = PolyRing(tuple("xyz"[:d]))
        f = random_homogeneous(ring, rng, rng.randint(2, 4), nterms=min(3, d + 1))
        a = Ideal(ring, [f])
        rep = golod_defect(a, 6)
        assert rep.first_nonzero is None, f"hypersurface ({f}) showed a defect"
        # independent oracle: stepwise kernel ranks through N = 3
        assert rep.actual.coefficients[:4] == slow_residue_field_betti(a, 3)
        per_case.check()
    total.check()
    announce(2, "five random hypersurfaces (deg >= 2) have zero defect through N = 6", total)


def test_criterion_03_nsq_ring():
    budget = Budget(5.0)
    R = PolyRing(("x", "y"))
    n2 = maximal_ideal(R) ** 2
    p = resolve_residue_field(n2, 8)
    assert p.coefficients == [1, 2, 4, 8, 16, 32, 64, 128, 256]
    rep = golod_defect(n2, 8)
    assert rep.first_nonzero is None and all(v == 0 for v in rep.defect)
    assert lofwall_check(n2, 2).status == "PROVEN_GOLOD"
    budget.check()
    announce(3, "n^2 in d = 2: P_k^R = (1,2,4,...,256), zero defect, lofwall PROVEN", budget)


def test_criterion_04_complete_intersection_refutation():
    budget = Budget(5.0)
    R = PolyRing(("x", "y"))
    x, y = R.gens()
    a = Ideal(R, [x * x, y * y])
    # explicit witness [x e_1] * [y e_2] != 0 in H_2
    gk = _GradedKoszul(a)
    from golod import FreeVector

    z1 = FreeVector.from_polys([x, R.zero()])
    z2 = FreeVector.from_polys([R.zero(), y])
    kc = KoszulComplex(R, modulo=a)
    assert kc.apply_differential(1, z1).is_zero()
    assert kc.apply_differential(1, z2).is_zero()
    prod = wedge_vectors(z1, 1, z2, 1, a)
    assert str(prod) == "(x*y)"
    ech = Echelon(R.field)
    for b in gk.boundary_vectors(2, 4):
        ech.insert(b)
    assert ech.reduce(gk.vector_coords(2, prod)), "product reduced to a boundary"
    # and the search engine finds it
    rep = homology_algebra_products(a)
    assert not rep.vanishes
    # defect admits first_nonzero = 3 with value exactly 1
    dr = golod_defect(a, 6)
    assert dr.first_nonzero == 3
    assert dr.defect[3] == 1
    budget.check()
    announce(4, "(x^2,y^2): [x e_1][y e_2] nonzero and defect (.,.,.,1,...) at index 3", budget)


def test_criterion_05_product_benchmark_d4():
    budget = Budget(600.0)
    R = PolyRing(("x", "y", "z", "w"))
    x, y, z, w = R.gens()
    a = maximal_ideal(R) * Ideal(R, [x * x, y * y, z * z, w * w])
    assert len(a.generators) == 16
    verdict = golod_verdict(a, CheckConfig(truncation=6))
    assert verdict.status == "REFUTED"
    assert verdict.certificate in ("homology-product", "poincare-defect")
    # the witness route fires, and the defect route agrees within N = 6
    rep = homology_algebra_products(a)
    assert not rep.vanishes and rep.complete
    dr = golod_defect(a, 6, stop_at_first_defect=True)
    assert dr.first_nonzero == 5
    budget.check()
    announce(5, f"d = 4 product benchmark REFUTED via {verdict.certificate} "
                f"(defect index {dr.first_nonzero})", budget)


def test_criterion_06_power_maps_char_zero():
    budget = Budget(60.0)
    rng = random.Random(20240806)
    rings = [PolyRing(("x", "y"))] * 5 + [PolyRing(("x", "y", "z"))] * 5
    for ring in rings:
        c = random_ideal(ring, rng, ngens=2, maxdeg=3, monomial_bias=0.5)
        for m in (2, 3, 4):
            assert zero_map_check(c**m, c ** (m - 1)), \
                f"rho = 1 failed for {c} at m = {m}"
    budget.check()
    announce(6, "rho = 1 power maps vanish for 10 random ideals over Q (m = 2,3,4)", budget)


def test_criterion_07_power_maps_dimension_two_mod5():
    budget = Budget(60.0)
    rng = random.Random(20240807)
    ring = PolyRing(("x", "y"), field=GF(5))
    for _ in range(10):
        c = random_ideal(ring, rng, ngens=2, maxdeg=3, monomial_bias=0.5)
        for m in (2, 3, 4):
            assert zero_map_check(c**m, c ** (m - 1)), \
                f"rho = 1 failed for {c} at m = {m} over F_5"
    budget.check()
    announce(7, "rho = 1 power maps vanish for 10 random ideals over F_5[x,y]", budget)


def test_criterion_08_condition_equivalence():
    budget = Budget(120.0)
    rng = random.Random(20240808)
    R2 = PolyRing(("x", "y"))
    R3 = PolyRing(("x", "y", "z"))
    x, y = R2.gens()
    u, v, w = R3.gens()
    n2, n3 = maximal_ideal(R2), maximal_ideal(R3)
    pairs = [
        (n2**2, n2),
        (n2**3, n2**2),
        (Ideal(R2, [x * x, y * y]) + n2**3, Ideal(R2, [x * x, y * y])),
        (Ideal(R2, [x]) ** 2, Ideal(R2, [x])),
        (n2 * Ideal(R2, [x * x, y * y]), Ideal(R2, [x * x, y * y])),
        (n3**2, n3),
        (Ideal(R3, [u, v]) ** 2, Ideal(R3, [u, v])),
        (n3 * Ideal(R3, [u * u, v * v, w * w]), Ideal(R3, [u * u, v * v, w * w])),
        (Ideal(R3, [u]) * n3, Ideal(R3, [u])),
        (n3**4, n3**2),
    ]
    assert len(pairs) == 10
    for a, b in pairs:
        assert b.contains(a) and a.contains(b * b), "corpus pair is not a sandwich"
        assert cycle_containment_check(a, b) == zero_map_check(a, b), \
            f"conditions disagree for ({a}, {b})"
    budget.check()
    announce(8, "cycle containment and Tor vanishing agree on 10 sandwich pairs", budget)


def test_criterion_09_product_theorem():
    budget = Budget(120.0)
    R2 = PolyRing(("x", "y"))
    R3 = PolyRing(("x", "y", "z"))
    x, y = R2.gens()
    u, v, w = R3.gens()
    cases = [
        (maximal_ideal(R2), maximal_ideal(R2)),
        (Ideal(R2, [x * x, x * y]), maximal_ideal(R2)),
        (Ideal(R3, [u * u, u * v, u * w]), Ideal(R3, [u])),
    ]
    for a, b in cases:
        assert b.contains(a)
        assert sega_koszulness_check(a), f"{a} failed the Koszul-module test"
        verdict = product_golod_check(a, b)
        assert verdict.status == "PROVEN_GOLOD"
        rep = golod_defect(a * b, 5)
        assert rep.first_nonzero is None, f"defect for {a * b}"
    budget.check()
    announce(9, "Koszul-module products certified Golod with zero defect to N = 5", budget)


def test_criterion_10_jacobian_spanning():
    budget = Budget(60.0)
    R = PolyRing(("x", "y"))
    x, y = R.gens()
    for gens in ([x * x], [x * y], [x * x, y * y], [x * x, x * y, y * y]):
        c = Ideal(R, gens)
        betti = tor_dimensions(c)
        dc = c.derivative_ideal()
        gk = _GradedKoszul(c)
        kc = KoszulComplex(R, modulo=c)
        for l in range(1, R.d + 1):
            reps = jacobian_cycle_representatives(c, l)
            for z in reps:
                assert kc.apply_differential(l, z).is_zero()
                for comp in range(z.rank):
                    p = z.component(comp)
                    assert p.is_zero() or dc.contains_poly(p)
            for q in betti.internal_degrees(l):
                dim_h, _ = gk.homology(l, q)
                ech = Echelon(R.field)
                for bvec in gk.boundary_vectors(l, q):
                    ech.insert(bvec)
                base = ech.rank
                for z in reps:
                    coords = gk.vector_coords(l, z)
                    if coords and all(q == sum(m) + l for (_, m) in coords):
                        ech.insert(coords)
                assert ech.rank - base == dim_h, \
                    f"Jacobian classes fail to span H_{l} of {c} in degree {q}"
    budget.check()
    announce(10, "Jacobian cycles verified and spanning H_l for the four sample ideals", budget)


def test_criterion_11_oracle_agreement():
    budget = Budget(120.0)
    rng = random.Random(20240811)
    checked = 0
    for entry, parsed in corpus_entries():
        ideal = parsed.ideals[entry["ideal"]]
        res = tor_dimensions(ideal, "resolution_lift")
        kos = tor_dimensions(ideal, "koszul_cycles")
        assert res.entries == kos.entries, f"paths disagree on {entry['file']}"
        checked += 1
    assert checked == 14
    # membership oracle: Groebner normal form vs graded brute force
    for ring in (PolyRing(("x", "y")), PolyRing(("x", "y", "z"))):
        for _ in range(3):
            a = random_ideal(ring, rng, ngens=2, maxdeg=3)
            for q in range(1, 6):
                f = random_homogeneous(ring, rng, q, nterms=3)
                ech = Echelon(ring.field)
                for p in a.graded_component_basis(q):
                    ech.insert(dict(p.terms))
                brute = not ech.reduce(dict(f.terms))
                assert a.contains_poly(f) == brute
    budget.check()
    announce(11, f"Tor paths agree on all {checked} corpus ideals; "
                 "membership matches brute force", budget)


def test_criterion_12_soundness_sweep():
    import argparse

    from golod.cli import _config_for
    from golod.fileformat import Task

    budget = Budget(600.0)
    args = argparse.Namespace(criterion=None, truncation=None, rho_mmax=None,
                              budget_seconds=None)
    statuses = {}
    for entry, parsed in corpus_entries():
        ideal = parsed.ideals[entry["ideal"]]
        task = parsed.tasks[0] if parsed.tasks else Task(entry["ideal"])
        cfg = _config_for(task, args, parsed.ideals)
        cfg.truncation = entry.get("defect_N", 6)
        cfg.cross_check = True  # raises internally on PROVEN + REFUTED
        verdict = golod_verdict(ideal, cfg)
        statuses[entry["file"]] = verdict.status
        assert verdict.status == entry["expected_status"], entry["file"]
        if "expected_certificate" in entry:
            assert verdict.certificate == entry["expected_certificate"], entry["file"]
        # every defect computed along the way is componentwise nonnegative
        for t in verdict.details.get("trace", []):
            if t["criterion"] == "poincare-defect" and "bound" in t["details"]:
                bound = t["details"]["bound"]
                actual = t["details"]["actual"]
                assert all(b - a >= 0 for b, a in zip(bound, actual)), entry["file"]
        if "defect_first_nonzero" in entry:
            dr = golod_defect(ideal, entry["defect_N"], stop_at_first_defect=True)
            assert dr.first_nonzero == entry["defect_first_nonzero"], entry["file"]
    budget.check()
    announce(12, f"soundness sweep over {len(statuses)} corpus ideals, "
                 "no PROVEN+REFUTED clash, defects all nonnegative", budget)
