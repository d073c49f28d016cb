"""Certified Golod criteria and the tri-state verdict orchestrator.

Every PROVEN verdict names the sufficient condition that fired; every
REFUTED verdict embeds a checkable witness (a nonzero homology product or
the first positive Poincare-defect index).  "Not proven" is never reported
as "not Golod".
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .ideals import Ideal, maximal_ideal
from .koszul import (
    cycle_containment_check,
    homology_algebra_products,
    induced_tor_map,
    zero_map_check,
)
from .linalg import kernel_basis
from .poincare import BudgetExceededError, golod_defect
from .poly import CharacteristicGateError, mon_deg

PROVEN_GOLOD = "PROVEN_GOLOD"
REFUTED = "REFUTED"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class GolodVerdict:
    status: str
    certificate: str | None = None
    details: dict = field(default_factory=dict)

    def decisive(self) -> bool:
        return self.status != INCONCLUSIVE


@dataclass
class RhoEstimate:
    ideal: Ideal
    r_verified: int | None
    m_max: int
    failures: list


@dataclass
class CheckConfig:
    truncation: int = 6
    rho_m_max: int = 4
    product_degree_bound: int | None = None
    budget_seconds: float | None = None
    cross_check: bool = False
    criterion: str = "auto"
    sandwich_base: Ideal | None = None
    sandwich_m: int | None = None
    product_factors: tuple | None = None  # (a, b) with a*b equal to the checked ideal
    prop_cycle_partner: Ideal | None = None


def _require_proper(a: Ideal):
    if a.is_unit():
        raise ValueError("unit ideal rejected")


def strongly_golod_check(a: Ideal) -> GolodVerdict:
    """PROVEN iff the square of the derivative ideal lies back in a (char 0)."""
    _require_proper(a)
    da = a.derivative_ideal()
    sq = da * da
    if a.contains(sq):
        return GolodVerdict(PROVEN_GOLOD, "strongly-golod",
                            {"derivative_ideal": [str(g) for g in da.generators]})
    missing = next(g for g in sq.generators if not a.contains_poly(g))
    return GolodVerdict(INCONCLUSIVE, None,
                        {"criterion": "strongly-golod", "failing_product": str(missing)})


def lofwall_check(c: Ideal, r: int) -> GolodVerdict:
    """PROVEN iff n^(2r-2) <= c <= n^r (r >= 2)."""
    _require_proper(c)
    if r < 2:
        raise ValueError("the power sandwich at the maximal ideal needs r >= 2")
    n = maximal_ideal(c.ring)
    upper = n**r
    lower = n ** (2 * r - 2)
    if not upper.contains(c):
        w = next(g for g in c.generators if not upper.contains_poly(g))
        return GolodVerdict(INCONCLUSIVE, None, {"criterion": "lofwall", "not_in_upper": str(w)})
    if not c.contains(lower):
        w = next(g for g in lower.generators if not c.contains_poly(g))
        return GolodVerdict(INCONCLUSIVE, None, {"criterion": "lofwall", "missing_lower": str(w)})
    return GolodVerdict(PROVEN_GOLOD, "lofwall", {"r": r})


def prop_cycle_golod_check(a: Ideal, b: Ideal, condition: str = "tor") -> GolodVerdict:
    """Sandwich b^2 <= a <= b plus vanishing comparison maps proves a Golod.

    condition "tor" checks the induced maps on Tor; "cycles" checks the
    equivalent cycle containment Z_i cap aK_i <= b*Z_i.
    """
    _require_proper(a)
    _require_proper(b)
    if not b.contains(a):
        w = next(g for g in a.generators if not b.contains_poly(g))
        return GolodVerdict(INCONCLUSIVE, None,
                            {"criterion": "prop-cycle", "sandwich": f"a not in b: {w}"})
    b2 = b * b
    if not a.contains(b2):
        w = next(g for g in b2.generators if not a.contains_poly(g))
        return GolodVerdict(INCONCLUSIVE, None,
                            {"criterion": "prop-cycle", "sandwich": f"b^2 not in a: {w}"})
    if condition == "tor":
        ok = zero_map_check(a, b)
    elif condition == "cycles":
        ok = cycle_containment_check(a, b)
    else:
        raise ValueError(f"unknown condition {condition!r}")
    if ok:
        return GolodVerdict(PROVEN_GOLOD, "prop-cycle",
                            {"b": [str(g) for g in b.generators], "condition": condition})
    return GolodVerdict(INCONCLUSIVE, None,
                        {"criterion": "prop-cycle", "failing": f"condition ({condition}) is nonzero"})


def proven_rho_one(c: Ideal) -> str | None:
    """Reason string when rho(c) = 1 is a theorem for this input, else None."""
    if c.ring.field.char == 0:
        return "char-zero-graded"
    if c.ring.d <= 2:
        return "dimension-two"
    gens = c.min_gens()
    variables = set(c.ring.gens())
    if gens and all(g in variables for g in gens):
        return "variable-generated"
    return None


def rho_estimate(c: Ideal, r_max: int, m_max: int, budget_seconds=None) -> RhoEstimate:
    """Bounded verification of the Koszul Artin-Rees number.

    For each candidate r the power-to-power comparison maps are checked for
    r < m <= m_max only; cost grows quickly with m_max since it resolves
    S/c^m.  The result is a bounded statement, never a proof.
    """
    _require_proper(c)
    if c.is_zero():
        return RhoEstimate(c, 1, m_max, [])
    t0 = time.monotonic()
    failures = []
    r_verified = None
    for r in range(1, r_max + 1):
        ok = True
        for m in range(r + 1, m_max + 1):
            if budget_seconds is not None and time.monotonic() - t0 > budget_seconds:
                raise BudgetExceededError(f"rho estimate budget exhausted at r={r}, m={m}")
            src = c**m
            tgt = c ** (m - r)
            for i in range(1, c.ring.d + 1):
                rep = induced_tor_map(src, tgt, i)
                if not rep.is_zero:
                    failures.append((i, m, f"nonzero Tor_{i} map for c^{m} -> c^{m - r}"))
                    ok = False
                    break
            if not ok:
                break
        if ok:
            r_verified = r
            break
    return RhoEstimate(c, r_verified, m_max, failures)


def sandwich_check(c: Ideal, a: Ideal, m: int, rho: int | None = None,
                   rho_m_max: int = 4) -> GolodVerdict:
    """c^(2(m-rho)) <= a <= c^m with a proven rho=1 proves a Golod.

    When rho is not a theorem for c, the containments are still verified at
    the bounded estimate and reported as conditional evidence only.
    """
    _require_proper(a)
    _require_proper(c)
    reason = proven_rho_one(c)
    if reason is not None and rho in (None, 1):
        rho_val, proven = 1, True
    else:
        est = rho_estimate(c, r_max=rho or max(1, m - 1), m_max=rho_m_max)
        rho_val, proven = est.r_verified, False
        if rho_val is None:
            return GolodVerdict(INCONCLUSIVE, None,
                                {"criterion": "sandwich-power",
                                 "rho": f"not verified up to r_max={rho or m - 1}, m_max={rho_m_max}"})
    if m <= rho_val:
        raise ValueError(f"power sandwich needs m > rho, got m={m}, rho={rho_val}")
    upper = c**m
    if not upper.contains(a):
        w = next(g for g in a.generators if not upper.contains_poly(g))
        return GolodVerdict(INCONCLUSIVE, None,
                            {"criterion": "sandwich-power", "not_in_upper": str(w)})
    lower = c ** (2 * (m - rho_val))
    if not a.contains(lower):
        w = next(g for g in lower.generators if not a.contains_poly(g))
        return GolodVerdict(INCONCLUSIVE, None,
                            {"criterion": "sandwich-power", "missing_lower": str(w)})
    details = {"c": [str(g) for g in c.generators], "m": m, "rho": rho_val}
    if proven:
        details["rho_reason"] = reason
        return GolodVerdict(PROVEN_GOLOD, "sandwich-power", details)
    details["conditional"] = f"rho(c) <= {rho_val} only verified up to m_max={rho_m_max}"
    return GolodVerdict(INCONCLUSIVE, None, details)


def sandwich_product_check(c: Ideal, a: Ideal, b: Ideal, p: int, q: int,
                           rho: int | None = None) -> GolodVerdict:
    """Product of two c-power sandwiches: a*b is Golod via the exponent p+q."""
    reason = proven_rho_one(c)
    rho_val = rho if rho is not None else (1 if reason else None)
    if rho_val is None:
        return GolodVerdict(INCONCLUSIVE, None,
                            {"criterion": "sandwich-product", "rho": "not proven"})
    for ideal, e, name in ((a, p, "a"), (b, q, "b")):
        if not (c**e).contains(ideal):
            return GolodVerdict(INCONCLUSIVE, None,
                                {"criterion": "sandwich-product", "fail": f"{name} not in c^{e}"})
        low = c ** (2 * e - rho_val)
        if not ideal.contains(low):
            return GolodVerdict(INCONCLUSIVE, None,
                                {"criterion": "sandwich-product", "fail": f"c^{2*e-rho_val} not in {name}"})
    return sandwich_check(c, a * b, p + q, rho=rho_val)


def sega_koszulness_check(a: Ideal) -> bool:
    """Do the maps Tor_i(a, S/n^2) -> Tor_i(a, S/n) vanish for all i >= 1?

    Computed from the minimal resolution of a tensored with S/n^2: with a
    minimal resolution the boundaries die under the projection to k, so the
    map is zero iff no cycle has a unit coordinate.
    """
    _require_proper(a)
    if a.is_zero():
        return True
    ring = a.ring
    field = ring.field
    res = a.resolution(ring.d)
    monos = [(0,) * ring.d] + [m for m in ring.monomials_of_degree(1)]
    zero_mono = (0,) * ring.d
    for i in range(1, ring.d + 1):
        # F^a_i = F_{i+1} in the resolution of S/a
        if res.rank(i + 1) == 0:
            break
        cols_mat = res.differential(i + 1)
        labels = [(col, m) for col in range(len(cols_mat)) for m in monos]
        columns = []
        for col, m in labels:
            img: dict = {}
            if m == zero_mono:
                for (comp, mono), c in cols_mat[col].terms.items():
                    if mon_deg(mono) == 1:
                        img[(comp, mono)] = c
            columns.append(img)
        for combo in kernel_basis(field, columns):
            for idx in combo:
                if labels[idx][1] == zero_mono:
                    return False
    return True


def componentwise_linear_check(a: Ideal) -> bool:
    """Does every degree component ideal a_<q> have a q-linear resolution?

    Checked for q between the smallest and largest minimal-generator degree;
    beyond that a_<q> = n * a_<q-1>, and multiplying a linearly resolved
    ideal by the maximal ideal keeps the resolution linear.
    """
    _require_proper(a)
    if a.is_zero():
        return True
    degrees = sorted({g.degree() for g in a.min_gens()})
    lo, hi = degrees[0], degrees[-1]
    for q in range(lo, hi + 1):
        comp = a.component_ideal(q)
        if comp.is_zero():
            continue
        betti = comp.resolution(a.ring.d).betti
        for (i, j), v in betti.entries.items():
            if i >= 1 and v and j != (i - 1) + q:
                return False
    return True


def product_golod_check(a: Ideal, b: Ideal, route: str = "sega") -> GolodVerdict:
    """a <= b and a a Koszul module force a*b Golod (certificate for a*b)."""
    _require_proper(a)
    _require_proper(b)
    if not b.contains(a):
        w = next(g for g in a.generators if not b.contains_poly(g))
        return GolodVerdict(INCONCLUSIVE, None,
                            {"criterion": "product-koszul",
                             "hypothesis_failure": f"a not contained in b, witness {w}"})
    if route == "sega":
        ok = sega_koszulness_check(a)
    elif route == "componentwise":
        ok = componentwise_linear_check(a)
    else:
        raise ValueError(f"unknown route {route!r}")
    if not ok:
        return GolodVerdict(INCONCLUSIVE, None,
                            {"criterion": "product-koszul", "failing": f"{route} check is false"})
    return GolodVerdict(PROVEN_GOLOD, "product-koszul",
                        {"route": route,
                         "a": [str(g) for g in a.generators],
                         "b": [str(g) for g in b.generators],
                         "product": [str(g) for g in (a * b).generators]})


def variable_power_checks(p_vars, r: int, a: Ideal | None = None, ring=None,
                          rho_m_max: int = 4) -> list:
    """The three statements for p generated by a subset of the variables."""
    if a is not None:
        ring = a.ring
    if ring is None:
        raise ValueError("need a ring (or an ideal a) to interpret the variables")
    gens = []
    for v in p_vars:
        gens.append(ring.gen(v) if isinstance(v, int) else ring.gen(ring.names.index(v)))
    p = Ideal(ring, gens)
    if r < 1:
        raise ValueError("power r must be >= 1")
    out = []
    est = rho_estimate(p, r_max=1, m_max=rho_m_max)
    out.append(GolodVerdict(INCONCLUSIVE, None,
                            {"part": 1, "claim": "rho(p) = 1 (proven for variable-generated p)",
                             "bounded_agreement": est.r_verified == 1,
                             "m_max": rho_m_max}))
    if a is not None and r >= 2:
        v = sandwich_check(p, a, r, rho=1)
        v.details["part"] = 2
        out.append(v)
    if a is not None:
        pr = p**r
        if a.contains(pr):
            linear = componentwise_linear_check(pr)
            if linear:
                v = product_golod_check(pr, a, route="componentwise")
                if v.status == PROVEN_GOLOD:
                    v = GolodVerdict(PROVEN_GOLOD, "variable-power",
                                     {**v.details, "part": 3, "p_power": r})
            else:
                v = GolodVerdict(INCONCLUSIVE, None,
                                 {"part": 3, "failing": "p^r not componentwise linear (unexpected)"})
            out.append(v)
        else:
            w = next(g for g in pr.generators if not a.contains_poly(g))
            out.append(GolodVerdict(INCONCLUSIVE, None,
                                    {"part": 3, "hypothesis_failure": f"p^{r} not in a: {w}"}))
    return out


def golod_verdict(a: Ideal, config: CheckConfig | None = None) -> GolodVerdict:
    """Run cheap certificates, then refutation engines; first decisive wins.

    With config.cross_check both families always run and a PROVEN+REFUTED
    clash raises (soundness guard).
    """
    config = config or CheckConfig()
    _require_proper(a)
    t0 = time.monotonic()
    trace: list = []
    proven: GolodVerdict | None = None
    refuted: GolodVerdict | None = None

    def out_of_budget():
        return (config.budget_seconds is not None
                and time.monotonic() - t0 > config.budget_seconds)

    def note(name, verdict):
        trace.append({"criterion": name, "status": verdict.status,
                      "certificate": verdict.certificate, "details": dict(verdict.details)})

    def provers():
        yield from _prover_stages(a, config)

    for name, runner in provers():
        if out_of_budget():
            raise BudgetExceededError(f"budget exhausted before criterion {name}")
        try:
            v = runner()
        except CharacteristicGateError as e:
            if config.criterion != "auto":
                raise
            trace.append({"criterion": name, "status": "SKIPPED", "details": {"gate": str(e)}})
            continue
        note(name, v)
        if v.status == PROVEN_GOLOD:
            proven = v
            break

    run_refuters = config.criterion in ("auto", "refute-only") or config.cross_check
    if run_refuters and (proven is None or config.cross_check):
        if not out_of_budget():
            bound = config.product_degree_bound or _default_product_bound(a)
            rep = homology_algebra_products(a, degree_bound=bound)
            trace.append({"criterion": "homology-products", "status": "WITNESS" if rep.witness else "VANISH",
                          "details": {"complete": rep.complete, "pairs": rep.pairs_checked,
                                      "witness": rep.witness}})
            if rep.witness:
                refuted = GolodVerdict(REFUTED, "homology-product", dict(rep.witness))
        if refuted is None and not out_of_budget():
            try:
                dr = golod_defect(a, config.truncation, stop_at_first_defect=True,
                                  budget_seconds=_remaining(config, t0))
                trace.append({"criterion": "poincare-defect", "status":
                              "DEFECT" if dr.first_nonzero is not None else "ZERO",
                              "details": {"bound": dr.bound_coeffs, "actual": dr.actual.coefficients,
                                          "first_nonzero": dr.first_nonzero}})
                if dr.first_nonzero is not None:
                    refuted = GolodVerdict(
                        REFUTED, "poincare-defect",
                        {"first_nonzero": dr.first_nonzero,
                         "bound": dr.bound_coeffs, "actual": dr.actual.coefficients})
            except BudgetExceededError as e:
                trace.append({"criterion": "poincare-defect", "status": "BUDGET",
                              "details": {"last_completed_index": e.last_completed_index}})
                if proven is None and refuted is None and not config.cross_check:
                    raise

    if proven is not None and refuted is not None:
        raise RuntimeError(
            f"soundness violation: both PROVEN ({proven.certificate}) and "
            f"REFUTED ({refuted.certificate}) for the same ideal")
    if proven is not None:
        proven.details.setdefault("trace", trace)
        return proven
    if refuted is not None:
        refuted.details.setdefault("trace", trace)
        return refuted
    if out_of_budget():
        raise BudgetExceededError("budget exhausted before any criterion was decisive")
    return GolodVerdict(INCONCLUSIVE, None, {"trace": trace})


def _remaining(config: CheckConfig, t0):
    if config.budget_seconds is None:
        return None
    return max(0.0, config.budget_seconds - (time.monotonic() - t0))


def _default_product_bound(a: Ideal) -> int:
    top = a.max_generator_degree() or 1
    return max(6, 2 * top + a.ring.d)


def _prover_stages(a: Ideal, config: CheckConfig):
    wanted = config.criterion

    def lofwall_auto():
        r = a.min_generator_degree()
        if r is None or r < 2:
            return GolodVerdict(INCONCLUSIVE, None, {"criterion": "lofwall",
                                                     "note": "no admissible exponent"})
        return lofwall_check(a, r)

    def strongly():
        return strongly_golod_check(a)

    def product_hint():
        fa, fb = config.product_factors
        if fa * fb != a:
            return GolodVerdict(INCONCLUSIVE, None,
                                {"criterion": "product-koszul",
                                 "note": "provided factors do not multiply to the ideal"})
        return product_golod_check(fa, fb)

    def sandwich_hint():
        return sandwich_check(config.sandwich_base, a, config.sandwich_m,
                              rho_m_max=config.rho_m_max)

    def prop_cycle_auto():
        n = maximal_ideal(a.ring)
        partner = config.prop_cycle_partner
        candidates = [partner] if partner is not None else []
        if partner is None:
            top = a.min_generator_degree() or 0
            candidates = [n**j for j in range(1, top + 1)]
        best = GolodVerdict(INCONCLUSIVE, None, {"criterion": "prop-cycle",
                                                 "note": "no admissible sandwich partner"})
        for b in candidates:
            if not b.contains(a) or not a.contains(b * b):
                continue
            v = prop_cycle_golod_check(a, b)
            if v.status == PROVEN_GOLOD:
                return v
            best = v
        return best

    stages = []
    if wanted in ("auto", "lofwall"):
        stages.append(("lofwall", lofwall_auto))
    if wanted in ("auto", "strongly-golod"):
        stages.append(("strongly-golod", strongly))
    if config.product_factors is not None and wanted in ("auto", "product"):
        stages.append(("product-koszul", product_hint))
    if config.sandwich_base is not None and config.sandwich_m is not None \
            and wanted in ("auto", "sandwich"):
        stages.append(("sandwich-power", sandwich_hint))
    if wanted in ("auto", "prop-cycle"):
        stages.append(("prop-cycle", prop_cycle_auto))
    if wanted == "refute-only":
        stages = []
    return stages
