import pytest

from golod import (
    GF,
    CheckConfig,
    CharacteristicGateError,
    Ideal,
    PolyRing,
    componentwise_linear_check,
    golod_defect,
    golod_verdict,
    lofwall_check,
    maximal_ideal,
    product_golod_check,
    prop_cycle_golod_check,
    proven_rho_one,
    rho_estimate,
    sandwich_check,
    sandwich_product_check,
    sega_koszulness_check,
    strongly_golod_check,
    variable_power_checks,
    zero_map_check,
)
from golod.criteria import INCONCLUSIVE, PROVEN_GOLOD, REFUTED

from conftest import random_ideal


def test_strongly_golod_examples(R2):
    x, y = R2.gens()
    assert strongly_golod_check(maximal_ideal(R2) ** 2).status == PROVEN_GOLOD
    assert strongly_golod_check(Ideal(R2, [x])).status == INCONCLUSIVE
    v = strongly_golod_check(Ideal(R2, [x**3 + y**3]))
    assert v.status == INCONCLUSIVE
    assert "failing_product" in v.details


def test_strongly_golod_char_gate():
    F = PolyRing(("x", "y"), field=GF(5))
    x, y = F.gens()
    with pytest.raises(CharacteristicGateError):
        strongly_golod_check(Ideal(F, [x * x]))


def test_lofwall_examples(R2):
    x, y = R2.gens()
    n = maximal_ideal(R2)
    assert lofwall_check(n**2, 2).status == PROVEN_GOLOD
    assert lofwall_check(Ideal(R2, [x * x, y * y]), 2).status == INCONCLUSIVE
    assert lofwall_check(n**3 + Ideal(R2, [x**4]), 3).status == PROVEN_GOLOD
    with pytest.raises(ValueError):
        lofwall_check(n**2, 1)


def test_prop_cycle_examples(R2):
    n = maximal_ideal(R2)
    assert prop_cycle_golod_check(n**2, n).status == PROVEN_GOLOD
    assert prop_cycle_golod_check(n**3, n**2).status == PROVEN_GOLOD
    v = prop_cycle_golod_check(n**3, n)  # b^2 not inside a
    assert v.status == INCONCLUSIVE and "sandwich" in v.details
    assert prop_cycle_golod_check(n, n).status == INCONCLUSIVE
    # both conditions agree
    assert prop_cycle_golod_check(n**2, n, condition="cycles").status == PROVEN_GOLOD


def test_proven_rho_one(R2):
    x, y = R2.gens()
    assert proven_rho_one(Ideal(R2, [x * x + y * y])) == "char-zero-graded"
    F2 = PolyRing(("x", "y"), field=GF(5))
    fx, fy = F2.gens()
    assert proven_rho_one(Ideal(F2, [fx * fx])) == "dimension-two"
    F3 = PolyRing(("x", "y", "z"), field=GF(5))
    gx, gy, gz = F3.gens()
    assert proven_rho_one(Ideal(F3, [gx, gy])) == "variable-generated"
    assert proven_rho_one(Ideal(F3, [gx * gx])) is None


def test_rho_estimate_examples(R2):
    x, y = R2.gens()
    assert rho_estimate(Ideal(R2, [x]), 1, 5).r_verified == 1
    assert rho_estimate(Ideal(R2, [x * x, x * y]), 1, 4).r_verified == 1
    assert rho_estimate(maximal_ideal(R2), 1, 4).r_verified == 1


def test_sandwich_examples(R2):
    x, y = R2.gens()
    n = maximal_ideal(R2)
    assert sandwich_check(n, n**3, 3).status == PROVEN_GOLOD
    mixed = Ideal(R2, [x**3, y**3]) + n**4
    assert sandwich_check(n, mixed, 3).status == PROVEN_GOLOD
    with pytest.raises(ValueError):
        sandwich_check(n, n**3, 1)  # m must exceed rho


def test_sandwich_product_corollary(R2):
    n = maximal_ideal(R2)
    v = sandwich_product_check(n, n**2, n**3, 2, 3)
    assert v.status == PROVEN_GOLOD
    assert v.details["m"] == 5


def test_sega_examples(R2, R3):
    x, y = R2.gens()
    assert sega_koszulness_check(maximal_ideal(R2))
    assert sega_koszulness_check(Ideal(R2, [x * x, x * y]))
    assert not sega_koszulness_check(Ideal(R2, [x * x, y**3]))


def test_componentwise_examples(R2):
    x, y = R2.gens()
    assert componentwise_linear_check(maximal_ideal(R2) ** 2)
    assert not componentwise_linear_check(Ideal(R2, [x * x, y * y]))
    assert componentwise_linear_check(Ideal(R2, [x]))


def test_sega_matches_componentwise_on_corpus(R2, rng):
    cases = [maximal_ideal(R2), maximal_ideal(R2) ** 2]
    x, y = R2.gens()
    cases += [Ideal(R2, [x * x, x * y]), Ideal(R2, [x * x, y * y]),
              Ideal(R2, [x**3 + y**3]), Ideal(R2, [x * x, y**3])]
    cases += [random_ideal(R2, rng, ngens=2, maxdeg=3) for _ in range(4)]
    for a in cases:
        assert sega_koszulness_check(a) == componentwise_linear_check(a), str(a)


def test_product_examples(R2, R3):
    x, y = R2.gens()
    n = maximal_ideal(R2)
    assert product_golod_check(n, n).status == PROVEN_GOLOD
    assert product_golod_check(Ideal(R2, [x * x, x * y]), n).status == PROVEN_GOLOD
    # hypothesis failure is not a refutation
    u, v, w, t = PolyRing(("x", "y", "z", "w")).gens()
    R4 = u.ring
    big = maximal_ideal(R4)
    sq = Ideal(R4, [u * u, v * v, w * w, t * t])
    ver = product_golod_check(big, sq)
    assert ver.status == INCONCLUSIVE and "hypothesis_failure" in ver.details


def test_variable_power_parts(R3):
    x, y, z = R3.gens()
    out = variable_power_checks(["x"], 3, a=Ideal(R3, [x**3, y]))
    parts = {v.details.get("part"): v for v in out}
    assert parts[1].details["bounded_agreement"] is True
    assert parts[3].status == PROVEN_GOLOD
    assert parts[3].certificate == "variable-power"
    # part 2 on an honest p-sandwich
    out2 = variable_power_checks(["x", "y"], 2, a=maximal_ideal(R3).ring and Ideal(R3, [x * x, x * y, y * y]))
    parts2 = {v.details.get("part"): v for v in out2}
    assert parts2[2].status == PROVEN_GOLOD


def test_theorem_power_maps_char0(R2, rng):
    """zero_map_check(c^m, c^(m-1)) over Q for random small ideals."""
    for _ in range(3):
        c = random_ideal(R2, rng, ngens=2, maxdeg=2)
        for m in (2, 3):
            assert zero_map_check(c**m, c ** (m - 1))


def test_theorem_power_maps_dim2_char5(rng):
    F = PolyRing(("x", "y"), field=GF(5))
    for _ in range(3):
        c = random_ideal(F, rng, ngens=2, maxdeg=2)
        for m in (2, 3):
            assert zero_map_check(c**m, c ** (m - 1))


def test_strongly_golod_closure_under_powers(R2, rng):
    """Powers are strongly Golod: d(c^m)^2 <= c^(2m-2) <= c^m for m >= 2."""
    for _ in range(3):
        c = random_ideal(R2, rng, ngens=2, maxdeg=2)
        for m in (2, 3, 4):
            cm = c**m
            assert strongly_golod_check(cm).status == PROVEN_GOLOD


def test_verdict_examples(R2):
    x, y = R2.gens()
    n = maximal_ideal(R2)
    v = golod_verdict(n**2)
    assert v.status == PROVEN_GOLOD and v.certificate == "lofwall"
    v = golod_verdict(Ideal(R2, [x * x, y * y]))
    assert v.status == REFUTED and v.certificate == "homology-product"
    v = golod_verdict(Ideal(R2, [x**3 + y**3]))
    assert v.status == INCONCLUSIVE
    assert any(t["criterion"] == "poincare-defect" for t in v.details["trace"])


def test_verdict_cross_check_consistency(R2, rng):
    """Soundness: engines never return both PROVEN and REFUTED."""
    n = maximal_ideal(R2)
    x, y = R2.gens()
    cases = [n**2, n**3, Ideal(R2, [x * x, y * y]), Ideal(R2, [x])]
    cases += [random_ideal(R2, rng, ngens=2, maxdeg=2) for _ in range(3)]
    for a in cases:
        golod_verdict(a, CheckConfig(truncation=4, cross_check=True))


def test_verdict_criterion_restriction(R2):
    x, y = R2.gens()
    v = golod_verdict(Ideal(R2, [x**3 + y**3]), CheckConfig(criterion="strongly-golod"))
    assert v.status == INCONCLUSIVE
    # restricted mode must not run the refuters
    assert all(t["criterion"] == "strongly-golod" for t in v.details["trace"])


def test_verdict_refute_only(R2):
    x, y = R2.gens()
    v = golod_verdict(Ideal(R2, [x * x, y * y]), CheckConfig(criterion="refute-only"))
    assert v.status == REFUTED


def test_proven_implies_zero_defect(R2, rng):
    """Every certificate is consistent with the Poincare evidence."""
    n = maximal_ideal(R2)
    x, y = R2.gens()
    proven_cases = [n**2, n**3, Ideal(R2, [x * x, x * y]) * n]
    for a in proven_cases:
        rep = golod_defect(a, 5)
        assert rep.first_nonzero is None, str(a)
