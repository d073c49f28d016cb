import pytest

from golod import (
    FreeVector,
    Ideal,
    PolyRing,
    golod_bound_series,
    golod_defect,
    maximal_ideal,
    resolve_residue_field,
    syzygy_module,
)
from golod.groebner import _Basis, _buchberger_core, _module_key

from conftest import random_homogeneous, random_ideal


def slow_residue_field_betti(a, N):
    """Independent oracle: stepwise kernel computation with module Groebner bases.

    Works entirely over S: the step-i kernel over R is {u : phi(u) in a*F},
    computed as a syzygy module of the augmented column list and minimalized
    modulo a*F by incremental membership.  Slow but has no internal-degree
    truncation at all.
    """
    ring = a.ring
    key = _module_key(ring.order)
    agens = list(a.generators)
    coeffs = [1]
    # minimal generators of the maximal ideal of R: variables modulo a
    state0 = _Basis(ring, 1)
    if agens:
        _buchberger_core(state0, [FreeVector.from_poly(g) for g in agens])
    cols = []
    for i in range(ring.d):
        red, _ = state0.divide(FreeVector.from_poly(ring.gen(i)))
        if not red.is_zero():
            cols.append(FreeVector.from_poly(ring.gen(i)))
            _buchberger_core(state0, [FreeVector.from_poly(ring.gen(i))])
    rank_prev = 1
    for _ in range(N):
        coeffs.append(len(cols))
        if not cols:
            continue
        rank = len(cols)
        aug = list(cols)
        for g in agens:
            for comp in range(rank_prev):
                aug.append(FreeVector.from_poly(g, rank=rank_prev, component=comp))
        syz = syzygy_module(aug, ring=ring, minimal=False)
        cand = []
        for s in syz:
            u = FreeVector(ring, rank, {(c, m): v for (c, m), v in s.terms.items() if c < rank})
            u = u.reduce_coefficients(a.gb) if agens else u
            if not u.is_zero():
                cand.append(u)
        # minimal generators modulo a*F: greedy by degree against kept + a-units
        state = _Basis(ring, rank)
        seeds = [FreeVector.from_poly(g, rank=rank, component=comp)
                 for g in agens for comp in range(rank)]
        if seeds:
            _buchberger_core(state, seeds)
        kept = []
        cand.sort(key=lambda v: (v.degree(), key(v.lt(key)[0])))
        for u in cand:
            red, _ = state.divide(u)
            if red.is_zero():
                continue
            kept.append(u)
            _buchberger_core(state, [u])
        rank_prev = rank
        cols = kept
    return coeffs


def test_nsq_doubling(R2):
    n2 = maximal_ideal(R2) ** 2
    assert resolve_residue_field(n2, 4).coefficients == [1, 2, 4, 8, 16]


def test_field_quotient_d1():
    R = PolyRing(("x",))
    x, = R.gens()
    assert resolve_residue_field(Ideal(R, [x]), 4).coefficients == [1, 0, 0, 0, 0]


def test_complete_intersection_linear_growth(R2):
    x, y = R2.gens()
    assert resolve_residue_field(Ideal(R2, [x * x, y * y]), 4).coefficients == [1, 2, 3, 4, 5]


def test_bound_series_examples(R2):
    x, y = R2.gens()
    n2 = maximal_ideal(R2) ** 2
    assert golod_bound_series(n2, 5) == [1, 2, 4, 8, 16, 32]
    assert golod_bound_series(Ideal(R2, [x * x, y * y]), 5) == [1, 2, 3, 5, 8, 13]


def test_bound_series_hypersurface_d1():
    R = PolyRing(("x",))
    x, = R.gens()
    assert golod_bound_series(Ideal(R, [x]), 4) == [1, 1, 1, 1, 1]


def test_defect_examples(R2):
    x, y = R2.gens()
    rep = golod_defect(maximal_ideal(R2) ** 2, 5)
    assert rep.defect == [0] * 6 and rep.first_nonzero is None
    rep_ci = golod_defect(Ideal(R2, [x * x, y * y]), 4)
    assert rep_ci.defect == [0, 0, 0, 1, 3]
    assert rep_ci.first_nonzero == 3


def test_defect_early_stop(R2):
    x, y = R2.gens()
    rep = golod_defect(Ideal(R2, [x * x, y * y]), 6, stop_at_first_defect=True)
    assert rep.first_nonzero == 3
    assert rep.actual.order == 3


def test_b1_is_embedding_codimension(R2):
    x, y = R2.gens()
    # a inside n^2: b_1 = d
    assert resolve_residue_field(maximal_ideal(R2) ** 2, 1).coefficients[1] == 2
    # a with a linear form: b_1 = dim n/(a + n^2)
    assert resolve_residue_field(Ideal(R2, [x]), 1).coefficients[1] == 1


def test_slow_oracle_agreement(R2, rng):
    n = maximal_ideal(R2)
    x, y = R2.gens()
    cases = [n**2, Ideal(R2, [x * x, y * y]), Ideal(R2, [x * x, x * y])]
    for a in cases:
        fast = resolve_residue_field(a, 3).coefficients
        slow = slow_residue_field_betti(a, 3)
        assert fast == slow, f"oracle mismatch for {a}: {fast} vs {slow}"


def test_slow_oracle_agreement_random(R2, rng):
    for _ in range(2):
        a = random_ideal(R2, rng, ngens=2, maxdeg=3)
        fast = resolve_residue_field(a, 3).coefficients
        slow = slow_residue_field_betti(a, 3)
        assert fast == slow


def test_serre_inequality_random(R2, rng):
    for _ in range(4):
        a = random_ideal(R2, rng, ngens=2, maxdeg=3)
        rep = golod_defect(a, 4)
        assert all(v >= 0 for v in rep.defect)


def test_budget_error_carries_partial(R2):
    from golod import BudgetExceededError

    n2 = maximal_ideal(R2) ** 2
    with pytest.raises(BudgetExceededError) as exc:
        resolve_residue_field(n2, 2000, budget_seconds=0.05)
    assert exc.value.partial is not None
    assert exc.value.partial.coefficients[0] == 1


def test_unit_ideal_rejected(R2):
    with pytest.raises(ValueError):
        resolve_residue_field(Ideal(R2, [R2.one()]), 3)
    with pytest.raises(ValueError):
        golod_bound_series(Ideal(R2, [R2.one()]), 3)
