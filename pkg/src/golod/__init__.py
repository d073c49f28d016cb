"""Exact certificates and refutations for the Golod property of homogeneous
ideals in polynomial rings over Q or F_p.

Quick tour::

    from golod import PolyRing, Ideal, maximal_ideal, golod_verdict

    R = PolyRing(("x", "y"))
    n = maximal_ideal(R)
    golod_verdict(n**2).status        # 'PROVEN_GOLOD'  (power sandwich)

    x, y = R.gens()
    golod_verdict(Ideal(R, [x*x, y*y]))   # REFUTED: nonzero Koszul homology product
"""

__version__ = "0.1.0"

from .criteria import (
    INCONCLUSIVE,
    PROVEN_GOLOD,
    REFUTED,
    CheckConfig,
    GolodVerdict,
    RhoEstimate,
    componentwise_linear_check,
    golod_verdict,
    lofwall_check,
    product_golod_check,
    prop_cycle_golod_check,
    proven_rho_one,
    rho_estimate,
    sandwich_check,
    sandwich_product_check,
    sega_koszulness_check,
    strongly_golod_check,
    variable_power_checks,
)
from .groebner import (
    BettiTable,
    FreeVector,
    ReducedGB,
    Resolution,
    Submodule,
    buchberger,
    buchberger_tracked,
    minimal_free_resolution,
    minimalize_gens,
    module_equal,
    normal_form,
    syzygy_module,
)
from .ideals import (
    Ideal,
    derivative_ideal,
    ideal_combine,
    ideal_contains,
    ideal_intersection,
    ideal_power,
    ideal_quotient,
    maximal_ideal,
)
from .koszul import (
    HomologyClassSet,
    KoszulComplex,
    TorMapReport,
    cycle_containment_check,
    homology_algebra_products,
    homology_classes,
    induced_tor_map,
    jacobian_cycle_representatives,
    koszul_complex,
    koszul_cycles,
    tor_dimensions,
    zero_map_check,
)
from .poincare import (
    BudgetExceededError,
    DefectReport,
    PoincareTruncation,
    golod_bound_series,
    golod_defect,
    resolve_residue_field,
)
from .poly import (
    GF,
    QQ,
    CharacteristicGateError,
    Polynomial,
    PolyRing,
    partial_derivative,
    poly_arith,
)

__all__ = [name for name in dir() if not name.startswith("_")]
