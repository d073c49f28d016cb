"""The four-variable product benchmark: (x,y,z,w) * (x^2,y^2,z^2,w^2).

Products of ideals need not be Golod.  This quotient is artinian with
Hilbert function (1, 4, 10, 4, 1); the refutation comes from a nonzero
product of two Koszul homology classes in H_2 x H_2 -> H_4 (the top wedge
has no boundaries since K_5 = 0), and independently from a Poincare defect
at index 5.  Both finish in seconds.
"""

import time

from golod import (
    Ideal,
    PolyRing,
    golod_defect,
    homology_algebra_products,
    maximal_ideal,
    tor_dimensions,
)


def main():
    R = PolyRing(("x", "y", "z", "w"))
    x, y, z, w = R.gens()
    sq = Ideal(R, [x * x, y * y, z * z, w * w])
    a = maximal_ideal(R) * sq
    print(f"{len(a.generators)} cubic generators")

    t0 = time.time()
    betti = tor_dimensions(a)
    print("Betti numbers of S/a:", betti.totals(), f"({time.time()-t0:.1f}s)")

    t0 = time.time()
    rep = homology_algebra_products(a)
    w_ = rep.witness
    print(f"\nproduct witness ({time.time()-t0:.1f}s):")
    print("  ", w_["left"][3], " * ", w_["right"][3], " = ", w_["product"])
    print(f"   nonzero in H_{w_['hom_degree']}, internal degree {w_['internal_degree']}")

    t0 = time.time()
    dr = golod_defect(a, 6, stop_at_first_defect=True)
    print(f"\ndefect check ({time.time()-t0:.1f}s):")
    print("   bound  ", dr.bound_coeffs)
    print("   actual ", dr.actual.coefficients)
    print("   first defect index:", dr.first_nonzero)


if __name__ == "__main__":
    main()
