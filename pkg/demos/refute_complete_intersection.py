"""Refute Golodness of (x^2, y^2) two independent ways.

A complete intersection of two quadrics is the smallest interesting
non-Golod example: its Koszul homology algebra has the nonzero product
[x e_1] * [y e_2] = [xy e_1^e_2], and its Poincare series falls short of
the Golod bound starting at the third Betti number.
"""

from golod import Ideal, PolyRing, golod_defect, homology_algebra_products


def main():
    R = PolyRing(("x", "y"))
    x, y = R.gens()
    a = Ideal(R, [x * x, y * y])

    rep = homology_algebra_products(a)
    print("all homology products vanish:", rep.vanishes)
    w = rep.witness
    print("witness: ", w["left"][3], " * ", w["right"][3], " = ", w["product"],
          f"(nonzero class in H_{w['hom_degree']}, internal degree {w['internal_degree']})")

    dr = golod_defect(a, 6)
    print("\nGolod bound:      ", dr.bound_coeffs)
    print("actual P_k^R:     ", dr.actual.coefficients)
    print("defect:           ", dr.defect)
    print("first defect index:", dr.first_nonzero)
    print("\nFibonacci bound vs linear growth: the gap certifies non-Golodness.")


if __name__ == "__main__":
    main()
