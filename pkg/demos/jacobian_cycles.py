"""Jacobian representatives of Koszul homology classes (characteristic zero).

The coefficients of certain determinants of partial derivatives of the
minimal-resolution entries are cycles over R = S/c whose classes span the
Koszul homology; in particular they land inside the derivative ideal, which
is the engine behind the derivative-based Golod certificates.
"""

from golod import Ideal, PolyRing, homology_classes, jacobian_cycle_representatives, tor_dimensions


def main():
    R = PolyRing(("x", "y"))
    x, y = R.gens()
    for gens in ([x * x], [x * y], [x * x, y * y], [x * x, x * y, y * y]):
        c = Ideal(R, gens)
        print(f"c = ({', '.join(str(g) for g in c.generators)})")
        betti = tor_dimensions(c)
        for l in range(1, R.d + 1):
            reps = jacobian_cycle_representatives(c, l)
            degs = betti.internal_degrees(l)
            hdim = sum(betti.graded(l, q) for q in degs)
            print(f"  l={l}: {len(reps)} Jacobian cycles, dim H_{l} = {hdim}")
            for z in reps:
                print(f"       {z}")
        print()


if __name__ == "__main__":
    main()
