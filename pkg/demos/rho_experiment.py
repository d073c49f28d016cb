"""EXPERIMENT: is the Koszul Artin-Rees number always 1?

Over Q (graded) and in dimension <= 2 this is a theorem; whether it holds
for every ideal of every regular local ring is open.  This runner gathers
bounded evidence over F_p in three variables, where no proof is known.
Output rows are labeled experiment evidence, never verdicts.
"""

import random

from golod import GF, Ideal, PolyRing, rho_estimate


def random_homogeneous(ring, rng, degree):
    monos = ring.monomials_of_degree(degree)
    terms = {}
    for m in rng.sample(monos, k=min(2, len(monos))):
        terms[m] = ring.field.coerce(rng.randrange(1, ring.field.char or 7))
    from golod import Polynomial

    return Polynomial(ring, terms)


def main():
    rng = random.Random(20240809)
    ring = PolyRing(("x", "y", "z"), field=GF(5))
    print("# experiment: bounded rho verification over F_5[x,y,z]")
    print("# (rho = 1 is proven for char 0 and for d <= 2; d = 3 mod p is open)")
    for trial in range(6):
        gens = [random_homogeneous(ring, rng, rng.choice((2, 2, 3))) for _ in range(2)]
        c = Ideal(ring, gens)
        if c.is_unit() or c.is_zero():
            continue
        est = rho_estimate(c, r_max=2, m_max=3)
        print(f"experiment {trial}: c = ({', '.join(str(g) for g in c.generators)}) "
              f"-> r_verified={est.r_verified} at m_max={est.m_max}, "
              f"failures={est.failures or 'none'}")
    print("# evidence only: the quantifier over all powers m stays open")


if __name__ == "__main__":
    main()
