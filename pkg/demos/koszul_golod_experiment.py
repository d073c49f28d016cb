"""EXPERIMENT: is every Koszul ideal Golod?

For graded ideals over a polynomial ring this is known (componentwise
linear ideals are Golod); the local analogue is open.  The runner checks,
on a small graded corpus, that every ideal passing the Koszul-module test
also shows a zero Poincare defect up to N = 5.  Evidence, not a theorem.
"""

from golod import (
    Ideal,
    PolyRing,
    golod_defect,
    maximal_ideal,
    sega_koszulness_check,
)


def main():
    R = PolyRing(("x", "y"))
    x, y = R.gens()
    n = maximal_ideal(R)
    # ideals with linear generators are excluded: for them the presentation
    # S -> S/a is not minimal and the Serre bound is strict for other reasons
    corpus = {
        "(x^2, xy)": Ideal(R, [x * x, x * y]),
        "n^2": n**2,
        "(x^2, y^2)": Ideal(R, [x * x, y * y]),
        "(x^3 + y^3)": Ideal(R, [x**3 + y**3]),
        "(x^3, x^2*y)": Ideal(R, [x**3, x * x * y]),
    }
    print("# experiment: Koszul-module test vs Poincare defect (N = 5)")
    for name, a in corpus.items():
        koszul = sega_koszulness_check(a)
        defect = golod_defect(a, 5).first_nonzero
        flag = "consistent" if (not koszul or defect is None) else "COUNTEREXAMPLE?"
        print(f"experiment {name}: koszul-module={koszul} "
              f"first_defect={defect} -> {flag}")
    print("# evidence only: no verdict is emitted by this runner")


if __name__ == "__main__":
    main()
