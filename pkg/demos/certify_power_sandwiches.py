"""Walk through the power-sandwich certificates on small ideals.

Powers of the maximal ideal, and anything wedged between c^(2m-2) and c^m,
are Golod over Q; this script prints the certificates the library produces
for a few such ideals, together with the Poincare series evidence.
"""

from golod import (
    CheckConfig,
    Ideal,
    PolyRing,
    golod_bound_series,
    golod_verdict,
    lofwall_check,
    maximal_ideal,
    resolve_residue_field,
    sandwich_check,
)


def show(title, verdict):
    print(f"{title}: {verdict.status}"
          + (f"  [{verdict.certificate}]" if verdict.certificate else ""))


def main():
    R = PolyRing(("x", "y"))
    x, y = R.gens()
    n = maximal_ideal(R)

    print("== n^2 in Q[x,y] ==")
    show("lofwall_check(n^2, r=2)", lofwall_check(n**2, 2))
    p = resolve_residue_field(n**2, 8)
    print("P_k^R coefficients:", p.coefficients)
    print("Golod bound:       ", golod_bound_series(n**2, 8))
    print("(equality: the bound is attained, as the certificate promises)")

    print("\n== an ideal between n^4 and n^3 ==")
    a = Ideal(R, [x**3, y**3]) + n**4
    print("generators:", [str(g) for g in a.generators])
    show("sandwich_check(n, a, m=3)", sandwich_check(n, a, 3))

    print("\n== the orchestrator on n^3 ==")
    show("golod_verdict(n^3)", golod_verdict(n**3, CheckConfig(truncation=5)))


if __name__ == "__main__":
    main()
