"""Tour of the chart atlas: chart counts, one chart map, the two independent
ways of recovering coordinates, a small transition sweep and the local
equations of the B_m.

Run with ``python3 demos/chart_atlas.py``.
"""

from grassblow import atlas
from grassblow.exact import RationalSampler
from grassblow.grassmann import Parameters


def main():
    params = Parameters(4, 3, 7)
    for l in atlas.level_range(params):
        print(f"level {l}: {len(atlas.enumerate_charts(params, l))} charts")

    tau = atlas.tau_zero(params, 2)
    pt = atlas.random_chart_point(tau, RationalSampler(3))
    M = atlas.gamma_eval(tau, pt)
    print(f"\ndistinguished level-1 chart: rows {tau.rows}, columns {tau.cols}")
    for row in M.rows:
        print("  " + "  ".join(f"{str(v):>8s}" for v in row))

    by_ratios = atlas.ratio_coordinates(params, 2, M)
    by_elimination = atlas.chart_coordinates(tau, M)
    print(f"Plücker-ratio recovery == row-reduction recovery == input: {by_ratios == by_elimination == pt}")

    charts = atlas.enumerate_charts(params, 1)
    res = atlas.transition_sweep(charts[1], tau, 25, 2024)
    print(f"transition chart 1 -> distinguished chart: {res.consistent}/{res.checked} consistent, routes {dict(res.routes)}")

    # on the distinguished chart each P_{I_m} is a pure pivot monomial, so every rho_m is 1
    print("\nlocal equations rho_m (rho_1 is identically 1 on level-1 charts):")
    other = charts[-1]
    q = atlas.random_chart_point(other, RationalSampler(4))
    for m in atlas.level_range(params):
        print(f"  rho_{m}: distinguished chart {atlas.rho_eval(params, 2, tau, m, pt)}, chart {other.rows}/{other.cols} {atlas.rho_eval(params, 2, other, m, q)}")

    print(f"\nG(4,8) worked example, mismatched entries: {atlas.g48_compare() or 'none'}")


if __name__ == "__main__":
    main()
