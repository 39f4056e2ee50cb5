"""Certify that -K restricted to every boundary divisor is interior to the
cone of effective generators, once by exact LP and once by the explicit
two-parameter perturbation (regimes R1 and R3).

Run with ``python3 demos/bigness_certificates.py``.
"""

from grassblow import cone, lattice
from grassblow.fixtures import load_fixtures
from grassblow.grassmann import Parameters
from grassblow.restriction import SIDES


def show(cert):
    coeffs = ", ".join(f"{lab}:{c}" for lab, c in zip(cert.labels, cert.coefficients or ()))
    return f"{cert.status:8s} min coeff {cert.slack}  [{coeffs}]"


def main():
    for name, triple in sorted(load_fixtures()["triples"].items()):
        params = Parameters(*triple)
        r, regime = lattice.level_and_regime(params)
        print(f"{name}: (s,p,n) = {tuple(triple)}, r = {r}")
        for side in SIDES:
            for j in range(1, r + 1):
                gens = cone.generator_set(params, side, j)
                target = cone.restricted_anticanonical_target(params, side, j)
                lp = cone.certify_interior(target, gens)
                rk, dim = cone.generator_rank(gens)
                print(f"  D{'+' if side == 'plus' else '-'}{j}  rank {rk}/{dim}  lp    {show(lp)}")
                if regime in (lattice.Regime.R1, lattice.Regime.R3):
                    d = cone.delta_certificate(params, side, j)
                    print(f"  {'':16s}delta {show(d)}  deltas {tuple(str(x) for x in d.deltas)}")


if __name__ == "__main__":
    main()
