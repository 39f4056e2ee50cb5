"""Walk through the divisor lattice of one canonical blow-up.

Run with ``python3 demos/divisor_classes.py [s p n]`` (default 5 3 9).
"""

import sys

from grassblow import lattice
from grassblow.grassmann import Parameters


def main(argv):
    s, p, n = (int(v) for v in argv) if argv else (5, 3, 9)
    s, p, n, log = lattice.normalize_parameters(s, p, n)
    params = Parameters(s, p, n)
    r, regime = lattice.level_and_regime(params)
    print(f"normalized triple (s,p,n) = {params.as_tuple()}  steps: {', '.join(log) or 'none'}")
    print(f"r = {r}, regime {regime}")

    # B_j for j = 0..r; some of them coincide with a boundary divisor
    for j in range(r + 1):
        tag = lattice.boundary_coincidence(params, j)
        print(f"  B{j} = {lattice.class_of_B(params, j)}" + (f"   (= {tag})" if tag else ""))

    terms = " + ".join(f"{c} {label}" for c, label in lattice.anticanonical_terms(params))
    minus_k = lattice.anticanonical_class(params)
    print(f"-K = {terms}")
    print(f"   = {minus_k}")
    print(f"H-coefficient of -K: {minus_k.h} (n = {n})")
    print(f"G-orbit pairs for r = {r}: {len(lattice.enumerate_orbit_pairs(r))}")


if __name__ == "__main__":
    main(sys.argv[1:])
