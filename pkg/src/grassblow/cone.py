"""Effective-cone generators on a boundary divisor and interiority certificates.

Two independent routes certify that the restricted anticanonical class lies
in the interior of the cone spanned by the generators:

* :func:`certify_interior` solves ``max t`` subject to
  ``target = sum_g lambda_g g`` and ``lambda_g >= t`` with the exact simplex;
* :func:`delta_certificate` perturbs the stated formula for -K by small
  multiples of two zero-identities until every coefficient is positive.

Both are checked by the same exact re-substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ParameterError, UnsupportedCase, VerificationFailure
from .exact import Fraction, rank
from .grassmann import Parameters
from .lattice import Regime, anticanonical_class, level_and_regime
from .restriction import (
    CORRECTED,
    RestrictedClass,
    _opp,
    _same,
    _signs,
    _step_rhs,
    _sum_rhs,
    anticanonical_stated_terms,
    check_B,
    reduce_restricted,
    relation_pivots,
    restrict,
    symbol,
)

INTERIOR = "Interior"
BOUNDARY = "Boundary"
INFEASIBLE = "Infeasible"

DELTA_DEPTH = 20


@dataclass(frozen=True)
class GeneratorSet:
    params: Parameters
    side: str
    j: int
    generators: tuple[tuple[str, RestrictedClass], ...]

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.generators]

    def reordered(self, order: Sequence[int]) -> "GeneratorSet":
        return GeneratorSet(self.params, self.side, self.j, tuple(self.generators[k] for k in order))


@dataclass(frozen=True)
class InteriorCertificate:
    status: str
    labels: tuple[str, ...]
    coefficients: tuple[Fraction, ...] | None
    slack: Fraction | None
    rank: int
    dimension: int
    method: str
    deltas: tuple[Fraction, Fraction] | None = None

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "method": self.method,
            "slack": self.slack,
            "rank": self.rank,
            "dimension": self.dimension,
            "coefficients": None
            if self.coefficients is None
            else {label: c for label, c in zip(self.labels, self.coefficients)},
            "deltas": None if self.deltas is None else list(self.deltas),
        }


def b_range(regime: Regime, r: int) -> range:
    """Indices m for which the restricted B_m is a separate cone generator."""
    if regime in (Regime.R1, Regime.R3):
        return range(0, r + 1)
    if regime == Regime.R2:
        return range(0, r)
    return range(1, r)


def generator_set(params: Parameters, side: str, j: int) -> GeneratorSet:
    """Boundary symbols other than the normal class, the opposite-side symbols
    that meet D_j, and the restricted B_m's not identified with a boundary divisor."""
    r, regime = level_and_regime(params)
    if r < 3:
        raise UnsupportedCase(f"cone generators are only described for r >= 3 (got r={r})")
    _signs(side)
    if not 1 <= j <= r:
        raise ParameterError(f"j must be in 1..{r}, got {j}")
    gens = []
    for i in range(1, r + 1):
        if i != j:
            label = _same(side, i)
            gens.append((label, symbol(side, j, r, label)))
    for i in range(r + 2 - j, r + 1):
        label = _opp(side, i)
        gens.append((label, symbol(side, j, r, label)))
    for m in b_range(regime, r):
        gens.append((f"B{m}", check_B(params, side, j, m)))
    return GeneratorSet(params, side, j, tuple(gens))


def restricted_anticanonical_target(params: Parameters, side: str, j: int) -> RestrictedClass:
    return restrict(anticanonical_class(params), side, j)


def _coordinates(params: Parameters, vec: RestrictedClass, keep: list[int]) -> list[Fraction]:
    red = reduce_restricted(params, vec).vector()
    return [red[k] for k in keep]


def _kept_positions(gens: GeneratorSet) -> list[int]:
    pivots = set(relation_pivots(gens.params, gens.side, gens.j))
    size = gens.params.r + gens.j
    return [k for k in range(size) if k not in pivots]


def verify_combination(gens: GeneratorSet, target: RestrictedClass, coefficients: Sequence[Fraction]) -> bool:
    """Exact re-substitution: sum coeff * generator equals target modulo relations."""
    total = RestrictedClass.zero(gens.side, gens.j, gens.params.r)
    for (_, g), c in zip(gens.generators, coefficients):
        total = total + g.scale(c)
    return reduce_restricted(gens.params, total - target).is_zero()


def generator_rank(gens: GeneratorSet) -> tuple[int, int]:
    """(rank of the generator matrix, dimension of the restricted lattice mod relations)."""
    keep = _kept_positions(gens)
    mat = [_coordinates(gens.params, g, keep) for _, g in gens.generators]
    return rank(mat), len(keep)


def certify_interior(target: RestrictedClass, gens: GeneratorSet) -> InteriorCertificate:
    """Maximize the smallest coefficient over all representations of ``target``."""
    from .simplex import INFEASIBLE as LP_INFEASIBLE
    from .simplex import UNBOUNDED, solve_lp

    if (target.side, target.j, target.r) != (gens.side, gens.j, gens.params.r):
        raise ParameterError("target and generators live on different boundary divisors")
    keep = _kept_positions(gens)
    cols = [_coordinates(gens.params, g, keep) for _, g in gens.generators]
    rhs = _coordinates(gens.params, target, keep)
    ngen = len(cols)
    rk, dim = rank(cols), len(keep)
    # lambda_g = t + mu_g with mu_g >= 0 and t >= 0
    A = [[cols[g][k] for g in range(ngen)] + [sum((cols[g][k] for g in range(ngen)), Fraction(0))] for k in range(len(keep))]
    cost = [Fraction(0)] * ngen + [Fraction(1)]
    res = solve_lp(cost, A, rhs)
    labels = tuple(gens.labels)
    if res.status == LP_INFEASIBLE:
        return InteriorCertificate(INFEASIBLE, labels, None, None, rk, dim, "lp")
    if res.status == UNBOUNDED:
        raise UnsupportedCase("the generator cone contains a line; interiority is not meaningful")
    t = res.x[-1]
    coeffs = tuple(mu + t for mu in res.x[:-1])
    if not verify_combination(gens, target, coeffs):
        raise VerificationFailure("LP certificate does not re-substitute to the target")
    return InteriorCertificate(INTERIOR if t > 0 else BOUNDARY, labels, coeffs, t, rk, dim, "lp")


def _combine(*weighted_terms) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for weight, terms in weighted_terms:
        for c, label in terms:
            out[label] = out.get(label, Fraction(0)) + weight * c
    return out


def delta_terms(params: Parameters, side: str, j: int, d1: Fraction, d2: Fraction) -> dict[str, Fraction]:
    """Stated -K formula plus d1 * (sum identity) plus d2 * (step identity), by label.

    Each added identity is written as LHS - RHS, which is zero in the class
    group, so the total still represents -K restricted to (side, j).
    """
    r, _ = level_and_regime(params)
    one = Fraction(1)
    pieces = [(one, anticanonical_stated_terms(params, side, j, CORRECTED))]
    if j >= 2 and d1:
        lhs = [(one, _same(side, i)) for i in range(1, j)]
        pieces.append((d1, lhs + [(-c, lab) for c, lab in _sum_rhs(params, side, j, CORRECTED)]))
    if j <= r - 1 and d2:
        lhs = [(one, _same(side, j + 1))]
        pieces.append((d2, lhs + [(-c, lab) for c, lab in _step_rhs(params, side, j)]))
    return _combine(*pieces)


def _delta_schedule(j: int, r: int):
    use1, use2 = j >= 2, j <= r - 1
    pairs = []
    for a in range(1, DELTA_DEPTH + 1) if use1 else [0]:
        for b in range(1, DELTA_DEPTH + 1) if use2 else [0]:
            pairs.append((max(a, b), a, b))
    for _, a, b in sorted(pairs):
        yield (Fraction(1, 2**a) if a else Fraction(0), Fraction(1, 2**b) if b else Fraction(0))


def delta_certificate(params: Parameters, side: str, j: int) -> InteriorCertificate:
    """Explicit strictly positive certificate from two small perturbations.

    Available where the stated -K formula uses every B_m with a positive
    weight (regimes R1 and R3).  The scan tries delta_1, delta_2 in
    {1/2, 1/4, ...} down to 2^-20.
    """
    r, regime = level_and_regime(params)
    if regime not in (Regime.R1, Regime.R3):
        raise UnsupportedCase(f"the explicit delta construction covers regimes R1 and R3, not {regime}")
    gens = generator_set(params, side, j)
    target = restricted_anticanonical_target(params, side, j)
    labels = gens.labels
    rk, dim = generator_rank(gens)
    for d1, d2 in _delta_schedule(j, r):
        combo = delta_terms(params, side, j, d1, d2)
        stray = [lab for lab, c in combo.items() if c and lab not in labels]
        if stray:
            raise VerificationFailure(f"delta construction uses non-generators {stray}")
        coeffs = tuple(combo.get(lab, Fraction(0)) for lab in labels)
        if min(coeffs) > 0:
            if not verify_combination(gens, target, coeffs):
                raise VerificationFailure("delta certificate does not re-substitute to the target")
            return InteriorCertificate(INTERIOR, tuple(labels), coeffs, min(coeffs), rk, dim, "delta", (d1, d2))
    return InteriorCertificate(BOUNDARY, tuple(labels), None, None, rk, dim, "delta")
