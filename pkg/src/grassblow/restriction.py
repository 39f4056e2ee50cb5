"""Divisor classes restricted to a boundary divisor D-_j or D+_j.

On D-_j the restricted lattice is spanned by H (the restricted hyperplane
class), the same-side symbols D-_1..D-_r (D-_j itself being the normal
class) and the opposite-side symbols D+_i for i >= r+2-j; the other D+_i do
not meet D-_j.  The plus side is the mirror image.

When B_j coincides with a boundary divisor (p = n-s or p = s) the
coincidence gives linear relations among the restricted symbols.  Identities
are therefore checked modulo the span of those restricted relations; with no
coincidence (regimes R1, R3) there are no relations and every check is a
plain vector identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParameterError, UnsupportedCase
from .exact import Fraction, as_fraction
from .grassmann import Parameters
from .lattice import (
    AmbientClass,
    Regime,
    anticanonical_class,
    boundary_relations,
    class_of_B,
    format_combination,
    level_and_regime,
)

MINUS = "minus"
PLUS = "plus"
SIDES = (MINUS, PLUS)


def _signs(side: str) -> tuple[str, str]:
    if side == MINUS:
        return "-", "+"
    if side == PLUS:
        return "+", "-"
    raise ParameterError(f"side must be 'minus' or 'plus', got {side!r}")


def _check_level(r: int, j: int) -> None:
    if not 1 <= j <= r:
        raise ParameterError(f"boundary index j must be in 1..{r}, got {j}")


@dataclass(frozen=True)
class RestrictedClass:
    """Coefficients over (H, same-side D_1..D_r, opposite-side D_{r+2-j}..D_r)."""

    side: str
    j: int
    r: int
    h: Fraction
    d_same: tuple[Fraction, ...]
    d_opp: tuple[Fraction, ...]

    def __post_init__(self):
        _signs(self.side)
        _check_level(self.r, self.j)
        if len(self.d_same) != self.r or len(self.d_opp) != self.j - 1:
            raise ParameterError("coefficient tuples have the wrong length")

    @property
    def opp_range(self) -> range:
        return range(self.r + 2 - self.j, self.r + 1)

    @classmethod
    def zero(cls, side: str, j: int, r: int) -> "RestrictedClass":
        _check_level(r, j)
        return cls(side, j, r, Fraction(0), (Fraction(0),) * r, (Fraction(0),) * (j - 1))

    @classmethod
    def from_vector(cls, side: str, j: int, r: int, vec: Sequence) -> "RestrictedClass":
        vec = [as_fraction(x) for x in vec]
        if len(vec) != r + j:
            raise ParameterError(f"expected {r + j} coefficients, got {len(vec)}")
        return cls(side, j, r, vec[0], tuple(vec[1 : r + 1]), tuple(vec[r + 1 :]))

    def vector(self) -> tuple[Fraction, ...]:
        return (self.h,) + self.d_same + self.d_opp

    def labels(self) -> list[str]:
        return restricted_labels(self.side, self.j, self.r)

    def same(self, i: int) -> Fraction:
        return self.d_same[i - 1]

    def opp(self, i: int) -> Fraction:
        if i in self.opp_range:
            return self.d_opp[i - (self.r + 2 - self.j)]
        return Fraction(0)

    def _check_compatible(self, other: "RestrictedClass") -> None:
        if (self.side, self.j, self.r) != (other.side, other.j, other.r):
            raise ParameterError("restricted classes live on different boundary divisors")

    def __add__(self, other: "RestrictedClass") -> "RestrictedClass":
        self._check_compatible(other)
        return RestrictedClass.from_vector(
            self.side, self.j, self.r, [a + b for a, b in zip(self.vector(), other.vector())]
        )

    def __sub__(self, other: "RestrictedClass") -> "RestrictedClass":
        return self + other.scale(-1)

    def __neg__(self) -> "RestrictedClass":
        return self.scale(-1)

    def scale(self, c) -> "RestrictedClass":
        c = as_fraction(c)
        return RestrictedClass.from_vector(self.side, self.j, self.r, [c * a for a in self.vector()])

    def is_zero(self) -> bool:
        return not any(self.vector())

    def __str__(self) -> str:
        return format_combination(zip(self.labels(), self.vector()))


def restricted_labels(side: str, j: int, r: int) -> list[str]:
    same, opp = _signs(side)
    return (
        ["H"]
        + [f"D{same}{i}" for i in range(1, r + 1)]
        + [f"D{opp}{i}" for i in range(r + 2 - j, r + 1)]
    )


def meets(side: str, j: int, i: int, r: int) -> bool:
    """Whether the opposite-side divisor of index i meets the boundary divisor j."""
    _signs(side)
    return i + j >= r + 2


def restrict(c: AmbientClass, side: str, j: int) -> RestrictedClass:
    """Restrict an ambient class to D-_j (``side="minus"``) or D+_j."""
    r = c.r
    _check_level(r, j)
    same, opp = (c.dminus, c.dplus) if side == MINUS else (c.dplus, c.dminus)
    _signs(side)
    d_opp = tuple(opp[i - 1] for i in range(r + 2 - j, r + 1))
    return RestrictedClass(side, j, r, c.h, tuple(same), d_opp)


def symbol(side: str, j: int, r: int, label: str) -> RestrictedClass:
    """Unit vector for ``"H"``, ``"D-i"`` or ``"D+i"``; zero for symbols that do not meet."""
    out = RestrictedClass.zero(side, j, r)
    labels = restricted_labels(side, j, r)
    if label in labels:
        vec = [Fraction(0)] * len(labels)
        vec[labels.index(label)] = Fraction(1)
        return RestrictedClass.from_vector(side, j, r, vec)
    if label[:2] in ("D-", "D+") and 1 <= int(label[2:]) <= r:
        return out  # opposite-side divisor disjoint from D_j
    raise ParameterError(f"unknown symbol {label!r}")


def check_B(params: Parameters, side: str, j: int, m: int) -> RestrictedClass:
    """Restriction of B_m to the boundary divisor (side, j)."""
    r, _ = level_and_regime(params)
    if not 0 <= m <= r:
        raise ParameterError(f"B_m needs 0 <= m <= r={r}, got m={m}")
    return restrict(class_of_B(params, m), side, j)


def _check_B_or_trivial(params: Parameters, side: str, j: int, m: int) -> RestrictedClass:
    if 0 <= m <= params.r:
        return check_B(params, side, j, m)
    return RestrictedClass.zero(side, j, params.r)


def restricted_relations(params: Parameters, side: str, j: int) -> list[RestrictedClass]:
    return [restrict(rel, side, j) for _, rel in boundary_relations(params)]


def _relation_basis(params: Parameters, side: str, j: int):
    """Reduced echelon basis of the restricted relations.

    Pivots prefer the coinciding boundary symbol itself (D-r or D+r, as
    restricted), then H, then the remaining symbols in label order, so the
    normal form is canonical.
    """
    r = params.r
    labels = restricted_labels(side, j, r)
    priority = [labels.index(x) for x in ("D-%d" % r, "D+%d" % r) if x in labels]
    priority.append(0)
    priority += [k for k in range(len(labels)) if k not in priority]
    basis: list[tuple[int, list[Fraction]]] = []
    for rel in restricted_relations(params, side, j):
        vec = list(rel.vector())
        for piv, row in basis:
            if vec[piv]:
                f = vec[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
        piv = next((k for k in priority if vec[k] != 0), None)
        if piv is None:
            continue
        f = vec[piv]
        vec = [a / f for a in vec]
        new_basis = []
        for q, row in basis:
            if row[piv]:
                g = row[piv]
                row = [a - g * b for a, b in zip(row, vec)]
            new_basis.append((q, row))
        basis = new_basis + [(piv, vec)]
    return basis


def relation_pivots(params: Parameters, side: str, j: int) -> list[int]:
    """Positions (in :func:`restricted_labels` order) eliminated by reduction."""
    return [piv for piv, _ in _relation_basis(params, side, j)]


def reduce_restricted(params: Parameters, c: RestrictedClass) -> RestrictedClass:
    """Normal form of ``c`` modulo the restricted boundary relations."""
    vec = list(c.vector())
    for piv, row in _relation_basis(params, c.side, c.j):
        if vec[piv]:
            f = vec[piv]
            vec = [a - f * b for a, b in zip(vec, row)]
    return RestrictedClass.from_vector(c.side, c.j, c.r, vec)


def equal_mod_relations(params: Parameters, a: RestrictedClass, b: RestrictedClass) -> bool:
    return reduce_restricted(params, a - b).is_zero()


# ---------------------------------------------------------------------------
# Formal combinations of B-checks and boundary symbols.
#
# A term list is a sequence of (coefficient, label) with labels "B<m>" (the
# restricted B_m, zero when m is outside 0..r), "H", "D-i", "D+i".


def evaluate(params: Parameters, side: str, j: int, terms: Iterable[tuple]) -> RestrictedClass:
    r = params.r
    total = RestrictedClass.zero(side, j, r)
    for coef, label in terms:
        if label.startswith("B"):
            vec = _check_B_or_trivial(params, side, j, int(label[1:]))
        else:
            vec = symbol(side, j, r, label)
        total = total + vec.scale(coef)
    return total


def _same(side: str, i: int) -> str:
    return f"D{_signs(side)[0]}{i}"


def _opp(side: str, i: int) -> str:
    return f"D{_signs(side)[1]}{i}"


def _b_coefficients(params: Parameters) -> dict[int, Fraction]:
    s, p, n = params.as_tuple()
    r, regime = level_and_regime(params)
    coef = {m: Fraction(2) for m in range(1, r)}
    coef[0] = Fraction(0 if regime == Regime.R4 else s - p + 1)
    coef[r] = {
        Regime.R1: Fraction(n - s - p + 1),
        Regime.R3: Fraction(p - r + 1),
        Regime.R2: Fraction(0),
        Regime.R4: Fraction(0),
    }[regime]
    return coef


LITERAL = "literal"
CORRECTED = "corrected"


def telescope_terms(params: Parameters, side: str, j: int, reading: str = LITERAL) -> list[tuple]:
    """Right-hand side of sum_{i=1}^{j+1} D_i (same side) as B-checks.

    In regimes R1/R3 at j = r the stated difference involves the trivial
    check B_{r+1} (resp. B_{-1}); the corrected reading uses the neighbouring
    pair instead.
    """
    r, regime = level_and_regime(params)
    _check_level(r, j)
    one = Fraction(1)
    if side == MINUS:
        if regime in (Regime.R1, Regime.R3):
            if j == r and reading == CORRECTED:
                return [(one, f"B{r - 1}"), (-one, f"B{r}")]
            return [(one, f"B{j}"), (-one, f"B{j + 1}")]
        if j <= r - 2:
            return [(one, f"B{j}"), (-one, f"B{j + 1}")]
        return [(one, f"B{r - 1}")]
    if regime in (Regime.R1, Regime.R3):
        if j == r and reading == CORRECTED:
            return [(one, "B1"), (-one, "B0")]
        return [(one, f"B{r - j}"), (-one, f"B{r - j - 1}")]
    if regime == Regime.R2:
        if j <= r - 1:
            return [(one, f"B{r - j}"), (-one, f"B{r - j - 1}")]
        return [(one, "B1"), (-one, "B0")]
    if j <= r - 2:
        return [(one, f"B{r - j}"), (-one, f"B{r - j - 1}")]
    return [(one, "B1")]


def anticanonical_stated_terms(params: Parameters, side: str, j: int, reading: str = LITERAL) -> list[tuple]:
    """The stated formula for -K restricted to (side, j) as a term list."""
    r, _ = level_and_regime(params)
    _check_level(r, j)
    terms = [(c, f"B{m}") for m, c in sorted(_b_coefficients(params).items()) if c]
    terms += telescope_terms(params, side, j, reading)
    terms += [(Fraction(1), _same(side, i)) for i in range(j + 2, r + 1)]
    terms += [(Fraction(1), _opp(side, i)) for i in range(r + 2 - j, r + 1)]
    return terms


def restricted_anticanonical(params: Parameters, side: str, j: int, reading: str = LITERAL):
    """(direct, stated_form) for -K restricted to (side, j).

    ``direct`` restricts the ambient -K symbol by symbol; ``stated_form``
    assembles the stated right-hand side from B-checks and boundary symbols.
    They agree modulo the restricted relations (except where the stated
    form is known to be off; see :func:`identity_suite`).
    """
    r, _ = level_and_regime(params)
    if r < 2:
        raise UnsupportedCase(f"restricted formulas need r >= 2 (got r={r}); the nearest stated case is r >= 3")
    _check_level(r, j)
    direct = restrict(anticanonical_class(params), side, j)
    stated = evaluate(params, side, j, anticanonical_stated_terms(params, side, j, reading))
    return direct, stated


# ---------------------------------------------------------------------------
# Identity suite


HOLDS = "Holds"
DISCREPANCY = "Discrepancy"
NOT_STATED = "NotStated"


@dataclass(frozen=True)
class IdentityResult:
    id: str
    regime: str
    side: str
    j: int
    family: str
    status: str
    residual: RestrictedClass | None
    corrected_residual: RestrictedClass | None = None


def _sum_rhs(params: Parameters, side: str, j: int, reading: str) -> list[tuple] | None:
    """sum_{i<j} D_i (same side) as stated, 2 <= j <= r."""
    r, regime = level_and_regime(params)
    if j < 2:
        return None
    one = Fraction(1)
    if side == MINUS:
        if regime == Regime.R4 and j == 2:
            return [(-one, "B1"), (one, _opp(side, r))]
        return [(one, f"B{j - 2}"), (-one, f"B{j - 1}"), (one, _opp(side, r + 2 - j))]
    if regime in (Regime.R2, Regime.R4) and j == 2:
        # the R4 statement writes the opposite-side symbol with swapped signs
        sym = _same(side, r) if (regime == Regime.R4 and reading == LITERAL) else _opp(side, r)
        return [(-one, f"B{r - 1}"), (one, sym)]
    return [(one, f"B{r + 2 - j}"), (-one, f"B{r + 1 - j}"), (one, _opp(side, r + 2 - j))]


def _step_rhs(params: Parameters, side: str, j: int) -> list[tuple] | None:
    """D_{j+1} (same side) as stated, 1 <= j <= r-1."""
    r, regime = level_and_regime(params)
    if j > r - 1:
        return None
    one, two = Fraction(1), Fraction(2)
    edge = regime in (Regime.R2, Regime.R4)
    if side == MINUS:
        if regime == Regime.R4 and j == 1:
            return [(-one, _opp(side, r)), (two, "B1"), (-one, "B2")]
        if edge and j == r - 1:
            return [(-one, f"B{r - 2}"), (two, f"B{r - 1}")]
        return [(-one, f"B{j - 1}"), (two, f"B{j}"), (-one, f"B{j + 1}")]
    if edge and j == 1:
        return [(-one, _opp(side, r)), (two, f"B{r - 1}"), (-one, f"B{r - 2}")]
    if regime == Regime.R4 and j == r - 1:
        return [(two, "B1"), (-one, "B2")]
    return [(-one, f"B{r + 1 - j}"), (two, f"B{r - j}"), (-one, f"B{r - 1 - j}")]


def _display_terms(params: Parameters, side: str, j: int, m: int) -> list[tuple]:
    """Closed form of the restricted B_m in H and boundary symbols."""
    r, regime = level_and_regime(params)
    one = Fraction(1)
    terms = [(one, "H")]
    if regime in (Regime.R2, Regime.R4) and m == r:
        # B_r coincides with D-_r
        coincide = "D-"
        weights = [(r + 1 - i, i) for i in range(1, r)]
    elif regime == Regime.R4 and m == 0:
        coincide = "D+"
        weights = [(r + 1 - i, i) for i in range(1, r)]
    else:
        coincide = None
    if coincide is not None:
        for w, i in weights:
            terms.append((-Fraction(w), f"{coincide}{i}"))
        return [(c, lab) for c, lab in terms if lab == "H" or _meets_label(side, j, r, lab)]
    # general pattern: high-side weights (r-m+1-i), low-side weights (m+1-i)
    for i in range(1, r - m + 1):
        terms.append((-Fraction(r - m + 1 - i), f"D+{i}"))
    for i in range(1, m + 1):
        terms.append((-Fraction(m + 1 - i), f"D-{i}"))
    return [(c, lab) for c, lab in terms if lab == "H" or _meets_label(side, j, r, lab)]


def _meets_label(side: str, j: int, r: int, label: str) -> bool:
    same, _ = _signs(side)
    return label[1] == same or meets(side, j, int(label[2:]), r)


def _bigness_rhs(params: Parameters, side: str, j: int, which: str, reading: str) -> list[tuple] | None:
    """Zero-identities added with weights delta_1, delta_2 in the bigness argument (R1 display)."""
    r, _ = level_and_regime(params)
    one, two = Fraction(1), Fraction(2)
    if which == "delta1":
        return _sum_rhs(params, side, j, reading)
    if j > r - 1:
        return None
    if side == MINUS:
        return [(-one, f"B{j - 1}"), (two, f"B{j}"), (-one, f"B{j + 1}")]
    first = one if reading == LITERAL else -one
    return [(first, f"B{r + 1 - j}"), (two, f"B{r - j}"), (-one, f"B{r - 1 - j}")]


def _record(params, regime, side, j, family, lhs, rhs_literal, rhs_corrected=None) -> IdentityResult:
    ident = f"{regime}:{side}:{family}:j={j}"
    if rhs_literal is None:
        return IdentityResult(ident, str(regime), side, j, family, NOT_STATED, None)
    res = reduce_restricted(params, lhs - evaluate(params, side, j, rhs_literal))
    corrected = None
    if rhs_corrected is not None and rhs_corrected != rhs_literal:
        corrected = reduce_restricted(params, lhs - evaluate(params, side, j, rhs_corrected))
    status = HOLDS if res.is_zero() else DISCREPANCY
    return IdentityResult(ident, str(regime), side, j, family, status, res, corrected)


def identity_suite(params: Parameters, side: str, j: int) -> list[IdentityResult]:
    """Evaluate every stated identity for (side, j) as LHS - RHS modulo relations.

    Families:
      ``anticanonical``  restricted -K equals its stated B-check form;
      ``expanded``       restricted -K equals B-terms plus all boundary symbols;
      ``sum``            sum_{i<j} D_i in terms of B-checks (2 <= j <= r);
      ``step``           D_{j+1} in terms of B-checks (1 <= j <= r-1);
      ``telescope``      sum_{i<=j+1} D_i as a difference of B-checks;
      ``display:m``      restricted B_m against its closed form;
      ``delta1``/``delta2``  the zero-identities of the bigness argument (R1).
    Where an alternative reading is known, ``corrected_residual`` holds the
    residual under that reading.
    """
    r, regime = level_and_regime(params)
    _signs(side)
    _check_level(r, j)
    if r < 2:
        raise UnsupportedCase(f"identity suite needs r >= 2, got r={r}")
    out = []
    direct = restrict(anticanonical_class(params), side, j)
    lit_terms = anticanonical_stated_terms(params, side, j, LITERAL)
    fix_terms = anticanonical_stated_terms(params, side, j, CORRECTED)
    out.append(_record(params, regime, side, j, "anticanonical", direct, lit_terms, fix_terms))

    one = Fraction(1)
    expanded = [(c, f"B{m}") for m, c in sorted(_b_coefficients(params).items()) if c]
    expanded += [(one, _same(side, i)) for i in range(1, r + 1)]
    expanded += [(one, _opp(side, i)) for i in range(r + 2 - j, r + 1)]
    out.append(_record(params, regime, side, j, "expanded", direct, expanded))

    zero = RestrictedClass.zero(side, j, r)
    sum_lhs = evaluate(params, side, j, [(one, _same(side, i)) for i in range(1, j)])
    out.append(
        _record(params, regime, side, j, "sum", sum_lhs, _sum_rhs(params, side, j, LITERAL), _sum_rhs(params, side, j, CORRECTED))
    )
    step_lhs = evaluate(params, side, j, [(one, _same(side, j + 1))]) if j < r else zero
    out.append(_record(params, regime, side, j, "step", step_lhs, _step_rhs(params, side, j)))

    tele_lhs = evaluate(params, side, j, [(one, _same(side, i)) for i in range(1, min(j + 1, r) + 1)])
    tele_stated = regime in (Regime.R2, Regime.R4) or j <= r - 1
    out.append(
        _record(
            params,
            regime,
            side,
            j,
            "telescope",
            tele_lhs,
            telescope_terms(params, side, j, LITERAL) if tele_stated else None,
        )
    )

    for m in range(r + 1):
        out.append(_record(params, regime, side, j, f"display:{m}", check_B(params, side, j, m), _display_terms(params, side, j, m)))

    if regime == Regime.R1:
        d1 = _bigness_rhs(params, side, j, "delta1", LITERAL)
        out.append(_record(params, regime, side, j, "delta1", sum_lhs, d1))
        d2 = _bigness_rhs(params, side, j, "delta2", LITERAL)
        d2_fixed = _bigness_rhs(params, side, j, "delta2", CORRECTED)
        out.append(_record(params, regime, side, j, "delta2", step_lhs, d2, d2_fixed))
    return out
