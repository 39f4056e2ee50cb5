"""Divisor classes on the canonical blow-up, written in the spanning set
(H, D-_1..D-_r, D+_1..D+_r).

H is the pullback of the hyperplane class of G(p, n); D-_i and D+_i are the
2r boundary divisors.  All coefficients are Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import ParameterError
from .exact import Fraction, as_fraction
from .grassmann import Parameters


class Regime(str, Enum):
    R1 = "R1"  # p < n-s <= s
    R2 = "R2"  # p = n-s < s
    R3 = "R3"  # n-s < p < s
    R4 = "R4"  # p = n-s = s

    def __str__(self) -> str:
        return self.value


DUAL = "DUAL"  # p -> n - p
USD = "USD"  # s -> n - s


def normalize_parameters(s: int, p: int, n: int):
    """Move (s, p, n) into the range 2p <= n <= 2s.

    Returns ``(s', p', n', log)`` where log lists the isomorphisms applied.
    Already normalized input comes back unchanged with an empty log.
    """
    Parameters(s, p, n)  # range check
    log = []
    if 2 * p > n:
        p = n - p
        log.append(DUAL)
    if n > 2 * s:
        s = n - s
        log.append(USD)
    return s, p, n, tuple(log)


def normalized(params: Parameters) -> Parameters:
    s, p, n, _ = normalize_parameters(*params.as_tuple())
    return Parameters(s, p, n)


def level_and_regime(params: Parameters) -> tuple[int, Regime]:
    params.require_normalized()
    s, p, n = params.as_tuple()
    r = params.r
    if p < n - s:
        return r, Regime.R1
    if p == n - s:
        return r, (Regime.R2 if p < s else Regime.R4)
    return r, Regime.R3  # n - s < p <= n/2 <= s, and p = s forces p = n - s


@dataclass(frozen=True)
class AmbientClass:
    """Coefficient vector over (H, D-_1..D-_r, D+_1..D+_r)."""

    r: int
    h: Fraction
    dminus: tuple[Fraction, ...]
    dplus: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.dminus) != self.r or len(self.dplus) != self.r:
            raise ParameterError("coefficient tuples must have length r")

    @classmethod
    def zero(cls, r: int) -> "AmbientClass":
        z = (Fraction(0),) * r
        return cls(r, Fraction(0), z, z)

    @classmethod
    def from_vector(cls, r: int, vec: Sequence) -> "AmbientClass":
        vec = [as_fraction(x) for x in vec]
        if len(vec) != 1 + 2 * r:
            raise ParameterError(f"expected {1 + 2 * r} coefficients")
        return cls(r, vec[0], tuple(vec[1 : r + 1]), tuple(vec[r + 1 :]))

    def vector(self) -> tuple[Fraction, ...]:
        return (self.h,) + self.dminus + self.dplus

    def labels(self) -> list[str]:
        return ambient_labels(self.r)

    def __add__(self, other: "AmbientClass") -> "AmbientClass":
        return AmbientClass.from_vector(self.r, [a + b for a, b in zip(self.vector(), other.vector())])

    def __sub__(self, other: "AmbientClass") -> "AmbientClass":
        return self + other.scale(-1)

    def __neg__(self) -> "AmbientClass":
        return self.scale(-1)

    def scale(self, c) -> "AmbientClass":
        c = as_fraction(c)
        return AmbientClass.from_vector(self.r, [c * a for a in self.vector()])

    def is_zero(self) -> bool:
        return not any(self.vector())

    def __str__(self) -> str:
        return format_combination(zip(self.labels(), self.vector()))


def ambient_labels(r: int) -> list[str]:
    return ["H"] + [f"D-{i}" for i in range(1, r + 1)] + [f"D+{i}" for i in range(1, r + 1)]


def format_combination(pairs) -> str:
    parts = []
    for label, c in pairs:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        parts.append(f"{sign} {label}" if mag == 1 else f"{sign} {mag}*{label}")
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def hyperplane(r: int) -> AmbientClass:
    zeros = (Fraction(0),) * r
    return AmbientClass(r, Fraction(1), zeros, zeros)


def boundary(r: int, sign: str, i: int) -> AmbientClass:
    """The class of D-_i (sign ``"-"``) or D+_i (sign ``"+"``)."""
    if not 1 <= i <= r:
        raise ParameterError(f"boundary index must be in 1..{r}, got {i}")
    vec = [0] * (1 + 2 * r)
    vec[i if sign == "-" else r + i] = 1
    return AmbientClass.from_vector(r, vec)


def _b_general(r: int, j: int) -> AmbientClass:
    vec = [Fraction(0)] * (1 + 2 * r)
    vec[0] = Fraction(1)
    for i in range(1, r - j + 1):
        vec[r + i] -= r - j + 1 - i
    for i in range(1, j + 1):
        vec[i] -= j + 1 - i
    return AmbientClass.from_vector(r, vec)


def boundary_coincidence(params: Parameters, j: int) -> str | None:
    """Which boundary divisor B_j equals, if any.

    B_0 is D+_r when p = s and B_r is D-_r when p = n - s.
    """
    s, p, n = params.require_normalized().as_tuple()
    if j == 0 and p == s:
        return "D+r"
    if j == params.r and p == n - s:
        return "D-r"
    return None


def class_of_B(params: Parameters, j: int) -> AmbientClass:
    """Class of the strict transform of {P_{I_j} = 0}.

    In general B_j = H - sum_{i<=r-j} (r-j+1-i) D+_i - sum_{i<=j} (j+1-i) D-_i.
    When B_j coincides with a boundary divisor the top term is dropped and
    the remaining weights shift up by one (see :func:`boundary_coincidence`).
    """
    params.require_normalized()
    r = params.r
    if not 0 <= j <= r:
        raise ParameterError(f"B_j needs 0 <= j <= r={r}, got j={j}")
    coincide = boundary_coincidence(params, j)
    if coincide is None:
        return _b_general(r, j)
    vec = [Fraction(0)] * (1 + 2 * r)
    vec[0] = Fraction(1)
    offset = r if coincide == "D+r" else 0
    for i in range(1, r):
        vec[offset + i] -= r + 1 - i
    return AmbientClass.from_vector(r, vec)


def boundary_relations(params: Parameters) -> list[tuple[str, AmbientClass]]:
    """Zero classes coming from B_j coinciding with a boundary divisor.

    Each entry is (pivot label, relation) with the relation having
    coefficient 1 on the pivot symbol.
    """
    r = params.r
    rels = []
    if boundary_coincidence(params, r) == "D-r":
        rels.append((f"D-{r}", boundary(r, "-", r) - class_of_B(params, r)))
    if boundary_coincidence(params, 0) == "D+r":
        rels.append((f"D+{r}", boundary(r, "+", r) - class_of_B(params, 0)))
    return rels


def reduce_ambient(params: Parameters, c: AmbientClass) -> AmbientClass:
    """Rewrite ``c`` without the boundary symbols that coincide with some B_j."""
    labels = ambient_labels(params.r)
    for pivot, rel in boundary_relations(params):
        k = labels.index(pivot)
        coef = c.vector()[k]
        if coef:
            c = c - rel.scale(coef)
    return c


def anticanonical_terms(params: Parameters) -> list[tuple[Fraction, str]]:
    """-K as a combination of B_j's and boundary divisors, before expansion."""
    s, p, n = params.as_tuple()
    r, regime = level_and_regime(params)
    terms: list[tuple[Fraction, str]] = []
    if regime in (Regime.R1, Regime.R2, Regime.R3):
        terms.append((Fraction(s - p + 1), "B0"))
    for j in range(1, r):
        terms.append((Fraction(2), f"B{j}"))
    if regime == Regime.R1:
        terms.append((Fraction(n - s - p + 1), f"B{r}"))
    elif regime == Regime.R3:
        terms.append((Fraction(p - r + 1), f"B{r}"))
    terms += [(Fraction(1), f"D-{i}") for i in range(1, r + 1)]
    terms += [(Fraction(1), f"D+{i}") for i in range(1, r + 1)]
    return terms


def _expand_term(params: Parameters, label: str) -> AmbientClass:
    if label.startswith("B"):
        return class_of_B(params, int(label[1:]))
    return boundary(params.r, label[1], int(label[2:]))


def anticanonical_class(params: Parameters) -> AmbientClass:
    """-K expanded in (H, D-, D+), with coinciding boundary symbols eliminated.

    After elimination the H coefficient is n.
    """
    total = AmbientClass.zero(params.r)
    for coef, label in anticanonical_terms(params):
        total = total + _expand_term(params, label).scale(coef)
    return reduce_ambient(params, total)


def canonical_class(params: Parameters) -> AmbientClass:
    """K itself (the negative of :func:`anticanonical_class`)."""
    return -anticanonical_class(params)


def enumerate_orbit_pairs(r: int) -> list[tuple[frozenset, frozenset]]:
    """Pairs (I-, I+) of subsets of 1..r with min(I-) + min(I+) >= r + 2.

    min of the empty set counts as infinity, so (∅, ∅) is always included.
    Order: by the bitmask of I-, then of I+.
    """
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"need r >= 1, got {r}")
    subsets = [frozenset(i + 1 for i in range(r) if mask >> i & 1) for mask in range(1 << r)]
    inf = float("inf")
    out = []
    for a in subsets:
        for b in subsets:
            if min(a, default=inf) + min(b, default=inf) >= r + 2:
                out.append((a, b))
    return out
