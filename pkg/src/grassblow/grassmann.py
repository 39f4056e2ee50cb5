"""Plücker combinatorics on G(p, n) split by a parameter s.

Columns 1..s are the "low" coordinates and s+1..n the "high" ones.  An index
tuple is stored strictly decreasing, largest entry first, and its block is the
number of entries above s.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import NormalizationRequired, ParameterError, RankError
from .exact import ExactMatrix, Fraction, as_fraction, det, integer_det, integer_rows, rank

LISTED = "listed"
ASCENDING = "ascending"
SIGN_CONVENTIONS = (LISTED, ASCENDING)

IndexTuple = tuple[int, ...]


@dataclass(frozen=True)
class Parameters:
    s: int
    p: int
    n: int

    def __post_init__(self):
        for name in ("s", "p", "n"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise ParameterError(f"{name} must be an integer")
        if not (0 < self.p < self.n and 0 < self.s < self.n):
            raise ParameterError(
                f"parameters out of range: need 0 < p < n and 0 < s < n, got (s,p,n)=({self.s},{self.p},{self.n})"
            )

    @property
    def r(self) -> int:
        return min(self.s, self.n - self.s, self.p, self.n - self.p)

    @property
    def is_normalized(self) -> bool:
        return 2 * self.p <= self.n <= 2 * self.s

    def require_normalized(self) -> "Parameters":
        if not self.is_normalized:
            raise NormalizationRequired(
                f"(s,p,n)=({self.s},{self.p},{self.n}) violates 2p <= n <= 2s; normalize first"
            )
        return self

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.s, self.p, self.n)


def _check_sign(convention: str) -> None:
    if convention not in SIGN_CONVENTIONS:
        raise ParameterError(f"unknown sign convention {convention!r}")


@lru_cache(maxsize=None)
def _plucker_indices(p: int, n: int) -> tuple[IndexTuple, ...]:
    return tuple(sorted(tuple(sorted(c, reverse=True)) for c in combinations(range(1, n + 1), p)))


def enumerate_plucker_indices(p: int, n: int) -> list[IndexTuple]:
    """All strictly decreasing p-tuples from 1..n, in lexicographic order."""
    if not (isinstance(p, int) and isinstance(n, int)) or not 0 < p <= n:
        raise ParameterError(f"need 0 < p <= n, got p={p}, n={n}")
    return list(_plucker_indices(p, n))


def block_of_index(I: Sequence[int], s: int) -> int:
    """Number of entries of ``I`` strictly greater than ``s``."""
    return sum(1 for i in I if i > s)


def block_size(params: Parameters, k: int) -> int:
    s, p, n = params.as_tuple()
    return comb(s, p - k) * comb(n - s, k)


def indices_in_block(params: Parameters, k: int) -> list[IndexTuple]:
    return [I for I in _plucker_indices(params.p, params.n) if block_of_index(I, params.s) == k]


def _validate_index(I: Sequence[int], p: int, n: int) -> IndexTuple:
    I = tuple(I)
    if len(I) != p or any(not 1 <= i <= n for i in I) or any(a <= b for a, b in zip(I, I[1:])):
        raise ParameterError(f"{I} is not a strictly decreasing {p}-tuple from 1..{n}")
    return I


def plain_index(params: Parameters, k: int) -> IndexTuple:
    """I_k = (s+k, s+k-1, ..., s-p+k+1)."""
    s, p, _ = params.as_tuple()
    if not 0 <= k <= p:
        raise ParameterError(f"plain index needs 0 <= k <= p, got k={k}")
    I = tuple(range(s + k, s - p + k, -1))
    return _validate_index(I, p, params.n)


def special_index(kind: str, params: Parameters, k: int, mu: int | None = None, nu: int | None = None) -> IndexTuple:
    """The special indices around I_k used by the chart recovery formulas.

    ``plain``: I_k.  ``star``: I_k with its top entry raised by one and its
    bottom entry lowered by one.  ``swap_low``/``swap_high``: I_k with the
    entry ``mu`` replaced by ``nu`` and the result re-sorted.
    """
    s, p, n = params.as_tuple()
    if kind == "plain":
        return plain_index(params, k)
    if kind == "star":
        if not 1 <= k <= p - 1:
            raise ParameterError(f"star index needs 1 <= k <= p-1, got k={k}")
        base = list(plain_index(params, k))
        base[0] += 1
        base[-1] -= 1
        return _validate_index(base, p, n)
    if kind not in ("swap_low", "swap_high"):
        raise ParameterError(f"unknown special index kind {kind!r}")
    if not 0 <= k <= p:
        raise ParameterError(f"swap index needs 0 <= k <= p, got k={k}")
    if mu is None or nu is None:
        raise ParameterError("swap indices need mu and nu")
    if kind == "swap_low":
        mu_range, nu_range = (s - p + k + 1, s), (1, s - p + k)
    else:
        mu_range, nu_range = (s + 1, s + k), (s + k + 1, n)
    if not mu_range[0] <= mu <= mu_range[1] or not nu_range[0] <= nu <= nu_range[1]:
        raise ParameterError(
            f"{kind} at k={k} needs mu in {list(mu_range)} and nu in {list(nu_range)}, got mu={mu}, nu={nu}"
        )
    entries = [i for i in plain_index(params, k) if i != mu] + [nu]
    return _validate_index(sorted(entries, reverse=True), p, n)


def convention_sign(p: int, convention: str) -> int:
    """Factor relating the ascending-order minor to the listed-order minor."""
    _check_sign(convention)
    if convention == LISTED:
        return 1
    return -1 if (p * (p - 1) // 2) % 2 else 1


def plucker_minor(M: ExactMatrix, I: Sequence[int], convention: str = LISTED) -> Fraction:
    """Minor on the columns of ``I``.

    With the ``listed`` convention the columns are taken in the stored
    (decreasing) order; ``ascending`` takes them increasing.
    """
    _check_sign(convention)
    I = _validate_index(I, M.nrows, M.ncols)
    cols = I if convention == LISTED else tuple(reversed(I))
    return det(M.submatrix(cols))


def plucker_vector(M: ExactMatrix, convention: str = LISTED) -> tuple[Fraction, ...]:
    """All maximal minors in the order of :func:`enumerate_plucker_indices`.

    Rows are scaled to integers once so that each minor is an integer
    determinant; the common scale is divided out at the end.
    """
    ints, scale = _integer_plucker(M, convention)
    return tuple(Fraction(d, scale) for d in ints)


def _integer_plucker(M: ExactMatrix, convention: str) -> tuple[list[int], int]:
    _check_sign(convention)
    rows, scale = integer_rows(M.rows)
    out = []
    for I in _plucker_indices(M.nrows, M.ncols):
        cols = I if convention == LISTED else tuple(reversed(I))
        out.append(integer_det([[row[c - 1] for c in cols] for row in rows]))
    return out, scale


def projective_plucker(M: ExactMatrix, convention: str = LISTED) -> tuple[int, ...]:
    """An integer vector proportional to the Plücker vector (row denominators cleared)."""
    return tuple(_integer_plucker(M, convention)[0])


def projectively_equal(u: Sequence[Fraction], v: Sequence[Fraction]):
    """Compare two coordinate vectors up to a nonzero scalar.

    Returns ``(True, None)`` or ``(False, (a, b))`` where (a, b) is the first
    coordinate pair with u_a v_b != u_b v_a (or a support mismatch).  Only
    products are used, never division.
    """
    if len(u) != len(v):
        raise ParameterError("vectors of different length")
    ref = next((k for k, x in enumerate(u) if x != 0), None)
    if ref is None:
        other = next((k for k, x in enumerate(v) if x != 0), None)
        return (other is None, None if other is None else (other, other))
    if v[ref] == 0:
        return False, (ref, ref)
    for i in range(len(u)):
        if u[i] * v[ref] != v[i] * u[ref]:
            return False, (i, ref)
    return True, None


TRIVIAL = "trivial"
UNDEFINED = "undefined"
DEFINED = "defined"


@dataclass(frozen=True)
class Factor:
    block: int | None  # None for the full Plücker vector
    indices: tuple[IndexTuple, ...]
    coords: tuple[Fraction, ...]
    status: str


@dataclass(frozen=True)
class MultiProjectivePoint:
    factors: tuple[Factor, ...]

    def same_point(self, other: "MultiProjectivePoint") -> bool:
        if len(self.factors) != len(other.factors):
            return False
        for a, b in zip(self.factors, other.factors):
            if a.status != b.status:
                return False
            if a.status == DEFINED and not projectively_equal(a.coords, b.coords)[0]:
                return False
        return True


def canonical_map_image(M: ExactMatrix, s: int, convention: str = LISTED) -> MultiProjectivePoint:
    """Full Plücker vector followed by its restriction to every block.

    A block with at most one index is a point factor and is marked trivial;
    a block whose coordinates all vanish is marked undefined (the map is not
    defined there).  Nothing is rescaled.
    """
    p, n = M.shape
    params = Parameters(s, p, n) if p < n else None
    if params is None:
        raise ParameterError("need p < n")
    if M.rank() < p:
        raise RankError(f"matrix has rank {M.rank()} < {p}")
    indices = _plucker_indices(p, n)
    values = {I: plucker_minor(M, I, convention) for I in indices}
    factors = [Factor(None, indices, tuple(values[I] for I in indices), DEFINED)]
    for k in range(p + 1):
        idx = tuple(I for I in indices if block_of_index(I, s) == k)
        coords = tuple(values[I] for I in idx)
        if len(idx) <= 1:
            status = TRIVIAL
        elif all(c == 0 for c in coords):
            status = UNDEFINED
        else:
            status = DEFINED
        factors.append(Factor(k, idx, coords, status))
    return MultiProjectivePoint(tuple(factors))


@dataclass(frozen=True)
class StratumRecord:
    p: int
    dim_low: int
    dim_high: int
    generic: bool
    flags: dict = field(default_factory=dict, compare=False)

    def in_minus(self, l: int) -> bool:
        return self.dim_low == self.p - l

    def in_plus(self, l: int) -> bool:
        return self.dim_high == l

    def in_stratum(self, l: int) -> bool:
        return self.in_minus(l) and self.in_plus(l)


def stratum_classify(M: ExactMatrix, s: int) -> StratumRecord:
    """Dimensions of the row space meeting the low and the high coordinate spaces."""
    p, n = M.shape
    if not 0 < s < n:
        raise ParameterError(f"need 0 < s < n, got s={s}")
    if M.rank() < p:
        raise RankError(f"matrix has rank {M.rank()} < {p}")
    rank_high_part = rank([row[s:] for row in M.rows])
    rank_low_part = rank([row[:s] for row in M.rows])
    dim_low = p - rank_high_part
    dim_high = p - rank_low_part
    generic = dim_low == max(0, p - (n - s)) and dim_high == max(0, p - s)
    flags = {
        "minus": [l for l in range(p + 1) if dim_low == p - l],
        "plus": [l for l in range(p + 1) if dim_high == l],
    }
    flags["both"] = [l for l in flags["minus"] if l in flags["plus"]]
    flags["generic"] = generic
    return StratumRecord(p, dim_low, dim_high, generic, flags)


def generic_point(params: Parameters) -> ExactMatrix:
    """Explicit point on which every P_{I_j}, 0 <= j <= r, is nonzero."""
    params.require_normalized()
    s, p, n = params.as_tuple()
    r = params.r
    rows = [[0] * n for _ in range(p)]
    if p <= n - s:
        # (0 | I_p | I_p | 0): identities on columns s-p+1..s and s+1..s+p
        for i in range(p):
            rows[i][s - p + i] = 1
            rows[i][s + i] = 1
    else:
        # r = n - s < p: the first r rows meet both sides, the rest stay low
        for i in range(r):
            rows[i][s - p + i] = 1
            rows[i][s + i] = 1
        for i in range(r, p):
            rows[i][s - p + i] = 1
    return ExactMatrix(rows)


def torus_scale(M: ExactMatrix, s: int, lam) -> ExactMatrix:
    """Multiply the high columns s+1..n by ``lam``."""
    lam = as_fraction(lam)
    if lam == 0:
        raise ParameterError("the torus parameter must be nonzero")
    if not 0 < s < M.ncols:
        raise ParameterError(f"need 0 < s < n, got s={s}")
    return ExactMatrix([[x if c < s else lam * x for c, x in enumerate(row)] for row in M.rows])
