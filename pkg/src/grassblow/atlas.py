"""Cascade coordinate charts on the canonical blow-up.

A chart at level l is indexed by pivot positions: h = min(p, n-s) - l "high"
pivots (row in l+1..p, column in s+l+1..n) and l "low" pivots (row in 1..l,
column in 1..s-p+l).  Its coordinates are a free block X (top rows, high
columns), a free block Y (bottom rows, low columns) and one vector per pivot:
the pivot value followed by the entries of the rank-one cascade term along
its column and its row.  The map :func:`gamma_eval` assembles the p x n
matrix representative; the identity blocks sit on the columns of I_l.

Two independent recoveries go the other way:

* :func:`chart_coordinates` works for any chart: bring the matrix to the
  frame of I_l by row operations and peel off the cascades one pivot at a
  time;
* :func:`ratio_coordinates` covers the distinguished chart tau_0 of level
  j-1 and reads every coordinate off as a ratio of Plücker minors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

from .errors import IndeterminacyError, ParameterError, UnsupportedCase
from .exact import ExactMatrix, Fraction, RationalSampler, as_fraction, inverse, matmul
from .grassmann import (
    LISTED,
    Parameters,
    plain_index,
    plucker_minor,
    projective_plucker,
    projectively_equal,
    special_index,
)


def level_range(params: Parameters) -> range:
    params.require_normalized()
    return range(0, min(params.n - params.s, params.p) + 1)


def _check_level(params: Parameters, l: int) -> None:
    if l not in level_range(params):
        raise ParameterError(f"chart level l must be in 0..{min(params.n - params.s, params.p)}, got {l}")


@dataclass(frozen=True)
class ChartIndex:
    """Pivot positions of one chart: ``rows[k]``, ``cols[k]`` for k = 1..h+l.

    The first h pairs are high pivots, the last l pairs low pivots.
    """

    params: Parameters
    l: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        s, p, n = self.params.require_normalized().as_tuple()
        _check_level(self.params, self.l)
        h, l = self.high_count, self.l
        if len(self.rows) != h + l or len(self.cols) != h + l:
            raise ParameterError(f"a level-{l} chart needs {h + l} pivots")
        hi_rows, lo_rows = self.rows[:h], self.rows[h:]
        hi_cols, lo_cols = self.cols[:h], self.cols[h:]
        ok = (
            all(l + 1 <= i <= p for i in hi_rows)
            and all(s + l + 1 <= c <= n for c in hi_cols)
            and all(1 <= i <= l for i in lo_rows)
            and all(1 <= c <= s - p + l for c in lo_cols)
        )
        distinct = all(len(set(x)) == len(x) for x in (hi_rows, lo_rows, hi_cols, lo_cols))
        if not (ok and distinct):
            raise ParameterError(f"pivot rows {self.rows} / cols {self.cols} violate the level-{l} constraints")

    @property
    def high_count(self) -> int:
        return min(self.params.p, self.params.n - self.params.s) - self.l

    def high_pivots(self) -> list[tuple[int, int]]:
        h = self.high_count
        return list(zip(self.rows[:h], self.cols[:h]))

    def low_pivots(self) -> list[tuple[int, int]]:
        h = self.high_count
        return list(zip(self.rows[h:], self.cols[h:]))

    def blocks(self):
        """(high rows, high columns, low rows, low columns) of the cascade blocks."""
        s, p, n = self.params.as_tuple()
        l = self.l
        return (
            list(range(l + 1, p + 1)),
            list(range(s + l + 1, n + 1)),
            list(range(1, l + 1)),
            list(range(1, s - p + l + 1)),
        )


def enumerate_charts(params: Parameters, l: int) -> list[ChartIndex]:
    """Every chart of level l, in a fixed order."""
    params.require_normalized()
    _check_level(params, l)
    s, p, n = params.as_tuple()
    h = min(p, n - s) - l
    hi_rows = permutations(range(l + 1, p + 1), h)
    hi_cols = list(permutations(range(s + l + 1, n + 1), h))
    lo_rows = list(permutations(range(1, l + 1), l))
    lo_cols = list(permutations(range(1, s - p + l + 1), l))
    out = []
    for a, b, c, d in product(list(hi_rows), hi_cols, lo_rows, lo_cols):
        out.append(ChartIndex(params, l, a + c, b + d))
    return out


@dataclass(frozen=True)
class Cascade:
    """One pivot vector: the pivot value and the off-pivot entries of its
    rank-one term, keyed by column (``col_xi``) and by row (``row_xi``)."""

    pivot: Fraction
    col_xi: tuple[tuple[int, Fraction], ...]
    row_xi: tuple[tuple[int, Fraction], ...]

    def count(self) -> int:
        return 1 + len(self.col_xi) + len(self.row_xi)


@dataclass(frozen=True)
class ChartPoint:
    X: tuple[tuple[Fraction, ...], ...]  # l x (n-s-l), columns s+l+1..n
    Y: tuple[tuple[Fraction, ...], ...]  # (p-l) x (s-p+l), columns 1..s-p+l
    cascades: tuple[Cascade, ...]

    def coordinate_count(self) -> int:
        return sum(len(r) for r in self.X) + sum(len(r) for r in self.Y) + sum(c.count() for c in self.cascades)

    def flat(self) -> tuple[Fraction, ...]:
        out = [x for r in self.X for x in r] + [y for r in self.Y for y in r]
        for c in self.cascades:
            out.append(c.pivot)
            out += [v for _, v in c.col_xi] + [v for _, v in c.row_xi]
        return tuple(out)


def _cascade_shapes(tau: ChartIndex):
    """Per pivot: (row, col, free columns, free rows, is_high)."""
    hi_r, hi_c, lo_r, lo_c = tau.blocks()
    shapes = []
    for pivots, rows, cols, high in ((tau.high_pivots(), hi_r, hi_c, True), (tau.low_pivots(), lo_r, lo_c, False)):
        used_r, used_c = [], []
        for i, c in pivots:
            used_r.append(i)
            used_c.append(c)
            shapes.append(
                (i, c, [x for x in cols if x not in used_c], [t for t in rows if t not in used_r], high)
            )
    return shapes


def _build_point(tau: ChartIndex, draw) -> ChartPoint:
    s, p, n = tau.params.as_tuple()
    l = tau.l
    X = tuple(tuple(draw("x") for _ in range(n - s - l)) for _ in range(l))
    Y = tuple(tuple(draw("y") for _ in range(s - p + l)) for _ in range(p - l))
    cascades = []
    for _, _, free_c, free_r, _ in _cascade_shapes(tau):
        pivot = draw("pivot")
        cascades.append(
            Cascade(pivot, tuple((c, draw("xi")) for c in free_c), tuple((t, draw("xi")) for t in free_r))
        )
    return ChartPoint(X, Y, tuple(cascades))


def zero_point(tau: ChartIndex) -> ChartPoint:
    return _build_point(tau, lambda kind: Fraction(0))


def random_chart_point(tau: ChartIndex, sampler: RationalSampler, all_nonzero: bool = True) -> ChartPoint:
    """Seeded point; pivots are always nonzero, other entries too unless ``all_nonzero`` is False."""
    return _build_point(tau, lambda kind: sampler.rational(nonzero=all_nonzero or kind == "pivot"))


def chart_point_from_values(tau: ChartIndex, values: Sequence) -> ChartPoint:
    """Fill a chart point from a flat list in the order of :meth:`ChartPoint.flat`."""
    it = iter([as_fraction(v) for v in values])

    def draw(kind):
        v = next(it, None)
        if v is None:
            raise ParameterError("not enough coordinate values for this chart")
        return v

    pt = _build_point(tau, draw)
    if next(it, None) is not None:
        raise ParameterError("too many coordinate values for this chart")
    return pt


def _check_shape(tau: ChartIndex, pt: ChartPoint) -> None:
    s, p, n = tau.params.as_tuple()
    l = tau.l
    shapes = _cascade_shapes(tau)
    ok = (
        len(pt.X) == l
        and all(len(r) == n - s - l for r in pt.X)
        and len(pt.Y) == p - l
        and all(len(r) == s - p + l for r in pt.Y)
        and len(pt.cascades) == len(shapes)
    )
    if ok:
        for cas, (_, _, free_c, free_r, _) in zip(pt.cascades, shapes):
            if [c for c, _ in cas.col_xi] != free_c or [t for t, _ in cas.row_xi] != free_r:
                ok = False
    if not ok:
        raise ParameterError("chart point shape does not match the chart index")


def base_frame(params: Parameters, l: int) -> list[list[Fraction]]:
    """The matrix with only the two identity blocks of level l."""
    s, p, n = params.as_tuple()
    rows = [[Fraction(0)] * n for _ in range(p)]
    for t in range(1, l + 1):
        rows[t - 1][s + t - 1] = Fraction(1)
    for t in range(l + 1, p + 1):
        rows[t - 1][s - p + t - 1] = Fraction(1)
    return rows


def gamma_eval(tau: ChartIndex, pt: ChartPoint) -> ExactMatrix:
    """Matrix representative of the chart point."""
    _check_shape(tau, pt)
    s, p, n = tau.params.as_tuple()
    l = tau.l
    rows = base_frame(tau.params, l)
    for a, t in enumerate(range(1, l + 1)):
        for b, c in enumerate(range(s + l + 1, n + 1)):
            rows[t - 1][c - 1] += pt.X[a][b]
    for a, t in enumerate(range(l + 1, p + 1)):
        for b, c in enumerate(range(1, s - p + l + 1)):
            rows[t - 1][c - 1] += pt.Y[a][b]
    prod = {True: Fraction(1), False: Fraction(1)}
    for cas, (i, j, free_c, free_r, high) in zip(pt.cascades, _cascade_shapes(tau)):
        prod[high] *= cas.pivot
        weight = prod[high]
        if weight == 0:
            continue
        xi = {i: Fraction(1), **dict(cas.row_xi)}
        om = {j: Fraction(1), **dict(cas.col_xi)}
        for t, u in xi.items():
            if u:
                for c, v in om.items():
                    rows[t - 1][c - 1] += weight * u * v
    return ExactMatrix(rows)


def frame_columns(params: Parameters, l: int) -> list[int]:
    """Columns of I_l, ordered so that the k-th one carries the identity of row k."""
    s, p, _ = params.as_tuple()
    return [s + t for t in range(1, l + 1)] + [s - p + t for t in range(l + 1, p + 1)]


def to_frame(params: Parameters, l: int, M: ExactMatrix) -> list[list[Fraction]]:
    """Row-reduce M so that the columns of I_l form the identity layout of level l."""
    cols = frame_columns(params, l)
    S = M.submatrix(cols)
    try:
        g = inverse(S)
    except ZeroDivisionError:
        raise IndeterminacyError(f"P_I{l} vanishes: the point is outside every level-{l} chart") from None
    return matmul(g, M.rows)


def _peel(block: dict, pivots, free_rows, free_cols, what: str):
    """Write ``block`` as a cascade sum with the given pivot order."""
    R = dict(block)
    out = []
    prev = Fraction(1)
    for (i, j), rows, cols in zip(pivots, free_rows, free_cols):
        piv = R[(i, j)]
        if piv == 0:
            raise IndeterminacyError(f"{what} pivot at ({i},{j}) vanishes: point outside this chart")
        col_xi = tuple((c, R[(i, c)] / piv) for c in cols)
        row_xi = tuple((t, R[(t, j)] / piv) for t in rows)
        xi = {i: Fraction(1), **dict(row_xi)}
        om = {j: Fraction(1), **dict(col_xi)}
        for t, u in xi.items():
            for c, v in om.items():
                R[(t, c)] -= piv * u * v
        out.append(Cascade(piv / prev, col_xi, row_xi))
        prev = piv
    if any(v != 0 for v in R.values()):
        raise IndeterminacyError(f"{what} block is not exhausted by its cascades")
    return out


def chart_coordinates(tau: ChartIndex, M: ExactMatrix) -> ChartPoint:
    """Coordinates of the point represented by M in the chart tau (any chart)."""
    s, p, n = tau.params.as_tuple()
    l = tau.l
    F = to_frame(tau.params, l, M)
    hi_r, hi_c, lo_r, lo_c = tau.blocks()
    X = tuple(tuple(F[t - 1][c - 1] for c in hi_c) for t in lo_r)
    Y = tuple(tuple(F[t - 1][c - 1] for c in lo_c) for t in hi_r)
    shapes = _cascade_shapes(tau)
    hi_shapes = [sh for sh in shapes if sh[4]]
    lo_shapes = [sh for sh in shapes if not sh[4]]
    high_block = {(t, c): F[t - 1][c - 1] for t in hi_r for c in hi_c}
    low_block = {(t, c): F[t - 1][c - 1] for t in lo_r for c in lo_c}
    high = _peel(high_block, tau.high_pivots(), [sh[3] for sh in hi_shapes], [sh[2] for sh in hi_shapes], "high")
    low = _peel(low_block, tau.low_pivots(), [sh[3] for sh in lo_shapes], [sh[2] for sh in lo_shapes], "low")
    return ChartPoint(X, Y, tuple(high + low))


# ---------------------------------------------------------------------------
# The distinguished chart and the Plücker-ratio recovery


def tau_zero(params: Parameters, j: int) -> ChartIndex:
    """High pivots (j, s+j), ..., (p, s+p); low pivots (j-1, s-p+j-1), ..., (1, s-p+1)."""
    s, p, n = params.require_normalized().as_tuple()
    if p > n - s:
        raise UnsupportedCase("the distinguished chart is described for p <= n-s only")
    if not 1 <= j <= p:
        raise ParameterError(f"j must be in 1..{p}, got {j}")
    rows = tuple(range(j, p + 1)) + tuple(range(j - 1, 0, -1))
    cols = tuple(range(s + j, s + p + 1)) + tuple(range(s - p + j - 1, s - p, -1))
    return ChartIndex(params, j - 1, rows, cols)


def _frame_sign(params: Parameters, l: int, convention: str) -> Fraction:
    return plucker_minor(ExactMatrix(base_frame(params, l)), plain_index(params, l), convention)


class _Minors:
    """P_I of the level-l frame form of M, computed from M alone.

    Q(I) = P_I(M) * P_{I_l}(frame) / P_{I_l}(M), which is P_I of the matrix
    obtained from M by the row operations that put I_l in frame position.
    """

    def __init__(self, params: Parameters, l: int, M: ExactMatrix, convention: str):
        self.params, self.M, self.convention = params, M, convention
        denom = plucker_minor(M, plain_index(params, l), convention)
        if denom == 0:
            raise IndeterminacyError(f"denominator minor P_I{l} vanishes")
        self.scale = _frame_sign(params, l, convention) / denom
        self.cache: dict = {}

    def __call__(self, I) -> Fraction:
        if I not in self.cache:
            self.cache[I] = plucker_minor(self.M, I, self.convention) * self.scale
        return self.cache[I]

    def plain(self, k: int) -> Fraction:
        return self(plain_index(self.params, k))

    def nonzero_plain(self, k: int) -> Fraction:
        v = self.plain(k)
        if v == 0:
            raise IndeterminacyError(f"denominator minor P_I{k} vanishes")
        return v

    def unit(self, k: int, nonzero: bool = False) -> Fraction:
        """P_{I_k} divided by its value on the level-k frame (a sign)."""
        v = self.nonzero_plain(k) if nonzero else self.plain(k)
        return v * _frame_sign(self.params, k, self.convention)


def reorder_sign(I, mu: int, nu: int) -> int:
    """(-1)^(number of entries of I strictly between mu and nu).

    This is the sign of the permutation that re-sorts I after mu is
    replaced by nu.
    """
    lo, hi = min(mu, nu), max(mu, nu)
    return -1 if sum(1 for i in I if lo < i < hi) % 2 else 1


def ratio_coordinates(params: Parameters, j: int, pt_image: ExactMatrix, convention: str = LISTED) -> ChartPoint:
    """Coordinates in the distinguished chart tau_0 of level j-1, from Plücker ratios.

    Pivots: b_1 = P_{I_j}/P_{I_{j-1}}, b_k = P_{I_m} P_{I_{m-2}} / P_{I_{m-1}}^2 with
    m = j-1+k, and symmetrically for the a's going down from I_{j-1}; here
    each P_{I_m} is taken relative to its value on the level-m frame.  Every
    other coordinate is a swap minor over the plain minor of its own block,

        coordinate = eps * reorder_sign * P_{I'} / P_{I_k},

    where I' is I_k with mu replaced by nu, and eps = -1 exactly for the
    row entries of a cascade.  The free blocks x, y use k = j-1.  Only ratios
    of minors enter, so the result does not depend on ``convention``.
    """
    tau0 = tau_zero(params, j)
    s, p, n = params.as_tuple()
    l = j - 1
    Q = _Minors(params, l, pt_image, convention)

    def ratio(kind, k, mu, nu, eps=1):
        I = plain_index(params, k)
        num = Q(special_index(kind, params, k, mu, nu))
        return eps * reorder_sign(I, mu, nu) * num / Q.nonzero_plain(k)

    X = tuple(tuple(ratio("swap_high", l, mu, nu) for nu in range(s + j, n + 1)) for mu in range(s + 1, s + j))
    Y = tuple(
        tuple(ratio("swap_low", l, mu, nu) for nu in range(1, s - p + j)) for mu in range(s - p + j, s + 1)
    )
    cascades = []
    # high pivots at (k, s+k) for k = j..p
    for k in range(j, p + 1):
        if k == j:
            pivot = Q.unit(j) / Q.unit(j - 1, True)
        else:
            pivot = Q.unit(k) * Q.unit(k - 2) / Q.unit(k - 1, True) ** 2
        col_xi = tuple((nu, ratio("swap_high", k, s + k, nu)) for nu in range(s + k + 1, n + 1))
        row_xi = tuple(
            (t, ratio("swap_low", k, s - p + t, s - p + k, eps=-1)) for t in range(k + 1, p + 1)
        )
        cascades.append(Cascade(pivot, col_xi, row_xi))
    # low pivots at (t, s-p+t) for t = j-1 down to 1
    for t in range(j - 1, 0, -1):
        if t == j - 1:
            pivot = Q.unit(j - 2) / Q.unit(j - 1, True)
        else:
            pivot = Q.unit(t - 1) * Q.unit(t + 1) / Q.unit(t, True) ** 2
        k = t - 1
        col_xi = tuple((nu, ratio("swap_low", k, s - p + t, nu)) for nu in range(1, s - p + t))
        row_xi = tuple((u, ratio("swap_high", k, s + u, s + t, eps=-1)) for u in range(1, t))
        cascades.append(Cascade(pivot, col_xi, row_xi))
    pt = ChartPoint(X, Y, tuple(cascades))
    _check_shape(tau0, pt)
    return pt


# ---------------------------------------------------------------------------
# Transitions and the local equations of the B_m


@dataclass(frozen=True)
class TransitionReport:
    consistent: bool
    route: str
    witness: tuple | None


def recover(tau_dst: ChartIndex, M: ExactMatrix, convention: str = LISTED) -> tuple[ChartPoint, str]:
    """Coordinates of M in tau_dst: Plücker ratios when tau_dst is the
    distinguished chart of its level, row reduction otherwise."""
    params = tau_dst.params
    s, p, n = params.as_tuple()
    if p <= n - s and tau_dst.l < p:
        j = tau_dst.l + 1
        if tau_dst == tau_zero(params, j):
            return ratio_coordinates(params, j, M, convention), "ratio"
    return chart_coordinates(tau_dst, M), "elimination"


def transition_check(
    tau_src: ChartIndex, tau_dst: ChartIndex, pt: ChartPoint, convention: str = LISTED
) -> TransitionReport:
    """Move pt from tau_src to tau_dst and compare the two Plücker vectors projectively.

    Raises IndeterminacyError when pt is outside tau_dst.
    """
    if tau_src.params != tau_dst.params:
        raise ParameterError("charts belong to different parameter triples")
    M1 = gamma_eval(tau_src, pt)
    coords, route = recover(tau_dst, M1, convention)
    M2 = gamma_eval(tau_dst, coords)
    same, witness = projectively_equal(projective_plucker(M1, convention), projective_plucker(M2, convention))
    return TransitionReport(same, route, None if same else witness)


@dataclass(frozen=True)
class SweepResult:
    checked: int
    consistent: int
    skipped: int
    routes: tuple[tuple[str, int], ...]
    witness: tuple | None


def transition_sweep(
    tau_src: ChartIndex, tau_dst: ChartIndex, count: int, seed: int, convention: str = LISTED, max_skips: int = 1000
) -> SweepResult:
    """Run :func:`transition_check` on ``count`` seeded points of the overlap.

    Points are drawn consecutively from one sampler; those outside tau_dst
    (a vanishing recovery denominator) are skipped and counted.
    """
    sampler = RationalSampler(seed)
    checked = consistent = skipped = 0
    routes: dict[str, int] = {}
    witness = None
    while checked < count:
        pt = random_chart_point(tau_src, sampler)
        try:
            rep = transition_check(tau_src, tau_dst, pt, convention)
        except IndeterminacyError:
            skipped += 1
            if skipped > max_skips:
                raise
            continue
        checked += 1
        consistent += rep.consistent
        routes[rep.route] = routes.get(rep.route, 0) + 1
        if witness is None and not rep.consistent:
            witness = rep.witness
    return SweepResult(checked, consistent, skipped, tuple(sorted(routes.items())), witness)


def _pivot_monomial(tau: ChartIndex, pt: ChartPoint, m: int) -> Fraction:
    h = tau.high_count
    l = tau.l
    out = Fraction(1)
    if m > l:
        pivots = [c.pivot for c in pt.cascades[:h]]
        for t in range(1, m - l + 1):
            out *= pivots[t - 1] ** (m - l + 1 - t)
    elif m < l:
        pivots = [c.pivot for c in pt.cascades[h:]]
        for q in range(1, l - m + 1):
            out *= pivots[q - 1] ** (l - m - q + 1)
    return out


def rho_eval(params: Parameters, j: int, tau: ChartIndex, m: int, pt: ChartPoint, convention: str = LISTED) -> Fraction:
    """Local equation of B_m on a level-(j-1) chart.

    P_{I_m}(Gamma(pt)) divided by the frame value of P_{I_{j-1}} and by the
    pivot monomial b_1^(m-j+1) b_2^(m-j) ... (m >= j) or a_1^(j-1-m) ... (m <= j-2).
    """
    if tau.params != params or tau.l != j - 1:
        raise ParameterError(f"rho_m for j={j} needs a chart of level {j - 1}")
    if not 0 <= m <= min(params.p, params.n - params.s):
        raise ParameterError(f"m out of range: {m}")
    mono = _pivot_monomial(tau, pt, m)
    if mono == 0:
        raise IndeterminacyError(f"a pivot in the monomial of rho_{m} vanishes")
    value = plucker_minor(gamma_eval(tau, pt), plain_index(params, m), convention)
    return value / (_frame_sign(params, j - 1, convention) * mono)


# ---------------------------------------------------------------------------
# Worked example on G(4, 8), s = 4, level 2

G48_PARAMS = (4, 4, 8)
G48_LEVEL = 2
G48_ROWS = (3, 4, 1, 2)
G48_COLS = (7, 8, 1, 2)
# coordinate order: x17 x18 x27 x28 | y31 y32 y41 y42 | b37 xi38 xi47 | b48 | a11 xi12 xi21 | a22
G48_VALUES = ("1/2", "-1/3", "2", "3/4", "-1", "5", "1/5", "-2", "3", "-1/2", "4", "-3/2", "2/3", "7", "-5/4", "6")


def g48_chart() -> ChartIndex:
    return ChartIndex(Parameters(*G48_PARAMS), G48_LEVEL, G48_ROWS, G48_COLS)


def g48_expected(values: Sequence = G48_VALUES) -> list[list[Fraction]]:
    """The 4 x 8 matrix of the worked example, transcribed entry by entry."""
    x17, x18, x27, x28, y31, y32, y41, y42, b37, xi38, xi47, b48, a11, xi12, xi21, a22 = (as_fraction(v) for v in values)
    z, o = Fraction(0), Fraction(1)
    return [
        [a11, a11 * xi12, z, z, o, z, x17, x18],
        [a11 * xi21, a11 * (xi12 * xi21 + a22), z, z, z, o, x27, x28],
        [y31, y32, o, z, z, z, b37, b37 * xi38],
        [y41, y42, z, o, z, z, b37 * xi47, b37 * (xi47 * xi38 + b48)],
    ]


def g48_compare(values: Sequence = G48_VALUES) -> list[tuple[int, int]]:
    """Entries (1-based) where gamma_eval differs from the transcribed matrix."""
    tau = g48_chart()
    got = gamma_eval(tau, chart_point_from_values(tau, values))
    want = g48_expected(values)
    return [(r + 1, c + 1) for r in range(4) for c in range(8) if got.rows[r][c] != want[r][c]]
