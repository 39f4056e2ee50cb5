"""Two-phase primal simplex over the rationals with Bland's rule.

Solves ``maximize c.x subject to A x = b, x >= 0`` exactly.  Bland's
smallest-index rule guarantees termination, so no iteration cap or tolerance
is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact import Fraction, as_fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None
    value: Fraction | None


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    prow = tab[row]
    pv = prow[col]
    if pv != 1:
        prow[:] = [v / pv for v in prow]
    for r, line in enumerate(tab):
        if r != row and line[col]:
            f = line[col]
            line[:] = [a - f * b for a, b in zip(line, prow)]
    basis[row] = col


def _run(tab: list[list[Fraction]], basis: list[int], cost: list[Fraction], allowed: int) -> str:
    """Maximize ``cost`` over the current basic feasible tableau.

    ``tab`` rows are constraint rows with the right-hand side last; columns
    with index >= ``allowed`` never enter the basis.
    """
    while True:
        # reduced cost d_j = c_j - c_B . column_j; enter on the first positive one
        entering = None
        for col in range(allowed):
            if col in basis:
                continue
            d = cost[col] - sum((cost[basis[r]] * tab[r][col] for r in range(len(tab)) if tab[r][col]), Fraction(0))
            if d > 0:
                entering = col
                break
        if entering is None:
            return OPTIMAL
        best = None
        for r, line in enumerate(tab):
            a = line[entering]
            if a > 0:
                ratio = line[-1] / a
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            return UNBOUNDED
        _pivot(tab, basis, best[1], entering)


def solve_lp(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Maximize ``c.x`` subject to ``A x = b`` and ``x >= 0``."""
    c = [as_fraction(v) for v in c]
    nvar = len(c)
    rows = [[as_fraction(v) for v in row] for row in A]
    rhs = [as_fraction(v) for v in b]
    if any(len(row) != nvar for row in rows) or len(rows) != len(rhs):
        raise ValueError("inconsistent LP dimensions")
    m = len(rows)
    # phase 1: artificial variables nvar .. nvar+m-1
    tab = []
    for i in range(m):
        sign = -1 if rhs[i] < 0 else 1
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab.append([sign * v for v in rows[i]] + art + [sign * rhs[i]])
    basis = list(range(nvar, nvar + m))
    phase1_cost = [Fraction(0)] * nvar + [Fraction(-1)] * m
    _run(tab, basis, phase1_cost, nvar + m)
    if any(tab[r][-1] != 0 for r in range(m) if basis[r] >= nvar):
        return LPResult(INFEASIBLE, None, None)
    # drive zero-level artificials out of the basis, dropping redundant rows
    r = 0
    while r < len(tab):
        if basis[r] >= nvar:
            col = next((k for k in range(nvar) if tab[r][k] != 0), None)
            if col is None:
                del tab[r]
                del basis[r]
                continue
            _pivot(tab, basis, r, col)
        r += 1
    tab = [line[:nvar] + [line[-1]] for line in tab]
    status = _run(tab, basis, c, nvar)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)
    x = [Fraction(0)] * nvar
    for r, col in enumerate(basis):
        x[col] = tab[r][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, tuple(x), value)
