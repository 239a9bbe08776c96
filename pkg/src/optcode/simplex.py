"""Exact two-phase primal simplex over rationals.

Solves  max c.x  subject to rows (a, rel, b) with rel in {"<=", ">=", "="}
and x >= 0, entirely in Fractions.  Bland's rule is used in both phases,
so the solver cannot cycle and its output is deterministic.

Dual multipliers are reported per input row in the "certificate"
convention: lam_r >= 0 for "<=" rows, lam_r <= 0 for ">=" rows, free for
"=" rows, with

    sum_r lam_r * a_r >= c   (componentwise)   and   sum_r lam_r * b_r = optimum,

which proves optimality against every feasible point directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["Row", "SimplexResult", "Unbounded", "simplex_max"]

Rel = str  # "<=", ">=", "="


class Unbounded(Exception):
    """The objective is unbounded above on the feasible region."""


@dataclass(frozen=True)
class Row:
    coeffs: tuple[Fraction, ...]
    rel: Rel
    rhs: Fraction


@dataclass(frozen=True)
class SimplexResult:
    status: str  # "optimal" | "infeasible"
    objective: Fraction | None
    x: tuple[Fraction, ...] | None
    duals: tuple[Fraction, ...] | None  # per input row, certificate convention


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, j: int) -> None:
    piv = T[r][j]
    T[r] = [v / piv for v in T[r]]
    row_r = T[r]
    for i, row in enumerate(T):
        if i != r and row[j]:
            f = row[j]
            T[i] = [v - f * w for v, w in zip(row, row_r)]
    basis[r] = j


def _run(T, basis, cost, forbidden) -> None:
    """Minimize cost.x over the tableau in place (Bland's rule)."""
    m = len(T)
    ncols = len(T[0]) - 1
    while True:
        # reduced costs r_j = c_j - c_B . T[:,j]
        cb = [cost[b] for b in basis]
        enter = -1
        for j in range(ncols):
            if j in forbidden or j in basis:
                continue
            rc = cost[j] - sum(cb[i] * T[i][j] for i in range(m) if T[i][j])
            if rc < 0:
                enter = j
                break
        if enter < 0:
            return
        leave, best = -1, None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave < 0:
            raise Unbounded()
        _pivot(T, basis, leave, enter)


def simplex_max(c: Sequence[Fraction], rows: Sequence[Row]) -> SimplexResult:
    n = len(c)
    c = [Fraction(v) for v in c]
    m = len(rows)

    # Normalize: ">=" rows are negated to "<=", remembering the sign so the
    # reported multiplier refers to the original row.
    sign = [Fraction(1)] * m
    norm: list[tuple[list[Fraction], Rel, Fraction]] = []
    for r, row in enumerate(rows):
        if len(row.coeffs) != n:
            raise ValueError("row %d has %d coefficients, expected %d" % (r, len(row.coeffs), n))
        a = [Fraction(v) for v in row.coeffs]
        b = Fraction(row.rhs)
        rel = row.rel
        if rel not in ("<=", ">=", "="):
            raise ValueError("bad relation %r" % rel)
        if rel == ">=":
            a, b, rel = [-v for v in a], -b, "<="
            sign[r] = -sign[r]
        norm.append((a, rel, b))

    # Equality form with slacks, then force nonnegative RHS.
    nslack = sum(1 for _, rel, _ in norm if rel == "<=")
    slack_col = {}
    k = n
    for r, (_, rel, _) in enumerate(norm):
        if rel == "<=":
            slack_col[r] = k
            k += 1
    rows_eq: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    slack_ok = [False] * m
    for r, (a, rel, b) in enumerate(norm):
        row = a + [Fraction(0)] * nslack
        if rel == "<=":
            row[slack_col[r]] = Fraction(1)
        if b < 0:
            row = [-v for v in row]
            b = -b
            sign[r] = -sign[r]
        else:
            slack_ok[r] = rel == "<="
        rows_eq.append(row)
        rhs.append(b)

    # Identity columns: usable slacks where available, artificials elsewhere.
    nart = sum(1 for r in range(m) if not slack_ok[r])
    ncols = n + nslack + nart
    art_col = {}
    k = n + nslack
    for r in range(m):
        if not slack_ok[r]:
            art_col[r] = k
            k += 1
    T: list[list[Fraction]] = []
    basis: list[int] = []
    id_col: list[int] = []
    for r in range(m):
        row = rows_eq[r] + [Fraction(0)] * nart + [rhs[r]]
        if slack_ok[r]:
            basis.append(slack_col[r])
            id_col.append(slack_col[r])
        else:
            row[art_col[r]] = Fraction(1)
            basis.append(art_col[r])
            id_col.append(art_col[r])
        T.append(row)

    zero = Fraction(0)
    artificial = set(art_col.values())

    if artificial:
        cost1 = [zero] * ncols
        for j in artificial:
            cost1[j] = Fraction(1)
        _run(T, basis, cost1, forbidden=set())
        if sum(T[i][-1] for i in range(m) if basis[i] in artificial) != 0:
            return SimplexResult("infeasible", None, None, None)
        # Pivot leftover zero-valued artificials out where possible.
        for i in range(m):
            if basis[i] in artificial:
                for j in range(n + nslack):
                    if T[i][j] != 0:
                        _pivot(T, basis, i, j)
                        break

    cost2 = [-v for v in c] + [zero] * (nslack + nart)
    _run(T, basis, cost2, forbidden=artificial)

    x = [zero] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = T[i][-1]
    objective = sum(ci * xi for ci, xi in zip(c, x))

    # y = c_B B^{-1}, read off the initial identity columns.
    cb = [cost2[b] for b in basis]
    duals = []
    for r in range(m):
        jc = id_col[r]
        y = sum(cb[i] * T[i][jc] for i in range(m) if T[i][jc])
        duals.append(sign[r] * -y)
    return SimplexResult("optimal", objective, tuple(x), tuple(duals))
