"""Exact linear programming over the rationals.

A two-phase primal simplex on the dense slack-form tableau.  Pivots
follow Dantzig's rule for speed and switch to Bland's rule whenever the
objective stalls on degenerate pivots, so termination stays guaranteed.
All data are :class:`fractions.Fraction`; the returned witness is
re-substituted into every constraint before the result is handed back,
so a returned optimum is certified, not trusted.

Instances here are small (a few hundred variables), which is why the
dense tableau is acceptable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DefectError, ParameterError

GE = ">="
LE = "<="
EQ = "=="

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass
class LinearProgram:
    """maximize objective . x subject to rows, with optional nonnegativity."""

    objective: list
    rows: list  # (coefficients, relation in {">=", "==", "<="}, rhs)
    nonneg: list = None

    def __post_init__(self):
        self.objective = [Fraction(c) for c in self.objective]
        nvars = len(self.objective)
        if nvars < 1:
            raise ParameterError("a linear program needs at least one variable")
        norm_rows = []
        for coeffs, rel, rhs in self.rows:
            if rel not in (GE, EQ, LE):
                raise ParameterError(f"unknown relation {rel!r}")
            coeffs = [Fraction(c) for c in coeffs]
            if len(coeffs) != nvars:
                raise ParameterError("constraint row length does not match variable count")
            norm_rows.append((coeffs, rel, Fraction(rhs)))
        self.rows = norm_rows
        if self.nonneg is None:
            self.nonneg = [True] * nvars
        if len(self.nonneg) != nvars:
            raise ParameterError("nonneg flag list length does not match variable count")


@dataclass
class LpResult:
    status: str  # "optimal" | "unbounded" | "infeasible"
    value: Fraction = None
    solution: list = None


def _pivot(tableau, pr, pc):
    """Pivot every tableau row (objective row included) on (pr, pc).

    Rows are mutated in place so outstanding references stay valid.
    """
    prow = tableau[pr]
    f = prow[pc]
    if f != 1:
        for j, x in enumerate(prow):
            if x:
                prow[j] = x / f
    support = [j for j, x in enumerate(prow) if x]
    for i, row in enumerate(tableau):
        if i == pr:
            continue
        g = row[pc]
        if g:
            for j in support:
                row[j] -= g * prow[j]


_STALL_LIMIT = 32


def _simplex(tableau, basis, cost):
    """Maximize over the current basic feasible tableau.

    ``tableau`` rows are [coeffs..., rhs]; the last tableau row is the
    objective row and is maintained in place.  Pivots use Dantzig's rule
    (most negative reduced cost) for speed, falling back to Bland's rule
    while the objective is stalled on degenerate pivots, which keeps the
    termination guarantee.  Returns "optimal" or "unbounded".
    """
    ncols = len(tableau[0]) - 1
    body = tableau[:-1]
    obj = tableau[-1]
    # objective row: obj[j] = sum(cost[basic] * row[j]) - cost[j]
    for j in range(ncols + 1):
        obj[j] = _ZERO
    for j in range(ncols):
        obj[j] = -cost[j]
    for i, bv in enumerate(basis):
        cb = cost[bv]
        if cb:
            row = body[i]
            for j in range(ncols + 1):
                if row[j]:
                    obj[j] += cb * row[j]
    stalled = 0
    while True:
        enter = None
        if stalled >= _STALL_LIMIT:
            enter = next((j for j in range(ncols) if obj[j] < 0), None)
        else:
            best_rc = _ZERO
            for j in range(ncols):
                if obj[j] < best_rc:
                    best_rc, enter = obj[j], j
        if enter is None:
            return "optimal"
        leave, best = None, None
        for i, row in enumerate(body):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            return "unbounded"
        _pivot(tableau, leave, enter)
        basis[leave] = enter
        if best == 0:
            stalled += 1
        else:
            stalled = 0


def solve_max(lp: LinearProgram) -> LpResult:
    """Exact optimum of ``lp``; status is optimal, unbounded, or infeasible."""
    nvars = len(lp.objective)
    # split free variables x = x+ - x-
    col_of = []
    ncols = 0
    for flag in lp.nonneg:
        if flag:
            col_of.append((ncols, None))
            ncols += 1
        else:
            col_of.append((ncols, ncols + 1))
            ncols += 2
    nstruct = ncols

    def expand(coeffs):
        out = [_ZERO] * nstruct
        for j, c in enumerate(coeffs):
            if c:
                pos, neg = col_of[j]
                out[pos] = c
                if neg is not None:
                    out[neg] = -c
        return out

    # normalize rows to rhs >= 0 and pick slack/artificial columns
    prepared = []  # (expanded coeffs, relation, rhs)
    for coeffs, rel, rhs in lp.rows:
        c = expand(coeffs)
        if rel == LE:
            c, rel, rhs = [-x for x in c], GE, -rhs
        if rhs < 0:
            c = [-x for x in c]
            rhs = -rhs
            rel = {GE: LE, EQ: EQ}[rel]
        elif rel == GE and rhs == 0:
            c, rel = [-x for x in c], LE
        prepared.append((c, rel, rhs))

    nslack = sum(1 for _, rel, _ in prepared if rel in (GE, LE))
    nart = sum(1 for _, rel, _ in prepared if rel in (GE, EQ))
    width = nstruct + nslack + nart
    tableau = []
    basis = []
    si = nstruct
    ai = nstruct + nslack
    art_cols = set()
    for c, rel, rhs in prepared:
        row = c + [_ZERO] * (nslack + nart) + [rhs]
        if rel == LE:
            row[si] = _ONE
            basis.append(si)
            si += 1
        elif rel == GE:
            row[si] = -_ONE
            si += 1
            row[ai] = _ONE
            art_cols.add(ai)
            basis.append(ai)
            ai += 1
        else:
            row[ai] = _ONE
            art_cols.add(ai)
            basis.append(ai)
            ai += 1
        tableau.append(row)
    tableau.append([_ZERO] * (width + 1))  # objective row

    if art_cols:
        phase1_cost = [_ZERO] * width
        for j in art_cols:
            phase1_cost[j] = Fraction(-1)
        status = _simplex(tableau, basis, phase1_cost)
        if status != "optimal":
            raise DefectError("phase-1 objective cannot be unbounded")
        if tableau[-1][-1] != 0:  # objective row holds accumulated value
            return LpResult(status="infeasible")
        # drive remaining artificials out of the basis
        drop = []
        for i in range(len(basis)):
            if basis[i] in art_cols:
                row = tableau[i]
                pc = next(
                    (j for j in range(nstruct + nslack) if j not in art_cols and row[j]),
                    None,
                )
                if pc is None:
                    drop.append(i)
                else:
                    _pivot(tableau, i, pc)
                    basis[i] = pc
        for i in reversed(drop):
            del tableau[i]
            del basis[i]
        # remove artificial columns
        keep = [j for j in range(width) if j not in art_cols]
        for i in range(len(tableau)):
            row = tableau[i]
            tableau[i] = [row[j] for j in keep] + [row[-1]]
        remap = {old: new for new, old in enumerate(keep)}
        basis = [remap[b] for b in basis]
        width = len(keep)

    phase2_cost = [_ZERO] * width
    for j, c in enumerate(lp.objective):
        pos, neg = col_of[j]
        phase2_cost[pos] += c
        if neg is not None:
            phase2_cost[neg] -= c
    status = _simplex(tableau, basis, phase2_cost)
    if status == "unbounded":
        return LpResult(status="unbounded")

    values = [_ZERO] * width
    for i, bv in enumerate(basis):
        values[bv] = tableau[i][-1]
    solution = []
    for j in range(nvars):
        pos, neg = col_of[j]
        x = values[pos] - (values[neg] if neg is not None else _ZERO)
        solution.append(x)
    value = sum(c * x for c, x in zip(lp.objective, solution))

    _verify(lp, solution, value)
    return LpResult(status="optimal", value=value, solution=solution)


def _verify(lp, solution, value):
    for j, flag in enumerate(lp.nonneg):
        if flag and solution[j] < 0:
            raise DefectError("witness violates nonnegativity")
    for coeffs, rel, rhs in lp.rows:
        lhs = sum(c * x for c, x in zip(coeffs, solution))
        ok = lhs >= rhs if rel == GE else (lhs <= rhs if rel == LE else lhs == rhs)
        if not ok:
            raise DefectError("witness violates a constraint after solving")
    if value != sum(c * x for c, x in zip(lp.objective, solution)):
        raise DefectError("witness objective value mismatch")  # pragma: no cover
