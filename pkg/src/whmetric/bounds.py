"""Dimension bounds for a given error-correction capability.

Four bounds on the largest dimension k of a linear code in a weighted
space that corrects every error of weighted weight up to t:

* packing: volume bound from the weighted ball,
* covering: existence bound from the ball's difference set,
* singleton: capability of the forced low-support codeword,
* lp: Delsarte-style linear program over block-weight enumerators with
  Krawtchouk coefficient constraints, solved exactly over rationals.

Packing and covering round through exact integer power comparisons, and
the LP optimum is converted to a dimension by exact comparison against
powers of q; no floating-point logarithms anywhere, because several of
the interesting data points sit within a hair of a power of q.

Also here: the conversions between minimum weighted distance and
capability (the floor bracket and the sufficient 2t + 1 distance).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .errors import DefectError, ParameterError
from .metric import WeightedSpace
from .ratlp import LinearProgram, solve_max


def krawtchouk(q: int, n: int, j: int, i: int) -> int:
    """Hamming-metric Krawtchouk coefficient K_j(i) for length n over F_q."""
    if not 0 <= i <= n or not 0 <= j <= n:
        raise ParameterError(f"Krawtchouk indices must lie in [0, {n}]")
    out = 0
    for s in range(j + 1):
        out += comb(n - i, j - s) * comb(i, s) * (q - 1) ** (j - s) * (-1) ** s
    return out


def packing_bound(space: WeightedSpace, t: int) -> int:
    """Largest k with q^k * |ball(t)| <= q^N."""
    if t < 0:
        raise ParameterError("capability must be non-negative")
    q, n = space.q, space.n
    size = space.ball_size(t)
    target = q**n
    k = 0
    while k < n and q ** (k + 1) * size <= target:
        k += 1
    return k


def covering_bound(space: WeightedSpace, t: int) -> int:
    """Smallest k with q^k * |diff_ball(t)| >= q^N; a code of this
    dimension and capability t exists."""
    if t < 0:
        raise ParameterError("capability must be non-negative")
    q, n = space.q, space.n
    size = space.diff_ball_size(t)
    target = q**n
    k = 0
    while q**k * size < target:
        k += 1
    return k


def _singleton_profile(space: WeightedSpace, k: int):
    support = space.n - k + 1
    profile = []
    for b in space.blocks:
        w = min(b, support)
        profile.append(w)
        support -= w
    return tuple(profile)


def singleton_bound(space: WeightedSpace, k: int) -> int:
    """Capability ceiling for any k-dimensional code: every such code has
    a codeword supported on the first N - k + 1 coordinates."""
    if not 1 <= k <= space.n:
        raise ParameterError(f"dimension must be in [1, {space.n}], got {k}")
    return space.profile_capability(_singleton_profile(space, k))


def singleton_k_for_t(space: WeightedSpace, t: int) -> int:
    """Largest dimension whose singleton capability ceiling is >= t."""
    if t < 0:
        raise ParameterError("capability must be non-negative")
    for k in range(space.n, 0, -1):
        if singleton_bound(space, k) >= t:
            return k
    return 0


def _assemble_lp(space: WeightedSpace, t: int):
    profiles = list(product(*(range(b + 1) for b in space.blocks)))
    index = {p: i for i, p in enumerate(profiles)}
    nvars = len(profiles)
    zero = (0,) * space.m
    forbidden = [p for p in space.diff_ball_profiles(t) if p != zero]

    rows = []
    unit = [0] * nvars
    unit[index[zero]] = 1
    rows.append((list(unit), "==", 1))
    for p in forbidden:
        row = [0] * nvars
        row[index[p]] = 1
        rows.append((row, "==", 0))

    ktab = [
        [[krawtchouk(space.q, b, j, i) for i in range(b + 1)] for j in range(b + 1)]
        for b in space.blocks
    ]
    for jprof in profiles:
        row = []
        for iprof in profiles:
            coeff = 1
            for l in range(space.m):
                coeff *= ktab[l][jprof[l]][iprof[l]]
            row.append(coeff)
        rows.append((row, ">=", 0))

    return LinearProgram(objective=[1] * nvars, rows=rows)


def lp_bound_detail(space: WeightedSpace, t: int):
    """LP dimension bound together with the exact rational LP optimum."""
    if t < 0:
        raise ParameterError("capability must be non-negative")
    result = solve_max(_assemble_lp(space, t))
    if result.status != "optimal":
        raise DefectError(f"capability LP reported {result.status}; it is always feasible and bounded")
    opt = result.value
    k = 0
    while k < space.n and Fraction(space.q) ** (k + 1) <= opt:
        k += 1
    return k, opt


def lp_bound(space: WeightedSpace, t: int) -> int:
    return lp_bound_detail(space, t)[0]


def capability_range_from_distance(space: WeightedSpace, d: int):
    """Bracket on the capability of a code with minimum weighted distance d."""
    if d < 1:
        raise ParameterError("distance must be positive")
    lam_max = space.scales[-1]
    return (d - 1) // 2, (d + lam_max) // 2 - 1


def distance_required_for_capability(t: int) -> int:
    """A minimum weighted distance of 2t + 1 guarantees capability >= t."""
    if t < 0:
        raise ParameterError("capability must be non-negative")
    return 2 * t + 1


# -- bound tables ------------------------------------------------------------


@dataclass(frozen=True)
class BoundRow:
    t: int
    packing: int
    singleton: int
    lp: int
    covering: int
    lp_optimum: Fraction


@dataclass(frozen=True)
class BoundTable:
    space: WeightedSpace
    rows: tuple

    def __post_init__(self):
        prev = None
        for row in self.rows:
            if row.covering > row.packing:
                raise DefectError(f"covering exceeds packing at t={row.t}")
            if prev is not None:
                for name in ("packing", "singleton", "lp", "covering"):
                    if getattr(row, name) > getattr(prev, name):
                        raise DefectError(f"{name} bound increased from t={prev.t} to t={row.t}")
            prev = row

    def to_csv(self) -> str:
        lines = ["t,packing,singleton,lp,covering"]
        for r in self.rows:
            lines.append(f"{r.t},{r.packing},{r.singleton},{r.lp},{r.covering}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        out = [
            {
                "t": r.t,
                "packing": r.packing,
                "singleton": r.singleton,
                "lp": r.lp,
                "covering": r.covering,
                "lp_optimum": str(r.lp_optimum),
            }
            for r in self.rows
        ]
        return json.dumps(out, indent=2) + "\n"


def build_bound_table(space: WeightedSpace, t_min: int, t_max: int) -> BoundTable:
    rows = []
    for t in range(t_min, t_max + 1):
        lp_k, lp_opt = lp_bound_detail(space, t)
        rows.append(
            BoundRow(
                t=t,
                packing=packing_bound(space, t),
                singleton=singleton_k_for_t(space, t),
                lp=lp_k,
                covering=covering_bound(space, t),
                lp_optimum=lp_opt,
            )
        )
    return BoundTable(space=space, rows=tuple(rows))
