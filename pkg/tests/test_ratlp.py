import random
from fractions import Fraction
from itertools import combinations

import pytest

from whmetric.errors import ParameterError
from whmetric.ratlp import LinearProgram, solve_max


def test_single_variable_box():
    res = solve_max(LinearProgram(objective=[1], rows=[([1], "<=", 3)]))
    assert res.status == "optimal"
    assert res.value == 3
    assert res.solution == [3]


def test_two_variable_vertex():
    res = solve_max(
        LinearProgram(objective=[1, 1], rows=[([1, 2], "<=", 4), ([3, 1], "<=", 6)])
    )
    assert res.status == "optimal"
    assert res.value == Fraction(14, 5)
    assert res.solution == [Fraction(8, 5), Fraction(6, 5)]


def test_infeasible():
    res = solve_max(LinearProgram(objective=[1], rows=[([1], ">=", 1), ([-1], ">=", 0)]))
    assert res.status == "infeasible"


def test_unbounded():
    assert solve_max(LinearProgram(objective=[1], rows=[])).status == "unbounded"


def test_equality_and_free_variables():
    # free y: maximize -|y|-ish through y == 2 exactly
    lp = LinearProgram(
        objective=[1, -1],
        rows=[([1, 0], "<=", 5), ([0, 1], "==", 2)],
        nonneg=[True, False],
    )
    res = solve_max(lp)
    assert res.status == "optimal"
    assert res.value == 3
    assert res.solution == [5, 2]


def test_degenerate_equalities_pin_variables():
    lp = LinearProgram(
        objective=[1, 1, 1],
        rows=[([0, 1, 0], "==", 0), ([0, 0, 1], "==", 0), ([1, 0, 0], "<=", 7)],
    )
    res = solve_max(lp)
    assert res.value == 7
    assert res.solution == [7, 0, 0]


def test_row_scaling_invariance():
    rows = [([2, 3], "<=", 12), ([1, -1], ">=", -3)]
    scaled = [([1, Fraction(3, 2)], "<=", 6), ([5, -5], ">=", -15)]
    a = solve_max(LinearProgram(objective=[4, 1], rows=rows))
    b = solve_max(LinearProgram(objective=[4, 1], rows=scaled))
    assert a.value == b.value


def test_rejects_malformed():
    with pytest.raises(ParameterError):
        LinearProgram(objective=[], rows=[])
    with pytest.raises(ParameterError):
        LinearProgram(objective=[1], rows=[([1, 2], "<=", 1)])
    with pytest.raises(ParameterError):
        LinearProgram(objective=[1], rows=[([1], "<", 1)])


# -- randomized comparison against vertex enumeration ------------------------


def _solve_square(rows, rhs):
    """Exact Gaussian elimination; returns the unique solution or None."""
    n = len(rows)
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(rows, rhs)]
    col = 0
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [x / f for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                g = aug[i][col]
                aug[i] = [x - g * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def _vertex_optimum(objective, le_rows):
    """Max of objective over {x >= 0, rows <= rhs} by enumerating vertices.

    The rows must include per-variable upper bounds so the region is
    bounded; returns None when the region is empty.
    """
    nvars = len(objective)
    hyperplanes = [(row, rhs) for row, rhs in le_rows]
    for i in range(nvars):
        unit = [0] * nvars
        unit[i] = 1
        hyperplanes.append((unit, None))  # x_i = 0
    best = None
    for chosen in combinations(range(len(hyperplanes)), nvars):
        rows = [hyperplanes[i][0] for i in chosen]
        rhs = [hyperplanes[i][1] if hyperplanes[i][1] is not None else 0 for i in chosen]
        point = _solve_square(rows, rhs)
        if point is None:
            continue
        if any(x < 0 for x in point):
            continue
        feasible = all(
            sum(c * x for c, x in zip(row, point)) <= rhs_val
            for row, rhs_val in le_rows
        )
        if not feasible:
            continue
        value = sum(c * x for c, x in zip(objective, point))
        if best is None or value > best:
            best = value
    return best


def test_random_small_programs_match_vertex_enumeration():
    rng = random.Random(424242)
    for case in range(200):
        nvars = rng.choice((2, 3))
        nrows = rng.randint(2, 6)
        objective = [rng.randint(-9, 9) for _ in range(nvars)]
        le_rows = []
        for _ in range(nrows):
            le_rows.append(
                ([rng.randint(-9, 9) for _ in range(nvars)], rng.randint(-9, 9))
            )
        for i in range(nvars):  # box rows keep the region bounded
            unit = [0] * nvars
            unit[i] = 1
            le_rows.append((unit, 9))
        lp = LinearProgram(
            objective=objective,
            rows=[(row, "<=", rhs) for row, rhs in le_rows],
        )
        res = solve_max(lp)
        expected = _vertex_optimum(objective, le_rows)
        if expected is None:
            assert res.status == "infeasible", f"case {case}"
        else:
            assert res.status == "optimal", f"case {case}"
            assert res.value == expected, f"case {case}"
