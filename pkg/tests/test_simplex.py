from fractions import Fraction as F

import numpy as np
import pytest
from scipy.optimize import linprog

from tustrat import simplex


def check_duals(res, c, A, b):
    y = res.duals
    for j in range(len(c)):
        assert sum(y[r] * A[r][j] for r in range(len(A))) <= c[j]
    assert sum(yr * br for yr, br in zip(y, b)) == res.objective


def test_small_lp():
    # min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
    c = [-1, -1, 0, 0]
    A = [[1, 2, 1, 0], [3, 1, 0, 1]]
    b = [4, 6]
    res = simplex.solve(c, A, b)
    assert res.status == simplex.OPTIMAL
    assert res.x[:2] == (F(8, 5), F(6, 5))
    assert res.objective == F(-14, 5)
    check_duals(res, c, A, b)


def test_starting_basis_skips_phase_one():
    c = [-1, -1, 0, 0]
    A = [[1, 2, 1, 0], [3, 1, 0, 1]]
    res = simplex.solve(c, A, [4, 6], basis=[2, 3])
    assert res.objective == F(-14, 5)


def test_infeasible():
    res = simplex.solve([1, 1], [[1, 1]], [-1])
    assert res.status == simplex.INFEASIBLE


def test_unbounded():
    # min -x  s.t. x - y = 1
    res = simplex.solve([-1, 0], [[1, -1]], [1])
    assert res.status == simplex.UNBOUNDED


def test_redundant_row_dropped():
    res = simplex.solve([1, 2], [[1, 1], [2, 2]], [1, 2])
    assert res.status == simplex.OPTIMAL and res.objective == 1
    assert res.duals is None


def test_bland_terminates_on_beale_cycling_example():
    # Beale's example cycles under the textbook largest-coefficient rule
    c = [F(-3, 4), 150, F(-1, 50), 6, 0, 0, 0]
    A = [
        [F(1, 4), -60, F(-1, 25), 9, 1, 0, 0],
        [F(1, 2), -90, F(-1, 50), 3, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ]
    b = [0, 0, 1]
    res = simplex.solve(c, A, b, basis=[4, 5, 6])
    assert res.status == simplex.OPTIMAL
    assert res.objective == F(-1, 20)
    check_duals(res, c, A, b)


def test_bad_starting_basis():
    with pytest.raises(ValueError):
        simplex.solve([1, 1], [[1, 1]], [-1], basis=[0])


@pytest.mark.parametrize("seed", range(25))
def test_matches_scipy(seed):
    rng = np.random.default_rng(seed)
    m, n = rng.integers(1, 4), rng.integers(2, 6)
    A = rng.integers(-3, 4, size=(m, n))
    x0 = rng.integers(0, 3, size=n)
    b = A @ x0  # feasible by construction
    c = rng.integers(-2, 5, size=n)
    ref = linprog(c, A_eq=A, b_eq=b, bounds=[(0, None)] * n, method="highs")
    res = simplex.solve(c.tolist(), A.tolist(), b.tolist())
    if ref.status == 3:
        assert res.status == simplex.UNBOUNDED
    else:
        assert res.status == simplex.OPTIMAL
        assert float(res.objective) == pytest.approx(ref.fun, abs=1e-9)
        if res.duals is not None:
            check_duals(res, [F(int(v)) for v in c], A.tolist(), b.tolist())
