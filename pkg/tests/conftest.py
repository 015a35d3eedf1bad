from fractions import Fraction as F

import pytest

from pcsignature import FinPerm, Interval, compose_all, flip, from_finperm, rotation, swap_rc


def I(a, b):
    return Interval(F(a), F(b))


@pytest.fixture
def R():
    """Right-continuous exchange of the two halves."""
    return swap_rc(I(0, F(1, 2)), I(F(1, 2), 1))


@pytest.fixture
def h3():
    return compose_all([flip(I(0, F(1, 2))), flip(I(F(1, 2), 1)), flip(I(0, 1))])


@pytest.fixture
def r3():
    return rotation(F(1, 3))


@pytest.fixture
def transposition():
    return from_finperm(FinPerm.cycle(0, F(1, 2)))


@pytest.fixture
def three_cycle():
    return from_finperm(FinPerm.cycle(0, F(1, 3), F(2, 3)))


def probe_points(*maps, extra=()):
    """Breakpoints, their images, midpoints and a dyadic grid: enough points
    to tell two piecewise-affine maps apart."""
    pts = {F(k, 64) for k in range(64)} | {F(k, 3 * 64) for k in range(3 * 64)}
    for h in maps:
        bounds = list(h.lefts) + [F(1)]
        pts.update(h.lefts)
        pts.update(h.points)
        pts.update((a + b) / 2 for a, b in zip(bounds, bounds[1:]))
    pts.update(extra)
    return sorted(p for p in pts if 0 <= p < 1)
