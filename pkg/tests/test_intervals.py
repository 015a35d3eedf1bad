from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcsignature.intervals import (
    Interval,
    Partition,
    common_refinement,
    format_rational,
    is_refinement,
    make_partition,
    parse_rational,
)


def parts(*cuts):
    return make_partition([F(c) for c in cuts])


def test_make_partition_examples():
    assert make_partition([]) == Partition((Interval(0, 1),))
    assert make_partition([F(1, 2)]) == Partition((Interval(0, F(1, 2)), Interval(F(1, 2), 1)))
    assert make_partition([F(2, 3), F(1, 3)]).breakpoints == (0, F(1, 3), F(2, 3))


def test_make_partition_inserts_zero_once():
    assert make_partition([0, F(1, 2)]) == make_partition([F(1, 2)])


@pytest.mark.parametrize("bad", [F(1), F(-1, 3), F(5, 4)])
def test_make_partition_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        make_partition([bad])


def test_common_refinement_examples():
    p, q = parts(F(1, 2)), parts(F(1, 3))
    assert common_refinement(p, q) == parts(F(1, 3), F(1, 2))
    assert common_refinement(p, p) == p
    assert common_refinement(make_partition(), q) == q


def test_is_refinement_examples():
    assert is_refinement(parts(F(1, 3)), make_partition())
    assert not is_refinement(make_partition(), parts(F(1, 2)))
    p = parts(F(1, 5), F(3, 7))
    assert is_refinement(p, p)


def test_is_refinement_matches_interval_containment():
    fine, coarse = parts(F(1, 4), F(1, 2), F(3, 4)), parts(F(1, 2))
    assert is_refinement(fine, coarse) == all(
        any(c.contains_interval(f) for c in coarse) for f in fine
    )
    assert not is_refinement(parts(F(1, 3)), parts(F(1, 2)))


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(F(1, 2), F(1, 2))
    with pytest.raises(ValueError):
        Interval(0, F(3, 2))
    assert F(1, 4) in Interval(F(1, 4), F(1, 2))
    assert F(1, 2) not in Interval(F(1, 4), F(1, 2))


def test_partition_rejects_gaps():
    with pytest.raises(ValueError):
        Partition((Interval(0, F(1, 3)), Interval(F(1, 2), 1)))


def test_rational_literals():
    assert parse_rational("3/6") == F(1, 2)
    assert parse_rational("-1/2") == F(-1, 2)
    assert parse_rational("2") == 2
    assert format_rational(F(2, 4)) == "1/2"
    assert format_rational(F(0)) == "0/1"
    for bad in ["0.5", "1/0", "1e3", "a/b", ""]:
        with pytest.raises(ValueError):
            parse_rational(bad)


points = st.builds(
    lambda d, k: F(k % d, d), st.integers(min_value=1, max_value=64), st.integers(min_value=0)
)
partitions = st.lists(points, max_size=8).map(make_partition)


@given(partitions, partitions)
def test_refinement_refines_both(p, q):
    r = common_refinement(p, q)
    assert is_refinement(r, p) and is_refinement(r, q)


@given(partitions, partitions, partitions)
def test_refinement_is_a_semilattice(p, q, r):
    assert common_refinement(p, q) == common_refinement(q, p)
    assert common_refinement(common_refinement(p, q), r) == common_refinement(p, common_refinement(q, r))
    assert common_refinement(p, p) == p


@given(st.sets(points, max_size=10))
def test_interval_count(s):
    assert len(make_partition(s)) == len(s | {F(0)})
