import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import I
from pcsignature.elements import (
    FinPerm,
    compose,
    compose_all,
    conjugate,
    element_order_upto,
    flip,
    from_finperm,
    identity,
    inverse,
    minimal_partition,
)
from pcsignature.intervals import make_partition
from pcsignature.sampling import Profile, random_element, random_point
from pcsignature.signature import (
    SignBit,
    finperm_sign,
    flip_number,
    inversion_sign,
    sigma_default,
    signature,
    signature_at,
)

HALVES = make_partition([F(1, 2)])


def bubble_parity(t: FinPerm) -> int:
    """Oracle: adjacent swaps needed to sort the images of the sorted support."""
    seq = [t(x) for x in t.support]
    swaps = 0
    for end in range(len(seq) - 1, 0, -1):
        for k in range(end):
            if seq[k] > seq[k + 1]:
                seq[k], seq[k + 1] = seq[k + 1], seq[k]
                swaps += 1
    return swaps % 2


def test_signbit_arithmetic():
    assert SignBit(1) + SignBit(1) == 0
    assert SignBit(1) + 0 == 1
    assert SignBit(3) == 1
    assert isinstance(SignBit(1) + SignBit(0), SignBit)


def test_flip_number_examples(R):
    s = flip(I(F(1, 4), F(1, 2)))
    assert flip_number(s, minimal_partition(s)) == 1
    assert flip_number(R, HALVES) == 0
    assert flip_number(flip(I(0, 1)), HALVES) == 2


def test_flip_number_counts_each_split_of_a_reversed_piece():
    s = flip(I(0, 1))
    p = make_partition()
    for k, cut in enumerate([F(1, 3), F(1, 7), F(5, 6)], start=2):
        p = p.split(cut)
        assert flip_number(s, p) == k


def test_sigma_default_examples(R, h3):
    assert sigma_default(R, HALVES) == FinPerm()
    assert sigma_default(h3, HALVES) == FinPerm.cycle(0, F(1, 2))
    for cuts in ([], [F(1, 3)], [F(1, 5), F(4, 5)]):
        assert sigma_default(identity(), make_partition(cuts)) == FinPerm()


def test_requires_associated_partition(R):
    for op in (flip_number, sigma_default, signature_at):
        with pytest.raises(ValueError):
            op(R, make_partition())


def test_finperm_sign_examples():
    assert finperm_sign(FinPerm()) == 0
    t = FinPerm.cycle(0, F(1, 2))
    c = FinPerm.cycle(0, F(1, 3), F(2, 3))
    assert finperm_sign(t) == bubble_parity(t) == 1
    assert finperm_sign(c) == bubble_parity(c) == 0


def test_signature_at_examples(R, h3):
    assert signature_at(h3, HALVES) == 1
    assert signature_at(R, minimal_partition(R)) == 0
    s = flip(I(F(1, 4), F(1, 2)))
    assert signature_at(s, minimal_partition(s)) == 1


def test_signature_examples(R):
    assert signature(from_finperm(FinPerm.cycle(0, F(1, 3), F(2, 3)))) == 0
    assert signature(from_finperm(FinPerm.cycle(F(1, 4), F(3, 5)))) == 1
    for i in (I(0, 1), I(F(1, 4), F(1, 2)), I(F(2, 3), 1)):
        assert signature(flip(i)) == 1
    i, j = I(0, F(1, 3)), I(F(1, 3), F(2, 3))
    assert signature(compose_all([flip(i), flip(j), flip(I(0, F(2, 3)))])) == 1


SUPPORT5 = [F(0), F(1, 7), F(1, 3), F(1, 2), F(9, 10)]


def test_restriction_to_finite_permutations():
    for images in itertools.permutations(SUPPORT5):
        t = FinPerm(dict(zip(SUPPORT5, images)))
        expected = bubble_parity(t)
        assert finperm_sign(t) == inversion_sign(t) == expected
        assert signature(from_finperm(t)) == expected


@given(st.permutations(list(range(7))), st.integers(min_value=8, max_value=40))
def test_parity_algorithms_agree(perm, den):
    pts = [F(k, den) for k in range(7)]
    t = FinPerm({pts[k]: pts[perm[k]] for k in range(7)})
    assert finperm_sign(t) == inversion_sign(t) == bubble_parity(t)


UNIT = Profile(8, 96, "IET")
AFFINE = Profile(8, 96, "PAff")


def test_partition_independence():
    rng = random.Random(3)
    for s in range(60):
        h = random_element(UNIT if s % 2 else AFFINE, s)
        p = minimal_partition(h)
        expected = signature_at(h, p)
        for _ in range(4):
            x = random_point(rng, 200)
            if x in p.breakpoints:
                continue
            p = p.split(x)
            assert signature_at(h, p) == expected


def test_homomorphism():
    for s in range(120):
        prof = UNIT if s % 2 else AFFINE
        f, g = random_element(prof, 2 * s), random_element(prof, 2 * s + 1)
        assert signature(compose(f, g)) == signature(f) + signature(g)
        assert signature(inverse(f)) == signature(f)


def test_kernel_contains_rc_preserving_elements():
    for s in range(60):
        for kind in ("IET+rc", "Homeo+"):
            assert signature(random_element(Profile(8, 96, kind), s)) == 0


def test_homeomorphism_invariance():
    homeo = Profile(6, 64, "Homeo+")
    for s in range(60):
        h = random_element(UNIT if s % 2 else AFFINE, s)
        phi = random_element(homeo, 1000 + s)
        e = signature(h)
        assert signature(compose(h, phi)) == e == signature(compose(phi, h))
        assert signature(conjugate(phi, h)) == e


def test_odd_order_elements_are_even():
    checked = 0
    for s in range(200):
        h = random_element(Profile(4, 12, "IET"), s)
        n = element_order_upto(h, 9)
        if isinstance(n, int) and n % 2:
            checked += 1
            assert signature(h) == 0
    assert checked > 10
