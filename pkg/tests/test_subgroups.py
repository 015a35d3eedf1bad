from fractions import Fraction as F

import pytest

from conftest import I
from pcsignature.elements import (
    FinPerm,
    classify_features,
    compose,
    compose_all,
    conjugate,
    equals_mod_fin,
    flip,
    from_finperm,
    identity,
    in_sfin,
    inverse,
    is_rc_preserving,
    rearrange,
    swap_rc,
)
from pcsignature.sampling import Profile, random_element
from pcsignature.signature import signature
from pcsignature.subgroups import (
    NormalLevel,
    classify_normal,
    normalizer_witness_orientation,
    normalizer_witness_rc,
    simplicity_witness,
)

UNIT = Profile(8, 96, "IET")
AFFINE = Profile(8, 96, "PAff")


def test_classify_curated(three_cycle, transposition, r3):
    assert classify_normal(identity()) is NormalLevel.trivial
    assert classify_normal(three_cycle) is NormalLevel.A_fin
    assert classify_normal(transposition) is NormalLevel.S_fin
    assert classify_normal(r3) is NormalLevel.Ker_epsilon
    assert classify_normal(flip(I(F(1, 4), F(1, 2)))) is NormalLevel.full


def test_classify_is_inverse_stable():
    for s in range(60):
        h = random_element(UNIT if s % 2 else AFFINE, s)
        assert classify_normal(h) == classify_normal(inverse(h))


def test_odd_finite_permutations_leave_the_kernel(transposition):
    assert classify_normal(transposition) is NormalLevel.S_fin
    assert signature(transposition) == 1


def test_products_stay_in_their_subgroups():
    fin = Profile(6, 24, "FinPerm")
    kernel = {NormalLevel.trivial, NormalLevel.A_fin, NormalLevel.Ker_epsilon}
    for s in range(100):
        a, b = random_element(fin, s), random_element(fin, 500 + s)
        if classify_normal(a) <= NormalLevel.A_fin and classify_normal(b) <= NormalLevel.A_fin:
            assert classify_normal(compose(a, b)) <= NormalLevel.A_fin
        f, g = random_element(UNIT, s), random_element(AFFINE, s)
        if classify_normal(f) in kernel and classify_normal(g) in kernel:
            assert classify_normal(compose(f, g)) in kernel


@pytest.mark.parametrize(
    "g, hull",
    [
        ("r3", I(F(1, 3), F(7, 12))),
        ("R", I(F(1, 2), F(3, 4))),
        ("reflection", I(F(3, 4), 1)),
    ],
)
def test_simplicity_witness_examples(g, hull, request):
    g = flip(I(0, 1)) if g == "reflection" else request.getfixturevalue(g)
    i, h = simplicity_witness(g)
    assert i == I(0, F(1, 4))
    assert equals_mod_fin(h, compose(flip(hull), flip(i)))
    assert h == compose_all([g, flip(i), inverse(g), flip(i)])


def test_simplicity_witness_random():
    for s in range(80):
        g = random_element(UNIT if s % 2 else AFFINE, s)
        if in_sfin(g):
            with pytest.raises(ValueError):
                simplicity_witness(g)
            continue
        i, h = simplicity_witness(g)
        piece = g.piece_at(i.left)
        assert piece.source.contains_interval(i)
        img = piece.restrict(i).image
        assert img.disjoint(i) and i.length + img.length < 1
        assert equals_mod_fin(h, compose(flip(img), flip(i)))
        assert signature(h) == 0


def test_normalizer_rc_examples(transposition, h3):
    f = normalizer_witness_rc(transposition)
    assert f == swap_rc(I(F(1, 4), F(1, 2)), I(F(1, 2), F(3, 4)))
    assert not classify_features(conjugate(transposition, f)).right_continuous

    reflection = flip(I(0, 1))
    f = normalizer_witness_rc(reflection)
    assert is_rc_preserving(f)
    conj = conjugate(reflection, f)
    # The conjugate fixes the left endpoint of one of its image blocks.
    fixed = [p.source.left for p, y in zip(conj.pieces, conj.points)
             if y == p.source.left and p.right_limit() != y]
    assert fixed and not classify_features(conj).right_continuous

    f = normalizer_witness_rc(h3)
    c = classify_features(conjugate(h3, f))
    assert not (c.right_continuous and c.orientation == "all-preserving")

    with pytest.raises(ValueError):
        normalizer_witness_rc(random_element(Profile(6, 30, "IET+rc"), 1))


def test_normalizer_rc_random():
    checked = 0
    for s in range(200):
        g = random_element(UNIT if s % 2 else Profile(8, 96, "IET+"), s)
        if is_rc_preserving(g):
            continue
        f = normalizer_witness_rc(g)
        assert is_rc_preserving(f) and classify_features(f).unit_slopes
        c = classify_features(conjugate(g, f))
        assert not (c.right_continuous and c.orientation == "all-preserving")
        checked += 1
    assert checked > 100


def test_normalizer_orientation_example():
    g = flip(I(0, F(1, 2)))
    f = normalizer_witness_orientation(g)
    expected = rearrange([
        (I(F(3, 8), F(1, 2)), F(1, 2)), (I(F(1, 2), F(5, 8)), F(3, 8)),
        (I(F(5, 8), F(3, 4)), F(3, 4)), (I(F(3, 4), F(7, 8)), F(5, 8)),
    ])
    assert f == expected
    assert any(p.reversing for p in conjugate(g, f).pieces)


def test_normalizer_orientation_rejects():
    with pytest.raises(ValueError):
        normalizer_witness_orientation(random_element(Profile(6, 30, "IET+"), 3))
    with pytest.raises(ValueError):
        normalizer_witness_orientation(flip(I(0, 1)))


def test_normalizer_orientation_random():
    checked = 0
    for s in range(300):
        g = random_element(UNIT, s)
        if classify_features(g).orientation != "mixed":
            continue
        f = normalizer_witness_orientation(g)
        ff = classify_features(f)
        assert ff.orientation == "all-preserving" and ff.unit_slopes and not ff.in_sfin
        assert classify_features(conjugate(g, f)).orientation != "all-preserving"
        checked += 1
    assert checked > 100
