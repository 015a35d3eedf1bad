"""Normal-subgroup classification and witnesses extracted from the
simplicity and normalizer arguments.

Every witness re-checks its defining property before it is returned, so a
successful call is itself an instance of the statement it illustrates.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .decomposition import decompose_r_sigma_f
from .elements import (
    Interval,
    PwMap,
    as_finperm,
    classify_features,
    compose_all,
    conjugate,
    equals_mod_fin,
    flip,
    has_unit_slopes,
    in_sfin,
    inverse,
    is_identity,
    is_rc_preserving,
    rearrange,
    swap_rc,
)
from .signature import finperm_sign, signature


class NormalLevel(enum.IntEnum):
    """Smallest subgroup of ``{1} < A_fin < S_fin, Ker ε < G`` containing an element.

    ``S_fin`` and ``Ker_epsilon`` are incomparable; the integer order is only
    for display.
    """

    trivial = 0
    A_fin = 1
    S_fin = 2
    Ker_epsilon = 3
    full = 4


def classify_normal(h: PwMap) -> NormalLevel:
    if is_identity(h):
        return NormalLevel.trivial
    if in_sfin(h):
        odd = finperm_sign(as_finperm(h))
        # Odd finite permutations have signature 1, so they are never in Ker ε.
        assert signature(h) == odd
        return NormalLevel.S_fin if odd else NormalLevel.A_fin
    return NormalLevel.Ker_epsilon if signature(h) == 0 else NormalLevel.full


def _dyadic_lengths(start=Fraction(1, 4), depth=64):
    ell = start
    for _ in range(depth):
        yield ell
        ell /= 2


def simplicity_witness(g: PwMap) -> tuple[Interval, PwMap]:
    """Interval ``i`` inside one piece of ``g`` with ``g(i)`` disjoint from ``i``,
    and the commutator ``g s_i g⁻¹ s_i``.

    The commutator agrees with ``s_{g(i)} ∘ s_i`` off a finite set.  The
    interval is the leftmost one of the largest dyadic length (at most 1/4)
    that works, scanned on a grid of that length inside the pieces where
    ``g`` is not the identity.
    """
    if in_sfin(g):
        raise ValueError("g is a finite permutation; it is trivial modulo finite sets")
    moving = [p for p in g.pieces if not (p.slope == 1 and p.offset == 0)]
    for ell in _dyadic_lengths():
        for piece in moving:
            a, b = piece.source.left, piece.source.right
            start = a
            while start + ell <= b:
                i = Interval(start, start + ell)
                img = piece.restrict(i).image
                if img.disjoint(i) and ell + img.length < 1:
                    h = compose_all([g, flip(i), inverse(g), flip(i)])
                    if not equals_mod_fin(h, compose_all([flip(img), flip(i)])):
                        raise AssertionError("commutator is not the product of two flips")
                    return i, h
                start += ell
    raise RuntimeError("no admissible interval found")


def normalizer_witness_rc(g: PwMap) -> PwMap:
    """Right-continuous ``f`` whose conjugate ``g f g⁻¹`` is not right-continuous
    and order-preserving.

    Two cases.  If ``g`` reverses some piece, ``f`` swaps two adjacent blocks
    inside it; the conjugate then fixes the left endpoint of an image block.
    Otherwise ``g = sigma ∘ g'`` with ``g'`` right-continuous and ``sigma`` a
    nontrivial finite permutation; ``f`` is the pull-back through ``g'`` of a
    swap of blocks meeting at a point moved by ``sigma``.
    """
    if not has_unit_slopes(g):
        raise ValueError("g must have unit slopes")
    if is_rc_preserving(g):
        raise ValueError("g is right-continuous and order-preserving")

    reversed_pieces = [p for p in g.pieces if p.reversing]
    if reversed_pieces:
        src = reversed_pieces[0].source
        ell = next(x for x in _dyadic_lengths(Fraction(1, 4)) if 4 * x <= src.length)
        i = Interval(src.left, src.left + ell)
        j = Interval(i.right, i.right + ell)
        f = swap_rc(i, j)
    else:
        d = decompose_r_sigma_f(g)
        support = d.sigma.support
        x = next(p for p in support if p > 0)
        ell = None
        for cand in _dyadic_lengths(Fraction(1, 4)):
            if cand <= x and x + cand <= 1 and not any(x - cand <= s < x for s in support):
                ell = cand
                break
        swap = swap_rc(Interval(x - ell, x), Interval(x, x + ell))
        f = conjugate(inverse(d.f), swap)

    conj = conjugate(g, f)
    feats = classify_features(conj)
    if not is_rc_preserving(f) or (feats.right_continuous and feats.orientation == "all-preserving"):
        raise AssertionError("conjugate stayed right-continuous and order-preserving")
    return f


def _pack_blocks(pieces, ell, count):
    """Leftmost ``count`` disjoint ``ell``-blocks packed into the given pieces."""
    blocks = []
    for p in pieces:
        pos = p.source.left
        while pos + ell <= p.source.right and len(blocks) < count:
            blocks.append(Interval(pos, pos + ell))
            pos += ell
    return blocks if len(blocks) == count else None


def normalizer_witness_orientation(g: PwMap) -> PwMap:
    """Order-preserving ``f`` such that ``g f g⁻¹`` reverses some piece and
    preserves another.

    ``f`` exchanges a block ``A`` taken at the right end of the first reversed
    piece of ``g`` with a block ``B`` of a preserved piece, and two further
    preserved blocks ``C`` and ``D``; all four have the same dyadic length.
    The conjugate reverses ``g(A)`` and ``g(B)``.
    """
    if not has_unit_slopes(g):
        raise ValueError("g must have unit slopes")
    if classify_features(g).orientation != "mixed":
        raise ValueError("g must reverse some pieces and preserve others")
    rev = [p for p in g.pieces if p.reversing]
    pres = [p for p in g.pieces if not p.reversing]
    for ell in _dyadic_lengths():
        if ell > rev[0].source.length:
            continue
        others = _pack_blocks(pres, ell, 3)
        if others is None:
            continue
        a = Interval(rev[0].source.right - ell, rev[0].source.right)
        b, c, d = others
        f = rearrange([(a, b.left), (b, a.left), (c, d.left), (d, c.left)])
        break
    else:
        raise RuntimeError("no admissible blocks found")

    feats = classify_features(conjugate(g, f))
    if in_sfin(f) or not is_rc_preserving(f) or feats.orientation == "all-preserving":
        raise AssertionError("conjugate is still order-preserving")
    return f
