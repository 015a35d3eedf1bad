"""Constructive factorizations of interval exchanges and piecewise-affine maps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elements import (
    AffinePiece,
    FinPerm,
    Interval,
    PwMap,
    _canonical,
    as_finperm,
    build,
    compose,
    compose_all,
    equals_mod_fin,
    flip,
    flips_product,
    from_finperm,
    has_unit_slopes,
    inverse,
    is_rc_preserving,
    rearrange,
    swap_rc,
)


@dataclass(frozen=True)
class RSigmaF:
    """``h = r ∘ sigma ∘ f`` with ``r`` a product of disjoint flips."""

    r: tuple[Interval, ...]
    sigma: FinPerm
    f: PwMap

    def compose(self) -> PwMap:
        return compose_all([flips_product(self.r), from_finperm(self.sigma), self.f])


@dataclass(frozen=True)
class GTauS:
    """``h = g ∘ tau ∘ s`` with ``s`` a product of disjoint flips."""

    g: PwMap
    tau: FinPerm
    s: tuple[Interval, ...]

    def compose(self) -> PwMap:
        return compose_all([self.g, from_finperm(self.tau), flips_product(self.s)])


@dataclass(frozen=True)
class HomeoSplit:
    """``h = f ∘ phi`` with ``f`` of unit slopes and ``phi`` a homeomorphism."""

    f: PwMap
    phi: PwMap

    def compose(self) -> PwMap:
        return compose(self.f, self.phi)


@dataclass(frozen=True)
class FlipWord:
    """``flips[0] ∘ ... ∘ flips[-1] = h ∘ residual⁻¹``."""

    flips: tuple[Interval, ...]
    residual: FinPerm

    def product(self) -> PwMap:
        return flips_product(self.flips)


def _require_unit_slopes(h: PwMap):
    if not has_unit_slopes(h):
        raise ValueError("map has a piece with slope other than +1 or -1")


def decompose_r_sigma_f(h: PwMap) -> RSigmaF:
    """Split an interval exchange with flips into flips, a finite permutation and
    a right-continuous exchange.

    The flips are those of the image blocks of reversed pieces; they fix every
    block endpoint, so stripping them leaves the breakpoint values alone.
    """
    _require_unit_slopes(h)
    r = tuple(p.image for p in h.pieces if p.reversing)
    f_pieces, f_points, sigma = [], [], {}
    for p, y in zip(h.pieces, h.points):
        img = p.image
        f_pieces.append(AffinePiece(p.source, Fraction(1), img.left - p.source.left))
        f_points.append(img.left)
        sigma[img.left] = y
    return RSigmaF(r, FinPerm(sigma), _canonical(f_pieces, f_points))


def decompose_g_tau_s(h: PwMap) -> GTauS:
    """The mirrored factorization, obtained from that of ``h⁻¹``."""
    _require_unit_slopes(h)
    d = decompose_r_sigma_f(inverse(h))
    # Flips in d.r are disjoint involutions, so the product is its own inverse.
    return GTauS(inverse(d.f), d.sigma.inverse(), d.r)


def normalize_to_iet(h: PwMap) -> HomeoSplit:
    """Write ``h = f ∘ phi`` with ``phi`` continuous increasing and ``f`` isometric
    on pieces.

    ``phi`` stretches each affine piece of ``h`` to the length of its image.
    """
    pieces, points, pos = [], [], Fraction(0)
    for p in h.pieces:
        a, b = p.source.left, p.source.right
        s = abs(p.slope)
        pieces.append((Interval(a, b), s, pos - s * a))
        points.append((a, pos))
        pos += s * (b - a)
    phi = build(pieces, points)
    return HomeoSplit(compose(h, inverse(phi)), phi)


def swaps_factorization(f: PwMap) -> list[tuple[Interval, Interval]]:
    """Adjacent block swaps whose composition (first entry applied last) is ``f``.

    Selection sort on the image side: at each step the block whose domain
    piece comes next is swapped down to the front of the unsorted region.
    """
    if not (has_unit_slopes(f) and is_rc_preserving(f)):
        raise ValueError("expected a right-continuous order-preserving interval exchange")
    # Image order of domain pieces, as (domain index, length).
    order = sorted(range(len(f.pieces)), key=lambda k: f.pieces[k].image.left)
    lengths = [p.source.length for p in f.pieces]
    word = []
    front = Fraction(0)
    for k in range(len(order)):
        p = order.index(k)
        if p != k:
            block_len = sum(lengths[m] for m in order[k:p])
            left = Interval(front, front + block_len)
            right = Interval(left.right, left.right + lengths[k])
            # Post-composing with swap_rc(left, right) moves piece k to the front;
            # record the inverse swap, which undoes it.
            word.append(
                (Interval(front, front + lengths[k]), Interval(front + lengths[k], right.right))
            )
            order[k : p + 1] = [k] + order[k:p]
        front += lengths[k]
    return word


def swaps_product(word) -> PwMap:
    return compose_all(swap_rc(i, j) for i, j in word)


def flips_factorization(h: PwMap) -> FlipWord:
    """A word in flips equal to ``h`` up to a finite permutation.

    Each block swap of ``I`` and ``J`` is replaced by three flips: first the
    flip of ``I ∪ J``, then the flips of the two blocks where ``J`` and ``I``
    end up.  When ``|I| = |J|`` these are just ``s_I s_J s_{I∪J}``.  The
    product agrees with the swap off finitely many points.
    """
    d = decompose_r_sigma_f(h)
    flips = list(d.r)
    for i, j in swaps_factorization(d.f):
        mid = i.left + j.length
        flips += [Interval(i.left, mid), Interval(mid, j.right), Interval(i.left, j.right)]
    word_map = flips_product(flips)
    residual = as_finperm(compose(inverse(word_map), h))
    return FlipWord(tuple(flips), residual)


def conjugate_two_flips_to_one(i: Interval, j: Interval) -> tuple[PwMap, Interval]:
    """Translation map ``c`` with ``c s_i s_j c⁻¹ = s_k`` off a finite set.

    ``k = [0, |i| + |j|)``.  The halves of ``i`` go to the two ends of ``k``
    and the halves of ``j`` to the two middle quarters-by-length, so the
    reversal of ``k`` pairs them the way ``s_i`` and ``s_j`` do.
    """
    if not i.disjoint(j):
        raise ValueError(f"{i} and {j} overlap")
    u, v = i.length, j.length
    total = u + v
    k = Interval(0, total)
    hu, hv = u / 2, v / 2
    i1, i2 = Interval(i.left, i.left + hu), Interval(i.left + hu, i.right)
    j1, j2 = Interval(j.left, j.left + hv), Interval(j.left + hv, j.right)
    moves = [(i1, Fraction(0)), (j1, hu), (j2, total / 2), (i2, total - hu)]
    c = rearrange(moves)
    lhs = compose_all([c, flip(i), flip(j), inverse(c)])
    if not equals_mod_fin(lhs, flip(k)):
        raise AssertionError("conjugation identity failed")
    return c, k
