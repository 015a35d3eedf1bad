"""Piecewise-affine bijections of [0, 1) and finitely supported permutations.

A :class:`PwMap` is stored as a list of affine pieces whose sources tile
[0, 1), together with the image of each piece's left endpoint.  The affine
formula is only used on the *interior* of a piece; values at the finitely
many breakpoints are data, which is what lets the same structure carry
honest bijections (the hat-groups) rather than classes modulo finite sets.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .intervals import (
    Interval,
    Partition,
    as_point,
    as_rational,
    format_rational,
    is_refinement,
    make_partition,
)

ONE = Fraction(1)
ZERO = Fraction(0)


class InvalidElementError(ValueError):
    """Raised when piece data does not describe a bijection of [0, 1).

    ``piece`` is the index of the offending piece in the input order when the
    problem can be pinned to one piece, ``point`` the offending point when it
    can be pinned to a breakpoint.
    """

    def __init__(self, message, piece=None, point=None):
        super().__init__(message)
        self.piece = piece
        self.point = point


class FinPerm:
    """A finitely supported permutation of rational points of [0, 1).

    Only moved points are stored.  ``p * q`` is composition ``p ∘ q``.
    """

    __slots__ = ("_map",)

    def __init__(self, mapping: Optional[Mapping] = None):
        m = {}
        for x, y in (mapping or {}).items():
            x, y = as_point(x), as_point(y)
            if x != y:
                m[x] = y
        if set(m) != set(m.values()):
            raise ValueError("mapping is not a permutation of its support")
        self._map = m

    @classmethod
    def identity(cls) -> "FinPerm":
        return cls()

    @classmethod
    def cycle(cls, *points) -> "FinPerm":
        """The cycle ``points[0] -> points[1] -> ... -> points[0]``."""
        pts = [as_point(x) for x in points]
        if len(set(pts)) != len(pts):
            raise ValueError("cycle entries must be distinct")
        return cls({x: pts[(k + 1) % len(pts)] for k, x in enumerate(pts)})

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "FinPerm":
        m = {}
        for x, y in pairs:
            if x in m:
                raise ValueError(f"point {x} mapped twice")
            m[x] = y
        return cls(m)

    def __call__(self, x):
        return self._map.get(x, x)

    @property
    def support(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self._map))

    def items(self):
        return sorted(self._map.items())

    def __mul__(self, other: "FinPerm") -> "FinPerm":
        pts = set(self._map) | set(other._map)
        return FinPerm({x: self(other(x)) for x in pts})

    def inverse(self) -> "FinPerm":
        return FinPerm({y: x for x, y in self._map.items()})

    def conjugate_by(self, f) -> "FinPerm":
        """``f ∘ self ∘ f⁻¹`` for any bijection ``f`` given as a callable."""
        return FinPerm({f(x): f(y) for x, y in self._map.items()})

    def cycles(self) -> list[tuple[Fraction, ...]]:
        seen = set()
        out = []
        for x in self.support:
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = self._map[x]
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self._map[y]
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return not self._map

    def __eq__(self, other):
        return isinstance(other, FinPerm) and self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __str__(self):
        if not self._map:
            return "()"
        return "".join(
            "(" + " ".join(format_rational(x) for x in c) + ")" for c in self.cycles()
        )

    def __repr__(self):
        return f"FinPerm{self}"


@dataclass(frozen=True)
class AffinePiece:
    """``x -> slope * x + offset`` on the interior of ``source``."""

    source: Interval
    slope: Fraction
    offset: Fraction

    def __call__(self, x):
        return self.slope * x + self.offset

    @property
    def reversing(self) -> bool:
        return self.slope < 0

    @property
    def image(self) -> Interval:
        """Half-open interval whose interior is the image of the source interior."""
        u, v = self(self.source.left), self(self.source.right)
        return Interval(min(u, v), max(u, v))

    def right_limit(self) -> Fraction:
        """Limit of the piece at its left endpoint, from the right."""
        return self(self.source.left)

    def restrict(self, iv: Interval) -> "AffinePiece":
        return AffinePiece(iv, self.slope, self.offset)


@dataclass(frozen=True)
class PwMap:
    """Canonical piecewise-affine bijection of [0, 1).

    Build these with :func:`build` (validating) or the constructors below;
    the raw constructor trusts its input.  ``points[k]`` is the image of
    ``pieces[k].source.left``.
    """

    pieces: tuple[AffinePiece, ...]
    points: tuple[Fraction, ...]

    @property
    def partition(self) -> Partition:
        """The partition into maximal affine pieces (the canonical form)."""
        return Partition(tuple(p.source for p in self.pieces))

    @property
    def lefts(self) -> tuple[Fraction, ...]:
        return tuple(p.source.left for p in self.pieces)

    @property
    def point_images(self) -> dict:
        return dict(zip(self.lefts, self.points))

    def piece_at(self, x) -> AffinePiece:
        """The piece whose source contains ``x``."""
        return self.pieces[bisect_right(self.lefts, x) - 1]

    def piece_before(self, x) -> AffinePiece:
        """The piece containing points immediately to the left of ``x`` (x > 0)."""
        if x <= 0:
            raise ValueError("no points to the left of 0")
        lefts = self.lefts
        k = bisect_right(lefts, x) - 1
        if lefts[k] == x:
            k -= 1
        return self.pieces[k]

    def __call__(self, x):
        lefts = self.lefts
        k = bisect_right(lefts, x) - 1
        if lefts[k] == x:
            return self.points[k]
        return self.pieces[k](x)

    def right_limit(self, x) -> Fraction:
        return self.piece_at(x)(x)

    def left_limit(self, x) -> Fraction:
        return self.piece_before(x)(x)

    def __matmul__(self, other: "PwMap") -> "PwMap":
        return compose(self, other)

    def __str__(self):
        return "\n".join(
            f"{p.source} x -> {format_rational(p.slope)}*x + {format_rational(p.offset)}; "
            f"{format_rational(p.source.left)} -> {format_rational(y)}"
            for p, y in zip(self.pieces, self.points)
        )


def _canonical(pieces: Sequence[AffinePiece], points: Sequence[Fraction]) -> PwMap:
    """Merge adjacent pieces that share affine data and agree at the cut."""
    out_pieces: list[AffinePiece] = []
    out_points: list[Fraction] = []
    for piece, y in zip(pieces, points):
        if out_pieces:
            prev = out_pieces[-1]
            if (
                prev.slope == piece.slope
                and prev.offset == piece.offset
                and prev(piece.source.left) == y
            ):
                out_pieces[-1] = prev.restrict(
                    Interval(prev.source.left, piece.source.right)
                )
                continue
        out_pieces.append(piece)
        out_points.append(y)
    return PwMap(tuple(out_pieces), tuple(out_points))


def build(pieces: Iterable, point_images: Iterable) -> PwMap:
    """Validate raw piece data and return the canonical :class:`PwMap`.

    ``pieces`` holds ``(Interval, slope, offset)`` triples and
    ``point_images`` holds ``(x, h(x))`` pairs, one for each piece's left
    endpoint.
    """
    raw = []
    for k, (iv, slope, offset) in enumerate(pieces):
        slope, offset = as_rational(slope), as_rational(offset)
        if slope == 0:
            raise InvalidElementError(f"piece {k} has slope 0", piece=k)
        raw.append((k, AffinePiece(iv, slope, offset)))
    if not raw:
        raise InvalidElementError("no pieces")
    raw.sort(key=lambda kp: kp[1].source.left)
    try:
        Partition(tuple(p.source for _, p in raw))
    except ValueError as exc:
        raise InvalidElementError(f"piece sources do not tile [0,1): {exc}") from None

    images = []
    for k, p in raw:
        u, v = p(p.source.left), p(p.source.right)
        lo, hi = min(u, v), max(u, v)
        if lo < 0 or hi > 1:
            raise InvalidElementError(f"piece {k} maps outside [0,1)", piece=k)
        images.append((lo, hi, k))
    images.sort()
    for (lo1, hi1, k1), (lo2, hi2, k2) in zip(images, images[1:]):
        if hi1 > lo2:
            raise InvalidElementError(f"images of pieces {k1} and {k2} overlap", piece=max(k1, k2))
        if hi1 < lo2:
            raise InvalidElementError(f"gap ({hi1},{lo2}) in the image", piece=k2)
    if images[0][0] != 0:
        raise InvalidElementError("piece images miss a neighbourhood of 0", piece=images[0][2])
    if images[-1][1] != 1:
        raise InvalidElementError("piece images miss a neighbourhood of 1", piece=images[-1][2])

    pts = {}
    for x, y in point_images:
        x, y = as_point(x), as_point(y)
        if x in pts:
            raise InvalidElementError(f"point {x} given twice", point=x)
        pts[x] = y
    lefts = [p.source.left for _, p in raw]
    for x in pts:
        if x not in lefts:
            raise InvalidElementError(f"point {x} is not a piece left endpoint", point=x)
    for x in lefts:
        if x not in pts:
            raise InvalidElementError(f"no image given for left endpoint {x}", point=x)
    gaps = {lo for lo, _, _ in images}
    values = [pts[x] for x in lefts]
    if len(set(values)) != len(values):
        raise InvalidElementError("two breakpoints share an image")
    for x in lefts:
        if pts[x] not in gaps:
            raise InvalidElementError(
                f"image {pts[x]} of {x} is already hit by a piece interior", point=x
            )
    return _canonical([p for _, p in raw], values)


def identity() -> PwMap:
    return PwMap((AffinePiece(Interval(0, 1), ONE, ZERO),), (ZERO,))


def is_identity(h: PwMap) -> bool:
    return h == identity()


def minimal_partition(h: PwMap) -> Partition:
    """Coarsest partition on whose interiors ``h`` is continuous.

    Adjacent affine pieces fuse when ``h`` is continuous at the shared
    endpoint: both one-sided limits equal the value there.
    """
    cuts = [ZERO]
    for prev, piece, y in zip(h.pieces, h.pieces[1:], h.points[1:]):
        x = piece.source.left
        if not (prev(x) == y == piece(x)):
            cuts.append(x)
    return make_partition(cuts)


def in_partitions_of(h: PwMap, p: Partition) -> bool:
    """Whether ``p`` is a partition associated with ``h``."""
    return is_refinement(p, minimal_partition(h))


def _require_associated(h: PwMap, p: Partition):
    if not in_partitions_of(h, p):
        raise ValueError(f"{p} is not associated with the map (h is discontinuous inside it)")


def image_of_interior(h: PwMap, iv: Interval) -> Interval:
    """Half-open hull of ``h(iv°)``; ``h`` must be continuous on ``iv°``."""
    u, v = h.right_limit(iv.left), h.left_limit(iv.right)
    return Interval(min(u, v), max(u, v))


def reverses_on(h: PwMap, iv: Interval) -> bool:
    return h.piece_at(iv.left).reversing


def arrival_partition(h: PwMap, p: Partition) -> Partition:
    _require_associated(h, p)
    images = sorted(image_of_interior(h, iv) for iv in p)
    return Partition(tuple(images))


def apply(h: PwMap, x) -> Fraction:
    return h(as_point(x))


def compose(f: PwMap, g: PwMap) -> PwMap:
    """``f ∘ g``: apply ``g`` first."""
    f_lefts = f.lefts
    cuts = set(g.lefts)
    for piece in g.pieces:
        img = piece.image
        lo = bisect_right(f_lefts, img.left)
        for y in f_lefts[lo:]:
            if y >= img.right:
                break
            cuts.add((y - piece.offset) / piece.slope)
    bounds = sorted(cuts) + [ONE]
    pieces, points = [], []
    for a, b in zip(bounds, bounds[1:]):
        gp = g.piece_at(a)
        fp = f.piece_at(gp((a + b) / 2))
        pieces.append(
            AffinePiece(Interval(a, b), fp.slope * gp.slope, fp.slope * gp.offset + fp.offset)
        )
        points.append(f(g(a)))
    return _canonical(pieces, points)


def compose_all(maps: Iterable[PwMap]) -> PwMap:
    """``m[0] ∘ m[1] ∘ ... ∘ m[-1]`` (the last one is applied first)."""
    out = identity()
    for m in maps:
        out = compose(out, m)
    return out


def inverse(h: PwMap) -> PwMap:
    preimage = {y: x for x, y in zip(h.lefts, h.points)}
    inv = []
    for p in h.pieces:
        inv.append(AffinePiece(p.image, 1 / p.slope, -p.offset / p.slope))
    inv.sort(key=lambda p: p.source.left)
    return _canonical(inv, [preimage[p.source.left] for p in inv])


def power(h: PwMap, n: int) -> PwMap:
    if n < 0:
        h, n = inverse(h), -n
    out = identity()
    for _ in range(n):
        out = compose(h, out)
    return out


def conjugate(g: PwMap, f: PwMap) -> PwMap:
    """``g ∘ f ∘ g⁻¹``."""
    return compose(compose(g, f), inverse(g))


def equals(f: PwMap, g: PwMap) -> bool:
    return f == g


def in_sfin(h: PwMap) -> bool:
    """Whether ``h`` moves only finitely many points."""
    return all(p.slope == 1 and p.offset == 0 for p in h.pieces)


def as_finperm(h: PwMap) -> FinPerm:
    if not in_sfin(h):
        raise ValueError("map is not finitely supported")
    return FinPerm(dict(zip(h.lefts, h.points)))


def equals_mod_fin(f: PwMap, g: PwMap) -> bool:
    return in_sfin(compose(f, inverse(g)))


def flip(i: Interval) -> PwMap:
    """The involution reversing the interior of ``i``, fixing everything else."""
    pieces, points = [], []
    if i.left > 0:
        pieces.append(AffinePiece(Interval(0, i.left), ONE, ZERO))
        points.append(ZERO)
    pieces.append(AffinePiece(i, -ONE, i.left + i.right))
    points.append(i.left)
    if i.right < 1:
        pieces.append(AffinePiece(Interval(i.right, 1), ONE, ZERO))
        points.append(i.right)
    return _canonical(pieces, points)


def flips_product(intervals: Iterable[Interval]) -> PwMap:
    return compose_all(flip(i) for i in intervals)


def rearrange(moves: Iterable[tuple[Interval, Fraction]]) -> PwMap:
    """Right-continuous translation map sending each ``(source, target_left)``.

    The listed sources are translated onto ``[target_left, target_left +
    len)``; what is left of [0, 1) is carried, in order and by translations,
    onto what is left of the target side.
    """
    moves = sorted(moves, key=lambda m: m[0].left)
    used_src = [m[0] for m in moves]
    used_dst = sorted(Interval(t, t + s.length) for s, t in moves)
    src_gaps = _complement(used_src)
    dst_gaps = _complement(used_dst)
    blocks = [(s.left, s.right, t - s.left) for s, t in moves]
    # Walk both complements together, cutting at every cumulative length.
    i = j = 0
    s_pos = src_gaps[0].left if src_gaps else None
    d_pos = dst_gaps[0].left if dst_gaps else None
    while i < len(src_gaps) and j < len(dst_gaps):
        step = min(src_gaps[i].right - s_pos, dst_gaps[j].right - d_pos)
        blocks.append((s_pos, s_pos + step, d_pos - s_pos))
        s_pos += step
        d_pos += step
        if s_pos == src_gaps[i].right:
            i += 1
            s_pos = src_gaps[i].left if i < len(src_gaps) else None
        if d_pos == dst_gaps[j].right:
            j += 1
            d_pos = dst_gaps[j].left if j < len(dst_gaps) else None
    blocks.sort()
    return build(
        [(Interval(a, b), 1, shift) for a, b, shift in blocks],
        [(a, a + shift) for a, b, shift in blocks],
    )


def _complement(intervals: Sequence[Interval]) -> list[Interval]:
    out = []
    pos = ZERO
    for iv in sorted(intervals):
        if iv.left < pos:
            raise ValueError("intervals overlap")
        if iv.left > pos:
            out.append(Interval(pos, iv.left))
        pos = iv.right
    if pos < 1:
        out.append(Interval(pos, 1))
    return out


def swap_rc(i: Interval, j: Interval) -> PwMap:
    """Right-continuous exchange of the consecutive blocks ``i`` and ``j``."""
    if i.right != j.left:
        raise ValueError(f"{i} and {j} are not consecutive")
    return rearrange([(i, i.left + j.length), (j, i.left)])


def from_finperm(t: FinPerm) -> PwMap:
    cuts = sorted(set(t.support) | {ZERO})
    bounds = cuts + [ONE]
    pieces = [AffinePiece(Interval(a, b), ONE, ZERO) for a, b in zip(bounds, bounds[1:])]
    return _canonical(pieces, [t(a) for a in cuts])


def iet_build(
    lengths: Sequence, arrangement: Sequence[int], orientations: Sequence[str]
) -> PwMap:
    """Interval exchange with flips.

    Piece ``k`` of the domain (of length ``lengths[k]``) lands at position
    ``arrangement.index(k)`` of the image, i.e. ``arrangement`` lists the
    piece indices (0-based) in their left-to-right image order.  Pieces with
    orientation ``'-'`` are reversed.  Each left endpoint goes to the left
    endpoint of its image block.
    """
    lengths = [as_rational(x) for x in lengths]
    n = len(lengths)
    if any(x <= 0 for x in lengths) or sum(lengths) != 1:
        raise ValueError("lengths must be positive and sum to 1")
    if sorted(arrangement) != list(range(n)) or len(orientations) != n:
        raise ValueError("arrangement must be a permutation of range(len(lengths))")
    if any(o not in "+-" or not o for o in orientations):
        raise ValueError("orientations are '+' or '-'")
    starts, pos = [], ZERO
    for x in lengths:
        starts.append(pos)
        pos += x
    targets, pos = {}, ZERO
    for k in arrangement:
        targets[k] = pos
        pos += lengths[k]
    pieces, points = [], []
    for k in range(n):
        a, c, ln = starts[k], targets[k], lengths[k]
        if orientations[k] == "+":
            pieces.append((Interval(a, a + ln), 1, c - a))
        else:
            pieces.append((Interval(a, a + ln), -1, a + c + ln))
        points.append((a, c))
    return build(pieces, points)


def rotation(t) -> PwMap:
    """Right-continuous rotation ``x -> x + t mod 1``."""
    t = as_rational(t) % 1
    if t == 0:
        return identity()
    return iet_build([1 - t, t], [1, 0], "++")


@dataclass(frozen=True)
class FeatureReport:
    in_sfin: bool
    right_continuous: bool
    continuous: bool
    orientation: str
    unit_slopes: bool
    piece_count: int


def classify_features(h: PwMap) -> FeatureReport:
    rc = all(p.right_limit() == y for p, y in zip(h.pieces, h.points))
    continuous = rc and all(
        prev(piece.source.left) == y for prev, piece, y in zip(h.pieces, h.pieces[1:], h.points[1:])
    )
    signs = {p.slope > 0 for p in h.pieces}
    if signs == {True}:
        orientation = "all-preserving"
    elif signs == {False}:
        orientation = "all-reversing"
    else:
        orientation = "mixed"
    return FeatureReport(
        in_sfin=in_sfin(h),
        right_continuous=rc,
        continuous=continuous,
        orientation=orientation,
        unit_slopes=all(abs(p.slope) == 1 for p in h.pieces),
        piece_count=len(h.pieces),
    )


def has_unit_slopes(h: PwMap) -> bool:
    return all(abs(p.slope) == 1 for p in h.pieces)


def is_rc_preserving(h: PwMap) -> bool:
    f = classify_features(h)
    return f.right_continuous and f.orientation == "all-preserving"


def element_order_upto(h: PwMap, nmax: int):
    """Least ``n <= nmax`` with ``h^n = id``, else the string ``"exceeds nmax"``."""
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    p = h
    for n in range(1, nmax + 1):
        if is_identity(p):
            return n
        p = compose(h, p)
    return "exceeds nmax"
