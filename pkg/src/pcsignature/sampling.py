"""Seeded random elements of the various subgroups, for property checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .elements import FinPerm, Interval, PwMap, build, from_finperm

KINDS = ("IET", "IET+", "IET+rc", "PAff", "FinPerm", "Homeo+")


@dataclass(frozen=True)
class Profile:
    max_pieces: int = 6
    denominator_bound: int = 32
    kind: str = "IET"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown class {self.kind!r}; expected one of {KINDS}")
        if self.max_pieces < 1 or self.denominator_bound < 1:
            raise ValueError("max_pieces and denominator_bound must be positive")


def random_point(rng: random.Random, bound: int, interior=True) -> Fraction:
    d = rng.randint(2 if interior else 1, max(bound, 2))
    return Fraction(rng.randint(1 if interior else 0, d - 1), d)


def random_cuts(rng: random.Random, n: int, bound: int) -> list[Fraction]:
    """Up to ``n - 1`` distinct points of (0, 1), sorted, with the given denominator bound."""
    cuts: set = set()
    if bound >= 2:
        for _ in range(40 * n):
            if len(cuts) >= n - 1:
                break
            cuts.add(random_point(rng, bound))
    return sorted(cuts)


def random_interval(rng: random.Random, bound: int) -> Interval:
    while True:
        a = random_point(rng, bound, interior=False)
        b = random_point(rng, bound) if rng.random() < 0.9 else Fraction(1)
        if a < b:
            return Interval(a, b)


def random_finperm(rng: random.Random, points, k=None) -> FinPerm:
    pts = list(points)
    if k is not None:
        pts = rng.sample(pts, min(k, len(pts)))
    shuffled = pts[:]
    rng.shuffle(shuffled)
    return FinPerm(dict(zip(pts, shuffled)))


def _tiling(cuts):
    bounds = [Fraction(0)] + list(cuts) + [Fraction(1)]
    return list(zip(bounds, bounds[1:]))


def _assemble(domain, image_blocks, arrangement, reversed_, sigma_shuffle, rng):
    """Pieces ``domain[k]`` onto ``image_blocks[arrangement.index(k)]``."""
    pos_of = {k: pos for pos, k in enumerate(arrangement)}
    pieces, lefts, starts = [], [], []
    for k, (a, b) in enumerate(domain):
        c, d = image_blocks[pos_of[k]]
        slope = (d - c) / (b - a)
        if reversed_[k]:
            pieces.append((Interval(a, b), -slope, d + slope * a))
        else:
            pieces.append((Interval(a, b), slope, c - slope * a))
        lefts.append(a)
        starts.append(c)
    targets = starts[:]
    if sigma_shuffle:
        rng.shuffle(targets)
    return build(pieces, list(zip(lefts, targets)))


def random_element(profile: Profile, seed: int) -> PwMap:
    """Deterministic pseudo-random element of the requested class."""
    rng = random.Random(f"{profile.kind}|{profile.max_pieces}|{profile.denominator_bound}|{seed}")
    bound = profile.denominator_bound
    n = rng.randint(1, profile.max_pieces)
    kind = profile.kind

    if kind == "FinPerm":
        pts = {random_point(rng, bound, interior=False) for _ in range(n - 1)}
        if len(pts) < 2 and bound >= 2:
            pts |= {Fraction(0), random_point(rng, bound)}
        return from_finperm(random_finperm(rng, sorted(pts)))

    domain = _tiling(random_cuts(rng, n, bound))
    n = len(domain)
    if kind in ("IET", "IET+", "IET+rc"):
        lengths = [b - a for a, b in domain]
        arrangement = list(range(n))
        rng.shuffle(arrangement)
        blocks, pos = [], Fraction(0)
        for k in arrangement:
            blocks.append((pos, pos + lengths[k]))
            pos += lengths[k]
    else:
        blocks = _tiling(random_cuts(rng, n, bound))
        if len(blocks) != n:
            # Not enough distinct cut points at this bound: fall back to a shared tiling.
            blocks = domain
        arrangement = list(range(n))
        if kind == "PAff":
            rng.shuffle(arrangement)
    if kind == "IET" or kind == "PAff":
        reversed_ = [rng.random() < 0.5 for _ in range(n)]
    else:
        reversed_ = [False] * n
    shuffle = kind in ("IET", "IET+", "PAff")
    return _assemble(domain, blocks, arrangement, reversed_, shuffle, rng)
