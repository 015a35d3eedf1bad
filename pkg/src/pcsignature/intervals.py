"""Exact rational points, half-open intervals and finite partitions of [0, 1).

All coordinates are :class:`fractions.Fraction`; nothing here ever touches a
float.  A point of the space is a rational ``x`` with ``0 <= x < 1``; the
value ``1`` only ever appears as the right bound of an interval.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (or a bare integer ``p``) into a Fraction.

    Only the strict literal form is accepted; decimals and exponents are
    rejected so that every value round-trips through :func:`format_rational`.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    """Canonical ``p/q`` text, always with an explicit denominator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use Fraction or 'p/q'")
    return Fraction(x)


def as_point(x: RationalLike) -> Fraction:
    """Coerce to a point of [0, 1), raising ValueError if out of range."""
    q = as_rational(x)
    if not 0 <= q < 1:
        raise ValueError(f"point {q} is not in [0,1)")
    return q


@dataclass(frozen=True, order=True)
class Interval:
    """Half-open interval ``[left, right)`` with ``0 <= left < right <= 1``.

    Its interior is ``(left, right)``, also when ``left == 0``.
    """

    left: Fraction
    right: Fraction

    def __post_init__(self):
        left, right = as_rational(self.left), as_rational(self.right)
        if not 0 <= left < right <= 1:
            raise ValueError(f"bad interval [{left},{right})")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    def __contains__(self, x) -> bool:
        return self.left <= x < self.right

    def contains_interval(self, other: "Interval") -> bool:
        return self.left <= other.left and other.right <= self.right

    def disjoint(self, other: "Interval") -> bool:
        return self.right <= other.left or other.right <= self.left

    def __str__(self):
        return f"[{format_rational(self.left)},{format_rational(self.right)})"


@dataclass(frozen=True)
class Partition:
    """Ordered finite tiling of [0, 1) by half-open intervals."""

    intervals: tuple[Interval, ...]

    def __post_init__(self):
        ivs = tuple(self.intervals)
        if not ivs:
            raise ValueError("a partition needs at least one interval")
        if ivs[0].left != 0 or ivs[-1].right != 1:
            raise ValueError("partition must start at 0 and end at 1")
        for a, b in zip(ivs, ivs[1:]):
            if a.right != b.left:
                raise ValueError(f"intervals {a} and {b} are not consecutive")
        object.__setattr__(self, "intervals", ivs)

    @property
    def breakpoints(self) -> tuple[Fraction, ...]:
        """Left endpoints of the intervals, in increasing order (starts at 0)."""
        return tuple(iv.left for iv in self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, k):
        return self.intervals[k]

    def locate(self, x) -> int:
        """Index of the interval containing the point ``x``."""
        return bisect_right(self.breakpoints, x) - 1

    def split(self, x) -> "Partition":
        """Refine by cutting the interval containing ``x`` at ``x``."""
        return make_partition(set(self.breakpoints) | {as_point(x)})

    def __str__(self):
        return "{" + ",".join(str(iv) for iv in self.intervals) + "}"


def make_partition(breakpoints: Iterable[RationalLike] = ()) -> Partition:
    """Partition of [0, 1) whose left endpoints are ``{0} | breakpoints``."""
    pts = sorted({as_point(x) for x in breakpoints} | {Fraction(0)})
    bounds = pts + [Fraction(1)]
    return Partition(tuple(Interval(a, b) for a, b in zip(bounds, bounds[1:])))


def common_refinement(p: Partition, q: Partition) -> Partition:
    return make_partition(set(p.breakpoints) | set(q.breakpoints))


def is_refinement(fine: Partition, coarse: Partition) -> bool:
    # Tilings of the same space: containment of intervals is containment of cut points.
    return set(coarse.breakpoints) <= set(fine.breakpoints)

