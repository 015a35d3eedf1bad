"""The signature homomorphism to Z/2Z.

For a map ``h`` and a partition ``P`` on whose interiors ``h`` is
continuous, the signature about ``P`` is the number of order-reversing
intervals plus the parity of the permutation that moves each ``h(α)`` to
``β``, where ``α`` is the left endpoint of an interval and ``β`` the left
endpoint of its image.  The value does not depend on ``P``.
"""

from __future__ import annotations

from .elements import (
    FinPerm,
    PwMap,
    _require_associated,
    image_of_interior,
    minimal_partition,
    reverses_on,
)
from .intervals import Partition


class SignBit(int):
    """An element of Z/2Z; ``+`` is addition mod 2."""

    def __new__(cls, value=0):
        return super().__new__(cls, int(value) % 2)

    def __add__(self, other):
        return SignBit(int(self) + int(other))

    __radd__ = __add__

    def __repr__(self):
        return f"SignBit({int(self)})"


def flip_number(h: PwMap, p: Partition) -> int:
    """Number of intervals of ``p`` on which ``h`` reverses order (not reduced)."""
    _require_associated(h, p)
    return sum(reverses_on(h, iv) for iv in p)


def sigma_default(h: PwMap, p: Partition) -> FinPerm:
    """Permutation sending ``h(left endpoint)`` to the left endpoint of the image."""
    _require_associated(h, p)
    return FinPerm({h(iv.left): image_of_interior(h, iv).left for iv in p})


def finperm_sign(t: FinPerm) -> SignBit:
    """Parity from the cycle type."""
    return SignBit(sum(len(c) - 1 for c in t.cycles()))


def inversion_sign(t: FinPerm) -> SignBit:
    """Parity by counting inversions on the sorted support.

    Kept deliberately naive; it serves as an independent check of
    :func:`finperm_sign`.
    """
    pts = t.support
    images = [t(x) for x in pts]
    inversions = sum(
        1
        for i in range(len(images))
        for j in range(i + 1, len(images))
        if images[i] > images[j]
    )
    return SignBit(inversions)


def signature_at(h: PwMap, p: Partition) -> SignBit:
    return SignBit(flip_number(h, p)) + finperm_sign(sigma_default(h, p))


def signature(h: PwMap) -> SignBit:
    return signature_at(h, minimal_partition(h))
