"""Identification of the representation variety a computation refers to.

A target is a conjugacy class of SU(2) (one of the central elements, or a
generic class isomorphic to the 2-sphere) together with the cross-cap count
``n``: the underlying surface is the connected sum of ``n + 1`` projective
planes, so points of the variety are (n+1)-tuples of unit quaternions whose
squares multiply into the class.

For central classes the variety is the regular or the singular fiber of the
product-of-squares map depending on parity: the regular fiber sits over
``(-1)^n`` and the singular fiber over ``(-1)^(n+1)``.  That parity dispatch
is centralized here so it is written (and unit tested) exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class TargetKind(Enum):
    CENTRAL_PLUS = "plus"
    CENTRAL_MINUS = "minus"
    GENERIC = "generic"


class Variant(Enum):
    """Regular versus singular fiber of the product-of-squares map."""

    REGULAR = "regular"
    SINGULAR = "singular"


@dataclass(frozen=True)
class SurfaceTarget:
    kind: TargetKind
    n: int

    def __post_init__(self):
        if not isinstance(self.kind, TargetKind):
            raise TypeError("kind must be a TargetKind")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError("cross-cap count n must be a non-negative integer")

    @property
    def is_central(self) -> bool:
        return self.kind is not TargetKind.GENERIC

    @property
    def variant(self) -> Variant:
        """Regular/singular classification; only central targets have one."""
        if self.kind is TargetKind.CENTRAL_PLUS:
            return Variant.REGULAR if self.n % 2 == 0 else Variant.SINGULAR
        if self.kind is TargetKind.CENTRAL_MINUS:
            return Variant.REGULAR if self.n % 2 == 1 else Variant.SINGULAR
        raise ValueError("generic targets are neither regular nor singular fibers")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def central_plus(cls, n: int) -> "SurfaceTarget":
        return cls(TargetKind.CENTRAL_PLUS, n)

    @classmethod
    def central_minus(cls, n: int) -> "SurfaceTarget":
        return cls(TargetKind.CENTRAL_MINUS, n)

    @classmethod
    def generic(cls, n: int) -> "SurfaceTarget":
        return cls(TargetKind.GENERIC, n)

    @classmethod
    def regular(cls, n: int) -> "SurfaceTarget":
        """The central target whose variety is the regular fiber (over (-1)^n)."""
        kind = TargetKind.CENTRAL_PLUS if n % 2 == 0 else TargetKind.CENTRAL_MINUS
        return cls(kind, n)

    @classmethod
    def singular(cls, n: int) -> "SurfaceTarget":
        """The central target whose variety is the singular fiber (over (-1)^(n+1))."""
        kind = TargetKind.CENTRAL_MINUS if n % 2 == 0 else TargetKind.CENTRAL_PLUS
        return cls(kind, n)
