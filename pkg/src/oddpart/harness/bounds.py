"""Exact bound checks for a(G) against |V| and against the degree.

With ``lam**3 == 24`` the inequalities are decided without irrational numbers:

* ``TWO``:          a <= |V|^2 / lam      <=>  24 a^3 <= |V|^6
* ``THREE_HALVES``: a <= |V|^(3/2) / lam  <=>  576 a^6 <= |V|^9
* ``PERM_2POW``:    a <= 2^(n - 1)

``ALPHA`` (|G| <= |V|^alpha / lam with alpha = (3 ln 48 + ln 24) / (3 ln 9))
has no exact integer form and is evaluated with 50-digit decimal logarithms;
results within 2^-40 of the boundary are flagged instead of trusted.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum


class BoundKind(str, Enum):
    TWO = "TWO"
    THREE_HALVES = "THREE_HALVES"
    ALPHA = "ALPHA"
    PERM_2POW = "PERM_2POW"


ALPHA_PRECISION = 50
NEAR_BOUNDARY = Decimal(2) ** -40


def alpha_constant() -> Decimal:
    with localcontext() as ctx:
        ctx.prec = ALPHA_PRECISION
        return (3 * Decimal(48).ln() + Decimal(24).ln()) / (3 * Decimal(9).ln())


@dataclass(frozen=True)
class BoundReport:
    kind: BoundKind
    lhs: int
    size: int  # |V| for the linear bounds, the degree for PERM_2POW
    verdict: bool
    margin: int | Decimal
    near_boundary: bool = False

    def to_dict(self):
        return {"kind": self.kind.value, "lhs": self.lhs, "size": self.size,
                "verdict": self.verdict, "margin": str(self.margin),
                "near_boundary": self.near_boundary}


def check_bound(kind, lhs: int, size: int) -> BoundReport:
    """Decide one inequality; ``margin`` is the (scaled) slack, negative on failure."""
    kind = BoundKind(kind)
    if lhs < 1 or size < 1:
        raise ValueError("bound checks need positive integers")
    if kind is BoundKind.TWO:
        margin = size ** 6 - 24 * lhs ** 3
    elif kind is BoundKind.THREE_HALVES:
        margin = size ** 9 - 576 * lhs ** 6
    elif kind is BoundKind.PERM_2POW:
        margin = 2 ** (size - 1) - lhs
    else:
        with localcontext() as ctx:
            ctx.prec = ALPHA_PRECISION
            slack = (alpha_constant() * Decimal(size).ln() - Decimal(24).ln() / 3
                     - Decimal(lhs).ln())
        return BoundReport(kind, lhs, size, slack >= 0, slack, abs(slack) < NEAR_BOUNDARY)
    return BoundReport(kind, lhs, size, margin >= 0, margin)
