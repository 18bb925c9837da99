"""Theorem bounds: exact decimals for display, integer comparisons for checks.

Every check squares the inequality so no floating point decides a verdict.
"""

from decimal import ROUND_HALF_EVEN, Decimal
from typing import Optional

PLACES = Decimal("0.0001")


def _show(value: Decimal) -> Decimal:
    return value.quantize(PLACES, rounding=ROUND_HALF_EVEN)


def ew_bound(n: int) -> Decimal:
    """(1 + sqrt(8n - 7)) / 2, the odd-cycle length bound."""
    return _show((1 + Decimal(8 * n - 7).sqrt()) / 2)


def fw_bound(n: int) -> Decimal:
    """1/4 + sqrt(n - 15/16), the face-width transversal bound."""
    return _show(Decimal("0.25") + (Decimal(n) - Decimal(15) / 16).sqrt())


def single_edge_bound(n: int, max_degree: int) -> Decimal:
    """sqrt(2 * max_degree * n)."""
    return _show(Decimal(2 * max_degree * n).sqrt())


def stable_bound(n: int) -> Decimal:
    """(n - 1/4 - sqrt(n - 15/16)) / 2, the stable set guaranteed by the face-width transversal."""
    return _show((Decimal(n) - Decimal("0.25") - (Decimal(n) - Decimal(15) / 16).sqrt()) / 2)


def ew_ok(n: int, length: int) -> bool:
    return (2 * length - 1) ** 2 <= 8 * n - 7


def fw_ok(n: int, size: int) -> bool:
    a = 4 * size - 1
    return a <= 0 or a * a <= 16 * n - 15


def single_edge_ok(n: int, max_degree: int, size: int) -> bool:
    return size * size <= 2 * max_degree * n


def stable_ok(n: int, size: int) -> bool:
    a = 4 * n - 1 - 8 * size
    return a <= 0 or a * a <= 16 * n - 15


def short_cycle_branch(n: int, max_degree: int, length: int) -> bool:
    """True when length <= sqrt(2n / max_degree), the neighbourhood branch of the single-edge construction."""
    return length * length * max_degree <= 2 * n


def ratio(value: Optional[int], bound: Decimal) -> Optional[Decimal]:
    if value is None or bound == 0:
        return None
    return _show(Decimal(value) / bound)
