"""Presentation rounding shared by the CLI and the reproduction reports."""

from __future__ import annotations

import math
from decimal import ROUND_HALF_UP, Decimal


def round_half_away(x: float, digits: int = 2) -> float:
    """Round to ``digits`` decimals, ties away from zero, using the shortest decimal repr of ``x``.

    >>> round_half_away(0.465), round_half_away(0.7275), round_half_away(-0.125)
    (0.47, 0.73, -0.13)
    """
    if math.isnan(x) or math.isinf(x):
        return x
    q = Decimal(1).scaleb(-digits)
    return float(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_UP))


def hundredths(x: float) -> int:
    """``x`` rounded half away from zero, in integer hundredths."""
    return int(Decimal(repr(x)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP).scaleb(2))


def format_value(x: float, digits: int | None = None) -> str:
    if digits is None:
        return repr(float(x))
    return f"{round_half_away(x, digits):.{digits}f}"
