"""Closed-form spectral-radius bounds and the sign checks behind them."""

from __future__ import annotations

import math

TWO_PLUS_SQRT7 = 2.0 + math.sqrt(7.0)


def shu_hong(n: int) -> float:
    """Upper bound 3/2 + sqrt(n - 7/4) for connected outerplanar graphs."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return 1.5 + math.sqrt(n - 1.75)


def claim1_lower(n: int) -> float:
    """Lower bound sqrt(n) + 1 - 1/(n - sqrt(n)) for the extremal radius.

    Rayleigh value of the wheel's Perron vector on the wheel minus one rim
    edge, which is outerplanar.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    r = math.sqrt(n)
    return r + 1.0 - 1.0 / (n - r)


def planar_bound_catalog(n: int) -> dict[str, float]:
    """The four historical planar spectral-radius bounds, evaluated at n."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return {
        "hong_1988": math.sqrt(5.0 * n - 11.0),
        "cao_vince_1993": 4.0 + math.sqrt(3.0 * n - 9.0),
        "hong_1995": 2.0 * math.sqrt(2.0) + math.sqrt(3.0 * n - 7.5),
        "ellingham_zha_2000": 2.0 + math.sqrt(2.0 * n - 6.0),
    }


def inequality4_coefficient(n: int) -> float:
    """The factor 1 - 5/claim1_lower(n) multiplying d(u) in the degree bound.

    Negative at n = 16, positive from n = 17 on; its sign is what restricts
    the closing argument to n >= 17.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return 1.0 - 5.0 / claim1_lower(n)


def claim5_threshold(n: int) -> bool:
    """Whether the lower bound already forces the radius above 2 + sqrt(7)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return claim1_lower(n) > TWO_PLUS_SQRT7
