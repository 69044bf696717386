"""Per-symbol coding efficiency of number bases.

A base-b alphabet of equiprobable symbols carries log(b) units of
information per symbol at a per-symbol cost proportional to b, so the
efficiency measure is ln(b)/b.  It peaks at b = e and falls off on both
sides, which is what makes base 3 the best integer base.
"""

import math
from dataclasses import dataclass

NATS = "nats"
BITS = "bits"

_LN2 = math.log(2)


@dataclass(frozen=True)
class EfficiencyPoint:
    """One sampled point of the efficiency curve."""

    base: float
    value: float
    unit: str


def _check_unit(unit: str) -> None:
    if unit not in (NATS, BITS):
        raise ValueError(f"unit must be {NATS!r} or {BITS!r}, got {unit!r}")


def efficiency(base: float, unit: str = NATS) -> float:
    """Per-symbol coding efficiency ln(base)/base.

    With unit="bits" the value is converted by dividing by ln 2.
    Raises ValueError for base <= 1, where the measure is undefined.
    """
    _check_unit(unit)
    if base <= 1:
        raise ValueError(f"base must be > 1, got {base}")
    value = math.log(base) / base
    if unit == BITS:
        value /= _LN2
    return value


def optimal_base() -> tuple[float, float]:
    """The maximizing base and its efficiency in nats: (e, 1/e)."""
    return (math.e, 1.0 / math.e)


def capacity(base: float) -> float:
    """Information-carrying capacity ln(base) in nats, for base >= 2."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    return math.log(base)


def capacity_shortfall(base: float) -> float:
    """How far ln(base) falls short of the optimum ln(e) = 1.

    Positive means worse than the optimum; base 3 comes out negative
    (a surplus) because ln 3 > 1.
    """
    return 1.0 - capacity(base)


def efficiency_curve(
    b_min: float, b_max: float, step: float, unit: str = NATS
) -> list[EfficiencyPoint]:
    """Sample efficiency(b, unit) on the grid b_min, b_min+step, ..., b_max.

    The endpoint is included when it lies on the grid.  Raises ValueError
    for a malformed range (needs 1 < b_min < b_max and step > 0).
    """
    _check_unit(unit)
    if not (1 < b_min < b_max) or step <= 0:
        raise ValueError(
            f"need 1 < b_min < b_max and step > 0, got ({b_min}, {b_max}, {step})"
        )
    points = []
    i = 0
    # index-based stepping avoids accumulating float error across the grid
    while (b := b_min + i * step) <= b_max + step * 1e-9:
        points.append(EfficiencyPoint(b, efficiency(b, unit), unit))
        i += 1
    return points
