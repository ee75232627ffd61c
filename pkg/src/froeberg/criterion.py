"""Which generator counts have a certified Hilbert series.

All bound comparisons are done on ``Fraction`` values so boundary values of
``z`` are never misclassified by rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Optional

from .combinatorics import dim_graded


class Regime(str, enum.Enum):
    KNOWN_INJECTIVE = "KnownInjective"
    KNOWN_SURJECTIVE = "KnownSurjective"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class RegimeStatus:
    regime: Regime
    predicted_value: Optional[int] = None

    @property
    def known(self) -> bool:
        return self.regime is not Regime.UNKNOWN


@dataclass(frozen=True)
class ZInterval:
    r: int
    z_lo: int
    z_hi: int

    def __post_init__(self):
        if self.z_lo > self.z_hi:
            raise ValueError(f"inverted interval [{self.z_lo}, {self.z_hi}]")

    def __contains__(self, z: int) -> bool:
        return self.z_lo <= z <= self.z_hi

    def __len__(self) -> int:
        return self.z_hi - self.z_lo + 1

    def to_dict(self) -> dict:
        return {"r": self.r, "zLo": self.z_lo, "zHi": self.z_hi}


def truncated_decimal(q: Fraction, places: int = 3) -> str:
    """Render a non-negative rational with digits cut off, never rounded up."""
    if q < 0:
        raise ValueError("only non-negative values are rendered")
    scaled = q.numerator * 10**places // q.denominator
    whole, frac = divmod(scaled, 10**places)
    return f"{whole}.{frac:0{places}d}"


@dataclass(frozen=True)
class CoverageReport:
    n: int
    d: int
    intervals: tuple[ZInterval, ...]
    covered_count: int
    total: int
    p_d: Fraction
    gaps: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    @property
    def gap_count(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.gaps)

    @property
    def decimal(self) -> str:
        return truncated_decimal(self.p_d)

    def covers(self, z: int) -> bool:
        return any(z in iv for iv in self.intervals)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "dimSd": self.total,
            "intervals": [iv.to_dict() for iv in self.intervals],
            "gaps": [[lo, hi] for lo, hi in self.gaps],
            "covered": self.covered_count,
            "pd": {
                "num": self.p_d.numerator,
                "den": self.p_d.denominator,
                "decimal": self.decimal,
            },
        }


def injective_bound(n: int, d: int, k: int) -> Fraction:
    s = dim_graded(n, k)
    return Fraction(dim_graded(n, d + k), s) - s


def surjective_bound(n: int, d: int, k: int) -> Fraction:
    s = dim_graded(n, k)
    return Fraction(dim_graded(n, d + k), s) + s


def theorem1_status(n: int, d: int, k: int, z: int) -> RegimeStatus:
    """Regime of HF(d+k) for ``z`` generic forms of degree ``d``.

    ``z = 0`` is always injective with value 0, even where the bound is
    negative. ``k = 0`` is accepted as well: in degree ``d`` the ideal is spanned by the
    generators themselves, so HF(d) = min(z, dim S_d) for every ``z``.
    """
    if n < 1 or d < 1 or k < 0 or z < 0:
        raise ValueError(f"invalid arguments n={n}, d={d}, k={k}, z={z}")
    sk = dim_graded(n, k)
    top = dim_graded(n, d + k)
    if z == 0:
        return RegimeStatus(Regime.KNOWN_INJECTIVE, 0)
    if k == 0:
        if z <= top:
            return RegimeStatus(Regime.KNOWN_INJECTIVE, z)
        return RegimeStatus(Regime.KNOWN_SURJECTIVE, top)
    if z <= injective_bound(n, d, k):
        return RegimeStatus(Regime.KNOWN_INJECTIVE, z * sk)
    if z >= surjective_bound(n, d, k):
        return RegimeStatus(Regime.KNOWN_SURJECTIVE, top)
    return RegimeStatus(Regime.UNKNOWN)


def prop2_interval(n: int, d: int, r: int) -> Optional[ZInterval]:
    """Integer ``z`` range certified through the pair of degrees d+r, d+r+1.

    For ``r = 0`` the range is extended up to dim S_d: that many generic forms
    already span S_d, so the series is the trivial one.
    """
    if n < 1 or d < 1 or r < 0:
        raise ValueError(f"invalid arguments n={n}, d={d}, r={r}")
    lo = ceil(surjective_bound(n, d, r + 1))
    total = dim_graded(n, d)
    if r == 0:
        lo, hi = min(lo, total), total
    else:
        hi = floor(injective_bound(n, d, r))
    lo = max(lo, 1)
    if lo > hi:
        return None
    return ZInterval(r, lo, hi)


def covered_z_set(n: int, d: int) -> CoverageReport:
    total = dim_graded(n, d)
    intervals = []
    for r in range(d + n + 1):
        iv = prop2_interval(n, d, r)
        if iv is None:
            continue
        clipped = ZInterval(iv.r, max(iv.z_lo, 1), min(iv.z_hi, total))
        intervals.append(clipped)

    covered = [False] * (total + 1)
    for iv in intervals:
        for z in range(iv.z_lo, iv.z_hi + 1):
            covered[z] = True
    count = sum(covered[1:])

    gaps = []
    z = 1
    while z <= total:
        if covered[z]:
            z += 1
            continue
        start = z
        while z <= total and not covered[z]:
            z += 1
        gaps.append((start, z - 1))

    return CoverageReport(
        n=n,
        d=d,
        intervals=tuple(intervals),
        covered_count=count,
        total=total,
        p_d=Fraction(count, total),
        gaps=tuple(gaps),
    )


def probability_pd(n: int, d: int) -> Fraction:
    return covered_z_set(n, d).p_d


def pd_sweep(n: int, dmax: int, dmin: int = 1) -> list[tuple[int, Fraction]]:
    return [(d, probability_pd(n, d)) for d in range(dmin, dmax + 1)]


def prop3_tail_bound(n: int, d: int, k: int) -> Fraction:
    """Upper bound on 1 - p_d obtained by summing the first k+1 intervals."""
    if n < 1 or d < 1 or k < 1:
        raise ValueError(f"invalid arguments n={n}, d={d}, k={k}")
    total = dim_graded(n, d)
    head = Fraction(dim_graded(n, d + k + 1), dim_graded(n, k + 1))
    widths = sum(dim_graded(n, r) + dim_graded(n, r + 1) for r in range(k + 1))
    return (head + widths) / total
