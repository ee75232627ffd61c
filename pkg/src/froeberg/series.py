"""Truncated integer power series and the conjectured Fröberg series.

Every series lives on the degree grid ``0..D``. Ideal series keep explicit
zeros below the generator degree so coefficients line up across modules.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Sequence

from .combinatorics import dim_graded


@dataclass(frozen=True)
class IntegerSeries:
    coefficients: tuple[int, ...]
    # free-form labels (n, d, z) carried into serialized output
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if len(self.coefficients) == 0:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def D(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, m: int) -> int:
        return self.coefficients[m]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other: "IntegerSeries") -> "IntegerSeries":
        _check_grid(self, other)
        return IntegerSeries(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "IntegerSeries") -> "IntegerSeries":
        _check_grid(self, other)
        return IntegerSeries(tuple(a - b for a, b in zip(self, other)))

    def to_dict(self) -> dict:
        out = {k: self.meta[k] for k in ("n", "d", "z") if k in self.meta}
        out["D"] = self.D
        out["coeffs"] = list(self.coefficients)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "IntegerSeries":
        coeffs = data["coeffs"]
        if len(coeffs) != data["D"] + 1:
            raise ValueError("coefficient count does not match D")
        meta = {k: data[k] for k in ("n", "d", "z") if k in data}
        return cls(tuple(coeffs), meta)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "coefficient"])
        for m, c in enumerate(self.coefficients):
            w.writerow([m, c])
        return buf.getvalue()


def _check_grid(a: IntegerSeries, b: IntegerSeries) -> None:
    if a.D != b.D:
        raise ValueError(f"series on different grids: D={a.D} vs D={b.D}")


def _mul_trunc(a: Sequence[int], b: Sequence[int], D: int) -> list[int]:
    out = [0] * (D + 1)
    for i, ai in enumerate(a[: D + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: D + 1 - i]):
            out[i + j] += ai * bj
    return out


def _pow_trunc(base: Sequence[int], e: int, D: int) -> list[int]:
    result = [1] + [0] * D
    acc = list(base[: D + 1]) + [0] * max(0, D + 1 - len(base))
    while e:
        if e & 1:
            result = _mul_trunc(result, acc, D)
        e >>= 1
        if e:
            acc = _mul_trunc(acc, acc, D)
    return result


def full_ring_series(n: int, D: int) -> IntegerSeries:
    """Hilbert series of the polynomial ring, 1/(1-t)^n mod t^(D+1)."""
    if D < 0:
        raise ValueError(f"truncation degree must be non-negative, got {D}")
    return IntegerSeries(tuple(dim_graded(n, m) for m in range(D + 1)), {"n": n})


def truncate_at_first_negative(s: IntegerSeries | Sequence[int]) -> IntegerSeries:
    coeffs = list(s.coefficients if isinstance(s, IntegerSeries) else s)
    meta = s.meta if isinstance(s, IntegerSeries) else {}
    for i, c in enumerate(coeffs):
        if c < 0:
            coeffs[i:] = [0] * (len(coeffs) - i)
            break
    return IntegerSeries(tuple(coeffs), dict(meta))


def _validate(n: int, d: int, z: int, D: int) -> None:
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if z < 0 or D < 0:
        raise ValueError(f"need z >= 0 and D >= 0, got z={z}, D={D}")


def froberg_quotient_series(n: int, d: int, z: int, D: int) -> IntegerSeries:
    """[(1 - t^d)^z / (1 - t)^n], truncated at its first negative coefficient."""
    _validate(n, d, z, D)
    meta = {"n": n, "d": d, "z": z}
    ring = full_ring_series(n, D)
    if z == 0:
        return IntegerSeries(ring.coefficients, meta)
    relations = [0] * (D + 1)
    relations[0] = 1
    if d <= D:
        relations[d] = -1
    numerator = _pow_trunc(relations, z, D)
    raw = _mul_trunc(numerator, ring.coefficients, D)
    return truncate_at_first_negative(IntegerSeries(tuple(raw), meta))


def froberg_ideal_series(n: int, d: int, z: int, D: int) -> IntegerSeries:
    """Conjectured Hilbert series of the ideal: ring series minus quotient series."""
    ring = full_ring_series(n, D)
    quotient = froberg_quotient_series(n, d, z, D)
    return IntegerSeries((ring - quotient).coefficients, {"n": n, "d": d, "z": z})


def min_form_series(n: int, d: int, z: int, D: int) -> IntegerSeries:
    """sum_k min(z dim S_k, dim S_{d+k}) t^(d+k) on the grid 0..D."""
    _validate(n, d, z, D)
    coeffs = [0] * (D + 1)
    for m in range(d, D + 1):
        k = m - d
        coeffs[m] = min(z * dim_graded(n, k), dim_graded(n, m))
    return IntegerSeries(tuple(coeffs), {"n": n, "d": d, "z": z})
