"""Binomials, graded dimensions and the graded-lex monomial basis.

All counts are Python ints, so nothing overflows for large degrees.
Within a fixed total degree monomials are listed in lexicographic order
with the first variable most significant: for two variables in degree 2
this is ``x^2, xy, y^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .errors import ResourceLimitError

MONOMIAL_CAP = 5_000_000


def binomial(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError(f"binomial needs non-negative arguments, got ({a}, {b})")
    return comb(a, b)


def dim_graded(n: int, m: int) -> int:
    """Number of monomials of degree ``m`` in ``n`` variables, C(m+n-1, n-1)."""
    if n < 1:
        raise ValueError(f"need at least one variable, got n={n}")
    if m < 0:
        return 0
    return comb(m + n - 1, n - 1)


@dataclass(frozen=True)
class ExponentVector:
    exponents: tuple[int, ...]
    degree: int

    def __post_init__(self):
        if len(self.exponents) < 1:
            raise ValueError("exponent vector needs at least one variable")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")
        if sum(self.exponents) != self.degree:
            raise ValueError(
                f"degree {self.degree} does not match exponents {self.exponents}"
            )

    @classmethod
    def of(cls, exponents: Sequence[int]) -> "ExponentVector":
        exps = tuple(int(e) for e in exponents)
        return cls(exps, sum(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        if other.n != self.n:
            raise ValueError("cannot multiply monomials in different rings")
        return ExponentVector(
            tuple(a + b for a, b in zip(self.exponents, other.exponents)),
            self.degree + other.degree,
        )


def _compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in _compositions(n - 1, m - first):
            yield (first,) + rest


@lru_cache(maxsize=256)
def _monomials_cached(n: int, m: int) -> tuple[ExponentVector, ...]:
    return tuple(ExponentVector(e, m) for e in _compositions(n, m))


def monomials(n: int, m: int, cap: int = MONOMIAL_CAP) -> tuple[ExponentVector, ...]:
    """All exponent vectors of degree ``m`` in ``n`` variables, lex-descending."""
    if m < 0:
        raise ValueError(f"degree must be non-negative, got {m}")
    size = dim_graded(n, m)
    if size > cap:
        raise ResourceLimitError(
            f"dim S_{m} = {size} in {n} variables exceeds monomial cap {cap}"
        )
    return _monomials_cached(n, m)


def monomial_index(v: ExponentVector | Sequence[int]) -> int:
    """Position of ``v`` in ``monomials(n, deg v)``.

    Counts the vectors that precede ``v``: at each position, every larger
    choice of that exponent contributes a full block of monomials in the
    remaining variables.
    """
    if not isinstance(v, ExponentVector):
        v = ExponentVector.of(v)
    n = v.n
    idx = 0
    remaining = v.degree
    for i, e in enumerate(v.exponents[:-1]):
        tail_vars = n - i - 1
        for bigger in range(e + 1, remaining + 1):
            idx += dim_graded(tail_vars, remaining - bigger)
        remaining -= e
    return idx


def index_table(n: int, m: int) -> dict[tuple[int, ...], int]:
    """Map from exponent tuple to graded-lex position in degree ``m``."""
    return {v.exponents: i for i, v in enumerate(monomials(n, m))}
