"""Dense matrices over GF(p) and their rank.

Entries are stored as int64 residues. With p < 2^31 a product of two
residues stays below 2^62, so one elimination step can form
``row - factor * pivot_row`` in int64 and reduce once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimitError

DEFAULT_PRIME = 2**31 - 1
MAX_MODULUS = 2**31
SIZE_CAP = 4000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(p: int) -> bool:
    """Miller-Rabin with fixed bases; exact for p < 3.3e24."""
    if p < 2:
        return False
    for q in _MR_BASES:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def check_modulus(p: int) -> int:
    p = int(p)
    if not 2 <= p < MAX_MODULUS:
        raise ValueError(f"modulus must lie in [2, 2^31), got {p}")
    if not is_probable_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def modinv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")
    return pow(a, -1, p)


@dataclass(frozen=True, eq=False)
class PrimeFieldMatrix:
    entries: np.ndarray
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        object.__setattr__(self, "p", check_modulus(self.p))
        arr = np.asarray(self.entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
        rows, cols = arr.shape
        if rows > SIZE_CAP or cols > SIZE_CAP:
            raise ResourceLimitError(
                f"matrix {rows}x{cols} exceeds size cap {SIZE_CAP} per dimension"
            )
        arr = np.mod(arr, self.p)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int = DEFAULT_PRIME) -> "PrimeFieldMatrix":
        if rows > SIZE_CAP or cols > SIZE_CAP:
            raise ResourceLimitError(
                f"matrix {rows}x{cols} exceeds size cap {SIZE_CAP} per dimension"
            )
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrimeFieldMatrix):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.entries, other.entries)

    def rank(self) -> int:
        return rank(self)

    def dumps(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.p}"]
        lines += [" ".join(str(int(x)) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "PrimeFieldMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        rows, cols, p = (int(t) for t in lines[0].split())
        body = [[int(t) for t in ln.split()] for ln in lines[1:]]
        if len(body) != rows or any(len(r) != cols for r in body):
            raise ValueError("matrix dump does not match its header")
        return cls(np.array(body, dtype=np.int64).reshape(rows, cols), p)


def rank(m: PrimeFieldMatrix) -> int:
    """Rank over GF(p) by row reduction on a private copy."""
    p = m.p
    a = np.array(m.entries, dtype=np.int64, copy=True)
    rows, cols = a.shape
    target = min(rows, cols)
    r = 0
    for c in range(cols):
        if r == target:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = modinv(int(a[r, c]), p)
        a[r, c:] = a[r, c:] * inv % p
        below = a[r + 1 :, c]
        hit = np.flatnonzero(below)
        if hit.size:
            idx = hit + r + 1
            a[idx, c:] = (a[idx, c:] - np.outer(a[idx, c], a[r, c:])) % p
        r += 1
    return r
