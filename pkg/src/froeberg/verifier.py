"""Randomized verification of Hilbert function values over GF(p).

The degree-(d+k) component of <g_1, ..., g_z> is the column span of the
multiplication matrix whose columns are the coefficient vectors of
``mu * g_i`` for every degree-k monomial ``mu``. Its rank for random forms
lower-bounds the generic rank, so reaching the conjectured value in a trial
certifies it; falling short is only evidence.

Results are over GF(p), not characteristic zero.
"""

from __future__ import annotations

import enum
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import factorial
from typing import Optional, Sequence

import numpy as np

from .combinatorics import dim_graded, index_table, monomials
from .criterion import Regime, covered_z_set, theorem1_status
from .errors import ResourceLimitError
from .gfp_linalg import DEFAULT_PRIME, SIZE_CAP, PrimeFieldMatrix, check_modulus, rank
from .series import froberg_ideal_series

log = logging.getLogger(__name__)

DEFAULT_TRIALS = 3


class FormClass(str, enum.Enum):
    DENSE_GENERIC = "DenseGeneric"
    POWER_OF_LINEAR = "PowerOfLinear"

    @classmethod
    def parse(cls, tag: "str | FormClass") -> "FormClass":
        if isinstance(tag, FormClass):
            return tag
        aliases = {"dense": cls.DENSE_GENERIC, "power": cls.POWER_OF_LINEAR}
        if tag in aliases:
            return aliases[tag]
        return cls(tag)


@dataclass(frozen=True, eq=False)
class FormVector:
    n: int
    d: int
    coefficients: np.ndarray
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        coeffs = np.mod(np.asarray(self.coefficients, dtype=np.int64), self.p)
        if coeffs.shape != (dim_graded(self.n, self.d),):
            raise ValueError(
                f"form needs {dim_graded(self.n, self.d)} coefficients, got {coeffs.shape}"
            )
        if not coeffs.any():
            raise ValueError("form is identically zero")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def _power_of_linear(n: int, d: int, linear: Sequence[int], p: int) -> np.ndarray:
    out = np.zeros(dim_graded(n, d), dtype=np.int64)
    d_fact = factorial(d)
    for i, mono in enumerate(monomials(n, d)):
        mult = d_fact
        for e in mono.exponents:
            mult //= factorial(e)
        if mult % p == 0:
            log.warning("multinomial %d for %s vanishes mod %d", mult, mono.exponents, p)
        val = mult % p
        for c, e in zip(linear, mono.exponents):
            if e:
                val = val * pow(int(c), e, p) % p
        out[i] = val
    return out


def sample_form(
    form_class: "FormClass | str",
    n: int,
    d: int,
    p: int,
    rng: np.random.Generator,
) -> FormVector:
    form_class = FormClass.parse(form_class)
    size = dim_graded(n, d)
    if form_class is FormClass.DENSE_GENERIC:
        while True:
            coeffs = rng.integers(0, p, size=size, dtype=np.int64)
            if coeffs.any():
                return FormVector(n, d, coeffs, p)
    while True:
        linear = rng.integers(0, p, size=n, dtype=np.int64)
        if linear.any():
            break
    return FormVector(n, d, _power_of_linear(n, d, linear, p), p)


def linear_power(n: int, d: int, linear: Sequence[int], p: int = DEFAULT_PRIME) -> FormVector:
    """The form ``l^d`` for an explicit linear form ``l``."""
    return FormVector(n, d, _power_of_linear(n, d, linear, p), p)


@lru_cache(maxsize=128)
def _product_rows(n: int, d: int, k: int) -> np.ndarray:
    """rows[j, i] = position of (k-monomial j) * (d-monomial i) in degree d+k."""
    target = index_table(n, d + k)
    low = monomials(n, k)
    high = monomials(n, d)
    rows = np.empty((len(low), len(high)), dtype=np.int64)
    for j, mu in enumerate(low):
        for i, nu in enumerate(high):
            rows[j, i] = target[tuple(a + b for a, b in zip(mu.exponents, nu.exponents))]
    rows.setflags(write=False)
    return rows


def multiplication_matrix(forms: Sequence[FormVector], k: int) -> PrimeFieldMatrix:
    if not forms:
        raise ValueError("need at least one form")
    n, d, p = forms[0].n, forms[0].d, forms[0].p
    if any((f.n, f.d, f.p) != (n, d, p) for f in forms):
        raise ValueError("all forms must share n, d and p")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    n_rows = dim_graded(n, d + k)
    block = dim_graded(n, k)
    n_cols = len(forms) * block
    if n_rows > SIZE_CAP or n_cols > SIZE_CAP:
        raise ResourceLimitError(
            f"multiplication matrix {n_rows}x{n_cols} exceeds size cap {SIZE_CAP}"
        )
    table = _product_rows(n, d, k)
    mat = np.zeros((n_rows, n_cols), dtype=np.int64)
    for f_idx, form in enumerate(forms):
        for j in range(block):
            mat[table[j], f_idx * block + j] = form.coefficients
    return PrimeFieldMatrix(mat, p)


def _ideal_rank(forms: Sequence[FormVector], k: int) -> int:
    if not forms:
        return 0
    return rank(multiplication_matrix(forms, k))


@dataclass(frozen=True)
class HFResult:
    ranks: tuple[int, ...]

    @property
    def max(self) -> int:
        return max(self.ranks)


def _sample_forms(form_class, n, d, z, p, rng) -> list[FormVector]:
    return [sample_form(form_class, n, d, p, rng) for _ in range(z)]


def _run_trials(fn, trials: int, jobs: int) -> list:
    if jobs > 1 and trials > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, range(trials)))
    return [fn(t) for t in range(trials)]


def empirical_hf(
    n: int,
    d: int,
    z: int,
    form_class: "FormClass | str",
    k: int,
    p: int = DEFAULT_PRIME,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    jobs: int = 1,
) -> HFResult:
    """Rank of the degree-(d+k) multiplication matrix for ``trials`` random draws."""
    if trials < 1:
        raise ValueError("need at least one trial")
    p = check_modulus(p)

    def one(t: int) -> int:
        forms = _sample_forms(form_class, n, d, z, p, trial_rng(seed, t))
        return _ideal_rank(forms, k)

    return HFResult(tuple(_run_trials(one, trials, jobs)))


def _az_trial(n, d, k, zmax, form_class, p, rng) -> list[int]:
    # g is drawn first so every prefix g_1..g_z sees the same extra form
    g = sample_form(form_class, n, d, p, rng)
    gs = _sample_forms(form_class, n, d, zmax, p, rng)
    sk = dim_graded(n, k)
    out = []
    for z in range(1, zmax + 1):
        hf_z = _ideal_rank(gs[:z], k)
        hf_zg = _ideal_rank(gs[:z] + [g], k)
        out.append(hf_z + sk - hf_zg)
    return out


def intersection_dim_az(
    n: int,
    d: int,
    k: int,
    z: int,
    form_class: "FormClass | str",
    p: int = DEFAULT_PRIME,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
) -> int:
    """dim(<g_1..g_z>_{d+k} ∩ <g>_{d+k}), maximized over trials."""
    if z < 1:
        raise ValueError("a_z needs z >= 1")
    return az_sequence(n, d, k, z, form_class, p, seed, trials)[z - 1]


def az_sequence(
    n: int,
    d: int,
    k: int,
    zmax: int,
    form_class: "FormClass | str",
    p: int = DEFAULT_PRIME,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    jobs: int = 1,
) -> list[int]:
    """a_1, ..., a_zmax from nested draws, each entry maximized over trials."""
    if zmax < 1 or trials < 1:
        raise ValueError("need zmax >= 1 and trials >= 1")
    p = check_modulus(p)
    per_trial = _run_trials(
        lambda t: _az_trial(n, d, k, zmax, form_class, p, trial_rng(seed, t)), trials, jobs
    )
    return [max(col) for col in zip(*per_trial)]


@dataclass(frozen=True)
class LemmaShape:
    z0: Optional[int]
    z1: Optional[int]
    shape_ok: bool
    width_ok: bool


def lemma_shape(seq: Sequence[int], dim_sk: int) -> LemmaShape:
    """Check that a_1, a_2, ... is zero, then strictly rising to dim S_k, then flat."""
    z0 = next((i + 1 for i, a in enumerate(seq) if a != 0), None)
    z1 = next((i + 1 for i, a in enumerate(seq) if a == dim_sk), None)
    ok = z0 is not None and z1 is not None
    if ok:
        zeros = all(a == 0 for a in seq[: z0 - 1])
        rising = all(seq[i] < seq[i + 1] for i in range(z0 - 1, z1 - 1))
        flat = all(a == dim_sk for a in seq[z1 - 1 :])
        ok = zeros and rising and flat
    width_ok = z0 is not None and z1 is not None and z1 - z0 <= dim_sk
    return LemmaShape(z0, z1, ok, width_ok)


@dataclass
class DegreeRecord:
    degree: int
    k: int
    empirical: list[int]
    empirical_max: int
    conjectured: int
    regime: str
    predicted: Optional[int]
    proven: bool
    status: str
    match: bool


@dataclass
class VerificationReport:
    n: int
    d: int
    z: int
    form_class: str
    p: int
    seed: int
    trials: int
    D: int
    records: list[DegreeRecord] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.records)

    @property
    def proven_mismatches(self) -> list[DegreeRecord]:
        return [r for r in self.records if r.proven and not r.match]

    def to_dict(self) -> dict:
        out = asdict(self)
        out["class"] = out.pop("form_class")
        out["records"] = out.pop("records")
        out["field"] = f"GF({self.p}); characteristic-zero values are only estimated"
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            n=data["n"],
            d=data["d"],
            z=data["z"],
            form_class=data["class"],
            p=data["p"],
            seed=data["seed"],
            trials=data["trials"],
            D=data["D"],
            records=[DegreeRecord(**r) for r in data["records"]],
        )

    def to_table(self) -> str:
        head = (
            f"n={self.n} d={self.d} z={self.z} class={self.form_class} "
            f"p={self.p} seed={self.seed} trials={self.trials}\n"
        )
        cols = f"{'deg':>4} {'k':>3} {'empirical':>10} {'conj':>8} {'regime':>16} {'proven':>6}  status\n"
        body = "".join(
            f"{r.degree:>4} {r.k:>3} {r.empirical_max:>10} {r.conjectured:>8} "
            f"{r.regime:>16} {('yes' if r.proven else 'no'):>6}  {r.status}\n"
            for r in self.records
        )
        return head + cols + body


def _is_proven(
    n: int, z: int, form_class: FormClass, regime_known: bool, prop2_covered: bool
) -> bool:
    if regime_known or prop2_covered or z <= n + 1:
        return True
    # Fröberg (n = 2) and Anick (n = 3) cover dense generic forms only; general
    # powers of linear forms already fail in 3 variables (5 cubes, degree 4).
    if form_class is FormClass.DENSE_GENERIC:
        return n <= 3
    return n <= 2


def verify_against_conjecture(
    n: int,
    d: int,
    z: int,
    form_class: "FormClass | str",
    D: int,
    p: int = DEFAULT_PRIME,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    jobs: int = 1,
) -> VerificationReport:
    form_class = FormClass.parse(form_class)
    p = check_modulus(p)
    if trials < 1:
        raise ValueError("need at least one trial")
    conj = froberg_ideal_series(n, d, z, D)

    def one(t: int) -> list[int]:
        forms = _sample_forms(form_class, n, d, z, p, trial_rng(seed, t))
        return [_ideal_rank(forms, m - d) for m in range(d, D + 1)]

    per_trial = _run_trials(one, trials, jobs)
    covered = z >= 1 and covered_z_set(n, d).covers(z)

    report = VerificationReport(n, d, z, form_class.value, p, seed, trials, D)
    for i, m in enumerate(range(d, D + 1)):
        k = m - d
        ranks = [tr[i] for tr in per_trial]
        best = max(ranks)
        status = theorem1_status(n, d, k, z)
        expected = conj[m]
        if best == expected:
            label = "match"
        elif best < expected:
            label = "observed_below"
        else:
            label = "above_conjecture"
        report.records.append(
            DegreeRecord(
                degree=m,
                k=k,
                empirical=ranks,
                empirical_max=best,
                conjectured=expected,
                regime=status.regime.value,
                predicted=status.predicted_value,
                proven=_is_proven(
                    n, z, form_class, status.regime is not Regime.UNKNOWN, covered
                ),
                status=label,
                match=best == expected,
            )
        )
    return report
