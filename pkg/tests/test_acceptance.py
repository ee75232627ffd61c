"""Exit criteria. Each test logs one PASS/FAIL line shown in the terminal summary."""

import json
import random
import time
from fractions import Fraction
from math import ceil, floor

import pytest

from froeberg.cli import main
from froeberg.combinatorics import dim_graded
from froeberg.criterion import (
    Regime,
    covered_z_set,
    probability_pd,
    prop3_tail_bound,
    theorem1_status,
    truncated_decimal,
)
from froeberg.gfp_linalg import SIZE_CAP
from froeberg.series import (
    froberg_ideal_series,
    froberg_quotient_series,
    full_ring_series,
    min_form_series,
    truncate_at_first_negative,
)
from froeberg.verifier import az_sequence, empirical_hf, lemma_shape, verify_against_conjecture


def report(log, name, ok, detail):
    log(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, detail


def test_ac1_example_reproduction(acceptance_log, capsys):
    start = time.perf_counter()
    code = main(["coverage", "--n", "5", "--d", "10", "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    elapsed = time.perf_counter() - start
    intervals = sorted((iv["zLo"], iv["zHi"]) for iv in data["intervals"])
    gaps = [tuple(g) for g in data["gaps"]]
    ok = (
        code == 0
        and intervals == [(103, 106), (137, 268), (278, 1001)]
        and gaps == [(1, 102), (107, 136), (269, 277)]
        and sum(hi - lo + 1 for lo, hi in gaps) == 141
        and (data["pd"]["num"], data["pd"]["den"]) == (860, 1001)
        and data["pd"]["decimal"] == "0.859"
        and elapsed < 1.0
    )
    report(acceptance_log, "AC1 example reproduction", ok,
           f"intervals={intervals} gaps={gaps} pd={data['pd']['decimal']} t={elapsed:.3f}s")


def test_ac2_pd_sweep(acceptance_log):
    start = time.perf_counter()
    got = {d: truncated_decimal(probability_pd(5, d)) for d in (15, 25, 40)}
    elapsed = time.perf_counter() - start
    ok = got == {15: "0.927", 25: "0.968", 40: "0.986"} and elapsed < 5.0
    report(acceptance_log, "AC2 p_d sweep", ok, f"{got} t={elapsed:.3f}s")


def test_ac3_dimension_anchors(acceptance_log):
    S = lambda m: dim_graded(5, m)  # noqa: E731
    got = (S(10), Fraction(S(11), S(1)), Fraction(S(12), S(2)), Fraction(S(13), S(3)))
    ok = got == (1001, Fraction(273), Fraction(364, 3), Fraction(68))
    report(acceptance_log, "AC3 dimension anchors", ok, ", ".join(str(x) for x in got))


def test_ac4_oracle_equivalence_proven_regimes(acceptance_log):
    start = time.perf_counter()
    cases = [(2, d, z) for d in range(1, 6) for z in range(0, 7)]
    cases += [(3, d, z) for d in range(1, 4) for z in range(0, dim_graded(3, d) + 1)]
    mismatches = []
    for n, d, z in cases:
        rep = verify_against_conjecture(n, d, z, "dense", 2 * d + 2, trials=3)
        if not rep.all_match:
            mismatches.append((n, d, z, [(r.degree, r.empirical_max, r.conjectured) for r in rep.records if not r.match]))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 120
    report(acceptance_log, "AC4 oracle equivalence (n=2, n=3)", ok,
           f"{len(cases)} instances, mismatches={mismatches} t={elapsed:.1f}s")


def _regime_samples(rng):
    for n in range(1, 5):
        for d in range(1, 5):
            for k in range(1, 3):
                sk = dim_graded(n, k)
                top = dim_graded(n, d + k)
                c = Fraction(top, sk)
                inj_hi = floor(c - sk)
                surj_lo = max(ceil(c + sk), 1)
                zs = []
                if inj_hi >= 1:
                    zs += sorted({1, inj_hi, rng.randint(1, inj_hi)})
                zs += sorted({surj_lo, surj_lo + rng.randint(0, dim_graded(n, d))})
                for z in zs:
                    if top <= SIZE_CAP and z * sk <= SIZE_CAP:
                        yield n, d, k, z


def test_ac5_theorem1_regimes(acceptance_log):
    start = time.perf_counter()
    rng = random.Random(20261018)
    failures, checked = [], 0
    for n, d, k, z in _regime_samples(rng):
        st = theorem1_status(n, d, k, z)
        assert st.regime is not Regime.UNKNOWN
        for cls in ("dense", "power"):
            res = empirical_hf(n, d, z, cls, k, seed=checked, trials=3)
            checked += 1
            if st.predicted_value not in res.ranks:
                failures.append(dict(n=n, d=d, k=k, z=z, cls=cls, regime=st.regime.value,
                                     predicted=st.predicted_value, ranks=res.ranks))
    elapsed = time.perf_counter() - start
    ok = not failures and checked > 0 and elapsed < 120
    report(acceptance_log, "AC5 known-regime HF values", ok,
           f"{checked} checks, failures={failures} t={elapsed:.1f}s")


def test_ac6_lemma_shape(acceptance_log):
    start = time.perf_counter()
    bad, seen = [], []
    for d in (2, 3):
        for k in (1, 2):
            sk = dim_graded(3, k)
            zmax = floor(Fraction(dim_graded(3, d + k), sk) + sk) + 2
            seq = az_sequence(3, d, k, zmax, "dense", trials=3)
            shape = lemma_shape(seq, sk)
            seen.append((d, k, shape.z0, shape.z1))
            if not (shape.shape_ok and shape.width_ok):
                bad.append((d, k, seq))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    report(acceptance_log, "AC6 a_z shape", ok, f"(d,k,z0,z1)={seen} bad={bad} t={elapsed:.1f}s")


def test_ac7_series_identities(acceptance_log):
    start = time.perf_counter()
    problems, count = [], 0
    for n in range(1, 6):
        for d in range(1, 11):
            D = 2 * d + 4
            ring = full_ring_series(n, D)
            cover = covered_z_set(n, d)
            for z in range(0, dim_graded(n, d) + 1):
                q = froberg_quotient_series(n, d, z, D)
                i = froberg_ideal_series(n, d, z, D)
                count += 1
                if q + i != ring or truncate_at_first_negative(q) != q:
                    problems.append(("identity", n, d, z))
                if z >= 1 and cover.covers(z) and min_form_series(n, d, z, D) != i:
                    problems.append(("min-form", n, d, z))
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 30
    report(acceptance_log, "AC7 series identities", ok, f"{count} (n,d,z) cases, problems={problems[:5]} t={elapsed:.1f}s")


def test_ac8_tail_bound_dominates(acceptance_log):
    start = time.perf_counter()
    rows = []
    for d in (10, 20, 40):
        gap = 1 - probability_pd(5, d)
        for k in (1, 2, 3):
            rows.append((d, k, gap <= prop3_tail_bound(5, d, k)))
    elapsed = time.perf_counter() - start
    ok = all(r[2] for r in rows) and elapsed < 10
    report(acceptance_log, "AC8a 1-p_d <= tail bound", ok, f"{rows} t={elapsed:.2f}s")


@pytest.mark.parametrize("k", [1, 2, 3])
def test_ac8_tail_bound_limit_at_d80(acceptance_log, k):
    limit = Fraction(1, dim_graded(5, k + 1))
    seq = [prop3_tail_bound(5, d, k) for d in (10, 20, 40, 80)]
    decreasing = all(a > b for a, b in zip(seq, seq[1:]))
    rel = (seq[-1] - limit) / limit
    ok = decreasing and rel <= Fraction(1, 10)
    report(acceptance_log, f"AC8b tail bound near 1/dim S_{k + 1} at d=80 (k={k})", ok,
           f"bound={float(seq[-1]):.6f} limit={float(limit):.6f} relative excess={float(rel):.4f} (allowed 0.10)")
