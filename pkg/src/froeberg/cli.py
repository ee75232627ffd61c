"""Command-line front end: ``froeberg {series,coverage,verify,az,example}``.

Exit codes: 0 ok, 1 mismatch in a proven regime, 2 usage, 3 resource cap.
Flags override FROEBERG_PRIME / FROEBERG_SEED, which override defaults.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .combinatorics import dim_graded
from .criterion import covered_z_set, pd_sweep, prop2_interval, truncated_decimal
from .errors import ResourceLimitError
from .gfp_linalg import DEFAULT_PRIME, check_modulus
from .series import froberg_ideal_series, froberg_quotient_series
from .verifier import (
    DEFAULT_TRIALS,
    FormClass,
    az_sequence,
    lemma_shape,
    verify_against_conjecture,
)
from .criterion import theorem1_status

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    d: Optional[int] = None
    z: Optional[int] = None
    k: Optional[int] = None
    D: Optional[int] = None
    r: Optional[int] = None
    zmax: Optional[int] = None
    sweep: Optional[int] = None
    form_class: FormClass = FormClass.DENSE_GENERIC
    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = DEFAULT_TRIALS
    jobs: int = 1
    fmt: str = "table"
    out: Optional[str] = None

    def require(self, *names: str, minimum: int = 1) -> None:
        for name in names:
            val = getattr(self, name)
            if val is None:
                raise UsageError(f"{self.command}: --{name} is required")
            if val < minimum:
                raise UsageError(f"{self.command}: --{name} must be >= {minimum}, got {val}")

    @property
    def degree_bound(self) -> int:
        return self.D if self.D is not None else 2 * self.d + 4


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="froeberg",
        description="Fröberg series, coverage criterion and GF(p) rank verification "
        "for ideals of generic forms of one degree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *flags):
        for flag in flags:
            sp.add_argument(f"--{flag}", type=int, default=None)
        sp.add_argument("--format", choices=("json", "csv", "table"), default="table")
        sp.add_argument("--out", default=None, help="write output here instead of stdout")

    def sampling(sp):
        sp.add_argument("--class", dest="form_class", choices=("dense", "power"), default="dense")
        sp.add_argument("--prime", type=int, default=None)
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        sp.add_argument("--jobs", type=int, default=1, help="parallel trials")

    common(sub.add_parser("series", help="quotient and ideal Fröberg series"), "n", "d", "z", "D")
    common(
        sub.add_parser("coverage", help="z values certified by the interval criterion"),
        "n", "d", "r", "sweep",
    )
    sp = sub.add_parser("verify", help="compare GF(p) ranks with the conjectured series")
    common(sp, "n", "d", "z", "D")
    sampling(sp)
    sp = sub.add_parser("az", help="intersection dimensions a_1..a_zmax")
    common(sp, "n", "d", "k", "zmax")
    sampling(sp)
    common(sub.add_parser("example", help="n=5, d=10 worked example with self-check"))
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command, fmt=args.format, out=args.out)
    for name in ("n", "d", "z", "k", "D", "r", "zmax", "sweep"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if hasattr(args, "form_class"):
        cfg.form_class = FormClass.parse(args.form_class)
        cfg.prime = args.prime if args.prime is not None else _env_int("FROEBERG_PRIME", DEFAULT_PRIME)
        cfg.seed = args.seed if args.seed is not None else _env_int("FROEBERG_SEED", 0)
        cfg.trials = args.trials
        cfg.jobs = args.jobs
        if cfg.trials < 1 or cfg.jobs < 1:
            raise UsageError("--trials and --jobs must be >= 1")
        if cfg.seed < 0:
            raise UsageError("--seed must be non-negative")
        try:
            cfg.prime = check_modulus(cfg.prime)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return cfg


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_series(cfg: RunConfig) -> tuple[str, int]:
    cfg.require("n", "d")
    cfg.require("z", minimum=0)
    if cfg.D is not None and cfg.D < 0:
        raise UsageError("series: --D must be >= 0")
    D = cfg.degree_bound
    q = froberg_quotient_series(cfg.n, cfg.d, cfg.z, D)
    i = froberg_ideal_series(cfg.n, cfg.d, cfg.z, D)
    if cfg.fmt == "json":
        return _dump_json({"quotient": q.to_dict(), "ideal": i.to_dict()}), EXIT_OK
    if cfg.fmt == "csv":
        rows = [["degree", "quotient", "ideal"]]
        rows += [[m, q[m], i[m]] for m in range(D + 1)]
        return _csv(rows), EXIT_OK
    lines = [f"n={cfg.n} d={cfg.d} z={cfg.z} D={D}", f"{'deg':>4} {'quotient':>12} {'ideal':>12}"]
    lines += [f"{m:>4} {q[m]:>12} {i[m]:>12}" for m in range(D + 1)]
    return "\n".join(lines) + "\n", EXIT_OK


def _coverage_table(rep) -> str:
    lines = [f"n={rep.n} d={rep.d} dim S_d={rep.total}", "intervals:"]
    lines += [f"  r={iv.r}: [{iv.z_lo}, {iv.z_hi}]" for iv in rep.intervals]
    lines.append("gaps: " + (", ".join(f"{lo}-{hi}" for lo, hi in rep.gaps) or "none"))
    lines.append(f"uncovered: {rep.gap_count}")
    lines.append(f"covered: {rep.covered_count}/{rep.total}")
    lines.append(f"p_d = {rep.p_d.numerator}/{rep.p_d.denominator} = {rep.decimal}")
    return "\n".join(lines) + "\n"


def cmd_coverage(cfg: RunConfig) -> tuple[str, int]:
    cfg.require("n")
    if cfg.sweep is not None:
        cfg.require("sweep")
        rows = pd_sweep(cfg.n, cfg.sweep)
        if cfg.fmt == "json":
            data = [
                {"d": d, "pd": {"num": q.numerator, "den": q.denominator, "decimal": truncated_decimal(q)}}
                for d, q in rows
            ]
            return _dump_json({"n": cfg.n, "sweep": data}), EXIT_OK
        if cfg.fmt == "csv":
            return _csv([["d", "pd"]] + [[d, truncated_decimal(q)] for d, q in rows]), EXIT_OK
        lines = [f"{'d':>4} {'p_d':>7}"] + [f"{d:>4} {truncated_decimal(q):>7}" for d, q in rows]
        return "\n".join(lines) + "\n", EXIT_OK
    cfg.require("d")
    if cfg.r is not None:
        cfg.require("r", minimum=0)
        iv = prop2_interval(cfg.n, cfg.d, cfg.r)
        data = iv.to_dict() if iv else None
        if cfg.fmt == "json":
            return _dump_json({"n": cfg.n, "d": cfg.d, "interval": data}), EXIT_OK
        if cfg.fmt == "csv":
            rows = [["r", "zLo", "zHi"]] + ([[iv.r, iv.z_lo, iv.z_hi]] if iv else [])
            return _csv(rows), EXIT_OK
        text = f"r={cfg.r}: [{iv.z_lo}, {iv.z_hi}]" if iv else f"r={cfg.r}: empty"
        return text + "\n", EXIT_OK
    rep = covered_z_set(cfg.n, cfg.d)
    if cfg.fmt == "json":
        return _dump_json(rep.to_dict()), EXIT_OK
    if cfg.fmt == "csv":
        rows = [["r", "zLo", "zHi"]] + [[iv.r, iv.z_lo, iv.z_hi] for iv in rep.intervals]
        return _csv(rows), EXIT_OK
    return _coverage_table(rep), EXIT_OK


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    cfg.require("n", "d")
    cfg.require("z", minimum=0)
    D = cfg.degree_bound
    if D < cfg.d:
        raise UsageError("verify: --D must be at least --d")
    rep = verify_against_conjecture(
        cfg.n, cfg.d, cfg.z, cfg.form_class, D, cfg.prime, cfg.seed, cfg.trials, cfg.jobs
    )
    code = EXIT_MISMATCH if rep.proven_mismatches else EXIT_OK
    if cfg.fmt == "json":
        return rep.to_json() + "\n", code
    if cfg.fmt == "csv":
        rows = [["degree", "k", "empirical_max", "conjectured", "regime", "proven", "status"]]
        rows += [
            [r.degree, r.k, r.empirical_max, r.conjectured, r.regime, int(r.proven), r.status]
            for r in rep.records
        ]
        return _csv(rows), code
    return rep.to_table(), code


def cmd_az(cfg: RunConfig) -> tuple[str, int]:
    cfg.require("n", "d", "k", "zmax")
    seq = az_sequence(
        cfg.n, cfg.d, cfg.k, cfg.zmax, cfg.form_class, cfg.prime, cfg.seed, cfg.trials, cfg.jobs
    )
    sk = dim_graded(cfg.n, cfg.k)
    shape = lemma_shape(seq, sk)
    regimes = [theorem1_status(cfg.n, cfg.d, cfg.k, z).regime.value for z in range(1, cfg.zmax + 1)]
    width = None if shape.z0 is None or shape.z1 is None else shape.z1 - shape.z0
    code = EXIT_OK if shape.z1 is None or shape.width_ok else EXIT_MISMATCH
    if cfg.fmt == "json":
        data = {
            "n": cfg.n, "d": cfg.d, "k": cfg.k, "dimSk": sk,
            "az": [{"z": z, "az": a, "regime": g} for z, (a, g) in enumerate(zip(seq, regimes), 1)],
            "z0": shape.z0, "z1": shape.z1, "shapeOk": shape.shape_ok,
            "widthOk": shape.width_ok,
        }
        return _dump_json(data), code
    if cfg.fmt == "csv":
        return _csv([["z", "az", "regime"]] + [[z, a, g] for z, (a, g) in enumerate(zip(seq, regimes), 1)]), code
    lines = [f"n={cfg.n} d={cfg.d} k={cfg.k} dim S_k={sk}", f"{'z':>4} {'a_z':>6}  regime"]
    for z, (a, g) in enumerate(zip(seq, regimes), 1):
        mark = "  <- z_0" if z == shape.z0 else ""
        mark += "  <- z_1" if z == shape.z1 else ""
        lines.append(f"{z:>4} {a:>6}  {g}{mark}")
    lines.append(f"z_0 = {shape.z0}, z_1 = {shape.z1}")
    if width is not None:
        lines.append(f"z_1 - z_0 = {width} <= dim S_k = {sk}: {'ok' if shape.width_ok else 'FAILED'}")
    else:
        lines.append("a_z did not reach dim S_k; raise --zmax")
    lines.append(f"shape (zero, strictly rising, flat): {'ok' if shape.shape_ok else 'not observed'}")
    return "\n".join(lines) + "\n", code


# (label, computed, pinned) rows for the n=5, d=10 worked example
def example_checks() -> list[tuple[str, object, object]]:
    n, d = 5, 10
    S = lambda m: dim_graded(n, m)  # noqa: E731
    rep = covered_z_set(n, d)
    gap_sizes = sorted(hi - lo + 1 for lo, hi in rep.gaps)
    checks = [
        ("dim S_10", S(10), 1001),
        ("dim S_1", S(1), 5),
        ("dim S_11 / dim S_1", Fraction(S(11), S(1)), Fraction(273)),
        ("dim S_2", S(2), 15),
        ("dim S_12 / dim S_2", Fraction(S(12), S(2)), Fraction(364, 3)),
        ("dim S_3", S(3), 35),
        ("dim S_13 / dim S_3", Fraction(S(13), S(3)), Fraction(68)),
        ("intervals", [(iv.z_lo, iv.z_hi) for iv in rep.intervals], [(278, 1001), (137, 268), (103, 106)]),
        ("uncovered", rep.gap_count, 141),
        ("gap sizes", gap_sizes, [9, 30, 102]),
        ("p_10", rep.decimal, "0.859"),
    ]
    for dd, pinned in ((15, "0.927"), (25, "0.968"), (40, "0.986")):
        checks.append((f"p_{dd}", covered_z_set(n, dd).decimal, pinned))
    return checks


def cmd_example(cfg: RunConfig) -> tuple[str, int]:
    checks = example_checks()
    ok = all(got == want for _, got, want in checks)
    rep = covered_z_set(5, 10)
    if cfg.fmt == "json":
        data = {
            "checks": [{"name": name, "value": str(got), "pinned": str(want), "pass": got == want}
                       for name, got, want in checks],
            "status": "PASS" if ok else "FAIL",
        }
        return _dump_json(data), EXIT_OK if ok else EXIT_MISMATCH
    if cfg.fmt == "csv":
        rows = [["name", "value", "pinned", "pass"]]
        rows += [[name, got, want, int(got == want)] for name, got, want in checks]
        return _csv(rows), EXIT_OK if ok else EXIT_MISMATCH
    lines = ["n = 5, d = 10"]
    for name, got, want in checks:
        if isinstance(got, Fraction):
            got = f"{got.numerator}/{got.denominator}" if got.denominator != 1 else str(got.numerator)
        lines.append(f"  {name:<20} {got}")
    sizes = sorted((hi - lo + 1 for lo, hi in rep.gaps))
    lines.append(f"{rep.gap_count} = " + " + ".join(str(s) for s in sizes))
    lines.append(f"p_10 = {rep.decimal}")
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {
    "series": cmd_series,
    "coverage": cmd_coverage,
    "verify": cmd_verify,
    "az": cmd_az,
    "example": cmd_example,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on bad flags
    try:
        cfg = config_from_args(args)
        text, code = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"froeberg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"froeberg: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
