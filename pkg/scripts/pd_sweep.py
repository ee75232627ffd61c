"""Write (d, p_d) for a range of degrees to CSV, plus the tail bound for a few k."""

import argparse
import csv
import sys
from dataclasses import dataclass

from froeberg.criterion import probability_pd, prop3_tail_bound, truncated_decimal


@dataclass
class SweepConfig:
    n: int = 5
    dmax: int = 80
    ks: tuple[int, ...] = (1, 2, 3)


def run(cfg: SweepConfig, out=sys.stdout) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["d", "pd", "one_minus_pd"] + [f"tail_bound_k{k}" for k in cfg.ks])
    for d in range(1, cfg.dmax + 1):
        pd = probability_pd(cfg.n, d)
        bounds = [f"{float(prop3_tail_bound(cfg.n, d, k)):.6f}" for k in cfg.ks]
        w.writerow([d, truncated_decimal(pd), f"{float(1 - pd):.6f}"] + bounds)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--dmax", type=int, default=80)
    args = ap.parse_args()
    run(SweepConfig(n=args.n, dmax=args.dmax))
