"""Print a_z sequences and (z_0, z_1) for small cases next to the injective and surjective bounds."""

import argparse
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from froeberg.combinatorics import dim_graded
from froeberg.verifier import az_sequence, lemma_shape


@dataclass
class ScanConfig:
    n: int = 3
    degrees: tuple[int, ...] = (2, 3, 4)
    ks: tuple[int, ...] = (1, 2)
    form_class: str = "dense"
    trials: int = 3
    seed: int = 0


def main(cfg: ScanConfig) -> None:
    for d in cfg.degrees:
        for k in cfg.ks:
            sk = dim_graded(cfg.n, k)
            center = Fraction(dim_graded(cfg.n, d + k), sk)
            zmax = floor(center + sk) + 2
            seq = az_sequence(cfg.n, d, k, zmax, cfg.form_class, seed=cfg.seed, trials=cfg.trials)
            s = lemma_shape(seq, sk)
            print(
                f"d={d} k={k} dim S_k={sk} center={float(center):.2f} "
                f"z0={s.z0} z1={s.z1} shape={'ok' if s.shape_ok else 'BAD'} a={seq}"
            )


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--class", dest="form_class", default="dense", choices=("dense", "power"))
    args = ap.parse_args()
    main(ScanConfig(n=args.n, form_class=args.form_class))
