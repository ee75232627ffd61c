"""Compare dense generic forms with powers of linear forms degree by degree.

The two outer regimes hold for both classes, but in between the two can differ
(e.g. five cubes of linear forms in three variables, degree 4).
"""

import argparse

from froeberg.combinatorics import dim_graded
from froeberg.verifier import verify_against_conjecture


def main(n: int, dmax: int, trials: int) -> None:
    for d in range(2, dmax + 1):
        for z in range(2, dim_graded(n, d) + 1):
            D = 2 * d + 2
            dense = verify_against_conjecture(n, d, z, "dense", D, trials=trials)
            power = verify_against_conjecture(n, d, z, "power", D, trials=trials)
            for a, b in zip(dense.records, power.records):
                if a.empirical_max != b.empirical_max:
                    print(f"n={n} d={d} z={z} deg={a.degree}: dense={a.empirical_max} "
                          f"power={b.empirical_max} conj={a.conjectured} regime={a.regime}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--dmax", type=int, default=4)
    ap.add_argument("--trials", type=int, default=2)
    args = ap.parse_args()
    main(args.n, args.dmax, args.trials)
