#!/usr/bin/env python3
"""Search for monomial identifications of GSp(4) and SO(5) parameters.

Prints each surviving candidate and confirms it symbolically on a few more
indices than were used for the numeric screening.
"""

import argparse

from besselmodels.bessel import NONSPLIT, SPLIT, h_value
from besselmodels.gsp4 import find_dictionary, h_gsp4, pull_back


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--case", choices=(SPLIT, NONSPLIT), default=NONSPLIT)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--confirm-total", type=int, default=3)
    args = ap.parse_args()

    found = find_dictionary(args.case, seed=args.seed)
    print(f"{len(found)} candidate(s) for the {args.case} torus")
    for cand in found:
        ok = all(
            pull_back(cand, h_gsp4(k, l, args.case), args.case)
            == h_value(cand.so5_index(k, l), args.case).value
            for k in range(args.confirm_total + 1)
            for l in range(args.confirm_total + 1 - k)
        )
        desc = ", ".join(f"{key}={val}" for key, val in cand.describe().items())
        print(f"  [{'ok' if ok else 'MISMATCH'}] {desc}")


if __name__ == "__main__":
    main()
