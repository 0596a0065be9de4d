#!/usr/bin/env python3
"""Print a table of H(k) for every index with k1 + ... + kn <= T."""

import argparse

from besselmodels.bessel import NONSPLIT, SPLIT, h_value
from besselmodels.checks import indices


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--max-total", type=int, default=3)
    ap.add_argument("--case", choices=(SPLIT, NONSPLIT), default=NONSPLIT)
    args = ap.parse_args()

    for k in indices(args.n, args.max_total):
        val = h_value(k, args.case).simplified()
        body = str(val.poly) if val.scalar == 1 else f"{val.scalar} * ({val.poly})"
        print(f"k={k}  ({len(val.poly.terms)} terms)  {body}")


if __name__ == "__main__":
    main()
