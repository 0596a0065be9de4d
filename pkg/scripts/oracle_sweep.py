#!/usr/bin/env python3
"""Compare the closed-form GL(2) values with the shell-by-shell integral.

Random rational points inside the convergence region are drawn for each q;
any disagreement is printed and the exit status is 1.
"""

import argparse
import random
import sys
from fractions import Fraction

from besselmodels.algebra import SatakeNumeric
from besselmodels.waldspurger import oracle_wa_integral, wa_normalizer, wa_region, wa_value


def random_point(rng, q):
    pool = [Fraction(p, r) for p in range(-9, 10) for r in range(1, 7) if p]
    while True:
        pt = SatakeNumeric(q, {"g1": rng.choice(pool), "g2": rng.choice(pool), "t": rng.choice(pool)})
        if wa_region(pt) and pt["g1"] != pt["g2"]:
            return pt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=20)
    ap.add_argument("--max-k", type=int, default=6)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    norm = wa_normalizer()
    bad = checked = 0
    for q in (4, 9, 25, Fraction(49, 4)):
        for _ in range(args.points):
            pt = random_point(rng, Fraction(q))
            env = pt.as_point()
            scale = norm.num.eval(env) / norm.den.eval(env)
            for k in range(args.max_k + 1):
                lhs = oracle_wa_integral(k, pt) * scale
                rhs = wa_value(k).eval(env)
                checked += 1
                if lhs != rhs:
                    bad += 1
                    print(f"mismatch k={k} at {env}: {lhs} != {rhs}")
    print(f"{checked - bad}/{checked} exact agreements")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
