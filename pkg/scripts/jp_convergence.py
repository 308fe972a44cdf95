#!/usr/bin/env python3
"""Convergence profile of the Jacobi-Perron expansion of (k^(1/3), k^(2/3)).

Prints the digit vector, the convergent denominator, and the sup-norm
reconstruction error at each step.  The error column should decay
geometrically for generic cubic vectors.

Usage: jp_convergence.py [--radicand K] [--depth D] [--bits B]
"""

import argparse
from fractions import Fraction

from cfgroups.jacobi_perron import jp_convergents, jp_expand, jp_reconstruct
from cfgroups.realnum import PrecisionReal, real_interval


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--radicand", type=int, default=2)
    ap.add_argument("--depth", type=int, default=30)
    ap.add_argument("--bits", type=int, default=256)
    args = ap.parse_args()

    k = args.radicand
    theta = [PrecisionReal.nth_root(k, 3, args.bits),
             PrecisionReal.nth_root(k * k, 3, args.bits)]
    ref = [PrecisionReal.nth_root(k, 3, args.bits + 128),
           PrecisionReal.nth_root(k * k, 3, args.bits + 128)]

    e = jp_expand(theta, args.depth)
    print("theta = (%d^(1/3), %d^(2/3)), %d steps (terminated=%s)"
          % (k, k, len(e.steps), e.terminated))
    print("%4s  %-12s  %22s  %12s" % ("k", "digits", "q_k", "sup error"))
    for step in range(1, len(e.steps) + 1):
        conv = jp_convergents(e, step)
        q = conv.A.column(len(theta))[0]
        try:
            recon = jp_reconstruct(e, step)
        except Exception:
            continue
        err = Fraction(0)
        for approx, target in zip(recon, ref):
            lo, hi = real_interval(target, 0)
            err = max(err, abs(approx - lo), abs(approx - hi))
        print("%4d  %-12s  %22d  %12.4e"
              % (step, e.steps[step - 1], q, float(err)))


if __name__ == "__main__":
    main()
