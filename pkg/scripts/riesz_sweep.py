#!/usr/bin/env python3
"""Riesz axiom audit over a small family of rank-2 modules.

Sweeps modules (1, (a + sqrt(d))/c) and one deliberately dependent
module to show the audit catching a planted kernel element.

Usage: riesz_sweep.py [--samples S] [--bound B]
"""

import argparse
from fractions import Fraction

from cfgroups.dimension_group import build_module, riesz_audit
from cfgroups.realnum import surd_normalize


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--bound", type=int, default=30)
    args = ap.parse_args()

    cases = [("(1+sqrt5)/2", surd_normalize(1, 1, 2, 5)),
             ("sqrt2", surd_normalize(0, 1, 1, 2)),
             ("(3+sqrt2)/7", surd_normalize(3, 1, 7, 2)),
             ("rational 1/2 (dependent)", Fraction(1, 2))]
    for name, slope in cases:
        m = build_module([Fraction(1), slope])
        rep = riesz_audit(m, args.samples, args.bound, seed=1)
        print("slope %-26s dependence=%-5s checks=%s violations=%d"
              % (name, m.rational_dependence, rep.checks,
                 len(rep.violations)))
        for v in rep.violations[:3]:
            print("    %s" % v)


if __name__ == "__main__":
    main()
