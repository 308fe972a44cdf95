#!/usr/bin/env python3
"""Congruence audit table for the partial products of a continued fraction.

For each k the matrix T_k = E(a_0) ... E(a_k) is reduced mod N and
compared to the identity.  Slopes whose whole table is `member` at some
level N are the interesting ones.

Usage: legendre_table.py --input "surd:(1+1*sqrt(2))/1" --level 2 --depth 12
"""

import argparse

from cfgroups.modular_group import legendre_audit
from cfgroups.realnum import parse_real
from cfgroups.regular_cf import cf_expand


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--input", default="surd:(1+1*sqrt(2))/1")
    ap.add_argument("--level", type=int, default=2)
    ap.add_argument("--depth", type=int, default=12)
    args = ap.parse_args()

    e = cf_expand(parse_real(args.input), args.depth)
    records = legendre_audit(e, args.level, args.depth)
    print("input %s  level %d" % (args.input, args.level))
    print("digits: %s" % e.digits(args.depth))
    for r in records:
        (a, b), (c, d) = r.T.rows
        print("k=%2d  T=[[%d,%d],[%d,%d]]  det=%+d  member=%s"
              % (r.k, a, b, c, d, r.T.det, r.member))
    member_ks = [r.k for r in records if r.member]
    print("member at k in %s" % member_ks)


if __name__ == "__main__":
    main()
