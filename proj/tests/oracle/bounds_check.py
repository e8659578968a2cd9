#!/usr/bin/env python3
"""Independent arbitrary-precision check of the bound formulas.

Usage:
  bounds_check.py count <n>       -> n/2 * ((n-1)!)^2
  bounds_check.py seqlen <n>      -> sum_{i=2}^{n} i/2 * ((i-1)!)^2
  bounds_check.py reidtotal <M>   -> (M-2) * seqlen(M)
  bounds_check.py summand <i>     -> i * ((i-1)!)^2
"""
import sys
from math import factorial


def count(n):
    return n * factorial(n - 1) ** 2 // 2


def seqlen(n):
    return sum(count(i) for i in range(2, n + 1))


def main():
    if len(sys.argv) != 3:
        print(__doc__, file=sys.stderr)
        return 2
    kind, n = sys.argv[1], int(sys.argv[2])
    if kind == 'count':
        print(count(n))
    elif kind == 'seqlen':
        print(seqlen(n))
    elif kind == 'reidtotal':
        print((n - 2) * seqlen(n))
    elif kind == 'summand':
        print(n * factorial(n - 1) ** 2)
    else:
        print(__doc__, file=sys.stderr)
        return 2
    return 0


if __name__ == '__main__':
    sys.exit(main())
