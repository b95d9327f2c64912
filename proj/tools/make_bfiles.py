#!/usr/bin/env python3
"""Writes OEIS-style b-files for the test suite.

Each sequence is computed straight from its OEIS definition, independently of
the C++ code, so the CLI comparison against these files is a real check.
"""
import argparse
from fractions import Fraction
from math import comb, factorial
from pathlib import Path


def stirling2(n, k):
    row = [1] + [0] * k
    for i in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k] if n > 0 else int(k == 0)


def a000670(n):
    # ordered set partitions
    return sum(factorial(k) * stirling2(n, k) for k in range(n + 1))


def a001003(count):
    # little Schroeder numbers: (n+1) a(n) = 3(2n-1) a(n-1) - (n-2) a(n-2)
    a = [1, 1]
    for n in range(2, count):
        a.append((3 * (2 * n - 1) * a[n - 1] - (n - 2) * a[n - 2]) // (n + 1))
    return a[:count]


def a047781(n):
    return sum(comb(n - 1, k) * comb(n + k, k) for k in range(n))


def a171792(count):
    # coefficients of P with 2 P(x) - P(x + x^2) = x, P(0) = 0
    p = [Fraction(0)] * (count + 1)
    for n in range(1, count + 1):
        # [x^n] P(x + x^2) = sum_k p_k C(k, n - k); the k = n term is p_n itself
        rest = sum(p[k] * comb(k, n - k) for k in range(1, n))
        p[n] = (1 if n == 1 else 0) + rest
    return [int(v) for v in p[1:]]


def write(path, name, first_index, values):
    with open(path, "w") as f:
        f.write(f"# {name}: generated by make_bfiles.py\n")
        for i, v in enumerate(values):
            f.write(f"{first_index + i} {v}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out", type=Path)
    ap.add_argument("--terms", type=int, default=25)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    t = args.terms
    write(args.out / "b000670.txt", "A000670", 0, [a000670(n) for n in range(t)])
    write(args.out / "b001003.txt", "A001003", 0, a001003(t))
    write(args.out / "b047781.txt", "A047781", 0, [a047781(n) for n in range(t)])
    write(args.out / "b171792.txt", "A171792", 1, a171792(t))


if __name__ == "__main__":
    main()
