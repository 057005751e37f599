#!/usr/bin/env python3
"""Literal-mode order-statistics estimators in exact rational arithmetic.

Writes the estimator CSV for the California county incomes at u = j/n,
j = 2..n, rounded once to 12 significant digits. The C++ implementation must
reproduce the file byte for byte.

    python3 literal_oracle.py > ../fixtures/california_literal.csv
"""
from fractions import Fraction
import sys

# Published order; the 11547 entry is out of place and is kept as published.
RAW = [
    38130, 38445, 39443, 40447, 41077, 41267, 41843, 42043,
    42418, 42845, 43268, 43471, 43536, 44259, 45487, 45742,
    45920, 47139, 47245, 47245, 47605, 47860, 48438, 48841,
    49194, 49654, 51088, 51131, 51342, 52976, 53500, 53505,
    54715, 55261, 55266, 55910, 56123, 56534, 59838, 60513,
    61004, 63542, 63729, 65094, 66076, 66700, 68936, 69898,
    71592, 71711, 72155, 75717, 81171, 85324, 11547, 134107,
    139405, 147135,
]


def fmt(q):
    return format(float(q), ".12g")


def rows(values):
    x = sorted(Fraction(v) for v in values)
    n = len(x)
    for j in range(2, n + 1):
        u = Fraction(j, n)
        gap = sum(i * (x[i] - x[i - 1]) for i in range(1, j))
        gap2 = sum(i * i * (x[i] - x[i - 1]) for i in range(1, j))
        mu = gap / j
        igr = mu / x[j - 1]
        gini = Fraction(0) if mu == 0 else 2 * gap2 / (j * j * mu)
        pgr = u * igr
        sen = u * (igr + (1 - igr) * gini)
        yield [fmt(u), fmt(mu), fmt(igr), fmt(pgr), fmt(gini), fmt(sen), "literal"]


def main():
    out = sys.stdout
    out.write("u,mu_poor,igr,pgr,gini_poor,sen,mode\n")
    for r in rows(RAW):
        out.write(",".join(r) + "\n")


if __name__ == "__main__":
    main()
