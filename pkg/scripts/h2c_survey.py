#!/usr/bin/env python3
"""Survey second constant cohomology class counts across small latin quandles.

Rows are connected affine quandles, columns coefficient groups; each cell is
the number of cohomology classes (1 means every covering with that fiber
structure is trivial).
"""

import argparse

from quandles import CoeffGroup, FinAbGroup, affine_quandle, h2c

QUANDLES = [
    ("R_3", (3,), [[2]]),
    ("Q4", (2, 2), [[1, 1], [1, 0]]),
    ("Q(Z_5,2x)", (5,), [[2]]),
    ("Q(Z_5,3x)", (5,), [[3]]),
    ("Q(Z_7,3x)", (7,), [[3]]),
    ("Q(Z_2^3,7c)", (2, 2, 2), [[0, 0, 1], [1, 0, 1], [0, 1, 0]]),
]

COEFFS = [
    ("Z2", CoeffGroup.abelian((2,))),
    ("Z3", CoeffGroup.abelian((3,))),
    ("Z2xZ2", CoeffGroup.abelian((2, 2))),
    ("Sym2", CoeffGroup.symmetric(2)),
    ("Sym3", CoeffGroup.symmetric(3)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.parse_args()
    header = f"{'quandle':14s}" + "".join(f"{name:>8s}" for name, _ in COEFFS)
    print(header)
    for name, moduli, matrix in QUANDLES:
        quandle = affine_quandle(FinAbGroup(moduli), matrix)
        counts = [len(h2c(quandle, coeff)) for _, coeff in COEFFS]
        print(f"{name:14s}" + "".join(f"{c:8d}" for c in counts))


if __name__ == "__main__":
    main()
