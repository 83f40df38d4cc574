#!/usr/bin/env python3
"""Re-derive the order-243 construction from scratch and display every step.

Walks the derivation the package freezes as a literal: factor x^11 - 1 over
F_3, pick the lexicographically smallest monic quintic divisor, build the
5x11 check matrix from the reversed cofactor, and verify the resulting map
tiles Z^11 by the (11,2,1,1) ball.
"""

import argparse
import sys

from latile.abelian import GroupSpec
from latile.ball import generate_ball
from latile.construct import (
    GOLAY11_CHECK_MATRIX,
    derive_check_matrix,
    golay11_tiling,
    golay_generator_polynomials,
)
from latile.tiling import verify_tiling


def poly_str(coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}x" if c != 1 else "x")
        else:
            terms.append(f"{c}x^{i}" if c != 1 else f"x^{i}")
    return " + ".join(terms) if terms else "0"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--check",
        action="store_true",
        help="exit nonzero unless the derivation matches the frozen literal",
    )
    args = parser.parse_args()

    g, h = golay_generator_polynomials()
    print("factorization of x^11 - 1 over F_3:")
    print(f"  g(x) = {poly_str(g)}")
    print(f"  h(x) = {poly_str(h)}")
    print()

    matrix = derive_check_matrix()
    print("derived 5x11 check matrix (rows = shifts of reversed h):")
    for row in matrix:
        print("  " + " ".join(str(x) for x in row))
    print()

    matches = matrix == GOLAY11_CHECK_MATRIX
    print(f"matches frozen literal: {matches}")

    phi = golay11_tiling()
    assert phi.spec == GroupSpec((3, 3, 3, 3, 3))
    report = verify_tiling(phi, generate_ball(11, 2, 1, 1))
    print(f"column map tiles Z^11 by B(11,2,1,1): {report.bijective}")

    if args.check and not (matches and report.bijective):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
