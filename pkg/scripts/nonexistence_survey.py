#!/usr/bin/env python3
"""Tabulate the certificate verdict for a range of dimensions.

For each n the script factors 2n^2 + 1, lists the admissible primes, and
prints the conclusion of the best certificate.  Useful for spotting which
dimensions the modular criterion leaves open (INAPPLICABLE rows have no
prime factor above 2n+1; INCONCLUSIVE rows have one that fails to decide).
"""

import argparse
import sys

from latile.certify import INFINITE, admissible_primes, certify_nonexistence


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--start", type=int, default=3)
    parser.add_argument("--stop", type=int, default=60, help="inclusive")
    args = parser.parse_args()
    if args.start < 3 or args.stop < args.start:
        parser.error("need 3 <= start <= stop")

    header = f"{'n':>5} {'2n^2+1':>10} {'primes':>18} {'p':>6} {'a':>9} {'b':>5}  conclusion"
    print(header)
    print("-" * len(header))
    counts = {"NONEXISTENCE": 0, "INCONCLUSIVE": 0, "INAPPLICABLE": 0}
    for n in range(args.start, args.stop + 1):
        order = 2 * n * n + 1
        primes = admissible_primes(n)
        cert = certify_nonexistence(n)
        if cert is None:
            counts["INAPPLICABLE"] += 1
            print(f"{n:>5} {order:>10} {str(primes):>18} {'-':>6} {'-':>9} {'-':>5}  INAPPLICABLE")
            continue
        counts[cert.conclusion] += 1
        a_str = "inf" if cert.a == INFINITE else str(cert.a)
        print(
            f"{n:>5} {order:>10} {str(primes):>18} {cert.p:>6} {a_str:>9} {cert.b:>5}"
            f"  {cert.conclusion}"
        )
    print("-" * len(header))
    print(
        f"NONEXISTENCE: {counts['NONEXISTENCE']}   "
        f"INCONCLUSIVE: {counts['INCONCLUSIVE']}   "
        f"INAPPLICABLE: {counts['INAPPLICABLE']}"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
