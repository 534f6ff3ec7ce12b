#!/usr/bin/env python3
"""Walk through the exact coefficient table and its two independent routes.

The numbers zeta(2k) = 1 + 1/2^(2k) + 1/3^(2k) + ... are rational
multiples of pi^(2k).  This script builds the multipliers c_k two ways
and shows they agree digit for digit, then checks the exact identity
that powers the recursion.
"""

from fractions import Fraction

from zeta2k import (
    BernoulliTable,
    ZetaCoeffTable,
    consistency_residual,
    format_rational,
    zeta_coeff_via_bernoulli,
)


def main() -> None:
    max_k = 12
    table = ZetaCoeffTable(max_k)

    print("c_k with zeta(2k) = c_k * pi^(2k), from the Bernoulli-free recursion:")
    for k in range(1, max_k + 1):
        print(f"  k={k:>2}  c_k = {format_rational(table.coeff(k))}")

    print()
    print("Cross-check against the classical Bernoulli-number route:")
    bernoulli = BernoulliTable(2 * max_k)
    agreements = 0
    for k in range(1, max_k + 1):
        other = zeta_coeff_via_bernoulli(k, bernoulli)
        match = "ok" if other == table.coeff(k) else "MISMATCH"
        agreements += other == table.coeff(k)
        print(f"  k={k:>2}  {format_rational(other):>24}  {match}")
    print(f"  {agreements}/{max_k} agree exactly")

    print()
    print("The recursion is equivalent to the exact identity")
    print("  k/(2k+1)! = sum_{j=0}^{k-1} (-1)^j c_(j+1) / (2k-2j-1)!")
    print("whose residual must be the zero rational at every k:")
    residuals = [consistency_residual(table, k) for k in range(1, max_k + 1)]
    print(f"  residuals for k=1..{max_k}: {sorted(set(residuals))}")

    print()
    print("A value worth pinning: c_6 = 691 * 2^11 / 15!")
    from math import factorial

    assert table.coeff(6) == Fraction(691 * 2**11, factorial(15))
    print(f"  c_6 = {format_rational(table.coeff(6))}")

    print()
    print("CSV export of the first five rows:")
    print(ZetaCoeffTable(5).to_csv())


if __name__ == "__main__":
    main()
