#!/usr/bin/env python3
"""The cosine-series coefficients of (x - pi)^(2k) on [0, pi], three ways.

The closed form, the two-term recursion, and numerical quadrature must
all land on the same numbers.  Partial sums of the series at x = 0
then converge to pi^(2k), which is where the zeta coefficients come
from in the first place.
"""

import math
from fractions import Fraction
from math import prod

from mpmath import mp

from zeta2k import (
    b_factor,
    b_product_closed,
    cosine_coeff_closed,
    cosine_coeff_quadrature,
    cosine_coeff_recursive,
    mean_coeff,
    reconstruct,
    reconstruction_residual,
)


def main() -> None:
    print("Symbolic closed form of A(n, 2k), the n-th cosine coefficient:")
    for k in (1, 2, 3):
        coeff = cosine_coeff_closed(k)
        rendered = " + ".join(
            f"({t.coeff})*pi^{t.pi_power}/n^{t.inv_n_power}" for t in coeff.terms
        )
        print(f"  k={k}:  A(n,{2 * k}) = {rendered}")
    print(f"  mean term coefficient at k=2: {mean_coeff(2)} (of pi^4)")

    print()
    print("Recursion route, n substituted, exact rational pi-polynomials:")
    for k, n in ((1, 1), (2, 1), (3, 2)):
        terms = cosine_coeff_recursive(k, n)
        rendered = " + ".join(f"({t.coeff})*pi^{t.pi_power}" for t in terms)
        closed = cosine_coeff_closed(k).substitute(n)
        same = closed == {t.pi_power: t.coeff for t in terms}
        print(f"  k={k}, n={n}:  {rendered}   closed-form match: {same}")

    print()
    print("Products of consecutive recursion factors b_m collapse exactly:")
    for k, j, n in ((2, 0, 1), (3, 1, 1), (3, 1, 2), (5, 4, 3)):
        direct = prod((b_factor(k - i, n) for i in range(j + 1)), start=Fraction(1))
        closed = b_product_closed(k, j, n)
        print(f"  k={k}, j={j}, n={n}:  direct {direct} == closed {closed}: {direct == closed}")

    print()
    print("Quadrature oracle (2/pi * integral of (x-pi)^(2k) cos(nx) dx):")
    for k, n in ((1, 1), (1, 2), (2, 1)):
        got = cosine_coeff_quadrature(k, n, 1e-12)
        with mp.workdps(40):
            exact = mp.fsum(
                mp.mpf(c.numerator) / c.denominator * mp.pi**p
                for p, c in sorted(cosine_coeff_closed(k).substitute(n).items())
            )
            print(f"  k={k}, n={n}:  quadrature {mp.nstr(got.value, 16)}  "
                  f"error {mp.nstr(abs(got.value - exact), 3)}")

    print()
    print("Reconstruction at x = 0 approaches pi^(2k) like 1/N:")
    for k in (1, 2):
        target = math.pi ** (2 * k)
        for n_terms in (1000, 2000, 4000, 8000):
            residual = reconstruction_residual(k, n_terms)
            print(f"  k={k}, N={n_terms:>5}:  residual {residual:.3e}")
        print(f"  (target pi^{2 * k} = {target:.10f}, "
              f"N=8000 partial sum = {reconstruct(k, 0.0, 8000):.10f})")


if __name__ == "__main__":
    main()
