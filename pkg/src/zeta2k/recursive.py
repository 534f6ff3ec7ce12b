"""Exact coefficients c_k of zeta(2k) = c_k * pi^(2k), without Bernoulli numbers.

Evaluating the cosine expansion of (x - pi)^(2k) at x = 0 gives, for every
k >= 1, the exact rational identity

    k/(2k+1)!  =  sum_{j=0}^{k-1} (-1)^j * c_{j+1} / (2k-2j-1)!

whose j = k-1 term is (-1)^(k-1) * c_k.  Solving for that term yields the
recursion implemented here:

    c_k = (-1)^(k+1) * ( k/(2k+1)!  +  sum_{j=0}^{k-2} (-1)^(j+1) * c_{j+1} / (2k-2j-1)! )

The empty sum at k = 1 gives c_1 = 1/3! = 1/6, i.e. zeta(2) = pi^2/6.
All arithmetic is exact; pi never enters (it is reattached at evaluation
time by :mod:`zeta2k.precision`).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from math import factorial

__all__ = ["ZetaCoeffTable", "consistency_residual"]


class ZetaCoeffTable:
    """Memoized table of c_1 .. c_max_k.

    Construction is inherently sequential (c_k depends on every earlier
    entry), so building and :meth:`extend` need exclusive access; a table
    that is no longer being extended can be read concurrently.  Extension
    reuses all existing entries, so growing a table is O(growth * max_k)
    rational operations rather than a fresh quadratic rebuild.
    """

    def __init__(self, max_k: int):
        if max_k < 1:
            raise ValueError(f"max_k must be >= 1, got {max_k}")
        self._coeffs: list[Fraction] = []
        self.extend(max_k)

    @property
    def max_k(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """c_1 .. c_max_k; index k-1 holds c_k."""
        return tuple(self._coeffs)

    def extend(self, new_max_k: int) -> None:
        """Grow the table so that c_1 .. c_new_max_k are available."""
        c = self._coeffs
        for k in range(len(c) + 1, new_max_k + 1):
            s = Fraction(k, factorial(2 * k + 1))
            for j in range(k - 1):
                term = c[j] / factorial(2 * k - 2 * j - 1)
                s += -term if j % 2 == 0 else term
            c.append(s if k % 2 == 1 else -s)

    def coeff(self, k: int) -> Fraction:
        """Return c_k, growing the table if k exceeds max_k."""
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        if k > len(self._coeffs):
            self.extend(k)
        return self._coeffs[k - 1]

    def rows(self) -> list[dict[str, object]]:
        """Export rows {"k": int, "num": str, "den": str} in ascending k."""
        return [
            {"k": k, "num": str(c.numerator), "den": str(c.denominator)}
            for k, c in enumerate(self._coeffs, start=1)
        ]

    def to_json(self) -> str:
        return json.dumps(self.rows())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "num", "den"])
        for row in self.rows():
            writer.writerow([row["k"], row["num"], row["den"]])
        return buf.getvalue()


def consistency_residual(table: ZetaCoeffTable, k: int) -> Fraction:
    """Exact residual of the defining identity at a given k.

    Returns k/(2k+1)! - sum_{j=0}^{k-1} (-1)^j c_{j+1}/(2k-2j-1)!, which
    must be exactly 0/1 for a correct table.  Nonzero residuals pinpoint
    the first broken entry when hunting a fault.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    table.extend(max(k, table.max_k))
    s = Fraction(0)
    for j in range(k):
        term = table.coeff(j + 1) / factorial(2 * k - 2 * j - 1)
        s += term if j % 2 == 0 else -term
    return Fraction(k, factorial(2 * k + 1)) - s
