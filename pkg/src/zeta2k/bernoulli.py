"""Bernoulli-number baseline for the zeta coefficients.

The classical recurrence (first-kind convention, B_1 = -1/2):

    B_0 = 1,   sum_{j=0}^{m-1} C(m, j) B_j = 0   for every m >= 2,

solved for B_{m-1}.  Odd indices >= 3 vanish.  The even entries reach the
zeta coefficients through the closed form

    c_k = (-1)^(k+1) * B_{2k} * 2^(2k-1) / (2k)!

so this module is a fully independent oracle for :mod:`zeta2k.recursive`.
The naive O(max_index^2) recurrence is kept on purpose: it is the honest
baseline the recursion is measured against in :mod:`zeta2k.bench`.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from math import comb, factorial

__all__ = ["BernoulliTable", "zeta_coeff_via_bernoulli"]


class BernoulliTable:
    """B_0 .. B_max_index, exact, built once. Immutable after construction."""

    def __init__(self, max_index: int):
        if max_index < 0:
            raise ValueError(f"max_index must be >= 0, got {max_index}")
        values = [Fraction(1)]
        for m in range(2, max_index + 2):
            s = Fraction(0)
            for j in range(m - 1):
                if j > 1 and j % 2 == 1:
                    continue  # odd entries >= 3 are zero, nothing to add
                bj = values[j]
                if bj:
                    s += comb(m, j) * bj
            values.append(-s / m)
        self._values = values[: max_index + 1]

    @property
    def max_index(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> tuple[Fraction, ...]:
        """B_0 .. B_max_index; index m holds B_m."""
        return tuple(self._values)

    def value(self, m: int) -> Fraction:
        if not 0 <= m <= self.max_index:
            raise ValueError(f"index {m} outside table (max_index={self.max_index})")
        return self._values[m]

    def rows(self) -> list[dict[str, object]]:
        """Export rows {"m": int, "num": str, "den": str} in ascending m."""
        return [
            {"m": m, "num": str(b.numerator), "den": str(b.denominator)}
            for m, b in enumerate(self._values)
        ]

    def to_json(self) -> str:
        return json.dumps(self.rows())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "num", "den"])
        for row in self.rows():
            writer.writerow([row["m"], row["num"], row["den"]])
        return buf.getvalue()


def zeta_coeff_via_bernoulli(k: int, table: BernoulliTable) -> Fraction:
    """c_k from B_{2k}; the table must already cover index 2k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if table.max_index < 2 * k:
        raise ValueError(
            f"table covers B_0..B_{table.max_index}, need B_{2 * k}"
        )
    sign = 1 if k % 2 == 1 else -1
    return sign * table.value(2 * k) * Fraction(2 ** (2 * k - 1), factorial(2 * k))
