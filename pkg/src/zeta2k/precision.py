"""Decimal evaluation of zeta(2k) plus an independent summation oracle.

Two routes to the same number:

* ``zeta_eval`` multiplies an exact coefficient c_k by pi^(2k), with pi
  computed in-house (Chudnovsky binary splitting over plain integers) and
  self-checked by recomputation at a higher guard level.
* ``zeta_direct_sum`` truncates the defining series sum(1/n^(2k)).  The
  cutoff N is the smallest integer with N^(1-2k)/(2k-1) < 10^-(D+2), the
  integral bound on the dropped tail, so the result is guaranteed to sit
  within 10^-(D+2) of the true value.  No series acceleration is used:
  Euler-Maclaurin would smuggle Bernoulli numbers back in and make the
  cross-check circular.  The cost of that honesty is that small k at high
  D is infeasible; the error raised then reports the largest feasible D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Any

from mpmath import mp

__all__ = [
    "PrecisionConfig",
    "HighPrecReal",
    "InfeasiblePrecisionError",
    "pi_value",
    "pi_digits",
    "zeta_eval",
    "direct_sum_terms",
    "feasible_digits",
    "zeta_direct_sum",
    "format_real",
]


@dataclass(frozen=True)
class PrecisionConfig:
    """Requested digits D, guard digits, and the oracle's term budget."""

    digits: int
    guard: int = 15
    max_sum_terms: int = 10**8

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError(f"digits must be >= 1, got {self.digits}")
        if self.guard < 15:
            raise ValueError(f"guard must be >= 15, got {self.guard}")
        if self.max_sum_terms < 1:
            raise ValueError("max_sum_terms must be >= 1")


@dataclass(frozen=True)
class HighPrecReal:
    """An arbitrary-precision value tagged with its requested digit count."""

    digits: int
    value: Any  # mpmath.mpf carrying comfortably more than `digits` digits


class InfeasiblePrecisionError(Exception):
    """The truncation bound needs more terms than the configured budget."""

    def __init__(self, k: int, digits: int, required_terms: int, max_sum_terms: int):
        self.k = k
        self.digits = digits
        self.required_terms = required_terms
        self.max_sum_terms = max_sum_terms
        self.feasible_digits = feasible_digits(k, max_sum_terms)
        super().__init__(
            f"direct sum for k={k} at {digits} digits needs N={required_terms} "
            f"terms, over the budget of {max_sum_terms}; "
            f"largest feasible digits for this k: {self.feasible_digits}"
        )


# ---------------------------------------------------------------------------
# pi by Chudnovsky binary splitting, over plain integers

_C3_OVER_24 = 640320**3 // 24


def _chud_split(a: int, b: int) -> tuple[int, int, int]:
    if b - a == 1:
        if a == 0:
            p = q = 1
        else:
            p = (6 * a - 5) * (2 * a - 1) * (6 * a - 1)
            q = a * a * a * _C3_OVER_24
        t = p * (13591409 + 545140134 * a)
        return p, q, -t if a & 1 else t
    m = (a + b) // 2
    p1, q1, t1 = _chud_split(a, m)
    p2, q2, t2 = _chud_split(m, b)
    return p1 * p2, q1 * q2, q2 * t1 + p1 * t2


def _pi_scaled(frac_digits: int) -> int:
    """floor(pi * 10**frac_digits). Each series term adds ~14.18 digits."""
    work = frac_digits + 10
    _, q, t = _chud_split(0, work // 14 + 2)
    root = isqrt(10005 * 10 ** (2 * work))
    return (q * 426880 * root // t) // 10**10


def pi_digits(frac_digits: int) -> str:
    """pi truncated to the given number of fractional digits, as text."""
    if frac_digits < 1:
        raise ValueError("frac_digits must be >= 1")
    s = str(_pi_scaled(frac_digits))
    return f"{s[0]}.{s[1:]}"


def pi_value(cfg: PrecisionConfig) -> HighPrecReal:
    """pi to digits+guard; self-checked by recomputation at digits+2*guard."""
    d1 = cfg.digits + cfg.guard
    d2 = cfg.digits + 2 * cfg.guard
    first = _pi_scaled(d1)
    second = _pi_scaled(d2)
    if second // 10 ** (d2 - d1) != first:
        raise RuntimeError(
            f"pi self-check failed: {d1}- and {d2}-digit runs disagree"
        )
    with mp.workdps(d2 + 10):
        value = mp.mpf(second) / mp.mpf(10**d2)
    return HighPrecReal(digits=cfg.digits, value=value)


# ---------------------------------------------------------------------------
# the two evaluation routes


def zeta_eval(k: int, cfg: PrecisionConfig, c_k: Fraction) -> HighPrecReal:
    """zeta(2k) = c_k * pi^(2k) to cfg.digits decimal places.

    c_k must be the verified coefficient for this k; it is trusted here.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    pi = pi_value(cfg)
    # a small buffer past digits+guard so the guard digits are themselves
    # clean; the power loses only ~log10(2k) digits
    with mp.workdps(cfg.digits + cfg.guard + 10):
        value = mp.mpf(c_k.numerator) / c_k.denominator * pi.value ** (2 * k)
    return HighPrecReal(digits=cfg.digits, value=value)


def direct_sum_terms(k: int, cfg: PrecisionConfig) -> int:
    """Smallest N whose tail bound N^(1-2k)/(2k-1) is below 10^-(digits+2).

    Exact integer arithmetic throughout: the float seed is only a starting
    point and the answer is adjusted against the bound itself.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    e = 2 * k - 1
    target = 10 ** (cfg.digits + 2)
    n = max(1, _floor_nth_root(target // e, e))
    while e * n**e <= target:
        n += 1
    while n > 1 and e * (n - 1) ** e > target:
        n -= 1
    return n


def _floor_nth_root(x: int, e: int) -> int:
    if x <= 0:
        return 0
    r = 1 << -(-x.bit_length() // e)  # power of two at or above the root
    while True:
        nr = ((e - 1) * r + x // r ** (e - 1)) // e
        if nr >= r:
            return r
        r = nr


def feasible_digits(k: int, max_sum_terms: int) -> int:
    """Largest D the truncation bound can reach within the term budget."""
    if k < 1 or max_sum_terms < 1:
        raise ValueError("k and max_sum_terms must be >= 1")
    m = (2 * k - 1) * max_sum_terms ** (2 * k - 1)
    t = len(str(m)) - 1
    if m == 10**t:
        t -= 1  # the bound is strict
    return max(0, t - 2)


def zeta_direct_sum(k: int, cfg: PrecisionConfig) -> HighPrecReal:
    """sum(1/n^(2k), n=1..N) with N from the tail bound.

    Summed in truncating fixed-point arithmetic: each term is
    10^P // n^(2k), so per-term error is below 10^-P and the total
    truncation error N*10^-P stays far inside the 10^-(digits+2) budget.
    """
    n_terms = direct_sum_terms(k, cfg)
    if n_terms > cfg.max_sum_terms:
        raise InfeasiblePrecisionError(k, cfg.digits, n_terms, cfg.max_sum_terms)
    p = cfg.digits + cfg.guard + len(str(n_terms)) + 2
    scale = 10**p
    e = 2 * k
    total = sum(scale // n**e for n in range(1, n_terms + 1))
    with mp.workdps(p + 10):
        value = mp.mpf(total) / scale
    return HighPrecReal(digits=cfg.digits, value=value)


# ---------------------------------------------------------------------------
# rendering


def format_real(x: HighPrecReal) -> str:
    """Fixed point with exactly x.digits fractional digits.

    Values with 0 < |x| < 1e-4 switch to scientific notation, keeping
    x.digits fractional digits in the mantissa.
    """
    d = x.digits
    with mp.workdps(d + 25):
        v = mp.mpf(x.value)
        if v and abs(v) < mp.mpf("1e-4"):
            exp = int(mp.floor(mp.log10(abs(v))))
            scaled = int(mp.nint(abs(v) * mp.mpf(10) ** (d - exp)))
            if scaled >= 10 ** (d + 1):  # rounding pushed the mantissa to 10
                exp += 1
                scaled = int(mp.nint(abs(v) * mp.mpf(10) ** (d - exp)))
            s = str(scaled)
            mant = f"{s[0]}.{s[1:]}" if d else s
            sign = "-" if v < 0 else ""
            return f"{sign}{mant}e{exp:+03d}"
        return _fixed(v, d)


def _fixed(v, d: int) -> str:
    sign = "-" if v < 0 else ""
    scaled = int(mp.nint(abs(v) * mp.mpf(10) ** d))
    s = str(scaled).rjust(d + 1, "0")
    return f"{sign}{s[:-d]}.{s[-d:]}" if d else f"{sign}{s}"
