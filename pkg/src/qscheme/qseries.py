"""q-shifted factorials and terminating basic hypergeometric sums.

(b; q)_k = (1 - b)(1 - qb)...(1 - q^{k-1} b), with (b; q)_0 = 1 and the
standard convention (0; q)_k = 1.

A terminating r_phi_s series with upper parameters (q^{-n}, a_2, ..., a_r),
lower parameters (b_1, ..., b_s), base q and argument z is the finite sum
over k = 0..n of

    (q^{-n}; q)_k (a_2..a_r; q)_k / ((q; q)_k (b_1..b_s; q)_k)
        * ((-1)^k q^{k(k-1)/2})^(s - r + 1) * z^k.

Everything is exact over rationals; a vanishing denominator factor raises
DivisionByZero unless an upper factor already killed the series at an
earlier index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DivisionByZero
from .qrational import rational


def qpoch(b: Fraction | int | str, q: Fraction | int | str, k: int) -> Fraction:
    """(b; q)_k as a finite exact product; k = 0 gives 1."""
    if k < 0:
        raise ValueError("q-shifted factorial needs k >= 0")
    b = rational(b)
    q = rational(q)
    acc = Fraction(1)
    power = Fraction(1)
    for _ in range(k):
        acc *= 1 - b * power
        power *= q
    return acc


def qpoch_many(bs: Sequence[Fraction], q: Fraction, k: int) -> Fraction:
    """(b_1, ..., b_m; q)_k = product of the individual symbols."""
    acc = Fraction(1)
    for b in bs:
        acc *= qpoch(b, q, k)
    return acc


@dataclass(frozen=True)
class QSeriesParams:
    """A terminating series: upper[0] must equal q**(-n)."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    q: Fraction
    z: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(rational(u) for u in self.upper))
        object.__setattr__(self, "lower", tuple(rational(b) for b in self.lower))
        object.__setattr__(self, "q", rational(self.q))
        object.__setattr__(self, "z", rational(self.z))
        self.validate()

    def validate(self) -> None:
        if self.n < 0:
            raise ValueError("termination order must be >= 0")
        if not self.upper or self.upper[0] != self.q ** (-self.n):
            raise ValueError("first upper parameter must be q**(-n)")
        # A lower parameter equal to q**(-m) with m < n zeroes the k = m+1
        # denominator; that is only legal when some upper parameter kills the
        # numerator at an index <= m+1.
        kill = self.n + 1
        for a in self.upper:
            for m in range(self.n + 1):
                if a == self.q ** (-m):
                    kill = min(kill, m + 1)
        for b in self.lower:
            for m in range(self.n):
                if b == self.q ** (-m) and m + 1 < kill:
                    raise DivisionByZero(
                        f"lower parameter {b} vanishes at term {m + 1} "
                        "before the series terminates"
                    )


def qhyper_sum(
    upper: Sequence[Fraction],
    lower: Sequence[Fraction],
    q: Fraction,
    z: Fraction,
    n: int,
) -> Fraction:
    """Sum the n+1 terms of the terminating series defined above.

    The first upper parameter is expected to be q**(-n).  Terms are built
    incrementally; once the running numerator hits zero all later terms are
    zero and the loop stops, which is what makes early-terminating series
    with otherwise-degenerate lower parameters legal.
    """
    upper = [rational(u) for u in upper]
    lower = [rational(b) for b in lower]
    q = rational(q)
    z = rational(z)
    correction = len(lower) - len(upper) + 1
    num = Fraction(1)
    den = Fraction(1)
    total = Fraction(0)
    qk = Fraction(1)  # q**k
    zk = Fraction(1)  # z**k
    for k in range(n + 1):
        if k > 0:
            qk_prev = qk / q  # q**(k-1)
            for a in upper:
                num *= 1 - a * qk_prev
            if num == 0:
                break
            for b in lower:
                den *= 1 - b * qk_prev
            den *= 1 - qk
            if den == 0:
                raise DivisionByZero(
                    f"denominator vanished at term {k} of a terminating series"
                )
        term = num / den * zk
        if correction:
            sign = -1 if (k * correction) % 2 else 1
            term *= sign * q ** (k * (k - 1) // 2 * correction)
        total += term
        qk *= q
        zk *= z
    return total


def qhyper(params: QSeriesParams) -> Fraction:
    """Evaluate a terminating series given as a QSeriesParams record."""
    return qhyper_sum(params.upper, params.lower, params.q, params.z, params.n)
