"""Dense univariate polynomials over exact rationals.

Coefficients are stored low degree first with no trailing zeros; the zero
polynomial stores an empty tuple and reports degree -1.  Degrees stay small
(~20) at desk scale, so the plain dense representation is enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DivisionByZero
from .qrational import rational

Scalar = Union[int, str, Fraction]


def _normalize(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [rational(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """coeffs[i] is the coefficient of x**i."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((Fraction(1),))

    @staticmethod
    def x() -> "Poly":
        return Poly((Fraction(0), Fraction(1)))

    @staticmethod
    def constant(c: Scalar) -> "Poly":
        return Poly((rational(c),))

    @staticmethod
    def linear(root: Scalar) -> "Poly":
        """The monic factor (x - root)."""
        return Poly((-rational(root), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            s = rational(other)
            return Poly(tuple(c * s for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other: Scalar) -> "Poly":
        return self * other

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        x = rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_affine(self, scale: Scalar, shift: Scalar = 0) -> "Poly":
        """Return p(scale*x + shift)."""
        arg = Poly((rational(shift), rational(scale)))
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * arg + Poly.constant(c)
        return acc

    def deflate(self, root: Scalar) -> tuple["Poly", Fraction]:
        """Synthetic division by (x - root): returns (quotient, remainder)."""
        root = rational(root)
        acc = Fraction(0)
        out: list[Fraction] = []
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        if not out:
            return Poly.zero(), Fraction(0)
        rem = out.pop()
        out.reverse()
        return Poly(out), rem


def poly(coeffs: Iterable[Scalar]) -> Poly:
    """Build a polynomial from low-degree-first coefficients."""
    return Poly(tuple(coeffs))


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_eval(p: Poly, x: Scalar) -> Fraction:
    return p(x)


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Long division: a = q*b + r with deg(r) < deg(b)."""
    if b.is_zero:
        raise DivisionByZero("polynomial division by zero")
    if a.degree < b.degree:
        return Poly.zero(), a
    rem = list(a.coeffs)
    lead = b.coeffs[-1]
    db = b.degree
    quot = [Fraction(0)] * (a.degree - db + 1)
    for i in range(a.degree - db, -1, -1):
        c = rem[i + db] / lead
        quot[i] = c
        if c != 0:
            for j, bc in enumerate(b.coeffs):
                rem[i + j] -= c * bc
    return Poly(quot), Poly(rem)


def product_of_linear(roots: Iterable[Scalar]) -> Poly:
    """The monic polynomial with the given roots (with multiplicity)."""
    acc = Poly.one()
    for r in roots:
        acc = acc * Poly.linear(r)
    return acc


def format_poly(p: Poly, var: str = "x") -> str:
    """Human-readable form, highest degree first: "x^2 - 3/2 x + 1/2"."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            xpow = var if i == 1 else f"{var}^{i}"
            body = xpow if mag == 1 else f"{mag} {xpow}"
        if not parts:
            parts.append(f"-{body}" if sign == "-" else body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
