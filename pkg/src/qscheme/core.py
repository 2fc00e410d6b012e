"""The parameter-vector engine of the q-Askey scheme.

A family of monic polynomials u_n is encoded by eleven Laurent coefficients
in q**k: three each for the node and eigenvalue sequences and five for the
lowering sequence,

    node(k)       = b0 + b1*q**k + b2*q**-k
    eigenvalue(k) = a0 + a1*q**k + a2*q**-k
    lowering(k)   = d0 + d1*q**k + d2*q**-k + d3*q**2k + d4*q**-2k

subject to d0+d1+d2+d3+d4 = 0, d3 = a1*b1/q and d4 = q*a2*b2.  The monic
u_n expand over the Newton basis v_k(x) = prod_{j<k} (x - node(j)) with
triangular coefficients

    c[n][k] = prod_{j=k}^{n-1} lowering(j+1) / (eigenvalue(n) - eigenvalue(j)),

are eigenfunctions of the operator acting on the Newton basis as
L v_k = eigenvalue(k) v_k + lowering(k) v_{k-1}, and satisfy the three-term
recurrence x*u_n = u_{n+1} + a_n*u_n + b_n*u_{n-1} exactly when the d3/d4
constraints hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal

from .errors import (
    ConstraintViolation,
    HSeparationViolated,
    XSeparationViolated,
    ZeroG,
)
from .qpolynomial import Poly
from .qrational import admissible_q, format_rational, rational

SequenceKind = Literal["x", "h", "g", "node", "eigenvalue", "lowering"]


@dataclass(frozen=True)
class ParameterVector:
    """q plus the eleven Laurent coefficients, validated on construction."""

    q: Fraction
    a: tuple[Fraction, Fraction, Fraction]
    b: tuple[Fraction, Fraction, Fraction]
    d: tuple[Fraction, Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "q", rational(self.q))
        object.__setattr__(self, "a", tuple(rational(v) for v in self.a))
        object.__setattr__(self, "b", tuple(rational(v) for v in self.b))
        object.__setattr__(self, "d", tuple(rational(v) for v in self.d))
        if len(self.a) != 3 or len(self.b) != 3 or len(self.d) != 5:
            raise ConstraintViolation("expected 3 + 3 + 5 coefficients")
        self._validate()

    def _validate(self) -> None:
        q, a, b, d = self.q, self.a, self.b, self.d
        if not admissible_q(q):
            raise ConstraintViolation(f"base q = {q} must avoid 0 and +/-1")
        if sum(d) != 0:
            raise ConstraintViolation("d coefficients must sum to zero")
        if d[3] != a[1] * b[1] / q:
            raise ConstraintViolation("d3 must equal a1*b1/q")
        if d[4] != q * a[2] * b[2]:
            raise ConstraintViolation("d4 must equal q*a2*b2")
        if a[1] == 0 and a[2] == 0:
            raise ConstraintViolation("a1 and a2 cannot both vanish")
        if all(v == 0 for v in d):
            raise ConstraintViolation(
                "all lowering coefficients vanish (degenerate family)"
            )

    # -- sequences ---------------------------------------------------------

    def node(self, k: int) -> Fraction:
        qk = self.q**k
        return self.b[0] + self.b[1] * qk + self.b[2] / qk

    def eigenvalue(self, k: int) -> Fraction:
        qk = self.q**k
        return self.a[0] + self.a[1] * qk + self.a[2] / qk

    def lowering(self, k: int) -> Fraction:
        qk = self.q**k
        d = self.d
        return d[0] + d[1] * qk + d[2] / qk + d[3] * qk * qk + d[4] / (qk * qk)

    # -- separation checks (finite and exact for rational q) ----------------

    def h_separation_ok(self, depth: int) -> bool:
        """eigenvalue(n) != eigenvalue(j) for all 0 <= j < n <= depth.

        Equivalent to a2 != a1 * q**m for m = 1 .. 2*depth - 1.
        """
        return all(
            self.a[2] != self.a[1] * self.q**m for m in range(1, 2 * depth)
        )

    def check_h_separation(self, depth: int) -> None:
        for n in range(1, depth + 1):
            hn = self.eigenvalue(n)
            for j in range(n):
                if hn == self.eigenvalue(j):
                    raise HSeparationViolated(n, j)

    def x_separation_ok(self, depth: int) -> bool:
        return all(
            self.b[2] != self.b[1] * self.q**m for m in range(1, 2 * depth)
        )

    def check_x_separation(self, depth: int) -> None:
        for m in range(1, depth + 1):
            xm = self.node(m)
            for j in range(m):
                if xm == self.node(j):
                    raise XSeparationViolated(m, j)

    # -- serialization -------------------------------------------------------

    def to_json_dict(self, checked_depth: int | None = None) -> dict:
        payload = {
            "q": format_rational(self.q),
            "a": [format_rational(v) for v in self.a],
            "b": [format_rational(v) for v in self.b],
            "d": [format_rational(v) for v in self.d],
        }
        check = {
            "constraints": [
                "sum_d_zero",
                "d3_equals_a1_b1_over_q",
                "d4_equals_q_a2_b2",
                "a1_a2_not_both_zero",
                "some_d_nonzero",
            ],
        }
        if checked_depth is not None:
            check["h_separation_depth"] = checked_depth
            check["h_separation_ok"] = self.h_separation_ok(checked_depth)
        payload["check"] = check
        return payload

    @staticmethod
    def from_json_dict(data: dict) -> "ParameterVector":
        return ParameterVector(
            q=rational(data["q"]),
            a=tuple(rational(v) for v in data["a"]),
            b=tuple(rational(v) for v in data["b"]),
            d=tuple(rational(v) for v in data["d"]),
        )


@dataclass(frozen=True)
class UncheckedParameterVector(ParameterVector):
    """Constraint checks skipped; only for deliberately broken vectors."""

    def _validate(self) -> None:  # noqa: D102 - negative-test escape hatch
        pass


def perturbed(
    pv: ParameterVector,
    *,
    a: tuple | None = None,
    b: tuple | None = None,
    d: tuple | None = None,
) -> UncheckedParameterVector:
    """Copy a vector with fields replaced, skipping constraint checks."""
    return UncheckedParameterVector(
        q=pv.q,
        a=a if a is not None else pv.a,
        b=b if b is not None else pv.b,
        d=d if d is not None else pv.d,
    )


@dataclass(frozen=True)
class SequenceView:
    """A single sequence of a vector, indexable by k."""

    owner: ParameterVector
    kind: SequenceKind

    def __getitem__(self, k: int) -> Fraction:
        return seq_eval(self.owner, self.kind, k)


def seq_eval(pv: ParameterVector, kind: SequenceKind, k: int) -> Fraction:
    """Exact value of node/eigenvalue/lowering at index k >= 0."""
    if k < 0:
        raise ValueError("sequence index must be >= 0")
    if kind in ("x", "node"):
        return pv.node(k)
    if kind in ("h", "eigenvalue"):
        return pv.eigenvalue(k)
    if kind in ("g", "lowering"):
        return pv.lowering(k)
    raise ValueError(f"unknown sequence kind {kind!r}")


def newton_basis(pv: ParameterVector, k: int) -> Poly:
    """The monic basis polynomial prod_{j<k} (x - node(j)); k = 0 gives 1."""
    acc = Poly.one()
    for j in range(k):
        acc = acc * Poly.linear(pv.node(j))
    return acc


@dataclass(frozen=True)
class NewtonExpansion:
    """Lower-triangular expansion coefficients of u_n over the Newton basis."""

    vector: ParameterVector
    order: int
    rows: tuple[tuple[Fraction, ...], ...]

    def coeff(self, n: int, k: int) -> Fraction:
        if not 0 <= k <= n <= self.order:
            raise IndexError(f"coefficient ({n},{k}) outside triangle")
        return self.rows[n][k]


@lru_cache(maxsize=4096)
def _expansion_rows(pv: ParameterVector, order: int) -> tuple[tuple[Fraction, ...], ...]:
    h = [pv.eigenvalue(k) for k in range(order + 1)]
    g = [pv.lowering(k) for k in range(order + 1)]
    rows: list[tuple[Fraction, ...]] = []
    for n in range(order + 1):
        row = [Fraction(0)] * (n + 1)
        row[n] = Fraction(1)
        for k in range(n - 1, -1, -1):
            denom = h[n] - h[k]
            if denom == 0:
                raise HSeparationViolated(n, k)
            row[k] = row[k + 1] * g[k + 1] / denom
        rows.append(tuple(row))
    return tuple(rows)


def expansion(pv: ParameterVector, order: int) -> NewtonExpansion:
    """All c[n][k] for n <= order; zero lowering values propagate exact zeros."""
    return NewtonExpansion(pv, order, _expansion_rows(pv, order))


@lru_cache(maxsize=8192)
def monic_poly(pv: ParameterVector, n: int) -> Poly:
    """The monic degree-n polynomial sum_k c[n][k] v_k in the monomial basis."""
    row = _expansion_rows(pv, n)[n]
    acc = Poly.zero()
    basis = Poly.one()
    for k in range(n + 1):
        if row[k] != 0:
            acc = acc + basis * row[k]
        if k < n:
            basis = basis * Poly.linear(pv.node(k))
    return acc


def to_newton_coeffs(pv: ParameterVector, p: Poly) -> list[Fraction]:
    """Coefficients e_k with p = sum e_k v_k, by repeated node deflation."""
    out: list[Fraction] = []
    rest = p
    k = 0
    while not rest.is_zero:
        rest, value = rest.deflate(pv.node(k))
        out.append(value)
        k += 1
    if not out:
        out.append(Fraction(0))
    return out


def from_newton_coeffs(pv: ParameterVector, coeffs: Iterable[Fraction]) -> Poly:
    coeffs = list(coeffs)
    acc = Poly.zero()
    for k in range(len(coeffs) - 1, -1, -1):
        acc = acc * Poly.linear(pv.node(k)) + Poly.constant(coeffs[k])
    return acc


def apply_operator(pv: ParameterVector, p: Poly) -> Poly:
    """Apply the family's eigenoperator.

    The operator is represented through its Newton-basis action
    L v_k = eigenvalue(k) v_k + lowering(k) v_{k-1}: expand p over the basis,
    transform termwise, convert back to the monomial basis.
    """
    e = to_newton_coeffs(pv, p)
    out = []
    for k in range(len(e)):
        value = pv.eigenvalue(k) * e[k]
        if k + 1 < len(e):
            value += pv.lowering(k + 1) * e[k + 1]
        out.append(value)
    return from_newton_coeffs(pv, out)


def recurrence_coeff0(pv: ParameterVector) -> Fraction:
    """a_0 in u_1 = x - a_0: node(0) - lowering(1)/(eigenvalue(1)-eigenvalue(0))."""
    denom = pv.eigenvalue(1) - pv.eigenvalue(0)
    if denom == 0:
        raise HSeparationViolated(1, 0)
    return pv.node(0) - pv.lowering(1) / denom


def recurrence_coeffs(pv: ParameterVector, n: int) -> tuple[Fraction, Fraction]:
    """(a_n, b_n) of x*u_n = u_{n+1} + a_n*u_n + b_n*u_{n-1}, for n >= 1."""
    if n < 1:
        raise ValueError("recurrence coefficients need n >= 1; use recurrence_coeff0")
    h = pv.eigenvalue
    g = pv.lowering
    x = pv.node

    def ratio(num_idx: int, da: int, db: int) -> Fraction:
        value = g(num_idx)
        if value == 0:
            return Fraction(0)
        denom = h(da) - h(db)
        if denom == 0:
            raise HSeparationViolated(max(da, db), min(da, db))
        return value / denom

    a_n = x(n) + ratio(n + 1, n, n + 1) - ratio(n, n - 1, n)
    lead = ratio(n, n - 1, n)
    if lead == 0:
        return a_n, Fraction(0)
    inner = (
        (ratio(n - 1, n - 2, n) if n >= 2 else Fraction(0))
        - ratio(n, n - 1, n)
        + ratio(n + 1, n - 1, n + 1)
        + x(n)
        - x(n - 1)
    )
    return a_n, lead * inner


def recurrence_check(pv: ParameterVector, n: int) -> bool:
    """Exact polynomial check of the three-term recurrence at index n."""
    if n == 0:
        lhs = Poly.x() * monic_poly(pv, 0)
        rhs = monic_poly(pv, 1) + recurrence_coeff0(pv) * monic_poly(pv, 0)
        return lhs == rhs
    a_n, b_n = recurrence_coeffs(pv, n)
    lhs = Poly.x() * monic_poly(pv, n)
    rhs = (
        monic_poly(pv, n + 1)
        + a_n * monic_poly(pv, n)
        + b_n * monic_poly(pv, n - 1)
    )
    return lhs == rhs


def finite_cutoff(pv: ParameterVector, n_max: int) -> int | None:
    """Smallest N with lowering(N+1) = 0 and lowering(j) != 0 for j <= N.

    Searched for N up to n_max; None when no lowering value vanishes there.
    Such an N truncates the family to a finite orthogonal system of degrees
    n <= N, and forces c[n][k] = 0 exactly for k <= N < n.
    """
    for k in range(1, n_max + 2):
        if pv.lowering(k) == 0:
            return k - 1
    return None


def normalized_poly(pv: ParameterVector, n: int) -> Poly:
    """u_n rescaled by prod_{j<n} (eigenvalue(n)-eigenvalue(j))/lowering(j+1).

    In this normalization the family satisfies the node/eigenvalue duality
    checked by duality_check.  Requires lowering(1..n) nonzero.
    """
    factor = Fraction(1)
    hn = pv.eigenvalue(n)
    for j in range(n):
        g = pv.lowering(j + 1)
        if g == 0:
            raise ZeroG(j + 1)
        factor *= (hn - pv.eigenvalue(j)) / g
    return monic_poly(pv, n) * factor


def dual_normalized_poly(pv: ParameterVector, m: int, strict: bool = False) -> Poly:
    """The dual partner of normalized_poly, a polynomial in the eigenvalue
    variable:

        sum_k prod_{j<k} (node(m)-node(j)) / prod_{j=1..k} lowering(j)
              * prod_{j<k} (y - eigenvalue(j)).

    Requires lowering(1..m) nonzero.  With strict=True the node sequence must
    also be collision-free up to m (needed when this polynomial is built
    through the dualized vector's Newton expansion rather than this sum).
    """
    if strict:
        pv.check_x_separation(m)
    acc = Poly.zero()
    basis = Poly.one()
    coeff = Fraction(1)
    xm = pv.node(m)
    for k in range(m + 1):
        if k > 0:
            g = pv.lowering(k)
            if g == 0:
                raise ZeroG(k)
            coeff *= (xm - pv.node(k - 1)) / g
            basis = basis * Poly.linear(pv.eigenvalue(k - 1))
        acc = acc + basis * coeff
    return acc


def duality_check(pv: ParameterVector, n: int, m: int) -> bool:
    """Exact equality U_n(node(m)) == dual_U_m(eigenvalue(n))."""
    lhs = normalized_poly(pv, n)(pv.node(m))
    rhs = dual_normalized_poly(pv, m)(pv.eigenvalue(n))
    return lhs == rhs
