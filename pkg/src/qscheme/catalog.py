"""The family registry: explicit data for every scheme diagram.

Each entry records one (continuous) family attached to a diagram label:
closed forms for its node/eigenvalue/lowering sequences, the leading
coefficient k_n of its conventionally normalized polynomials, and a
terminating q-hypergeometric representation.  The registry is the
independent oracle for the engine: a vector built from the sequence data
must reproduce k_n^{-1} times the named polynomial exactly.

Families whose representation is naturally a function of z with
x = z + 1/z are evaluated at rational x through the pairing

    (1 - a q^j z)(1 - a q^j / z) = 1 - a q^j x + a^2 q^{2j}
                                 = a q^j (node(j) - x),

which keeps the whole computation inside exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .core import ParameterVector, monic_poly
from .errors import DivisionByZero, InadmissibleParams, Mismatch
from .classifier import LABELS, ZeroPattern, pattern_of
from .qrational import admissible_q, format_rational, rational
from .qseries import qhyper_sum, qpoch, qpoch_many
from . import symmetry

Params = Mapping[str, Fraction]

DEFAULT_Q = Fraction(1, 2)

# Nonzero rational sample abscissas for polynomial-identity checks; several
# representations carry 1/x and cannot be probed at the origin.
SAMPLE_XS = (
    Fraction(2),
    Fraction(3),
    Fraction(-2),
    Fraction(5, 2),
    Fraction(-1, 3),
    Fraction(7, 3),
    Fraction(-5, 2),
    Fraction(1, 5),
    Fraction(4),
    Fraction(-3),
    Fraction(9, 2),
    Fraction(-4, 3),
    Fraction(5),
)


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Tiny exact Gaussian elimination (systems here are 3x3 and 5x5)."""
    n = len(rows)
    m = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        head = m[col][col]
        m[col] = [v / head for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def _paired_product(x: Fraction, anchor: Fraction, q: Fraction, k: int) -> Fraction:
    """prod_{j<k} (1 - anchor q^j x + anchor^2 q^{2j})."""
    acc = Fraction(1)
    power = Fraction(1)
    for _ in range(k):
        acc *= 1 - anchor * power * x + anchor * anchor * power * power
        power *= q
    return acc


def _z_series(
    n: int,
    q: Fraction,
    x: Fraction,
    anchor: Fraction,
    upper_extra: tuple[Fraction, ...],
    lower: tuple[Fraction, ...],
) -> Fraction:
    """sum_k (q^{-n};q)_k (upper_extra;q)_k / ((q;q)_k (lower;q)_k)
    * q^k * prod_{j<k}(1 - anchor q^j x + anchor^2 q^{2j})."""
    total = Fraction(0)
    for k in range(n + 1):
        num = qpoch(q ** (-n), q, k) * qpoch_many(upper_extra, q, k)
        if num == 0:
            break
        den = qpoch(q, q, k) * qpoch_many(lower, q, k)
        if den == 0:
            raise DivisionByZero(f"z-series denominator vanished at term {k}")
        total += num / den * q**k * _paired_product(x, anchor, q, k)
    return total


def _inverse_arg_series(
    n: int,
    q: Fraction,
    x: Fraction,
    node_scale: Fraction,
    weight: Fraction,
    upper_extra: tuple[Fraction, ...] = (),
    lower: tuple[Fraction, ...] = (),
    correction: int = 0,
) -> Fraction:
    """Series whose terms carry (node_scale/x; q)_k * (weight*x)^k, absorbed
    into the polynomial product weight^k * prod_{j<k} (x - node_scale*q^j)
    so that x = 0 is a legal argument.  `correction` is the usual
    sign/triangular-power exponent of the underlying series."""
    total = Fraction(0)
    for k in range(n + 1):
        num = qpoch(q ** (-n), q, k) * qpoch_many(upper_extra, q, k)
        if num == 0:
            break
        den = qpoch(q, q, k) * qpoch_many(lower, q, k)
        if den == 0:
            raise DivisionByZero(
                f"inverse-argument series denominator vanished at term {k}"
            )
        term = num / den * weight**k
        for j in range(k):
            term *= x - node_scale * q**j
        if correction:
            sign = -1 if (k * correction) % 2 else 1
            term *= sign * q ** (k * (k - 1) // 2 * correction)
        total += term
    return total


def cdqhahn_value(
    q: Fraction, n: int, x: Fraction, anchor: Fraction, o1: Fraction, o2: Fraction
) -> Fraction:
    """Monic continuous dual q-Hahn value anchored at one of its parameters."""
    if anchor == 0:
        raise InadmissibleParams("continuous dual q-Hahn anchor must be nonzero")
    pref = qpoch_many((anchor * o1, anchor * o2), q, n) / anchor**n
    return pref * _z_series(n, q, x, anchor, (), (anchor * o1, anchor * o2))


def little_qjacobi_value(p: Params, q: Fraction, n: int, x: Fraction) -> Fraction:
    """Little q-Jacobi in standard normalization, power-basis series."""
    a, b = p["a"], p["b"]
    return qhyper_sum(
        (q ** (-n), a * b * q ** (n + 1)), (q * a,), q, q * x, n
    )


def little_qjacobi_value_inverse_rep(
    p: Params, q: Fraction, n: int, x: Fraction
) -> Fraction:
    """The same polynomial through its 1/x-parameter series."""
    a, b = p["a"], p["b"]
    sign = -1 if n % 2 else 1
    pref = sign * q ** (n * (n + 1) // 2) * a**n * qpoch(b * q, q, n) / qpoch(a * q, q, n)
    return pref * _inverse_arg_series(
        n,
        q,
        x,
        node_scale=Fraction(1),
        weight=1 / a,
        upper_extra=(a * b * q ** (n + 1),),
        lower=(q * b,),
        correction=-1,
    )


def qbessel_value(p: Params, q: Fraction, n: int, x: Fraction) -> Fraction:
    """q-Bessel in standard normalization, power-basis series."""
    a = p["a"]
    return qhyper_sum((q ** (-n), -a * q**n), (Fraction(0),), q, q * x, n)


def qbessel_value_inverse_rep(p: Params, q: Fraction, n: int, x: Fraction) -> Fraction:
    """The same polynomial through its 1/x-parameter series."""
    a = p["a"]
    sign = -1 if n % 2 else 1
    pref = sign * q ** (n * n) * a**n
    return pref * _inverse_arg_series(
        n,
        q,
        x,
        node_scale=Fraction(1),
        weight=-1 / a,
        upper_extra=(-a * q**n,),
        correction=-2,
    )


@dataclass(frozen=True)
class ParamSpec:
    name: str
    constraint: str = "any rational"
    check: Callable[[Fraction], bool] = field(default=lambda v: True)


@dataclass(frozen=True)
class FamilySpec:
    key: str
    name: str
    kls_section: int | None
    node_label: str
    params: tuple[ParamSpec, ...]
    defaults: dict[str, Fraction]
    newton_form: str
    positivity: str  # recorded orthogonality-range metadata, not enforced
    node_fn: Callable[[Params, Fraction, int], Fraction]
    eigen_fn: Callable[[Params, Fraction, int], Fraction]
    lowering_fn: Callable[[Params, Fraction, int], Fraction]
    kn_fn: Callable[[Params, Fraction, int], Fraction]
    named_fn: Callable[[Params, Fraction, int, Fraction], Fraction]

    @property
    def pattern(self) -> ZeroPattern:
        return LABELS[self.node_label]


def _nonzero(name: str) -> ParamSpec:
    return ParamSpec(name, f"{name} != 0", lambda v: v != 0)


def _any(name: str) -> ParamSpec:
    return ParamSpec(name)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _halfsq(n: int) -> int:
    """n(n-1)/2, the ubiquitous triangular exponent."""
    return n * (n - 1) // 2


# -- sequence closed forms ----------------------------------------------------


def _sym_node(p, q, k):
    a = p["a"]
    return a * q**k + q ** (-k) / a


def _hk_qinv_minus_one(p, q, k):
    return q ** (-k) - 1


FAMILIES: dict[str, FamilySpec] = {}


def _register(spec: FamilySpec) -> None:
    FAMILIES[spec.key] = spec


_register(
    FamilySpec(
        key="1a",
        name="Askey-Wilson",
        kls_section=1,
        node_label="1a",
        params=(_nonzero("a"), _any("b"), _any("c"), _any("d")),
        defaults={
            "a": Fraction(2),
            "b": Fraction(1, 3),
            "c": Fraction(1, 5),
            "d": Fraction(1, 7),
        },
        newton_form="v_k(x) = prod_{j<k} (x - a q^j - q^-j/a)",
        positivity="a,b,c,d real with pairwise products < 1",
        node_fn=_sym_node,
        eigen_fn=lambda p, q, k: q ** (-k)
        * (1 - q**k)
        * (1 - p["a"] * p["b"] * p["c"] * p["d"] * q ** (k - 1)),
        lowering_fn=lambda p, q, k: q ** (-2 * k + 1)
        / p["a"]
        * (1 - p["a"] * p["b"] * q ** (k - 1))
        * (1 - p["a"] * p["c"] * q ** (k - 1))
        * (1 - p["a"] * p["d"] * q ** (k - 1))
        * (1 - q**k),
        kn_fn=lambda p, q, n: qpoch(
            q ** (n - 1) * p["a"] * p["b"] * p["c"] * p["d"], q, n
        ),
        named_fn=lambda p, q, n, x: qpoch_many(
            (p["a"] * p["b"], p["a"] * p["c"], p["a"] * p["d"]), q, n
        )
        / p["a"] ** n
        * _z_series(
            n,
            q,
            x,
            p["a"],
            (q ** (n - 1) * p["a"] * p["b"] * p["c"] * p["d"],),
            (p["a"] * p["b"], p["a"] * p["c"], p["a"] * p["d"]),
        ),
    )
)

_register(
    FamilySpec(
        key="2a",
        name="continuous dual q-Hahn",
        kls_section=3,
        node_label="2a",
        params=(_nonzero("a"), _any("b"), _any("c")),
        defaults={"a": Fraction(2), "b": Fraction(1, 3), "c": Fraction(1, 5)},
        newton_form="v_k(x) = prod_{j<k} (x - a q^j - q^-j/a)",
        positivity="ab, ac, bc < 1",
        node_fn=_sym_node,
        eigen_fn=_hk_qinv_minus_one,
        lowering_fn=lambda p, q, k: q ** (-2 * k + 1)
        / p["a"]
        * (1 - p["a"] * p["b"] * q ** (k - 1))
        * (1 - p["a"] * p["c"] * q ** (k - 1))
        * (1 - q**k),
        kn_fn=lambda p, q, n: Fraction(1),
        named_fn=lambda p, q, n, x: cdqhahn_value(q, n, x, p["a"], p["b"], p["c"]),
    )
)

_register(
    FamilySpec(
        key="2b",
        name="big q-Jacobi",
        kls_section=5,
        node_label="2b",
        params=(_any("a"), _any("b"), _any("c")),
        defaults={"a": Fraction(1, 3), "b": Fraction(1, 4), "c": Fraction(-1, 2)},
        newton_form="v_k(x) = prod_{j<k} (x - q^-j)",
        positivity="0 < aq < 1, 0 <= bq < 1, c < 0",
        node_fn=lambda p, q, k: q ** (-k),
        eigen_fn=lambda p, q, k: (1 - q ** (-k)) * (-1 + q ** (k + 1) * p["a"] * p["b"]),
        lowering_fn=lambda p, q, k: q ** (1 - 2 * k)
        * (1 - p["a"] * q**k)
        * (1 - p["c"] * q**k)
        * (1 - q**k),
        kn_fn=lambda p, q, n: qpoch(q ** (n + 1) * p["a"] * p["b"], q, n)
        / (qpoch(q * p["a"], q, n) * qpoch(q * p["c"], q, n)),
        named_fn=lambda p, q, n, x: qhyper_sum(
            (q ** (-n), p["a"] * p["b"] * q ** (n + 1), x),
            (q * p["a"], q * p["c"]),
            q,
            q,
            n,
        ),
    )
)

_register(
    FamilySpec(
        key="3a",
        name="Al-Salam-Chihara",
        kls_section=8,
        node_label="3a",
        params=(_nonzero("a"), _any("b")),
        defaults={"a": Fraction(2), "b": Fraction(1, 4)},
        newton_form="v_k(x) = prod_{j<k} (x - a q^j - q^-j/a)",
        positivity="ab < 1",
        node_fn=_sym_node,
        eigen_fn=_hk_qinv_minus_one,
        lowering_fn=lambda p, q, k: q ** (-2 * k + 1)
        / p["a"]
        * (1 - p["a"] * p["b"] * q ** (k - 1))
        * (1 - q**k),
        kn_fn=lambda p, q, n: Fraction(1),
        named_fn=lambda p, q, n, x: qpoch(p["a"] * p["b"], q, n)
        / p["a"] ** n
        * _z_series(n, q, x, p["a"], (), (p["a"] * p["b"], Fraction(0))),
    )
)

_register(
    FamilySpec(
        key="3b",
        name="big q-Laguerre",
        kls_section=11,
        node_label="3b",
        params=(_any("a"), _any("b")),
        defaults={"a": Fraction(1, 3), "b": Fraction(-1, 2)},
        newton_form="v_k(x) = x^k (qa/x; q)_k",
        positivity="0 < aq < 1, b < 0",
        node_fn=lambda p, q, k: p["a"] * q ** (k + 1),
        eigen_fn=_hk_qinv_minus_one,
        lowering_fn=lambda p, q, k: -(q ** (1 - k))
        * p["b"]
        * (1 - p["a"] * q**k)
        * (1 - q**k),
        kn_fn=lambda p, q, n: 1
        / (qpoch(q * p["a"], q, n) * qpoch(q * p["b"], q, n)),
        named_fn=lambda p, q, n, x: (-p["b"]) ** n
        * q ** (n * (n + 1) // 2)
        * _inverse_arg_series(
            n, q, x, node_scale=q * p["a"], weight=1 / p["b"], lower=(q * p["a"],)
        )
        / qpoch(q * p["b"], q, n),
    )
)

_register(
    FamilySpec(
        key="3c",
        name="big q-Laguerre",
        kls_section=11,
        node_label="3c",
        params=(_any("a"), _any("b")),
        defaults={"a": Fraction(1, 3), "b": Fraction(-1, 2)},
        newton_form="v_k(x) = (-1)^k q^{-k(k-1)/2} (x; q)_k",
        positivity="0 < aq < 1, b < 0",
        node_fn=lambda p, q, k: q ** (-k),
        eigen_fn=_hk_qinv_minus_one,
        lowering_fn=lambda p, q, k: q ** (1 - 2 * k)
        * (1 - p["a"] * q**k)
        * (1 - p["b"] * q**k)
        * (1 - q**k),
        kn_fn=lambda p, q, n: 1
        / (qpoch(q * p["a"], q, n) * qpoch(q * p["b"], q, n)),
        named_fn=lambda p, q, n, x: qhyper_sum(
            (q ** (-n), Fraction(0), x), (q * p["a"], q * p["b"]), q, q, n
        ),
    )
)

_register(
    FamilySpec(
        key="3d",
        name="little q-Jacobi",
        kls_section=12,
        node_label="3d",
        params=(_any("a"), _nonzero("b")),
        defaults={"a": Fraction(1, 4), "b": Fraction(1, 3)},
        newton_form="v_k(x) = (-b)^-k q^{-k(k+1)/2} (qbx; q)_k",
        positivity="0 < a < 1/q, b < 1/q",
        node_fn=lambda p, q, k: q ** (-k - 1) / p["b"],
        eigen_fn=lambda p, q, k: (1 - q ** (-k)) * (-1 + q ** (k + 1) * p["a"] * p["b"]),
        lowering_fn=lambda p, q, k: (1 - q ** (-k)) * (1 - q ** (-k) / p["b"]),
        kn_fn=lambda p, q, n: _sign(n)
        * q ** (-_halfsq(n))
        * qpoch(p["a"] * p["b"] * q ** (n + 1), q, n)
        / qpoch(p["a"] * q, q, n),
        named_fn=lambda p, q, n, x: (-q * p["b"]) ** (-n)
        * q ** (-_halfsq(n))
        * qpoch(q * p["b"], q, n)
        / qpoch(q * p["a"], q, n)
        * qhyper_sum(
            (q ** (-n), p["a"] * p["b"] * q ** (n + 1), q * p["b"] * x),
            (q * p["b"], Fraction(0)),
            q,
            q,
            n,
        ),
    )
)

_register(
    FamilySpec(
        key="3e",
        name="little q-Jacobi",
        kls_section=12,
        node_label="3e",
        params=(_any("a"), _any("b")),
        defaults={"a": Fraction(1, 4), "b": Fraction(1, 3)},
        newton_form="v_k(x) = x^k",
        positivity="0 < a < 1/q, b < 1/q",
        node_fn=lambda p, q, k: Fraction(0),
        eigen_fn=lambda p, q, k: (1 - q ** (-k)) * (-1 + q ** (k + 1) * p["a"] * p["b"]),
        lowering_fn=lambda p, q, k: (1 - q ** (-k)) * (1 - p["a"] * q**k),
        kn_fn=lambda p, q, n: _sign(n)
        * q ** (-_halfsq(n))
        * qpoch(p["a"] * p["b"] * q ** (n + 1), q, n)
        / qpoch(p["a"] * q, q, n),
        named_fn=lambda p, q, n, x: little_qjacobi_value(p, q, n, x),
    )
)

_register(
    FamilySpec(
        key="4a",
        name="continuous big q-Hermite",
        kls_section=18,
        node_label="4a",
        params=(_nonzero("a"),),
        defaults={"a": Fraction(2)},
        newton_form="v_k(x) = prod_{j<k} (x - a q^j - q^-j/a)",
        positivity="a real",
        node_fn=_sym_node,
        eigen_fn=_hk_qinv_minus_one,
        lowering_fn=lambda p, q, k: q ** (1 - 2 * k) / p["a"] * (1 - q**k),
        kn_fn=lambda p, q, n: Fraction(1),
        named_fn=lambda p, q, n, x: _z_series(n, q, x, p["a"], (), ())
        / p["a"] ** n,
    )
)

_register(
    FamilySpec(
        key="4b",
        name="shifted-factorial polynomials x^n (b/x;q)_n",
        kls_section=None,
        node_label="4b",
        params=(_any("b"),),
        defaults={"b": Fraction(1, 3)},
        newton_form="v_k(x) = (-1)^k q^{k(k-1)/2} (x; q)_k",
        positivity="none recorded",
        node_fn=lambda p, q, k: q ** (-k),
        eigen_fn=_hk_qinv_minus_one,
        lowering_fn=lambda p, q, k: (1 - q ** (-k)) * (p["b"] - q ** (1 - k)),
        kn_fn=lambda p, q, n: Fraction(1),
        named_fn=lambda p, q, n, x: qpoch(p["b"], q, n)
        * qhyper_sum((q ** (-n), x), (p["b"],), q, q, n),
    )
)

_register(
    FamilySpec(
        key="4c",
        name="Al-Salam-Carlitz I",
        kls_section=24,
        node_label="4c",
        params=(_nonzero("a"),),
        defaults={"a": Fraction(-1)},
        newton_form="v_k(x) = x^k (1/x; q)_k",
        positivity="a < 0",
        node_fn=lambda p, q, k: q**k,
        eigen_fn=_hk_qinv_minus_one,
        lowering_fn=lambda p, q, k: p["a"] * (1 - q ** (-k)),
        kn_fn=lambda p, q, n: Fraction(1),
        named_fn=lambda p, q, n, x: (-p["a"]) ** n
        * q ** (_halfsq(n))
        * _inverse_arg_series(
            n, q, x, node_scale=Fraction(1), weight=q / p["a"]
        ),
    )
)

_register(
    FamilySpec(
        key="4d",
        name="little q-Laguerre",
        kls_section=20,
        node_label="4d",
        params=(_nonzero("a"),),
        defaults={"a": Fraction(1, 3)},
        newton_form="v_k(x) = x^k (1/x; q)_k",
        positivity="0 < aq < 1",
        node_fn=lambda p, q, k: q**k,
        eigen_fn=lambda p, q, k: 1 - q ** (-k),
        lowering_fn=lambda p, q, k: p["a"] * (q**k - 1),
        kn_fn=lambda p, q, n: _sign(n) * q ** (-_halfsq(n)) / qpoch(p["a"] * q, q, n),
        named_fn=lambda p, q, n, x: _sign(n)
        * q ** (n * (n + 1) // 2)
        * p["a"] ** n
        / qpoch(q * p["a"], q, n)
        * _inverse_arg_series(
            n, q, x, node_scale=Fraction(1), weight=1 / p["a"], correction=-1
        ),
    )
)

_register(
    FamilySpec(
        key="4e",
        name="little q-Laguerre",
        kls_section=20,
        node_label="4e",
        params=(_any("a"),),
        defaults={"a": Fraction(1, 3)},
        newton_form="v_k(x) = x^k",
        positivity="0 < aq < 1",
        node_fn=lambda p, q, k: Fraction(0),
        eigen_fn=lambda p, q, k: 1 - q ** (-k),
        lowering_fn=lambda p, q, k: q ** (-k) * (1 - p["a"] * q**k) * (1 - q**k),
        kn_fn=lambda p, q, n: _sign(n) * q ** (-_halfsq(n)) / qpoch(p["a"] * q, q, n),
        named_fn=lambda p, q, n, x: qhyper_sum(
            (q ** (-n), Fraction(0)), (q * p["a"],), q, q * x, n
        ),
    )
)

_register(
    FamilySpec(
        key="4f'",
        name="q-Bessel",
        kls_section=22,
        node_label="4f'",
        params=(_nonzero("a"),),
        defaults={"a": Fraction(1)},
        newton_form="v_k(x) = x^k (1/x; q)_k",
        positivity="a > 0",
        node_fn=lambda p, q, k: q**k,
        eigen_fn=lambda p, q, k: (1 - q ** (-k)) * (1 + p["a"] * q**k),
        lowering_fn=lambda p, q, k: p["a"] * q ** (k - 1) * (q**k - 1),
        kn_fn=lambda p, q, n: _sign(n)
        * q ** (-_halfsq(n))
        * qpoch(-p["a"] * q**n, q, n),
        named_fn=lambda p, q, n, x: qbessel_value_inverse_rep(p, q, n, x),
    )
)

_register(
    FamilySpec(
        key="4g",
        name="q-Bessel",
        kls_section=22,
        node_label="4g",
        params=(_any("a"),),
        defaults={"a": Fraction(1)},
        newton_form="v_k(x) = x^k",
        positivity="a > 0",
        node_fn=lambda p, q, k: Fraction(0),
        eigen_fn=lambda p, q, k: (1 - q ** (-k)) * (1 + p["a"] * q**k),
        lowering_fn=lambda p, q, k: q ** (-k) - 1,
        kn_fn=lambda p, q, n: _sign(n)
        * q ** (-_halfsq(n))
        * qpoch(-p["a"] * q**n, q, n),
        named_fn=lambda p, q, n, x: qbessel_value(p, q, n, x),
    )
)

_register(
    FamilySpec(
        key="5a",
        name="monomials x^n",
        kls_section=None,
        node_label="5a",
        params=(),
        defaults={},
        newton_form="v_k(x) = (-1)^k q^{k(k-1)/2} (x; q)_k",
        positivity="none recorded",
        node_fn=lambda p, q, k: q ** (-k),
        eigen_fn=_hk_qinv_minus_one,
        lowering_fn=lambda p, q, k: q ** (1 - 2 * k) * (1 - q**k),
        kn_fn=lambda p, q, n: Fraction(1),
        named_fn=lambda p, q, n, x: qhyper_sum(
            (q ** (-n), x), (Fraction(0),), q, q, n
        ),
    )
)

_register(
    FamilySpec(
        key="5b",
        name="shifted-factorial polynomials x^n (1/x;q)_n",
        kls_section=None,
        node_label="5b",
        params=(),
        defaults={},
        newton_form="v_k(x) = x^k",
        positivity="none recorded",
        node_fn=lambda p, q, k: Fraction(0),
        eigen_fn=_hk_qinv_minus_one,
        lowering_fn=lambda p, q, k: 1 - q ** (-k),
        kn_fn=lambda p, q, n: _sign(n) * q ** (-_halfsq(n)),
        named_fn=lambda p, q, n, x: qhyper_sum((q ** (-n),), (), q, q * x, n),
    )
)

_register(
    FamilySpec(
        key="5c'",
        name="Stieltjes-Wigert",
        kls_section=27,
        node_label="5c'",
        params=(),
        defaults={},
        newton_form="v_k(x) = x^k",
        positivity="none recorded",
        node_fn=lambda p, q, k: Fraction(0),
        eigen_fn=lambda p, q, k: q**k - 1,
        lowering_fn=lambda p, q, k: q ** (-k) - 1,
        kn_fn=lambda p, q, n: _sign(n) * q ** (n * n) / qpoch(q, q, n),
        named_fn=lambda p, q, n, x: qhyper_sum(
            (q ** (-n),), (Fraction(0),), q, -(q ** (n + 1)) * x, n
        )
        / qpoch(q, q, n),
    )
)


def coerce_params(spec: FamilySpec, params: Mapping | None) -> dict[str, Fraction]:
    merged = dict(spec.defaults)
    if params:
        for name, value in params.items():
            if all(ps.name != name for ps in spec.params):
                raise InadmissibleParams(
                    f"{spec.key}: unknown parameter {name!r}"
                )
            merged[name] = rational(value)
    for ps in spec.params:
        if ps.name not in merged:
            raise InadmissibleParams(f"{spec.key}: missing parameter {ps.name!r}")
        if not ps.check(merged[ps.name]):
            raise InadmissibleParams(
                f"{spec.key}: parameter {ps.name} violates {ps.constraint}"
            )
    return merged


def instantiate(
    family: str, params: Mapping | None = None, q: Fraction | int | str | None = None
) -> ParameterVector:
    """Solve the Laurent coefficients reproducing the family's sequences.

    Node and eigenvalue coefficients come from values at k = 0..2, lowering
    coefficients from k = 0..4; the fit is verified against the closed forms
    up to k = 8 before the vector is returned.
    """
    spec = FAMILIES[family]
    q = rational(q) if q is not None else DEFAULT_Q
    if not admissible_q(q):
        raise InadmissibleParams(f"base q = {q} must avoid 0 and +/-1")
    p = coerce_params(spec, params)

    def solve(values: list[Fraction], powers: tuple[int, ...]) -> list[Fraction]:
        rows = [[q ** (e * k) for e in powers] for k in range(len(values))]
        return _solve_linear(rows, values)

    b = solve([spec.node_fn(p, q, k) for k in range(3)], (0, 1, -1))
    a = solve([spec.eigen_fn(p, q, k) for k in range(3)], (0, 1, -1))
    d = solve([spec.lowering_fn(p, q, k) for k in range(5)], (0, 1, -1, 2, -2))
    try:
        pv = ParameterVector(q=q, a=tuple(a), b=tuple(b), d=tuple(d))
    except Exception as exc:
        raise InadmissibleParams(f"{family}: {exc}") from exc
    for k in range(9):
        if (
            pv.node(k) != spec.node_fn(p, q, k)
            or pv.eigenvalue(k) != spec.eigen_fn(p, q, k)
            or pv.lowering(k) != spec.lowering_fn(p, q, k)
        ):
            raise Mismatch(
                f"{family}: solved coefficients disagree with closed forms at k={k}"
            )
    return pv


def hyper_eval(
    family: str,
    params: Mapping | None,
    q: Fraction | int | str | None,
    n: int,
    x: Fraction | int | str,
) -> Fraction:
    """Monic value k_n^{-1} * (named representation) at rational x."""
    spec = FAMILIES[family]
    q = rational(q) if q is not None else DEFAULT_Q
    p = coerce_params(spec, params)
    kn = spec.kn_fn(p, q, n)
    if kn == 0:
        raise DivisionByZero(f"{family}: k_{n} vanishes for these parameters")
    return spec.named_fn(p, q, n, rational(x)) / kn


@dataclass(frozen=True)
class CrosscheckReport:
    family: str
    q: Fraction
    params: dict[str, Fraction]
    n_max: int
    checked_values: int
    pattern_matches: bool

    @property
    def ok(self) -> bool:
        return self.pattern_matches and self.checked_values > 0


def crosscheck(
    family: str,
    params: Mapping | None = None,
    q: Fraction | int | str | None = None,
    n_max: int = 8,
) -> CrosscheckReport:
    """Engine route vs closed form: monic_poly from the instantiated vector
    must equal hyper_eval at n+1 distinct sample points for every n <= n_max,
    and the vector's zero pattern must land on the family's diagram."""
    spec = FAMILIES[family]
    q = rational(q) if q is not None else DEFAULT_Q
    p = coerce_params(spec, params)
    pv = instantiate(family, p, q)
    checked = 0
    for n in range(n_max + 1):
        u = monic_poly(pv, n)
        if u.degree != n or not u.is_monic:
            raise Mismatch(f"{family}: engine polynomial at n={n} is not monic")
        for x in SAMPLE_XS[: n + 1]:
            lhs = u(x)
            rhs = hyper_eval(family, p, q, n, x)
            if lhs != rhs:
                raise Mismatch(
                    f"{family}: n={n}, x={x}: engine {lhs} != closed form {rhs}"
                )
            checked += 1
    pattern_matches = pattern_of(pv) == spec.pattern
    if not pattern_matches:
        raise Mismatch(
            f"{family}: default-parameter pattern {pattern_of(pv).as_string()} "
            f"is not the diagram {spec.pattern.as_string()}"
        )
    return CrosscheckReport(
        family=family,
        q=q,
        params=dict(p),
        n_max=n_max,
        checked_values=checked,
        pattern_matches=pattern_matches,
    )


def instance_for_label(
    label: str, params: Mapping | None = None, q: Fraction | int | str | None = None
) -> ParameterVector:
    """A vector whose pattern sits at the given diagram label, using the
    registry entry directly or the q <-> 1/q image of its partner."""
    if label in FAMILIES:
        return instantiate(label, params, q)
    if label.endswith("'") and label[:-1] in FAMILIES:
        return symmetry.q_invert(instantiate(label[:-1], params, q))
    if label + "'" in FAMILIES:
        return symmetry.q_invert(instantiate(label + "'", params, q))
    raise KeyError(f"no registry entry reaches diagram {label!r}")


def registry_json() -> list[dict]:
    """CLI-facing registry serialization, ordered by diagram then name."""
    from .classifier import label_sort_key

    out = []
    for spec in sorted(
        FAMILIES.values(), key=lambda s: (label_sort_key(s.node_label), s.name)
    ):
        out.append(
            {
                "key": spec.key,
                "name": spec.name,
                "kls_section": spec.kls_section,
                "node_label": spec.node_label,
                "pattern": spec.pattern.as_string(),
                "params": [
                    {"name": ps.name, "constraint": ps.constraint}
                    for ps in spec.params
                ],
                "defaults": {
                    k: format_rational(v) for k, v in spec.defaults.items()
                },
                "newton_form": spec.newton_form,
                "positivity": spec.positivity,
            }
        )
    return out
