"""Degeneration limits between families, certified in exact arithmetic.

Each case rescales a source family's monic polynomial so that it converges
coefficientwise to the target family's monic polynomial as a parameter
epsilon goes to zero:

    prefactor(eps, n) * u_n^source(scale(eps) * x)  ->  u_n^target(x).

Because both sides are rational in epsilon, the gap (max absolute
difference over a fixed sample set larger than the degree) decays
geometrically; a case passes when the tail ratios stay below a bound and
the final gap beats a hard threshold, both compared as exact rationals.
Identities that hold without any limit (power-basis evaluations and
pairs of representations of one and the same polynomial) are asserted as
exact equalities instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import catalog
from .core import ParameterVector, monic_poly
from .errors import ConvergenceFailure
from .qpolynomial import Poly, product_of_linear
from .qrational import format_rational
from .qseries import qhyper_sum, qpoch

DEFAULT_SAMPLE_XS = (
    Fraction(-2),
    Fraction(-1, 3),
    Fraction(0),
    Fraction(1, 2),
    Fraction(3),
)

RATIO_BOUND = Fraction(3, 4)
GAP_THRESHOLD = Fraction(1, 10**9)

_Q = Fraction(1, 2)
_NONZERO_XS = (Fraction(3), Fraction(-2), Fraction(1, 5), Fraction(7, 2), Fraction(-1, 3))


# -- exact identities embedded in the limit formulas ---------------------------


def check_power_basis_identity(n_max: int = 8) -> bool:
    """sum form of the monomials: the terminating 2-over-1 series with a
    vanishing lower parameter collapses to x**n."""
    q = _Q
    for n in range(n_max + 1):
        for x in _NONZERO_XS:
            value = qhyper_sum((q**-n, x), (Fraction(0),), q, q, n)
            if value != x**n:
                return False
    return True


def check_shifted_product_identity(n_max: int = 6, b: Fraction = Fraction(1, 3)) -> bool:
    """(b;q)_n * series == prod_{j<n} (x - b q^j), exactly."""
    q = _Q
    for n in range(n_max + 1):
        expected = product_of_linear(b * q**j for j in range(n))
        for x in _NONZERO_XS:
            value = qpoch(b, q, n) * qhyper_sum((q**-n, x), (b,), q, q, n)
            if value != expected(x):
                return False
    return True


def check_descending_product_identity(n_max: int = 6) -> bool:
    """(-1)^n q^{n(n-1)/2} * series == prod_{j<n} (x - q^j), exactly."""
    q = _Q
    for n in range(n_max + 1):
        sign = -1 if n % 2 else 1
        expected = product_of_linear(q**j for j in range(n))
        for x in _NONZERO_XS:
            value = sign * q ** (n * (n - 1) // 2) * qhyper_sum((q**-n,), (), q, q * x, n)
            if value != expected(x):
                return False
    return True


def check_cdqhahn_rep_pair(n_max: int = 6) -> bool:
    """The two anchored series of continuous dual q-Hahn agree."""
    q = _Q
    a, b, c = Fraction(2), Fraction(1, 3), Fraction(1, 5)
    for n in range(n_max + 1):
        for x in _NONZERO_XS:
            if catalog.cdqhahn_value(q, n, x, a, b, c) != catalog.cdqhahn_value(
                q, n, x, b, a, c
            ):
                return False
    return True


def check_big_qlaguerre_rep_pair(n_max: int = 6) -> bool:
    """The inverse-argument and power-basis series of big q-Laguerre agree."""
    params = {"a": Fraction(1, 3), "b": Fraction(-1, 2)}
    for n in range(n_max + 1):
        for x in _NONZERO_XS:
            if catalog.hyper_eval("3b", params, _Q, n, x) != catalog.hyper_eval(
                "3c", params, _Q, n, x
            ):
                return False
    return True


def check_little_qjacobi_rep_pair(n_max: int = 6) -> bool:
    params = {"a": Fraction(1, 4), "b": Fraction(1, 3)}
    for n in range(n_max + 1):
        for x in _NONZERO_XS:
            lhs = catalog.little_qjacobi_value(params, _Q, n, x)
            rhs = catalog.little_qjacobi_value_inverse_rep(params, _Q, n, x)
            if lhs != rhs:
                return False
    return True


def check_qbessel_rep_pair(n_max: int = 6) -> bool:
    params = {"a": Fraction(1)}
    for n in range(n_max + 1):
        for x in _NONZERO_XS:
            lhs = catalog.qbessel_value(params, _Q, n, x)
            rhs = catalog.qbessel_value_inverse_rep(params, _Q, n, x)
            if lhs != rhs:
                return False
    return True


EXACT_CHECKS: dict[str, Callable[[], bool]] = {
    "power_basis_identity": check_power_basis_identity,
    "shifted_product_identity": check_shifted_product_identity,
    "descending_product_identity": check_descending_product_identity,
    "cdqhahn_rep_pair": check_cdqhahn_rep_pair,
    "big_qlaguerre_rep_pair": check_big_qlaguerre_rep_pair,
    "little_qjacobi_rep_pair": check_little_qjacobi_rep_pair,
    "qbessel_rep_pair": check_qbessel_rep_pair,
}


# -- limit cases ---------------------------------------------------------------


@dataclass(frozen=True)
class LimitCase:
    id: str
    description: str
    source_label: str
    target_label: str
    source_instance: Callable[[Fraction], ParameterVector]
    target_instance: Callable[[], ParameterVector]
    arg_scale: Callable[[Fraction], Fraction]
    prefactor: Callable[[Fraction, int], Fraction]
    eps0: Fraction
    eps_ratio: Fraction
    exact_checks: tuple[str, ...] = ()

    def eps_at(self, t: int) -> Fraction:
        return self.eps0 * self.eps_ratio**t


def gap(
    case: LimitCase,
    epsilon: Fraction,
    n: int,
    sample_xs: Sequence[Fraction] = DEFAULT_SAMPLE_XS,
) -> Fraction:
    """Max over the samples of |prefactor * source(scale*x) - target(x)|."""
    source = monic_poly(case.source_instance(epsilon), n)
    lhs = source.compose_affine(case.arg_scale(epsilon)) * case.prefactor(epsilon, n)
    diff = lhs - monic_poly(case.target_instance(), n)
    return max(abs(diff(x)) for x in sample_xs)


@dataclass(frozen=True)
class GapTrace:
    case_id: str
    n: int
    gaps: tuple[Fraction, ...]
    ratios: tuple[Fraction, ...]
    converged: bool

    def to_json(self) -> dict:
        return {
            "case": self.case_id,
            "n": self.n,
            "gap_trace": [format_rational(g) for g in self.gaps],
            "ratios": [format_rational(r) for r in self.ratios],
            "pass": self.converged,
        }


@dataclass(frozen=True)
class LimitReport:
    case_id: str
    traces: tuple[GapTrace, ...]
    exact_checks: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(t.converged for t in self.traces) and all(
            passed for _, passed in self.exact_checks
        )

    def to_json(self) -> dict:
        return {
            "case": self.case_id,
            "traces": [t.to_json() for t in self.traces],
            "exact_checks": [
                {"name": name, "pass": passed} for name, passed in self.exact_checks
            ],
            "pass": self.ok,
        }


def _trace_converged(
    gaps: Sequence[Fraction],
    ratios: Sequence[Fraction],
    ratio_bound: Fraction,
    threshold: Fraction,
) -> bool:
    if all(g == 0 for g in gaps):
        return True
    if gaps[-1] >= threshold:
        return False
    if not ratios:
        return False
    tail = ratios[len(ratios) // 2 :]
    return all(r <= ratio_bound for r in tail)


def verify(
    case: LimitCase,
    n_max: int = 4,
    t_max: int = 12,
    ratio_bound: Fraction = RATIO_BOUND,
    threshold: Fraction = GAP_THRESHOLD,
    sample_xs: Sequence[Fraction] = DEFAULT_SAMPLE_XS,
    strict: bool = True,
) -> LimitReport:
    """Gap decay certificate over the epsilon schedule eps0 * ratio**t,
    t = 1..t_max, plus the case's exact identities."""
    traces = []
    for n in range(n_max + 1):
        gaps = tuple(gap(case, case.eps_at(t), n, sample_xs) for t in range(1, t_max + 1))
        ratios = tuple(
            gaps[i + 1] / gaps[i]
            for i in range(len(gaps) - 1)
            if gaps[i] != 0 and gaps[i + 1] != 0
        )
        traces.append(
            GapTrace(
                case_id=case.id,
                n=n,
                gaps=gaps,
                ratios=ratios,
                converged=_trace_converged(gaps, ratios, ratio_bound, threshold),
            )
        )
    checks = tuple((name, EXACT_CHECKS[name]()) for name in case.exact_checks)
    report = LimitReport(case_id=case.id, traces=tuple(traces), exact_checks=checks)
    if strict and not report.ok:
        bad = [t for t in report.traces if not t.converged]
        trace_strings = [
            f"n={t.n}: " + ", ".join(format_rational(g) for g in t.gaps) for t in bad
        ]
        failed_checks = [name for name, passed in report.exact_checks if not passed]
        detail = "gap decay failed" if bad else "exact identity failed"
        if failed_checks:
            detail += f" ({', '.join(failed_checks)})"
        raise ConvergenceFailure(case.id, detail, trace_strings)
    return report


def _build_cases() -> tuple[LimitCase, ...]:
    q = _Q
    half = Fraction(1, 2)

    def f(num, den=1):
        return Fraction(num, den)

    cases = []

    # continuous dual q-Hahn -> big q-Laguerre: shrink the node anchor while
    # the two companion parameters grow reciprocally.
    bt, ct = f(1, 3), f(-1, 2)

    def cdqh_source(eps):
        return catalog.instantiate(
            "2a", {"a": eps, "b": q * bt / eps, "c": q * ct / eps}, q
        )

    for target in ("3b", "3c"):
        cases.append(
            LimitCase(
                id=f"2a->{target}",
                description="continuous dual q-Hahn -> big q-Laguerre",
                source_label="2a",
                target_label=target,
                source_instance=cdqh_source,
                target_instance=lambda target=target: catalog.instantiate(
                    target, {"a": bt, "b": ct}, q
                ),
                arg_scale=lambda eps: 1 / eps,
                prefactor=lambda eps, n: eps**n,
                eps0=f(1, 2**16),
                eps_ratio=half,
                exact_checks=(
                    ("cdqhahn_rep_pair", "big_qlaguerre_rep_pair")
                    if target == "3c"
                    else ()
                ),
            )
        )

    # Al-Salam-Chihara -> Al-Salam-Carlitz I: both parameters grow, the
    # polynomial is viewed at a magnified argument.
    b_ac = f(-1)
    cases.append(
        LimitCase(
            id="3a->4c",
            description="Al-Salam-Chihara -> Al-Salam-Carlitz I",
            source_label="3a",
            target_label="4c",
            source_instance=lambda eps: catalog.instantiate(
                "3a", {"a": 1 / eps, "b": b_ac / eps}, q
            ),
            target_instance=lambda: catalog.instantiate("4c", {"a": b_ac}, q),
            arg_scale=lambda eps: 1 / eps,
            prefactor=lambda eps, n: eps**n,
            eps0=f(1, 2**16),
            eps_ratio=half,
        )
    )

    # Al-Salam-Chihara -> shifted-factorial family.
    b_sf = f(1, 3)
    cases.append(
        LimitCase(
            id="3a->4b",
            description="Al-Salam-Chihara -> shifted-factorial polynomials",
            source_label="3a",
            target_label="4b",
            source_instance=lambda eps: catalog.instantiate(
                "3a", {"a": eps, "b": b_sf / eps}, q
            ),
            target_instance=lambda: catalog.instantiate("4b", {"b": b_sf}, q),
            arg_scale=lambda eps: 1 / eps,
            prefactor=lambda eps, n: eps**n,
            eps0=f(1, 2**16),
            eps_ratio=half,
            exact_checks=("shifted_product_identity",),
        )
    )

    # big q-Jacobi -> little q-Jacobi: the fourth (translation) parameter of
    # the four-parameter normalization shrinks; absorbed into the third slot.
    a_bj, b_bj = f(1, 3), f(1, 4)

    def bigqj_source(eps):
        return catalog.instantiate("2b", {"a": a_bj, "b": b_bj, "c": -a_bj * eps}, q)

    for target in ("3d", "3e"):
        cases.append(
            LimitCase(
                id=f"2b->{target}",
                description="big q-Jacobi -> little q-Jacobi",
                source_label="2b",
                target_label=target,
                source_instance=bigqj_source,
                target_instance=lambda target=target: catalog.instantiate(
                    target, {"a": b_bj, "b": a_bj}, q
                ),
                arg_scale=lambda eps: q * a_bj,
                prefactor=lambda eps, n: (q * a_bj) ** (-n),
                eps0=f(1, 2**24),
                eps_ratio=half,
            )
        )

    # little q-Jacobi -> q-Bessel: second parameter to -infinity with the
    # product of both parameters held fixed.
    a_qb = f(1)

    def littleqj_source_power(eps):
        return catalog.instantiate("3e", {"a": a_qb * eps / q, "b": -1 / eps}, q)

    def littleqj_source_inverse(eps):
        return catalog.instantiate("3d", {"a": a_qb * eps / q, "b": -1 / eps}, q)

    cases.append(
        LimitCase(
            id="3e->4g",
            description="little q-Jacobi -> q-Bessel",
            source_label="3e",
            target_label="4g",
            source_instance=littleqj_source_power,
            target_instance=lambda: catalog.instantiate("4g", {"a": a_qb}, q),
            arg_scale=lambda eps: Fraction(1),
            prefactor=lambda eps, n: Fraction(1),
            eps0=f(1, 2**24),
            eps_ratio=half,
        )
    )
    cases.append(
        LimitCase(
            id="3d'->4f'",
            description="little q-Jacobi -> q-Bessel (inverse-argument forms)",
            source_label="3d'",
            target_label="4f'",
            source_instance=littleqj_source_inverse,
            target_instance=lambda: catalog.instantiate("4f'", {"a": a_qb}, q),
            arg_scale=lambda eps: Fraction(1),
            prefactor=lambda eps, n: Fraction(1),
            eps0=f(1, 2**24),
            eps_ratio=half,
            exact_checks=("little_qjacobi_rep_pair", "qbessel_rep_pair"),
        )
    )

    # continuous big q-Hermite -> monomials.
    cases.append(
        LimitCase(
            id="4a->5a",
            description="continuous big q-Hermite -> monomials",
            source_label="4a",
            target_label="5a",
            source_instance=lambda eps: catalog.instantiate("4a", {"a": eps}, q),
            target_instance=lambda: catalog.instantiate("5a", {}, q),
            arg_scale=lambda eps: 1 / eps,
            prefactor=lambda eps, n: eps**n,
            eps0=f(1, 2**16),
            eps_ratio=half,
            exact_checks=("power_basis_identity",),
        )
    )

    # little q-Laguerre -> descending shifted-factorial family.
    cases.append(
        LimitCase(
            id="4e->5b",
            description="little q-Laguerre -> shifted-factorial polynomials",
            source_label="4e",
            target_label="5b",
            source_instance=lambda eps: catalog.instantiate("4e", {"a": eps}, q),
            target_instance=lambda: catalog.instantiate("5b", {}, q),
            arg_scale=lambda eps: Fraction(1),
            prefactor=lambda eps, n: Fraction(1),
            eps0=f(1, 2**24),
            eps_ratio=half,
            exact_checks=("descending_product_identity",),
        )
    )

    return tuple(cases)


CASES: tuple[LimitCase, ...] = _build_cases()
CASE_IDS: tuple[str, ...] = tuple(c.id for c in CASES)


def case_by_id(case_id: str) -> LimitCase:
    for case in CASES:
        if case.id == case_id:
            return case
    raise KeyError(case_id)
