"""Exact-arithmetic engine, classifier and CLI for the q-Askey scheme."""

from .qrational import Rational, format_rational, parse_rational, rational
from .qpolynomial import Poly, format_poly, poly, poly_add, poly_divrem, poly_eval, poly_mul
from .qseries import QSeriesParams, qhyper, qhyper_sum, qpoch, qpoch_many
from .core import (
    NewtonExpansion,
    ParameterVector,
    SequenceView,
    UncheckedParameterVector,
    apply_operator,
    dual_normalized_poly,
    duality_check,
    expansion,
    finite_cutoff,
    from_newton_coeffs,
    monic_poly,
    newton_basis,
    normalized_poly,
    perturbed,
    recurrence_check,
    recurrence_coeff0,
    recurrence_coeffs,
    seq_eval,
    to_newton_coeffs,
)
from .symmetry import (
    ChartId,
    ChartPoint,
    GaugeAction,
    apply_gauge,
    canonicalize,
    dualize,
    q_invert,
)
from .classifier import (
    SchemeGraph,
    SchemeNode,
    ZeroPattern,
    arrows_from,
    build_graph,
    emit,
    enumerate_nodes,
    pattern_of,
    validate,
)
from . import catalog, limits

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
