"""Limit transitions: exact gap decay plus the embedded exact identities."""

from fractions import Fraction as F

import pytest

from qscheme import limits
from qscheme.classifier import build_graph
from qscheme.errors import ConvergenceFailure
from qscheme.limits import (
    CASES,
    CASE_IDS,
    EXACT_CHECKS,
    GAP_THRESHOLD,
    RATIO_BOUND,
    case_by_id,
    gap,
    verify,
)

EXPECTED_IDS = {
    "2a->3b",
    "2a->3c",
    "3a->4c",
    "3a->4b",
    "2b->3d",
    "2b->3e",
    "3e->4g",
    "3d'->4f'",
    "4a->5a",
    "4e->5b",
}


def test_case_registry():
    assert set(CASE_IDS) == EXPECTED_IDS
    assert case_by_id("4a->5a").target_label == "5a"
    with pytest.raises(KeyError):
        case_by_id("1a->9z")


def test_zero_degree_gap_vanishes():
    case = case_by_id("2a->3b")
    for t in (1, 4, 9):
        assert gap(case, case.eps_at(t), 0) == 0


def test_monomial_limit_gaps_strictly_decrease():
    case = case_by_id("4a->5a")
    for n in range(1, 5):
        gaps = [gap(case, case.eps_at(t), n) for t in range(1, 13)]
        assert all(g > 0 for g in gaps)
        assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))


@pytest.mark.parametrize("case_id", sorted(EXPECTED_IDS))
def test_case_converges(case_id):
    report = verify(case_by_id(case_id), n_max=4, t_max=12)
    assert report.ok
    for trace in report.traces:
        if any(g != 0 for g in trace.gaps):
            assert trace.gaps[-1] < GAP_THRESHOLD
            tail = trace.ratios[len(trace.ratios) // 2 :]
            assert all(r <= RATIO_BOUND for r in tail)


def test_exact_identities_hold():
    for name, check in EXACT_CHECKS.items():
        assert check(), name


def test_report_json_shape():
    report = verify(case_by_id("4e->5b"), n_max=2, t_max=12)
    payload = report.to_json()
    assert payload["case"] == "4e->5b"
    assert payload["pass"] is True
    first = payload["traces"][0]
    assert set(first) == {"case", "n", "gap_trace", "ratios", "pass"}
    assert all(isinstance(g, str) for g in first["gap_trace"])


def test_strict_verification_raises_on_impossible_threshold():
    with pytest.raises(ConvergenceFailure):
        verify(case_by_id("4e->5b"), n_max=2, t_max=3, threshold=F(1, 10**40))


def test_every_limit_is_a_scheme_arrow():
    arrows = build_graph().arrow_labels()
    for case in CASES:
        assert (case.source_label, case.target_label) in arrows, case.id


def test_limit_sources_admissible_along_schedule():
    for case in CASES:
        for t in (1, 6, 12):
            pv = case.source_instance(case.eps_at(t))
            assert pv.h_separation_ok(6)
