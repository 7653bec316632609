import json

import pytest

from permlab.errors import BudgetError, DomainError
from permlab.verify import CHECKS, VerificationReport, list_checks, run_check

ALL_CHECKS = [
    "closed_form", "recurrence_b", "recurrence_p", "lemma21", "lemma22",
    "thm23_bijection", "x_lambda_identity", "phi_bijection", "toeplitz_B",
    "toeplitz_P", "symmetry_P", "T_roundtrip", "conj_spiro", "conj_refined",
    "prop41", "lemma42", "prop43_words", "eq_bnd_pnd",
]


def test_catalog_is_fixed():
    listed = list_checks()
    assert [name for name, _, _ in listed] == ALL_CHECKS
    assert len(listed) == 18
    defaults = {name: default for name, _, default in listed}
    assert defaults["conj_spiro"] == 9
    assert defaults["thm23_bijection"] == 8
    assert all(desc for _, desc, _ in listed)


def test_unknown_check():
    with pytest.raises(DomainError):
        run_check("lemma99")


def test_budget_errors():
    with pytest.raises(BudgetError):
        run_check("toeplitz_B", max_n=11)
    with pytest.raises(BudgetError):
        run_check("lemma21", max_n=10)
    with pytest.raises(DomainError):
        run_check("thm23_bijection", max_n=2)


def test_budget_override_allows_higher_max_n():
    # cap for lemma22 is 8; the override admits it explicitly
    report = run_check("lemma22", max_n=8, budget_override=8)
    assert report.status == "pass"


def test_every_check_passes_at_small_budget():
    expected_status = {"prop43_words": "fail"}
    for name, _, _ in list_checks():
        small = max(CHECKS[name].min_n, 5)
        report = run_check(name, max_n=small)
        assert report.cells_checked > 0, name
        assert report.status == expected_status.get(name, "pass"), (name, report.counterexamples)
        assert (report.status == "pass") == (not report.counterexamples)


def test_reports_are_deterministic():
    a = run_check("conj_refined", max_n=6)
    b = run_check("conj_refined", max_n=6)
    assert (a.check, a.max_n, a.cells_checked, a.status, a.counterexamples) == \
        (b.check, b.max_n, b.cells_checked, b.status, b.counterexamples)


def test_report_json_schema():
    report = run_check("toeplitz_B", max_n=5)
    obj = report.to_json_obj()
    assert set(obj) == {"check", "max_n", "cells_checked", "status",
                        "counterexamples", "wall_time_ms"}
    json.dumps(obj)  # serializable
    assert obj["status"] == "pass"
    assert obj["cells_checked"] == report.cells_checked


def test_counterexamples_carry_params_lhs_rhs():
    # the word-pair reduction equalities genuinely fail from n=5 up
    report = run_check("prop43_words", max_n=6)
    assert report.status == "fail"
    for ce in report.counterexamples:
        assert set(ce) == {"params", "lhs", "rhs"}
        assert ce["lhs"] != ce["rhs"]
    cells = {(ce["params"]["n"], ce["params"]["d"]) for ce in report.counterexamples}
    assert cells == {(5, 2), (6, 2)}


def test_fail_report_construction_direct():
    report = VerificationReport(
        check="demo", max_n=4, cells_checked=1, status="fail",
        counterexamples=({"params": {"n": 4}, "lhs": 1, "rhs": 2},),
        wall_time_ms=0.1,
    )
    assert report.to_json_obj()["counterexamples"][0]["lhs"] == 1
