import pytest

from sigmagraph.core.pattern import parse_pattern
from sigmagraph.errors import PreconditionError
from sigmagraph.extremal.verification import verify_theorem
from sigmagraph.search.containment import DEFAULT_CONTAINMENT_BUDGET

K3_P3 = parse_pattern("U(K3,P3)").build()


@pytest.mark.parametrize("r, n, certificate, formula, branch", [
    (6, 48, 322, 324, "even"),
    (6, 49, 328, 330, "odd"),
    pytest.param(7, 53, 454, 456, "even", marks=pytest.mark.slow),
])
def test_lower_bound_certificate(r, n, certificate, formula, branch):
    report = verify_theorem(r, n, K3_P3, label="U(K3,P3)")
    assert report.passed
    assert [item.name for item in report.items] == ["template", "formula", "non_containment", "parity"]
    assert report.item("formula").values == {"certificate_sigma": certificate, "formula": formula}
    assert report.item("non_containment").values["contains"] is False
    assert report.item("parity").values["branch"] == branch


@pytest.mark.slow
@pytest.mark.parametrize("r, n, label", [(9, 63, "U(K3,P3)"), (8, 58, "U(C3,C5)")])
def test_larger_certificates_stay_within_budget(r, n, label):
    report = verify_theorem(r, n, parse_pattern(label).build(), label=label)
    assert report.passed
    assert report.item("non_containment").values["nodes"] < DEFAULT_CONTAINMENT_BUDGET


def test_inadmissible_u_is_refused():
    with pytest.raises(PreconditionError, match="C4"):
        verify_theorem(6, 48, parse_pattern("U(C3,C4)").build())


def test_small_n_is_refused():
    with pytest.raises(PreconditionError):
        verify_theorem(6, 47, K3_P3)


def test_report_documents():
    report = verify_theorem(6, 48, K3_P3, label="U(K3,P3)")
    document = report.to_dict()
    assert document["passed"] is True
    assert document["pattern"] == "U(K3,P3)"
    assert len(document["items"]) == 4
    assert all(item["seconds"] >= 0 for item in document["items"])
    text = report.to_text()
    assert text.splitlines()[0] == "verify r=6 n=48 pattern=U(K3,P3)"
    assert "[PASS] formula: certificate_sigma=322 formula=324" in text
    assert text.endswith("result: all checks passed")
    with pytest.raises(KeyError):
        report.item("missing")
