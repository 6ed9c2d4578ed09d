import pytest

from sigmagraph.core.pattern import Complete, Cycle, SingleVertex, Union
from sigmagraph.core.sequence import is_graphical
from sigmagraph.errors import PreconditionError, SearchLimitError
from sigmagraph.extremal.formulas import FormulaFamily, FormulaTag, closed_form_sigma, forcible_k3_sigma
from sigmagraph.extremal.sigma import sigma_bruteforce, sigma_forcible_bruteforce
from sigmagraph.search.potential import is_potentially

TWO_K2 = Union((Complete(2), Complete(2)))


def check_certificate(result, pattern):
    certificate = result.certificate
    assert certificate is not None
    assert is_graphical(certificate)
    assert is_potentially(certificate, pattern) is None
    assert result.value == certificate.sigma + 2


@pytest.mark.parametrize("n", [4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_four_cycle(n):
    result = sigma_bruteforce(Cycle(4), n)
    assert result.value == closed_form_sigma(FormulaFamily(FormulaTag.C4), n)
    check_certificate(result, Cycle(4))


def test_four_cycle_values_and_certificate():
    assert [sigma_bruteforce(Cycle(4), n).value for n in (4, 5, 6)] == [10, 14, 16]
    assert sigma_bruteforce(Cycle(4), 4).certificate.terms == (3, 2, 2, 1)


@pytest.mark.parametrize("n, value", [(4, 8), (5, 10), (6, 12)])
def test_two_disjoint_edges(n, value):
    result = sigma_bruteforce(TWO_K2, n)
    assert result.value == value == closed_form_sigma(FormulaFamily(FormulaTag.P_MATCHING, 2), n)
    check_certificate(result, TWO_K2)
    if n == 4:
        assert result.certificate.terms == (3, 1, 1, 1)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_triangle_without_zero_terms(n):
    result = sigma_bruteforce(Complete(3), n, allow_zeros=False)
    assert result.value == 2 * n == closed_form_sigma(FormulaFamily(FormulaTag.EJL_LOWER, 3), n)
    assert result.certificate.terms == (n - 1,) + (1,) * (n - 1)
    assert not result.allow_zeros


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_triangle_with_zero_terms(n):
    with_zeros = sigma_bruteforce(Complete(3), n)
    without = sigma_bruteforce(Complete(3), n, allow_zeros=False)
    assert with_zeros.value == without.value == 2 * n
    check_certificate(with_zeros, Complete(3))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_forcible_triangle(n):
    result = sigma_forcible_bruteforce(Complete(3), n)
    assert result.value == forcible_k3_sigma(n)


def test_empty_certificate():
    result = sigma_bruteforce(SingleVertex(), 3)
    assert result.certificate is None
    assert result.value == 0
    assert sigma_bruteforce(SingleVertex(), 3, allow_zeros=False).value == 4


def test_edge_threshold():
    result = sigma_bruteforce(Complete(2), 3)
    assert result.value == 2
    assert result.certificate.terms == (0, 0, 0)


def test_refusals():
    with pytest.raises(SearchLimitError):
        sigma_bruteforce(Complete(3), 9)
    with pytest.raises(PreconditionError):
        sigma_bruteforce(Complete(5), 4)


def test_worker_pool_agrees():
    serial = sigma_bruteforce(Cycle(4), 5)
    pooled = sigma_bruteforce(Cycle(4), 5, threads=2)
    assert pooled.value == serial.value
    assert pooled.certificate == serial.certificate


def test_to_dict():
    document = sigma_bruteforce(TWO_K2, 4).to_dict()
    assert document["value"] == 8
    assert document["certificate_sigma"] == 6
    assert document["allow_zeros"] is True
    assert document["checked"] >= 1
