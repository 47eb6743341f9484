import pytest

from lcsq.characters import Partition
from lcsq.verifier import (FAIL, OUT_OF_HYPOTHESIS, PASS, SUITE_SELECTORS,
                           closed_product_suite, domination_series, hilbert_series_suite,
                           ideal_quotient_series, verify_instance, verify_lemmas)


def test_three_generators_third_quotient():
    rep = verify_instance(3, 3, 6)
    assert rep.ok and rep.domination_ok
    assert rep.decomposition.multiplicities == {Partition((2, 1)): 1}
    assert rep.bound_value == 4
    assert rep.lemma_results["b3_three_generators_is_f21"].status == PASS


def test_second_quotient_is_outside_bound_hypothesis():
    rep = verify_instance(2, 2, 6)
    assert rep.bound_value is None
    assert rep.lemma_results["size_bound"].status == OUT_OF_HYPOTHESIS
    assert rep.lemma_results["b2_exact_even_forms"].status == PASS
    assert rep.ok


def test_fourth_quotient_of_two_generators():
    rep = verify_instance(4, 2, 8)
    assert rep.decomposition.multiplicities == {Partition((3, 1)): 1, Partition((3, 2)): 1}
    assert rep.lemma_results["b4_two_generators_diagram_sizes"].status == PASS
    assert rep.bound_value == 9


def test_first_quotient_rejected():
    with pytest.raises(ValueError):
        verify_instance(1, 2, 4)


def test_domination_series_small():
    # O/I for m=2, n=2 times 1 (rank cutoff 0)
    assert domination_series(2, 2, 4) == [1, 4, 7, 10, 13]
    assert ideal_quotient_series(1, 3, 2) == (1, 3, 6)


def test_closed_product_suite():
    for n in (2, 3, 4, 5):
        assert closed_product_suite(n).status == PASS


def test_hilbert_series_suite_reports_the_three_column_gap():
    ok = hilbert_series_suite(2, 3)
    assert ok.status == PASS and ok.details["generators_form_groebner_basis"]
    bad = hilbert_series_suite(3, 2)
    assert bad.status == FAIL
    assert bad.details["first_mismatch"] == 4
    assert bad.details["numerator_degree"] == bad.details["expected_degree"] == 4
    assert not bad.details["generators_form_groebner_basis"]


def test_suite_selection():
    assert list(verify_lemmas(only="3.2")) == ["bracket_rearrangement[m<=5]"]
    assert list(verify_lemmas(n_list=(2,), only="phi_vanishing", samples=5)) == ["phi_vanishing[n=2]"]
    assert set(SUITE_SELECTORS) == {"3.1", "3.2", "3.3", "3.4", "3.5"}
    assert verify_lemmas(only="nonsense") == {}
