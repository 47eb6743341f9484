"""Acceptance criteria, each recorded as PASS/FAIL lines in the terminal summary."""

from functools import lru_cache

import pytest

from lcsq import characters as ch
from lcsq.characters import Partition
from lcsq.exact_linalg import DEFAULT_PRIME
from lcsq.lcs_engine import b_character, bbar1_character, build_lcs_table
from lcsq.verifier import (DEFAULT_INSTANCES, LEMMA_GB_INSTANCES, domination_series,
                           hilbert_series_suite, phi_vanishing_suite, rearrangement_suite,
                           verify_instance, vector_field_suite)

C1 = "criterion 1: B_3(A_3) is F(2,1,0)"
C2 = "criterion 2: diagram size bound"
C3 = "criterion 3: B_2 is exact even forms"
C4 = "criterion 4: reduced B_1 is even forms mod exact"
C5 = "criterion 5: phi kills second-order column differences"
C6 = "criterion 6: bracket rearrangement certificates"
C7 = "criterion 7: ideal stable under vector fields"
C8 = "criterion 8: Hilbert series of O/I"
C9 = "criterion 9: domination by O/I times truncated exterior algebra"
C10 = "criterion 10: pipeline agrees with dense oracle"
PRIME = "prime-field mode agrees with rational mode"


@lru_cache(maxsize=None)
def table(n: int, m_max: int, deg_max: int, modulus=None):
    return build_lcs_table(n, m_max, deg_max, modulus)


@lru_cache(maxsize=None)
def report(m: int, n: int, deg_max: int):
    return verify_instance(m, n, deg_max)


def _chi(m: int, n: int, deg_max: int) -> ch.Character:
    return ch.from_counts(b_character(table(n, m, deg_max), m).coefficients, n, deg_max)


def _ids(instances):
    return [",".join(map(str, t)) for t in instances]


def test_criterion_1_b3_of_three_generators(criterion):
    chi = _chi(3, 3, 7)
    target = ch.char_tensor_field(Partition((2, 1, 0)), 3, 7)
    dec = ch.decompose(chi, 7)
    same_char = chi == target
    exact = dec.multiplicities == {Partition((2, 1)): 1} and dec.remainder.is_zero()
    criterion(C1, "m=3,n=3,deg<=7", same_char and exact,
              f"character match={same_char}, decomposition={dict(dec.multiplicities)}")


@pytest.mark.parametrize("m,n,deg_max,limit", [(3, 2, 8, 4), (3, 3, 7, 4), (4, 2, 9, 9)],
                         ids=["3,2", "3,3", "4,2"])
def test_criterion_2_size_bound(criterion, m, n, deg_max, limit):
    dec = report(m, n, deg_max).decomposition
    sizes = sorted(D.size for D in dec.multiplicities)
    ok = ch.bound(m, n) == limit and dec.remainder.is_zero() and all(s <= limit for s in sizes)
    criterion(C2, f"m={m},n={n}", ok, f"sizes={sizes}, bound={limit}")


def test_criterion_3_b2_structure(criterion):
    dims = b_character(table(2, 2, 8), 2).total_series()
    two = all(dims[l] == l - 1 for l in range(2, 9))
    three = _chi(2, 3, 7) == ch.exact_even_positive_char(3, 7)
    criterion(C3, "n=2 dims l-1, n=3 character", two and three, f"n=2 dims={dims}")


def test_criterion_4_reduced_b1(criterion):
    chi = ch.from_counts(bbar1_character(2, 8).coefficients, 2, 8)
    criterion(C4, "n=2,deg<=8", chi == ch.even_mod_exact_char(2, 8))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_criterion_5_phi_identities(criterion, n):
    res = phi_vanishing_suite(n, samples=100, seed=0)
    criterion(C5, f"n={n}", not res.failed,
              f"{res.details['samples']} pairs, {res.details['instances']} (i,j) checks")


def test_criterion_6_rearrangement(criterion):
    res = rearrangement_suite(5)
    criterion(C6, "m<=5", not res.failed, f"{res.details['certificates']} certificates")


@pytest.mark.parametrize("m,n", LEMMA_GB_INSTANCES, ids=_ids(LEMMA_GB_INSTANCES))
def test_criterion_7_vector_field_stability(criterion, m, n):
    res = vector_field_suite(m, n, max_field_degree=3)
    criterion(C7, f"m={m},n={n}", not res.failed, f"{res.details.get('actions')} actions")


@pytest.mark.parametrize("m,n", LEMMA_GB_INSTANCES, ids=_ids(LEMMA_GB_INSTANCES))
def test_criterion_8_hilbert_series(criterion, m, n):
    res = hilbert_series_suite(m, n, deg_max=8)
    d = res.details
    note = (f"counts={d['standard_monomials']}, formula={d['product_formula']}, "
            f"numerator degree {d['numerator_degree']} vs {d['expected_degree']}")
    criterion(C8, f"m={m},n={n}", not res.failed, note)


@pytest.mark.parametrize("m,n,deg_max", DEFAULT_INSTANCES, ids=_ids(DEFAULT_INSTANCES))
def test_criterion_9_domination(criterion, m, n, deg_max):
    series = b_character(table(n, m, deg_max), m).total_series()
    upper = domination_series(m, n, deg_max)
    criterion(C9, f"m={m},n={n},deg<={deg_max}",
              all(b <= u for b, u in zip(series, upper)), f"B={series}, upper={upper}")


@pytest.mark.parametrize("m,n,deg_max", DEFAULT_INSTANCES, ids=_ids(DEFAULT_INSTANCES))
def test_criterion_10_oracle_equivalence(criterion, golden, m, n, deg_max):
    frozen = golden["lcs"][str(n)]
    assert frozen["deg_max"] >= deg_max and frozen["m_max"] >= m
    L = frozen["L"]
    oracle = [a - b for a, b in zip(L[str(m)], L[str(m + 1)])][: deg_max + 1]
    ours = b_character(table(n, m, deg_max), m).total_series()
    criterion(C10, f"m={m},n={n},deg<={deg_max}", ours == oracle, f"ours={ours}, oracle={oracle}")


@pytest.mark.parametrize("m,n,deg_max", DEFAULT_INSTANCES, ids=_ids(DEFAULT_INSTANCES))
def test_prime_mode_cross_check(criterion, m, n, deg_max):
    rat = b_character(table(n, m, deg_max), m).coefficients
    mod = b_character(table(n, m, deg_max, DEFAULT_PRIME), m).coefficients
    criterion(PRIME, f"m={m},n={n},deg<={deg_max}", rat == mod)
