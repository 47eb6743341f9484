import pytest
from hypothesis import given, settings, strategies as st

from lcsq.exact_linalg import rank
from lcsq.groebner import (LEX, CommPoly, MonomialOrder, PartialBasisError, buchberger,
                           column_claim_holds, hilbert_series_from_basis,
                           hilbert_series_product_formula, ideal_generator, ideal_generators,
                           initial_ideal_matches_claim, leading_monomial, monomials_of_degree,
                           numerator_polynomial, polynomial_degree, reduce_mod, var_index, x)

# hand-derived: O_22/I with I = ((x_i1 - x_i2)(x_j1 - x_j2)) is Sym(C^2) (x) (1 + 2t)
PRODUCT_22 = [1, 4, 7, 10, 13, 16, 19, 22, 25]
# (1-t)^{-2} (1 + 2t) (1 + 2t + 3t^2 + 4t^3)
PRODUCT_32 = [1, 6, 18, 40, 70, 100, 130, 160, 190]


def quotient_dims_by_linear_algebra(m: int, n: int, deg_max: int) -> list[int]:
    """``dim (O/I)_d`` from the rank of monomial multiples of the generators."""
    nvars = n * m
    gens = ideal_generators(m, n)
    out = []
    for d in range(deg_max + 1):
        mons = list(monomials_of_degree(nvars, d))
        idx = {e: i for i, e in enumerate(mons)}
        rows = []
        for g in gens:
            if g.degree() > d:
                continue
            for e in monomials_of_degree(nvars, d - g.degree()):
                rows.append({idx[tuple(a + b for a, b in zip(e, f))]: c for f, c in g.terms.items()})
        out.append(len(mons) - rank(rows, len(mons)))
    return out


def test_variable_order():
    n, m = 2, 3
    # later column wins; within a column the higher row index wins
    order = sorted([(i, j) for i in (1, 2) for j in (1, 2, 3)],
                   key=lambda ij: LEX.key(x(*ij, n, m).terms.popitem()[0]), reverse=True)
    assert order == [(2, 3), (1, 3), (2, 2), (1, 2), (2, 1), (1, 1)]
    assert var_index(2, 3, 2) == 5


def test_leading_monomial_of_a_generator():
    g = ideal_generator(2, 2, 2, [1], [2])
    e = [0] * 4
    e[var_index(1, 2, 2)] = e[var_index(2, 2, 2)] = 1
    assert leading_monomial(g, LEX) == tuple(e)


def test_generator_counts():
    assert len(ideal_generators(2, 2)) == 3
    assert len(ideal_generators(3, 2)) == 3 + 9
    assert len(ideal_generators(2, 3)) == 6
    with pytest.raises(ValueError):
        ideal_generator(2, 2, 3, [1, 1], [1, 1])


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2)])
def test_quotient_dims_by_linear_algebra(m, n):
    gb = buchberger(ideal_generators(m, n), LEX, deg_cap=6)
    assert hilbert_series_from_basis(gb, 6) == quotient_dims_by_linear_algebra(m, n, 6)


def test_product_formula_values():
    assert hilbert_series_product_formula(2, 2, 8) == PRODUCT_22
    assert hilbert_series_product_formula(3, 2, 8) == PRODUCT_32
    assert hilbert_series_product_formula(1, 3, 3) == [1, 3, 6, 10]


def test_two_column_ideal_matches_formula():
    gb = buchberger(ideal_generators(2, 2), LEX, deg_cap=8)
    assert hilbert_series_from_basis(gb, 8) == PRODUCT_22
    assert initial_ideal_matches_claim(gb, 2, 2)
    assert column_claim_holds(gb, 2, 2) == {2: True}


def test_three_column_ideal_is_larger_than_claimed():
    gb = buchberger(ideal_generators(3, 2), LEX, deg_cap=6)
    counts = hilbert_series_from_basis(gb, 6)
    assert counts == [1, 6, 18, 40, 67, 94, 121]
    assert not initial_ideal_matches_claim(gb, 3, 2)
    assert all(column_claim_holds(gb, 3, 2).values())


def test_numerator_and_degree():
    num = numerator_polynomial(PRODUCT_32, 2)
    assert num == [1, 4, 7, 10, 8, 0, 0, 0, 0] and polynomial_degree(num) == 4
    assert polynomial_degree([0, 0]) == -1


def test_partial_basis_is_flagged():
    gb = buchberger(ideal_generators(3, 2), LEX, deg_cap=5)
    assert gb.partial and gb.certified(5) and not gb.certified(7)
    big = x(1, 1, 2, 3) ** 8
    with pytest.raises(PartialBasisError):
        reduce_mod(gb, big)


def test_reduction_of_ideal_members():
    gens = ideal_generators(2, 2)
    gb = buchberger(gens, LEX, deg_cap=8)
    member = gens[0] * x(1, 1, 2, 2) + gens[2] * x(2, 2, 2, 2) ** 2
    assert reduce_mod(gb, member).is_zero()
    assert not reduce_mod(gb, x(1, 1, 2, 2)).is_zero()


polys = st.dictionaries(st.tuples(*(st.integers(0, 2) for _ in range(3))), st.integers(-3, 3),
                        max_size=4).map(lambda t: CommPoly(t, 3))


@settings(max_examples=50, deadline=None)
@given(polys, polys, polys)
def test_commutative_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


def test_grlex_order_available():
    p = x(1, 1, 2, 1) ** 2 + x(2, 1, 2, 1)
    assert leading_monomial(p, MonomialOrder("grlex")) == (2, 0)
    with pytest.raises(ValueError):
        MonomialOrder("bogus").key((0, 1))
