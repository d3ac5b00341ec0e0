from fractions import Fraction

import pytest

from wreathrep.charpoly import (
    CharacterPolynomial,
    InconsistentDataError,
    InstabilityError,
    UnderdeterminedError,
    evaluate,
    fit,
    from_induced,
    monomials_up_to,
    stable_inner_product,
    to_class_function,
    twisted_variable,
)
from wreathrep.combinat import MultiPartition, enumerate_classes
from wreathrep.exactnum import zeta
from wreathrep.wreathchar import character_table, ind_fig_character, irr_character, trivial

mp = MultiPartition.from_slots
X = CharacterPolynomial.variable


def test_arithmetic_and_evaluation():
    P = X(2, 1, 0) * X(2, 1, 1) - 3
    t = enumerate_classes(2, 3)[0]
    assert P.degree == 2
    assert (P - P).degree == -1
    assert evaluate(CharacterPolynomial.binomial(2, 1, 0, 2), t) == Fraction(t.count(1, 0) * (t.count(1, 0) - 1), 2)
    assert str(X(2, 1, 0) + X(2, 1, 1)) == "X1^0 + X1^1"
    assert str(CharacterPolynomial(2, {})) == "0"
    with pytest.raises(ValueError):
        X(2, 1, 0) + X(3, 1, 0)


def test_trivial_and_permutation_polynomials():
    assert from_induced(trivial(2, 0)) == CharacterPolynomial.constant(2, 1)
    # permutation module on n points: every fixed point counts, whatever its label
    assert from_induced(irr_character(2, 1, mp(2, {0: (1,)}))) == X(2, 1, 0) + X(2, 1, 1)
    # the reflection representation: labels act by -1
    assert from_induced(irr_character(2, 1, mp(2, {1: (1,)}))) == X(2, 1, 0) - X(2, 1, 1)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_from_induced_matches_induction(d):
    for m in (1, 2):
        for lam, V in character_table(d, m).items():
            P = from_induced(V)
            assert P.degree <= m
            for n in range(m, 5):
                assert to_class_function(P, n) == ind_fig_character(V, n)


def test_twisted_variable():
    P = twisted_variable(3, 1, 2)
    assert P.terms[(((2, 1), 1),)] == zeta(3)
    with pytest.raises(ValueError):
        twisted_variable(3, 3, 2)


def test_fit_recovers_polynomial():
    V = irr_character(2, 2, mp(2, {1: (1, 1)}))
    P = from_induced(V)
    seq = [(n, ind_fig_character(V, n)) for n in range(2, 6)]
    assert fit(seq, 2) == P


def test_fit_errors():
    seq = [(n, trivial(1, n)) for n in (1, 2)]
    with pytest.raises(UnderdeterminedError):
        fit(seq, 3)
    bad = [(2, trivial(1, 2)), (3, trivial(1, 3) * 2)]
    with pytest.raises(InconsistentDataError):
        fit(bad, 0)
    with pytest.raises(ValueError):
        fit([(2, trivial(1, 2))], 1)


def test_monomials_up_to():
    monos = monomials_up_to(1, 2)
    assert len(monos) == 4  # 1, X1, X1^2, X2
    assert len(monomials_up_to(2, 2)) == 8


def test_stable_inner_product():
    P = X(1, 1, 0)
    assert stable_inner_product(P, lambda n: trivial(1, n), 1, 3) == 1
    with pytest.raises(InstabilityError) as err:
        stable_inner_product(P * P, lambda n: trivial(1, n), 0, 2)
    assert set(err.value.values) == {0, 1, 2}
    with pytest.raises(ValueError):
        stable_inner_product(P, lambda n: trivial(1, n), 1, 2)


def test_json_shape():
    out = (X(3, 2, 1) * zeta(3)).to_json()
    assert out == [{"monomial": [{"i": 2, "c": 1, "e": 1}], "coeff": {"d": 3, "coeffs": [[0, 1], [1, 1]]}}]
