import pytest
import sympy
from hypothesis import given, settings, strategies as st

from wreathring.partitions import multipartitions, partitions
from wreathring.symfunc import (DegreeVerdict, ElementaryMonomial, GradedRingElement, IndexMismatch,
                                all_flavor_assignments, bareiss_determinant,
                                expand_polynomial, graded_generation_check,
                                monomial_to_schur, schur_to_elementary,
                                schur_to_homogeneous, transition_matrix)

from oracles import kostka, transpose


def s(*label):
    return GradedRingElement.basis(tuple(label))


def test_product_examples():
    assert s((1,)) * s((1,)) == s((2,)) + s((1, 1))
    x = s((2, 1), ()) + s((), (1,)) * 3
    assert x * GradedRingElement.one(2) == x
    assert s((), (1,)) * s((1,), ()) == s((1,), (1,))


def test_index_mismatch():
    with pytest.raises(IndexMismatch):
        s((1,)) * s((1,), ())


labels = st.integers(0, 4).flatmap(lambda d: st.sampled_from(multipartitions(d, 2)))


@given(labels, labels, labels)
@settings(max_examples=80, deadline=None)
def test_commutative_and_associative(a, b, c):
    x, y, z = s(*a), s(*b), s(*c)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


def test_schur_to_elementary_examples():
    assert schur_to_elementary((1,)) == {(1,): 1}
    assert schur_to_elementary((1, 1, 1)) == {(3,): 1}
    assert schur_to_elementary((2, 1)) == {(2, 1): 1, (3,): -1}


@pytest.mark.parametrize("d", range(1, 9))
def test_round_trip_through_generators(d):
    for p in partitions(d):
        assert expand_polynomial(schur_to_elementary(p), 1, 0, "e") == s(p)
        assert expand_polynomial(schur_to_homogeneous(p), 1, 0, "h") == s(p)


def test_monomial_to_schur():
    mono = ElementaryMonomial.of([(0, 1, "e"), (1, 2, "h")])
    assert mono.degree == 3
    assert monomial_to_schur(mono, 2) == s((1,), (2,))
    with pytest.raises(ValueError):
        ElementaryMonomial.of([(0, 0, "e")])


@pytest.mark.parametrize("d", range(1, 8))
def test_single_component_transitions_are_kostka_matrices(d):
    basis, rows = transition_matrix(("h",), d)
    for i, (mu,) in enumerate(basis):
        for j, (lam,) in enumerate(basis):
            assert rows[i][j] == kostka(lam, mu)
    basis, rows = transition_matrix(("e",), d)
    for i, (mu,) in enumerate(basis):
        for j, (lam,) in enumerate(basis):
            assert rows[i][j] == kostka(transpose(lam), mu)


def test_bareiss_against_sympy():
    import random
    rng = random.Random(5)
    for n in range(0, 7):
        for _ in range(20):
            M = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
            expected = sympy.Matrix(M).det() if n else 1
            assert bareiss_determinant(M) == expected


@pytest.mark.parametrize("flavors", all_flavor_assignments(2) + [("e", "h", "e")])
def test_transition_determinants_against_sympy(flavors):
    for d in range(1, 5):
        _, rows = transition_matrix(flavors, d)
        assert abs(sympy.Matrix(rows).det()) == 1


def test_graded_examples():
    for flavor in "eh":
        report = graded_generation_check((flavor,), 3)
        assert report.passed
    report = graded_generation_check(("e", "h", "e"), 1)
    _, rows = transition_matrix(("e", "h", "e"), 1)
    assert rows == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert report.passed and report.degrees[0].determinant == 1


def test_non_generating_set_is_caught():
    # {e_1^2, p_2} does not span degree 2: p_2 = s(2) - s(1,1)
    e1 = s((1,))
    p2 = s((2,)) - s((1, 1))
    basis = [((2,),), ((1, 1),)]
    rows = [[x.terms.get(lab, 0) for lab in basis] for x in (e1 * e1, p2)]
    verdict = DegreeVerdict(2, 2, bareiss_determinant(rows))
    assert verdict.determinant == -2 and not verdict.unimodular
    with pytest.raises(ValueError):
        graded_generation_check(("e",), 0)
