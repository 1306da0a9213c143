import pytest

from corrkit.categories.category import FunctorData, free_category, poset, simplex_category
from corrkit.categories.nerve import nerve, nerve_map
from corrkit.fibrations import (
    HornProblem,
    fiberwise_criterion,
    horn_fillers,
    is_inner_fibration,
    is_quasi_category,
)
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap
from corrkit.simplicial.standard import boundary, horn, simplex, to_point


def horn_inclusion(n, k):
    return simplex(n).restrict(horn(n, k).cells)[1]


def test_fillers_of_the_identity_horn():
    assert horn_fillers(HornProblem(2, 1, horn_inclusion(2, 1))) == [SimplexRef.of("012")]
    assert horn_fillers(HornProblem(2, 1, SimplicialMap.identity(horn(2, 1)))) == []


def test_relative_fillers_lie_over_the_base():
    p = to_point(simplex(2))
    pr = HornProblem(2, 1, horn_inclusion(2, 1), p(SimplexRef.of("012")), p)
    assert pr.validate().ok
    assert horn_fillers(pr) == [SimplexRef.of("012")]


def test_horn_problem_validation():
    pr = HornProblem(2, 0, horn_inclusion(2, 1))
    assert pr.validate().kinds() == ["not-a-horn"]
    assert pr.inner is False


@pytest.mark.parametrize(
    "X, expected",
    [
        (simplex(0), True),
        (simplex(2), True),
        (simplex(3), True),
        (horn(2, 1), False),
        (boundary(2), False),
        (horn(2, 0), True),
        (FiniteSimplicialSet({}), True),
    ],
)
def test_quasi_categories(X, expected):
    report = is_quasi_category(X, max_n=3)
    assert report.verdict is expected
    assert report.checked_dims == (2, 3)
    assert not report.budget_exhausted


def test_failure_is_the_identity_horn():
    report = is_quasi_category(horn(2, 1))
    assert report.checked_dims == (2, 3)
    first = report.failures[0]
    assert (first.n, first.k) == (2, 1)
    assert first.horn_map == SimplicialMap.identity(horn(2, 1))
    assert report.to_dict()["failure_count"] == len(report.failures)


def test_budget_exhaustion_is_inconclusive():
    report = is_quasi_category(simplex(3), max_n=3, budget=2)
    assert report.budget_exhausted
    assert report.verdict is False


def test_map_to_a_point_reduces_to_quasi_category():
    X = horn(2, 1)
    assert is_inner_fibration(to_point(X), max_n=3).verdict == is_quasi_category(X, max_n=3).verdict


def test_horn_inclusion_is_not_an_inner_fibration():
    report = is_inner_fibration(horn_inclusion(2, 1), max_n=2)
    assert not report.verdict
    assert report.failures[0].base_simplex == SimplexRef.of("012")


@pytest.mark.parametrize(
    "C",
    [
        simplex_category(2),
        poset(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]),
        free_category(["0", "1", "2"], {"f": ("0", "1"), "g": ("1", "2"), "h": ("0", "2")}),
    ],
)
def test_nerves_are_quasi_categories(C):
    assert is_quasi_category(nerve(C, up_to=3), max_n=3).verdict


def test_nerve_of_a_functor_is_an_inner_fibration():
    C = simplex_category(2)
    D = simplex_category(1)
    F = FunctorData(
        C, D,
        {"0": "0", "1": "1", "2": "1"},
        {"id_0": "id_0", "id_1": "id_1", "id_2": "id_1", "0<1": "0<1", "0<2": "0<1", "1<2": "id_1"},
    )
    p = nerve_map(F, nerve(C, up_to=3), nerve(D, up_to=3))
    assert is_inner_fibration(p, max_n=3).verdict


def test_fiberwise_criterion_on_the_example(triangle_map):
    result = fiberwise_criterion(triangle_map)
    assert (result.global_verdict, result.fiberwise_verdict, result.agreement) == (True, True, True)
    assert result.conclusive
    assert set(result.fiber_reports) == {SimplexRef.of(c) for c in ("0", "1", "01")}


def test_fiberwise_criterion_on_an_identity():
    result = fiberwise_criterion(SimplicialMap.identity(simplex(1)))
    assert result.global_verdict and result.fiberwise_verdict and result.agreement


def test_fiberwise_criterion_agrees_on_a_failure():
    X = horn(2, 1)
    p = SimplicialMap(X, simplex(1), {"0": "0", "1": "1", "2": "1", "01": "01", "12": [[0], "1"]})
    result = fiberwise_criterion(p, max_n=3)
    assert result.agreement
    assert not result.global_verdict
    assert result.to_dict()["failing_fibers"] == ["01"]
