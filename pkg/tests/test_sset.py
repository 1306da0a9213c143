import pytest

from corrkit.errors import ValidationError
from corrkit.simplicial import enumerate_simplices
from corrkit.simplicial.delta import DegeneracyWord
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap, validate_map, validate_sset
from corrkit.simplicial.standard import boundary, delta_simplex, horn, simplex, standard_sset, to_point, yoneda


def test_standard_simplices():
    assert simplex(2).counts() == [3, 3, 1]
    assert boundary(3).counts() == [4, 6, 4]
    assert horn(2, 1).counts() == [3, 2]
    assert horn(2, 1).cells_of_dim(1) == ("01", "12")
    assert standard_sset("horn", 3, 0).counts() == [4, 6, 3]


@pytest.mark.parametrize("kind, n, k", [("simplex", -1, None), ("horn", 2, 3), ("horn", 2, None), ("cube", 2, None)])
def test_standard_range_checks(kind, n, k):
    with pytest.raises(ValueError):
        standard_sset(kind, n, k)


def test_wide_simplices_use_separators():
    assert "0-1-10" in simplex(10).cells_of_dim(2)


def test_valid_and_empty():
    assert validate_sset(simplex(3)).ok
    assert validate_sset(FiniteSimplicialSet({})).ok


@pytest.mark.parametrize(
    "X",
    [simplex(0), simplex(1), horn(2, 1), boundary(2), horn(3, 1)],
    ids=["point", "edge", "horn_2_1", "boundary_2", "horn_3_1"],
)
def test_low_dimensional_sets_validate(X):
    assert validate_sset(X).ok


def test_swapped_faces_break_identities():
    X = FiniteSimplicialSet(
        {"0": 0, "1": 0, "2": 0, "01": 1, "02": 1, "12": 1, "012": 2},
        {"01": ["1", "0"], "02": ["2", "0"], "12": ["2", "1"], "012": ["02", "12", "01"]},
    )
    report = validate_sset(X)
    assert report.kinds() == ["simplicial-identity", "simplicial-identity"]
    assert [(i.detail["i"], i.detail["j"]) for i in report.issues] == [(0, 2), (1, 2)]


def test_structural_problems_are_reported():
    X = FiniteSimplicialSet({"0": 0, "01": 1}, {"01": ["1", "0"]})
    assert validate_sset(X).kinds() == ["unknown-face"]
    Y = FiniteSimplicialSet({"0": 0, "01": 1}, {"01": ["0"]})
    assert validate_sset(Y).kinds() == ["face-arity"]


@pytest.mark.parametrize("X, n, expected", [(simplex(0), 5, 1), (simplex(1), 1, 3), (simplex(2), 3, 15)])
def test_simplex_counts(X, n, expected):
    assert len(enumerate_simplices(X, n)) == expected


def test_operators_on_degenerate_simplices():
    X = simplex(1)
    x = X.degeneracy(SimplexRef.of("01"), 0)
    assert str(x) == "s0.01"
    assert X.face(x, 0) == SimplexRef.of("01")
    assert X.face(x, 2) == X.degeneracy(SimplexRef.of("0"), 0)
    assert X.vertices(x) == ("0", "0", "1")


def test_delta_simplex_names():
    assert delta_simplex(2, (0, 2)) == SimplexRef.of("02")
    assert delta_simplex(1, (1, 1)) == SimplexRef(DegeneracyWord((0,)), "1")
    with pytest.raises(ValueError):
        delta_simplex(1, (1, 0))


def test_map_validation():
    assert validate_map(SimplicialMap.identity(simplex(2))).ok
    assert validate_map(to_point(simplex(2))).ok
    swap = SimplicialMap(simplex(1), simplex(1), {"0": "1", "1": "0", "01": "01"})
    assert "face-violation" in validate_map(swap).kinds()
    short = SimplicialMap(simplex(1), simplex(1), {"0": "0", "1": "1", "01": "0"})
    assert validate_map(short).kinds() == ["dimension-mismatch"]


def test_yoneda_classifies_simplices():
    A = simplex(2)
    sigma = A.degeneracy(SimplexRef.of("12"), 1)
    f = yoneda(A, sigma)
    assert validate_map(f).ok
    assert f(SimplexRef.of("012")) == sigma
    assert f(SimplexRef.of("01")) == SimplexRef.of("12")
    assert f(SimplexRef.of("2")) == SimplexRef.of("2")


def test_subobjects():
    X = simplex(2)
    sub, inclusion = X.delete_cells(lambda c: c == "0")
    assert sub.counts() == [2, 1]
    assert validate_map(inclusion).ok
    assert X.maximal_cells() == ["012"]
    assert X.closure(["01"]) == {"0", "1", "01"}
    with pytest.raises(ValidationError):
        X.restrict(["01"])
