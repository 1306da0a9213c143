import pytest

from corrkit.correspondences import (
    Correspondence,
    constant,
    corr_degeneracy,
    corr_face,
    cotabulator_hom_check,
    degeneracy_deletion_check,
    degeneracy_pasting_check,
    derive,
    face_deletion_check,
    face_pasting_check,
    fiber,
    iterated_degeneracy,
    vertical_mapping_space,
    weak_simplicial_identities_check,
)
from corrkit.simplicial.limits import is_iso, product
from corrkit.simplicial.maps import find_iso_bruteforce
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap, validate_sset
from corrkit.simplicial.standard import horn, simplex, to_point


@pytest.fixture
def X(triangle_map, edge):
    return fiber(triangle_map, edge)


def test_fiber_over_the_edge(X):
    assert X.n == 1
    assert X.total.counts() == [3, 3, 1]
    assert X.validate().ok
    assert X.vertex_fiber(0).counts() == [1]
    assert X.vertex_fiber(1).counts() == [2, 1]


def test_fiber_of_an_identity_is_the_simplex():
    A = simplex(2)
    X = fiber(SimplicialMap.identity(A), SimplexRef.of("12"))
    assert find_iso_bruteforce(X.total, simplex(1)) is not None


def test_fiber_over_a_point_is_everything():
    Y = horn(2, 1)
    X = fiber(to_point(Y), SimplexRef.of("0"))
    assert X.n == 0
    assert is_iso(X.to_parent)


def test_faces(X):
    assert corr_face(X, 0).total.counts() == [2, 1]
    assert corr_face(X, 1).total.counts() == [1]
    with pytest.raises(ValueError):
        corr_face(X, 2)
    with pytest.raises(ValueError):
        corr_face(constant(simplex(1), 0), 0)


def test_face_of_a_product():
    Y = horn(2, 1)
    assert corr_face(constant(Y, 2), 1).total.counts() == constant(Y, 1).total.counts()


def test_first_degeneracy_is_a_tetrahedron(X):
    s0 = corr_degeneracy(X, 0)
    assert s0.n == 2
    assert s0.validate().ok
    assert find_iso_bruteforce(s0.total, simplex(3)) is not None


def test_second_degeneracy(X):
    s1 = corr_degeneracy(X, 1)
    assert s1.total.counts() == [5, 9, 7, 2]
    assert validate_sset(s1.total).ok


def test_degeneracy_of_a_point_is_the_cylinder():
    Y = horn(2, 1)
    cylinder = corr_degeneracy(constant(Y, 0), 0)
    assert cylinder.n == 1
    assert cylinder.total.counts() == product(Y, simplex(1)).obj.counts()


@pytest.mark.parametrize("i", [0, 1])
def test_deletion_formulas(X, i):
    assert face_deletion_check(X, i).verdict
    assert degeneracy_deletion_check(X, i).verdict


@pytest.mark.parametrize("cell, i", [("01", 0), ("01", 1), ("1", 0)])
def test_fibers_paste_along_the_base(triangle_map, cell, i):
    sigma = SimplexRef.of(cell)
    if triangle_map.target.dim_of(cell) > 0:
        assert face_pasting_check(triangle_map, sigma, i).verdict
    assert degeneracy_pasting_check(triangle_map, sigma, i).verdict


def test_derive_tracks_the_map_to_the_root(X):
    Y, to_root = derive(X, [("s", 0), ("d", 0)])
    assert Y.n == 1
    assert to_root.target == X.total
    assert is_iso(to_root)


def test_iterated_degeneracy_is_the_product():
    Y = simplex(1)
    s2, to_Y = iterated_degeneracy(Y, 2)
    assert s2.n == 2
    assert s2.total.counts() == product(Y, simplex(2)).obj.counts()
    assert to_Y.target == Y


def test_weak_identities_on_the_example(X):
    report = weak_simplicial_identities_check(X)
    assert report.verdict
    ids = {(c.identity, c.i, c.j) for c in report.checks}
    assert ("d_i s_j = id", 0, 0) in ids
    assert ("d_i s_j = id", 1, 0) in ids


@pytest.mark.parametrize("n", [0, 1, 2])
def test_weak_identities_on_simplices(n):
    X = fiber(SimplicialMap.identity(simplex(n)), SimplexRef.of(simplex(n).cells[-1]))
    assert weak_simplicial_identities_check(X).verdict


def test_weak_identities_hold_vacuously_when_empty():
    empty = FiniteSimplicialSet({})
    X = Correspondence(empty, 1, SimplicialMap(empty, simplex(1), {}))
    assert weak_simplicial_identities_check(X).verdict


def test_weak_identities_respect_the_bound():
    with pytest.raises(ValueError):
        weak_simplicial_identities_check(constant(simplex(0), 4))


def test_cotabulator_hom_bijection():
    X = fiber(SimplicialMap.identity(simplex(1)), SimplexRef.of("01"))
    result = cotabulator_hom_check(X, simplex(1))
    assert result.over_count == result.plain_count == 3
    assert result.verdict


def test_vertical_mapping_spaces():
    assert len(vertical_mapping_space(simplex(0), simplex(0), 2)) == 1
    points = vertical_mapping_space(simplex(0), simplex(2), 1)
    assert len(points) == len(simplex(2).simplices(1)) == 6
    assert points.bijective
    intervals = vertical_mapping_space(simplex(1), simplex(1), 1)
    assert intervals.bijective
    assert len(intervals) == len(intervals.level) == 6
