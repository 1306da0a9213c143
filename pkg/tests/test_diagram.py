import pytest

from corrkit.correspondences import (
    classifying_diagram,
    cotabulator,
    double_colimit,
    fiber,
    roundtrip_check,
    truncation_stable,
)
from corrkit.errors import ValidationError
from corrkit.simplicial.delta import OperatorWord
from corrkit.simplicial.limits import coproduct
from corrkit.simplicial.maps import find_iso_bruteforce
from corrkit.simplicial.sset import SimplexRef, SimplicialMap, compose
from corrkit.simplicial.standard import horn, simplex, to_point


@pytest.fixture
def boundary_map(triangle_map):
    _, inclusion = triangle_map.source.delete_cells(lambda c: c == "abc")
    return compose(triangle_map, inclusion)


def test_classifying_diagram_of_the_example(triangle_map):
    D = classifying_diagram(triangle_map)
    assert D.truncation == 2
    assert D.at[SimplexRef.of("0")].total.counts() == [1]
    assert D.at[SimplexRef.of("1")].total.counts() == [2, 1]
    assert D.at[SimplexRef.of("01")].total.counts() == [3, 3, 1]
    assert D.validate().ok


def test_tautological_diagram():
    D = classifying_diagram(SimplicialMap.identity(simplex(1)))
    for sigma, X in D.at.items():
        assert find_iso_bruteforce(X.total, simplex(D.base.simplex_dim(sigma))) is not None


def test_actions_compose_along_words(triangle_map):
    D = classifying_diagram(triangle_map)
    edge = SimplexRef.of("01")
    f = D.act(edge, OperatorWord.parse("d1", 1))
    assert f.source == D.at[SimplexRef.of("0")].total
    assert f.target == D.at[edge].total
    identity = D.act(edge, OperatorWord.parse("d0 s0", 1))
    assert identity == SimplicialMap.identity(D.at[edge].total)


def test_broken_action_is_reported(triangle_map):
    D = classifying_diagram(triangle_map)
    D.acts[(SimplexRef.of("01"), ("d", 0))] = D.acts[(SimplexRef.of("01"), ("d", 1))]
    assert not D.validate().ok
    with pytest.raises(ValidationError):
        double_colimit(D)


def test_double_colimit_of_the_example(triangle_map):
    dc = double_colimit(classifying_diagram(triangle_map))
    assert dc.obj.counts() == [3, 3, 1]
    assert dc.truncation == 2
    assert dc.cocone.validate().ok


def test_double_colimit_of_a_simplex():
    dc = double_colimit(classifying_diagram(SimplicialMap.identity(simplex(2))))
    assert find_iso_bruteforce(dc.obj, simplex(2)) is not None


def test_disjoint_fibers_recover_the_coproduct():
    source = coproduct(simplex(1), horn(2, 1), names=["X", "Y"])
    target = coproduct(simplex(0), simplex(0), names=["X", "Y"])
    collapse = {name: compose(target.cocone[name], to_point(X)) for name, X in (("X", simplex(1)), ("Y", horn(2, 1)))}
    f = source.descend(collapse, target=target.obj)
    result = roundtrip_check(f)
    assert result.verdict
    assert result.double_colimit.obj.counts() == source.obj.counts()


def test_roundtrip(triangle_map, boundary_map):
    assert roundtrip_check(triangle_map).verdict
    assert roundtrip_check(boundary_map).verdict
    assert roundtrip_check(SimplicialMap.identity(simplex(2))).verdict


def test_roundtrip_comparison_lies_over_the_base(triangle_map):
    result = roundtrip_check(triangle_map)
    assert result.over_base
    assert result.comparison.target == triangle_map.source
    assert result.reason == ""


def test_truncation_is_stable(triangle_map, boundary_map):
    assert truncation_stable(triangle_map).verdict
    assert truncation_stable(boundary_map, truncation=1).verdict


def test_cotabulator_is_the_total_space(triangle_map, edge):
    X = fiber(triangle_map, edge)
    total, cocone = cotabulator(X)
    assert total == X.total
    assert cocone.validate().ok
    assert set(cocone.components) == set(cocone.source.at)
