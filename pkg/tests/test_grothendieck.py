import pytest

from corrkit.categories.category import (
    FunctorData,
    constant_functor,
    discrete,
    identity_functor,
    simplex_category,
    terminal,
    validate_category,
    validate_functor,
)
from corrkit.categories.grothendieck import CatDiagram, grothendieck, is_grothendieck_fibration


@pytest.fixture
def collapse():
    """Over ``[1]``: the arrow category collapsing onto a point."""
    A, C, P = simplex_category(1), simplex_category(1), terminal()
    return CatDiagram(
        A,
        {"0": C, "1": P},
        {"id_0": identity_functor(C), "id_1": identity_functor(P), "0<1": constant_functor(C, P, "*")},
    )


def test_diagram_validation(collapse):
    assert collapse.validate().ok
    del collapse.functors["0<1"]
    assert collapse.validate().kinds() == ["missing-functor"]


def test_grothendieck_construction(collapse):
    G, p = grothendieck(collapse)
    assert G.objects == ("0/0", "0/1", "1/*")
    assert len(G.arrows) == 6
    assert validate_category(G).ok
    assert validate_functor(p).ok
    assert G.compose("(0<1,1,id_*)", "(id_0,0,0<1)") == "(0<1,0,id_*)"


def test_grothendieck_projection_has_lifts(collapse):
    _, p = grothendieck(collapse)
    check = is_grothendieck_fibration(p)
    assert check
    assert check.lifts[("0<1", "0/0")] == "(0<1,0,id_*)"
    assert check.to_dict()["failures"] == []


def test_missing_lift():
    A = simplex_category(1)
    X = discrete(["0", "1"])
    p = FunctorData(X, A, {"0": "0", "1": "1"}, {"id_0": "id_0", "id_1": "id_1"})
    check = is_grothendieck_fibration(p)
    assert not check
    assert check.failures == [("0<1", "0")]
