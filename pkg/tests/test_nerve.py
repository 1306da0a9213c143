import pytest

from corrkit.categories.category import FiniteCategory, FunctorData, simplex_category
from corrkit.categories.nerve import fundamental_category, nerve, nerve_map
from corrkit.errors import UnsupportedInputError
from corrkit.simplicial.maps import find_iso_bruteforce
from corrkit.simplicial.sset import SimplexRef, validate_sset
from corrkit.simplicial.standard import boundary, horn, simplex


def idempotent():
    """One object with ``e . e = e``."""
    return FiniteCategory(
        ["a"],
        {"id_a": ("a", "a"), "e": ("a", "a")},
        {("id_a", "id_a"): "id_a", ("e", "id_a"): "e", ("id_a", "e"): "e", ("e", "e"): "e"},
        {"a": "id_a"},
    )


def test_nerve_of_simplex_category():
    N = nerve(simplex_category(2))
    assert N.counts() == [3, 3, 1]
    assert validate_sset(N).ok
    assert N.faces_of("0<1|1<2") == (SimplexRef.of("1<2"), SimplexRef.of("0<2"), SimplexRef.of("0<1"))
    assert find_iso_bruteforce(N, simplex(2)) is not None


def test_nerve_needs_truncation_for_loops():
    with pytest.raises(UnsupportedInputError):
        nerve(idempotent())
    N = nerve(idempotent(), up_to=2)
    assert N.counts() == [1, 1, 1]
    assert validate_sset(N).ok


def test_nerve_map_is_simplicial():
    F = FunctorData(
        simplex_category(2),
        simplex_category(1),
        {"0": "0", "1": "1", "2": "1"},
        {"id_0": "id_0", "id_1": "id_1", "id_2": "id_1", "0<1": "0<1", "0<2": "0<1", "1<2": "id_1"},
    )
    f = nerve_map(F)
    assert f.validate().ok
    assert f("1<2").is_degenerate
    assert f("0<1|1<2").cell == "0<1"


def test_fundamental_category_recovers_the_poset():
    tau = fundamental_category(nerve(simplex_category(2)))
    C = tau.category
    assert len(C.arrows) == 6
    assert C.compose(tau.edge_arrow["1<2"], tau.edge_arrow["0<1"]) == tau.edge_arrow["0<2"]


def test_fundamental_category_of_spines():
    assert len(fundamental_category(horn(2, 1)).category.arrows) == 6
    tau = fundamental_category(boundary(2))
    assert len(tau.category.arrows) == 7
    assert tau.category.compose(tau.edge_arrow["12"], tau.edge_arrow["01"]) != tau.edge_arrow["02"]
