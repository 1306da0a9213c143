import pytest

from corrkit.categories.category import (
    FunctorData,
    constant_functor,
    identity_functor,
    simplex_category,
    terminal,
    validate_category,
    validate_functor,
)
from corrkit.categories.profunctor import (
    Profunctor,
    associator_iso,
    check_profunctor_map,
    collage,
    collage_iso_over,
    collage_roundtrip_check,
    companion,
    companion_composite_iso,
    hom,
    left_unit_iso,
    right_unit_iso,
    tensor_coend,
    tensor_equivalence_check,
    validate_profunctor,
)


@pytest.fixture
def F():
    return FunctorData(
        simplex_category(2),
        simplex_category(1),
        {"0": "0", "1": "1", "2": "1"},
        {"id_0": "id_0", "id_1": "id_1", "id_2": "id_1", "0<1": "0<1", "0<2": "0<1", "1<2": "id_1"},
    )


def test_hom_is_valid():
    u = hom(simplex_category(2))
    assert validate_profunctor(u).ok
    assert len(u.all_elements()) == 6
    assert u.left("1<2", "0<1") == "0<2"


def test_companion(F):
    u = companion(F)
    assert validate_profunctor(u).ok
    assert u.at("0", "1") == ("0<1@0",)
    assert len(u.all_elements()) == 4
    assert u.right("id_1@1", "0<1") == "0<1@0"


def test_broken_action():
    u = hom(simplex_category(1))
    lact = dict(u.lact)
    lact.pop(("0<1", "id_0"))
    broken = Profunctor(u.source, u.target, u.elements, lact, u.ract)
    assert validate_profunctor(broken).kinds() == ["missing-left-action"]


def test_collage(F):
    U, p = collage(hom(simplex_category(1)))
    assert len(U.objects) == 4
    assert len(U.arrows) == 9
    assert validate_category(U).ok
    assert validate_functor(p).ok
    assert collage_iso_over(p)
    assert collage_iso_over(collage(companion(F))[1])


@pytest.mark.parametrize("which", ["hom", "companion"])
def test_collage_roundtrip(F, which):
    u = hom(simplex_category(2)) if which == "hom" else companion(F)
    assert collage_roundtrip_check(u)


def test_units_and_associator(F):
    u = companion(F)
    assert left_unit_iso(u)
    assert right_unit_iso(u)
    assert len(tensor_coend(hom(u.target), u).all_elements()) == 4
    assert associator_iso(hom(simplex_category(1)), u, hom(simplex_category(2)))


def test_companions_compose(F):
    G = constant_functor(simplex_category(1), terminal(), "*")
    assert companion_composite_iso(G, F)
    assert companion_composite_iso(identity_functor(F.target), F)


@pytest.mark.parametrize("n", [0, 1])
def test_coend_agrees_with_geometric_composite(n):
    C = simplex_category(n)
    result = tensor_equivalence_check(hom(C), hom(C))
    assert result, result.reason


def test_check_profunctor_map_reports_reason():
    u = hom(simplex_category(1))
    everything_to_one = {x: "id_0" for x in u.all_elements()}
    result = check_profunctor_map(u, u, everything_to_one)
    assert not result
    assert "over" in result.reason
