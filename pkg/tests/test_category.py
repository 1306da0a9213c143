import pytest

from corrkit.categories import validate_cat_data
from corrkit.categories.category import (
    FiniteCategory,
    FunctorData,
    compose_functors,
    constant_functor,
    discrete,
    fiber_category,
    free_category,
    identity_functor,
    is_isomorphism,
    poset,
    simplex_category,
    terminal,
    validate_category,
    validate_functor,
)
from corrkit.errors import UnsupportedInputError, ValidationError
from corrkit.io import load_file


def collapse_top():
    """[2] -> [1] sending 1 and 2 to 1."""
    return FunctorData(
        simplex_category(2),
        simplex_category(1),
        {"0": "0", "1": "1", "2": "1"},
        {"id_0": "id_0", "id_1": "id_1", "id_2": "id_1", "0<1": "0<1", "0<2": "0<1", "1<2": "id_1"},
    )


def test_simplex_category_matches_fixture(fixtures_dir):
    C = load_file(fixtures_dir / "poset_2.json")
    assert C == simplex_category(2)
    assert validate_category(C).ok
    assert C.compose("1<2", "0<1") == "0<2"
    assert C.hom("0", "2") == ("0<2",)


def test_compose_rejects_non_composable():
    with pytest.raises(ValueError):
        simplex_category(2).compose("0<1", "1<2")


def test_builders_are_valid():
    for C in (terminal(), discrete(["a", "b"]), simplex_category(3), poset("abc", [("a", "c"), ("b", "c")])):
        assert validate_category(C).ok, C
    assert len(simplex_category(3).arrows) == 10


def test_poset_cycle():
    with pytest.raises(ValidationError) as e:
        poset(["a", "b"], [("a", "b"), ("b", "a")])
    assert e.value.report.kinds() == ["cycle"]


def test_free_category_paths():
    C = free_category(["a", "b", "c"], {"f": ("a", "b"), "g": ("b", "c")})
    assert validate_category(C).ok
    assert len(C.arrows) == 6
    assert C.compose("g", "f") == "f;g"
    assert C.non_identity_arrows() == ["f", "f;g", "g"]


def test_free_category_cycle():
    with pytest.raises(UnsupportedInputError):
        free_category(["a", "b"], {"f": ("a", "b"), "g": ("b", "a")})


def test_missing_composite():
    C = simplex_category(2)
    comp = dict(C.comp)
    del comp[("1<2", "0<1")]
    broken = FiniteCategory(C.objects, C.arrows, comp, C.ids)
    assert validate_category(broken).kinds() == ["missing-composite"]


def test_unit_law():
    C = free_category(["a", "b"], {"f": ("a", "b"), "g": ("a", "b")})
    comp = dict(C.comp)
    comp[("f", "id_a")] = "g"
    assert "unit-law" in validate_category(FiniteCategory(C.objects, C.arrows, comp, C.ids)).kinds()


def test_missing_identity():
    C = simplex_category(1)
    ids = dict(C.ids)
    ids["1"] = "nope"
    assert validate_category(FiniteCategory(C.objects, C.arrows, C.comp, ids)).kinds() == ["missing-identity"]


def test_functor_validation():
    F = collapse_top()
    assert validate_functor(F).ok
    assert not is_isomorphism(F)
    assert compose_functors(identity_functor(F.target), F) == F
    assert is_isomorphism(identity_functor(F.source))

    bad = FunctorData(F.source, F.target, F.objects, dict(F.arrows, **{"1<2": "0<1"}))
    assert validate_functor(bad).kinds() == ["endpoints"]
    unmapped = FunctorData(F.source, F.target, F.objects, {k: v for k, v in F.arrows.items() if k != "0<2"})
    assert validate_functor(unmapped).kinds() == ["unmapped-arrow"]


def test_constant_functor_is_valid():
    assert validate_functor(constant_functor(simplex_category(2), simplex_category(1), "1")).ok


def test_fiber_category():
    fiber = fiber_category(collapse_top(), "1")
    assert fiber.objects == ("1", "2")
    assert set(fiber.arrows) == {"id_1", "id_2", "1<2"}
    assert validate_category(fiber).ok


def test_validate_cat_data_prefixes_endpoints():
    F = collapse_top()
    comp = dict(F.source.comp)
    del comp[("1<2", "0<1")]
    broken = FunctorData(FiniteCategory(F.source.objects, F.source.arrows, comp, F.source.ids), F.target, F.objects, F.arrows)
    report = validate_cat_data(broken)
    assert [issue.where for issue in report.issues] == ["source/1<2.0<1"]
    assert validate_cat_data(F).ok
