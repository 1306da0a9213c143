import pytest

from corrkit.categories.category import (
    FunctorData,
    constant_functor,
    identity_functor,
    simplex_category,
    terminal,
    validate_category,
)
from corrkit.categories.grothendieck import CatDiagram
from corrkit.categories.lax import (
    classifying_diagram_cat,
    companion_diagram,
    dcolim_prof,
    gro_vs_dcolim,
    lax_roundtrip_check,
    profunctor_diagram,
    roundtrip_cat,
)
from corrkit.categories.profunctor import companion, hom
from corrkit.errors import UnsupportedInputError, ValidationError


@pytest.fixture
def F():
    return FunctorData(
        simplex_category(2),
        simplex_category(1),
        {"0": "0", "1": "1", "2": "1"},
        {"id_0": "id_0", "id_1": "id_1", "id_2": "id_1", "0<1": "0<1", "0<2": "0<1", "1<2": "id_1"},
    )


def test_classifying_diagram(F):
    D = classifying_diagram_cat(F)
    assert D.validate().ok
    assert D.categories["1"].objects == ("1", "2")
    assert D.profunctors["0<1"].all_elements() == ["0<1", "0<2"]


def test_double_colimit_recovers_the_functor(F):
    Q, q = dcolim_prof(classifying_diagram_cat(F))
    assert len(Q.objects) == 3
    assert len(Q.arrows) == 6
    assert validate_category(Q).ok
    result = roundtrip_cat(F)
    assert result, result.reason


@pytest.mark.parametrize("which", ["hom", "companion"])
def test_profunctor_diagram_roundtrip(F, which):
    u = hom(simplex_category(1)) if which == "hom" else companion(F)
    D = profunctor_diagram(u)
    assert D.validate().ok
    Q, _ = dcolim_prof(D)
    assert len(Q.arrows) == len(u.source.arrows) + len(u.target.arrows) + len(u.all_elements())
    result = lax_roundtrip_check(D)
    assert result, result.reason


def test_grothendieck_agrees_with_double_colimit():
    C, P = simplex_category(1), terminal()
    diagram = CatDiagram(
        simplex_category(1),
        {"0": C, "1": P},
        {"id_0": identity_functor(C), "id_1": identity_functor(P), "0<1": constant_functor(C, P, "*")},
    )
    assert companion_diagram(diagram).validate().ok
    result = gro_vs_dcolim(diagram)
    assert result, result.reason


def test_double_colimit_needs_unitors(F):
    D = classifying_diagram_cat(F)
    D.unitors = {}
    with pytest.raises(UnsupportedInputError):
        dcolim_prof(D)


def test_double_colimit_rejects_missing_laxity(F):
    D = classifying_diagram_cat(F)
    table = D.mu[("0<1", "id_0")]
    table.pop(next(iter(table)))
    assert "missing-laxity" in D.validate().kinds()
    with pytest.raises(ValidationError):
        dcolim_prof(D)
