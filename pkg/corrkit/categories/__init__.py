from typing import Union

from corrkit.categories.category import (
    FiniteCategory,
    FunctorData,
    arrow_category,
    compose_functors,
    constant_functor,
    discrete,
    fiber_category,
    free_category,
    full_subcategory,
    identity_functor,
    is_isomorphism,
    poset,
    simplex_category,
    terminal,
    validate_category,
    validate_functor,
)
from corrkit.categories.grothendieck import CatDiagram, grothendieck, is_grothendieck_fibration
from corrkit.categories.lax import (
    LaxProfDiagram,
    classifying_diagram_cat,
    companion_diagram,
    dcolim_prof,
    gro_vs_dcolim,
    lax_roundtrip_check,
    profunctor_diagram,
    roundtrip_cat,
)
from corrkit.categories.nerve import fundamental_category, nerve, nerve_map
from corrkit.categories.profunctor import (
    Profunctor,
    associator_iso,
    check_profunctor_map,
    collage,
    collage_iso_over,
    collage_roundtrip_check,
    companion,
    companion_composite_iso,
    from_collage,
    hom,
    left_unit_iso,
    right_unit_iso,
    tensor_coend,
    tensor_equivalence_check,
    tensor_geometric,
    validate_profunctor,
)
from corrkit.errors import ValidationReport

CatData = Union[FiniteCategory, FunctorData, Profunctor, LaxProfDiagram, CatDiagram]


def validate_cat_data(x: CatData) -> ValidationReport:
    """Exhaustive axiom check; the report is empty iff ``x`` is valid."""
    if isinstance(x, FiniteCategory):
        return validate_category(x)
    if isinstance(x, FunctorData):
        report = ValidationReport()
        report.extend(validate_category(x.source), prefix="source")
        report.extend(validate_category(x.target), prefix="target")
        if report.ok:
            report.extend(validate_functor(x))
        return report
    if isinstance(x, Profunctor):
        return validate_profunctor(x)
    if isinstance(x, (LaxProfDiagram, CatDiagram)):
        return x.validate()
    raise TypeError(f"no validator for {type(x).__name__}")
