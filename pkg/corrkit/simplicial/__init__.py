from corrkit.simplicial.delta import DegeneracyWord, OperatorWord, normalize_word
from corrkit.simplicial.limits import (
    Colimit,
    Diagram,
    IsoResult,
    Pullback,
    colimit,
    compare_over,
    coproduct,
    factor_through,
    is_iso,
    product,
    pullback,
    pushout,
)
from corrkit.simplicial.maps import enumerate_maps, function_complex_level, iter_maps
from corrkit.simplicial.sset import (
    FiniteSimplicialSet,
    SimplexRef,
    SimplicialMap,
    compose,
    validate_map,
    validate_sset,
)
from corrkit.simplicial.standard import boundary, horn, simplex, standard_sset, to_point, yoneda


def enumerate_simplices(X: FiniteSimplicialSet, n: int):
    """X_n in Eilenberg-Zilber form."""
    return X.simplices(n)
