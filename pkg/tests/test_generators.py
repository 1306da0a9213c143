import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corrkit.categories.category import validate_category, validate_functor
from corrkit.categories.profunctor import validate_profunctor
from corrkit.io import (
    GenConfig,
    gen_cat_diagram,
    gen_category,
    gen_correspondence,
    gen_functor,
    gen_map_over,
    gen_profunctor,
    gen_sset,
)
from corrkit.io.workspace import validate_value
from corrkit.simplicial.standard import simplex

seeds = st.integers(min_value=0, max_value=2**16)
cases = st.integers(min_value=0, max_value=50)


def test_same_config_same_value():
    cfg = GenConfig(seed=7, case=3)
    assert gen_sset(cfg) == gen_sset(cfg)
    assert gen_category(cfg) == gen_category(cfg)
    assert gen_map_over(cfg, simplex(1)) == gen_map_over(cfg, simplex(1))


def test_config_bounds():
    with pytest.raises(ValueError):
        GenConfig(max_dim=4)
    with pytest.raises(ValueError):
        GenConfig(strategy="random")
    assert GenConfig(seed=1).for_case(5) == GenConfig(seed=1, case=5)


@settings(max_examples=25, deadline=None)
@given(seed=seeds, case=cases)
def test_generated_simplicial_values_are_valid(seed, case):
    cfg = GenConfig(seed=seed, case=case, max_cells=6)
    X = gen_sset(cfg)
    assert 1 <= len(X) <= 6
    assert validate_value(X).ok
    assert validate_value(gen_map_over(cfg, X)).ok
    assert gen_correspondence(cfg, 1).n == 1


@settings(max_examples=25, deadline=None)
@given(seed=seeds, case=cases, strategy=st.sampled_from(["mixed", "poset", "free"]))
def test_generated_categorical_values_are_valid(seed, case, strategy):
    cfg = GenConfig(seed=seed, case=case, strategy=strategy, max_objects=3)
    C, D = gen_category(cfg, salt=10), gen_category(cfg)
    assert validate_category(C).ok and validate_category(D).ok
    assert validate_functor(gen_functor(cfg, C, D)).ok
    assert validate_profunctor(gen_profunctor(cfg, C, D)).ok
    assert gen_cat_diagram(cfg).validate().ok
