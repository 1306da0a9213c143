import numpy as np
import pytest

from corrkit.errors import BudgetExceededError
from corrkit.simplicial.maps import count_maps, enumerate_maps, find_iso_bruteforce, function_complex_level, iter_maps
from corrkit.simplicial.sset import SimplexRef, validate_map
from corrkit.simplicial.standard import boundary, horn, simplex, to_point


@pytest.mark.parametrize("n", [0, 1, 2])
def test_level_maps_from_a_point_are_simplices(n):
    Y = simplex(2)
    assert len(function_complex_level(simplex(0), Y, n)) == len(Y.simplices(n))


def test_endomaps_of_an_interval():
    maps = function_complex_level(simplex(1), simplex(1), 0)
    assert len(maps) == 3
    assert all(validate_map(f).ok for f in maps)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_terminal_target(n):
    assert len(function_complex_level(horn(2, 1), simplex(0), n)) == 1


def test_maps_into_a_simplex_are_monotone_sequences():
    # maps Δ¹ -> Δ² are pairs a <= b in [2]
    assert count_maps(simplex(1), simplex(2)) == 6
    assert count_maps(boundary(2), simplex(1)) == count_maps(simplex(2), simplex(1)) == 4


def test_maps_over_a_base():
    X = simplex(1)
    over = (to_point(X), to_point(simplex(1)))
    assert len(enumerate_maps(X, simplex(1), over=over)) == 3


def test_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        count_maps(simplex(2), simplex(3), budget=1)


def test_fixed_cells_and_random_order():
    rng = np.random.default_rng(0)
    maps = list(iter_maps(simplex(1), simplex(2), rng=rng, fixed={"0": SimplexRef.of("1")}))
    assert len(maps) == 2
    assert all(f.assignment["0"].cell == "1" for f in maps)


def test_bruteforce_isomorphism():
    assert find_iso_bruteforce(simplex(2), simplex(2)) is not None
    assert find_iso_bruteforce(boundary(2), horn(2, 1)) is None
