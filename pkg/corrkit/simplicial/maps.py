"""Backtracking enumeration of simplicial maps between finite simplicial sets."""
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from corrkit import utils
from corrkit.errors import BudgetExceededError
from corrkit.simplicial.limits import is_iso, product
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap
from corrkit.simplicial.standard import simplex

log = utils.get_logger(__name__)

DEFAULT_BUDGET = 1_000_000


class _Counter:
    def __init__(self, budget: Optional[int]):
        self.budget = budget
        self.spent = 0

    def charge(self, amount: int = 1) -> None:
        self.spent += amount
        if self.budget is not None and self.spent > self.budget:
            raise BudgetExceededError(self.budget)


def _candidate_index(T: FiniteSimplicialSet, n: int, pT: Optional[SimplicialMap]) -> Dict[Tuple, List[SimplexRef]]:
    index: Dict[Tuple, List[SimplexRef]] = {}
    for y in T.simplices(n):
        faces = tuple(T.face(y, i) for i in range(n + 1)) if n > 0 else ()
        over = pT(y) if pT is not None else None
        index.setdefault((faces, over), []).append(y)
    return index


def iter_maps(
    S: FiniteSimplicialSet,
    T: FiniteSimplicialSet,
    budget: Optional[int] = DEFAULT_BUDGET,
    over: Optional[Tuple[SimplicialMap, SimplicialMap]] = None,
    rng: Optional[np.random.Generator] = None,
    fixed: Optional[Dict[str, SimplexRef]] = None,
) -> Iterator[SimplicialMap]:
    """Yields every map ``S -> T`` (over ``A`` when ``over = (pS, pT)`` is given).

    Cells are assigned in dimension order; candidates for a cell are the
    simplices of ``T`` whose faces equal the images already chosen for its
    faces.  ``budget`` bounds the number of candidate assignments tried,
    and ``rng`` shuffles candidates so the first map yielded is random.
    """
    pS, pT = over if over is not None else (None, None)
    counter = _Counter(budget)
    cells = list(S.cells)
    fixed = dict(fixed or {})
    indices: Dict[int, Dict[Tuple, List[SimplexRef]]] = {}
    assignment: Dict[str, SimplexRef] = {}

    def image(face: SimplexRef) -> SimplexRef:
        y = assignment[face.cell]
        return T.apply_word(y, face.word)

    def candidates(c: str) -> List[SimplexRef]:
        n = S.dim_of(c)
        if n not in indices:
            indices[n] = _candidate_index(T, n, pT)
        faces = tuple(image(face) for face in S.faces_of(c))
        over_c = pS.assignment[c] if pS is not None else None
        found = indices[n].get((faces, over_c), [])
        if c in fixed:
            found = [y for y in found if y == fixed[c]]
        if rng is not None and len(found) > 1:
            found = [found[k] for k in rng.permutation(len(found))]
        return found

    def search(k: int) -> Iterator[SimplicialMap]:
        if k == len(cells):
            yield SimplicialMap(S, T, dict(assignment))
            return
        c = cells[k]
        for y in candidates(c):
            counter.charge()
            assignment[c] = y
            yield from search(k + 1)
        assignment.pop(c, None)

    yield from search(0)


def enumerate_maps(
    S: FiniteSimplicialSet,
    T: FiniteSimplicialSet,
    budget: Optional[int] = DEFAULT_BUDGET,
    over: Optional[Tuple[SimplicialMap, SimplicialMap]] = None,
) -> List[SimplicialMap]:
    maps = list(iter_maps(S, T, budget=budget, over=over))
    log.debug(f"enumerated {len(maps)} maps {S!r} -> {T!r}")
    return maps


def count_maps(S, T, budget=DEFAULT_BUDGET, over=None) -> int:
    return sum(1 for _ in iter_maps(S, T, budget=budget, over=over))


def function_complex_level(
    X: FiniteSimplicialSet, Y: FiniteSimplicialSet, n: int, budget: Optional[int] = DEFAULT_BUDGET
) -> List[SimplicialMap]:
    """The n-simplices of the function complex: all maps ``X × Δⁿ -> Y``."""
    P = product(X, simplex(n))
    return enumerate_maps(P.obj, Y, budget=budget)


def find_iso_bruteforce(
    X: FiniteSimplicialSet, Y: FiniteSimplicialSet, budget: Optional[int] = DEFAULT_BUDGET
) -> Optional[SimplicialMap]:
    """Exhaustive isomorphism search; only meant as an oracle for tests."""
    if X.counts() != Y.counts():
        return None
    for f in iter_maps(X, Y, budget=budget):
        if is_iso(f):
            return f
    return None
