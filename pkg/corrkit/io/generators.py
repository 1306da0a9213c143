"""Seeded random instances that pass their validators by construction.

Every generator derives its own ``numpy.random.Generator`` from
``(seed, case, salt)``, so the same config always yields the same value,
independently of global random state and of the order generators run in.
"""
from dataclasses import dataclass, replace
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from corrkit import utils
from corrkit.categories.category import (
    FiniteCategory,
    FunctorData,
    compose_functors,
    constant_functor,
    free_category,
    identity_functor,
    poset,
    validate_functor,
)
from corrkit.categories.grothendieck import CatDiagram
from corrkit.categories.profunctor import Profunctor
from corrkit.correspondences.correspondence import Correspondence
from corrkit.errors import BudgetExceededError
from corrkit.simplicial.maps import iter_maps
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap
from corrkit.simplicial.standard import boundary, horn_face_id, simplex, yoneda

log = utils.get_logger(__name__)

STRATEGIES = ("mixed", "poset", "free")
ATTACH_BUDGET = 20_000
MAX_ATTEMPTS = 200


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    case: int = 0
    max_dim: int = 3
    max_cells: int = 10
    max_objects: int = 4
    max_arrows: int = 5
    max_elements: int = 3
    strategy: str = "mixed"

    def __post_init__(self):
        if not 0 <= self.max_dim <= 3:
            raise ValueError(f"max_dim must lie in 0..3, got {self.max_dim}")
        if self.max_cells < 1 or self.max_objects < 1:
            raise ValueError("max_cells and max_objects must be positive")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}, expected one of {STRATEGIES}")

    def rng(self, salt: int = 0) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence([self.seed, self.case, salt]))

    def for_case(self, case: int) -> "GenConfig":
        return replace(self, case=case)


def _dimension(rng: np.random.Generator, max_dim: int) -> int:
    """Attachment dimension in ``1..max_dim``, biased toward low dimensions."""
    weights = np.array([2.0 ** -m for m in range(1, max_dim + 1)])
    return int(rng.choice(np.arange(1, max_dim + 1), p=weights / weights.sum()))


def _attach(
    X: FiniteSimplicialSet,
    m: int,
    rng: np.random.Generator,
    over: Optional[Tuple[SimplicialMap, SimplicialMap]] = None,
) -> Optional[List[SimplexRef]]:
    """Faces for a new m-cell: a random map from ∂Δᵐ into ``X``, or None."""
    try:
        f = next(iter_maps(boundary(m), X, budget=ATTACH_BUDGET, over=over, rng=rng), None)
    except BudgetExceededError:
        return None
    if f is None:
        return None
    return [f(SimplexRef.of(horn_face_id(m, i))) for i in range(m + 1)]


# -------# Simplicial sets #-------- #
def gen_sset(cfg: GenConfig) -> FiniteSimplicialSet:
    """Random cell attachment along the current skeleton."""
    rng = cfg.rng(1)
    total = int(rng.integers(1, cfg.max_cells + 1))
    n_vertices = int(rng.integers(1, min(total, 4) + 1)) if cfg.max_dim > 0 else total
    cells: Dict[str, int] = {f"v{k}": 0 for k in range(n_vertices)}
    faces: Dict[str, List[SimplexRef]] = {}
    X = FiniteSimplicialSet(cells, faces)
    attempts = 0
    while len(cells) < total and attempts < MAX_ATTEMPTS:
        attempts += 1
        m = _dimension(rng, cfg.max_dim)
        attached = _attach(X, m, rng)
        if attached is None:
            continue
        cid = f"c{len(cells)}"
        cells[cid], faces[cid] = m, attached
        X = FiniteSimplicialSet(cells, faces)
    log.debug(f"Generated simplicial set {X.counts()} (seed={cfg.seed}, case={cfg.case})")
    return X


def gen_map_over(cfg: GenConfig, A: FiniteSimplicialSet) -> SimplicialMap:
    """A map into ``A``; each new cell picks the simplex it lies over first."""
    rng = cfg.rng(2)
    if not A.cells_of_dim(0):
        return SimplicialMap(FiniteSimplicialSet({}), A, {})
    total = int(rng.integers(1, cfg.max_cells + 1))
    cells: Dict[str, int] = {}
    faces: Dict[str, List[SimplexRef]] = {}
    image: Dict[str, SimplexRef] = {}
    for a in A.cells_of_dim(0):
        for _ in range(int(rng.integers(0, 3))):
            cid = f"v{len(cells)}"
            cells[cid], image[cid] = 0, SimplexRef.of(a)
    if not cells:
        a = A.cells_of_dim(0)[int(rng.integers(len(A.cells_of_dim(0))))]
        cells["v0"], image["v0"] = 0, SimplexRef.of(a)
    X = FiniteSimplicialSet(cells, faces)
    attempts = 0
    while len(cells) < total and attempts < MAX_ATTEMPTS and cfg.max_dim > 0:
        attempts += 1
        m = _dimension(rng, cfg.max_dim)
        candidates = A.simplices(m)
        tau = candidates[int(rng.integers(len(candidates)))]
        to_tau = yoneda(A, tau)
        dA = boundary(m)
        p_boundary = SimplicialMap(dA, A, {c: to_tau(SimplexRef.of(c)) for c in dA.cells})
        attached = _attach(X, m, rng, over=(p_boundary, SimplicialMap(X, A, image)))
        if attached is None:
            continue
        cid = f"c{len(cells)}"
        cells[cid], faces[cid], image[cid] = m, attached, tau
        X = FiniteSimplicialSet(cells, faces)
    log.debug(f"Generated map over {A!r} with total space {X.counts()}")
    return SimplicialMap(X, A, image)


def gen_correspondence(cfg: GenConfig, n: int) -> Correspondence:
    p = gen_map_over(cfg, simplex(n))
    return Correspondence(p.source, n, p)


# -------# Categories #-------- #
def _dag_edges(rng: np.random.Generator, n: int, max_edges: int, density: float = 0.5) -> List[Tuple[int, int]]:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = [pair for pair in pairs if rng.random() < density]
    if len(chosen) > max_edges:
        keep = sorted(rng.choice(len(chosen), size=max_edges, replace=False))
        chosen = [chosen[k] for k in keep]
    return chosen


def _strategy(cfg: GenConfig, rng: np.random.Generator) -> str:
    if cfg.strategy != "mixed":
        return cfg.strategy
    return "poset" if rng.random() < 0.5 else "free"


def gen_category(cfg: GenConfig, salt: int = 3) -> FiniteCategory:
    """A finite poset or the free category on a small acyclic graph; objects ``"0".."n-1"``."""
    rng = cfg.rng(salt)
    n = int(rng.integers(1, cfg.max_objects + 1))
    objects = [str(i) for i in range(n)]
    kind = _strategy(cfg, rng)
    edges = _dag_edges(rng, n, cfg.max_arrows)
    if kind == "poset":
        C = poset(objects, [(str(i), str(j)) for i, j in edges])
    else:
        C = free_category(objects, {f"e{k}": (str(i), str(j)) for k, (i, j) in enumerate(edges)})
    log.debug(f"Generated {kind} category with {len(C.objects)} objects and {len(C.arrows)} arrows")
    return C


def _is_thin(C: FiniteCategory) -> bool:
    return all(len(C.hom(a, b)) <= 1 for a in C.objects for b in C.objects)


def _generators(C: FiniteCategory) -> List[str]:
    """Non-identity arrows no composite of two non-identities produces."""
    composites = {h for (g, f), h in C.comp.items() if not C.is_identity(g) and not C.is_identity(f)}
    return [f for f in C.non_identity_arrows() if f not in composites]


def _fill_composites(C: FiniteCategory, values: Dict, combine: Callable) -> Dict:
    """Extends ``values`` from generating arrows to all of ``C`` through one factorization each."""
    pending = [f for f in C.non_identity_arrows() if f not in values]
    while pending:
        rest = []
        for h in pending:
            split = next(
                (
                    (g, f)
                    for (g, f), k in C.comp.items()
                    if k == h and g in values and f in values and not C.is_identity(g) and not C.is_identity(f)
                ),
                None,
            )
            if split is None:
                rest.append(h)
            else:
                values[h] = combine(values[split[0]], values[split[1]])
        if len(rest) == len(pending):
            raise ValueError("arrows are not generated by the given edges")
        pending = rest
    return values


def _extend(C: FiniteCategory, D: FiniteCategory, objects: Dict[str, str], edges: Dict[str, str]) -> FunctorData:
    arrows = {C.ids[a]: D.ids[objects[a]] for a in C.objects}
    arrows.update(edges)
    return FunctorData(C, D, objects, _fill_composites(C, arrows, lambda g, f: D.comp[(g, f)]))


def gen_functor(cfg: GenConfig, C: FiniteCategory, D: FiniteCategory, salt: int = 4) -> FunctorData:
    """A functor ``C -> D`` out of an acyclic category.

    Objects are placed in topological order so every generating arrow has
    somewhere to go; when no placement works, or parallel composites
    disagree, the constant functor is returned.
    """
    rng = cfg.rng(salt)
    generators = _generators(C)
    below = {b: sum(1 for a in C.objects if a != b and C.hom(a, b)) for b in C.objects}
    order = sorted(C.objects, key=lambda b: (below[b], b))
    fallback = constant_functor(C, D, D.objects[int(rng.integers(len(D.objects)))])
    objects: Dict[str, str] = {}
    for b in order:
        incoming = [f for f in generators if C.tgt(f) == b]
        options = [d for d in D.objects if all(D.hom(objects[C.src(f)], d) for f in incoming)]
        if not options:
            return fallback
        objects[b] = options[int(rng.integers(len(options)))]
    edges = {}
    for f in generators:
        hom = D.hom(objects[C.src(f)], objects[C.tgt(f)])
        edges[f] = hom[int(rng.integers(len(hom)))]
    try:
        F = _extend(C, D, objects, edges)
    except ValueError:
        return fallback
    return F if validate_functor(F).ok else fallback


def gen_profunctor(cfg: GenConfig, C: FiniteCategory, D: FiniteCategory, salt: int = 5) -> Profunctor:
    """``u: C -|-> D``.

    ``free``: a coproduct of ``D(d_k, -) × C(-, c_k)``, element ``(g, f)``
    named ``x{k}[g|f]``.  ``poset`` (thin categories only): the relation
    generated by the pairs ``(c_k, d_k)``, one element ``r[c,d]`` per pair.
    """
    rng = cfg.rng(salt)
    k_max = int(rng.integers(1, cfg.max_elements + 1))
    seeds = [
        (C.objects[int(rng.integers(len(C.objects)))], D.objects[int(rng.integers(len(D.objects)))])
        for _ in range(k_max)
    ]
    kind = _strategy(cfg, rng)
    if kind == "poset" and _is_thin(C) and _is_thin(D):
        related = {
            (c, d)
            for c_k, d_k in seeds
            for c in C.objects
            if C.hom(c, c_k)
            for d in D.objects
            if D.hom(d_k, d)
        }
        name = {cd: f"r[{cd[0]},{cd[1]}]" for cd in related}
        elements = {cd: [x] for cd, x in name.items()}
        lact = {(g, name[(c, D.src(g))]): name[(c, D.tgt(g))] for (c, d) in related for g in D.out_of(d)}
        ract = {(name[(C.tgt(f), d)], f): name[(C.src(f), d)] for (c, d) in related for f in C.into(c)}
        return Profunctor(C, D, elements, lact, ract)

    elements: Dict[Tuple[str, str], List[str]] = {}
    data: Dict[str, Tuple[int, str, str]] = {}
    for k, (c_k, d_k) in enumerate(seeds):
        for g in D.out_of(d_k):
            for f in C.into(c_k):
                x = f"x{k}[{g}|{f}]"
                elements.setdefault((C.src(f), D.tgt(g)), []).append(x)
                data[x] = (k, g, f)
    lact, ract = {}, {}
    for x, (k, g, f) in data.items():
        for h in D.out_of(D.tgt(g)):
            lact[(h, x)] = f"x{k}[{D.comp[(h, g)]}|{f}]"
        for e in C.into(C.src(f)):
            ract[(x, e)] = f"x{k}[{g}|{C.comp[(f, e)]}]"
    return Profunctor(C, D, elements, lact, ract)


def gen_cat_diagram(cfg: GenConfig, A: Optional[FiniteCategory] = None) -> CatDiagram:
    """Random posets over a free base ``A``, monotone maps along its edges, composites by composition."""
    if A is None:
        A = gen_category(replace(cfg, strategy="free"), salt=7)
    small = replace(cfg, strategy="poset", max_objects=max(1, min(cfg.max_objects, 3)))
    categories = {a: gen_category(small.for_case(cfg.case * 1000 + k), salt=8) for k, a in enumerate(A.objects)}
    functors: Dict[str, FunctorData] = {A.ids[a]: identity_functor(categories[a]) for a in A.objects}
    for k, e in enumerate(_generators(A)):
        s, t = A.arrows[e]
        functors[e] = gen_functor(cfg.for_case(cfg.case * 1000 + k), categories[s], categories[t], salt=9)
    _fill_composites(A, functors, compose_functors)
    return CatDiagram(A, categories, functors)
