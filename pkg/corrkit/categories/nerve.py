"""Nerves of finite categories and the fundamental category of a simplicial set."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from corrkit import utils
from corrkit.categories.category import FiniteCategory, FunctorData, _check_acyclic
from corrkit.errors import UnsupportedInputError
from corrkit.simplicial.delta import DegeneracyWord
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap
from corrkit.utils.union_find import UnionFind

log = utils.get_logger(__name__)

SEPARATOR = "|"


def string_ref(C: FiniteCategory, chain: Sequence[str], start: str) -> SimplexRef:
    """The simplex of the nerve named by a composable string, identities becoming degeneracies."""
    indices = [p for p, f in enumerate(chain) if C.is_identity(f)]
    kept = [f for f in chain if not C.is_identity(f)]
    cell = SEPARATOR.join(kept) if kept else start
    return SimplexRef(DegeneracyWord(tuple(sorted(indices, reverse=True))), cell)


def _strings(C: FiniteCategory, up_to: Optional[int]) -> Dict[Tuple[str, ...], int]:
    level = [(f,) for f in C.non_identity_arrows()]
    out: Dict[Tuple[str, ...], int] = {}
    n = 1
    while level and (up_to is None or n <= up_to):
        if up_to is None and n > len(C.objects):
            raise UnsupportedInputError("nerve is infinite (non-identity arrows compose in a loop); pass up_to")
        for chain in level:
            out[chain] = n
        level = [chain + (g,) for chain in level for g in C.out_of(C.tgt(chain[-1])) if not C.is_identity(g)]
        n += 1
    return out


def nerve(C: FiniteCategory, up_to: Optional[int] = None) -> FiniteSimplicialSet:
    """Nondegenerate n-cells are strings of ``n`` composable non-identity arrows.

    ``up_to`` truncates the dimension; without it the full nerve is built,
    which needs every string of non-identity arrows to be finite.
    """
    cells: Dict[str, int] = {a: 0 for a in C.objects}
    faces: Dict[str, List[SimplexRef]] = {}
    for chain, n in _strings(C, up_to).items():
        cid = SEPARATOR.join(chain)
        cells[cid] = n
        if n == 1:
            faces[cid] = [SimplexRef.of(C.tgt(chain[0])), SimplexRef.of(C.src(chain[0]))]
            continue
        fs = [string_ref(C, chain[1:], C.tgt(chain[0]))]
        for i in range(1, n):
            inner = chain[: i - 1] + (C.compose(chain[i], chain[i - 1]),) + chain[i + 1:]
            fs.append(string_ref(C, inner, C.src(chain[0])))
        fs.append(string_ref(C, chain[:-1], C.src(chain[0])))
        faces[cid] = fs
    X = FiniteSimplicialSet(cells, faces)
    log.debug(f"nerve has counts {X.counts()}")
    return X


def nerve_map(
    F: FunctorData, source: Optional[FiniteSimplicialSet] = None, target: Optional[FiniteSimplicialSet] = None
) -> SimplicialMap:
    """``N(F)``; the nerves may be passed in when they are already built."""
    NC = nerve(F.source) if source is None else source
    ND = nerve(F.target, up_to=max(NC.dim, 0)) if target is None else target
    C = F.source
    assignment = {}
    for c in NC.cells:
        if NC.dim_of(c) == 0:
            assignment[c] = SimplexRef.of(F.obj(c))
        else:
            chain = c.split(SEPARATOR)
            assignment[c] = string_ref(F.target, [F.arr(f) for f in chain], F.obj(C.src(chain[0])))
    return SimplicialMap(NC, ND, assignment)


# -------# Fundamental category #-------- #
@dataclass
class FundamentalCategory:
    """τ₁X: vertices, with paths of edges modulo the relations of 2-simplices."""

    category: FiniteCategory
    edge_arrow: Dict[str, str]
    _paths: Dict[Tuple[str, Tuple[str, ...]], str] = field(default_factory=dict, repr=False)

    def class_of(self, start: str, path: Sequence[str]) -> str:
        return self._paths[(start, tuple(path))]


def _edge_path(ref: SimplexRef) -> Tuple[str, ...]:
    return () if ref.is_degenerate else (ref.cell,)


def fundamental_category(X: FiniteSimplicialSet) -> FundamentalCategory:
    """Needs an acyclic graph of nondegenerate edges, so that every hom is finite."""
    vertices = list(X.cells_of_dim(0))
    edges = {e: (X.faces_of(e)[1].cell, X.faces_of(e)[0].cell) for e in X.cells_of_dim(1)}
    _check_acyclic(vertices, edges)

    by_source: Dict[str, List[str]] = {}
    for e, (s, _) in edges.items():
        by_source.setdefault(s, []).append(e)
    paths: Dict[Tuple[str, Tuple[str, ...]], Tuple[str, str]] = {}
    frontier = [(v, ()) for v in vertices]
    while frontier:
        nxt = []
        for start, path in frontier:
            end = edges[path[-1]][1] if path else start
            paths[(start, path)] = (start, end)
            nxt.extend((start, path + (e,)) for e in by_source.get(end, ()))
        frontier = nxt

    relations = []
    for t in X.cells_of_dim(2):
        d0, d1, d2 = X.faces_of(t)
        lhs, rhs = _edge_path(d1), _edge_path(d2) + _edge_path(d0)
        if lhs != rhs:
            relations.append((lhs, rhs))
            relations.append((rhs, lhs))

    uf = UnionFind()
    for key in paths:
        uf.add(key)
    for (start, path) in paths:
        for old, new in relations:
            if not old:
                continue
            width = len(old)
            for i in range(len(path) - width + 1):
                if path[i:i + width] == old:
                    uf.union((start, path), (start, path[:i] + new + path[i + width:]))

    names: Dict[Tuple, str] = {}
    for root, members in uf.classes().items():
        start = root[0]
        if any(not path for _, path in members):
            names[root] = f"id_{start}"
        else:
            rep = min((path for _, path in members), key=lambda p: (len(p), p))
            names[root] = ";".join(rep)
    labels = {key: names[uf.find(key)] for key in paths}

    arrows = {labels[key]: st for key, st in paths.items()}
    comp = {}
    reps = {}
    for key in paths:
        reps.setdefault(labels[key], key)
    for f, (start, p) in reps.items():
        end = paths[(start, p)][1]
        for g, (start2, q) in reps.items():
            if start2 == end:
                comp[(g, f)] = labels[(start, p + q)]
    category = FiniteCategory(vertices, arrows, comp, {v: f"id_{v}" for v in vertices})
    log.debug(f"fundamental category with {len(vertices)} objects and {len(arrows)} arrows")
    return FundamentalCategory(category, {e: labels[(edges[e][0], (e,))] for e in edges}, labels)
