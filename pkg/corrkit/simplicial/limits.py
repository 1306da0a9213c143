"""Finite limits and colimits of simplicial sets, computed dimensionwise.

Limits enumerate compatible pairs of simplices and keep those whose
degeneracy sets are disjoint; colimits quotient the simplices of a disjoint
union with a union-find and read off nondegenerate classes.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from corrkit import utils
from corrkit.errors import ValidationError, ValidationReport
from corrkit.simplicial import delta
from corrkit.simplicial.delta import DegeneracyWord
from corrkit.simplicial.sset import (
    FiniteSimplicialSet,
    SimplexRef,
    SimplicialMap,
    compose,
    validate_map,
)
from corrkit.simplicial.standard import point, to_point
from corrkit.utils.union_find import UnionFind

log = utils.get_logger(__name__)


# -------# Limits #-------- #
def strip(X: FiniteSimplicialSet, x: SimplexRef, indices) -> SimplexRef:
    """Removes the degeneracies ``indices`` (a subset of the word of ``x``)."""
    for j in sorted(indices, reverse=True):
        x = X.face(x, j)
    return x


@dataclass
class Pullback:
    """``X ×_C Y`` for ``f: X -> C`` and ``g: Y -> C`` with its projections."""

    obj: FiniteSimplicialSet
    proj1: SimplicialMap
    proj2: SimplicialMap
    f: SimplicialMap = field(repr=False)
    g: SimplicialMap = field(repr=False)
    bound: int = 0

    def pair(self, x: SimplexRef, y: SimplexRef) -> SimplexRef:
        """The simplex ``(x, y)`` of the pullback, in normal form."""
        X, Y = self.f.source, self.g.source
        common = set(x.word.indices) & set(y.word.indices)
        x0, y0 = strip(X, x, common), strip(Y, y, common)
        return SimplexRef(DegeneracyWord(tuple(sorted(common, reverse=True))), pair_id(x0, y0))

    def lift(self, h: SimplicialMap, k: SimplicialMap) -> SimplicialMap:
        """The mediating map ``W -> X ×_C Y`` of a cone ``(h, k)``."""
        return SimplicialMap(h.source, self.obj, {c: self.pair(h.assignment[c], k.assignment[c]) for c in h.source.cells})


def pair_id(x: SimplexRef, y: SimplexRef) -> str:
    return f"({x},{y})"


def pullback(f: SimplicialMap, g: SimplicialMap) -> Pullback:
    X, Y = f.source, g.source
    if f.target != g.target:
        raise ValidationError("pullback needs maps with a common codomain")
    bound = X.dim + Y.dim if X.dim >= 0 and Y.dim >= 0 else -1
    cells, pending = {}, []
    for n in range(bound + 1):
        by_image: Dict[SimplexRef, List[SimplexRef]] = {}
        for y in Y.simplices(n):
            by_image.setdefault(g(y), []).append(y)
        for x in X.simplices(n):
            xs = set(x.word.indices)
            for y in by_image.get(f(x), ()):
                if xs.isdisjoint(y.word.indices):
                    cid = pair_id(x, y)
                    cells[cid] = n
                    pending.append((cid, x, y))

    result = Pullback(FiniteSimplicialSet(cells), None, None, f, g, bound)
    faces = {}
    for cid, x, y in pending:
        n = cells[cid]
        if n > 0:
            faces[cid] = [result.pair(X.face(x, i), Y.face(y, i)) for i in range(n + 1)]
    obj = FiniteSimplicialSet(cells, faces)
    result.obj = obj
    result.proj1 = SimplicialMap(obj, X, {cid: x for cid, x, _ in pending})
    result.proj2 = SimplicialMap(obj, Y, {cid: y for cid, _, y in pending})
    log.debug(f"pullback built with counts {obj.counts()} (bound {bound})")
    return result


def product(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> Pullback:
    """``X × Y`` as the pullback over Δ⁰; nondegenerate cells are shuffles."""
    return pullback(to_point(X), to_point(Y))


def product_map(P: Pullback, f: SimplicialMap, Q: Pullback, g: SimplicialMap) -> SimplicialMap:
    """``f × g: P -> Q`` for products ``P = X × Y`` and ``Q = X' × Y'``."""
    return Q.lift(compose(f, P.proj1), compose(g, P.proj2))


# -------# Colimits #-------- #
@dataclass
class Arrow:
    name: str
    src: str
    tgt: str
    map: SimplicialMap = field(repr=False)


@dataclass
class Diagram:
    """A finite diagram: objects, arrows and the composites it must respect.

    ``relations`` lists ``(first, second, composite)`` arrow names with
    ``composite = second . first``.
    """

    objects: Dict[str, FiniteSimplicialSet]
    arrows: List[Arrow] = field(default_factory=list)
    relations: List[Tuple[str, str, str]] = field(default_factory=list)

    def add_arrow(self, name: str, src: str, tgt: str, f: SimplicialMap) -> None:
        self.arrows.append(Arrow(name, src, tgt, f))

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        names = {}
        for arrow in self.arrows:
            names[arrow.name] = arrow
            if arrow.src not in self.objects or arrow.tgt not in self.objects:
                report.add("unknown-object", arrow.name, src=arrow.src, tgt=arrow.tgt)
                continue
            if arrow.map.source != self.objects[arrow.src] or arrow.map.target != self.objects[arrow.tgt]:
                report.add("endpoint-mismatch", arrow.name)
                continue
            report.extend(validate_map(arrow.map), prefix=arrow.name)
        for first, second, composite in self.relations:
            a, b, c = names.get(first), names.get(second), names.get(composite)
            if a is None or b is None or c is None:
                report.add("unknown-arrow", f"{second}.{first}", composite=composite)
                continue
            if compose(b.map, a.map).assignment != c.map.assignment:
                report.add("not-functorial", f"{second}.{first}", composite=composite)
        return report


@dataclass
class Colimit:
    obj: FiniteSimplicialSet
    cocone: Dict[str, SimplicialMap]
    bound: int

    def descend(self, maps: Mapping[str, SimplicialMap], target: Optional[FiniteSimplicialSet] = None) -> SimplicialMap:
        """The map out of the colimit induced by a compatible family ``maps``.

        Generators are named ``object:cell`` after their representative.
        """
        if target is None:
            target = next(iter(maps.values())).target if maps else point()
        assignment = {}
        for cid in self.obj.cells:
            name, cell = self._origin[cid]
            assignment[cid] = maps[name].assignment[cell]
        return SimplicialMap(self.obj, target, assignment)

    _origin: Dict[str, Tuple[str, str]] = field(default_factory=dict, repr=False)


def _node_key(order: Dict[str, int], name: str, x: SimplexRef):
    return (order[name], x.word.indices, x.cell)


def colimit(D: Diagram, validate: bool = True) -> Colimit:
    """Coequalizer of the two canonical maps between coproducts, dimensionwise.

    Nodes are simplices ``(object, s_I c)``.  A class is degenerate iff it
    holds a degenerate simplex, and such a simplex can only be reached from
    a nondegenerate one through a relation whose source simplex lies in the
    dimension range of its own object, so relations above that range are
    never needed.
    """
    if validate:
        report = D.validate()
        if not report.ok:
            raise ValidationError("diagram is not functorial", report)

    order = {name: k for k, name in enumerate(D.objects)}
    names = list(D.objects)
    bound = max((X.dim for X in D.objects.values()), default=-1)

    uf = UnionFind()
    for name, X in D.objects.items():
        for c in X.cells:
            uf.add(_node_key(order, name, SimplexRef.of(c)))
    for arrow in D.arrows:
        f = arrow.map
        for n in range(f.source.dim + 1):
            for x in f.source.simplices(n):
                uf.union(_node_key(order, arrow.src, x), _node_key(order, arrow.tgt, f(x)))

    classes = uf.classes()
    degenerate = {root: next((m for m in members if m[1]), None) for root, members in classes.items()}

    def decode(key) -> Tuple[str, SimplexRef]:
        return names[key[0]], SimplexRef(DegeneracyWord(key[1]), key[2])

    generators: Dict[Tuple, str] = {}
    cells, origin = {}, {}
    for root in sorted(classes):
        if degenerate[root] is None:
            name, x = decode(root)
            cid = f"{name}:{x.cell}"
            generators[root] = cid
            cells[cid] = D.objects[name].dim_of(x.cell)
            origin[cid] = (name, x.cell)

    memo: Dict[Tuple, SimplexRef] = {}

    def normal_form(key) -> SimplexRef:
        root = uf.find(key)
        hit = memo.get(root)
        if hit is not None:
            return hit
        if root in generators:
            result = SimplexRef.of(generators[root])
        else:
            # a class never touched by a relation is the lone degenerate simplex itself
            member = degenerate.get(root) or root
            name, x = decode(member)
            m = D.objects[name].dim_of(x.cell)
            base = normal_form(_node_key(order, name, SimplexRef.of(x.cell)))
            k = cells[base.cell]
            epi = delta.compose(base.word.surjection(k), x.word.surjection(m))
            result = SimplexRef(DegeneracyWord.from_surjection(epi), base.cell)
        memo[root] = result
        return result

    faces = {}
    for cid, (name, cell) in origin.items():
        X = D.objects[name]
        faces[cid] = [normal_form(_node_key(order, name, face)) for face in X.faces_of(cell)]
    obj = FiniteSimplicialSet(cells, faces)
    cocone = {
        name: SimplicialMap(X, obj, {c: normal_form(_node_key(order, name, SimplexRef.of(c))) for c in X.cells})
        for name, X in D.objects.items()
    }
    log.debug(f"colimit of {len(D.objects)} objects has counts {obj.counts()}")
    return Colimit(obj, cocone, bound, origin)


def pushout(f: SimplicialMap, g: SimplicialMap, names: Sequence[str] = ("C", "X", "Y")) -> Colimit:
    """``X ⊔_C Y`` for ``f: C -> X`` and ``g: C -> Y``."""
    if f.source != g.source:
        raise ValidationError("pushout needs maps with a common domain")
    apex, left, right = names
    D = Diagram({apex: f.source, left: f.target, right: g.target})
    D.add_arrow("f", apex, left, f)
    D.add_arrow("g", apex, right, g)
    return colimit(D)


def coproduct(*objects: FiniteSimplicialSet, names: Optional[Sequence[str]] = None) -> Colimit:
    names = list(names or (f"X{k}" for k in range(len(objects))))
    return colimit(Diagram(dict(zip(names, objects))))


# -------# Comparisons #-------- #
@dataclass
class IsoResult:
    verdict: bool
    witness: Optional[SimplicialMap] = None
    reason: str = ""

    def __bool__(self):
        return self.verdict


def is_iso(f: SimplicialMap) -> IsoResult:
    """Decides whether ``f`` is bijective on nondegenerate cells; the witness is the inverse."""
    S, T = f.source, f.target
    for m in range(max(S.dim, T.dim) + 1):
        if len(S.cells_of_dim(m)) != len(T.cells_of_dim(m)):
            return IsoResult(False, None, f"dimension {m}: {len(S.cells_of_dim(m))} cells vs {len(T.cells_of_dim(m))}")
    inverse = {}
    for c in S.cells:
        y = f.assignment[c]
        if y.is_degenerate:
            return IsoResult(False, None, f"cell {c} is sent to the degenerate simplex {y}")
        if y.cell in inverse:
            return IsoResult(False, None, f"cells {inverse[y.cell]} and {c} share the image {y.cell}")
        inverse[y.cell] = SimplexRef.of(c)
    g = SimplicialMap(T, S, inverse)
    if not validate_map(g).ok:
        return IsoResult(False, None, "inverse does not commute with faces")
    return IsoResult(True, g, "")


def image_index(j: SimplicialMap, n: int) -> Dict[SimplexRef, SimplexRef]:
    """``j(u) -> u`` on n-simplices; raises if ``j`` is not injective there."""
    index = {}
    for u in j.source.simplices(n):
        w = j(u)
        if w in index:
            raise ValidationError(f"map is not a monomorphism: {index[w]} and {u} both hit {w}")
        index[w] = u
    return index


def factor_through(h: SimplicialMap, j: SimplicialMap) -> Optional[SimplicialMap]:
    """The map ``k`` with ``j . k = h`` for a mono ``j``, or ``None`` if ``h`` leaves its image."""
    indices: Dict[int, Dict[SimplexRef, SimplexRef]] = {}
    assignment = {}
    for c in h.source.cells:
        w = h.assignment[c]
        n = h.target.simplex_dim(w)
        if n not in indices:
            indices[n] = image_index(j, n)
        u = indices[n].get(w)
        if u is None:
            return None
        assignment[c] = u
    return SimplicialMap(h.source, j.source, assignment)


def compare_over(j1: SimplicialMap, j2: SimplicialMap) -> IsoResult:
    """Whether two monos into a common ambient have the same image.

    The witness is the canonical comparison ``source(j1) -> source(j2)``.
    """
    forward = factor_through(j1, j2)
    if forward is None:
        return IsoResult(False, None, "first subobject is not contained in the second")
    result = is_iso(forward)
    if not result:
        return IsoResult(False, None, f"comparison is not an isomorphism: {result.reason}")
    return IsoResult(True, forward, "")
