"""Profunctors as two-sided action tables, their collages and the ways to compose them.

Element ids are unique across a whole profunctor, so an element knows the
pair ``(c, d)`` it lives over.  Action tables only list non-identity arrows;
identities act trivially.
"""
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from corrkit import utils
from corrkit.categories.category import (
    FiniteCategory,
    FunctorData,
    arrow_category,
    compose_functors,
    full_subcategory,
    subcategory_over,
    validate_category,
    validate_functor,
)
from corrkit.categories.nerve import fundamental_category, nerve, nerve_map
from corrkit.errors import ValidationReport
from corrkit.simplicial.limits import pushout
from corrkit.utils.union_find import UnionFind

log = utils.get_logger(__name__)

Pair = Tuple[str, str]


class Profunctor:
    """``u: C -|-> D``, a functor ``Cᵒᵖ × D -> Set``.

    Args:
        source: ``C``, acting on the right.
        target: ``D``, acting on the left.
        elements: ``(c, d) -> element ids``.
        lact: ``(g, x) -> g . x`` for ``g: d -> d'`` in ``D``.
        ract: ``(x, f) -> x . f`` for ``f: c' -> c`` in ``C``.
    """

    def __init__(
        self,
        source: FiniteCategory,
        target: FiniteCategory,
        elements: Mapping[Pair, Iterable[str]],
        lact: Mapping[Pair, str],
        ract: Mapping[Pair, str],
    ):
        self.source = source
        self.target = target
        self.elements: Dict[Pair, Tuple[str, ...]] = {}
        for (c, d), xs in sorted(elements.items()):
            xs = tuple(sorted(str(x) for x in xs))
            if xs:
                self.elements[(str(c), str(d))] = xs
        self.where: Dict[str, Pair] = {x: cd for cd, xs in self.elements.items() for x in xs}
        self.lact = {(str(g), str(x)): str(y) for (g, x), y in sorted(lact.items()) if not target.is_identity(g)}
        self.ract = {(str(x), str(f)): str(y) for (x, f), y in sorted(ract.items()) if not source.is_identity(f)}

    def at(self, c: str, d: str) -> Tuple[str, ...]:
        return self.elements.get((c, d), ())

    def all_elements(self) -> List[str]:
        return sorted(self.where)

    def left(self, g: str, x: str) -> str:
        """``g . x``."""
        return x if self.target.is_identity(g) else self.lact[(g, x)]

    def right(self, x: str, f: str) -> str:
        """``x . f``."""
        return x if self.source.is_identity(f) else self.ract[(x, f)]

    def __eq__(self, other):
        if not isinstance(other, Profunctor):
            return NotImplemented
        return (self.source, self.target, self.elements, self.lact, self.ract) == (
            other.source,
            other.target,
            other.elements,
            other.lact,
            other.ract,
        )

    __hash__ = None

    def __repr__(self):
        return f"Profunctor({self.source!r} -|-> {self.target!r}, {len(self.where)} elements)"


def validate_profunctor(u: Profunctor) -> ValidationReport:
    report = ValidationReport()
    report.extend(validate_category(u.source), prefix="source")
    report.extend(validate_category(u.target), prefix="target")
    if not report.ok:
        return report
    C, D = u.source, u.target
    seen: Dict[str, Pair] = {}
    for (c, d), xs in u.elements.items():
        if c not in C.objects or d not in D.objects:
            report.add("unknown-object", f"({c},{d})")
        for x in xs:
            if x in seen:
                report.add("duplicate-element", x, first=str(seen[x]), second=str((c, d)))
            seen[x] = (c, d)
    if not report.ok:
        return report

    for x, (c, d) in u.where.items():
        for g in D.out_of(d):
            if D.is_identity(g):
                continue
            y = u.lact.get((g, x))
            if y is None:
                report.add("missing-left-action", f"{g}.{x}")
            elif u.where.get(y) != (c, D.tgt(g)):
                report.add("left-action-endpoints", f"{g}.{x}", image=y)
        for f in C.into(c):
            if C.is_identity(f):
                continue
            y = u.ract.get((x, f))
            if y is None:
                report.add("missing-right-action", f"{x}.{f}")
            elif u.where.get(y) != (C.src(f), d):
                report.add("right-action-endpoints", f"{x}.{f}", image=y)
    for g, x in u.lact:
        if g not in D.arrows or x not in u.where:
            report.add("stray-left-action", f"{g}.{x}")
    for x, f in u.ract:
        if f not in C.arrows or x not in u.where:
            report.add("stray-right-action", f"{x}.{f}")
    if not report.ok:
        return report

    for x, (c, d) in u.where.items():
        for g in D.out_of(d):
            for h in D.out_of(D.tgt(g)):
                if u.left(h, u.left(g, x)) != u.left(D.comp[(h, g)], x):
                    report.add("left-action-composition", f"{h}.{g}.{x}")
        for f in C.into(c):
            for k in C.into(C.src(f)):
                if u.right(u.right(x, f), k) != u.right(x, C.comp[(f, k)]):
                    report.add("right-action-composition", f"{x}.{f}.{k}")
            for g in D.out_of(d):
                if u.right(u.left(g, x), f) != u.left(g, u.right(x, f)):
                    report.add("actions-commute", f"{g}.{x}.{f}")
    return report


# -------# Basic profunctors #-------- #
def hom(C: FiniteCategory) -> Profunctor:
    """``C(-, -)``, the unit for composition."""
    elements: Dict[Pair, List[str]] = {}
    for f, st in C.arrows.items():
        elements.setdefault(st, []).append(f)
    table = {(g, f): C.comp[(g, f)] for g, f in C.composable_pairs()}
    return Profunctor(C, C, elements, table, table)


def companion_element(g: str, c: str) -> str:
    return f"{g}@{c}"


def companion(F: FunctorData) -> Profunctor:
    """``F*(c, d) = D(Fc, d)``; the element ``g: Fc -> d`` is named ``g@c``."""
    C, D = F.source, F.target
    elements: Dict[Pair, List[str]] = {}
    lact, ract = {}, {}
    for c in C.objects:
        for g in D.out_of(F.obj(c)):
            x = companion_element(g, c)
            elements.setdefault((c, D.tgt(g)), []).append(x)
            for h in D.out_of(D.tgt(g)):
                lact[(h, x)] = companion_element(D.comp[(h, g)], c)
    for f in C.arrows:
        for g in D.out_of(F.obj(C.tgt(f))):
            ract[(companion_element(g, C.tgt(f)), f)] = companion_element(D.comp[(g, F.arr(f))], C.src(f))
    return Profunctor(C, D, elements, lact, ract)


# -------# Collages #-------- #
def collage(u: Profunctor) -> Tuple[FiniteCategory, FunctorData]:
    """``C ⊔ D`` with one extra arrow ``x: c -> d`` per element, over ``[1]``.

    Objects are ``0:c`` and ``1:d``; arrows ``0:f``, ``1:g`` and ``x:x``.
    """
    C, D = u.source, u.target
    I = arrow_category()
    cross = I.non_identity_arrows()[0]
    objects = [f"0:{c}" for c in C.objects] + [f"1:{d}" for d in D.objects]
    arrows, over, comp = {}, {}, {}
    for side, K in (("0", C), ("1", D)):
        for f, (s, t) in K.arrows.items():
            arrows[f"{side}:{f}"] = (f"{side}:{s}", f"{side}:{t}")
            over[f"{side}:{f}"] = I.ids[side]
        for (g, f), h in K.comp.items():
            comp[(f"{side}:{g}", f"{side}:{f}")] = f"{side}:{h}"
    for x, (c, d) in u.where.items():
        arrows[f"x:{x}"] = (f"0:{c}", f"1:{d}")
        over[f"x:{x}"] = cross
        for g in D.out_of(d):
            comp[(f"1:{g}", f"x:{x}")] = f"x:{u.left(g, x)}"
        for f in C.into(c):
            comp[(f"x:{x}", f"0:{f}")] = f"x:{u.right(x, f)}"
    ids = {f"0:{c}": f"0:{C.ids[c]}" for c in C.objects}
    ids.update({f"1:{d}": f"1:{D.ids[d]}" for d in D.objects})
    U = FiniteCategory(objects, arrows, comp, ids)
    p = FunctorData(U, I, {o: o.split(":", 1)[0] for o in objects}, over)
    log.debug(f"collage with {len(objects)} objects and {len(arrows)} arrows")
    return U, p


def from_collage(p: FunctorData) -> Profunctor:
    """The fibers over ``0`` and ``1``, with the arrows over ``0 -> 1`` as elements."""
    I, U = p.target, p.source
    cross = I.non_identity_arrows()[0]
    zero, one = I.arrows[cross]
    C = subcategory_over(p, [zero], [I.ids[zero]])
    D = subcategory_over(p, [one], [I.ids[one]])
    elements: Dict[Pair, List[str]] = {}
    lact, ract = {}, {}
    for x, (c, d) in U.arrows.items():
        if p.arr(x) != cross:
            continue
        elements.setdefault((c, d), []).append(x)
        for g in D.out_of(d):
            lact[(g, x)] = U.comp[(g, x)]
        for f in C.into(c):
            ract[(x, f)] = U.comp[(x, f)]
    return Profunctor(C, D, elements, lact, ract)


def _unprefix(name: str) -> str:
    return name.split(":", 1)[1]


def strip_collage_names(u: Profunctor) -> Profunctor:
    """Undoes the ``0:``, ``1:`` and ``x:`` prefixes that ``collage`` puts on names."""
    C = u.source.rename({a: _unprefix(a) for a in u.source.objects}, {f: _unprefix(f) for f in u.source.arrows})
    D = u.target.rename({a: _unprefix(a) for a in u.target.objects}, {f: _unprefix(f) for f in u.target.arrows})
    return Profunctor(
        C,
        D,
        {(_unprefix(c), _unprefix(d)): [_unprefix(x) for x in xs] for (c, d), xs in u.elements.items()},
        {(_unprefix(g), _unprefix(x)): _unprefix(y) for (g, x), y in u.lact.items()},
        {(_unprefix(x), _unprefix(f)): _unprefix(y) for (x, f), y in u.ract.items()},
    )


# -------# Comparisons #-------- #
@dataclass
class ProfunctorIso:
    verdict: bool
    mapping: Optional[Dict[str, str]] = None
    reason: str = ""

    def __bool__(self):
        return self.verdict


def check_profunctor_map(u: Profunctor, v: Profunctor, phi: Mapping[str, str]) -> ProfunctorIso:
    """Whether ``phi`` is an isomorphism ``u ≅ v`` between profunctors on the same categories."""
    if u.source != v.source or u.target != v.target:
        return ProfunctorIso(False, None, "profunctors are not between the same categories")
    for x, cd in u.where.items():
        y = phi.get(x)
        if y is None:
            return ProfunctorIso(False, None, f"element {x} is not mapped")
        if v.where.get(y) != cd:
            return ProfunctorIso(False, None, f"{x} over {cd} is sent to {y} over {v.where.get(y)}")
    if len({phi[x] for x in u.where}) != len(u.where) or len(u.where) != len(v.where):
        return ProfunctorIso(False, None, f"not a bijection: {len(u.where)} vs {len(v.where)} elements")
    for (g, x), y in u.lact.items():
        if phi[y] != v.left(g, phi[x]):
            return ProfunctorIso(False, None, f"left action of {g} on {x} is not preserved")
    for (x, f), y in u.ract.items():
        if phi[y] != v.right(phi[x], f):
            return ProfunctorIso(False, None, f"right action of {f} on {x} is not preserved")
    return ProfunctorIso(True, dict(phi), "")


def collage_roundtrip_check(u: Profunctor) -> ProfunctorIso:
    """``from_collage(collage(u)) ≅ u`` through the identity on element names."""
    back = strip_collage_names(from_collage(collage(u)[1]))
    return check_profunctor_map(u, back, {x: x for x in u.where})


def collage_iso_over(p: FunctorData) -> bool:
    """``collage(from_collage(p)) ≅ p.source`` over ``[1]``."""
    V, q = collage(from_collage(p))
    U, I = p.source, p.target
    zero = I.arrows[I.non_identity_arrows()[0]][0]
    side = {a: "0" if p.obj(a) == zero else "1" for a in U.objects}
    objects = {a: f"{side[a]}:{a}" for a in U.objects}
    arrows = {f: f"x:{f}" if side[s] != side[t] else f"{side[s]}:{f}" for f, (s, t) in U.arrows.items()}
    F = FunctorData(U, V, objects, arrows)
    if not validate_functor(F).ok or any(q.arr(arrows[f]) != p.arr(f) for f in U.arrows):
        return False
    return len(set(objects.values())) == len(V.objects) and len(set(arrows.values())) == len(V.arrows)


# -------# Composition #-------- #
def coend_classes(v: Profunctor, u: Profunctor) -> Dict[Pair, str]:
    """``(y, x) -> y*x`` of the least pair in its class under ``(y . g, x) ~ (y, g . x)``."""
    D = u.target
    pairs = [(y, x) for x, (_, d) in u.where.items() for y in v.all_elements() if v.where[y][0] == d]
    uf = UnionFind()
    for key in pairs:
        uf.add(key)
    for x, (_, d) in u.where.items():
        for g in D.out_of(d):
            if D.is_identity(g):
                continue
            for y in v.all_elements():
                if v.where[y][0] == D.tgt(g):
                    uf.union((v.right(y, g), x), (y, u.left(g, x)))
    return {key: "{}*{}".format(*uf.find(key)) for key in pairs}


def tensor_coend(v: Profunctor, u: Profunctor) -> Profunctor:
    """``(v ⊗ u)(c, e) = ∫^d v(d, e) × u(c, d)``."""
    C, E = u.source, v.target
    classes = coend_classes(v, u)
    elements: Dict[Pair, set] = {}
    lact, ract = {}, {}
    for (y, x), z in classes.items():
        c, e = u.where[x][0], v.where[y][1]
        elements.setdefault((c, e), set()).add(z)
        for h in E.out_of(e):
            if not E.is_identity(h):
                lact[(h, z)] = classes[(v.left(h, y), x)]
        for f in C.into(c):
            if not C.is_identity(f):
                ract[(z, f)] = classes[(y, u.right(x, f))]
    return Profunctor(C, E, elements, lact, ract)


def tensor_geometric(v: Profunctor, u: Profunctor) -> Tuple[Profunctor, Callable[[str, str], str]]:
    """Glue the collages along the nerve of ``D``, take τ₁, and keep what lies over ``0 -> 2``.

    The glued category maps to [2]; its full subcategory on the objects over 0 and 2
    is the pullback along ``d¹: [1] -> [2]``, i.e. the collage of ``v ⊗ u``. Reading
    the profunctor off that subcategory here does what ``from_collage`` does, with
    the ``0:``/``1:`` prefixes replaced by the original object names.

    Returns the composite with ``(y, x) -> class of the path x then y``.
    """
    D, C, E = u.target, u.source, v.target
    U, _ = collage(u)
    V, _ = collage(v)
    ND = nerve(D, up_to=2)
    into_u = FunctorData(D, U, {d: f"1:{d}" for d in D.objects}, {g: f"1:{g}" for g in D.arrows})
    into_v = FunctorData(D, V, {d: f"0:{d}" for d in D.objects}, {g: f"0:{g}" for g in D.arrows})
    glued = pushout(
        nerve_map(into_u, ND, nerve(U, up_to=2)), nerve_map(into_v, ND, nerve(V, up_to=2)), names=("D", "U", "V")
    )
    tau = fundamental_category(glued.obj)
    G = tau.category

    to_u, to_v = glued.cocone["U"].assignment, glued.cocone["V"].assignment
    vertex_of = {c: to_u[f"0:{c}"].cell for c in C.objects}
    left_objects = {vertex: c for c, vertex in vertex_of.items()}
    right_objects = {to_v[f"1:{e}"].cell: e for e in E.objects}
    left_arrows = {tau.edge_arrow[to_u[f"0:{f}"].cell]: f for f in C.non_identity_arrows()}
    right_arrows = {tau.edge_arrow[to_v[f"1:{h}"].cell]: h for h in E.non_identity_arrows()}

    over_ends = full_subcategory(G, list(left_objects) + list(right_objects))
    elements: Dict[Pair, List[str]] = {}
    lact, ract = {}, {}
    for z, (s, t) in over_ends.arrows.items():
        if s not in left_objects or t not in right_objects:
            continue
        elements.setdefault((left_objects[s], right_objects[t]), []).append(z)
        for h in over_ends.out_of(t):
            if h in right_arrows:
                lact[(right_arrows[h], z)] = G.comp[(h, z)]
        for f in over_ends.into(s):
            if f in left_arrows:
                ract[(z, left_arrows[f])] = G.comp[(z, f)]
    composite = Profunctor(C, E, elements, lact, ract)
    log.debug(f"geometric composite has {len(composite.where)} elements")

    def path_class(y: str, x: str) -> str:
        return tau.class_of(vertex_of[u.where[x][0]], (to_u[f"x:{x}"].cell, to_v[f"x:{y}"].cell))

    return composite, path_class


def _descend(v: Profunctor, u: Profunctor, image: Callable[[str, str], str]) -> Optional[Dict[str, str]]:
    """A map out of ``v ⊗ u`` defined on representatives; ``None`` if it is not constant on a class."""
    phi: Dict[str, str] = {}
    for (y, x), z in coend_classes(v, u).items():
        if phi.setdefault(z, image(y, x)) != image(y, x):
            return None
    return phi


def _check_descended(source: Profunctor, target: Profunctor, phi: Optional[Dict[str, str]]) -> ProfunctorIso:
    if phi is None:
        return ProfunctorIso(False, None, "map is not well defined on coend classes")
    return check_profunctor_map(source, target, phi)


def tensor_equivalence_check(v: Profunctor, u: Profunctor) -> ProfunctorIso:
    """The coend and the geometric composite agree through ``[y, x] -> class of (x, y)``."""
    geometric, path_class = tensor_geometric(v, u)
    return _check_descended(tensor_coend(v, u), geometric, _descend(v, u, path_class))


def left_unit_iso(u: Profunctor) -> ProfunctorIso:
    """``hom_D ⊗ u ≅ u`` via ``[g, x] -> g . x``."""
    I = hom(u.target)
    return _check_descended(tensor_coend(I, u), u, _descend(I, u, lambda g, x: u.left(g, x)))


def right_unit_iso(u: Profunctor) -> ProfunctorIso:
    """``u ⊗ hom_C ≅ u`` via ``[x, f] -> x . f``."""
    I = hom(u.source)
    return _check_descended(tensor_coend(u, I), u, _descend(u, I, lambda x, f: u.right(x, f)))


def associator_iso(w: Profunctor, v: Profunctor, u: Profunctor) -> ProfunctorIso:
    """``(w ⊗ v) ⊗ u ≅ w ⊗ (v ⊗ u)`` via ``[[z, y], x] -> [z, [y, x]]``."""
    wv, vu = tensor_coend(w, v), tensor_coend(v, u)
    inner_right, outer_right = coend_classes(v, u), coend_classes(w, vu)
    members: Dict[str, List[Pair]] = {}
    for key, label in coend_classes(w, v).items():
        members.setdefault(label, []).append(key)
    phi: Dict[str, str] = {}
    for (zy, x), cls in coend_classes(wv, u).items():
        for z, y in members[zy]:
            value = outer_right[(z, inner_right[(y, x)])]
            if phi.setdefault(cls, value) != value:
                return ProfunctorIso(False, None, "map is not well defined on coend classes")
    return check_profunctor_map(tensor_coend(wv, u), tensor_coend(w, vu), phi)


def _companion_arrow(u: Profunctor, x: str) -> str:
    c = u.where[x][0]
    return x[: -(len(c) + 1)]


def companion_composite_iso(G: FunctorData, F: FunctorData) -> ProfunctorIso:
    """``G* ⊗ F* ≅ (G . F)*`` via ``[h, g] -> h . G(g)``."""
    Gs, Fs = companion(G), companion(F)
    E = G.target

    def image(h: str, g: str) -> str:
        return companion_element(E.comp[(_companion_arrow(Gs, h), G.arr(_companion_arrow(Fs, g)))], Fs.where[g][0])

    target = companion(compose_functors(G, F))
    return _check_descended(tensor_coend(Gs, Fs), target, _descend(Gs, Fs, image))
