"""Finite categories given by composition tables, and functors between them."""
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from corrkit import utils
from corrkit.errors import UnsupportedInputError, ValidationError, ValidationReport

log = utils.get_logger(__name__)


class FiniteCategory:
    """Objects, arrows with endpoints, a composition table and identities.

    ``comp[(g, f)]`` is ``g . f`` for every composable pair, identities
    included.
    """

    def __init__(
        self,
        objects: Iterable[str],
        arrows: Mapping[str, Sequence[str]],
        comp: Mapping[Tuple[str, str], str],
        ids: Mapping[str, str],
    ):
        self.objects: Tuple[str, ...] = tuple(sorted(str(a) for a in objects))
        self.arrows: Dict[str, Tuple[str, str]] = {
            str(f): (str(arrows[f][0]), str(arrows[f][1])) for f in sorted(arrows)
        }
        self.comp: Dict[Tuple[str, str], str] = {(str(g), str(f)): str(h) for (g, f), h in comp.items()}
        self.ids: Dict[str, str] = {str(a): str(ids[a]) for a in sorted(ids)}
        self._identities = set(self.ids.values())
        self._homs: Optional[Dict[Tuple[str, str], Tuple[str, ...]]] = None

    def src(self, f: str) -> str:
        return self.arrows[f][0]

    def tgt(self, f: str) -> str:
        return self.arrows[f][1]

    def is_identity(self, f: str) -> bool:
        return f in self._identities

    def compose(self, g: str, f: str) -> str:
        """``g . f``."""
        if self.tgt(f) != self.src(g):
            raise ValueError(f"{g} . {f} is not composable")
        return self.comp[(g, f)]

    def hom(self, a: str, b: str) -> Tuple[str, ...]:
        if self._homs is None:
            homs: Dict[Tuple[str, str], List[str]] = {}
            for f, (s, t) in self.arrows.items():
                homs.setdefault((s, t), []).append(f)
            self._homs = {key: tuple(fs) for key, fs in homs.items()}
        return self._homs.get((a, b), ())

    def out_of(self, a: str) -> Iterator[str]:
        return (f for f, (s, _) in self.arrows.items() if s == a)

    def into(self, a: str) -> Iterator[str]:
        return (f for f, (_, t) in self.arrows.items() if t == a)

    def composable_pairs(self) -> Iterator[Tuple[str, str]]:
        """``(g, f)`` with ``tgt f = src g``."""
        for f, (_, t) in self.arrows.items():
            for g in self.out_of(t):
                yield g, f

    def non_identity_arrows(self) -> List[str]:
        return [f for f in self.arrows if not self.is_identity(f)]

    def rename(self, objects: Mapping[str, str], arrows: Mapping[str, str]) -> "FiniteCategory":
        return FiniteCategory(
            [objects[a] for a in self.objects],
            {arrows[f]: (objects[s], objects[t]) for f, (s, t) in self.arrows.items()},
            {(arrows[g], arrows[f]): arrows[h] for (g, f), h in self.comp.items()},
            {objects[a]: arrows[i] for a, i in self.ids.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return (self.objects, self.arrows, self.comp, self.ids) == (other.objects, other.arrows, other.comp, other.ids)

    __hash__ = None

    def __repr__(self):
        return f"FiniteCategory({len(self.objects)} objects, {len(self.arrows)} arrows)"


class FunctorData:
    def __init__(self, source: FiniteCategory, target: FiniteCategory, objects: Mapping[str, str], arrows: Mapping[str, str]):
        self.source = source
        self.target = target
        self.objects: Dict[str, str] = {str(a): str(b) for a, b in objects.items()}
        self.arrows: Dict[str, str] = {str(f): str(g) for f, g in arrows.items()}

    def obj(self, a: str) -> str:
        return self.objects[a]

    def arr(self, f: str) -> str:
        return self.arrows[f]

    def __eq__(self, other):
        if not isinstance(other, FunctorData):
            return NotImplemented
        return (self.source, self.target, self.objects, self.arrows) == (
            other.source,
            other.target,
            other.objects,
            other.arrows,
        )

    __hash__ = None

    def __repr__(self):
        return f"FunctorData({self.source!r} -> {self.target!r})"


def identity_functor(C: FiniteCategory) -> FunctorData:
    return FunctorData(C, C, {a: a for a in C.objects}, {f: f for f in C.arrows})


def compose_functors(G: FunctorData, F: FunctorData) -> FunctorData:
    """``G . F``."""
    return FunctorData(
        F.source,
        G.target,
        {a: G.obj(F.obj(a)) for a in F.source.objects},
        {f: G.arr(F.arr(f)) for f in F.source.arrows},
    )


def constant_functor(C: FiniteCategory, D: FiniteCategory, d: str) -> FunctorData:
    return FunctorData(C, D, {a: d for a in C.objects}, {f: D.ids[d] for f in C.arrows})


def is_isomorphism(F: FunctorData) -> bool:
    """Bijective on objects and on arrows."""
    C, D = F.source, F.target
    return (
        len(set(F.objects.values())) == len(C.objects) == len(D.objects)
        and len(set(F.arrows.values())) == len(C.arrows) == len(D.arrows)
    )


# -------# Builders #-------- #
def terminal(name: str = "*") -> FiniteCategory:
    return discrete([name])


def discrete(objects: Iterable[str]) -> FiniteCategory:
    objects = list(objects)
    ids = {a: f"id_{a}" for a in objects}
    return FiniteCategory(objects, {i: (a, a) for a, i in ids.items()}, {(i, i): i for i in ids.values()}, ids)


def poset(objects: Iterable[str], relations: Iterable[Tuple[str, str]]) -> FiniteCategory:
    """The poset generated by ``a <= b`` for each listed pair; one arrow ``a<b`` per strict pair."""
    objects = list(objects)
    leq = {(a, a) for a in objects} | {(str(a), str(b)) for a, b in relations}
    for k in objects:
        for a in objects:
            if (a, k) not in leq:
                continue
            for b in objects:
                if (k, b) in leq:
                    leq.add((a, b))
    for a, b in leq:
        if a != b and (b, a) in leq:
            report = ValidationReport()
            report.add("cycle", f"{a}<{b}")
            raise ValidationError("relations do not generate a partial order", report)

    def name(a, b):
        return f"id_{a}" if a == b else f"{a}<{b}"

    arrows = {name(a, b): (a, b) for a, b in leq}
    comp = {}
    for a, b in leq:
        for c in objects:
            if (b, c) in leq:
                comp[(name(b, c), name(a, b))] = name(a, c)
    return FiniteCategory(objects, arrows, comp, {a: name(a, a) for a in objects})


def arrow_category() -> FiniteCategory:
    """[1]: ``0 -> 1``."""
    return poset(["0", "1"], [("0", "1")])


def simplex_category(n: int) -> FiniteCategory:
    """[n] as a poset."""
    return poset([str(i) for i in range(n + 1)], [(str(i), str(i + 1)) for i in range(n)])


def _check_acyclic(objects: Sequence[str], edges: Mapping[str, Tuple[str, str]]) -> None:
    out: Dict[str, List[str]] = {a: [] for a in objects}
    for _, (s, t) in sorted(edges.items()):
        out[s].append(t)
    state: Dict[str, int] = {}

    def visit(a):
        state[a] = 1
        for b in out[a]:
            if state.get(b) == 1:
                raise UnsupportedInputError(f"graph has a cycle through {b}; only finite categories are supported")
            if b not in state:
                visit(b)
        state[a] = 2

    for a in objects:
        if a not in state:
            visit(a)


def free_category(objects: Iterable[str], edges: Mapping[str, Sequence[str]]) -> FiniteCategory:
    """Paths in an acyclic graph; the path ``e1 then e2`` is the arrow ``e1;e2``."""
    objects = list(objects)
    edges = {str(e): (str(s), str(t)) for e, (s, t) in edges.items()}
    _check_acyclic(objects, edges)
    by_source: Dict[str, List[str]] = {}
    for e, (s, _) in sorted(edges.items()):
        by_source.setdefault(s, []).append(e)

    paths: Dict[Tuple[str, ...], Tuple[str, str]] = {}
    frontier = [(e,) for e in sorted(edges)]
    while frontier:
        nxt = []
        for path in frontier:
            paths[path] = (edges[path[0]][0], edges[path[-1]][1])
            nxt.extend(path + (e,) for e in by_source.get(paths[path][1], ()))
        frontier = nxt

    ids = {a: f"id_{a}" for a in objects}
    arrows = {";".join(p): st for p, st in paths.items()}
    arrows.update({i: (a, a) for a, i in ids.items()})
    comp = {}
    for p, (s, t) in paths.items():
        f = ";".join(p)
        comp[(f, ids[s])] = f
        comp[(ids[t], f)] = f
        for q, (s2, _) in paths.items():
            if s2 == t:
                comp[(";".join(q), f)] = ";".join(p + q)
    for i in ids.values():
        comp[(i, i)] = i
    return FiniteCategory(objects, arrows, comp, ids)


def full_subcategory(C: FiniteCategory, objects: Iterable[str]) -> FiniteCategory:
    keep = set(objects)
    arrows = {f: st for f, st in C.arrows.items() if st[0] in keep and st[1] in keep}
    comp = {(g, f): h for (g, f), h in C.comp.items() if g in arrows and f in arrows}
    return FiniteCategory([a for a in C.objects if a in keep], arrows, comp, {a: C.ids[a] for a in keep})


def subcategory_over(p: FunctorData, objects: Iterable[str], arrows: Iterable[str]) -> FiniteCategory:
    """Objects and arrows of ``p.source`` lying over the given objects and arrows of the base."""
    objects, arrows = set(objects), set(arrows)
    X = p.source
    kept = {f: st for f, st in X.arrows.items() if p.arr(f) in arrows and p.obj(st[0]) in objects and p.obj(st[1]) in objects}
    comp = {(g, f): h for (g, f), h in X.comp.items() if g in kept and f in kept}
    obs = [a for a in X.objects if p.obj(a) in objects]
    return FiniteCategory(obs, kept, comp, {a: X.ids[a] for a in obs})


def fiber_category(p: FunctorData, a: str) -> FiniteCategory:
    """``p⁻¹(a)``: objects over ``a`` and arrows over its identity."""
    return subcategory_over(p, [a], [p.target.ids[a]])


# -------# Validation #-------- #
def validate_category(C: FiniteCategory) -> ValidationReport:
    report = ValidationReport()
    objects = set(C.objects)
    for f, (s, t) in C.arrows.items():
        if s not in objects or t not in objects:
            report.add("unknown-object", f, src=s, tgt=t)
        if f in objects:
            report.add("name-clash", f)
    for a in C.objects:
        i = C.ids.get(a)
        if i is None or i not in C.arrows:
            report.add("missing-identity", a)
        elif C.arrows[i] != (a, a):
            report.add("identity-endpoints", a, arrow=i)
    if not report.ok:
        return report

    for g, f in C.composable_pairs():
        h = C.comp.get((g, f))
        if h is None or h not in C.arrows:
            report.add("missing-composite", f"{g}.{f}")
        elif C.arrows[h] != (C.src(f), C.tgt(g)):
            report.add("composite-endpoints", f"{g}.{f}", composite=h)
    for g, f in C.comp:
        if g not in C.arrows or f not in C.arrows or C.tgt(f) != C.src(g):
            report.add("stray-composite", f"{g}.{f}")
    if not report.ok:
        return report

    for f, (s, t) in C.arrows.items():
        if C.comp[(f, C.ids[s])] != f or C.comp[(C.ids[t], f)] != f:
            report.add("unit-law", f)
    for g, f in C.composable_pairs():
        gf = C.comp[(g, f)]
        for h in C.out_of(C.tgt(g)):
            if C.comp[(h, gf)] != C.comp[(C.comp[(h, g)], f)]:
                report.add("associativity", f"{h}.{g}.{f}")
    return report


def validate_functor(F: FunctorData) -> ValidationReport:
    report = ValidationReport()
    C, D = F.source, F.target
    for a in C.objects:
        if F.objects.get(a) not in D.objects:
            report.add("unmapped-object", a, image=F.objects.get(a))
    for f in C.arrows:
        if F.arrows.get(f) not in D.arrows:
            report.add("unmapped-arrow", f, image=F.arrows.get(f))
    if not report.ok:
        return report
    for f, (s, t) in C.arrows.items():
        if D.arrows[F.arr(f)] != (F.obj(s), F.obj(t)):
            report.add("endpoints", f, image=F.arr(f))
    for a in C.objects:
        if F.arr(C.ids[a]) != D.ids[F.obj(a)]:
            report.add("identity", a)
    if not report.ok:
        return report
    for g, f in C.composable_pairs():
        if F.arr(C.comp[(g, f)]) != D.comp[(F.arr(g), F.arr(f))]:
            report.add("composition", f"{g}.{f}")
    return report
