"""Normal lax diagrams of profunctors, their double colimits, and the functor round trips."""
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from corrkit import utils
from corrkit.categories.category import (
    FiniteCategory,
    FunctorData,
    arrow_category,
    fiber_category,
    is_isomorphism,
    validate_category,
    validate_functor,
)
from corrkit.categories.grothendieck import CatDiagram, gro_arrow, gro_object, grothendieck
from corrkit.categories.profunctor import (
    Pair,
    Profunctor,
    check_profunctor_map,
    companion,
    companion_element,
    hom,
    validate_profunctor,
)
from corrkit.errors import UnsupportedInputError, ValidationError, ValidationReport

log = utils.get_logger(__name__)


@dataclass
class LaxProfDiagram:
    """``φ: A -> Prof`` with laxity ``μ_{g,f}: φ(g) ⊗ φ(f) -> φ(g f)`` and unitors ``η_a: hom -> φ(id_a)``.

    ``mu[(g, f)]`` sends a pair ``(y, x)`` with ``y ∈ φ(g)`` and ``x ∈ φ(f)``
    to an element of ``φ(g f)``; it is given on pairs and must be constant
    on coend classes.
    """

    base: FiniteCategory
    categories: Dict[str, FiniteCategory]
    profunctors: Dict[str, Profunctor]
    mu: Dict[Tuple[str, str], Dict[Pair, str]]
    unitors: Dict[str, Dict[str, str]] = field(default_factory=dict)

    def laxity(self, g: str, f: str, y: str, x: str) -> str:
        return self.mu[(g, f)][(y, x)]

    def pairs(self, g: str, f: str):
        """Every ``(y, x)`` with matching middle object."""
        u, v = self.profunctors[f], self.profunctors[g]
        for x, (_, d) in u.where.items():
            for y in v.all_elements():
                if v.where[y][0] == d:
                    yield y, x

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        A = self.base
        report.extend(validate_category(A), prefix="base")
        for a in A.objects:
            if a not in self.categories:
                report.add("missing-category", a)
        for f, (a, b) in A.arrows.items():
            u = self.profunctors.get(f)
            if u is None:
                report.add("missing-profunctor", f)
            elif u.source != self.categories.get(a) or u.target != self.categories.get(b):
                report.add("profunctor-endpoints", f)
            else:
                report.extend(validate_profunctor(u), prefix=f)
        if not report.ok:
            return report

        for g, f in A.composable_pairs():
            table = self.mu.get((g, f))
            if table is None:
                report.add("missing-laxity", f"{g}.{f}")
                continue
            w = self.profunctors[A.comp[(g, f)]]
            for y, x in self.pairs(g, f):
                z = table.get((y, x))
                if z is None:
                    report.add("missing-laxity", f"{g}.{f}", pair=f"{y},{x}")
                elif w.where.get(z) != (self.profunctors[f].where[x][0], self.profunctors[g].where[y][1]):
                    report.add("laxity-endpoints", f"{g}.{f}", pair=f"{y},{x}", image=z)
        if not report.ok:
            return report

        for g, f in A.composable_pairs():
            self._check_laxity(g, f, report)
        for h, g in A.composable_pairs():
            for f in A.into(A.src(g)):
                self._check_associativity(h, g, f, report)
        for a in A.objects:
            self._check_unitor(a, report)
        return report

    def _check_laxity(self, g: str, f: str, report: ValidationReport) -> None:
        u, v = self.profunctors[f], self.profunctors[g]
        w = self.profunctors[self.base.comp[(g, f)]]
        middle = u.target
        for x, (_, d) in u.where.items():
            for h in middle.out_of(d):
                for y in v.all_elements():
                    if v.where[y][0] == middle.tgt(h):
                        if self.laxity(g, f, v.right(y, h), x) != self.laxity(g, f, y, u.left(h, x)):
                            report.add("laxity-not-balanced", f"{g}.{f}", pair=f"{y},{x}", arrow=h)
        for y, x in self.pairs(g, f):
            z = self.laxity(g, f, y, x)
            for k in w.target.out_of(v.where[y][1]):
                if self.laxity(g, f, v.left(k, y), x) != w.left(k, z):
                    report.add("laxity-not-equivariant", f"{g}.{f}", pair=f"{y},{x}", arrow=k)
            for l in u.source.into(u.where[x][0]):
                if self.laxity(g, f, y, u.right(x, l)) != w.right(z, l):
                    report.add("laxity-not-equivariant", f"{g}.{f}", pair=f"{y},{x}", arrow=l)

    def _check_associativity(self, h: str, g: str, f: str, report: ValidationReport) -> None:
        A = self.base
        hg, gf = A.comp[(h, g)], A.comp[(g, f)]
        for y, x in self.pairs(g, f):
            for z in self.profunctors[h].all_elements():
                if self.profunctors[h].where[z][0] != self.profunctors[g].where[y][1]:
                    continue
                lhs = self.laxity(h, gf, z, self.laxity(g, f, y, x))
                rhs = self.laxity(hg, f, self.laxity(h, g, z, y), x)
                if lhs != rhs:
                    report.add("laxity-not-associative", f"{h}.{g}.{f}", elements=f"{z},{y},{x}")

    def _check_unitor(self, a: str, report: ValidationReport) -> None:
        A = self.base
        ida = A.ids[a]
        eta = self.unitors.get(a)
        if eta is None:
            report.add("not-normal", a, reason="no unitor")
            return
        iso = check_profunctor_map(hom(self.categories[a]), self.profunctors[ida], eta)
        if not iso:
            report.add("not-normal", a, reason=iso.reason)
            return
        for f in A.out_of(a):
            u = self.profunctors[f]
            for x, (c, _) in u.where.items():
                for h in self.categories[a].into(c):
                    if self.laxity(f, ida, x, eta[h]) != u.right(x, h):
                        report.add("unit-law", f, side="right", element=x, arrow=h)
        for f in A.into(a):
            u = self.profunctors[f]
            for x, (_, d) in u.where.items():
                for g in self.categories[a].out_of(d):
                    if self.laxity(ida, f, eta[g], x) != u.left(g, x):
                        report.add("unit-law", f, side="left", element=x, arrow=g)


def classifying_diagram_cat(F: FunctorData) -> LaxProfDiagram:
    """``φ_F``: fibers over objects, arrows over ``f`` as ``φ(f)``, laxity by composition."""
    X, A = F.source, F.target
    categories = {a: fiber_category(F, a) for a in A.objects}
    profunctors = {}
    for f, (a, b) in A.arrows.items():
        Ca, Cb = categories[a], categories[b]
        elements, lact, ract = {}, {}, {}
        for xi, (x, y) in X.arrows.items():
            if F.arr(xi) != f:
                continue
            elements.setdefault((x, y), []).append(xi)
            for g in Cb.out_of(y):
                lact[(g, xi)] = X.comp[(g, xi)]
            for h in Ca.into(x):
                ract[(xi, h)] = X.comp[(xi, h)]
        profunctors[f] = Profunctor(Ca, Cb, elements, lact, ract)
    D = LaxProfDiagram(A, categories, profunctors, {})
    for g, f in A.composable_pairs():
        D.mu[(g, f)] = {(y, x): X.comp[(y, x)] for y, x in D.pairs(g, f)}
    D.unitors = {a: {h: h for h in categories[a].arrows} for a in A.objects}
    return D


def profunctor_diagram(u: Profunctor) -> LaxProfDiagram:
    """``u`` as a diagram over ``[1]``, identities sent to hom profunctors."""
    A = arrow_category()
    cross = A.non_identity_arrows()[0]
    categories = {"0": u.source, "1": u.target}
    profunctors = {A.ids["0"]: hom(u.source), A.ids["1"]: hom(u.target), cross: u}
    D = LaxProfDiagram(A, categories, profunctors, {})
    for g, f in A.composable_pairs():
        if g == cross:
            D.mu[(g, f)] = {(y, x): u.right(y, x) for y, x in D.pairs(g, f)}
        elif f == cross:
            D.mu[(g, f)] = {(y, x): u.left(y, x) for y, x in D.pairs(g, f)}
        else:
            C = categories[A.src(f)]
            D.mu[(g, f)] = {(y, x): C.comp[(y, x)] for y, x in D.pairs(g, f)}
    D.unitors = {a: {h: h for h in C.arrows} for a, C in categories.items()}
    return D


def dcolim_arrow(f: str, z: str) -> str:
    return f"{f}/{z}"


def dcolim_prof(D: LaxProfDiagram, validate: bool = True) -> Tuple[FiniteCategory, FunctorData]:
    """The big collage: objects ``a/x``, ``hom(a/x, b/y) = ⨿_f φ(f)(x, y)``, composition through ``μ``."""
    if validate:
        report = D.validate()
        if "not-normal" in report.kinds():
            raise UnsupportedInputError("only normal lax diagrams have a double colimit here: " + str(report.issues[0]))
        if not report.ok:
            raise ValidationError("lax diagram of profunctors is invalid", report)
    A = D.base
    objects = [gro_object(a, x) for a in A.objects for x in D.categories[a].objects]
    arrows, over, comp = {}, {}, {}
    for f, (a, b) in A.arrows.items():
        u = D.profunctors[f]
        for z, (x, y) in u.where.items():
            name = dcolim_arrow(f, z)
            arrows[name] = (gro_object(a, x), gro_object(b, y))
            over[name] = f
    for g, f in A.composable_pairs():
        gf = A.comp[(g, f)]
        for y, x in D.pairs(g, f):
            comp[(dcolim_arrow(g, y), dcolim_arrow(f, x))] = dcolim_arrow(gf, D.laxity(g, f, y, x))
    ids = {
        gro_object(a, x): dcolim_arrow(A.ids[a], D.unitors[a][D.categories[a].ids[x]])
        for a in A.objects
        for x in D.categories[a].objects
    }
    Q = FiniteCategory(objects, arrows, comp, ids)
    q = FunctorData(Q, A, {gro_object(a, x): a for a in A.objects for x in D.categories[a].objects}, over)
    log.debug(f"double colimit of a lax diagram: {len(objects)} objects, {len(arrows)} arrows")
    return Q, q


@dataclass
class CatComparison:
    verdict: bool
    comparison: Optional[FunctorData] = None
    reason: str = ""

    def __bool__(self):
        return self.verdict


def _compare_over(comparison: FunctorData, source_p: FunctorData, target_p: FunctorData) -> CatComparison:
    report = validate_functor(comparison)
    if not report.ok:
        return CatComparison(False, comparison, f"comparison is not a functor: {report.issues[0]}")
    Q = comparison.source
    if any(target_p.obj(comparison.obj(o)) != source_p.obj(o) for o in Q.objects) or any(
        target_p.arr(comparison.arr(f)) != source_p.arr(f) for f in Q.arrows
    ):
        return CatComparison(False, comparison, "comparison does not lie over the base")
    if not is_isomorphism(comparison):
        return CatComparison(False, comparison, "comparison is not bijective on objects and arrows")
    return CatComparison(True, comparison, "")


def roundtrip_cat(F: FunctorData) -> CatComparison:
    """``dcolim(φ_F) -> X`` sending ``a/x`` to ``x`` and ``f/ξ`` to ``ξ``."""
    D = classifying_diagram_cat(F)
    Q, q = dcolim_prof(D)
    objects = {gro_object(a, x): x for a in D.base.objects for x in D.categories[a].objects}
    arrows = {dcolim_arrow(f, xi): xi for f, u in D.profunctors.items() for xi in u.where}
    return _compare_over(FunctorData(Q, F.source, objects, arrows), q, F)


def companion_diagram(F: CatDiagram) -> LaxProfDiagram:
    """``(·)* . F``, with laxity ``μ(β, α) = β . F(g)(α)``."""
    A = F.base
    profunctors = {f: companion(F.functors[f]) for f in A.arrows}
    D = LaxProfDiagram(A, dict(F.categories), profunctors, {})
    for g, f in A.composable_pairs():
        Fg, target = F.functors[g], F.categories[A.tgt(g)]
        u, v = profunctors[f], profunctors[g]
        table = {}
        for beta, alpha in D.pairs(g, f):
            c = u.where[alpha][0]
            a_arrow = alpha[: -(len(c) + 1)]
            b_arrow = beta[: -(len(v.where[beta][0]) + 1)]
            table[(beta, alpha)] = companion_element(target.comp[(b_arrow, Fg.arr(a_arrow))], c)
        D.mu[(g, f)] = table
    D.unitors = {a: {h: companion_element(h, C.src(h)) for h in C.arrows} for a, C in F.categories.items()}
    return D


def gro_vs_dcolim(F: CatDiagram) -> CatComparison:
    """``dcolim((·)* . F) -> Gro(F)``: ``a/x`` to ``a/x`` and ``f/(α@x)`` to ``(f, x, α)``."""
    G, p = grothendieck(F)
    D = companion_diagram(F)
    Q, q = dcolim_prof(D)
    arrows = {}
    for f, u in D.profunctors.items():
        for z, (x, _) in u.where.items():
            arrows[dcolim_arrow(f, z)] = gro_arrow(f, x, z[: -(len(x) + 1)])
    return _compare_over(FunctorData(Q, G, {o: o for o in Q.objects}, arrows), q, p)


def _rename_profunctor(
    u: Profunctor, source: Tuple[Mapping, Mapping], target: Tuple[Mapping, Mapping], elements: Mapping[str, str]
) -> Profunctor:
    (so, sa), (to, ta) = source, target
    return Profunctor(
        u.source.rename(so, sa),
        u.target.rename(to, ta),
        {(so[c], to[d]): [elements[x] for x in xs] for (c, d), xs in u.elements.items()},
        {(ta[g], elements[x]): elements[y] for (g, x), y in u.lact.items()},
        {(elements[x], sa[f]): elements[y] for (x, f), y in u.ract.items()},
    )


def lax_roundtrip_check(D: LaxProfDiagram) -> CatComparison:
    """``φ(f) ≅ φ_q(f)`` for the projection ``q`` of ``dcolim(D)``, for every arrow ``f``."""
    Q, q = dcolim_prof(D)
    back = classifying_diagram_cat(q)
    names = {}
    for a, C in D.categories.items():
        objects = {gro_object(a, x): x for x in C.objects}
        arrows = {dcolim_arrow(D.base.ids[a], D.unitors[a][h]): h for h in C.arrows}
        names[a] = (objects, arrows)
    for f, (a, b) in D.base.arrows.items():
        u = D.profunctors[f]
        recovered = back.profunctors[f]
        undo = {dcolim_arrow(f, z): z for z in u.where}
        if set(undo) != set(recovered.where):
            return CatComparison(False, None, f"elements over {f} are not recovered")
        iso = check_profunctor_map(u, _rename_profunctor(recovered, names[a], names[b], undo), {z: z for z in u.where})
        if not iso:
            return CatComparison(False, None, f"profunctor over {f}: {iso.reason}")
    return CatComparison(True, None, "")
