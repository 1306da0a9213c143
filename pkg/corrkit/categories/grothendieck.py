"""Cat-valued diagrams, their Grothendieck construction, and Grothendieck fibrations."""
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from corrkit import utils
from corrkit.categories.category import FiniteCategory, FunctorData, validate_category, validate_functor
from corrkit.errors import ValidationReport

log = utils.get_logger(__name__)


@dataclass
class CatDiagram:
    """A strict functor ``A -> Cat``: a category per object and a functor per arrow."""

    base: FiniteCategory
    categories: Dict[str, FiniteCategory]
    functors: Dict[str, FunctorData]

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        A = self.base
        report.extend(validate_category(A), prefix="base")
        for a in A.objects:
            if a not in self.categories:
                report.add("missing-category", a)
            else:
                report.extend(validate_category(self.categories[a]), prefix=a)
        if not report.ok:
            return report
        for f, (s, t) in A.arrows.items():
            F = self.functors.get(f)
            if F is None:
                report.add("missing-functor", f)
                continue
            if F.source != self.categories[s] or F.target != self.categories[t]:
                report.add("functor-endpoints", f)
                continue
            report.extend(validate_functor(F), prefix=f)
        if not report.ok:
            return report
        for a in A.objects:
            F, C = self.functors[A.ids[a]], self.categories[a]
            if F.objects != {x: x for x in C.objects} or F.arrows != {g: g for g in C.arrows}:
                report.add("identity-not-preserved", a)
        for g, f in A.composable_pairs():
            Fg, Ff, Fgf = self.functors[g], self.functors[f], self.functors[A.comp[(g, f)]]
            source = self.categories[A.src(f)]
            if any(Fg.obj(Ff.obj(x)) != Fgf.obj(x) for x in source.objects) or any(
                Fg.arr(Ff.arr(h)) != Fgf.arr(h) for h in source.arrows
            ):
                report.add("composition-not-preserved", f"{g}.{f}")
        return report


def gro_object(a: str, x: str) -> str:
    return f"{a}/{x}"


def gro_arrow(f: str, x: str, alpha: str) -> str:
    return f"({f},{x},{alpha})"


def grothendieck(F: CatDiagram) -> Tuple[FiniteCategory, FunctorData]:
    """Objects ``a/x``; arrows ``(f, x, α)`` with ``α: F(f)(x) -> y``.

    Composition is ``(g, y, β) . (f, x, α) = (g f, x, β . F(g)(α))``.
    """
    A = F.base
    objects, arrows, over = [], {}, {}
    data: Dict[str, Tuple[str, str, str]] = {}
    for a in A.objects:
        objects.extend(gro_object(a, x) for x in F.categories[a].objects)
    for f, (a, b) in A.arrows.items():
        Ff, Cb = F.functors[f], F.categories[b]
        for x in F.categories[a].objects:
            for alpha in Cb.out_of(Ff.obj(x)):
                name = gro_arrow(f, x, alpha)
                arrows[name] = (gro_object(a, x), gro_object(b, Cb.tgt(alpha)))
                over[name] = f
                data[name] = (f, x, alpha)
    comp = {}
    for second, (g, y, beta) in data.items():
        for first, (f, x, alpha) in data.items():
            if arrows[first][1] != arrows[second][0]:
                continue
            c = A.tgt(g)
            composite = F.categories[c].comp[(beta, F.functors[g].arr(alpha))]
            comp[(second, first)] = gro_arrow(A.comp[(g, f)], x, composite)
    ids = {gro_object(a, x): gro_arrow(A.ids[a], x, F.categories[a].ids[x]) for a in A.objects for x in F.categories[a].objects}
    G = FiniteCategory(objects, arrows, comp, ids)
    p = FunctorData(G, A, {gro_object(a, x): a for a in A.objects for x in F.categories[a].objects}, over)
    log.debug(f"Grothendieck construction with {len(objects)} objects and {len(arrows)} arrows")
    return G, p


@dataclass
class FibrationCheck:
    verdict: bool
    failures: List[Tuple[str, str]] = field(default_factory=list)
    lifts: Dict[Tuple[str, str], str] = field(default_factory=dict)

    def __bool__(self):
        return self.verdict

    def to_dict(self):
        return dict(
            verdict=self.verdict,
            failures=[dict(arrow=f, object=x) for f, x in self.failures],
            lifts=[dict(arrow=f, object=x, lift=l) for (f, x), l in sorted(self.lifts.items())],
        )


def _is_universal(p: FunctorData, lift: str) -> bool:
    """Every arrow over ``p(lift)`` out of its source factors uniquely as ``χ . lift`` with ``χ`` over an identity."""
    X, A = p.source, p.target
    x, target = X.arrows[lift]
    b = p.obj(target)
    for psi in X.out_of(x):
        if p.arr(psi) != p.arr(lift):
            continue
        factorizations = [
            chi
            for chi in X.hom(target, X.tgt(psi))
            if p.arr(chi) == A.ids[b] and X.comp[(chi, lift)] == psi
        ]
        if len(factorizations) != 1:
            return False
    return True


def is_grothendieck_fibration(p: FunctorData) -> FibrationCheck:
    """For every ``f: a -> b`` and ``x`` over ``a`` looks for a universal lift of ``f`` out of ``x``."""
    X, A = p.source, p.target
    result = FibrationCheck(True)
    for f, (a, _) in A.arrows.items():
        for x in X.objects:
            if p.obj(x) != a:
                continue
            found = next((l for l in X.out_of(x) if p.arr(l) == f and _is_universal(p, l)), None)
            if found is None:
                result.failures.append((f, x))
            else:
                result.lifts[(f, x)] = found
    result.verdict = not result.failures
    return result
