"""Diagrams of correspondences indexed by the simplices of a base, and their double colimits."""
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from corrkit import utils
from corrkit.correspondences.correspondence import Correspondence, fiber
from corrkit.errors import ValidationError, ValidationReport
from corrkit.simplicial.delta import OperatorWord, generator_words, normalize_word
from corrkit.simplicial.limits import Colimit, Diagram, IsoResult, colimit, is_iso, product, product_map
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap, compose
from corrkit.simplicial.standard import delta_map, simplex, yoneda

log = utils.get_logger(__name__)

Generator = Tuple[str, int]


@dataclass
class CorrDiagram:
    """``σ -> at[σ]`` for every simplex of ``base`` up to ``truncation``.

    ``acts[(σ, θ)]`` is the map ``at[σθ].total -> at[σ].total`` for a
    one-letter operator ``θ``; longer words are composites of these.
    """

    base: FiniteSimplicialSet
    truncation: int
    at: Dict[SimplexRef, Correspondence]
    acts: Dict[Tuple[SimplexRef, Generator], SimplicialMap] = field(default_factory=dict)

    def simplices(self) -> List[SimplexRef]:
        return sorted(self.at, key=lambda s: (self.base.simplex_dim(s), s))

    def apply(self, sigma: SimplexRef, gen: Generator) -> SimplexRef:
        kind, i = gen
        return self.base.face(sigma, i) if kind == "d" else self.base.degeneracy(sigma, i)

    def generators(self, sigma: SimplexRef):
        """One-letter operators on ``σ`` whose result stays within the truncation."""
        k = self.base.simplex_dim(sigma)
        for word in generator_words(k):
            gen = word.symbols[0]
            if word.target_dim <= self.truncation:
                yield gen, self.apply(sigma, gen)

    def act(self, sigma: SimplexRef, word: OperatorWord) -> SimplicialMap:
        """The map ``at[σθ] -> at[σ]`` for an arbitrary operator word, via its normal form."""
        word = normalize_word(word)
        if word.source_dim != self.base.simplex_dim(sigma):
            raise ValueError(f"{word} does not act on the {self.base.simplex_dim(sigma)}-simplex {sigma}")
        result = SimplicialMap.identity(self.at[sigma].total)
        current = sigma
        for gen in reversed(word.symbols):
            nxt = self.apply(current, gen)
            result = compose(result, self.acts[(current, gen)])
            current = nxt
        return result

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        for sigma, X in self.at.items():
            if X.n != self.base.simplex_dim(sigma):
                report.add("dimension", str(sigma), expected=self.base.simplex_dim(sigma), found=X.n)
            report.extend(X.validate(), prefix=str(sigma))
        if not report.ok:
            return report

        for sigma in self.at:
            k = self.base.simplex_dim(sigma)
            for gen, tau in self.generators(sigma):
                f = self.acts.get((sigma, gen))
                where = f"{gen[0]}{gen[1]}@{sigma}"
                if f is None:
                    report.add("missing-action", where)
                    continue
                if f.source != self.at[tau].total or f.target != self.at[sigma].total:
                    report.add("action-endpoints", where)
                    continue
                theta, _ = OperatorWord((gen,), k).as_map()
                lhs = compose(self.at[sigma].structure, f)
                rhs = compose(delta_map(theta, k), self.at[tau].structure)
                if lhs.assignment != rhs.assignment:
                    report.add("action-not-over-base", where)
        if not report.ok:
            return report

        # composable pairs of generators, grouped by the operator they compose to
        groups: Dict[Tuple[SimplexRef, OperatorWord], List[Tuple[str, SimplicialMap]]] = defaultdict(list)
        for sigma in self.at:
            k = self.base.simplex_dim(sigma)
            for first, tau in self.generators(sigma):
                for second, rho in self.generators(tau):
                    word = normalize_word(OperatorWord((second, first), k))
                    composite = compose(self.acts[(sigma, first)], self.acts[(tau, second)])
                    groups[(sigma, word)].append((f"{second}{first}", composite))
        for (sigma, word), members in groups.items():
            reference = members[0][1]
            if not word.symbols:
                reference = SimplicialMap.identity(self.at[sigma].total)
            for path, composite in members:
                if composite.assignment != reference.assignment:
                    report.add("not-functorial", str(sigma), word=str(word), path=path)
        return report


def classifying_diagram(f: SimplicialMap, truncation: Optional[int] = None) -> CorrDiagram:
    """``φ_f: σ -> f⁻¹(σ)``, acting through the maps induced between pullbacks."""
    A = f.target
    L = A.dim + 1 if truncation is None else truncation
    at = {sigma: fiber(f, sigma) for n in range(L + 1) for sigma in A.simplices(n)}
    D = CorrDiagram(A, L, at)
    for sigma, X in at.items():
        k = A.simplex_dim(sigma)
        for gen, tau in D.generators(sigma):
            theta, _ = OperatorWord((gen,), k).as_map()
            Y = at[tau]
            D.acts[(sigma, gen)] = X.cone.lift(Y.to_parent, compose(delta_map(theta, k), Y.structure))
    log.debug(f"classifying diagram over {len(at)} simplices (truncation {L})")
    return D


@dataclass
class VerticalTransformationS:
    """Components ``at[σ].total -> target × Δ^{dim σ}`` over ``Δ^{dim σ}``."""

    source: CorrDiagram
    target: FiniteSimplicialSet
    components: Dict[SimplexRef, SimplicialMap]

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        D = self.source
        cylinders = {}

        def cylinder(k):
            if k not in cylinders:
                cylinders[k] = product(self.target, simplex(k))
            return cylinders[k]

        for sigma in D.at:
            k = D.base.simplex_dim(sigma)
            if compose(cylinder(k).proj2, self.components[sigma]).assignment != D.at[sigma].structure.assignment:
                report.add("component-not-over-base", str(sigma))
            for gen, tau in D.generators(sigma):
                theta, _ = OperatorWord((gen,), k).as_map()
                m = D.base.simplex_dim(tau)
                lower = product_map(cylinder(m), SimplicialMap.identity(self.target), cylinder(k), delta_map(theta, k))
                lhs = compose(self.components[sigma], D.acts[(sigma, gen)])
                rhs = compose(lower, self.components[tau])
                if lhs.assignment != rhs.assignment:
                    report.add("not-natural", f"{gen[0]}{gen[1]}@{sigma}")
        return report


@dataclass
class DoubleColimit:
    obj: FiniteSimplicialSet
    cocone: VerticalTransformationS
    truncation: int
    colimit: Colimit = field(repr=False)


def _object_name(sigma: SimplexRef) -> str:
    return str(sigma)


def double_colimit(D: CorrDiagram, validate: bool = True) -> DoubleColimit:
    """The colimit of the cotabulators over the truncated simplex category of the base."""
    if validate:
        report = D.validate()
        if not report.ok:
            raise ValidationError("correspondence diagram is not functorial", report)

    ordered = D.simplices()
    diagram = Diagram({_object_name(s): D.at[s].total for s in ordered})
    for (sigma, gen), f in sorted(D.acts.items(), key=lambda item: (item[0][0], item[0][1])):
        tau = D.apply(sigma, gen)
        diagram.add_arrow(f"{gen[0]}{gen[1]}@{sigma}", _object_name(tau), _object_name(sigma), f)
    col = colimit(diagram, validate=False)

    cylinders = {}
    components = {}
    for sigma in ordered:
        k = D.base.simplex_dim(sigma)
        if k not in cylinders:
            cylinders[k] = product(col.obj, simplex(k))
        components[sigma] = cylinders[k].lift(col.cocone[_object_name(sigma)], D.at[sigma].structure)
    log.debug(f"double colimit has counts {col.obj.counts()} at truncation {D.truncation}")
    return DoubleColimit(col.obj, VerticalTransformationS(D, col.obj, components), D.truncation, col)


def cotabulator(X: Correspondence, truncation: Optional[int] = None) -> Tuple[FiniteSimplicialSet, VerticalTransformationS]:
    """The total space with the cocone ``(inclusion, structure)`` out of the faces of ``X``."""
    D = classifying_diagram(X.structure, truncation=X.n if truncation is None else truncation)
    cylinders = {}
    components = {}
    for sigma, Z in D.at.items():
        k = D.base.simplex_dim(sigma)
        if k not in cylinders:
            cylinders[k] = product(X.total, simplex(k))
        components[sigma] = cylinders[k].lift(Z.to_parent, Z.structure)
    return X.total, VerticalTransformationS(D, X.total, components)


@dataclass
class RoundtripResult:
    verdict: bool
    comparison: SimplicialMap
    double_colimit: DoubleColimit = field(repr=False)
    over_base: bool = True
    reason: str = ""


def roundtrip_check(f: SimplicialMap, truncation: Optional[int] = None) -> RoundtripResult:
    """Compares ``dcolim(φ_f)`` with the source of ``f`` through the fiber inclusions."""
    A = f.target
    D = classifying_diagram(f, truncation)
    dc = double_colimit(D)
    comparison = dc.colimit.descend({_object_name(s): X.to_parent for s, X in D.at.items()}, target=f.source)
    to_base = dc.colimit.descend(
        {_object_name(s): compose(yoneda(A, s), X.structure) for s, X in D.at.items()}, target=A
    )
    over_base = compose(f, comparison).assignment == to_base.assignment
    iso = is_iso(comparison)
    reason = iso.reason if not iso else ("" if over_base else "comparison does not lie over the base")
    return RoundtripResult(iso.verdict and over_base, comparison, dc, over_base, reason)


def truncation_stable(f: SimplicialMap, truncation: Optional[int] = None) -> IsoResult:
    """``dcolim`` at truncation ``L`` and ``L + 1`` agree through the canonical comparison."""
    L = f.target.dim + 1 if truncation is None else truncation
    low = double_colimit(classifying_diagram(f, L))
    high = double_colimit(classifying_diagram(f, L + 1))
    cocone = high.colimit.cocone
    comparison = low.colimit.descend(
        {name: cocone[name] for name in low.colimit.cocone}, target=high.obj
    )
    return is_iso(comparison)
