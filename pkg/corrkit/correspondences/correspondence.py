"""n-correspondences: simplicial sets over Δⁿ, with their faces and degeneracies.

Faces and degeneracies are chosen pullbacks, so they are functorial only up
to canonical isomorphism.  Every derived correspondence remembers the
canonical map to the total space it was built from; chaining those maps
embeds it into ``X.total × Δᵐ``, which is where all comparisons happen.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from corrkit import utils
from corrkit.errors import ValidationReport
from corrkit.simplicial import delta
from corrkit.simplicial.limits import (
    IsoResult,
    Pullback,
    compare_over,
    product,
    product_map,
    pullback,
)
from corrkit.simplicial.maps import DEFAULT_BUDGET, enumerate_maps, function_complex_level
from corrkit.simplicial.sset import (
    FiniteSimplicialSet,
    SimplexRef,
    SimplicialMap,
    compose,
    validate_map,
)
from corrkit.simplicial.standard import delta_map, simplex, yoneda

log = utils.get_logger(__name__)


@dataclass
class Correspondence:
    total: FiniteSimplicialSet
    n: int
    structure: SimplicialMap
    # canonical map to the total space this one was cut out of
    to_parent: Optional[SimplicialMap] = field(default=None, compare=False, repr=False)
    cone: Optional[Pullback] = field(default=None, compare=False, repr=False)

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        if self.structure.target != simplex(self.n):
            report.add("structure-target", "structure", n=self.n)
            return report
        if self.structure.source != self.total:
            report.add("structure-source", "structure")
            return report
        report.extend(validate_map(self.structure), prefix="structure")
        return report

    def vertex_image(self, vertex: str) -> int:
        return int(self.structure.assignment[vertex].cell)

    def fiber_cells(self, i: int) -> List[str]:
        """Cells of ``X_i``: those whose vertices all lie over ``i``."""
        out = []
        for c in self.total.cells:
            if all(self.vertex_image(v) == i for v in self.total.vertices(SimplexRef.of(c))):
                out.append(c)
        return out

    def vertex_fiber(self, i: int) -> FiniteSimplicialSet:
        return self.total.restrict(self.fiber_cells(i))[0]

    def embedding(self, to_root: SimplicialMap, ambient: Pullback) -> SimplicialMap:
        """``(to_root, structure)`` into ``ambient = root × Δⁿ``."""
        return ambient.lift(to_root, self.structure)


def constant(Y: FiniteSimplicialSet, n: int) -> Correspondence:
    """``sⁿY``: the cylinder ``Y × Δⁿ`` over Δⁿ."""
    P = product(Y, simplex(n))
    return Correspondence(P.obj, n, P.proj2, to_parent=P.proj1, cone=P)


def fiber(f: SimplicialMap, sigma: SimplexRef) -> Correspondence:
    """``f⁻¹(σ)``: the pullback of ``f`` along ``σ: Δⁿ -> A``."""
    A = f.target
    n = A.simplex_dim(sigma)
    P = pullback(f, yoneda(A, sigma))
    return Correspondence(P.obj, n, P.proj2, to_parent=P.proj1, cone=P)


def corr_face(X: Correspondence, i: int) -> Correspondence:
    """``d_i X``, the pullback along ``dⁱ: Δⁿ⁻¹ -> Δⁿ``."""
    if X.n < 1 or not 0 <= i <= X.n:
        raise ValueError(f"face d{i} is not defined on a {X.n}-correspondence")
    P = pullback(X.structure, delta_map(delta.coface(i, X.n), X.n))
    return Correspondence(P.obj, X.n - 1, P.proj2, to_parent=P.proj1, cone=P)


def chi_above(i: int, n: int) -> delta.Monotone:
    """The characteristic function of ``{j > i}`` on ``[n + 1]``."""
    return tuple(0 if j <= i else 1 for j in range(n + 2))


def corr_degeneracy(X: Correspondence, i: int) -> Correspondence:
    """``s_i X``: the cylinder ``X × Δ¹`` pulled back along ``ι_i = (sⁱ, χ_{>i})``."""
    n = X.n
    if not 0 <= i <= n:
        raise ValueError(f"degeneracy s{i} is not defined on a {n}-correspondence")
    interval = simplex(1)
    cylinder = product(X.total, interval)
    base = product(simplex(n), interval)
    p_times = product_map(cylinder, X.structure, base, SimplicialMap.identity(interval))
    iota = base.lift(delta_map(delta.codegeneracy(i, n), n), delta_map(chi_above(i, n), 1))
    P = pullback(p_times, iota)
    return Correspondence(P.obj, n + 1, P.proj2, to_parent=compose(cylinder.proj1, P.proj1), cone=P)


def derive(X: Correspondence, ops: Sequence[Tuple[str, int]]) -> Tuple[Correspondence, SimplicialMap]:
    """Applies ``ops`` in order and returns the result with its map to ``X.total``."""
    current, to_root = X, SimplicialMap.identity(X.total)
    for kind, i in ops:
        current = corr_face(current, i) if kind == "d" else corr_degeneracy(current, i)
        to_root = compose(to_root, current.to_parent)
    return current, to_root


def iterated_degeneracy(Y: FiniteSimplicialSet, n: int) -> Tuple[Correspondence, SimplicialMap]:
    """``s_0 .. s_0`` applied ``n`` times to ``Y`` over Δ⁰, with its map to ``Y``."""
    start = constant(Y, 0)
    result, to_start = derive(start, [("s", 0)] * n)
    return result, compose(start.to_parent, to_start)


# -------# Deletion formulas #-------- #
def face_deletion_check(X: Correspondence, i: int) -> IsoResult:
    """``d_i X ≅ X - X_i``: remove every cell with a vertex over ``i``."""
    face = corr_face(X, i)
    doomed = {v for v in X.total.cells_of_dim(0) if X.vertex_image(v) == i}
    _, inclusion = X.total.delete_cells(lambda c: c in doomed)
    return compare_over(face.to_parent, inclusion)


def degeneracy_deletion_check(X: Correspondence, i: int) -> IsoResult:
    """``s_i X ≅ X × Δ¹ - (X_j, 1)_{j<i} - (X_j, 0)_{j>i}`` inside the cylinder."""
    degenerate = corr_degeneracy(X, i)
    cylinder = product(X.total, simplex(1))
    doomed = set()
    for v in cylinder.obj.cells_of_dim(0):
        j = X.vertex_image(cylinder.proj1.assignment[v].cell)
        e = int(cylinder.proj2.assignment[v].cell)
        if (j < i and e == 1) or (j > i and e == 0):
            doomed.add(v)
    _, inclusion = cylinder.obj.delete_cells(lambda c: c in doomed)
    return compare_over(degenerate.cone.proj1, inclusion)


# -------# Pasting along the base #-------- #
def _ambient_compare(X_root: FiniteSimplicialSet, left, right) -> IsoResult:
    """Compares two ``(correspondence, map to X_root)`` pairs inside ``X_root × Δᵐ``."""
    (Z1, j1), (Z2, j2) = left, right
    if Z1.n != Z2.n:
        return IsoResult(False, None, f"base dimensions differ: {Z1.n} vs {Z2.n}")
    ambient = product(X_root, simplex(Z1.n))
    return compare_over(Z1.embedding(j1, ambient), Z2.embedding(j2, ambient))


def face_pasting_check(f: SimplicialMap, sigma: SimplexRef, i: int) -> IsoResult:
    """``f⁻¹(d_i σ) ≅ d_i f⁻¹(σ)``."""
    A = f.target
    direct = fiber(f, A.face(sigma, i))
    outer = fiber(f, sigma)
    derived = corr_face(outer, i)
    return _ambient_compare(
        f.source, (direct, direct.to_parent), (derived, compose(outer.to_parent, derived.to_parent))
    )


def degeneracy_pasting_check(f: SimplicialMap, sigma: SimplexRef, i: int) -> IsoResult:
    """``f⁻¹(s_i σ) ≅ s_i f⁻¹(σ)``."""
    A = f.target
    direct = fiber(f, A.degeneracy(sigma, i))
    outer = fiber(f, sigma)
    derived = corr_degeneracy(outer, i)
    return _ambient_compare(
        f.source, (direct, direct.to_parent), (derived, compose(outer.to_parent, derived.to_parent))
    )


# -------# Weak simplicial identities #-------- #
@dataclass
class IdentityCheck:
    identity: str
    i: int
    j: int
    holds: bool
    reason: str = ""


@dataclass
class WeakIdentityReport:
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(check.holds for check in self.checks)

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "checks": [
                dict(identity=c.identity, i=c.i, j=c.j, holds=c.holds, reason=c.reason) for c in self.checks
            ],
        }


def _identity_cases(n: int):
    """``(name, i, j, lhs ops, rhs ops)``; ops apply left to right."""
    for j in range(n + 1):
        for i in range(j):
            if n >= 2:
                yield "d_i d_j = d_j-1 d_i", i, j, [("d", j), ("d", i)], [("d", i), ("d", j - 1)]
    for j in range(n + 1):
        for i in range(n + 2):
            lhs = [("s", j), ("d", i)]
            if i < j and n >= 1:
                yield "d_i s_j = s_j-1 d_i", i, j, lhs, [("d", i), ("s", j - 1)]
            elif i in (j, j + 1):
                yield "d_i s_j = id", i, j, lhs, []
            elif i > j + 1:
                yield "d_i s_j = s_j d_i-1", i, j, lhs, [("d", i - 1), ("s", j)]
    for j in range(n + 1):
        for i in range(j + 1):
            yield "s_i s_j = s_j+1 s_i", i, j, [("s", j), ("s", i)], [("s", i), ("s", j + 1)]


def weak_simplicial_identities_check(X: Correspondence, max_n: int = 3) -> WeakIdentityReport:
    """Verifies each simplicial identity on ``X`` up to a canonical isomorphism."""
    if X.n > max_n:
        raise ValueError(f"{X.n}-correspondence exceeds max_n={max_n}")
    report = WeakIdentityReport()
    for name, i, j, lhs_ops, rhs_ops in _identity_cases(X.n):
        lhs = derive(X, lhs_ops)
        rhs = derive(X, rhs_ops)
        result = _ambient_compare(X.total, lhs, rhs)
        report.checks.append(IdentityCheck(name, i, j, result.verdict, result.reason))
    log.debug(f"checked {len(report.checks)} weak identities on a {X.n}-correspondence")
    return report


# -------# Cotabulators and mapping spaces #-------- #
@dataclass
class HomBijection:
    over_count: int
    plain_count: int
    bijective: bool

    @property
    def verdict(self) -> bool:
        return self.bijective and self.over_count == self.plain_count


def cotabulator_hom_check(X: Correspondence, Y: FiniteSimplicialSet, budget: Optional[int] = DEFAULT_BUDGET) -> HomBijection:
    """``Hom over Δⁿ(X, Y × Δⁿ) ≅ Hom(X.total, Y)`` through ``F -> proj_Y . F``."""
    P = product(Y, simplex(X.n))
    over = enumerate_maps(X.total, P.obj, budget=budget, over=(X.structure, P.proj2))
    plain = enumerate_maps(X.total, Y, budget=budget)
    images = {compose(P.proj1, F).key() for F in over}
    bijective = len(images) == len(over) and images == {g.key() for g in plain}
    return HomBijection(len(over), len(plain), bijective)


@dataclass
class VerticalMappingSpace:
    maps: List[SimplicialMap]
    level: List[SimplicialMap]
    bijective: bool

    def __len__(self):
        return len(self.maps)


def vertical_mapping_space(
    X: FiniteSimplicialSet, Y: FiniteSimplicialSet, n: int, budget: Optional[int] = DEFAULT_BUDGET
) -> VerticalMappingSpace:
    """Maps ``sⁿX -> sⁿY`` over Δⁿ, matched with ``function_complex_level(X, Y, n)``."""
    sX, sY = constant(X, n), constant(Y, n)
    maps = enumerate_maps(sX.total, sY.total, budget=budget, over=(sX.structure, sY.structure))
    level = function_complex_level(X, Y, n, budget=budget)
    images = {compose(sY.to_parent, F).key() for F in maps}
    bijective = len(images) == len(maps) and images == {g.key() for g in level}
    return VerticalMappingSpace(maps, level, bijective)
