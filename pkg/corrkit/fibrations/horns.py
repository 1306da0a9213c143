"""Inner horn filling: quasi-categories, inner fibrations and the fiberwise criterion."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from corrkit import utils
from corrkit.correspondences import fiber
from corrkit.errors import BudgetExceededError, ValidationReport
from corrkit.simplicial.maps import DEFAULT_BUDGET, iter_maps
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap, compose
from corrkit.simplicial.standard import horn, horn_face_id, to_point, yoneda

log = utils.get_logger(__name__)


@dataclass
class HornProblem:
    """A horn ``Λⁿ_k -> X``, optionally sitting over ``base_simplex: Δⁿ -> A`` along ``p``."""

    n: int
    k: int
    horn_map: SimplicialMap
    base_simplex: Optional[SimplexRef] = None
    p: Optional[SimplicialMap] = field(default=None, repr=False)

    @property
    def inner(self) -> bool:
        return 0 < self.k < self.n

    def encoding(self) -> Tuple[str, ...]:
        return tuple(f"{c}={y}" for c, y in self.horn_map.key())

    def faces(self) -> Dict[int, SimplexRef]:
        """The prescribed faces ``d_i`` for ``i != k``."""
        return {
            i: self.horn_map(SimplexRef.of(horn_face_id(self.n, i)))
            for i in range(self.n + 1)
            if i != self.k
        }

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        if self.horn_map.source != horn(self.n, self.k):
            report.add("not-a-horn", "horn_map", n=self.n, k=self.k)
            return report
        if self.p is None:
            return report
        if self.base_simplex is None:
            report.add("missing-base-simplex", "base_simplex")
            return report
        below = compose(self.p, self.horn_map)
        sigma = yoneda(self.p.target, self.base_simplex)
        for c in self.horn_map.source.cells:
            if below.assignment[c] != sigma.assignment[c]:
                report.add("square-does-not-commute", c, below=str(below.assignment[c]), base=str(sigma.assignment[c]))
        return report

    def to_dict(self):
        out = dict(n=self.n, k=self.k, horn={c: str(y) for c, y in self.horn_map.key()})
        if self.base_simplex is not None:
            out["base_simplex"] = str(self.base_simplex)
        return out


@dataclass
class FibrationReport:
    verdict: bool
    checked_dims: Tuple[int, int]
    failures: List[HornProblem] = field(default_factory=list)
    budget_exhausted: bool = False
    problems_checked: int = 0

    def to_dict(self, witnesses: bool = True):
        out = dict(
            verdict=self.verdict,
            checked_dims=list(self.checked_dims),
            budget_exhausted=self.budget_exhausted,
            problems_checked=self.problems_checked,
            failure_count=len(self.failures),
        )
        if witnesses:
            out["failures"] = [pr.to_dict() for pr in self.failures]
        return out


def horn_fillers(pr: HornProblem) -> List[SimplexRef]:
    """Every n-simplex of the target, degenerate ones included, that fills ``pr``."""
    X = pr.horn_map.target
    wanted = pr.faces()
    out = []
    for y in X.simplices(pr.n):
        if all(X.face(y, i) == face for i, face in wanted.items()):
            if pr.p is None or pr.p(y) == pr.base_simplex:
                out.append(y)
    return out


class _FillerIndex:
    """n-simplices of ``X`` keyed by their faces other than the k-th."""

    def __init__(self, X: FiniteSimplicialSet):
        self.X = X
        self._index: Dict[Tuple[int, int], Dict[Tuple[SimplexRef, ...], List[SimplexRef]]] = {}

    def lookup(self, n: int, k: int, faces: Dict[int, SimplexRef]) -> List[SimplexRef]:
        if (n, k) not in self._index:
            index: Dict[Tuple[SimplexRef, ...], List[SimplexRef]] = {}
            for y in self.X.simplices(n):
                key = tuple(self.X.face(y, i) for i in range(n + 1) if i != k)
                index.setdefault(key, []).append(y)
            self._index[(n, k)] = index
        return self._index[(n, k)].get(tuple(faces[i] for i in sorted(faces)), [])


def _default_max_n(X: FiniteSimplicialSet) -> int:
    return max(X.dim, 0) + 2


def is_inner_fibration(
    p: SimplicialMap, max_n: Optional[int] = None, budget: Optional[int] = DEFAULT_BUDGET
) -> FibrationReport:
    """Solves every relative inner horn problem for ``p`` with ``2 <= n <= max_n``.

    For each horn in ``X`` the candidate base simplices are the fillers of its
    image in ``A``; the horn fails if some candidate has no filler above it.
    """
    X, A = p.source, p.target
    max_n = _default_max_n(X) if max_n is None else max_n
    upstairs, downstairs = _FillerIndex(X), _FillerIndex(A)
    failures: List[HornProblem] = []
    exhausted, checked = False, 0
    try:
        for n in range(2, max_n + 1):
            for k in range(1, n):
                for h in iter_maps(horn(n, k), X, budget=budget):
                    checked += 1
                    image = HornProblem(n, k, compose(p, h))
                    for sigma in downstairs.lookup(n, k, image.faces()):
                        pr = HornProblem(n, k, h, sigma, p)
                        if not any(p(y) == sigma for y in upstairs.lookup(n, k, pr.faces())):
                            failures.append(pr)
    except BudgetExceededError as e:
        log.warning(f"horn enumeration stopped early: {e}")
        exhausted = True
    failures.sort(key=lambda pr: (pr.n, pr.k, pr.encoding(), str(pr.base_simplex)))
    verdict = not failures and not exhausted
    log.debug(f"checked {checked} inner horns up to n={max_n}: {len(failures)} failures")
    return FibrationReport(verdict, (2, max_n), failures, exhausted, checked)


def is_quasi_category(
    X: FiniteSimplicialSet, max_n: Optional[int] = None, budget: Optional[int] = DEFAULT_BUDGET
) -> FibrationReport:
    """Inner horn filling for ``X`` itself, i.e. for ``X -> Δ⁰``."""
    report = is_inner_fibration(to_point(X), max_n=max_n, budget=budget)
    for pr in report.failures:
        pr.base_simplex, pr.p = None, None
    return report


@dataclass
class FiberwiseResult:
    global_verdict: bool
    fiberwise_verdict: bool
    agreement: bool
    conclusive: bool
    checked_dims: Tuple[int, int]
    global_report: FibrationReport = field(repr=False)
    fiber_reports: Dict[SimplexRef, FibrationReport] = field(default_factory=dict, repr=False)

    def to_dict(self, witnesses: bool = True):
        return dict(
            global_verdict=self.global_verdict,
            fiberwise_verdict=self.fiberwise_verdict,
            agreement=self.agreement,
            conclusive=self.conclusive,
            checked_dims=list(self.checked_dims),
            global_report=self.global_report.to_dict(witnesses),
            failing_fibers=sorted(str(s) for s, r in self.fiber_reports.items() if not r.verdict),
        )


def fiberwise_criterion(
    p: SimplicialMap, max_n: Optional[int] = None, budget: Optional[int] = DEFAULT_BUDGET
) -> FiberwiseResult:
    """``p`` against the inner-fibration test of every fiber over a nondegenerate simplex."""
    max_n = _default_max_n(p.source) if max_n is None else max_n
    whole = is_inner_fibration(p, max_n=max_n, budget=budget)
    fiber_reports = {}
    for c in p.target.cells:
        sigma = SimplexRef.of(c)
        fiber_reports[sigma] = is_inner_fibration(fiber(p, sigma).structure, max_n=max_n, budget=budget)
    fiberwise = all(r.verdict for r in fiber_reports.values())
    conclusive = not whole.budget_exhausted and not any(r.budget_exhausted for r in fiber_reports.values())
    return FiberwiseResult(
        whole.verdict, fiberwise, whole.verdict == fiberwise, conclusive, (2, max_n), whole, fiber_reports
    )
