"""Runs a property suite over seeded cases, shrinks failures and merges the reports."""
import time
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Tuple

from tqdm import tqdm

from corrkit import utils
from corrkit.errors import BudgetExceededError, CorrkitError
from corrkit.io.generators import GenConfig
from corrkit.proptest import SUITE_REGISTRY, Instance, Outcome, PropertySuite

log = utils.get_logger(__name__)

MAX_SHRINK_STEPS = 64
STATUSES = ("pass", "fail", "inconclusive", "error")


@dataclass
class CaseResult:
    case: int
    status: str
    reason: str = ""
    seconds: float = 0.0
    counterexample: Optional[Dict[str, Any]] = None
    shrunk: Optional[Dict[str, Any]] = None


@dataclass
class SuiteReport:
    suite: str
    seed: int
    results: List[CaseResult] = field(default_factory=list)

    @property
    def counts(self) -> Dict[str, int]:
        return {s: sum(1 for r in self.results if r.status == s) for s in STATUSES}

    @property
    def verdict(self) -> bool:
        counts = self.counts
        return counts["fail"] == 0 and counts["error"] == 0

    @property
    def failures(self) -> List[CaseResult]:
        return [r for r in self.results if r.status in ("fail", "error")]

    def to_dict(self, timings: bool = False):
        results = []
        for r in self.results:
            entry = asdict(r)
            if not timings:
                entry.pop("seconds")
            if r.status == "pass":
                entry = dict(case=r.case, status=r.status)
            results.append(entry)
        return dict(suite=self.suite, seed=self.seed, cases=len(self.results), verdict=self.verdict, counts=self.counts, results=results)


def get_suite(name: str, **kwargs) -> PropertySuite:
    if name not in SUITE_REGISTRY:
        raise KeyError(f"{name} is not a registered suite [{sorted(SUITE_REGISTRY)}]")
    return SUITE_REGISTRY[name](**kwargs)


def _attempt(suite: PropertySuite, instance: Instance) -> Tuple[str, str]:
    try:
        outcome: Outcome = suite.check(instance)
    except BudgetExceededError as e:
        return "inconclusive", str(e)
    if not outcome.conclusive:
        return "inconclusive", outcome.reason
    return ("pass" if outcome.verdict else "fail"), outcome.reason


def shrink(suite: PropertySuite, instance: Instance, max_steps: int = MAX_SHRINK_STEPS) -> Instance:
    """Greedy: keeps the first smaller instance that still fails, until none does."""
    current = instance
    for _ in range(max_steps):
        for candidate in suite.shrink(current):
            try:
                status, _ = _attempt(suite, candidate)
            except CorrkitError:
                continue
            if status == "fail":
                current = candidate
                break
        else:
            break
    return current


def run_case(job: Tuple[str, Dict[str, Any], GenConfig, int]) -> CaseResult:
    """One case in isolation; importable at top level so worker processes can run it."""
    name, suite_kwargs, gen, case = job
    suite = get_suite(name, **suite_kwargs)
    started = time.perf_counter()
    instance = None
    try:
        instance = suite.generate(gen.for_case(case))
        status, reason = _attempt(suite, instance)
    except CorrkitError as e:
        status, reason = "error", f"{type(e).__name__}: {e}"
    result = CaseResult(case, status, reason)
    if status in ("fail", "error") and instance is not None:
        result.counterexample = suite.describe(instance)
        if status == "fail":
            smaller = shrink(suite, instance)
            if smaller is not instance:
                result.shrunk = suite.describe(smaller)
    result.seconds = time.perf_counter() - started
    return result


def run_suite(
    name: str,
    cases: int,
    gen: GenConfig,
    workers: int = 1,
    suite_kwargs: Optional[Dict[str, Any]] = None,
    progress: bool = True,
) -> SuiteReport:
    """Runs cases ``0 .. cases-1``; the merged report is ordered by case index whatever the worker count."""
    suite_kwargs = dict(suite_kwargs or {})
    get_suite(name, **suite_kwargs)
    jobs = [(name, suite_kwargs, gen, case) for case in range(cases)]
    log.info(f"Running suite <{name}> on {cases} cases with {workers} worker(s), seed={gen.seed}")
    if workers > 1:
        with Pool(workers) as pool:
            results = list(tqdm(pool.imap_unordered(run_case, jobs), total=cases, desc=name, disable=not progress))
    else:
        results = [run_case(job) for job in tqdm(jobs, desc=name, disable=not progress)]
    report = SuiteReport(name, gen.seed, sorted(results, key=lambda r: r.case))
    log.info(f"Suite <{name}>: {report.counts}")
    for r in report.failures:
        log.warning(f"case {r.case} {r.status}: {r.reason}")
    return report
