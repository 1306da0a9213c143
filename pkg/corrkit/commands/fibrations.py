from typing import Optional

from omegaconf import DictConfig

from corrkit import utils
from corrkit.commands import Command, CommandResult, register_command
from corrkit.errors import BudgetExceededError
from corrkit.fibrations.horns import fiberwise_criterion, is_inner_fibration, is_quasi_category
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplicialMap

log = utils.get_logger(__name__)


class HornCommand(Command):
    """Shared flags: ``max_n`` (falls back to the global ``max_dim``) and ``witnesses``."""

    def __init__(self, max_n: Optional[int] = None, witnesses: bool = True, **kwargs):
        super().__init__(**kwargs)
        self.max_n = max_n
        self.witnesses = witnesses

    def bounds(self, config: DictConfig):
        max_n = self.max_n if self.max_n is not None else config.get("max_dim")
        return max_n, config.get("budget")

    def conclusive(self, exhausted: bool, budget: Optional[int]) -> None:
        if exhausted:
            raise BudgetExceededError(budget, "horn enumeration")


@register_command("is_quasicat")
class IsQuasicat(HornCommand):
    def __call__(self, config: DictConfig) -> CommandResult:
        X = self.expect(self.load(), FiniteSimplicialSet)
        max_n, budget = self.bounds(config)
        report = is_quasi_category(X, max_n=max_n, budget=budget)
        self.conclusive(report.budget_exhausted, budget)
        log.info(f"Quasi-category up to n={report.checked_dims[1]}: {report.verdict}")
        return CommandResult(report.to_dict(self.witnesses), report.verdict)


@register_command("is_inner_fib")
class IsInnerFib(HornCommand):
    def __call__(self, config: DictConfig) -> CommandResult:
        p = self.expect(self.load(), SimplicialMap)
        max_n, budget = self.bounds(config)
        report = is_inner_fibration(p, max_n=max_n, budget=budget)
        self.conclusive(report.budget_exhausted, budget)
        log.info(f"Inner fibration up to n={report.checked_dims[1]}: {report.verdict}")
        return CommandResult(report.to_dict(self.witnesses), report.verdict)


@register_command("fiberwise")
class Fiberwise(HornCommand):
    """Verdict is the agreement of the two checkers."""

    def __call__(self, config: DictConfig) -> CommandResult:
        p = self.expect(self.load(), SimplicialMap)
        max_n, budget = self.bounds(config)
        result = fiberwise_criterion(p, max_n=max_n, budget=budget)
        self.conclusive(not result.conclusive, budget)
        log.info(f"Global {result.global_verdict}, fiberwise {result.fiberwise_verdict}")
        return CommandResult(result.to_dict(self.witnesses), result.agreement)
