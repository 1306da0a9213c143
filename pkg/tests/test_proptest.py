import pytest

from corrkit.errors import BudgetExceededError, UnsupportedInputError
from corrkit.io import GenConfig
from corrkit.proptest import SUITE_REGISTRY, Outcome, PropertySuite, register_suite, shrink_sset
from corrkit.proptest.runner import get_suite, run_suite
from corrkit.simplicial.standard import simplex


@register_suite("fewer-than-two-cells")
class FewerThanTwoCells(PropertySuite):
    """Fails on Δ², so the runner has something to shrink."""

    def generate(self, cfg):
        return {"sset": simplex(2)}

    def check(self, instance):
        return Outcome(len(instance["sset"]) < 2, f"{len(instance['sset'])} cells")

    def shrink(self, instance):
        for inclusion in shrink_sset(instance["sset"]):
            yield {"sset": inclusion.source}


@register_suite("out-of-budget")
class OutOfBudget(PropertySuite):
    def generate(self, cfg):
        return {"sset": simplex(0)}

    def check(self, instance):
        raise BudgetExceededError(self.budget)


@register_suite("unsupported")
class Unsupported(PropertySuite):
    def generate(self, cfg):
        raise UnsupportedInputError("no instance")


def test_builtin_suites_are_registered():
    assert {
        "roundtrip-sset",
        "stabilization",
        "fiberwise",
        "weak-identities",
        "cotabulator-hom",
        "roundtrip-cat",
        "tensor-equivalence",
        "gro-dcolim",
        "nerve-inner",
    } <= set(SUITE_REGISTRY)
    with pytest.raises(KeyError):
        get_suite("no-such-suite")


def test_failures_are_shrunk():
    report = run_suite("fewer-than-two-cells", 2, GenConfig(), progress=False)
    assert not report.verdict
    assert report.counts["fail"] == 2
    first = report.results[0]
    assert first.reason == "7 cells"
    assert len(first.counterexample["sset"]["cells"]) == 7
    assert len(first.shrunk["sset"]["cells"]) == 2


def test_budget_makes_a_case_inconclusive():
    report = run_suite("out-of-budget", 3, GenConfig(), suite_kwargs=dict(budget=5), progress=False)
    assert report.verdict
    assert report.counts["inconclusive"] == 3
    assert "budget of 5" in report.results[0].reason


def test_generator_errors_are_reported():
    report = run_suite("unsupported", 1, GenConfig(), progress=False)
    assert not report.verdict
    assert report.results[0].status == "error"
    assert report.results[0].reason.startswith("UnsupportedInputError")


@pytest.mark.parametrize("suite", ["roundtrip-sset", "roundtrip-cat", "gro-dcolim"])
def test_builtin_suites_pass(suite):
    report = run_suite(suite, 3, GenConfig(seed=1), progress=False)
    assert report.verdict, report.to_dict()
    assert [r.case for r in report.results] == [0, 1, 2]
    assert report.to_dict()["cases"] == 3


def test_fiberwise_suite_checks_horns_up_to_two_above_the_source(triangle_map):
    outcome = SUITE_REGISTRY["fiberwise"]().check({"map": triangle_map})
    assert outcome.verdict and outcome.conclusive
    assert outcome.reason == "horns in dims 2..4"
    assert SUITE_REGISTRY["fiberwise"](max_n=3).check({"map": triangle_map}).reason == "horns in dims 2..3"
