import os
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Optional

from corrkit import utils
from corrkit.io.generators import GenConfig
from corrkit.io.serialize import to_json
from corrkit.simplicial.maps import DEFAULT_BUDGET
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplicialMap, compose

log = utils.get_logger(__name__)

Instance = Dict[str, Any]


@dataclass
class Outcome:
    verdict: bool
    reason: str = ""
    # False when a budget cut the check short
    conclusive: bool = True


class PropertySuite:
    """A seeded family of instances and the property every instance must satisfy.

    Subclasses implement ``generate`` and ``check``; ``shrink`` proposes
    smaller instances for the runner to retry when a case fails.
    """

    def __init__(
        self, budget: Optional[int] = DEFAULT_BUDGET, max_n: Optional[int] = None, truncation: Optional[int] = None
    ):
        self.budget = budget
        self.max_n = max_n
        self.truncation = truncation

    @property
    def name(self) -> str:
        return getattr(self, "_name_", type(self).__name__)

    def generate(self, cfg: GenConfig) -> Instance:
        raise NotImplementedError

    def check(self, instance: Instance) -> Outcome:
        raise NotImplementedError

    def shrink(self, instance: Instance) -> Iterator[Instance]:
        return iter(())

    def describe(self, instance: Instance) -> Dict[str, Any]:
        return {key: to_json(value) for key, value in sorted(instance.items())}


def shrink_sset(X: FiniteSimplicialSet) -> Iterator[SimplicialMap]:
    """Inclusions of ``X`` minus one maximal cell, largest cells first."""
    for c in sorted(X.maximal_cells(), key=lambda c: (-X.dim_of(c), c)):
        if len(X) > 1:
            yield X.delete_cells(c.__eq__)[1]


def shrink_map(f: SimplicialMap) -> Iterator[SimplicialMap]:
    """``f`` restricted to its source minus one maximal cell."""
    for inclusion in shrink_sset(f.source):
        yield compose(f, inclusion)


SUITE_REGISTRY = {}


def register_suite(name):
    def decorator(cls):
        cls._name_ = name
        SUITE_REGISTRY[name] = cls
        return cls
    return decorator


# automatically import any Python files in the proptest/ directory
utils.import_modules(os.path.dirname(__file__), "corrkit.proptest")
