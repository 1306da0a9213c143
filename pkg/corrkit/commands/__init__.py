import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from hydra.utils import to_absolute_path
from omegaconf import DictConfig, ListConfig, OmegaConf

from corrkit import utils
from corrkit.correspondences.correspondence import Correspondence, fiber
from corrkit.errors import SchemaError
from corrkit.io.serialize import Value, parse_ref, to_json
from corrkit.io.workspace import load_file
from corrkit.simplicial.sset import SimplexRef, SimplicialMap

log = utils.get_logger(__name__)


@dataclass
class CommandResult:
    """``verdict`` is None for constructions, True/False for checks."""

    payload: Dict[str, Any] = field(default_factory=dict)
    verdict: Optional[bool] = None

    @property
    def exit_code(self) -> int:
        return 1 if self.verdict is False else 0


class Command:
    """A CLI verb; keyword arguments come from ``configs/command/<verb>.yaml``.

    ``config`` passed to ``__call__`` is the whole composed config, for the
    global keys (``seed``, ``budget``, ``max_dim``, ``gen``, ``workers``).
    """

    def __init__(self, input: Optional[str] = None, **kwargs):
        self.input = input
        self.options = kwargs

    @property
    def name(self) -> str:
        return getattr(self, "_name_", type(self).__name__)

    def __call__(self, config: DictConfig) -> CommandResult:
        raise NotImplementedError

    # -------# Helpers #-------- #
    def load(self, path: Optional[str] = None, key: str = "input", validate: bool = True) -> Value:
        path = path if path is not None else self.input
        if path is None:
            raise SchemaError(f"command.{key}", "no input file given")
        return load_file(to_absolute_path(path), validate=validate)

    def expect(self, value: Value, *kinds, key: str = "input"):
        if not isinstance(value, kinds):
            names = " or ".join(k.__name__ for k in kinds)
            raise SchemaError(f"command.{key}", f"expected {names}, got {type(value).__name__}")
        return value

    def simplex(self, raw: Any, key: str = "simplex") -> SimplexRef:
        if isinstance(raw, (DictConfig, ListConfig)):
            raw = OmegaConf.to_container(raw, resolve=True)
        if raw is None:
            raise SchemaError(f"command.{key}", "a simplex is required")
        # the override grammar reads numeric cell ids as ints
        if isinstance(raw, int):
            raw = str(raw)
        return parse_ref(raw, f"command.{key}")

    def correspondence(self, simplex: Any = None) -> Correspondence:
        """The input as a correspondence; a map is first cut down to its fiber over ``simplex``."""
        value = self.expect(self.load(), Correspondence, SimplicialMap)
        if isinstance(value, SimplicialMap):
            value = fiber(value, self.simplex(simplex))
        return value


def value_payload(value: Value, **extra) -> Dict[str, Any]:
    out = {"value": to_json(value)}
    out.update(extra)
    return out


COMMAND_REGISTRY = {}


def register_command(name):
    def decorator(cls):
        cls._name_ = name
        COMMAND_REGISTRY[name] = cls
        return cls
    return decorator


# automatically import any Python files in the commands/ directory
utils.import_modules(os.path.dirname(__file__), "corrkit.commands")
