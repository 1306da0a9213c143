import importlib
import logging
import pkgutil
import random
import warnings
from typing import Iterable, Sequence

import numpy as np
import rich
import rich.console
import rich.syntax
import rich.tree
from omegaconf import DictConfig, OmegaConf


def get_logger(name=__name__) -> logging.Logger:
    """Module logger; handlers and colors come from the hydra colorlog config."""
    return logging.getLogger(name)


log = get_logger(__name__)


def extras(config: DictConfig) -> DictConfig:
    """Resolves the config and applies the ``ignore_warnings`` / ``print_config`` flags."""
    OmegaConf.set_struct(config, False)
    OmegaConf.resolve(config)

    if config.get("ignore_warnings"):
        log.info("Python warnings silenced <config.ignore_warnings=True>")
        warnings.filterwarnings("ignore")

    if config.get("print_config"):
        print_config(config)

    return config


CONFIG_ORDER = ("command", "gen", "seed", "budget", "max_dim", "format", "output")


def print_config(config: DictConfig, order: Sequence[str] = CONFIG_ORDER, save_to: str = "config_tree.log") -> None:
    """Renders the resolved config as a rich tree on stderr and into ``save_to``."""
    tree = rich.tree.Tree("corrkit config", style="dim", guide_style="dim")
    keys = [k for k in order if k in config] + [k for k in config if k not in order]
    for key in keys:
        node = config[key]
        text = OmegaConf.to_yaml(node, resolve=True) if isinstance(node, DictConfig) else str(node)
        tree.add(key, style="dim", guide_style="dim").add(rich.syntax.Syntax(text, "yaml"))

    # stdout carries command output
    rich.console.Console(stderr=True).print(tree)
    if save_to:
        with open(save_to, "w") as file:
            rich.print(tree, file=file)


def import_modules(modules_dir: str, namespace: str, excludes: Iterable[str] = ()) -> None:
    """Imports every public module next to a registry so its decorators run."""
    for info in pkgutil.iter_modules([modules_dir]):
        if info.name.startswith("_") or info.name in excludes:
            continue
        importlib.import_module(f"{namespace}.{info.name}")


def seed_everything(seed: int, verbose: bool = False) -> int:
    """Pins python and numpy global state.

    Generators derive their own ``numpy.random.Generator`` and never read
    global state; this only covers incidental randomness.
    """
    if verbose:
        log.info(f"Random seed set to {seed}.")
    random.seed(seed)
    np.random.seed(seed % (2 ** 32))
    return seed
