"""Name -> class tables for everything the config can pick by ``_target_``."""
from typing import Dict, KeysView

from corrkit.commands import COMMAND_REGISTRY
from corrkit.proptest import SUITE_REGISTRY

registry_dict: Dict[str, Dict[str, type]] = dict(
    command=COMMAND_REGISTRY,
    suite=SUITE_REGISTRY,
)


def _group(group_name: str) -> Dict[str, type]:
    group = registry_dict.get(group_name)
    if group is None:
        raise KeyError(f"{group_name} is not a valid registry group {sorted(registry_dict)}.")
    return group


def get_module(group_name: str, module_name: str):
    return _group(group_name).get(module_name)


def get_registered_modules(group_name: str) -> KeysView:
    return _group(group_name).keys()


__all__ = [
    "get_module",
    "get_registered_modules",
]
