from typing import Any, Mapping, Union

from omegaconf import DictConfig, OmegaConf

from corrkit.utils import get_logger

log = get_logger(__name__)


def qualified_name(t: Any) -> str:
    return f"{t.__module__}.{t.__qualname__}" if callable(t) else str(t)


def instantiate_from_config(cfg: Union[DictConfig, Mapping], group: str, **override_kwargs):
    """Builds the class registered under ``cfg._target_`` in ``group``; the other keys become kwargs."""
    if "_target_" not in cfg:
        raise KeyError("Expected key `_target_` to instantiate.")

    from corrkit.utils import registry
    kwargs = OmegaConf.to_container(cfg, resolve=True) if isinstance(cfg, DictConfig) else dict(cfg)
    _target_ = str(kwargs.pop("_target_"))
    target = registry.get_module(group_name=group, module_name=_target_)
    if target is None:
        raise KeyError(
            f"{_target_} is not a registered <{group}> class [{sorted(registry.get_registered_modules(group))}]."
        )
    log.info(f"    Resolving {group} <{_target_}> -> <{qualified_name(target)}>")
    return target(**kwargs, **override_kwargs)
