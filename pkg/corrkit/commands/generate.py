from dataclasses import replace
from typing import Any, Dict, Optional

from omegaconf import DictConfig, OmegaConf

from corrkit import utils
from corrkit.commands import Command, CommandResult, register_command, value_payload
from corrkit.errors import SchemaError
from corrkit.io.generators import (
    GenConfig,
    gen_cat_diagram,
    gen_category,
    gen_correspondence,
    gen_functor,
    gen_map_over,
    gen_profunctor,
    gen_sset,
)
from corrkit.proptest import SUITE_REGISTRY
from corrkit.proptest.runner import run_suite

log = utils.get_logger(__name__)

GEN_KINDS = ("sset", "map", "correspondence", "category", "functor", "profunctor", "cat_diagram")


def gen_config(config: DictConfig) -> GenConfig:
    """``config.gen`` with the global ``seed`` and ``max_dim`` layered on top."""
    options: Dict[str, Any] = OmegaConf.to_container(config.get("gen") or OmegaConf.create(), resolve=True)
    options["seed"] = int(config.get("seed") or 0)
    if config.get("max_dim") is not None:
        options["max_dim"] = int(config.max_dim)
    try:
        return GenConfig(**options)
    except (TypeError, ValueError) as e:
        raise SchemaError("gen", str(e)) from e


def generate(kind: str, cfg: GenConfig, n: int = 1):
    if kind == "sset":
        return gen_sset(cfg)
    if kind == "map":
        return gen_map_over(cfg, gen_sset(replace(cfg, max_cells=min(cfg.max_cells, 6))))
    if kind == "correspondence":
        return gen_correspondence(cfg, n)
    if kind == "category":
        return gen_category(cfg)
    if kind == "functor":
        return gen_functor(cfg, gen_category(cfg, salt=10), gen_category(cfg, salt=3))
    if kind == "profunctor":
        return gen_profunctor(cfg, gen_category(cfg, salt=3), gen_category(cfg, salt=10))
    return gen_cat_diagram(cfg)


@register_command("gen")
class Gen(Command):
    def __init__(self, kind: str = "sset", case: int = 0, n: int = 1, **kwargs):
        super().__init__(**kwargs)
        if kind not in GEN_KINDS:
            raise SchemaError("command.kind", f"unknown kind {kind!r}, expected one of {GEN_KINDS}")
        self.kind, self.case, self.n = kind, case, n

    def __call__(self, config: DictConfig) -> CommandResult:
        cfg = gen_config(config).for_case(self.case)
        value = generate(self.kind, cfg, self.n)
        log.info(f"Generated {self.kind} (seed={cfg.seed}, case={cfg.case})")
        return CommandResult(value_payload(value, kind=self.kind, seed=cfg.seed, case=cfg.case))


@register_command("proptest")
class Proptest(Command):
    def __init__(
        self,
        suite: str = "roundtrip-sset",
        cases: int = 100,
        max_n: Optional[int] = None,
        truncation: Optional[int] = None,
        progress: bool = True,
        **kwargs,
    ):
        super().__init__(**kwargs)
        if suite not in SUITE_REGISTRY:
            raise SchemaError("command.suite", f"unknown suite {suite!r}, expected one of {sorted(SUITE_REGISTRY)}")
        self.suite, self.cases = suite, int(cases)
        self.max_n, self.truncation, self.progress = max_n, truncation, progress

    def __call__(self, config: DictConfig) -> CommandResult:
        suite_kwargs = dict(budget=config.get("budget"), max_n=self.max_n, truncation=self.truncation)
        report = run_suite(
            self.suite,
            self.cases,
            gen_config(config),
            workers=int(config.get("workers") or 1),
            suite_kwargs=suite_kwargs,
            progress=self.progress,
        )
        return CommandResult(report.to_dict(), report.verdict)
