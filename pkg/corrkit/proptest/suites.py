"""The seeded instance suites behind ``corrkit command=proptest``."""
from dataclasses import replace
from typing import Iterator

from corrkit import utils
from corrkit.categories.grothendieck import grothendieck
from corrkit.categories.lax import gro_vs_dcolim, roundtrip_cat
from corrkit.categories.nerve import nerve, nerve_map
from corrkit.categories.profunctor import left_unit_iso, right_unit_iso, tensor_equivalence_check
from corrkit.correspondences.correspondence import (
    Correspondence,
    cotabulator_hom_check,
    weak_simplicial_identities_check,
)
from corrkit.correspondences.diagram import roundtrip_check, truncation_stable
from corrkit.fibrations.horns import fiberwise_criterion, is_inner_fibration, is_quasi_category
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
from corrkit.proptest import Instance, Outcome, PropertySuite, register_suite, shrink_map

log = utils.get_logger(__name__)

NERVE_TRUNCATION = 3


def _small(cfg: GenConfig, **caps) -> GenConfig:
    return replace(cfg, **{key: min(getattr(cfg, key), cap) for key, cap in caps.items()})


class MapSuite(PropertySuite):
    """Instances ``{"map": f}`` with ``f`` a random map into a small random base."""

    def generate(self, cfg: GenConfig) -> Instance:
        A = gen_sset(_small(cfg, max_cells=6))
        return {"map": gen_map_over(cfg, A)}

    def shrink(self, instance: Instance) -> Iterator[Instance]:
        for f in shrink_map(instance["map"]):
            yield {"map": f}


@register_suite("roundtrip-sset")
class RoundtripSset(MapSuite):
    def check(self, instance: Instance) -> Outcome:
        result = roundtrip_check(instance["map"], self.truncation)
        return Outcome(result.verdict, result.reason)


@register_suite("stabilization")
class Stabilization(MapSuite):
    def check(self, instance: Instance) -> Outcome:
        result = truncation_stable(instance["map"], self.truncation)
        return Outcome(result.verdict, result.reason)


@register_suite("fiberwise")
class Fiberwise(MapSuite):
    """The global inner-fibration test and the fiberwise one give the same verdict."""

    def generate(self, cfg: GenConfig) -> Instance:
        A = gen_sset(_small(cfg, max_cells=4, max_dim=2))
        return {"map": gen_map_over(_small(cfg, max_cells=8), A)}

    def check(self, instance: Instance) -> Outcome:
        result = fiberwise_criterion(instance["map"], max_n=self.max_n, budget=self.budget)
        lo, hi = result.checked_dims
        reason = f"horns in dims {lo}..{hi}"
        if not result.agreement:
            reason += f": global={result.global_verdict}, fiberwise={result.fiberwise_verdict}"
        return Outcome(result.agreement, reason, result.conclusive)


class CorrespondenceSuite(PropertySuite):
    def generate(self, cfg: GenConfig) -> Instance:
        n = int(cfg.rng(20).integers(0, cfg.max_dim + 1))
        return {"correspondence": gen_correspondence(cfg, n)}

    def shrink(self, instance: Instance) -> Iterator[Instance]:
        X: Correspondence = instance["correspondence"]
        for p in shrink_map(X.structure):
            yield dict(instance, correspondence=Correspondence(p.source, X.n, p))


@register_suite("weak-identities")
class WeakIdentities(CorrespondenceSuite):
    def check(self, instance: Instance) -> Outcome:
        report = weak_simplicial_identities_check(instance["correspondence"], max_n=3)
        broken = [f"{c.identity}({c.i},{c.j}): {c.reason}" for c in report.checks if not c.holds]
        return Outcome(report.verdict, "; ".join(broken))


@register_suite("cotabulator-hom")
class CotabulatorHom(CorrespondenceSuite):
    def generate(self, cfg: GenConfig) -> Instance:
        small = _small(cfg, max_cells=5, max_dim=2)
        n = int(cfg.rng(20).integers(0, small.max_dim + 1))
        return {"correspondence": gen_correspondence(small, n), "target": gen_sset(_small(cfg, max_cells=4, max_dim=2))}

    def check(self, instance: Instance) -> Outcome:
        result = cotabulator_hom_check(instance["correspondence"], instance["target"], budget=self.budget)
        return Outcome(result.verdict, f"over={result.over_count}, plain={result.plain_count}, bijective={result.bijective}")


@register_suite("roundtrip-cat")
class RoundtripCat(PropertySuite):
    def generate(self, cfg: GenConfig) -> Instance:
        A = gen_category(cfg, salt=3)
        X = gen_category(cfg, salt=10)
        return {"functor": gen_functor(cfg, X, A)}

    def check(self, instance: Instance) -> Outcome:
        result = roundtrip_cat(instance["functor"])
        return Outcome(result.verdict, result.reason)


@register_suite("tensor-equivalence")
class TensorEquivalence(PropertySuite):
    """Coend and collage-gluing composites agree; ``hom`` is a unit on both sides."""

    def generate(self, cfg: GenConfig) -> Instance:
        small = _small(cfg, max_objects=3, max_arrows=3)
        C, D, E = (gen_category(small, salt=s) for s in (3, 10, 12))
        return {"u": gen_profunctor(small, C, D, salt=5), "v": gen_profunctor(small, D, E, salt=11)}

    def check(self, instance: Instance) -> Outcome:
        u, v = instance["u"], instance["v"]
        for what, result in (
            ("tensor", tensor_equivalence_check(v, u)),
            ("left unit", left_unit_iso(u)),
            ("right unit", right_unit_iso(u)),
        ):
            if not result.verdict:
                return Outcome(False, f"{what}: {result.reason}")
        return Outcome(True)


@register_suite("gro-dcolim")
class GroDcolim(PropertySuite):
    def generate(self, cfg: GenConfig) -> Instance:
        return {"diagram": gen_cat_diagram(_small(cfg, max_objects=3, max_arrows=3))}

    def check(self, instance: Instance) -> Outcome:
        result = gro_vs_dcolim(instance["diagram"])
        return Outcome(result.verdict, result.reason)


@register_suite("nerve-inner")
class NerveInner(PropertySuite):
    """The nerve of a Grothendieck projection is an inner fibration and its total nerve a quasi-category."""

    def generate(self, cfg: GenConfig) -> Instance:
        return {"diagram": gen_cat_diagram(_small(cfg, max_objects=3, max_arrows=3))}

    def check(self, instance: Instance) -> Outcome:
        # nerves are truncated at max_n, so horns above it would lose their fillers
        max_n = self.max_n or NERVE_TRUNCATION
        G, p = grothendieck(instance["diagram"])
        NG = nerve(G, up_to=max_n)
        fibration = is_inner_fibration(nerve_map(p, NG, nerve(p.target, up_to=max_n)), max_n=max_n, budget=self.budget)
        if not fibration.verdict:
            return Outcome(False, f"{len(fibration.failures)} unfillable relative horns", not fibration.budget_exhausted)
        total = is_quasi_category(NG, max_n=max_n, budget=self.budget)
        return Outcome(total.verdict, f"{len(total.failures)} unfillable horns", not total.budget_exhausted)
