from typing import Optional

from omegaconf import DictConfig

from corrkit import utils
from corrkit.categories.category import FiniteCategory, FunctorData
from corrkit.categories.grothendieck import CatDiagram, grothendieck, is_grothendieck_fibration
from corrkit.categories.lax import LaxProfDiagram, gro_vs_dcolim, lax_roundtrip_check, roundtrip_cat
from corrkit.categories.nerve import nerve, nerve_map
from corrkit.categories.profunctor import (
    Profunctor,
    collage,
    collage_roundtrip_check,
    companion,
    tensor_coend,
    tensor_equivalence_check,
    tensor_geometric,
)
from corrkit.commands import Command, CommandResult, register_command, value_payload
from corrkit.errors import SchemaError
from corrkit.io.serialize import to_json

log = utils.get_logger(__name__)

PROF_OPS = ("collage", "tensor", "companion")
TENSOR_METHODS = ("coend", "geometric")


def category_summary(C: FiniteCategory):
    return {"objects": len(C.objects), "arrows": len(C.arrows)}


@register_command("nerve")
class Nerve(Command):
    """Nerve of a category, or of a functor as a simplicial map."""

    def __init__(self, up_to: Optional[int] = None, **kwargs):
        super().__init__(**kwargs)
        self.up_to = up_to

    def __call__(self, config: DictConfig) -> CommandResult:
        value = self.expect(self.load(), FiniteCategory, FunctorData)
        if isinstance(value, FiniteCategory):
            N = nerve(value, up_to=self.up_to)
            return CommandResult(value_payload(N, counts=N.counts()))
        source = nerve(value.source, up_to=self.up_to)
        Nf = nerve_map(value, source, nerve(value.target, up_to=max(source.dim, 0)))
        return CommandResult(value_payload(Nf, counts=source.counts()))


@register_command("prof")
class Prof(Command):
    """``op=collage`` of a profunctor, ``op=tensor`` of ``other ⊗ input``, ``op=companion`` of a functor."""

    def __init__(self, op: str = "collage", method: str = "coend", other: Optional[str] = None, **kwargs):
        super().__init__(**kwargs)
        if op not in PROF_OPS:
            raise SchemaError("command.op", f"unknown op {op!r}, expected one of {PROF_OPS}")
        if method not in TENSOR_METHODS:
            raise SchemaError("command.method", f"unknown method {method!r}, expected one of {TENSOR_METHODS}")
        self.op, self.method, self.other = op, method, other

    def __call__(self, config: DictConfig) -> CommandResult:
        if self.op == "companion":
            F = self.expect(self.load(), FunctorData)
            u = companion(F)
            return CommandResult(value_payload(u, elements=len(u.where)))

        u = self.expect(self.load(), Profunctor)
        if self.op == "collage":
            U, p = collage(u)
            check = collage_roundtrip_check(u)
            payload = dict(value=to_json(U), projection=to_json(p), roundtrip=check.verdict, **category_summary(U))
            return CommandResult(payload, check.verdict)

        v = self.expect(self.load(self.other, key="other"), Profunctor, key="other")
        if v.source != u.target:
            raise SchemaError("command.other", "the middle categories of the two profunctors differ")
        if self.method == "coend":
            w = tensor_coend(v, u)
        else:
            w, _ = tensor_geometric(v, u)
        agreement = tensor_equivalence_check(v, u)
        log.info(f"Tensor by {self.method}: {len(w.where)} elements, agreement {agreement.verdict}")
        return CommandResult(
            value_payload(w, method=self.method, elements=len(w.where), agreement=agreement.verdict),
            agreement.verdict,
        )


@register_command("gro")
class Gro(Command):
    def __call__(self, config: DictConfig) -> CommandResult:
        F = self.expect(self.load(), CatDiagram)
        G, p = grothendieck(F)
        check = is_grothendieck_fibration(p)
        log.info(f"Grothendieck construction: {len(G.objects)} objects, fibration {check.verdict}")
        payload = dict(value=to_json(G), projection=to_json(p), fibration=check.to_dict(), **category_summary(G))
        return CommandResult(payload, check.verdict)


@register_command("gro_vs_dcolim")
class GroVsDcolim(Command):
    def __call__(self, config: DictConfig) -> CommandResult:
        F = self.expect(self.load(), CatDiagram)
        result = gro_vs_dcolim(F)
        return CommandResult(dict(verdict=result.verdict, reason=result.reason), result.verdict)


@register_command("cat_roundtrip")
class CatRoundtrip(Command):
    """A functor through its classifying diagram, or a lax diagram through its double colimit."""

    def __call__(self, config: DictConfig) -> CommandResult:
        value = self.expect(self.load(), FunctorData, LaxProfDiagram)
        result = roundtrip_cat(value) if isinstance(value, FunctorData) else lax_roundtrip_check(value)
        log.info(f"Round trip verdict: {result.verdict}")
        return CommandResult(dict(verdict=result.verdict, reason=result.reason), result.verdict)
