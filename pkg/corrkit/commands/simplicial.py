from typing import Any, Dict, Optional

from omegaconf import DictConfig

from corrkit import utils
from corrkit.categories.lax import LaxProfDiagram, dcolim_prof
from corrkit.commands import Command, CommandResult, register_command, value_payload
from corrkit.correspondences.correspondence import Correspondence, corr_degeneracy, corr_face, fiber
from corrkit.correspondences.diagram import classifying_diagram, cotabulator, double_colimit, roundtrip_check
from corrkit.errors import SchemaError
from corrkit.io.serialize import to_json
from corrkit.io.workspace import validate_value
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap

log = utils.get_logger(__name__)


def correspondence_summary(X: Correspondence) -> Dict[str, Any]:
    return {
        "n": X.n,
        "counts": X.total.counts(),
        "vertex_fibers": [len(X.vertex_fiber(i).cells_of_dim(0)) for i in range(X.n + 1)],
    }


def _check_simplex(A: FiniteSimplicialSet, sigma: SimplexRef) -> SimplexRef:
    if sigma.cell not in A or not sigma.word.fits(A.dim_of(sigma.cell)):
        raise SchemaError("command.simplex", f"{sigma} is not a simplex of the base")
    return sigma


def _check_index(i: Optional[int], upper: int, what: str) -> int:
    if i is None or not 0 <= int(i) <= upper:
        raise SchemaError("command.i", f"{what} index must lie in 0..{upper}, got {i}")
    return int(i)


@register_command("validate")
class Validate(Command):
    """Parses without validating, then reports every violation."""

    def __call__(self, config: DictConfig) -> CommandResult:
        value = self.load(validate=False)
        report = validate_value(value)
        log.info(f"{type(value).__name__}: {len(report.issues)} violation(s)")
        return CommandResult(dict(kind=type(value).__name__, **report.to_dict()), report.ok)


@register_command("fiber")
class Fiber(Command):
    def __init__(self, simplex: Any = None, **kwargs):
        super().__init__(**kwargs)
        self.simplex_arg = simplex

    def __call__(self, config: DictConfig) -> CommandResult:
        f = self.expect(self.load(), SimplicialMap)
        sigma = _check_simplex(f.target, self.simplex(self.simplex_arg))
        X = fiber(f, sigma)
        log.info(f"Fiber over {sigma}: counts {X.total.counts()}")
        return CommandResult(value_payload(X, simplex=str(sigma), **correspondence_summary(X)))


@register_command("face")
class Face(Command):
    def __init__(self, i: Optional[int] = None, simplex: Any = None, **kwargs):
        super().__init__(**kwargs)
        self.i = i
        self.simplex_arg = simplex

    def __call__(self, config: DictConfig) -> CommandResult:
        X = self.correspondence(self.simplex_arg)
        if X.n < 1:
            raise SchemaError("command.input", "a 0-correspondence has no faces")
        i = _check_index(self.i, X.n, "face")
        Y = corr_face(X, i)
        log.info(f"d{i} of a {X.n}-correspondence: counts {Y.total.counts()}")
        return CommandResult(value_payload(Y, i=i, **correspondence_summary(Y)))


@register_command("degeneracy")
class Degeneracy(Command):
    def __init__(self, i: Optional[int] = None, simplex: Any = None, **kwargs):
        super().__init__(**kwargs)
        self.i = i
        self.simplex_arg = simplex

    def __call__(self, config: DictConfig) -> CommandResult:
        X = self.correspondence(self.simplex_arg)
        i = _check_index(self.i, X.n, "degeneracy")
        Y = corr_degeneracy(X, i)
        log.info(f"s{i} of a {X.n}-correspondence: counts {Y.total.counts()}")
        return CommandResult(value_payload(Y, i=i, **correspondence_summary(Y)))


@register_command("cotab")
class Cotab(Command):
    def __init__(self, simplex: Any = None, truncation: Optional[int] = None, **kwargs):
        super().__init__(**kwargs)
        self.simplex_arg = simplex
        self.truncation = truncation

    def __call__(self, config: DictConfig) -> CommandResult:
        X = self.correspondence(self.simplex_arg)
        total, cocone = cotabulator(X, self.truncation)
        report = cocone.validate()
        return CommandResult(
            value_payload(
                total,
                counts=total.counts(),
                components=len(cocone.components),
                natural=report.ok,
            ),
            report.ok,
        )


@register_command("dcolim")
class Dcolim(Command):
    """The double colimit of the classifying diagram of a map, or of a normal lax diagram of profunctors."""

    def __init__(self, truncation: Optional[int] = None, **kwargs):
        super().__init__(**kwargs)
        self.truncation = truncation

    def __call__(self, config: DictConfig) -> CommandResult:
        value = self.expect(self.load(), SimplicialMap, LaxProfDiagram)
        if isinstance(value, LaxProfDiagram):
            Q, q = dcolim_prof(value)
            log.info(f"Double colimit of profunctors: {len(Q.objects)} objects, {len(Q.arrows)} arrows")
            return CommandResult(dict(value=to_json(Q), projection=to_json(q), objects=len(Q.objects), arrows=len(Q.arrows)))
        D = classifying_diagram(value, self.truncation)
        dc = double_colimit(D)
        log.info(f"Double colimit over {len(D.at)} simplices at truncation {dc.truncation}")
        return CommandResult(
            value_payload(dc.obj, counts=dc.obj.counts(), truncation=dc.truncation, simplices=len(D.at))
        )


@register_command("roundtrip")
class Roundtrip(Command):
    def __init__(self, truncation: Optional[int] = None, **kwargs):
        super().__init__(**kwargs)
        self.truncation = truncation

    def __call__(self, config: DictConfig) -> CommandResult:
        f = self.expect(self.load(), SimplicialMap)
        result = roundtrip_check(f, self.truncation)
        log.info(f"Round trip verdict: {result.verdict}")
        payload = dict(
            verdict=result.verdict,
            over_base=result.over_base,
            reason=result.reason,
            truncation=result.double_colimit.truncation,
            counts=result.double_colimit.obj.counts(),
        )
        return CommandResult(payload, result.verdict)
