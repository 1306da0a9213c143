"""Canonical JSON interchange for every value corrkit works with.

Each document is an object with a ``type`` tag.  Simplices are written as
``[word, cell]`` with ``word`` the decreasing degeneracy indices; a bare
cell id is accepted on input for a nondegenerate simplex.  Output is
canonical: sorted keys, no insignificant whitespace, so two equal values
serialize to identical bytes.
"""
import hashlib
import json
from typing import Any, Callable, Dict, List, Mapping, Tuple, Union

from corrkit import utils
from corrkit.categories.category import FiniteCategory, FunctorData
from corrkit.categories.grothendieck import CatDiagram
from corrkit.categories.lax import LaxProfDiagram
from corrkit.categories.profunctor import Profunctor
from corrkit.correspondences.correspondence import Correspondence
from corrkit.errors import MalformedWordError, SchemaError
from corrkit.simplicial.delta import DegeneracyWord
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap
from corrkit.simplicial.standard import simplex

log = utils.get_logger(__name__)

Value = Union[
    FiniteSimplicialSet,
    SimplicialMap,
    Correspondence,
    FiniteCategory,
    FunctorData,
    Profunctor,
    CatDiagram,
    LaxProfDiagram,
]


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def content_id(doc: Any) -> str:
    return hashlib.sha256(canonical_json(doc).encode("utf-8")).hexdigest()


# -------# Schema helpers #-------- #
def _get(doc: Any, key: str, path: str, kind=None):
    if not isinstance(doc, dict):
        raise SchemaError(path, "expected an object")
    if key not in doc:
        raise SchemaError(f"{path}.{key}", "missing key")
    value = doc[key]
    if kind is not None and (not isinstance(value, kind) or kind is int and isinstance(value, bool)):
        raise SchemaError(f"{path}.{key}", f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(path, f"expected an array, got {type(value).__name__}")
    return value


def _str(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(path, f"expected a string, got {type(value).__name__}")
    return value


def _ref(value: Any, path: str) -> SimplexRef:
    if isinstance(value, str):
        return SimplexRef.of(value)
    if not isinstance(value, list) or len(value) != 2:
        raise SchemaError(path, "expected [word, cell] or a cell id")
    word, cell = value
    if not isinstance(word, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in word):
        raise SchemaError(f"{path}[0]", "a degeneracy word is an array of naturals")
    try:
        return SimplexRef(DegeneracyWord(tuple(word)), _str(cell, f"{path}[1]"))
    except MalformedWordError as e:
        raise SchemaError(f"{path}[0]", str(e)) from e


def parse_ref(value: Any, path: str = "$") -> SimplexRef:
    """A simplex given as a cell id or as ``[word, cell]``."""
    return _ref(value, path)


def _dump_ref(x: SimplexRef) -> list:
    return [list(x.word.indices), x.cell]


# -------# Simplicial sets and maps #-------- #
def _dump_sset(X: FiniteSimplicialSet) -> Dict:
    doc = {
        "type": "sset",
        "cells": [
            {"id": c, "dim": X.dim_of(c), "faces": [_dump_ref(x) for x in X.faces_of(c)]} for c in X.cells
        ],
    }
    if X.labels:
        doc["labels"] = dict(X.labels)
    return doc


def _load_sset(doc: Dict, path: str) -> FiniteSimplicialSet:
    cells, faces = {}, {}
    for k, record in enumerate(_list(_get(doc, "cells", path), f"{path}.cells")):
        where = f"{path}.cells[{k}]"
        cid = _str(_get(record, "id", where), f"{where}.id")
        if cid in cells:
            raise SchemaError(f"{where}.id", f"duplicate cell id {cid!r}")
        dim = _get(record, "dim", where, int)
        if dim < 0:
            raise SchemaError(f"{where}.dim", "dimension must be a natural number")
        refs = [_ref(x, f"{where}.faces[{i}]") for i, x in enumerate(_list(record.get("faces", []), f"{where}.faces"))]
        if len(refs) != (dim + 1 if dim > 0 else 0):
            raise SchemaError(
                f"{path}.faces.{cid}", f"a {dim}-cell has {dim + 1 if dim > 0 else 0} faces, found {len(refs)}"
            )
        cells[cid], faces[cid] = dim, refs
    for cid, refs in faces.items():
        for i, x in enumerate(refs):
            if x.cell not in cells:
                raise SchemaError(f"{path}.faces.{cid}[{i}]", f"unknown cell {x.cell!r}")
    labels = doc.get("labels", {})
    if not isinstance(labels, dict):
        raise SchemaError(f"{path}.labels", "expected an object")
    return FiniteSimplicialSet(cells, faces, labels)


def _dump_assignment(f: SimplicialMap) -> Dict:
    return {c: _dump_ref(y) for c, y in f.assignment.items()}


def _load_assignment(doc: Any, source: FiniteSimplicialSet, path: str) -> Dict[str, SimplexRef]:
    if not isinstance(doc, dict):
        raise SchemaError(path, "expected an object")
    assignment = {}
    for c, y in doc.items():
        if c not in source:
            raise SchemaError(f"{path}.{c}", "not a cell of the source")
        assignment[c] = _ref(y, f"{path}.{c}")
    return assignment


def _dump_map(f: SimplicialMap) -> Dict:
    return {
        "type": "map",
        "source": _dump_sset(f.source),
        "target": _dump_sset(f.target),
        "assignment": _dump_assignment(f),
    }


def _load_map(doc: Dict, path: str) -> SimplicialMap:
    S = _load_sset(_get(doc, "source", path, dict), f"{path}.source")
    T = _load_sset(_get(doc, "target", path, dict), f"{path}.target")
    return SimplicialMap(S, T, _load_assignment(_get(doc, "assignment", path), S, f"{path}.assignment"))


def _dump_correspondence(X: Correspondence) -> Dict:
    return {
        "type": "correspondence",
        "n": X.n,
        "total": _dump_sset(X.total),
        "structure": _dump_assignment(X.structure),
    }


def _load_correspondence(doc: Dict, path: str) -> Correspondence:
    n = _get(doc, "n", path, int)
    if n < 0:
        raise SchemaError(f"{path}.n", "base dimension must be a natural number")
    total = _load_sset(_get(doc, "total", path, dict), f"{path}.total")
    structure = SimplicialMap(total, simplex(n), _load_assignment(_get(doc, "structure", path), total, f"{path}.structure"))
    return Correspondence(total, n, structure)


# -------# Categories #-------- #
def _dump_category(C: FiniteCategory) -> Dict:
    return {
        "type": "category",
        "objects": list(C.objects),
        "arrows": [{"id": f, "src": s, "tgt": t} for f, (s, t) in C.arrows.items()],
        "comp": sorted([g, f, h] for (g, f), h in C.comp.items()),
        "ids": dict(C.ids),
    }


def _load_category(doc: Dict, path: str) -> FiniteCategory:
    objects = [_str(a, f"{path}.objects[{k}]") for k, a in enumerate(_list(_get(doc, "objects", path), f"{path}.objects"))]
    arrows = {}
    for k, record in enumerate(_list(_get(doc, "arrows", path), f"{path}.arrows")):
        where = f"{path}.arrows[{k}]"
        f = _str(_get(record, "id", where), f"{where}.id")
        if f in arrows:
            raise SchemaError(f"{where}.id", f"duplicate arrow id {f!r}")
        arrows[f] = (_str(_get(record, "src", where), f"{where}.src"), _str(_get(record, "tgt", where), f"{where}.tgt"))
    comp = {}
    for k, row in enumerate(_list(_get(doc, "comp", path), f"{path}.comp")):
        if not isinstance(row, list) or len(row) != 3 or not all(isinstance(x, str) for x in row):
            raise SchemaError(f"{path}.comp[{k}]", "expected [g, f, gf]")
        comp[(row[0], row[1])] = row[2]
    ids = _get(doc, "ids", path, dict)
    for a, i in ids.items():
        _str(i, f"{path}.ids.{a}")
    return FiniteCategory(objects, arrows, comp, ids)


def _load_string_map(doc: Any, path: str) -> Dict[str, str]:
    if not isinstance(doc, dict):
        raise SchemaError(path, "expected an object")
    return {k: _str(v, f"{path}.{k}") for k, v in doc.items()}


def _dump_functor_data(F: FunctorData) -> Dict:
    return {"objects": dict(F.objects), "arrows": dict(F.arrows)}


def _dump_functor(F: FunctorData) -> Dict:
    return dict(type="functor", source=_dump_category(F.source), target=_dump_category(F.target), **_dump_functor_data(F))


def _load_functor_data(doc: Dict, source: FiniteCategory, target: FiniteCategory, path: str) -> FunctorData:
    return FunctorData(
        source,
        target,
        _load_string_map(_get(doc, "objects", path), f"{path}.objects"),
        _load_string_map(_get(doc, "arrows", path), f"{path}.arrows"),
    )


def _load_functor(doc: Dict, path: str) -> FunctorData:
    C = _load_category(_get(doc, "source", path, dict), f"{path}.source")
    D = _load_category(_get(doc, "target", path, dict), f"{path}.target")
    return _load_functor_data(doc, C, D, path)


def _dump_profunctor_data(u: Profunctor) -> Dict:
    return {
        "elements": [{"c": c, "d": d, "xs": list(xs)} for (c, d), xs in u.elements.items()],
        "lact": sorted([g, x, y] for (g, x), y in u.lact.items()),
        "ract": sorted([x, f, y] for (x, f), y in u.ract.items()),
    }


def _dump_profunctor(u: Profunctor) -> Dict:
    return dict(type="profunctor", src=_dump_category(u.source), tgt=_dump_category(u.target), **_dump_profunctor_data(u))


def _triples(doc: Any, path: str) -> Dict[Tuple[str, str], str]:
    out = {}
    for k, row in enumerate(_list(doc, path)):
        if not isinstance(row, list) or len(row) != 3 or not all(isinstance(x, str) for x in row):
            raise SchemaError(f"{path}[{k}]", "expected a triple of ids")
        out[(row[0], row[1])] = row[2]
    return out


def _load_profunctor_data(doc: Dict, C: FiniteCategory, D: FiniteCategory, path: str) -> Profunctor:
    elements = {}
    for k, record in enumerate(_list(_get(doc, "elements", path), f"{path}.elements")):
        where = f"{path}.elements[{k}]"
        c = _str(_get(record, "c", where), f"{where}.c")
        d = _str(_get(record, "d", where), f"{where}.d")
        xs = [_str(x, f"{where}.xs[{i}]") for i, x in enumerate(_list(_get(record, "xs", where), f"{where}.xs"))]
        elements.setdefault((c, d), []).extend(xs)
    lact = _triples(doc.get("lact", []), f"{path}.lact")
    ract = _triples(doc.get("ract", []), f"{path}.ract")
    return Profunctor(C, D, elements, lact, ract)


def _load_profunctor(doc: Dict, path: str) -> Profunctor:
    C = _load_category(_get(doc, "src", path, dict), f"{path}.src")
    D = _load_category(_get(doc, "tgt", path, dict), f"{path}.tgt")
    return _load_profunctor_data(doc, C, D, path)


# -------# Diagrams #-------- #
def _load_fibers(doc: Dict, A: FiniteCategory, path: str) -> Dict[str, FiniteCategory]:
    categories = _get(doc, "categories", path, dict)
    return {a: _load_category(_get(categories, a, f"{path}.categories", dict), f"{path}.categories.{a}") for a in A.objects}


def _dump_cat_diagram(F: CatDiagram) -> Dict:
    return {
        "type": "cat_diagram",
        "base": _dump_category(F.base),
        "categories": {a: _dump_category(C) for a, C in F.categories.items()},
        "functors": {f: _dump_functor_data(G) for f, G in F.functors.items()},
    }


def _load_cat_diagram(doc: Dict, path: str) -> CatDiagram:
    A = _load_category(_get(doc, "base", path, dict), f"{path}.base")
    categories = _load_fibers(doc, A, path)
    functors = _get(doc, "functors", path, dict)
    out = {}
    for f, (a, b) in A.arrows.items():
        where = f"{path}.functors"
        out[f] = _load_functor_data(_get(functors, f, where, dict), categories[a], categories[b], f"{where}.{f}")
    return CatDiagram(A, categories, out)


def _dump_lax_diagram(D: LaxProfDiagram) -> Dict:
    return {
        "type": "lax_diagram",
        "base": _dump_category(D.base),
        "categories": {a: _dump_category(C) for a, C in D.categories.items()},
        "profunctors": {f: _dump_profunctor_data(u) for f, u in D.profunctors.items()},
        "mu": sorted([g, f, y, x, z] for (g, f), table in D.mu.items() for (y, x), z in table.items()),
        "unitors": {a: dict(eta) for a, eta in D.unitors.items()},
    }


def _load_lax_diagram(doc: Dict, path: str) -> LaxProfDiagram:
    A = _load_category(_get(doc, "base", path, dict), f"{path}.base")
    categories = _load_fibers(doc, A, path)
    profunctors = _get(doc, "profunctors", path, dict)
    phi = {}
    for f, (a, b) in A.arrows.items():
        where = f"{path}.profunctors"
        phi[f] = _load_profunctor_data(_get(profunctors, f, where, dict), categories[a], categories[b], f"{where}.{f}")
    mu: Dict[Tuple[str, str], Dict[Tuple[str, str], str]] = {}
    for k, row in enumerate(_list(_get(doc, "mu", path), f"{path}.mu")):
        if not isinstance(row, list) or len(row) != 5 or not all(isinstance(x, str) for x in row):
            raise SchemaError(f"{path}.mu[{k}]", "expected [g, f, y, x, z]")
        g, f, y, x, z = row
        mu.setdefault((g, f), {})[(y, x)] = z
    unitors_doc = doc.get("unitors", {})
    if not isinstance(unitors_doc, dict):
        raise SchemaError(f"{path}.unitors", "expected an object")
    unitors = {a: _load_string_map(eta, f"{path}.unitors.{a}") for a, eta in unitors_doc.items()}
    return LaxProfDiagram(A, categories, phi, mu, unitors)


_DUMPERS: List[Tuple[type, Callable[[Any], Dict]]] = [
    (FiniteSimplicialSet, _dump_sset),
    (SimplicialMap, _dump_map),
    (Correspondence, _dump_correspondence),
    (FiniteCategory, _dump_category),
    (FunctorData, _dump_functor),
    (Profunctor, _dump_profunctor),
    (CatDiagram, _dump_cat_diagram),
    (LaxProfDiagram, _dump_lax_diagram),
]

_LOADERS: Mapping[str, Callable[[Dict, str], Value]] = {
    "sset": _load_sset,
    "map": _load_map,
    "correspondence": _load_correspondence,
    "category": _load_category,
    "functor": _load_functor,
    "profunctor": _load_profunctor,
    "cat_diagram": _load_cat_diagram,
    "lax_diagram": _load_lax_diagram,
}


def to_json(value: Value) -> Dict:
    for kind, dump in _DUMPERS:
        if isinstance(value, kind):
            return dump(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def from_json(doc: Any, path: str = "$") -> Value:
    kind = _get(doc, "type", path, str)
    load = _LOADERS.get(kind)
    if load is None:
        raise SchemaError(f"{path}.type", f"unknown type {kind!r}, expected one of {sorted(_LOADERS)}")
    return load(doc, path)


def serialize(value: Value) -> str:
    return canonical_json(to_json(value))


def parse(text: Union[str, bytes]) -> Value:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("$", f"not JSON: {e}") from e
    value = from_json(doc)
    log.debug(f"Parsed {type(value).__name__}")
    return value


def dumps(doc: Any) -> str:
    """Canonical text for reports and other plain documents."""
    return canonical_json(doc)
