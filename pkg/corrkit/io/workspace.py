"""A flat-file store of validated values, keyed by content hash and by name."""
import json
import os
from pathlib import Path
from typing import Dict, Iterator, Optional, Tuple, Union

from corrkit import utils
from corrkit.categories import CatData, validate_cat_data
from corrkit.correspondences.correspondence import Correspondence
from corrkit.errors import ValidationError, ValidationReport
from corrkit.io.serialize import Value, canonical_json, content_id, from_json, parse, to_json
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplicialMap, validate_map, validate_sset

log = utils.get_logger(__name__)

INDEX = "index.json"


def validate_value(value: Union[Value, CatData]) -> ValidationReport:
    """Full validation of anything the serializer understands, endpoints included."""
    if isinstance(value, FiniteSimplicialSet):
        return validate_sset(value)
    if isinstance(value, SimplicialMap):
        report = ValidationReport()
        report.extend(validate_sset(value.source), prefix="source")
        report.extend(validate_sset(value.target), prefix="target")
        if report.ok:
            report.extend(validate_map(value))
        return report
    if isinstance(value, Correspondence):
        report = ValidationReport()
        report.extend(validate_sset(value.total), prefix="total")
        if report.ok:
            report.extend(value.validate())
        return report
    return validate_cat_data(value)


def require_valid(value: Value, what: Optional[str] = None) -> Value:
    report = validate_value(value)
    if not report.ok:
        raise ValidationError(f"invalid {what or type(value).__name__}", report)
    return value


class Workspace:
    """Stores each value once as ``<sha256>.json``; ``index.json`` maps names to ids."""

    def __init__(self, root: Union[str, os.PathLike]):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        index_path = self.root / INDEX
        self.index: Dict[str, str] = json.loads(index_path.read_text()) if index_path.exists() else {}

    def _write_index(self) -> None:
        (self.root / INDEX).write_text(canonical_json(self.index))

    def put(self, value: Value, name: Optional[str] = None) -> str:
        require_valid(value)
        doc = to_json(value)
        vid = content_id(doc)
        path = self.root / f"{vid}.json"
        if not path.exists():
            path.write_text(canonical_json(doc))
            log.debug(f"Stored {doc['type']} as {vid[:12]}")
        if name is not None:
            self.index[name] = vid
            self._write_index()
        return vid

    def resolve(self, key: str) -> str:
        if key in self.index:
            return self.index[key]
        matches = [p.stem for p in self.root.glob(f"{key}*.json") if p.name != INDEX]
        if len(matches) == 1:
            return matches[0]
        if not matches:
            raise KeyError(f"no value named or identified by {key!r} in {self.root}")
        raise KeyError(f"id prefix {key!r} is ambiguous in {self.root}")

    def get(self, key: str) -> Value:
        return parse((self.root / f"{self.resolve(key)}.json").read_text())

    def __contains__(self, key: str) -> bool:
        try:
            self.resolve(key)
        except KeyError:
            return False
        return True

    def items(self) -> Iterator[Tuple[str, Value]]:
        for name in sorted(self.index):
            yield name, self.get(name)


def load_file(path: Union[str, os.PathLike], validate: bool = True) -> Value:
    """Parses a JSON document from disk, validating it unless told not to."""
    log.debug(f"Reading {path}")
    value = parse(Path(path).read_text())
    return require_valid(value, str(path)) if validate else value


def load_dir(root: Union[str, os.PathLike], validate: bool = True) -> Dict[str, Value]:
    """Every ``*.json`` in ``root`` keyed by file stem; a stored workspace is read through its index."""
    root = Path(root)
    if (root / INDEX).exists():
        return dict(Workspace(root).items())
    out = {}
    for path in sorted(root.glob("*.json")):
        out[path.stem] = load_file(path, validate)
    log.info(f"Loaded {len(out)} values from {root}")
    return out


def load_doc(doc: Dict, validate: bool = True) -> Value:
    value = from_json(doc)
    return require_valid(value) if validate else value
