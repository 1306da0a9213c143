"""Finite simplicial sets presented by nondegenerate cells.

Every simplex is stored in Eilenberg-Zilber form ``s_I c``: a degeneracy
word applied to a nondegenerate cell.  Faces of a cell are simplices in
that form, and all dimensionwise sets are derived on demand.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from corrkit import utils
from corrkit.errors import ValidationError, ValidationReport
from corrkit.simplicial import delta
from corrkit.simplicial.delta import DegeneracyWord, Monotone

log = utils.get_logger(__name__)


@dataclass(frozen=True, order=True)
class SimplexRef:
    word: DegeneracyWord
    cell: str

    def __str__(self):
        return f"{self.word}.{self.cell}" if len(self.word) else self.cell

    @classmethod
    def of(cls, cell: str) -> "SimplexRef":
        return cls(DegeneracyWord(), cell)

    @property
    def is_degenerate(self) -> bool:
        return not self.word.is_identity


def as_ref(value) -> SimplexRef:
    """Accepts a SimplexRef, a bare cell id or a ``(word, cell)`` pair."""
    if isinstance(value, SimplexRef):
        return value
    if isinstance(value, str):
        return SimplexRef.of(value)
    word, cell = value
    if not isinstance(word, DegeneracyWord):
        word = DegeneracyWord(tuple(word))
    return SimplexRef(word, str(cell))


class FiniteSimplicialSet:
    """A simplicial set with finitely many nondegenerate cells.

    Args:
        cells: cell id -> dimension.
        faces: cell id -> the ``dim + 1`` faces ``d_0 .. d_n`` of the cell;
            vertices have no faces.
        labels: optional display names.
    """

    def __init__(
        self,
        cells: Mapping[str, int],
        faces: Optional[Mapping[str, Sequence]] = None,
        labels: Optional[Mapping[str, str]] = None,
    ):
        order = sorted(cells, key=lambda c: (int(cells[c]), str(c)))
        faces = faces or {}
        self._dims: Dict[str, int] = {str(c): int(cells[c]) for c in order}
        self._faces: Dict[str, Tuple[SimplexRef, ...]] = {
            str(c): tuple(as_ref(x) for x in faces.get(c, ())) for c in order
        }
        self.labels = dict(labels or {})
        self._by_dim: Dict[int, Tuple[str, ...]] = {}
        for c in order:
            self._by_dim.setdefault(self._dims[c], ())
            self._by_dim[self._dims[c]] += (c,)
        self._act_cache: Dict[Tuple[SimplexRef, Monotone], SimplexRef] = {}
        self._simplices: Dict[int, Tuple[SimplexRef, ...]] = {}

    # -------# Presentation #-------- #
    @property
    def cells(self) -> Tuple[str, ...]:
        return tuple(self._dims)

    @property
    def dim(self) -> int:
        """Top dimension of a nondegenerate cell, -1 when empty."""
        return max(self._dims.values(), default=-1)

    def __contains__(self, cell) -> bool:
        return cell in self._dims

    def __len__(self):
        return len(self._dims)

    def dim_of(self, cell: str) -> int:
        return self._dims[cell]

    def faces_of(self, cell: str) -> Tuple[SimplexRef, ...]:
        return self._faces[cell]

    def cells_of_dim(self, m: int) -> Tuple[str, ...]:
        return self._by_dim.get(m, ())

    def counts(self) -> List[int]:
        return [len(self.cells_of_dim(m)) for m in range(self.dim + 1)]

    def __eq__(self, other):
        if not isinstance(other, FiniteSimplicialSet):
            return NotImplemented
        return self._dims == other._dims and self._faces == other._faces

    __hash__ = None

    def __repr__(self):
        return f"FiniteSimplicialSet(counts={self.counts()})"

    # -------# Simplicial operators #-------- #
    def simplex_dim(self, x: SimplexRef) -> int:
        return self._dims[x.cell] + len(x.word)

    def act(self, x: SimplexRef, theta: Monotone) -> SimplexRef:
        """``x . theta`` for a monotone ``theta`` into ``[dim x]``, in normal form."""
        key = (x, theta)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        m = self._dims[x.cell]
        mono, epi = delta.factor(delta.compose(x.word.surjection(m), theta))
        y = self._cell_mono(x.cell, mono)
        k = self._dims[y.cell]
        result = SimplexRef(DegeneracyWord.from_surjection(delta.compose(y.word.surjection(k), epi)), y.cell)
        self._act_cache[key] = result
        return result

    def _cell_mono(self, cell: str, mono: Monotone) -> SimplexRef:
        m = self._dims[cell]
        if len(mono) == m + 1:
            return SimplexRef.of(cell)
        j = delta.missed(mono, m)[0]
        rest = tuple(v if v < j else v - 1 for v in mono)
        return self.act(self._faces[cell][j], rest)

    def face(self, x: SimplexRef, i: int) -> SimplexRef:
        return self.act(x, delta.coface(i, self.simplex_dim(x)))

    def degeneracy(self, x: SimplexRef, j: int) -> SimplexRef:
        return self.act(x, delta.codegeneracy(j, self.simplex_dim(x)))

    def apply_word(self, x: SimplexRef, word: DegeneracyWord) -> SimplexRef:
        if word.is_identity:
            return x
        return self.act(x, word.surjection(self.simplex_dim(x)))

    def vertices(self, x: SimplexRef) -> Tuple[str, ...]:
        return tuple(self.act(x, (k,)).cell for k in range(self.simplex_dim(x) + 1))

    def simplices(self, n: int) -> Tuple[SimplexRef, ...]:
        """X_n: every ``s_I c`` with ``dim c + |I| = n``."""
        cached = self._simplices.get(n)
        if cached is not None:
            return cached
        out = []
        for m in range(0, min(n, self.dim) + 1):
            cells = self.cells_of_dim(m)
            if not cells:
                continue
            for epi in delta.surjections(n, m):
                word = DegeneracyWord.from_surjection(epi)
                out.extend(SimplexRef(word, c) for c in cells)
        self._simplices[n] = tuple(out)
        return self._simplices[n]

    # -------# Subobjects #-------- #
    def restrict(self, keep: Iterable[str]) -> Tuple["FiniteSimplicialSet", "SimplicialMap"]:
        """The subcomplex on ``keep`` (which must be closed under faces) and its inclusion."""
        keep = set(keep)
        report = ValidationReport()
        for c in keep:
            for i, face in enumerate(self._faces[c]):
                if face.cell not in keep:
                    report.add("not-closed", c, face=i, missing=face.cell)
        if not report.ok:
            raise ValidationError("cell set is not closed under faces", report)
        sub = FiniteSimplicialSet(
            {c: self._dims[c] for c in keep},
            {c: self._faces[c] for c in keep},
            {c: v for c, v in self.labels.items() if c in keep},
        )
        return sub, SimplicialMap(sub, self, {c: SimplexRef.of(c) for c in sub.cells})

    def delete_cells(self, doomed) -> Tuple["FiniteSimplicialSet", "SimplicialMap"]:
        """Removes every cell for which ``doomed(cell)`` holds, together with its cofaces."""
        removed = set()
        for c in self.cells:
            if doomed(c) or any(face.cell in removed for face in self._faces[c]):
                removed.add(c)
        return self.restrict(c for c in self.cells if c not in removed)

    def closure(self, cells: Iterable[str]) -> set:
        """Smallest face-closed set of cells containing ``cells``."""
        seen, stack = set(), list(cells)
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            stack.extend(face.cell for face in self._faces[c])
        return seen

    def maximal_cells(self) -> List[str]:
        """Cells that are not a face of another cell."""
        used = {face.cell for c in self.cells for face in self._faces[c]}
        return [c for c in self.cells if c not in used]


class SimplicialMap:
    """A simplicial map given by the images of nondegenerate cells."""

    def __init__(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet, assignment: Mapping):
        self.source = source
        self.target = target
        self.assignment: Dict[str, SimplexRef] = {
            c: as_ref(assignment[c]) for c in source.cells if c in assignment
        }

    def __call__(self, x) -> SimplexRef:
        x = as_ref(x)
        y = self.assignment[x.cell]
        if x.word.is_identity:
            return y
        return self.target.apply_word(y, x.word)

    def key(self) -> Tuple[Tuple[str, SimplexRef], ...]:
        return tuple(sorted(self.assignment.items()))

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.assignment == other.assignment and self.source == other.source and self.target == other.target

    __hash__ = None

    def __repr__(self):
        return f"SimplicialMap({self.source!r} -> {self.target!r})"

    @classmethod
    def identity(cls, X: FiniteSimplicialSet) -> "SimplicialMap":
        return cls(X, X, {c: SimplexRef.of(c) for c in X.cells})

    def then(self, other: "SimplicialMap") -> "SimplicialMap":
        """``other`` after ``self``."""
        return compose(other, self)

    def validate(self) -> ValidationReport:
        return validate_map(self)


def compose(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """g after f."""
    return SimplicialMap(f.source, g.target, {c: g(y) for c, y in f.assignment.items()})


# -------# Validation #-------- #
def validate_sset(X: FiniteSimplicialSet) -> ValidationReport:
    """Every structural problem and every failed identity ``d_i d_j = d_{j-1} d_i``."""
    report = ValidationReport()
    for c in X.cells:
        n = X.dim_of(c)
        faces = X.faces_of(c)
        if n < 0:
            report.add("negative-dimension", c, dim=n)
            continue
        expected = n + 1 if n > 0 else 0
        if len(faces) != expected:
            report.add("face-arity", c, expected=expected, found=len(faces))
            continue
        for i, face in enumerate(faces):
            if face.cell not in X:
                report.add("unknown-face", c, face=i, cell=face.cell)
            elif not face.word.fits(X.dim_of(face.cell)):
                report.add("malformed-word", c, face=i, word=list(face.word.indices))
            elif X.simplex_dim(face) != n - 1:
                report.add("face-dimension", c, face=i, expected=n - 1, found=X.simplex_dim(face))
    if not report.ok:
        return report

    for c in X.cells:
        n = X.dim_of(c)
        if n < 2:
            continue
        top = SimplexRef.of(c)
        for j in range(n + 1):
            for i in range(j):
                lhs = X.face(X.face(top, j), i)
                rhs = X.face(X.face(top, i), j - 1)
                if lhs != rhs:
                    report.add("simplicial-identity", c, i=i, j=j, lhs=str(lhs), rhs=str(rhs))
    return report


def validate_map(f: SimplicialMap) -> ValidationReport:
    report = ValidationReport()
    S, T = f.source, f.target
    for c in S.cells:
        y = f.assignment.get(c)
        if y is None:
            report.add("unassigned", c)
        elif y.cell not in T:
            report.add("unknown-image", c, cell=y.cell)
        elif not y.word.fits(T.dim_of(y.cell)) or T.simplex_dim(y) != S.dim_of(c):
            report.add("dimension-mismatch", c, expected=S.dim_of(c), image=str(y))
    if not report.ok:
        return report

    for c in S.cells:
        top = SimplexRef.of(c)
        for i, face in enumerate(S.faces_of(c)):
            lhs = f(face)
            rhs = T.face(f(top), i)
            if lhs != rhs:
                report.add("face-violation", c, face=i, image_of_face=str(lhs), face_of_image=str(rhs))
    return report


def check_valid(value, what: str = "simplicial set") -> None:
    report = validate_sset(value) if isinstance(value, FiniteSimplicialSet) else validate_map(value)
    if not report.ok:
        raise ValidationError(f"invalid {what}", report)
