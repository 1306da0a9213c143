"""Standard simplices, their boundaries and horns, and maps out of them."""
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence, Tuple

from corrkit.errors import ValidationError, ValidationReport
from corrkit.simplicial import delta
from corrkit.simplicial.delta import DegeneracyWord, Monotone
from corrkit.simplicial.sset import FiniteSimplicialSet, SimplexRef, SimplicialMap


def subset_id(vertices: Sequence[int], n: int) -> str:
    sep = "" if n < 10 else "-"
    return sep.join(str(v) for v in vertices)


def _simplicial_complex(n: int, keep) -> FiniteSimplicialSet:
    cells, faces = {}, {}
    for size in range(1, n + 2):
        for subset in combinations(range(n + 1), size):
            if not keep(subset):
                continue
            cid = subset_id(subset, n)
            cells[cid] = size - 1
            if size > 1:
                faces[cid] = [
                    SimplexRef.of(subset_id(subset[:i] + subset[i + 1:], n)) for i in range(size)
                ]
    return FiniteSimplicialSet(cells, faces)


@lru_cache(maxsize=None)
def simplex(n: int) -> FiniteSimplicialSet:
    """Δⁿ, with one cell per nonempty subset of ``{0..n}``."""
    if n < 0:
        raise ValueError(f"simplex dimension must be >= 0, got {n}")
    return _simplicial_complex(n, lambda subset: True)


@lru_cache(maxsize=None)
def boundary(n: int) -> FiniteSimplicialSet:
    if n < 0:
        raise ValueError(f"boundary dimension must be >= 0, got {n}")
    return _simplicial_complex(n, lambda subset: len(subset) <= n)


@lru_cache(maxsize=None)
def horn(n: int, k: int) -> FiniteSimplicialSet:
    """Λⁿ_k: the boundary without the face opposite vertex ``k``."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"horn needs 0 <= k <= n and n >= 1, got n={n}, k={k}")
    missing = tuple(v for v in range(n + 1) if v != k)
    return _simplicial_complex(n, lambda subset: len(subset) <= n and subset != missing)


def standard_sset(kind: str, n: int, k: Optional[int] = None) -> FiniteSimplicialSet:
    if kind == "simplex":
        return simplex(n)
    if kind == "boundary":
        return boundary(n)
    if kind == "horn":
        if k is None:
            raise ValueError("horn needs k")
        return horn(n, k)
    raise ValueError(f"unknown standard simplicial set '{kind}'")


def point() -> FiniteSimplicialSet:
    return simplex(0)


def empty() -> FiniteSimplicialSet:
    return FiniteSimplicialSet({})


def horn_face_id(n: int, i: int) -> str:
    """Cell id of the face of Δⁿ opposite vertex ``i``."""
    return subset_id(tuple(v for v in range(n + 1) if v != i), n)


def delta_simplex(n: int, theta: Monotone) -> SimplexRef:
    """The simplex of Δⁿ named by the monotone sequence ``theta``."""
    if not delta.is_monotone(theta) or any(not 0 <= v <= n for v in theta):
        raise ValueError(f"{theta} is not a monotone sequence in [{n}]")
    mono, epi = delta.factor(tuple(theta))
    return SimplexRef(DegeneracyWord.from_surjection(epi), subset_id(mono, n))


def vertex_sequence(X: FiniteSimplicialSet, x: SimplexRef) -> Tuple[int, ...]:
    """For X a standard simplex, the monotone sequence of the simplex ``x``."""
    return tuple(int(v) for v in X.vertices(x))


def yoneda(A: FiniteSimplicialSet, sigma: SimplexRef) -> SimplicialMap:
    """The map Δⁿ -> A classifying the n-simplex ``sigma``."""
    n = A.simplex_dim(sigma)
    source = simplex(n)
    assignment = {}
    for cell in source.cells:
        assignment[cell] = A.act(sigma, vertex_sequence(source, SimplexRef.of(cell)))
    return SimplicialMap(source, A, assignment)


def delta_map(theta: Monotone, n: int) -> SimplicialMap:
    """Δᵐ -> Δⁿ induced by ``theta: [m] -> [n]``."""
    return yoneda(simplex(n), delta_simplex(n, theta))


def to_point(X: FiniteSimplicialSet) -> SimplicialMap:
    """The unique map to Δ⁰."""
    return SimplicialMap(
        X, point(), {c: SimplexRef(DegeneracyWord(tuple(range(X.dim_of(c) - 1, -1, -1))), "0") for c in X.cells}
    )


def from_point(X: FiniteSimplicialSet, vertex: str) -> SimplicialMap:
    if X.dim_of(vertex) != 0:
        report = ValidationReport()
        report.add("not-a-vertex", vertex, dim=X.dim_of(vertex))
        raise ValidationError("a map out of Δ⁰ needs a vertex", report)
    return SimplicialMap(point(), X, {"0": SimplexRef.of(vertex)})
