"""Order-preserving maps of finite ordinals and the words that name them.

A monotone map ``theta: [m] -> [n]`` is stored as the tuple of its values
``(theta(0), ..., theta(m))`` together with the codomain ``n``.  Simplicial
operators act contravariantly: the face operator ``d_i`` is the coface
``delta^i: [n-1] -> [n]`` and the degeneracy ``s_j`` is the codegeneracy
``sigma^j: [n+1] -> [n]``.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from corrkit.errors import MalformedWordError

Monotone = Tuple[int, ...]


def identity(n: int) -> Monotone:
    return tuple(range(n + 1))


def coface(i: int, n: int) -> Monotone:
    """delta^i: [n-1] -> [n], the injection skipping ``i``."""
    return tuple(t if t < i else t + 1 for t in range(n))


def codegeneracy(j: int, n: int) -> Monotone:
    """sigma^j: [n+1] -> [n], the surjection hitting ``j`` twice."""
    return tuple(t if t <= j else t - 1 for t in range(n + 2))


def compose(f: Monotone, g: Monotone) -> Monotone:
    """f after g."""
    return tuple(f[t] for t in g)


def is_monotone(theta: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(theta, theta[1:]))


def factor(theta: Monotone) -> Tuple[Monotone, Monotone]:
    """Epi-mono factorization ``theta = mono . epi`` with ``epi`` onto ``[k]``."""
    image = sorted(set(theta))
    position = {v: k for k, v in enumerate(image)}
    return tuple(image), tuple(position[v] for v in theta)


def missed(mono: Monotone, n: int) -> Tuple[int, ...]:
    hit = set(mono)
    return tuple(t for t in range(n + 1) if t not in hit)


def repeats(epi: Monotone) -> Tuple[int, ...]:
    """The positions ``t`` with ``epi(t) == epi(t + 1)``."""
    return tuple(t for t in range(len(epi) - 1) if epi[t] == epi[t + 1])


def surjection_from_repeats(indices, p: int) -> Monotone:
    """The surjection out of ``[p]`` collapsing exactly ``t, t+1`` for ``t`` in ``indices``."""
    indices = set(indices)
    values = [0]
    for t in range(p):
        values.append(values[-1] if t in indices else values[-1] + 1)
    return tuple(values)


@lru_cache(maxsize=None)
def surjections(p: int, m: int) -> Tuple[Monotone, ...]:
    """All monotone surjections [p] -> [m]; there are C(p, m) of them."""
    if m > p or m < 0:
        return ()
    return tuple(
        surjection_from_repeats(collapse, p)
        for collapse in combinations(range(p), p - m)
    )


def monotone_maps(p: int, n: int) -> Iterator[Monotone]:
    """All monotone maps [p] -> [n] in lexicographic order."""
    def extend(prefix, low):
        if len(prefix) == p + 1:
            yield tuple(prefix)
            return
        for v in range(low, n + 1):
            yield from extend(prefix + [v], v)
    yield from extend([], 0)


@dataclass(frozen=True, order=True)
class DegeneracyWord:
    """``s_{i_k} ... s_{i_1}`` with ``i_k > ... > i_1``; the empty word is the identity."""

    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if any(a <= b for a, b in zip(self.indices, self.indices[1:])):
            raise MalformedWordError(f"degeneracy word {list(self.indices)} is not strictly decreasing")
        if any(i < 0 for i in self.indices):
            raise MalformedWordError(f"degeneracy word {list(self.indices)} has a negative index")

    def __len__(self):
        return len(self.indices)

    def __str__(self):
        return "".join(f"s{i}" for i in self.indices)

    @property
    def is_identity(self) -> bool:
        return not self.indices

    def surjection(self, m: int) -> Monotone:
        """The surjection [m + len] -> [m] this word applies to an m-simplex."""
        return surjection_from_repeats(self.indices, m + len(self))

    @classmethod
    def from_surjection(cls, epi: Monotone) -> "DegeneracyWord":
        return cls(tuple(sorted(repeats(epi), reverse=True)))

    def fits(self, m: int) -> bool:
        return all(i < m + len(self) for i in self.indices)


Symbol = Tuple[str, int]


@dataclass(frozen=True)
class OperatorWord:
    """A composite of face and degeneracy operators on ``X_{source_dim}``.

    ``symbols`` read left to right as written, so the rightmost symbol acts
    first: ``(('d', 0), ('s', 1))`` is ``d_0 s_1``.
    """

    symbols: Tuple[Symbol, ...]
    source_dim: int

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple((str(k), int(i)) for k, i in self.symbols))

    def __str__(self):
        if not self.symbols:
            return f"id[{self.source_dim}]"
        return " ".join(f"{k}{i}" for k, i in self.symbols) + f" on X_{self.source_dim}"

    @classmethod
    def parse(cls, text: str, source_dim: int) -> "OperatorWord":
        """Parses ``"d0 s1"`` or ``"d_0 . s_1"`` style strings."""
        symbols = []
        for token in text.replace("∘", " ").replace(".", " ").replace("_", "").split():
            if token[0] not in "ds" or not token[1:].isdigit():
                raise MalformedWordError(f"cannot parse operator symbol '{token}'")
            symbols.append((token[0], int(token[1:])))
        return cls(tuple(symbols), source_dim)

    def as_map(self) -> Tuple[Monotone, int]:
        """The map ``theta: [m] -> [source_dim]`` with ``X(theta)`` equal to this word."""
        n = self.source_dim
        if n < 0:
            raise MalformedWordError(f"source dimension {n} is negative")
        theta, current = identity(n), n
        for kind, index in reversed(self.symbols):
            if kind == "d":
                if current < 1 or not 0 <= index <= current:
                    raise MalformedWordError(f"d{index} is not defined on X_{current} in {self}")
                theta = compose(theta, coface(index, current))
                current -= 1
            elif kind == "s":
                if not 0 <= index <= current:
                    raise MalformedWordError(f"s{index} is not defined on X_{current} in {self}")
                theta = compose(theta, codegeneracy(index, current))
                current += 1
            else:
                raise MalformedWordError(f"unknown operator symbol '{kind}'")
        return theta, n

    @property
    def target_dim(self) -> int:
        return len(self.as_map()[0]) - 1

    @classmethod
    def from_map(cls, theta: Monotone, n: int) -> "OperatorWord":
        mono, epi = factor(theta)
        degeneracies = [("s", i) for i in sorted(repeats(epi), reverse=True)]
        faces = [("d", j) for j in missed(mono, n)]
        return cls(tuple(degeneracies + faces), n)


def normalize_word(word: OperatorWord) -> OperatorWord:
    """Canonical form ``s_{i_k}..s_{i_1} d_{j_1}..d_{j_l}``, degeneracies strictly
    decreasing, faces strictly increasing (faces act first)."""
    theta, n = word.as_map()
    return OperatorWord.from_map(theta, n)


def generator_words(n: int) -> List[OperatorWord]:
    """The one-letter operators defined on ``X_n``."""
    words = [OperatorWord((("d", i),), n) for i in range(n + 1)] if n > 0 else []
    return words + [OperatorWord((("s", j),), n) for j in range(n + 1)]
