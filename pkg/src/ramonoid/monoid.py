"""Monoids of self-maps of an ideal lattice generated by r, a and d.

Maps are compared extensionally by their image vectors.  Element ``i`` of a
``MapMonoid`` is named by its shortlex-least word (letters ranked
``a < d < r``); ``"ra"`` means ``r`` applied after ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from .dot import hasse_dot
from .ideals import Ideal, IdealLattice
from .pomonoid import OrderedMonoid, covers
from .words import format_word, parse_word, shortlex_closure

GENERATOR_SETS = {"ra": ("r", "a"), "rd": ("r", "d"), "rad": ("r", "a", "d")}
ANTITONE = frozenset("ad")
DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class IdealMap:
    """One element of a map monoid."""

    word: str
    image: np.ndarray
    parities: FrozenSet[str]

    @property
    def label(self) -> str:
        return format_word(self.word)


def _compose(lat: IdealLattice, word: str) -> np.ndarray:
    out = np.arange(len(lat), dtype=np.int64)
    for c in reversed(word):
        out = lat.image(c)[out]
    return out


class MapMonoid:
    def __init__(self, lattice: IdealLattice, symbols: Tuple[str, ...], elements: List[Tuple[str, np.ndarray]]):
        self.lattice = lattice
        self.symbols = symbols
        self.words = [w for w, _ in elements]
        self.images = np.array([img for _, img in elements], dtype=np.int64).reshape(len(elements), len(lattice))
        self.images.setflags(write=False)
        self._lookup: Dict[bytes, int] = {img.tobytes(): i for i, img in enumerate(self.images)}
        self.identity = 0
        self.generators = tuple(self._lookup[lattice.image(c).tobytes()] for c in symbols)

    def __len__(self) -> int:
        return len(self.words)

    @property
    def size(self) -> int:
        return len(self.words)

    def index_of_image(self, img: np.ndarray) -> int:
        return self._lookup[np.asarray(img, dtype=np.int64).tobytes()]

    def label(self, i: int) -> str:
        return format_word(self.words[i])

    def evaluate(self, word: str) -> np.ndarray:
        """Image vector of ``word`` computed directly from the lattice maps."""
        flat = parse_word(word)
        bad = sorted(set(flat) - set(self.symbols))
        if bad:
            raise ValueError(f"word {word!r} uses {''.join(bad)}, not among the generators {''.join(self.symbols)}")
        return _compose(self.lattice, flat)

    def element(self, word: str) -> int:
        return self.index_of_image(self.evaluate(word))

    @cached_property
    def table(self) -> np.ndarray:
        n = self.size
        T = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            comp = self.images[i][self.images]
            T[i] = [self._lookup[row.tobytes()] for row in comp]
        T.setflags(write=False)
        return T

    @cached_property
    def order(self) -> np.ndarray:
        C = self.lattice.C
        n = self.size
        O = np.empty((n, n), dtype=bool)
        for i in range(n):
            O[i] = C[self.images[i][None, :], self.images].all(axis=1)
        O.setflags(write=False)
        return O

    @cached_property
    def parities(self) -> List[FrozenSet[str]]:
        """Parities of the number of a/d letters over every word naming each element."""
        n = self.size
        seen: Set[Tuple[int, int]] = {(self.identity, 0)}
        todo = [(self.identity, 0)]
        while todo:
            x, par = todo.pop()
            for c, g in zip(self.symbols, self.generators):
                y = int(self.table[g, x])
                q = par ^ (c in ANTITONE)
                if (y, q) not in seen:
                    seen.add((y, q))
                    todo.append((y, q))
        out: List[Set[str]] = [set() for _ in range(n)]
        for x, par in seen:
            out[x].add("odd" if par else "even")
        return [frozenset(s) for s in out]

    def maps(self) -> List[IdealMap]:
        return [IdealMap(w, self.images[i], self.parities[i]) for i, w in enumerate(self.words)]

    def is_idempotent(self, i: int) -> bool:
        return int(self.table[i, i]) == i

    def relation_holds(self, left: str, right: str) -> bool:
        return bool((self.evaluate(left) == self.evaluate(right)).all())


def generate_monoid(lattice: IdealLattice, generators: str | Sequence[str] = "ra", budget: int = DEFAULT_BUDGET) -> MapMonoid:
    """Breadth-first closure of the chosen maps under composition."""
    if isinstance(generators, str):
        symbols = GENERATOR_SETS.get(generators, tuple(generators))
    else:
        symbols = tuple(generators)
    if not symbols or any(c not in "rad" for c in symbols) or len(set(symbols)) != len(symbols):
        raise ValueError(f"generators must be distinct letters from r, a, d; got {generators!r}")
    letters = "".join(sorted(symbols))
    n = len(lattice)

    def step(c: str, key: bytes) -> bytes:
        img = np.frombuffer(key, dtype=np.int64)
        return lattice.image(c)[img].tobytes()

    start = np.arange(n, dtype=np.int64).tobytes()
    elems = shortlex_closure(start, letters, step, budget)
    return MapMonoid(lattice, symbols, [(w, np.frombuffer(k, dtype=np.int64)) for w, k in elems])


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class KReport:
    ideal_k: Tuple[int, ...]
    ring_k: int
    K: int


def k_numbers(m: MapMonoid) -> KReport:
    per = tuple(int(len(np.unique(m.images[:, i]))) for i in range(len(m.lattice)))
    return KReport(per, max(per), m.size)


def orbit(m: MapMonoid, I) -> List[Ideal]:
    i = m.lattice.idx(I)
    return [m.lattice[j] for j in sorted(set(m.images[:, i].tolist()))]


def relation_check(m: MapMonoid, left: str, right: str) -> bool:
    return m.relation_holds(left, right)


@dataclass(frozen=True)
class ElementFlags:
    word: str
    order_preserving: bool
    order_reversing: bool
    idempotent: bool
    constant: bool
    parities: FrozenSet[str]
    value: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "word": format_word(self.word),
            "order_preserving": self.order_preserving,
            "order_reversing": self.order_reversing,
            "idempotent": self.idempotent,
            "constant": self.constant,
            "constant_value": self.value,
            "parities": sorted(self.parities),
        }


def classify_properties(m: MapMonoid) -> List[ElementFlags]:
    C = m.lattice.C
    out = []
    for i, img in enumerate(m.images):
        Cf = C[np.ix_(img, img)]
        const = bool((img == img[0]).all())
        out.append(
            ElementFlags(
                m.words[i],
                bool((~C | Cf).all()),
                bool((~C | Cf.T).all()),
                m.is_idempotent(i),
                const,
                m.parities[i],
                int(img[0]) if const else None,
            )
        )
    return out


def hasse(m: MapMonoid) -> List[Tuple[str, str]]:
    return [(m.label(i), m.label(j)) for i, j in covers(m.order)]


def to_dot(m: MapMonoid, name: Optional[str] = None) -> str:
    idem = [m.is_idempotent(i) for i in range(m.size)]
    return hasse_dot(name or m.lattice.ring.name, m.words, covers(m.order), idem)


def export_abstract(m: MapMonoid, name: str = "") -> OrderedMonoid:
    return OrderedMonoid(
        tuple(m.words), np.array(m.table), np.array(m.order), m.identity, m.generators, m.symbols,
        name or m.lattice.ring.name,
    )


def monoid_report(m: MapMonoid) -> dict:
    k = k_numbers(m)
    lat = m.lattice
    return {
        "generators": list(m.symbols),
        "K": k.K,
        "ring_k": k.ring_k,
        "ideal_k": list(k.ideal_k),
        "elements": [
            {"index": i, "word": m.label(i), "image": m.images[i].tolist(), **{
                key: val for key, val in f.to_dict().items() if key != "word"}}
            for i, f in enumerate(classify_properties(m))
        ],
        "table": m.table.tolist(),
        "order": [[int(x) for x in row] for row in m.order],
        "hasse": [[int(a), int(b)] for a, b in covers(m.order)],
        "ideal_count": len(lat),
    }
