"""Named ordered monoids: presentations plus the Hasse data of their diagrams.

Each entry is rebuilt from its rewriting presentation; the drawn order is
then checked to contain the order forced by the axioms before it replaces
it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .pomonoid import (
    OrderedMonoid,
    RewritingPresentation,
    from_presentation,
    is_isomorphic,
    is_quotient,
    transitive_closure,
)
from .words import parse_word


@dataclass(frozen=True)
class Entry:
    name: str
    alphabet: str
    relations: Tuple[str, ...]
    axioms: Tuple[str, ...]
    monotone: str
    antitone: str
    size: int
    covers: Tuple[str, ...]
    note: str


_RING_AXIOMS = ("1<=r", "1<=a^2")

ENTRIES: Dict[str, Entry] = {
    e.name: e
    for e in [
        Entry(
            "KURA-14", "kc", ("c^2=1", "k^2=k", "kckckck=kck"), ("1<=k",), "k", "c", 14,
            ("1<k", "ckc<1", "kckck<k", "ckc<ckckckc", "ckck<kckck", "kckc<kckck", "ckckckc<ckck",
             "ckckckc<kckc", "c<kc", "kckckc<kc", "ck<c", "ck<ckckck", "ckckc<kckckc", "kck<kckckc",
             "ckckck<ckckc", "ckckck<kck"),
            "closure-complement monoid of a topological space",
        ),
        Entry(
            "LOCDUAL-i", "ra", ("a^2=1", "r^2=r", "rara=rar"), _RING_AXIOMS, "r", "a", 8,
            ("1<r", "rar<r", "ara<1", "arar<rar", "rar<ra", "ara<arar", "ar<arar", "ar<a", "a<ra"),
            "commutative local dual ring, not a field",
        ),
        Entry(
            "LOCDUAL-ii", "ra", ("a^2=1", "r^2=r", "rarara=rar"), _RING_AXIOMS, "r", "a", 10,
            ("rara<r", "1<r", "rar<ra", "a<ra", "ara<1", "ar<a", "arar<rara", "ara<arar", "arara<rar",
             "ar<arara"),
            "largest monoid of a commutative dual ring",
        ),
        Entry(
            "EX1-7", "ra", ("a^2=1", "r^2=r", "rara=rar", "arar=rar"), _RING_AXIOMS, "r", "a", 7,
            ("1<r", "rar<r", "ara<1", "ara<rar", "rar<ra", "ar<rar", "ar<a", "a<ra"),
            "LOCDUAL-i with rar and arar identified",
        ),
        Entry(
            "SEMIPRIME-max", "ra", ("r^2=r", "a^3=a", "ra=a", "ar=a"), _RING_AXIOMS, "r", "a", 4,
            ("1<r", "r<a^2"),
            "largest monoid of a semiprime ring",
        ),
        Entry(
            "FULLSEMIPRIME", "ra", ("r=1", "a^3=a"), _RING_AXIOMS, "r", "a", 3,
            ("1<a^2",),
            "semiprime ring in which every ideal is semiprime",
        ),
        Entry(
            "ZD-b", "ra", ("r^2=r", "a^3=a", "rara=rar", "a^2r=r", "ra^2=r"), _RING_AXIOMS, "r", "a", 9,
            ("a^2<r", "rar<r", "rar<ra", "a<ra", "arar<rar", "ara<arar", "ar<arar", "ara<a^2", "ar<a",
             "1<a^2"),
            "zero-dimensional local ring, second type",
        ),
        Entry(
            "ZD-c", "ra", ("r^2=r", "a^3=a", "ara=ar", "a^2r=ra^2r"), _RING_AXIOMS, "r", "a", 9,
            ("ra^2<a^2r", "a^2<ra^2", "1<a^2", "ar<1", "r<ra^2", "rar<r", "ar<rar", "a<ra", "ra<a^2r",
             "rar<ra", "ar<a", "1<r"),
            "zero-dimensional local ring, third type (not finite)",
        ),
        Entry(
            "ZDR-16", "ra", ("r^2=r", "a^3=a", "ara^2=ar", "ra^2r=a^2r", "rarar=rara"), _RING_AXIOMS, "r", "a",
            16,
            ("ra^2<a^2r", "a^2rara<a^2r", "r<ra^2", "a^2<ra^2", "1<r", "rara<r", "1<a^2", "ara<a^2",
             "rara<a^2rara", "arar<rara", "ara<arar", "a^2rar<a^2ra", "ra<a^2ra", "rar<a^2rar", "rar<ra",
             "a<ra", "arara<rar", "ar<arara", "ar<a"),
            "product of the three zero-dimensional types",
        ),
    ]
}

FIELD = Entry("FIELD", "ra", ("r=1", "a^2=1"), _RING_AXIOMS, "r", "a", 2, (), "fields and other prime rings")

ALIASES = {"field": "FIELD", "field-type": "FIELD", "ZD-a": "FIELD"}


def _presentation(e: Entry) -> RewritingPresentation:
    return RewritingPresentation.parse(e.alphabet, e.relations, e.axioms, e.monotone, e.antitone)


def figure_order(m: OrderedMonoid, cover_words: Sequence[str]) -> np.ndarray:
    rel = np.zeros((m.size, m.size), dtype=bool)
    for c in cover_words:
        lo, hi = c.split("<")
        rel[m.eval(lo), m.eval(hi)] = True
    return transitive_closure(rel)


@lru_cache(maxsize=None)
def _build(name: str) -> OrderedMonoid:
    e = FIELD if name == "FIELD" else ENTRIES[name]
    m = from_presentation(_presentation(e), name=e.name)
    if m.size != e.size:
        raise RuntimeError(f"{name}: presentation gives {m.size} elements, expected {e.size}")
    if e.covers:
        drawn = figure_order(m, e.covers)
        if (m.order & ~drawn).any():
            i, j = np.argwhere(m.order & ~drawn)[0]
            raise RuntimeError(f"{name}: axioms force {m.label(i)} <= {m.label(j)}, missing from the diagram")
        m = OrderedMonoid(m.labels, m.table, drawn, m.identity, m.generators, m.symbols, e.name)
    probs = m.validate()
    if probs:
        raise RuntimeError(f"{name}: " + "; ".join(probs))
    return m


def resolve(name: str) -> str:
    name = ALIASES.get(name, name)
    if name != "FIELD" and name not in ENTRIES:
        raise KeyError(name)
    return name


def get(name: str) -> OrderedMonoid:
    """Catalog monoid by name (``FIELD``/``field`` included)."""
    return _build(resolve(name))


def entry(name: str) -> Entry:
    name = resolve(name)
    return FIELD if name == "FIELD" else ENTRIES[name]


def catalog() -> List[Tuple[str, OrderedMonoid]]:
    """The nine diagrams, in a fixed order."""
    return [(n, _build(n)) for n in ENTRIES]


def all_types() -> List[Tuple[str, OrderedMonoid]]:
    return catalog() + [("FIELD", _build("FIELD"))]


def classify(m: OrderedMonoid) -> Dict[str, List[str]]:
    """Catalog entries (and FIELD) that ``m`` is isomorphic to, or a collapse of."""
    iso, coll = [], []
    for name, c in all_types():
        if c.symbols != m.symbols and len(c.generators) != len(m.generators):
            continue
        if c.size == m.size and is_isomorphic(m, c):
            iso.append(name)
        elif c.size > m.size and is_quotient(c, m):
            coll.append(name)
    return {"isomorphic": iso, "collapse_of": coll}


NAMED_RELATIONS = (
    "rar=rara", "rar=rarara", "rara=arar", "rar=arar", "ra=ar", "ra=a", "ar=a", "a^2=1", "r=1",
    "r=a^2r", "r=ra^2", "ara=ar", "a^2r=ra^2r", "(ra^2)^2=a^2r",
)


def relation_table(holds, second: str = "a") -> Dict[str, bool]:
    """Evaluate the named relations with ``holds(left, right)``, renaming ``a``."""
    out = {}
    for rel in NAMED_RELATIONS:
        text = rel.replace("a", second)
        left, right = text.split("=")
        out[text] = bool(holds(left, right))
    return out
