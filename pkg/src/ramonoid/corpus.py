"""Built-in ring corpus used by ``verify`` and the property suites."""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .ideals import IdealLattice, all_ideals
from .rings import FiniteRing, RingDescription, build_ring, description_from_dict, parse_ring_description


def cyclic(n: int) -> dict:
    return {"type": "cyclic", "n": n}


def truncated(p: int, k: int, var: str = "x") -> dict:
    """``F_p[x]/(x^k)``."""
    return {"type": "poly_quotient", "p": p, "vars": [var], "caps": {var: f"{var}^{k} = 0"}}


def max_ideal_power(p: int, n: int) -> dict:
    """``F_p[x,y]/(x,y)^n``."""
    rels = [f"x^{i}*y^{n - i}" for i in range(1, n)]
    return {
        "type": "poly_quotient",
        "p": p,
        "vars": ["x", "y"],
        "caps": {"x": f"x^{n} = 0", "y": f"y^{n} = 0"},
        "extra_relations": rels,
    }


def product(*factors: dict) -> dict:
    return {"type": "product", "factors": list(factors)}


GF4 = {"type": "poly_quotient", "p": 2, "vars": ["x"], "caps": {"x": "x^2 = x + 1"}}
SQUARE_ZERO_XY = {
    "type": "poly_quotient",
    "p": 2,
    "vars": ["x", "y"],
    "caps": {"x": "x^2 = 0", "y": "y^2 = 0"},
    "extra_relations": ["x*y"],
}

CORPUS: Dict[str, dict] = {
    "GF(2)": cyclic(2),
    "GF(3)": cyclic(3),
    "GF(4)": GF4,
    "Z/4": cyclic(4),
    "Z/6": cyclic(6),
    "Z/8": cyclic(8),
    "Z/12": cyclic(12),
    "Z/36": cyclic(36),
    "F2[x]/(x^2)": truncated(2, 2),
    "F2[x]/(x^3)": truncated(2, 3),
    "F2[x]/(x^4)": truncated(2, 4),
    "F3[x]/(x^3)": truncated(3, 3),
    "F2[x,y]/(x^2,xy,y^2)": SQUARE_ZERO_XY,
    "F2[x,y]/(x,y)^3": max_ideal_power(2, 3),
    "Z/4(+)Z/4": {"type": "trivial_extension", "base": cyclic(4)},
    "F2[x]/(x^3) x GF(2)": product(truncated(2, 3), cyclic(2)),
    "F2[x]/(x^2) x GF(2)": product(truncated(2, 2), cyclic(2)),
    "GF(2) x GF(3)": product(cyclic(2), cyclic(3)),
}

# rings with a single maximal ideal
LOCAL = {
    "GF(2)", "GF(3)", "GF(4)", "Z/4", "Z/8", "F2[x]/(x^2)", "F2[x]/(x^3)", "F2[x]/(x^4)",
    "F3[x]/(x^3)", "F2[x,y]/(x^2,xy,y^2)", "F2[x,y]/(x,y)^3", "Z/4(+)Z/4",
}
FIELDS = {"GF(2)", "GF(3)", "GF(4)"}


def corpus_names() -> List[str]:
    return list(CORPUS)


def description(name: str) -> RingDescription:
    return description_from_dict(CORPUS[name])


@lru_cache(maxsize=None)
def ring(name: str) -> FiniteRing:
    return build_ring(description(name))


@lru_cache(maxsize=None)
def lattice(name: str) -> IdealLattice:
    return all_ideals(ring(name))


def load_directory(path: Path) -> List[Tuple[str, RingDescription]]:
    """Extra ring descriptions (``*.json``) from a directory, sorted by file name."""
    out = []
    for f in sorted(Path(path).glob("*.json")):
        out.append((f.stem, parse_ring_description(f.read_text())))
    return out


def dump(name: str) -> str:
    return json.dumps(CORPUS[name], sort_keys=True)
