"""The end-to-end verification table run by ``ramonoid verify`` and the acceptance tests."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import catalog, corpus
from .checks import run_suites
from .ideals import all_ideals, ideal_generated
from .monoid import export_abstract, generate_monoid, k_numbers, orbit
from .pomonoid import RewritingPresentation, from_presentation, is_isomorphic, odot
from .rings import Product, build_ring, description_from_dict

PRODUCT_LIMIT = 2**16


@dataclass
class CheckResult:
    key: str
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    @property
    def within_time(self) -> bool:
        return self.seconds <= self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.within_time

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        timing = f"{self.seconds:.2f}s / {self.limit:g}s"
        if not self.within_time:
            timing += " (too slow)"
        return f"[{status}] {self.key:<20} {self.title}: {self.detail} ({timing})"


def _ring_monoid(name_or_dict, gens: str = "ra"):
    d = corpus.CORPUS.get(name_or_dict, name_or_dict) if isinstance(name_or_dict, str) else name_or_dict
    lat = all_ideals(build_ring(description_from_dict(d)))
    return lat, generate_monoid(lat, gens)


def _expect(facts: Dict[str, Tuple[object, object]]) -> Tuple[bool, str]:
    bad = [f"{k}: got {g}, want {w}" for k, (g, w) in facts.items() if g != w]
    if bad:
        return False, "; ".join(bad)
    return True, ", ".join(f"{k}={g}" for k, (g, _) in facts.items())


def check_square_zero() -> Tuple[bool, str]:
    lat, m = _ring_monoid("F2[x]/(x^2)")
    k = k_numbers(m)
    return _expect({
        "K": (k.K, 7),
        "k": (k.ideal_k, (3, 1, 3)),
        "rar=rara": (m.relation_holds("rar", "rara"), True),
        "rara=arar": (m.relation_holds("rara", "arar"), True),
    })


def check_cube_zero() -> Tuple[bool, str]:
    lat, m = _ring_monoid("F2[x]/(x^3)")
    k = k_numbers(m)
    trivial = (k.ideal_k[lat.zero], k.ideal_k[lat.top])
    nontrivial = tuple(sorted({k.ideal_k[i] for i in range(len(lat)) if i not in (lat.zero, lat.top)}))
    return _expect({
        "K": (k.K, 8),
        "k(0),k(R)": (trivial, (4, 4)),
        "k(other)": (nontrivial, (2,)),
        "=LOCDUAL-i": (is_isomorphic(export_abstract(m), catalog.get("LOCDUAL-i")), True),
    })


def check_dual_composite() -> Tuple[bool, str]:
    lat, m = _ring_monoid("F2[x]/(x^3) x GF(2)")
    return _expect({
        "K": (m.size, 10),
        "rar=rarara": (m.relation_holds("rar", "rarara"), True),
        "rar=rara": (m.relation_holds("rar", "rara"), False),
        "=LOCDUAL-ii": (is_isomorphic(export_abstract(m), catalog.get("LOCDUAL-ii")), True),
    })


def check_fifth_power() -> Tuple[bool, str]:
    lat, m = _ring_monoid(corpus.max_ideal_power(2, 5))
    R = lat.ring
    x, y = (R.index(row) for row in _unit_rows(R, ("x", "y")))
    maximal = ideal_generated(R, [x, y])

    def power(n: int):
        gens = [R.mul(R.power(x, i), R.power(y, n - i)) for i in range(n + 1)]
        return ideal_generated(R, gens)

    I = ideal_generated(R, [R.power(x, 2)])
    want = {I, power(3), power(2), maximal, power(4)}
    got = set(orbit(m, I))
    k = k_numbers(m)
    return _expect({
        "orbit((x^2))": (got == want and len(got) == 5, True),
        "k": (k.ring_k, 5),
        "K<=9": (k.K <= 9, True),
        "r=a^2r": (m.relation_holds("r", "a^2r"), True),
        "r=ra^2": (m.relation_holds("r", "ra^2"), True),
        "rar=rara": (m.relation_holds("rar", "rara"), True),
    })


def _unit_rows(R, names: Sequence[str]):
    import numpy as np

    labels = list(R.basis_labels)
    for nm in names:
        row = np.zeros(R.k, dtype=np.int64)
        row[labels.index(nm)] = 1
        yield row


def check_odot_sizes() -> Tuple[bool, str]:
    F, B, C, Z = (catalog.get(n) for n in ("FIELD", "ZD-b", "ZD-c", "ZDR-16"))
    full = odot([F, B, C])
    sq = Z.eval("ra^2")
    return _expect({
        "F.B": (odot([F, B]).size, 11),
        "F.C": (odot([F, C]).size, 12),
        "B.C": (odot([B, C]).size, 13),
        "F.B.C": (full.size, 16),
        "=ZDR-16": (is_isomorphic(full, Z), True),
        "(ra^2)^2=a^2r": (Z.mul(sq, sq) == Z.eval("a^2r"), True),
        "ra^2 idempotent": (Z.is_idempotent(sq), False),
    })


def check_kuratowski() -> Tuple[bool, str]:
    pres = RewritingPresentation.parse("kc", ["c^2=1", "k^2=k", "kckckck=kck"], ["1<=k"], "k", "c")
    return _expect({"elements": (from_presentation(pres).size, 14)})


def corpus_pairs(limit: int = PRODUCT_LIMIT) -> List[Tuple[str, str]]:
    sizes = {n: corpus.ring(n).size for n in corpus.corpus_names()}
    return [(a, b) for a, b in combinations_with_replacement(corpus.corpus_names(), 2) if sizes[a] * sizes[b] <= limit]


def product_matches_odot(a: str, b: str) -> bool:
    desc = Product((corpus.description(a), corpus.description(b)))
    lat = all_ideals(build_ring(desc))
    big = export_abstract(generate_monoid(lat, "ra"))
    ma = export_abstract(generate_monoid(corpus.lattice(a), "ra"))
    mb = export_abstract(generate_monoid(corpus.lattice(b), "ra"))
    return is_isomorphic(big, odot([ma, mb]))


def check_products(pairs: Optional[List[Tuple[str, str]]] = None) -> Tuple[bool, str]:
    pairs = corpus_pairs() if pairs is None else pairs
    bad = [f"{a} x {b}" for a, b in pairs if not product_matches_odot(a, b)]
    if bad:
        return False, "mismatch for " + ", ".join(bad)
    return True, f"{len(pairs)} products agree with odot"


def check_suites(extra: Sequence[Tuple[str, object]] = ()) -> Tuple[bool, str]:
    failures = []
    count = 0
    rings = [(n, corpus.lattice(n)) for n in corpus.corpus_names()]
    for name, desc in extra:
        rings.append((name, all_ideals(build_ring(desc))))
    for name, lat in rings:
        fls = [all_ideals(f) for f in lat.ring.factors] if lat.ring.kind == "product" else None
        for suite, viol in run_suites(lat, fls).items():
            count += 1
            if viol:
                failures.append(f"{name} / {suite}: {viol[0]}")
    if failures:
        return False, f"{len(failures)} failing: " + " | ".join(failures[:5])
    return True, f"{count} suite runs over {len(rings)} rings"


def check_impossibility() -> Tuple[bool, str]:
    pres = RewritingPresentation.parse(
        "ra", ["a^2=1", "r^2=r", "rarara=rar", "arar=r"], ["1<=r", "1<=a^2"], "r", "a"
    )
    m = from_presentation(pres)
    return _expect({
        "elements": (m.size, 2),
        "=FIELD": (is_isomorphic(m, catalog.get("FIELD")), True),
    })


@dataclass(frozen=True)
class Criterion:
    key: str
    title: str
    run: Callable[[], Tuple[bool, str]]
    limit: float
    slow: bool = False


CRITERIA: List[Criterion] = [
    Criterion("square-zero", "F2[x]/(x^2) monoid", check_square_zero, 1.0),
    Criterion("cube-zero", "F2[x]/(x^3) monoid", check_cube_zero, 1.0),
    Criterion("dual-composite", "F2[x]/(x^3) x GF(2) monoid", check_dual_composite, 5.0),
    Criterion("fifth-power", "F2[x,y]/(x,y)^5 orbit and relations", check_fifth_power, 600.0, slow=True),
    Criterion("odot-sizes", "odot sizes of the zero-dimensional types", check_odot_sizes, 1.0),
    Criterion("kuratowski", "closure-complement presentation", check_kuratowski, 1.0),
    Criterion("products", "ring products versus odot", check_products, 120.0),
    Criterion("theorem-suites", "property suites over the corpus", check_suites, 120.0),
    Criterion("impossibility", "rarara=rar with arar=r collapses", check_impossibility, 1.0),
]


def run_criterion(c: Criterion, fn: Optional[Callable[[], Tuple[bool, str]]] = None) -> CheckResult:
    t = time.perf_counter()
    try:
        passed, detail = (fn or c.run)()
    except Exception as exc:  # a crash is a failed check, reported in the table
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(c.key, c.title, passed, detail, time.perf_counter() - t, c.limit)


def run_all(slow: bool = False, extra: Sequence[Tuple[str, object]] = ()) -> List[CheckResult]:
    out = []
    for c in CRITERIA:
        if c.slow and not slow:
            continue
        if c.key == "theorem-suites" and extra:
            out.append(run_criterion(c, lambda: check_suites(extra)))
        else:
            out.append(run_criterion(c))
    return out
