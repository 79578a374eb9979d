"""Exhaustive structural checks over an ideal lattice and its monoids.

Every function returns a list of human-readable violations; an empty list
means the property holds on every ideal (or pair of ideals) of the ring.
Where a fact is characterized elementwise, the check compares against an
elementwise oracle rather than against the lattice machinery itself.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Callable, Dict, List, Optional

import numpy as np

from . import catalog
from .ideals import IdealLattice, intersect_ideals, multiply_ideals, sum_ideals
from .monoid import MapMonoid, classify_properties, export_abstract, generate_monoid, k_numbers
from .pomonoid import is_isomorphic, is_quotient
from .rings import FiniteRing

Violations = List[str]


def _maps(lat: IdealLattice):
    return lat.r_image, lat.a_image, lat.d_image


def _leq_maps(lat: IdealLattice, f: np.ndarray, g: np.ndarray) -> bool:
    return bool(lat.C[f, g].all())


def _comp(*maps: np.ndarray) -> np.ndarray:
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = m[out]
    return out


def square_table(ring: FiniteRing) -> np.ndarray:
    return np.array([ring.mul(x, x) for x in range(ring.size)], dtype=np.int64)


# ---------------------------------------------------------------------------
# the lattice itself


def lattice_sanity(lat: IdealLattice) -> Violations:
    out = []
    C = lat.C
    n = len(lat)
    if not C.diagonal().all():
        out.append("containment not reflexive")
    if (C & C.T & ~np.eye(n, dtype=bool)).any():
        out.append("containment not antisymmetric")
    if ((C.astype(np.int32) @ C.astype(np.int32) > 0) & ~C).any():
        out.append("containment not transitive")
    if n <= 40:
        for i, j in iproduct(range(n), repeat=2):
            I, J = lat[i], lat[j]
            if lat.idx(sum_ideals(I, J)) != lat.join(i, j):
                out.append(f"sum of {lat.ideal_str(i)} and {lat.ideal_str(j)} is not the join")
            if lat.idx(intersect_ideals(I, J)) != lat.meet(i, j):
                out.append(f"intersection of {lat.ideal_str(i)} and {lat.ideal_str(j)} is not the meet")
    return out


# ---------------------------------------------------------------------------
# r and a


def closure_properties(lat: IdealLattice) -> Violations:
    """r monotone, extensive, idempotent; a antitone; aa extensive; aaa = a."""
    r, a, _ = _maps(lat)
    C = lat.C
    ids = np.arange(len(lat))
    out = []
    lo, hi = np.nonzero(C)
    if not C[r[lo], r[hi]].all():
        out.append("r is not monotone")
    if not C[ids, r].all():
        out.append("r is not extensive")
    if not (r[r] == r).all():
        out.append("r is not idempotent")
    if not C[a[hi], a[lo]].all():
        out.append("a is not antitone")
    if not C[ids, a[a]].all():
        out.append("aa is not extensive")
    if not (a[a[a]] == a).all():
        out.append("aaa differs from a")
    return out


def annihilator_is_largest_killer(lat: IdealLattice) -> Violations:
    """a(I) kills I, and every ideal killing I lies inside a(I)."""
    out = []
    a = lat.a_image
    zero = lat.zero
    for i, I in enumerate(lat):
        for j, J in enumerate(lat):
            kills = lat.idx(multiply_ideals(I, J)) == zero
            if kills != bool(lat.C[j, a[i]]):
                out.append(f"I={lat.ideal_str(i)}, J={lat.ideal_str(j)}: IJ=0 is {kills} but J in a(I) is {not kills}")
    return out


def semiprime_mask_oracle(lat: IdealLattice) -> np.ndarray:
    """Ideals Q with x^2 in Q forcing x in Q (the commutative semiprime test)."""
    sq = square_table(lat.ring)
    res = []
    for I in lat:
        m = I.mask()
        res.append(not (m[sq] & ~m).any())
    return np.array(res, dtype=bool)


def radical_is_smallest_semiprime(lat: IdealLattice) -> Violations:
    semi = semiprime_mask_oracle(lat)
    out = []
    for i in range(len(lat)):
        r = int(lat.r_image[i])
        above = np.flatnonzero(semi & lat.C[i])
        if not semi[r]:
            out.append(f"r({lat.ideal_str(i)}) = {lat.ideal_str(r)} is not semiprime")
        elif not lat.C[r, above].all():
            out.append(f"r({lat.ideal_str(i)}) is not below every semiprime ideal containing it")
    return out


# ---------------------------------------------------------------------------
# d


def dualradical_properties(lat: IdealLattice) -> Violations:
    r, a, d = _maps(lat)
    C = lat.C
    out = []
    lo, hi = np.nonzero(C)
    if not C[d[hi], d[lo]].all():
        out.append("d is not order-reversing")
    if not _leq_maps(lat, r[a], d):
        out.append("ra <= d fails")
    if not _leq_maps(lat, r, d[a]):
        out.append("r <= da fails")
    if not _leq_maps(lat, r, d[d]):
        out.append("r <= d^2 fails")
    if not (d[d[d]] == d).all():
        out.append("d^3 differs from d")
    if not ((r[d] == d).all() and (d[r] == d).all()):
        out.append("rd = d = dr fails")
    return out


def radical_dualradical_monoid(lat: IdealLattice) -> Violations:
    """The {r, d} monoid is a collapse of {1, r, d, d^2}."""
    m = generate_monoid(lat, "rd")
    r, _, d = _maps(lat)
    ids = np.arange(len(lat))
    allowed = [ids, r, d, d[d]]
    out = []
    for i, img in enumerate(m.images):
        if not any((img == x).all() for x in allowed):
            out.append(f"element {m.label(i)} is none of 1, r, d, d^2")
    return out


def d_squared_consequences(lat: IdealLattice) -> Violations:
    r, a, d = _maps(lat)
    ids = np.arange(len(lat))
    out = []
    if (d[d] == r).all():
        primes = lat.primes
        for p in primes:
            for q in primes:
                if p != q and lat.C[p, q]:
                    out.append(f"d^2 = r but prime {lat.ideal_str(p)} is not minimal")
        nil = lat.nilradical
        for i in range(len(lat)):
            if i != lat.top and d[i] == nil:
                out.append(f"d^2 = r but d({lat.ideal_str(i)}) = r(0)")
    if (d[d] == ids).all():
        if not (r == ids).all():
            out.append("d^2 = 1 but r is not the identity")
        if not (a == d).all():
            out.append("d^2 = 1 but a differs from d")
    return out


def semiprime_d_equals_a(lat: IdealLattice) -> Violations:
    """d = a exactly on semiprime rings."""
    semi = _reduced(lat.ring)
    same = bool((lat.d_image == lat.a_image).all())
    return [] if same == semi else [f"semiprime={semi} but (d = a) is {same}"]


# ---------------------------------------------------------------------------
# monoid-level theorems


def _reduced(ring: FiniteRing) -> bool:
    """No nonzero element squares to zero."""
    sq = square_table(ring)
    return not (sq[1:] == 0).any()


def semiprime_equivalence(lat: IdealLattice) -> Violations:
    r, a, _ = _maps(lat)
    conds = {
        "semiprime": _reduced(lat.ring),
        "ra=ar": bool((r[a] == a[r]).all()),
        "ra=a": bool((r[a] == a).all()),
        "ar=a": bool((a[r] == a).all()),
        "r<=a^2": _leq_maps(lat, r, a[a]),
    }
    if len(set(conds.values())) != 1:
        return ["semiprime conditions disagree: " + ", ".join(f"{k}={v}" for k, v in conds.items())]
    out = []
    if conds["semiprime"]:
        ids = np.arange(len(lat))
        allowed = [ids, a, a[a], r]
        m = generate_monoid(lat, "ra")
        for i, img in enumerate(m.images):
            if not any((img == x).all() for x in allowed):
                out.append(f"semiprime ring has element {m.label(i)} outside 1, a, a^2, r")
    return out


def rar_theorem(lat: IdealLattice) -> Violations:
    r, a, _ = _maps(lat)
    rar = _comp(r, a, r)
    rara = _comp(r, a, r, a)
    holds = bool((rar == rara).all())
    nil = lat.nilradical
    cond = bool(lat.C[a[nil], nil])
    out = []
    if holds != cond:
        out.append(f"rar=rara is {holds} but ar(0) <= r(0) is {cond}")
    if holds and not (rar == nil).all():
        out.append("rar=rara holds but rar is not constant r(0)")
    return out


def dual_ring_relations(lat: IdealLattice) -> Violations:
    """On dual rings: a(I cap J) = a(I) + a(J), and rar = rarara."""
    r, a, _ = _maps(lat)
    n = len(lat)
    if not (a[a] == np.arange(n)).all():
        return []
    out = []
    for i in range(n):
        for j in range(i, n):
            if a[lat.meet(i, j)] != lat.join(int(a[i]), int(a[j])):
                out.append(f"a(I cap J) != a(I)+a(J) for {lat.ideal_str(i)}, {lat.ideal_str(j)}")
    if not (_comp(r, a, r) == _comp(r, a, r, a, r, a)).all():
        out.append("dual ring without rar = rarara")
    return out


def is_local(lat: IdealLattice) -> bool:
    return len(lat.primes) == 1


def risraa(lat: IdealLattice) -> Violations:
    """Local rings: a^2(M) = M iff a^2 r = r iff r a^2 = r."""
    if not is_local(lat):
        return []
    r, a, _ = _maps(lat)
    M = lat.primes[0]
    conds = {
        "a^2(M)=M": int(a[a[M]]) == M,
        "a^2r=r": bool((a[a[r]] == r).all()),
        "ra^2=r": bool((r[a[a]] == r).all()),
    }
    if len(set(conds.values())) != 1:
        return ["local ring conditions disagree: " + ", ".join(f"{k}={v}" for k, v in conds.items())]
    return []


def _domain(ring: FiniteRing) -> bool:
    for x in range(1, ring.size):
        if (ring.mul_by(x)[1:] == 0).any():
            return False
    return ring.size > 1


def prime_ring_proposition(lat: IdealLattice) -> Violations:
    """Domain iff a is (0 -> R, nonzero -> 0); for domains, field iff a^2 = r.

    The zero ring is not a domain; its single ideal gives the shape vacuously.
    """
    r, a, _ = _maps(lat)
    expect = np.full(len(lat), lat.zero)
    expect[lat.zero] = lat.top
    shape = bool((a == expect).all()) and lat.zero != lat.top
    dom = _domain(lat.ring)
    out = []
    if dom != shape:
        out.append(f"domain={dom} but a has the prime-ring shape: {shape}")
    if dom:
        if lat.ring.is_field() != bool((a[a] == r).all()):
            out.append("field test disagrees with a^2 = r")
    return out


def parity_flags(m: MapMonoid) -> Violations:
    out = []
    for f in classify_properties(m):
        if "even" in f.parities and not f.order_preserving:
            out.append(f"{f.word or '1'} has an even form but is not order-preserving")
        if "odd" in f.parities and not f.order_reversing:
            out.append(f"{f.word or '1'} has an odd form but is not order-reversing")
        if f.order_preserving and f.order_reversing and not f.constant:
            out.append(f"{f.word or '1'} preserves and reverses order but is not constant")
    return out


def k_number_bounds(m: MapMonoid) -> Violations:
    k = k_numbers(m)
    if not (k.K >= k.ring_k >= max(k.ideal_k)) or k.ring_k != max(k.ideal_k):
        return [f"K={k.K}, k={k.ring_k}, per-ideal max {max(k.ideal_k)}"]
    return []


def zero_dimensional_types(lat: IdealLattice, m: Optional[MapMonoid] = None) -> Violations:
    """Local rings: field type, or a collapse of the second type with k <= 5 and K <= 9."""
    if not is_local(lat):
        return []
    m = m or generate_monoid(lat, "ra")
    ab = export_abstract(m)
    k = k_numbers(m)
    out = []
    if lat.ring.is_field():
        if not is_isomorphic(ab, catalog.get("FIELD")):
            out.append("field monoid is not the field type")
        return out
    zb = catalog.get("ZD-b")
    if not (is_isomorphic(ab, zb) or is_quotient(zb, ab)):
        out.append("local monoid is not a collapse of ZD-b")
    if k.ring_k > 5:
        out.append(f"k-number {k.ring_k} > 5")
    if k.K > 9:
        out.append(f"K-number {k.K} > 9")
    return out


# ---------------------------------------------------------------------------
# products


def product_consistency(lat: IdealLattice, factor_lattices: List[IdealLattice]) -> Violations:
    """Ideals of a product are products of ideals; r, a and inclusion act componentwise."""
    ring = lat.ring
    if ring.kind != "product":
        return []
    if len(factor_lattices) != len(ring.factors) or any(
        fl.ring.size != f.size for fl, f in zip(factor_lattices, ring.factors)
    ):
        return ["factor lattices do not match the factors of the ring"]
    out = []
    expected = 1
    for fl in factor_lattices:
        expected *= len(fl)
    if expected != len(lat):
        out.append(f"{len(lat)} ideals, expected {expected}")
    comps = np.array([ring.factor_indices(x) for x in range(ring.size)])

    def split(i: int):
        mask = lat[i].mask()
        parts = []
        for pos, fl in enumerate(factor_lattices):
            fm = np.zeros(fl.ring.size, dtype=bool)
            fm[comps[mask, pos]] = True
            key = [j for j, J in enumerate(fl) if (J.mask() == fm).all()]
            if len(key) != 1:
                return None
            parts.append(key[0])
        prod_mask = np.ones(ring.size, dtype=bool)
        for pos, fl in enumerate(factor_lattices):
            prod_mask &= fl[parts[pos]].mask()[comps[:, pos]]
        return tuple(parts) if (prod_mask == mask).all() else None

    coords = [split(i) for i in range(len(lat))]
    if any(c is None for c in coords):
        return out + ["some ideal is not a product of factor ideals"]
    if len(set(coords)) != len(coords):
        out.append("distinct ideals with equal components")
    for i, c in enumerate(coords):
        for name, img in (("a", "a_image"), ("r", "r_image")):
            got = coords[int(getattr(lat, img)[i])]
            want = tuple(int(getattr(fl, img)[x]) for fl, x in zip(factor_lattices, c))
            if got != want:
                out.append(f"{name} is not componentwise at {lat.ideal_str(i)}")
    for i, ci in enumerate(coords):
        for j, cj in enumerate(coords):
            comp = all(fl.C[x, y] for fl, x, y in zip(factor_lattices, ci, cj))
            if comp != bool(lat.C[i, j]):
                out.append(f"inclusion not componentwise for {lat.ideal_str(i)}, {lat.ideal_str(j)}")
    return out


# ---------------------------------------------------------------------------


LATTICE_SUITES: Dict[str, Callable[[IdealLattice], Violations]] = {
    "lattice": lattice_sanity,
    "r/a basics": closure_properties,
    "a is the largest annihilating ideal": annihilator_is_largest_killer,
    "r is the smallest semiprime cover": radical_is_smallest_semiprime,
    "d properties": dualradical_properties,
    "rd monoid collapse": radical_dualradical_monoid,
    "d^2 consequences": d_squared_consequences,
    "d = a iff semiprime": semiprime_d_equals_a,
    "semiprime equivalence": semiprime_equivalence,
    "rar = rara criterion": rar_theorem,
    "dual ring relations": dual_ring_relations,
    "local a^2(M) = M criterion": risraa,
    "prime ring shape": prime_ring_proposition,
    "local zero-dimensional types": zero_dimensional_types,
}

MONOID_SUITES: Dict[str, Callable[[MapMonoid], Violations]] = {
    "parity and monotonicity": parity_flags,
    "k-number bounds": k_number_bounds,
}


def run_suites(lat: IdealLattice, factor_lattices: Optional[List[IdealLattice]] = None) -> Dict[str, Violations]:
    res = {name: fn(lat) for name, fn in LATTICE_SUITES.items()}
    for gens in ("ra", "rd"):
        m = generate_monoid(lat, gens)
        for name, fn in MONOID_SUITES.items():
            res[f"{name} ({gens})"] = fn(m)
    if factor_lattices is not None:
        res["product consistency"] = product_consistency(lat, factor_lattices)
    return res
