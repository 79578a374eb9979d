"""Ideals, the ideal lattice, and the hull / radical / annihilator /
dualradical maps.

Three interchangeable engines store ideals canonically:

* ``LinearEngine`` for rings whose additive group is elementary abelian
  (``F_p``-algebras, products of them): reduced row-echelon bases.
* ``ElementEngine`` for everything else up to 4096 elements: membership
  masks, keyed by the integer whose bits are the member indices.
* ``ProductEngine`` for larger mixed products: tuples of factor keys.
"""

from __future__ import annotations

from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .errors import BudgetExceeded
from .rings import FiniteRing

DEFAULT_IDEAL_BUDGET = 10**6
ELEMENT_ENGINE_LIMIT = 4096
PRIME_ORACLE_LIMIT = 1024


# ---------------------------------------------------------------------------
# engines


class _Engine:
    ring: FiniteRing

    # subclasses implement: principal, sum, intersect, product, annihilator,
    # size, mask, generators, containment, contains

    def zero_key(self):
        return self.generated(())

    def generated(self, elements: Iterable[int]):
        key = self.principal(0)
        for g in elements:
            key = self.sum(key, self.principal(int(g)))
        return key

    def principal_seeds(self) -> Iterable[int]:
        return range(self.ring.size)

    def enumerate(self, budget: int) -> List:
        """Principal ideals first, then close under adding principal ideals."""
        principals: Dict = {}
        for g in self.principal_seeds():
            k = self.principal(g)
            if k not in principals:
                principals[k] = None
                if len(principals) > budget:
                    raise BudgetExceeded("ideals", len(principals), budget)
        plist = list(principals)
        seen = dict(principals)
        seen.setdefault(self.zero_key(), None)
        todo = list(seen)
        while todo:
            cur = todo.pop()
            for q in plist:
                s = self.sum(cur, q)
                if s not in seen:
                    seen[s] = None
                    todo.append(s)
                    if len(seen) > budget:
                        raise BudgetExceeded("ideals", len(seen), budget)
        return sorted(seen, key=lambda k: (self.size(k), self.sort_key(k)))

    def sort_key(self, key):
        return key


class LinearEngine(_Engine):
    """Ideals of an ``F_p``-algebra as RREF row bases; key = raw bytes."""

    def __init__(self, ring: FiniteRing):
        assert ring.p is not None
        self.ring = ring
        self.p = ring.p
        self.dim = ring.k
        self._basis: Dict[bytes, np.ndarray] = {}
        self._mulmat = {}

    def _key(self, basis: np.ndarray) -> bytes:
        basis = np.ascontiguousarray(basis, dtype=np.int64).reshape(-1, self.dim)
        key = basis.tobytes()
        if key not in self._basis:
            self._basis[key] = basis
        return key

    def basis(self, key: bytes) -> np.ndarray:
        return self._basis[key]

    def mul_matrix(self, g: int) -> np.ndarray:
        m = self._mulmat.get(g)
        if m is None:
            m = self.ring.mul_matrix(g)
            self._mulmat[g] = m
        return m

    def principal(self, g: int) -> bytes:
        if g == 0:
            return self._key(np.zeros((0, self.dim), dtype=np.int64))
        return self._key(kernels.rref(self.ring.mul_matrix(g), self.p))

    def principal_seeds(self) -> Iterable[int]:
        # Rg = R(cg) for units c of F_p, so one representative per line suffices
        if self.p == 2:
            return range(self.ring.size)
        coords = self.ring.all_coords
        nz = coords != 0
        first = np.where(nz.any(axis=1), coords[np.arange(len(coords)), nz.argmax(axis=1)], 1)
        return np.flatnonzero(first == 1).tolist()

    def sum(self, a: bytes, b: bytes) -> bytes:
        A, B = self._basis[a], self._basis[b]
        if not A.shape[0]:
            return b
        if not B.shape[0]:
            return a
        return self._key(kernels.rref(np.vstack([A, B]), self.p))

    def _perp(self, key: bytes) -> np.ndarray:
        B = self._basis[key]
        return kernels.nullspace(B, self.p, ncols=self.dim)

    def intersect(self, a: bytes, b: bytes) -> bytes:
        stack = np.vstack([self._perp(a), self._perp(b)])
        return self._key(kernels.nullspace(stack, self.p, ncols=self.dim))

    def product(self, a: bytes, b: bytes) -> bytes:
        A, B = self._basis[a], self._basis[b]
        rows = [np.einsum("i,j,ijk->k", x, y, self.ring.table) % self.p for x in A for y in B]
        if not rows:
            return self.principal(0)
        return self._key(kernels.rref(np.array(rows), self.p))

    def annihilator(self, a: bytes) -> bytes:
        A = self._basis[a]
        if not A.shape[0]:
            return self._key(np.eye(self.dim, dtype=np.int64))
        stack = np.vstack([np.einsum("j,ijk->ki", b, self.ring.table) % self.p for b in A])
        return self._key(kernels.nullspace(stack, self.p, ncols=self.dim))

    def size(self, a: bytes) -> int:
        return self.p ** self._basis[a].shape[0]

    def sort_key(self, key: bytes):
        return tuple(self._basis[key].ravel().tolist())

    def mask(self, a: bytes) -> np.ndarray:
        B = self._basis[a]
        X = self.ring.all_coords
        if not B.shape[0]:
            return (X == 0).all(axis=1)
        piv = (B != 0).argmax(axis=1)
        resid = (X - X[:, piv] @ B) % self.p
        return ~resid.any(axis=1)

    def contains(self, small: bytes, big: bytes) -> bool:
        S, B = self._basis[small], self._basis[big]
        if not S.shape[0]:
            return True
        if S.shape[0] > B.shape[0]:
            return False
        if not B.shape[0]:
            return False
        piv = (B != 0).argmax(axis=1)
        return not ((S - S[:, piv] @ B) % self.p).any()

    def containment(self, keys: Sequence[bytes]) -> np.ndarray:
        bases = [self._basis[k] for k in keys]
        offsets = np.zeros(len(keys) + 1, dtype=np.int64)
        offsets[1:] = np.cumsum([b.shape[0] for b in bases])
        rows = np.vstack(bases) if offsets[-1] else np.zeros((0, self.dim), dtype=np.int64)
        piv = (rows != 0).argmax(axis=1).astype(np.int64) if rows.shape[0] else np.zeros(0, dtype=np.int64)
        return kernels.containment_matrix(rows, offsets, piv, self.p)

    def generators(self, a: bytes) -> List[int]:
        return [self.ring.index(row) for row in self._basis[a]]


class ElementEngine(_Engine):
    """Ideals as membership masks with a short additive generating list."""

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        self._data: Dict[int, Tuple[np.ndarray, Tuple[int, ...]]] = {}
        self._mul: Dict[int, np.ndarray] = {}

    def _mul_by(self, g: int) -> np.ndarray:
        m = self._mul.get(g)
        if m is None:
            m = self.ring.mul_by(g)
            self._mul[g] = m
        return m

    def _register(self, mask: np.ndarray, gens: Sequence[int]) -> int:
        key = int.from_bytes(np.packbits(mask.astype(bool), bitorder="little").tobytes(), "little")
        if key not in self._data:
            self._data[key] = (mask.astype(np.uint8), tuple(gens))
        return key

    def _close(self, mask: np.ndarray, gens: Iterable[int]) -> Tuple[np.ndarray, List[int]]:
        R = self.ring
        used = []
        mask = mask.astype(np.uint8)
        for g in gens:
            g = int(g)
            if not mask[g]:
                mask = kernels.subgroup_closure(mask, [g], R.all_coords, R.moduli, R.weights)
                used.append(g)
        return mask, used

    def _from_mask(self, mask: np.ndarray) -> int:
        """Register a mask that is known to be a subgroup, picking generators greedily."""
        base = np.zeros(self.ring.size, dtype=np.uint8)
        base[0] = 1
        _, gens = self._close(base, np.flatnonzero(mask))
        return self._register(mask, gens)

    def principal(self, g: int) -> int:
        mask = np.zeros(self.ring.size, dtype=np.uint8)
        mask[self._mul_by(g)] = 1
        gens = [self.ring.mul(e, g) for e in self.ring.additive_generators]
        base = np.zeros(self.ring.size, dtype=np.uint8)
        base[0] = 1
        _, used = self._close(base, gens)
        return self._register(mask, used)

    def sum(self, a: int, b: int) -> int:
        ma, ga = self._data[a]
        mb, gb = self._data[b]
        mask, used = self._close(ma, gb)
        if not used:
            return a
        return self._register(mask, ga + tuple(used))

    def intersect(self, a: int, b: int) -> int:
        return self._from_mask(self._data[a][0] & self._data[b][0])

    def product(self, a: int, b: int) -> int:
        ga, gb = self._data[a][1], self._data[b][1]
        base = np.zeros(self.ring.size, dtype=np.uint8)
        base[0] = 1
        mask, used = self._close(base, [self.ring.mul(x, y) for x in ga for y in gb])
        return self._register(mask, used)

    def annihilator(self, a: int) -> int:
        mask = np.ones(self.ring.size, dtype=bool)
        for g in self._data[a][1]:
            mask &= self._mul_by(g) == 0
        return self._from_mask(mask.astype(np.uint8))

    def size(self, a: int) -> int:
        return int(self._data[a][0].sum())

    def mask(self, a: int) -> np.ndarray:
        return self._data[a][0].astype(bool)

    def contains(self, small: int, big: int) -> bool:
        return small & ~big == 0

    def containment(self, keys: Sequence[int]) -> np.ndarray:
        M = np.array([self._data[k][0] for k in keys], dtype=np.float32)
        outside = (M @ (1.0 - M).T) == 0
        return outside

    def generators(self, a: int) -> List[int]:
        return list(self._data[a][1])


class ProductEngine(_Engine):
    """Ideals of ``R_1 x ... x R_n`` as tuples of factor ideals."""

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        self.parts = [engine_for(f) for f in ring.factors]

    def principal(self, g: int):
        return tuple(e.principal(x) for e, x in zip(self.parts, self.ring.factor_indices(g)))

    def _zip(self, op, a, b):
        return tuple(getattr(e, op)(x, y) for e, x, y in zip(self.parts, a, b))

    def sum(self, a, b):
        return self._zip("sum", a, b)

    def intersect(self, a, b):
        return self._zip("intersect", a, b)

    def product(self, a, b):
        return self._zip("product", a, b)

    def annihilator(self, a):
        return tuple(e.annihilator(x) for e, x in zip(self.parts, a))

    def size(self, a) -> int:
        out = 1
        for e, x in zip(self.parts, a):
            out *= e.size(x)
        return out

    def sort_key(self, a):
        return tuple(e.sort_key(x) for e, x in zip(self.parts, a))

    def contains(self, small, big) -> bool:
        return all(e.contains(x, y) for e, x, y in zip(self.parts, small, big))

    def enumerate(self, budget: int) -> List:
        from itertools import product as iproduct

        factor_lists = [e.enumerate(budget) for e in self.parts]
        total = 1
        for fl in factor_lists:
            total *= len(fl)
        if total > budget:
            raise BudgetExceeded("ideals", total, budget, exact=True)
        keys = list(iproduct(*factor_lists))
        return sorted(keys, key=lambda k: (self.size(k), self.sort_key(k)))

    def containment(self, keys: Sequence) -> np.ndarray:
        out = np.ones((len(keys), len(keys)), dtype=bool)
        for pos, e in enumerate(self.parts):
            fk = sorted({k[pos] for k in keys}, key=lambda x: (e.size(x), e.sort_key(x)))
            idx = {k: i for i, k in enumerate(fk)}
            C = e.containment(fk)
            sel = np.array([idx[k[pos]] for k in keys])
            out &= C[np.ix_(sel, sel)]
        return out

    def mask(self, a) -> np.ndarray:
        out = np.ones(1, dtype=bool)
        for e, x in zip(self.parts, a):
            out = (out[None, :] & e.mask(x)[:, None]).ravel()
        return out

    def generators(self, a) -> List[int]:
        out = []
        zeros = [0] * len(self.parts)
        for pos, (e, x) in enumerate(zip(self.parts, a)):
            for g in e.generators(x):
                parts = list(zeros)
                parts[pos] = g
                out.append(self.ring.from_factor_indices(parts))
        return out


def engine_for(ring: FiniteRing) -> _Engine:
    """The (cached) ideal engine appropriate for ``ring``."""
    eng = ring.__dict__.get("_ideal_engine")
    if eng is None:
        if ring.p is not None:
            eng = LinearEngine(ring)
        elif ring.size <= ELEMENT_ENGINE_LIMIT:
            eng = ElementEngine(ring)
        elif ring.kind == "product":
            eng = ProductEngine(ring)
        else:
            raise ValueError(f"no ideal engine for {ring.name} ({ring.size} elements, mixed moduli)")
        ring.__dict__["_ideal_engine"] = eng
    return eng


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """An ideal of ``ring`` in canonical form (hashable; ``<=`` is inclusion)."""

    __slots__ = ("ring", "key", "_size")

    def __init__(self, ring: FiniteRing, key):
        self.ring = ring
        self.key = key
        self._size: Optional[int] = None

    @property
    def engine(self) -> _Engine:
        return engine_for(self.ring)

    @property
    def size(self) -> int:
        if self._size is None:
            self._size = self.engine.size(self.key)
        return self._size

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and other.ring is self.ring and other.key == self.key

    def __hash__(self) -> int:
        return hash((id(self.ring), self.key))

    def __le__(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return self.engine.contains(self.key, other.key)

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self != other

    def __ge__(self, other: "Ideal") -> bool:
        return other <= self

    def __gt__(self, other: "Ideal") -> bool:
        return other < self

    def __contains__(self, x: int) -> bool:
        return bool(self.mask()[x])

    def mask(self) -> np.ndarray:
        return self.engine.mask(self.key)

    def elements(self) -> List[int]:
        return np.flatnonzero(self.mask()).tolist()

    def generators(self) -> List[int]:
        return self.engine.generators(self.key)

    def is_zero(self) -> bool:
        return self.size == 1

    def is_whole(self) -> bool:
        return self.size == self.ring.size

    def __repr__(self) -> str:
        gens = ", ".join(self.ring.element_str(g) for g in self.generators()) or "0"
        return f"Ideal({gens}; size={self.size})"


def _same_ring(I: Ideal, J: Ideal) -> None:
    if I.ring is not J.ring:
        raise ValueError("ideals belong to different rings")


def ideal_generated(ring: FiniteRing, elements: Iterable[int] = ()) -> Ideal:
    """Smallest ideal containing ``elements``."""
    return Ideal(ring, engine_for(ring).generated(elements))


def sum_ideals(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.engine.sum(I.key, J.key))


def intersect_ideals(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.engine.intersect(I.key, J.key))


def multiply_ideals(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.engine.product(I.key, J.key))


def annihilator_ideal(I: Ideal) -> Ideal:
    """``{x : I x = 0}`` computed directly in the ring."""
    return Ideal(I.ring, I.engine.annihilator(I.key))


# ---------------------------------------------------------------------------
# the lattice


class IdealLattice:
    """All ideals of a ring, deterministically indexed by (size, canonical form)."""

    def __init__(self, ring: FiniteRing, keys: Sequence, containment: np.ndarray):
        self.ring = ring
        self.engine = engine_for(ring)
        self.ideals: List[Ideal] = [Ideal(ring, k) for k in keys]
        self.index: Dict = {k: i for i, k in enumerate(keys)}
        self.C = np.asarray(containment, dtype=bool)
        self.C.setflags(write=False)
        self.sizes = np.array([self.engine.size(k) for k in keys], dtype=np.int64)
        self.zero = self.index[self.engine.zero_key()]
        self.top = int(np.flatnonzero(self.sizes == ring.size)[0])
        self._meet_cache: Dict[Tuple[int, ...], int] = {}

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __getitem__(self, i: int) -> Ideal:
        return self.ideals[i]

    def idx(self, I) -> int:
        if isinstance(I, (int, np.integer)):
            return int(I)
        return self.index[I.key]

    def leq(self, i: int, j: int) -> bool:
        return bool(self.C[i, j])

    # -- lattice operations by index ----------------------------------------
    def meet_all(self, idxs: Iterable[int]) -> int:
        """Intersection of a family of ideals; the empty family gives R."""
        idxs = tuple(sorted(set(int(i) for i in idxs)))
        if not idxs:
            return self.top
        if len(idxs) == 1:
            return idxs[0]
        hit = self._meet_cache.get(idxs)
        if hit is None:
            lower = self.C[:, list(idxs)].all(axis=1)
            cand = np.flatnonzero(lower)
            hit = int(cand[np.argmax(self.sizes[cand])])
            self._meet_cache[idxs] = hit
        return hit

    def meet(self, i: int, j: int) -> int:
        return self.meet_all((i, j))

    def join(self, i: int, j: int) -> int:
        upper = self.C[i] & self.C[j]
        cand = np.flatnonzero(upper)
        return int(cand[np.argmin(self.sizes[cand])])

    # -- spectrum -------------------------------------------------------------
    @cached_property
    def primes(self) -> Tuple[int, ...]:
        proper = [i for i in range(len(self)) if i != self.top]
        out = []
        for i in proper:
            above = np.flatnonzero(self.C[i])
            if all(j == i or j == self.top for j in above):
                out.append(i)
        if self.ring.size <= PRIME_ORACLE_LIMIT:
            oracle = elementwise_primes(self)
            if oracle != tuple(out):
                raise RuntimeError(f"prime cross-check failed: maximal {out} vs elementwise {oracle}")
        return tuple(out)

    def hull(self, i: int) -> Tuple[int, ...]:
        return tuple(p for p in self.primes if self.C[i, p])

    def hull_complement(self, i: int) -> Tuple[int, ...]:
        return tuple(p for p in self.primes if not self.C[i, p])

    @cached_property
    def r_image(self) -> np.ndarray:
        return self._freeze([self.meet_all(self.hull(i)) for i in range(len(self))])

    @cached_property
    def a_image(self) -> np.ndarray:
        return self._freeze([self.index[self.engine.annihilator(I.key)] for I in self.ideals])

    @cached_property
    def d_image(self) -> np.ndarray:
        return self._freeze([self.meet_all(self.hull_complement(i)) for i in range(len(self))])

    @staticmethod
    def _freeze(vals) -> np.ndarray:
        arr = np.array(vals, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def image(self, symbol: str) -> np.ndarray:
        return {"r": self.r_image, "a": self.a_image, "d": self.d_image}[symbol]

    @property
    def nilradical(self) -> int:
        return int(self.r_image[self.zero])

    def ideal_str(self, i: int) -> str:
        gens = self.ideals[i].generators()
        if not gens:
            return "(0)"
        return "(" + ", ".join(self.ring.element_str(g) for g in gens) + ")"

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.name,
            "ring_size": self.ring.size,
            "ideal_count": len(self),
            "ideals": [
                {
                    "index": i,
                    "size": int(self.sizes[i]),
                    "generators": [self.ring.element_str(g) for g in I.generators()],
                }
                for i, I in enumerate(self.ideals)
            ],
            "containment": [[int(x) for x in row] for row in self.C],
            "zero": self.zero,
            "whole": self.top,
            "spectrum": list(self.primes),
            "nilradical": self.nilradical,
            "radical": self.r_image.tolist(),
            "annihilator": self.a_image.tolist(),
            "dualradical": self.d_image.tolist(),
        }


def all_ideals(ring: FiniteRing, budget: int = DEFAULT_IDEAL_BUDGET) -> IdealLattice:
    """Enumerate every ideal of ``ring``; raises ``BudgetExceeded`` past ``budget``."""
    eng = engine_for(ring)
    keys = eng.enumerate(budget)
    return IdealLattice(ring, keys, eng.containment(keys))


def elementwise_primes(lat: IdealLattice) -> Tuple[int, ...]:
    """Primes by the definition: proper, and ``ab in P`` forces ``a in P`` or ``b in P``."""
    ring = lat.ring
    n = ring.size
    table = np.empty((n, n), dtype=np.int64)
    for g in range(n):
        table[:, g] = ring.mul_by(g)
    out = []
    for i, I in enumerate(lat.ideals):
        if i == lat.top:
            continue
        m = I.mask()
        outside = np.flatnonzero(~m)
        ok = True
        for start in range(0, len(outside), 256):
            rows = outside[start : start + 256]
            if m[table[np.ix_(rows, outside)]].any():
                ok = False
                break
        if ok:
            out.append(i)
    return tuple(out)


# ---------------------------------------------------------------------------
# map-level API on Ideal objects


def prime_spectrum(lat: IdealLattice) -> List[Ideal]:
    return [lat[i] for i in lat.primes]


def hull(lat: IdealLattice, I) -> List[Ideal]:
    return [lat[i] for i in lat.hull(lat.idx(I))]


def hull_complement(lat: IdealLattice, I) -> List[Ideal]:
    return [lat[i] for i in lat.hull_complement(lat.idx(I))]


def radical(lat: IdealLattice, I) -> Ideal:
    return lat[int(lat.r_image[lat.idx(I)])]


def annihilator(lat: IdealLattice, I) -> Ideal:
    return lat[int(lat.a_image[lat.idx(I)])]


def dualradical(lat: IdealLattice, I) -> Ideal:
    return lat[int(lat.d_image[lat.idx(I)])]


def is_semiprime_ideal(lat: IdealLattice, I) -> bool:
    i = lat.idx(I)
    return int(lat.r_image[i]) == i


def is_semiprime_ring(lat: IdealLattice) -> bool:
    return is_semiprime_ideal(lat, lat.zero)


def is_dual_ring(lat: IdealLattice) -> bool:
    a = lat.a_image
    return bool((a[a] == np.arange(len(lat))).all())


def birkenmeier_condition(lat: IdealLattice, reading: str = "annihilator") -> bool:
    """``m(I cap J) = m(I) + m(J)`` for every pair of ideals.

    ``reading="annihilator"`` takes ``m = a``, the notation of the source
    characterization (sums of annihilator ideals).  ``reading="radical"``
    takes ``m = r`` literally; that version already fails at ``I = 0``,
    ``J = R`` in every nonzero ring.
    """
    maps = {"annihilator": lat.a_image, "radical": lat.r_image}
    if reading not in maps:
        raise ValueError(f"reading must be 'annihilator' or 'radical', got {reading!r}")
    m = maps[reading]
    n = len(lat)
    for i in range(n):
        for j in range(i, n):
            if m[lat.meet(i, j)] != lat.join(int(m[i]), int(m[j])):
                return False
    return True
