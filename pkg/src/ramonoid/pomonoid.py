"""Abstract finite ordered monoids.

An ``OrderedMonoid`` carries its multiplication table, a partial order, and
designated generators (first one "r-like", second "a-like").  Elements are
labelled by their shortlex-least words in the generators; ``table[i, j]`` is
the element of word ``labels[i] + labels[j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .dot import hasse_dot
from .errors import NonConfluentError, PresentationError
from .words import format_word, parse_word, shortlex_closure, shortlex_key

DEFAULT_MONOID_BUDGET = 10_000


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation (Warshall)."""
    out = np.array(rel, dtype=bool)
    np.fill_diagonal(out, True)
    for k in range(out.shape[0]):
        out |= out[:, k : k + 1] & out[k : k + 1, :]
    return out


def covers(order: np.ndarray) -> List[Tuple[int, int]]:
    """Transitive reduction of a partial order given as ``order[i, j] = i <= j``."""
    strict = order & ~np.eye(order.shape[0], dtype=bool)
    two_step = (strict.astype(np.int32) @ strict.astype(np.int32)) > 0
    cov = strict & ~two_step
    return [(int(i), int(j)) for i, j in np.argwhere(cov)]


@dataclass(eq=False)
class OrderedMonoid:
    labels: Tuple[str, ...]
    table: np.ndarray
    order: np.ndarray
    identity: int
    generators: Tuple[int, ...]
    symbols: Tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        self.labels = tuple(self.labels)
        self.table = np.asarray(self.table, dtype=np.int64)
        self.order = np.asarray(self.order, dtype=bool)
        self.generators = tuple(int(g) for g in self.generators)
        self.symbols = tuple(self.symbols)
        self._index = {w: i for i, w in enumerate(self.labels)}

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"<OrderedMonoid {self.name or '?'} |M|={self.size}>"

    # -- evaluation -----------------------------------------------------------
    def generator(self, symbol: str) -> int:
        try:
            return self.generators[self.symbols.index(symbol)]
        except ValueError:
            raise ValueError(f"{symbol!r} is not a generator of {self.name or 'this monoid'}") from None

    def eval(self, word: str) -> int:
        """Element named by ``word`` (exponents and parentheses allowed)."""
        flat = parse_word(word, self.symbols)
        x = self.identity
        for c in reversed(flat):
            x = int(self.table[self.generator(c), x])
        return x

    def label(self, i: int) -> str:
        return format_word(self.labels[i])

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def leq(self, i: int, j: int) -> bool:
        return bool(self.order[i, j])

    def is_idempotent(self, i: int) -> bool:
        return int(self.table[i, i]) == i

    def idempotents(self) -> List[bool]:
        return [self.is_idempotent(i) for i in range(self.size)]

    def relation_holds(self, left: str, right: str) -> bool:
        return self.eval(left) == self.eval(right)

    def hasse(self) -> List[Tuple[int, int]]:
        return covers(self.order)

    def hasse_words(self) -> List[Tuple[str, str]]:
        return [(self.label(i), self.label(j)) for i, j in self.hasse()]

    # -- checks -----------------------------------------------------------------
    def validate(self) -> List[str]:
        """Problems with the structure (empty list when it is a valid ordered monoid)."""
        n = self.size
        T = self.table
        O = self.order
        probs = []
        if T.shape != (n, n) or O.shape != (n, n):
            return ["table/order shape mismatch"]
        if ((T < 0) | (T >= n)).any():
            return ["table entries out of range"]
        if not 0 <= self.identity < n or any(not 0 <= g < n for g in self.generators):
            return ["identity or generator index out of range"]
        if len(self.generators) != len(self.symbols):
            return ["one generator per symbol required"]
        e = self.identity
        if not ((T[e] == np.arange(n)).all() and (T[:, e] == np.arange(n)).all()):
            probs.append("identity law fails")
        assoc = T[T, :]  # assoc[i, j, k] = (ij)k
        rhs = T[:, T]  # rhs[i, j, k] = i(jk)
        bad = np.argwhere(assoc != rhs)
        if bad.size:
            i, j, k = bad[0]
            probs.append(f"associativity fails at ({self.label(i)}, {self.label(j)}, {self.label(k)})")
        if not O.diagonal().all():
            probs.append("order not reflexive")
        if (O & O.T & ~np.eye(n, dtype=bool)).any():
            probs.append("order not antisymmetric")
        if ((O.astype(np.int32) @ O.astype(np.int32) > 0) & ~O).any():
            probs.append("order not transitive")
        reached = {e}
        todo = [e]
        while todo:
            x = todo.pop()
            for g in self.generators:
                y = int(T[g, x])
                if y not in reached:
                    reached.add(y)
                    todo.append(y)
        if len(reached) != n:
            probs.append("generators do not generate")
        return probs

    # -- interchange -------------------------------------------------------------
    def to_dict(self) -> dict:
        n = self.size
        return {
            "name": self.name,
            "symbols": list(self.symbols),
            "elements": [self.label(i) for i in range(n)],
            "identity": self.identity,
            "generators": list(self.generators),
            "table": self.table.tolist(),
            "order": [[int(i), int(j)] for i, j in np.argwhere(self.order) if i != j],
            "idempotents": [i for i in range(n) if self.is_idempotent(i)],
            "hasse": [list(c) for c in self.hasse()],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "OrderedMonoid":
        try:
            symbols = tuple(d["symbols"])
            labels = tuple(parse_word(w, symbols) for w in d["elements"])
            n = len(labels)
            table = np.array(d["table"], dtype=np.int64)
            order = np.zeros((n, n), dtype=bool)
            for i, j in d.get("order", []):
                order[i, j] = True
            m = cls(labels, table, transitive_closure(order), int(d["identity"]),
                    tuple(d["generators"]), symbols, d.get("name", ""))
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise ValueError(f"malformed monoid document: {exc}") from None
        probs = m.validate()
        if probs:
            raise ValueError("malformed monoid document: " + "; ".join(probs))
        return m

    def to_dot(self) -> str:
        return hasse_dot(self.name or "monoid", self.labels, self.hasse(), self.idempotents())


# ---------------------------------------------------------------------------
# rewriting presentations


@dataclass(frozen=True)
class RewritingPresentation:
    """Monoid presentation by rewrite rules plus order axioms.

    ``alphabet`` lists the designated generators (first r-like).  Letters in
    ``monotone`` / ``antitone`` preserve / reverse the order under left
    multiplication; right multiplication always preserves it.
    """

    alphabet: Tuple[str, ...]
    rules: Tuple[Tuple[str, str], ...]
    order_axioms: Tuple[Tuple[str, str], ...] = ()
    monotone: FrozenSet[str] = frozenset()
    antitone: FrozenSet[str] = frozenset()
    max_length: int = 12
    max_elements: int = DEFAULT_MONOID_BUDGET
    max_rules: int = 400

    @classmethod
    def parse(
        cls,
        alphabet: str | Sequence[str],
        relations: Iterable[str],
        axioms: Iterable[str] = (),
        monotone: str = "",
        antitone: str = "",
        **kw,
    ) -> "RewritingPresentation":
        """Build from strings such as ``"a^2=1"`` and ``"1<=r"``."""
        alpha = tuple(alphabet)
        rules = []
        for rel in relations:
            if rel.count("=") != 1:
                raise PresentationError(f"relation {rel!r} must have the form u=v")
            u, v = rel.split("=")
            rules.append((parse_word(u, alpha), parse_word(v, alpha)))
        ax = []
        for a in axioms:
            if "<=" not in a:
                raise PresentationError(f"axiom {a!r} must have the form u<=v")
            u, v = a.split("<=")
            ax.append((parse_word(u, alpha), parse_word(v, alpha)))
        return cls(alpha, tuple(rules), tuple(ax), frozenset(monotone), frozenset(antitone), **kw)

    @property
    def letter_order(self) -> str:
        return "".join(sorted(self.alphabet))


class RewritingSystem:
    """A finite string rewriting system oriented by shortlex."""

    def __init__(self, rules: Iterable[Tuple[str, str]], order: str):
        self.order = order
        self.rules: List[Tuple[str, str]] = []
        for u, v in rules:
            self._add(u, v)

    def key(self, w: str):
        return shortlex_key(w, self.order)

    def orient(self, u: str, v: str) -> Optional[Tuple[str, str]]:
        if u == v:
            return None
        return (u, v) if self.key(u) > self.key(v) else (v, u)

    def _add(self, u: str, v: str) -> bool:
        r = self.orient(u, v)
        if r is None or r in self.rules:
            return False
        self.rules.append(r)
        return True

    def normal_form(self, w: str) -> str:
        changed = True
        while changed:
            changed = False
            for l, r in self.rules:
                i = w.find(l)
                if i >= 0:
                    w = w[:i] + r + w[i + len(l) :]
                    changed = True
                    break
        return w

    def critical_pairs(self) -> Iterable[Tuple[str, str]]:
        for l1, r1 in self.rules:
            for l2, r2 in self.rules:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        yield r1 + l2[k:], l1[:-k] + r2
                if (l1, r1) != (l2, r2):
                    start = l1.find(l2)
                    while start >= 0:
                        yield r1, l1[:start] + r2 + l1[start + len(l2) :]
                        start = l1.find(l2, start + 1)

    def interreduce(self) -> None:
        changed = True
        while changed:
            changed = False
            for idx, (l, r) in enumerate(self.rules):
                others = RewritingSystem([], self.order)
                others.rules = self.rules[:idx] + self.rules[idx + 1 :]
                l2 = others.normal_form(l)
                r2 = others.normal_form(r)
                if (l2, r2) != (l, r):
                    del self.rules[idx]
                    self._add(l2, r2)
                    changed = True
                    break

    def complete(self, max_rules: int) -> None:
        """Bounded Knuth-Bendix completion for the shortlex order."""
        self.interreduce()
        while True:
            added = False
            for u, v in list(self.critical_pairs()):
                nu, nv = self.normal_form(u), self.normal_form(v)
                if nu != nv:
                    self._add(nu, nv)
                    added = True
                    if len(self.rules) > max_rules:
                        raise PresentationError(f"completion did not finish within {max_rules} rules")
            self.interreduce()
            if not added:
                return

    def all_normal_forms(self, w: str, memo: Dict[str, FrozenSet[str]]) -> FrozenSet[str]:
        """Every irreducible word reachable from ``w`` by any rewrite order."""
        hit = memo.get(w)
        if hit is not None:
            return hit
        out: set = set()
        reducible = False
        for l, r in self.rules:
            i = w.find(l)
            while i >= 0:
                reducible = True
                out |= self.all_normal_forms(w[:i] + r + w[i + len(l) :], memo)
                i = w.find(l, i + 1)
        res = frozenset(out) if reducible else frozenset([w])
        memo[w] = res
        return res


def check_confluence(system: RewritingSystem, alphabet: str, max_length: int, max_words: int = 1 << 14) -> int:
    """Exhaustively confirm unique normal forms for all words up to ``max_length``.

    Stops early at the length where the word count would pass ``max_words``
    and returns the length actually covered.
    """
    memo: Dict[str, FrozenSet[str]] = {}
    covered = 0
    total = 0
    for n in range(max_length + 1):
        total += len(alphabet) ** n
        if total > max_words:
            break
        for letters in iproduct(alphabet, repeat=n):
            w = "".join(letters)
            forms = system.all_normal_forms(w, memo)
            if len(forms) != 1:
                raise NonConfluentError(w, forms)
        covered = n
    return covered


def from_presentation(pres: RewritingPresentation, name: str = "") -> OrderedMonoid:
    """Finite ordered monoid presented by ``pres``.

    The rules are completed (bounded Knuth-Bendix, shortlex) and the result
    is checked for unique normal forms on every word up to ``max_length``
    before the elements are enumerated.  If the order axioms force
    ``u <= v <= u`` for distinct elements, ``u = v`` is added as a relation
    and everything is recomputed.
    """
    rules = list(pres.rules)
    while True:
        m, cycles = _present_once(pres, rules, name)
        if not cycles:
            return m
        rules.extend(cycles)


def _present_once(pres: RewritingPresentation, rules, name: str):
    order = pres.letter_order
    rs = RewritingSystem(rules, order)
    rs.complete(pres.max_rules)
    longest = max((len(l) for l, _ in rs.rules), default=1)
    check_confluence(rs, order, max(pres.max_length, longest + 1))

    elems = shortlex_closure("", order, lambda g, w: rs.normal_form(g + w), pres.max_elements)
    labels = tuple(w for w, _ in elems)
    for w, nf in elems:
        if w != nf:
            raise PresentationError(f"normal form {nf!r} differs from least word {w!r}")
    idx = {w: i for i, w in enumerate(labels)}
    n = len(labels)
    table = np.empty((n, n), dtype=np.int64)
    for i, u in enumerate(labels):
        for j, v in enumerate(labels):
            table[i, j] = idx[rs.normal_form(u + v)]
    gens = tuple(idx[rs.normal_form(c)] for c in pres.alphabet)
    rel = np.zeros((n, n), dtype=bool)
    for u, v in pres.order_axioms:
        rel[idx[rs.normal_form(u)], idx[rs.normal_form(v)]] = True
    ordm = derive_order(table, rel, {c: g for c, g in zip(pres.alphabet, gens)}, pres.monotone, pres.antitone)
    cycles = [(labels[j], labels[i]) for i, j in np.argwhere(ordm & ordm.T) if i < j]
    m = OrderedMonoid(labels, table, ordm, idx[""], gens, pres.alphabet, name)
    m.rewriting_rules = tuple(rs.rules)  # type: ignore[attr-defined]
    return m, cycles


def derive_order(
    table: np.ndarray,
    axioms: np.ndarray,
    letters: Dict[str, int],
    monotone: Iterable[str],
    antitone: Iterable[str],
) -> np.ndarray:
    """Least order containing ``axioms`` and stable under the multiplications.

    ``u <= v`` gives ``ux <= vx`` for every ``x``; left multiplication by a
    monotone letter keeps the pair, by an antitone letter swaps it.
    """
    n = table.shape[0]
    rel = transitive_closure(axioms)
    mono = [letters[c] for c in monotone if c in letters]
    anti = [letters[c] for c in antitone if c in letters]
    while True:
        new = rel.copy()
        pairs = np.argwhere(rel)
        u, v = pairs[:, 0], pairs[:, 1]
        for x in range(n):
            new[table[u, x], table[v, x]] = True
        for g in mono:
            new[table[g, u], table[g, v]] = True
        for g in anti:
            new[table[g, v], table[g, u]] = True
        new = transitive_closure(new)
        if (new == rel).all():
            return rel
        rel = new


# ---------------------------------------------------------------------------
# products and comparisons


def odot(monoids: Sequence[OrderedMonoid], name: str = "", budget: int = DEFAULT_MONOID_BUDGET) -> OrderedMonoid:
    """Submonoid of the direct product generated by the diagonal generators."""
    if not monoids:
        raise ValueError("odot needs at least one monoid")
    ngen = len(monoids[0].generators)
    if any(len(m.generators) != ngen for m in monoids):
        raise ValueError("all factors need the same number of designated generators")
    symbols = monoids[0].symbols
    pos = {c: t for t, c in enumerate(symbols)}

    def step(c: str, state):
        t = pos[c]
        return tuple(int(m.table[m.generators[t], x]) for m, x in zip(monoids, state))

    start = tuple(m.identity for m in monoids)
    elems = shortlex_closure(start, "".join(sorted(symbols)), step, budget)
    labels = tuple(w for w, _ in elems)
    states = [s for _, s in elems]
    idx = {s: i for i, s in enumerate(states)}
    n = len(states)
    S = np.array(states, dtype=np.int64).reshape(n, len(monoids))
    table = np.empty((n, n), dtype=np.int64)
    order = np.ones((n, n), dtype=bool)
    for k, m in enumerate(monoids):
        order &= m.order[np.ix_(S[:, k], S[:, k])]
    for i in range(n):
        prods = np.stack([m.table[S[i, k], S[:, k]] for k, m in enumerate(monoids)], axis=1)
        table[i] = [idx[tuple(row)] for row in prods.tolist()]
    gens = tuple(idx[step(c, start)] for c in symbols)
    nm = name or " (.) ".join(m.name or "?" for m in monoids)
    out = OrderedMonoid(labels, table, order, idx[start], gens, symbols, nm)
    out.components = S  # type: ignore[attr-defined]
    return out


def _pinned_map(A: OrderedMonoid, B: OrderedMonoid) -> Optional[np.ndarray]:
    """The map sending A's generators to B's, extended along words (None if ill-defined)."""
    if len(A.generators) != len(B.generators):
        return None
    phi = np.full(A.size, -1, dtype=np.int64)
    phi[A.identity] = B.identity
    todo = [A.identity]
    while todo:
        x = todo.pop()
        for ga, gb in zip(A.generators, B.generators):
            y = int(A.table[ga, x])
            img = int(B.table[gb, phi[x]])
            if phi[y] < 0:
                phi[y] = img
                todo.append(y)
            elif phi[y] != img:
                return None
    if (phi < 0).any():
        return None
    return phi


def is_homomorphism(A: OrderedMonoid, B: OrderedMonoid, phi: np.ndarray) -> bool:
    return bool((phi[A.table] == B.table[np.ix_(phi, phi)]).all())


def isomorphism(A: OrderedMonoid, B: OrderedMonoid) -> Optional[np.ndarray]:
    """Generator-pinned isomorphism of ordered monoids, or ``None``."""
    if A.size != B.size:
        return None
    phi = _pinned_map(A, B)
    if phi is None or len(set(phi.tolist())) != A.size:
        return None
    if not is_homomorphism(A, B, phi):
        return None
    if not (A.order == B.order[np.ix_(phi, phi)]).all():
        return None
    return phi


def is_isomorphic(A: OrderedMonoid, B: OrderedMonoid) -> bool:
    return isomorphism(A, B) is not None


def is_quotient(big: OrderedMonoid, small: OrderedMonoid) -> bool:
    """``small`` is an order-compatible collapse of ``big``: a generator-pinned
    surjective homomorphism that is monotone for the orders."""
    phi = _pinned_map(big, small)
    if phi is None or len(set(phi.tolist())) != small.size:
        return False
    if not is_homomorphism(big, small, phi):
        return False
    lo, hi = np.nonzero(big.order)
    return bool(small.order[phi[lo], phi[hi]].all())
