import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from ramonoid import catalog
from ramonoid.errors import NonConfluentError, PresentationError
from ramonoid.pomonoid import (
    OrderedMonoid,
    RewritingPresentation,
    RewritingSystem,
    check_confluence,
    covers,
    derive_order,
    from_presentation,
    is_isomorphic,
    is_quotient,
    isomorphism,
    odot,
    transitive_closure,
)


def _kura():
    return RewritingPresentation.parse("kc", ["c^2=1", "k^2=k", "kckckck=kck"], ["1<=k"], "k", "c")


def test_kuratowski_matches_a_finite_space():
    m = from_presentation(_kura())
    subsets, ops, evaluate = oracles.kuratowski_operators()
    assert m.size == len(ops) == 14
    imgs = [evaluate(w) for w in m.labels]
    assert len(set(imgs)) == 14
    for i in range(m.size):
        for j in range(m.size):
            prod = tuple(imgs[i][v] for v in imgs[j])
            assert imgs[int(m.table[i, j])] == prod
            if m.order[i, j]:
                assert all(subsets[a] <= subsets[b] for a, b in zip(imgs[i], imgs[j]))


def test_rewriting_rules_are_shortlex_oriented():
    m = from_presentation(_kura())
    for lhs, rhs in m.rewriting_rules:
        assert (len(lhs), lhs) > (len(rhs), rhs) or len(lhs) > len(rhs)


def test_normal_forms_and_confluence():
    rs = RewritingSystem([("aa", ""), ("rr", "r"), ("rara", "rar")], "ar")
    rs.complete(100)
    assert rs.normal_form("aaraa") == "r"
    assert check_confluence(rs, "ar", 8) == 8


def test_non_confluent_system_detected():
    rs = RewritingSystem([("ab", "a"), ("ba", "b")], "ab")
    with pytest.raises(NonConfluentError):
        check_confluence(rs, "ab", 4)


def test_presentation_syntax():
    with pytest.raises(PresentationError):
        RewritingPresentation.parse("ra", ["a^2"], [])
    with pytest.raises(PresentationError):
        RewritingPresentation.parse("ra", ["a^2=1"], ["1=r"])


def test_order_cycles_collapse():
    pres = RewritingPresentation.parse("ra", ["a^2=1", "r^2=r", "rarara=rar", "arar=r"], ["1<=r", "1<=a^2"], "r", "a")
    m = from_presentation(pres)
    assert m.labels == ("", "a")
    assert not m.order[0, 1] and not m.order[1, 0]


def test_derive_order_respects_antitone_letters():
    # Z/2 = {1, a} acting on itself; 1 <= a forces a*a <= a*1, i.e. 1 <= ... swapped
    table = np.array([[0, 1], [1, 0]])
    ax = np.zeros((2, 2), dtype=bool)
    ax[0, 1] = True
    rel = derive_order(table, ax, {"a": 1}, "", "a")
    assert rel[1, 0] and rel[0, 1]


def test_transitive_closure_and_covers():
    rel = np.zeros((4, 4), dtype=bool)
    rel[0, 1] = rel[1, 2] = rel[2, 3] = True
    tc = transitive_closure(rel)
    assert tc[0, 3] and tc[0, 0] and not tc[3, 0]
    assert sorted(covers(tc)) == [(0, 1), (1, 2), (2, 3)]


def _random_monoid(data):
    """A submonoid of the full transformation monoid on a small chain, ordered pointwise."""
    n = data.draw(st.integers(2, 4))
    f = tuple(data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
    g = tuple(data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
    ops = oracles.map_monoid(list(range(n)), {"a": lambda x: f[x], "r": lambda x: g[x]})
    imgs = sorted(ops, key=lambda t: (len(ops[t]), ops[t]))
    idx = {t: i for i, t in enumerate(imgs)}
    table = np.array([[idx[tuple(x[v] for v in y)] for y in imgs] for x in imgs])
    order = np.array([[all(a <= b for a, b in zip(x, y)) for y in imgs] for x in imgs])
    labels = tuple(ops[t] for t in imgs)
    return OrderedMonoid(labels, table, order, idx[tuple(range(n))], (idx[g], idx[f]), ("r", "a"), "rand")


@given(st.data())
def test_odot_size_matches_oracle(data):
    A, B = _random_monoid(data), _random_monoid(data)
    P = odot([A, B])
    gens = [dict(zip(M.symbols, M.generators)) for M in (A, B)]
    want = oracles.odot_size([A.table.tolist(), B.table.tolist()], gens, [A.identity, B.identity])
    assert P.size == want
    assert P.validate() == []
    # the projections are order-preserving surjections
    assert is_quotient(P, A) and is_quotient(P, B)


@given(st.data())
def test_odot_idempotent_and_commutative(data):
    A, B = _random_monoid(data), _random_monoid(data)
    assert is_isomorphic(odot([A, A]), A)
    assert odot([A, B]).size == odot([B, A]).size


@given(st.data())
def test_dict_roundtrip(data):
    A = _random_monoid(data)
    B = OrderedMonoid.from_dict(json.loads(json.dumps(A.to_dict())))
    assert isomorphism(A, B) is not None
    assert B.to_dict() == A.to_dict()


@pytest.mark.parametrize(
    "doc",
    [{}, {"symbols": ["r"], "elements": ["1"], "table": [[0]], "identity": 0, "generators": [5]},
     {"symbols": ["r"], "elements": ["1", "r"], "table": [[0, 1], [1, 0]], "identity": 1, "generators": [1]}],
)
def test_malformed_documents(doc):
    with pytest.raises(ValueError, match="malformed"):
        OrderedMonoid.from_dict(doc)


def test_dot_marks_idempotents():
    m = catalog.get("EX1-7")
    dot = m.to_dot()
    assert dot.count("style=bold") == sum(m.idempotents())
    assert dot.count(" -- ") == len(m.hasse())


def test_quotient_is_not_symmetric():
    big, small = catalog.get("LOCDUAL-i"), catalog.get("EX1-7")
    assert is_quotient(big, small)
    assert not is_quotient(small, big)
