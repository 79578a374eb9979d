import numpy as np
import pytest

import oracles
from ramonoid import corpus
from ramonoid.errors import BudgetExceeded
from ramonoid.monoid import (
    classify_properties,
    export_abstract,
    generate_monoid,
    hasse,
    k_numbers,
    monoid_report,
    orbit,
    to_dot,
)
from ramonoid.words import shortlex_key

NAMES = corpus.corpus_names()

# monoid sizes for the generator sets ra, rd, rad; derived with oracles.ring_monoid
SIZES = {
    "GF(2)": (2, 2, 2), "GF(3)": (2, 2, 2), "GF(4)": (2, 2, 2), "Z/4": (7, 3, 13), "Z/6": (2, 2, 2),
    "Z/8": (8, 3, 14), "Z/12": (8, 3, 16), "Z/36": (7, 3, 13), "F2[x]/(x^2)": (7, 3, 13),
    "F2[x]/(x^3)": (8, 3, 14), "F2[x]/(x^4)": (8, 3, 14), "F3[x]/(x^3)": (8, 3, 14),
    "F2[x,y]/(x^2,xy,y^2)": (8, 3, 14), "F2[x,y]/(x,y)^3": (9, 3, 15), "Z/4(+)Z/4": (8, 3, 14),
    "F2[x]/(x^3) x GF(2)": (10, 3, 18), "F2[x]/(x^2) x GF(2)": (8, 3, 16), "GF(2) x GF(3)": (2, 2, 2),
}
GENS = ("ra", "rd", "rad")


@pytest.fixture(scope="module", params=[(n, g) for n in NAMES for g in GENS], ids=lambda t: f"{t[0]}-{t[1]}")
def case(request):
    name, gens = request.param
    B = oracles.CORPUS[name]()
    ideals, brute = oracles.ring_monoid(B, gens)
    lat = corpus.lattice(name)
    m = generate_monoid(lat, gens)
    # translate oracle ideal positions to lattice indices
    pos = [lat.idx(next(I for I in lat.ideals if frozenset(I.elements()) == S)) for S in ideals]
    back = {p: i for i, p in enumerate(pos)}
    return name, gens, lat, m, ideals, brute, pos, back


def _as_oracle(img, pos):
    return tuple(pos.index(int(img[p])) for p in pos)


def test_frozen_size(case):
    name, gens, _, m, _, brute, _, _ = case
    assert m.size == SIZES[name][GENS.index(gens)] == len(brute)


def test_elements_match_oracle(case):
    _, _, _, m, _, brute, pos, _ = case
    assert {_as_oracle(img, pos) for img in m.images} == set(brute)


def test_words_are_shortlex_least(case):
    _, _, _, m, _, brute, pos, _ = case
    assert m.words[0] == ""
    for i, w in enumerate(m.words):
        assert len(w) == len(brute[_as_oracle(m.images[i], pos)])
        assert np.array_equal(m.evaluate(w), m.images[i])
    keys = [shortlex_key(w, "adr") for w in m.words]
    assert keys == sorted(keys)


def test_table_is_composition(case):
    _, _, _, m, _, _, _, _ = case
    for i in range(m.size):
        for j in range(m.size):
            assert np.array_equal(m.images[int(m.table[i, j])], m.images[i][m.images[j]])


def test_order_is_pointwise_inclusion(case):
    _, _, _, m, ideals, _, pos, _ = case
    for i in range(m.size):
        for j in range(m.size):
            f, g = _as_oracle(m.images[i], pos), _as_oracle(m.images[j], pos)
            assert bool(m.order[i, j]) == oracles.pointwise_leq(ideals, f, g)


def test_flags_match_brute_force(case):
    _, gens, lat, m, ideals, _, pos, _ = case
    flags = classify_properties(m)
    n = len(ideals)
    for i, fl in enumerate(flags):
        f = _as_oracle(m.images[i], pos)
        pres = all(ideals[f[x]] <= ideals[f[y]] for x in range(n) for y in range(n) if ideals[x] <= ideals[y])
        rev = all(ideals[f[y]] <= ideals[f[x]] for x in range(n) for y in range(n) if ideals[x] <= ideals[y])
        assert fl.order_preserving == pres
        assert fl.order_reversing == rev
        assert fl.constant == (len(set(f)) == 1)
        assert fl.idempotent == (tuple(f[v] for v in f) == f)


def test_parities_by_exhaustive_words(case):
    _, gens, _, m, _, _, _, _ = case
    # all words up to length 2*|M| reach every (element, parity) pair that occurs at all
    seen = {(0, 0)}
    frontier = {(0, 0)}
    for _ in range(2 * m.size + 1):
        nxt = set()
        for x, par in frontier:
            for c in gens:
                g = m.element(c)
                nxt.add((int(m.table[g, x]), par ^ (c in "ad")))
        frontier = nxt - seen
        seen |= nxt
    for i in range(m.size):
        want = {"odd" if p else "even" for x, p in seen if x == i}
        assert set(m.parities[i]) == want


def test_k_numbers_are_orbit_sizes(case):
    _, _, lat, m, _, _, _, _ = case
    k = k_numbers(m)
    for i in range(len(lat)):
        assert k.ideal_k[i] == len(orbit(m, lat[i]))
    assert k.ring_k == max(k.ideal_k)


def test_square_zero_named_values():
    m = generate_monoid(corpus.lattice("F2[x]/(x^2)"))
    assert [m.label(i) for i in range(m.size)] == ["1", "a", "r", "ar", "ra", "ara", "rar"]
    assert k_numbers(m).ideal_k == (3, 1, 3)


def test_foreign_letter_rejected():
    m = generate_monoid(corpus.lattice("Z/4"), "rd")
    with pytest.raises(ValueError, match="not among the generators"):
        m.evaluate("ra")


@pytest.mark.parametrize("bad", ["", "rx", "rr", ["r", "q"]])
def test_bad_generator_sets(bad):
    with pytest.raises(ValueError):
        generate_monoid(corpus.lattice("Z/4"), bad)


def test_monoid_budget():
    with pytest.raises(BudgetExceeded):
        generate_monoid(corpus.lattice("Z/4"), "rad", budget=5)


def test_reports_and_exports():
    m = generate_monoid(corpus.lattice("F2[x]/(x^3)"))
    rep = monoid_report(m)
    assert rep["K"] == 8 and rep["ring_k"] == 4
    assert len(rep["elements"]) == 8
    A = export_abstract(m)
    assert A.validate() == []
    assert set(hasse(m)) == set(A.hasse_words())
    dot = to_dot(m)
    assert dot.startswith("graph ") and dot.count("--") == len(hasse(m))
