"""Property tests on randomly drawn small rings, checked against the brute-force oracle."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ramonoid.checks import run_suites
from ramonoid.ideals import all_ideals
from ramonoid.monoid import export_abstract, generate_monoid
from ramonoid.pomonoid import is_isomorphic, odot
from ramonoid.rings import build_ring, description_from_dict, validate_ring_axioms


@st.composite
def small_rings(draw, depth=0):
    """(description dict, size, oracle factory) triples for rings of at most 64 elements.

    The oracle ring is built lazily so that drawing examples stays cheap.
    """
    kinds = ["cyclic", "truncated", "monomial2"] + (["product", "trivext"] if depth == 0 else [])
    kind = draw(st.sampled_from(kinds))
    if kind == "cyclic":
        n = draw(st.integers(1, 40))
        return {"type": "cyclic", "n": n}, n, lambda: oracles.zmod(n)
    if kind == "truncated":
        p = draw(st.sampled_from([2, 3]))
        k = draw(st.integers(1, 4 if p == 2 else 3))
        doc = {"type": "poly_quotient", "p": p, "vars": ["x"], "caps": {"x": f"x^{k} = 0"}}
        return doc, p**k, lambda: oracles.truncated(p, k)
    if kind == "monomial2":
        i = draw(st.integers(1, 3))
        j = draw(st.integers(1, 3))
        kill = draw(st.booleans()) and i > 1 and j > 1
        basis = [(a, b) for a in range(i) for b in range(j) if not (kill and a >= 1 and b >= 1)]
        if len(basis) > 6:
            kill = True
            basis = [(a, b) for a, b in basis if not (a >= 1 and b >= 1)]
        basis.sort(key=lambda e: (sum(e), -e[0]))
        doc = {"type": "poly_quotient", "p": 2, "vars": ["x", "y"], "caps": {"x": f"x^{i} = 0", "y": f"y^{j} = 0"}}
        if kill:
            doc["extra_relations"] = ["x*y"]
        return doc, 2 ** len(basis), lambda: oracles.monomial_algebra(2, basis)
    if kind == "trivext":
        n = draw(st.integers(2, 6))
        doc = {"type": "trivial_extension", "base": {"type": "cyclic", "n": n}}
        return doc, n * n, lambda: oracles.trivial_extension_zmod(n)
    d1, n1, f1 = draw(small_rings(depth=1))
    d2, n2, f2 = draw(small_rings(depth=1))
    if n1 * n2 > 64:
        return d1, n1, f1
    return {"type": "product", "factors": [d1, d2]}, n1 * n2, lambda: oracles.product(f1(), f2())


@settings(max_examples=60)
@given(small_rings())
def test_random_ring_matches_oracle(pair):
    doc, _, make = pair
    B = make()
    R = build_ring(description_from_dict(doc))
    assert R.size == B.size
    assert all(R.mul(i, j) == B.mul[i][j] and R.add(i, j) == B.add[i][j] for i in range(B.size) for j in range(B.size))
    assert validate_ring_axioms(R).ok
    lat = all_ideals(R)
    assert {frozenset(I.elements()) for I in lat.ideals} == set(oracles.all_ideals(B))


@settings(max_examples=60)
@given(small_rings())
def test_random_ring_monoid_matches_oracle(pair):
    doc, _, make = pair
    B = make()
    lat = all_ideals(build_ring(description_from_dict(doc)))
    for gens in ("ra", "rad"):
        _, brute = oracles.ring_monoid(B, gens)
        assert generate_monoid(lat, gens).size == len(brute)


@settings(max_examples=60)
@given(small_rings())
def test_random_ring_satisfies_suites(pair):
    doc = pair[0]
    R = build_ring(description_from_dict(doc))
    lat = all_ideals(R)
    fls = [all_ideals(f) for f in R.factors] if R.kind == "product" else None
    assert {k: v for k, v in run_suites(lat, fls).items() if v} == {}


@settings(max_examples=30)
@given(small_rings(depth=1), small_rings(depth=1))
def test_product_monoid_is_odot(p1, p2):
    d1, d2 = p1[0], p2[0]
    lat = all_ideals(build_ring(description_from_dict({"type": "product", "factors": [d1, d2]})))
    m1 = export_abstract(generate_monoid(all_ideals(build_ring(description_from_dict(d1)))))
    m2 = export_abstract(generate_monoid(all_ideals(build_ring(description_from_dict(d2)))))
    assert is_isomorphic(export_abstract(generate_monoid(lat)), odot([m1, m2]))


@settings(max_examples=60)
@given(small_rings())
def test_basic_laws_of_r_and_a(pair):
    doc = pair[0]
    lat = all_ideals(build_ring(description_from_dict(doc)))
    r, a = lat.r_image, lat.a_image
    C = lat.C
    idx = np.arange(len(lat))
    assert (r[r] == r).all()
    assert C[idx, r].all()
    assert (a[a[a]] == a).all()
    assert C[idx, a[a]].all()
    for i in idx:
        for j in idx:
            if C[i, j]:
                assert C[r[i], r[j]] and C[a[j], a[i]]
