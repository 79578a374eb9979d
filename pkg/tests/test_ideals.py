import pytest

import oracles
from ramonoid import corpus
from ramonoid.errors import BudgetExceeded
from ramonoid.ideals import (
    all_ideals,
    annihilator,
    birkenmeier_condition,
    dualradical,
    elementwise_primes,
    hull,
    hull_complement,
    ideal_generated,
    intersect_ideals,
    is_dual_ring,
    is_semiprime_ideal,
    is_semiprime_ring,
    multiply_ideals,
    prime_spectrum,
    radical,
    sum_ideals,
)
from ramonoid.rings import build_ring, description_from_dict

NAMES = corpus.corpus_names()

# ideal count, prime count; derived with oracles.all_ideals / oracles.prime_ideals
IDEAL_COUNTS = {
    "GF(2)": (2, 1), "GF(3)": (2, 1), "GF(4)": (2, 1), "Z/4": (3, 1), "Z/6": (4, 2), "Z/8": (4, 1),
    "Z/12": (6, 2), "Z/36": (9, 2), "F2[x]/(x^2)": (3, 1), "F2[x]/(x^3)": (4, 1), "F2[x]/(x^4)": (5, 1),
    "F3[x]/(x^3)": (4, 1), "F2[x,y]/(x^2,xy,y^2)": (6, 1), "F2[x,y]/(x,y)^3": (27, 1), "Z/4(+)Z/4": (7, 1),
    "F2[x]/(x^3) x GF(2)": (8, 2), "F2[x]/(x^2) x GF(2)": (6, 2), "GF(2) x GF(3)": (4, 2),
}


def _sets(ideals):
    return {frozenset(I.elements()) for I in ideals}


@pytest.fixture(scope="module", params=NAMES)
def case(request):
    name = request.param
    B = oracles.CORPUS[name]()
    ideals = oracles.all_ideals(B)
    primes = oracles.prime_ideals(B, ideals)
    return name, corpus.lattice(name), B, ideals, primes


def test_frozen_counts(case):
    name, lat, _, ideals, primes = case
    assert (len(lat), len(lat.primes)) == IDEAL_COUNTS[name]
    assert (len(ideals), len(primes)) == IDEAL_COUNTS[name]


def test_lattice_matches_oracle(case):
    _, lat, _, ideals, _ = case
    assert _sets(lat.ideals) == set(ideals)


def test_containment_matrix(case):
    _, lat, _, _, _ = case
    S = [frozenset(I.elements()) for I in lat.ideals]
    for i in range(len(S)):
        for j in range(len(S)):
            assert bool(lat.C[i, j]) == (S[i] <= S[j])


def test_sorted_by_size(case):
    _, lat, _, _, _ = case
    sizes = [I.size for I in lat.ideals]
    assert sizes == sorted(sizes)
    assert lat[lat.zero].is_zero and lat[lat.top].is_whole


def test_primes_match_definition(case):
    _, lat, _, _, primes = case
    assert _sets(prime_spectrum(lat)) == set(primes)
    assert set(lat.primes) == set(elementwise_primes(lat))


def test_radical_annihilator_dualradical(case):
    _, lat, B, _, primes = case
    for I in lat.ideals:
        S = frozenset(I.elements())
        assert frozenset(radical(lat, I).elements()) == oracles.radical(B, S)
        assert frozenset(annihilator(lat, I).elements()) == oracles.annihilator(B, S)
        assert frozenset(dualradical(lat, I).elements()) == oracles.dualradical(B, primes, S)


def test_hull_partition(case):
    _, lat, _, _, _ = case
    for I in lat.ideals:
        h, hc = set(hull(lat, I)), set(hull_complement(lat, I))
        assert h | hc == set(prime_spectrum(lat))
        assert not h & hc
        assert all(I <= P for P in h)


def test_lattice_operations(case):
    _, lat, B, _, _ = case
    for I in lat.ideals:
        for J in lat.ideals:
            SI, SJ = frozenset(I.elements()), frozenset(J.elements())
            assert frozenset(intersect_ideals(I, J).elements()) == SI & SJ
            assert frozenset(sum_ideals(I, J).elements()) == oracles.generated(B, SI | SJ)
            assert frozenset(multiply_ideals(I, J).elements()) == oracles.product_ideal(B, SI, SJ)
            assert lat.meet(lat.idx(I), lat.idx(J)) == lat.idx(intersect_ideals(I, J))
            assert lat.join(lat.idx(I), lat.idx(J)) == lat.idx(sum_ideals(I, J))


def test_semiprime_flags(case):
    _, lat, B, _, _ = case
    for I in lat.ideals:
        S = frozenset(I.elements())
        assert is_semiprime_ideal(lat, I) == (oracles.radical(B, S) == S)
    zero = frozenset([B.zero])
    assert is_semiprime_ring(lat) == (oracles.radical(B, zero) == zero)


def test_dual_ring_flag(case):
    _, lat, B, ideals, _ = case
    want = all(oracles.annihilator(B, oracles.annihilator(B, S)) == S for S in ideals)
    assert is_dual_ring(lat) == want


def test_empty_meet_is_whole_ring():
    lat = corpus.lattice("GF(3)")
    assert lat.meet_all([]) == lat.top
    # the only prime of a field is 0, so d(0) is the empty intersection
    assert dualradical(lat, lat[lat.zero]) == lat[lat.top]


def test_generated_and_principal():
    R = corpus.ring("Z/12")
    assert ideal_generated(R, [8, 6]).elements() == [0, 2, 4, 6, 8, 10]
    assert ideal_generated(R, []).is_zero


def test_mixed_rings_rejected():
    I = corpus.lattice("Z/4")[1]
    J = corpus.lattice("F2[x]/(x^2)")[1]
    with pytest.raises(ValueError):
        sum_ideals(I, J)


def test_nilradical():
    lat = corpus.lattice("Z/12")
    assert lat[lat.nilradical].elements() == [0, 6]


def test_birkenmeier_readings():
    assert birkenmeier_condition(corpus.lattice("GF(2)"))
    # with r read literally the condition fails at I = 0, J = R in any nonzero ring
    assert not birkenmeier_condition(corpus.lattice("GF(2)"), reading="radical")
    with pytest.raises(ValueError):
        birkenmeier_condition(corpus.lattice("GF(2)"), reading="other")


def test_ideal_budget():
    R = build_ring(description_from_dict(corpus.max_ideal_power(2, 3)))
    with pytest.raises(BudgetExceeded):
        all_ideals(R, budget=10)


def test_product_engine_on_large_products():
    from ramonoid.ideals import ProductEngine, engine_for

    parts = [corpus.cyclic(12), {"type": "trivial_extension", "base": corpus.cyclic(4)}, corpus.truncated(3, 3)]
    big = build_ring(description_from_dict(corpus.product(*parts)))
    assert big.size == 5184
    assert isinstance(engine_for(big), ProductEngine)
    lat = all_ideals(big)
    # ideals of a product are products of ideals of the factors
    assert len(lat) == 6 * 7 * 4
    assert len(lat.primes) == 2 + 1 + 1
    Z12 = corpus.lattice("Z/12")
    assert sorted(I.size for I in lat.ideals)[:6] == [1, 2, 2, 3, 3, 4]
    assert lat.top == len(lat) - 1 and len(Z12) == 6
