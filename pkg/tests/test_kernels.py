import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from ramonoid import _pykernels as py

ck = pytest.importorskip("ramonoid._ckernels")

PRIMES = [2, 3, 5, 7]


@st.composite
def matrices(draw):
    p = draw(st.sampled_from(PRIMES))
    r = draw(st.integers(0, 6))
    c = draw(st.integers(1, 7))
    a = draw(arrays(np.int64, (r, c), elements=st.integers(0, p - 1)))
    return a, p


def _rank_brute(a, p):
    # rank by counting the span: |span| = p^rank
    rows = [tuple(x) for x in np.asarray(a) % p]
    span = {tuple([0] * a.shape[1])}
    for v in rows:
        span |= {tuple((np.array(s) + k * np.array(v)) % p) for s in span for k in range(p)}
    return round(np.log(len(span)) / np.log(p))


@given(matrices())
def test_rref_backends_agree(mp):
    a, p = mp
    assert np.array_equal(py.rref(a, p), ck.rref(a, p))


@given(matrices())
def test_rref_is_reduced_and_spans(mp):
    a, p = mp
    r = py.rref(a, p)
    assert r.shape[0] == _rank_brute(a, p)
    pivots = [int(np.flatnonzero(row)[0]) for row in r]
    assert pivots == sorted(pivots)
    for i, c in enumerate(pivots):
        assert r[i, c] == 1
        assert np.count_nonzero(r[:, c]) == 1


@given(matrices())
def test_nullspace_backends_agree(mp):
    a, p = mp
    n1 = py.nullspace(a, p, a.shape[1])
    n2 = ck.nullspace(a, p, a.shape[1])
    assert np.array_equal(n1, n2)
    if a.shape[0]:
        assert not ((a @ n1.T) % p).any()
    assert n1.shape[0] == a.shape[1] - _rank_brute(a, p)


@st.composite
def subspace_families(draw):
    p = draw(st.sampled_from([2, 3]))
    c = draw(st.integers(1, 5))
    n = draw(st.integers(1, 5))
    subs = [py.rref(draw(arrays(np.int64, (draw(st.integers(0, 3)), c), elements=st.integers(0, p - 1))), p)
            for _ in range(n)]
    return subs, p, c


@given(subspace_families())
def test_containment_matrix(fam):
    subs, p, c = fam
    rows = np.vstack(subs) if any(s.shape[0] for s in subs) else np.zeros((0, c), dtype=np.int64)
    offsets = np.concatenate([[0], np.cumsum([s.shape[0] for s in subs])]).astype(np.int64)
    pivots = np.array([int(np.flatnonzero(r)[0]) for r in rows], dtype=np.int64)
    want = np.array([[_rank_brute(np.vstack([s, t]), p) == t.shape[0] for t in subs] for s in subs])
    assert np.array_equal(py.containment_matrix(rows, offsets, pivots, p).astype(bool), want)
    assert np.array_equal(ck.containment_matrix(rows, offsets, pivots, p).astype(bool), want)


@given(st.sampled_from([[4], [6], [2, 4], [3, 3], [2, 2, 2]]), st.data())
def test_subgroup_closure(moduli, data):
    moduli = np.array(moduli, dtype=np.int64)
    weights = np.concatenate([[1], np.cumprod(moduli)[:-1]]).astype(np.int64)
    n = int(np.prod(moduli))
    coords = np.array([[(i // w) % m for w, m in zip(weights, moduli)] for i in range(n)], dtype=np.int64)
    gens = data.draw(st.lists(st.integers(0, n - 1), max_size=3))
    start = np.zeros(n, dtype=np.uint8)
    start[0] = 1
    # brute force: close {0} under adding the generators
    want = {0}
    grew = True
    while grew:
        grew = False
        for x in list(want):
            for g in gens:
                y = int(((coords[x] + coords[g]) % moduli) @ weights)
                if y not in want:
                    want.add(y)
                    grew = True
    for impl in (py, ck):
        got = impl.subgroup_closure(start, np.array(gens, dtype=np.int64), coords, moduli, weights)
        assert set(np.flatnonzero(got).tolist()) == want


def test_environment_forces_python_backend():
    import os
    import subprocess
    import sys

    env = dict(os.environ, RAMONOID_PURE_PYTHON="1")
    code = (
        "from ramonoid import kernels, corpus, generate_monoid;"
        "print(kernels.BACKEND, generate_monoid(corpus.lattice('F2[x,y]/(x,y)^3')).size)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "9"]
