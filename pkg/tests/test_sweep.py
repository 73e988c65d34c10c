import pytest
from hypothesis import given, settings, strategies as st

from tcurves import (
    BudgetExceeded,
    Classifier,
    IndexOutOfRange,
    MergeMismatch,
    SignDistribution,
    SweepRange,
    builtin,
    empty_report,
    merge,
    normalize_sign,
    num_representatives,
    representative,
    sample,
    sweep,
)
from tcurves.signs import eps_action, raw_index, sign_from_raw_index

from conftest import random_bits


def test_representative_examples():
    assert representative(2, 0).bitstring() == "000000"
    # first free index is canonical index 2, the point (0, 2)
    assert representative(2, 1).bitstring() == "001000"
    assert num_representatives(2) == 8
    assert num_representatives(1) == 1


def test_representative_range_check():
    with pytest.raises(IndexOutOfRange):
        representative(2, 8)
    with pytest.raises(IndexOutOfRange):
        representative(2, -1)


@given(st.integers(0, num_representatives(3) - 1))
@settings(max_examples=300, deadline=None)
def test_representative_roundtrip(m):
    rep, back = normalize_sign(representative(3, m))
    assert back == m
    assert rep == representative(3, m)


def test_normalize_fixes_pinned_bits(rng):
    for d in (2, 3, 4):
        for _ in range(20):
            sigma = SignDistribution.from_bitstring(d, random_bits(d, rng))
            rep, m = normalize_sign(sigma)
            assert rep.bits[0] == rep.bits[1] == rep.bits[d + 1] == 0
            # the representative is in the eightfold orbit of sigma
            orbit = {
                eps_action(sigma, (e0, e1, e2)).bitstring()
                for e0 in (0, 1) for e1 in (0, 1) for e2 in (0, 1)
            }
            assert rep.bitstring() in orbit


def test_all_plus_is_representative():
    sigma = SignDistribution.from_bitstring(3, "0" * 10)
    rep, m = normalize_sign(sigma)
    assert rep == sigma and m == 0


def test_global_flip_normalizes_to_zero():
    rep, m = normalize_sign(SignDistribution.from_bitstring(1, "111"))
    assert rep.bitstring() == "000"
    assert m == 0


def test_raw_index_roundtrip(rng):
    for _ in range(20):
        sigma = SignDistribution.from_bitstring(3, random_bits(3, rng))
        assert sign_from_raw_index(3, raw_index(sigma)) == sigma


def test_degree1_sweep():
    r = sweep(builtin("delaunay-1"))
    assert r.total_classified == 1
    assert r.scheme_map == {"<J>": (1, 0)}


def test_degree2_sweeps():
    T = builtin("delaunay-2")
    rep = sweep(T)
    assert rep.total_classified == 8
    assert set(rep.scheme_map) == {"<1>"}
    raw = sweep(T, raw_space=True)
    assert raw.total_classified == 64
    assert raw.max_ovals() == 1
    assert raw.witness_bitstring("<1>") == "000000"


def test_sweep_chunk_split_merges_to_full():
    T = builtin("delaunay-3")
    full = sweep(T)
    k = num_representatives(3) // 2
    left = sweep(T, SweepRange(0, k))
    right = sweep(T, SweepRange(k, num_representatives(3)))
    assert merge(left, right) == full


def test_merge_properties():
    T = builtin("delaunay-3")
    a = sweep(T, SweepRange(0, 40))
    b = sweep(T, SweepRange(40, 100))
    c = sweep(T, SweepRange(100, 128))
    assert merge(a, empty_report(T)) == a
    assert merge(a, b) == merge(b, a)
    assert merge(merge(a, b), c) == merge(a, merge(b, c))


def test_merge_mismatch():
    with pytest.raises(MergeMismatch):
        merge(sweep(builtin("delaunay-2")), sweep(builtin("delaunay-3")))
    T = builtin("delaunay-2")
    with pytest.raises(MergeMismatch):
        merge(sweep(T), sweep(T, raw_space=True))


def test_worker_and_chunk_invariance():
    T = builtin("delaunay-4")
    base = sweep(T, workers=1)
    assert sweep(T, workers=2) == base
    assert sweep(T, workers=8, chunk_size=111) == base


def test_sample_reproducible():
    T = builtin("delaunay-4")
    c = Classifier(T)
    a = sample(T, 5000, seed=42, classifier=c)
    b = sample(T, 5000, seed=42, workers=4, chunk_size=977, classifier=c)
    assert a == b
    assert a.total_classified == 5000
    assert sample(T, 5000, seed=43, classifier=c) != a


def test_sample_single_draw():
    r = sample(builtin("delaunay-2"), 1, seed=0)
    assert r.total_classified == 1


def test_sweep_range_validation():
    T = builtin("delaunay-2")
    with pytest.raises(IndexOutOfRange):
        sweep(T, SweepRange(0, 9))  # domain has 8 representatives
    with pytest.raises(IndexOutOfRange):
        SweepRange(5, 3)


def test_domain_size_budget():
    with pytest.raises(BudgetExceeded):
        sweep(builtin("delaunay-10"))


def test_witness_is_minimum_index():
    T = builtin("delaunay-3")
    full = sweep(T)
    for scheme, (count, wit) in full.scheme_map.items():
        c = Classifier(T)
        assert c.classify(representative(3, wit)).scheme == scheme
        for m in range(wit):
            assert c.classify(representative(3, m)).scheme != scheme


def test_histogram_consistency():
    r = sweep(builtin("delaunay-4"))
    assert sum(r.oval_histogram) == r.total_classified
    assert sum(c for c, _ in r.scheme_map.values()) == r.total_classified


def test_degree5_full_sweep_properties():
    report = sweep(builtin("delaunay-5"), workers=4)
    assert report.total_classified == num_representatives(5)
    assert report.max_ovals() <= 7
    for scheme in report.scheme_map:
        assert scheme.count("J") == 1
