import itertools

import pytest

from tcurves import (
    Classifier,
    ParseError,
    SignDistribution,
    apply_symmetry,
    builtin,
    classify,
    classify_reference,
    eps_action,
    from_lifting,
    lattice_points,
    oracle_classify,
)
from tcurves.lattice import SYMMETRY_GROUP

from conftest import random_bits, random_unimodular


def test_degree1_all_eight():
    c = Classifier(builtin("delaunay-1"))
    for bits in itertools.product("01", repeat=3):
        assert c.classify("".join(bits)).scheme == "<J>"


def test_degree2_raw_space_both_orbits():
    from tcurves import enumerate_unimodular

    for T in enumerate_unimodular(2).orbits:
        c = Classifier(T)
        schemes = set()
        for m in range(64):
            bits = "".join(str((m >> k) & 1) for k in range(6))
            r = c.classify(bits)
            schemes.add(r.scheme)
            assert r.oval_count <= 1
        assert schemes == {"<1>"}


def test_classify_matches_reference_and_oracle(rng):
    for d in (1, 2, 3, 4, 5):
        T = random_unimodular(d, rng)
        c = Classifier(T)
        for _ in range(40):
            sigma = SignDistribution.from_bitstring(d, random_bits(d, rng))
            fast = c.classify(sigma)
            assert fast == classify_reference(T, sigma)
            assert fast == oracle_classify(T, sigma)


def test_classify_nonunimodular_input(rng):
    # a spike lifting drops an interior point; classification still works
    lift = {p: 0 for p in lattice_points(3)}
    lift[(1, 1)] = 7
    T = from_lifting(3, lift)
    assert not T.is_unimodular
    c = Classifier(T)
    for _ in range(40):
        sigma = SignDistribution.from_bitstring(3, random_bits(3, rng))
        fast = c.classify(sigma)
        assert fast == classify_reference(T, sigma)
        assert fast == oracle_classify(T, sigma)


def test_eightfold_sign_invariance(rng):
    for d in (2, 3, 5):
        T = random_unimodular(d, rng)
        c = Classifier(T)
        for _ in range(20):
            sigma = SignDistribution.from_bitstring(d, random_bits(d, rng))
            base = c.classify(sigma)
            for eps in itertools.product((0, 1), repeat=3):
                assert c.classify(eps_action(sigma, eps)) == base


def test_symmetry_invariance(rng):
    for d in (3, 4):
        T = random_unimodular(d, rng)
        cT = Classifier(T)
        for g in SYMMETRY_GROUP:
            gT, _ = apply_symmetry(T, None, g)
            cg = Classifier(gT)
            for _ in range(10):
                sigma = SignDistribution.from_bitstring(d, random_bits(d, rng))
                _, gsigma = apply_symmetry(T, sigma, g)
                assert cT.classify(sigma) == cg.classify(gsigma)


def test_bowtie_even_oval_counts(rng):
    c = Classifier(builtin("bowtie8"))
    for _ in range(200):
        r = c.classify(random_bits(8, rng))
        assert r.oval_count % 2 == 0
        assert r.oval_count >= 4


def test_classify_convenience_validates():
    T = builtin("delaunay-2")
    assert classify(T, "000000").scheme == "<1>"


def test_degree_mismatch_rejected():
    c = Classifier(builtin("delaunay-2"))
    with pytest.raises(ParseError):
        c.classify("000")


def test_scratch_reuse_is_stable(rng):
    T = builtin("delaunay-6")
    c = Classifier(T)
    sigmas = [random_bits(6, rng) for _ in range(30)]
    first = [c.classify(s) for s in sigmas]
    second = [c.classify(s) for s in sigmas]
    assert first == second


def test_bowtie_transpose_invariance(rng):
    from tcurves.lattice import TRANSPOSE

    T = builtin("bowtie8")
    gT, _ = apply_symmetry(T, None, TRANSPOSE)
    cT, cg = Classifier(T), Classifier(gT)
    for _ in range(100):
        sigma = SignDistribution.from_bitstring(8, random_bits(8, rng))
        _, gsigma = apply_symmetry(T, sigma, TRANSPOSE)
        assert cT.classify(sigma) == cg.classify(gsigma)


def test_degree5_root_unique_over_thousand(rng):
    # root detection raises on any conflict; a clean run certifies uniqueness
    c = Classifier(builtin("delaunay-5"))
    for _ in range(1000):
        r = c.classify(random_bits(5, rng))
        assert r.scheme.count("J") == 1
