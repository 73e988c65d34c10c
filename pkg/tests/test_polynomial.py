from tcurves import (
    SignDistribution,
    builtin,
    delaunay_lifting,
    emit_polynomial,
    format_polynomial,
    lattice_points,
    num_points,
)


def zero_lifting(d):
    return {p: 0 for p in lattice_points(d)}


def test_degree1_all_plus():
    T = builtin("delaunay-1")
    terms = emit_polynomial(T, SignDistribution.from_bitstring(1, "000"), zero_lifting(1))
    assert format_polynomial(terms) == "x + y + z"
    assert all(s == 1 and t == 0 for s, t, *_ in terms)


def test_degree2_origin_negative():
    T = builtin("delaunay-2")
    terms = emit_polynomial(T, SignDistribution.from_bitstring(2, "100000"), zero_lifting(2))
    assert format_polynomial(terms) == "x^2 + x*y + x*z + y^2 + y*z - z^2"


def test_term_count_and_exponents():
    for d in (1, 2, 3, 5):
        T = builtin(f"delaunay-{d}")
        sigma = SignDistribution.from_bitstring(d, "0" * num_points(d))
        terms = emit_polynomial(T, sigma, delaunay_lifting(d))
        assert len(terms) == num_points(d)
        for sign, te, x, y, z in terms:
            assert x + y + z == d
            assert te == x * x + x * y + y * y
            assert sign == 1


def test_signs_follow_bits():
    T = builtin("delaunay-2")
    sigma = SignDistribution.from_bitstring(2, "010101")
    terms = emit_polynomial(T, sigma, zero_lifting(2))
    signs = [s for s, *_ in terms]
    assert signs == [1, -1, 1, -1, 1, -1]


def test_t_exponent_rendering():
    T = builtin("delaunay-1")
    lift = {(0, 0): 2, (0, 1): 1, (1, 0): 0}
    terms = emit_polynomial(T, SignDistribution.from_bitstring(1, "001"), lift)
    assert format_polynomial(terms) == "-x + t*y + t^2*z"
