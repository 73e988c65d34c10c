import re

from tcurves import RenderOptions, SignDistribution, builtin, render_svg, representative


def counts(svg):
    return (
        len(re.findall(r"<line ", svg)),
        len(re.findall(r"<circle ", svg)),
        len(re.findall(r"<path ", svg)),
    )


def test_degree1_diamond_view():
    svg = render_svg(builtin("delaunay-1"), SignDistribution.from_bitstring(1, "000"))
    lines, circles, paths = counts(svg)
    assert (lines, circles, paths) == (8, 5, 1)
    d = re.search(r'<path d="([^"]+)"', svg).group(1)
    assert d.count(" L ") + d.count(" Z") == 4


def test_bowtie_quadrant_view(rng):
    sigma = representative(8, 987654321)
    svg = render_svg(
        builtin("bowtie8"), sigma, RenderOptions(quadrant_only=True, show_curve=False)
    )
    lines, circles, paths = counts(svg)
    assert (lines, circles, paths) == (108, 45, 0)


def test_byte_determinism():
    sigma = representative(8, 424242)
    a = render_svg(builtin("bowtie8"), sigma)
    b = render_svg(builtin("bowtie8"), sigma)
    assert a == b


def test_sign_colors_toggle():
    T = builtin("delaunay-2")
    sigma = SignDistribution.from_bitstring(2, "010101")
    colored = render_svg(T, sigma)
    assert "#c83c28" in colored and "#1e50a0" in colored
    plain = render_svg(T, sigma, RenderOptions(show_signs=False))
    assert "#c83c28" not in plain and "#1e50a0" not in plain


def test_quadrant_curve_open_paths():
    # degree-2 all-plus: the conic oval crosses the axes; within the first
    # quadrant the curve appears as open midpoint chains
    T = builtin("delaunay-2")
    svg = render_svg(
        T, SignDistribution.from_bitstring(2, "100000"), RenderOptions(quadrant_only=True)
    )
    paths = re.findall(r'<path d="([^"]+)"', svg)
    assert paths
    assert all("Z" not in p for p in paths)


def test_svg_well_formed():
    import xml.etree.ElementTree as ET

    svg = render_svg(builtin("delaunay-3"), SignDistribution.from_bitstring(3, "0101010101"))
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
